"""Train the multimodal regressor on the demo flock and print its scorecard.

Two photos, a depth map, and ten geometric features go in; eight body
measurements come out.  Demo scale (tiny images, few epochs, few ducks)
keeps it fast; the acceptance suite runs the honest 200-duck version.
"""

from _common import demo_dataset

from duckmorph.fusion import BackboneConfig
from duckmorph.metrics import metrics
from duckmorph.training import (
    load_fusion_inputs,
    predict_fusion,
    split_dataset,
    train_fusion,
)


def main() -> None:
    manifest = demo_dataset()
    train, val, test = split_dataset(manifest, seed=0)
    print(f"split {len(manifest.samples)} samples into "
          f"{len(train)}/{len(val)}/{len(test)} by duck")

    backbone = BackboneConfig(variant="small", input_size=32)
    result = train_fusion(manifest, train, val, backbone=backbone,
                          epochs=3, batch_size=4, seed=0)
    for row in result.curve:
        print(f"epoch {row['epoch']}: train {row['train_loss']:.4f} "
              f"val {row['val_loss']:.4f}")

    # pool val and test: two held-out samples alone have ~zero label
    # variance (poses of one duck), which makes R2 meaningless
    eval_recs = list(val) + list(test)
    inputs = load_fusion_inputs(manifest, eval_recs, backbone.input_size)
    pred = predict_fusion(result.model, result.feature_scaler,
                          result.label_scaler, inputs)
    print(f"\nscorecard on {len(eval_recs)} held-out samples:")
    print(metrics(pred, inputs.labels).as_text())
    print("(a few epochs on a few ducks; expect rough numbers here)")


if __name__ == "__main__":
    main()
