"""Generate a small synthetic flock and look at what a sample contains.

Every duck gets a latent body (sizes, masses, colors), each sample renders
that body in some pose: a raw point cloud with scanner-style outliers, top
and side photos, a 16-bit side depth map, silhouette masks, a 7-point
landmark annotation, and the 8 measurement labels.
"""

from _common import demo_dataset

from duckmorph.data import LABEL_UNITS
from duckmorph.synth import LABEL_NAMES


def main() -> None:
    manifest = demo_dataset()
    print(f"dataset root: {manifest.root}")
    print(f"{len(manifest.samples)} samples from "
          f"{len({r.duck_id for r in manifest.samples})} ducks\n")

    by_duck = {}
    for rec in manifest.samples:
        by_duck.setdefault(rec.duck_id, []).append(rec.sample_id)
    for duck, ids in sorted(by_duck.items()):
        print(f"  {duck}: {', '.join(sorted(ids))}")

    rec = manifest.samples[0]
    print(f"\nfiles of {rec.sample_id}:")
    for kind, rel in sorted(rec.paths.items()):
        print(f"  {kind:10s} {rel}")

    print(f"\nlabels of {rec.sample_id}:")
    for name in LABEL_NAMES:
        print(f"  {name:20s} {rec.labels[name]:9.2f} {LABEL_UNITS[name]}")

    # same duck, different pose: the size labels repeat, the diagonal moves
    twin = next(
        (r for r in manifest.samples
         if r.duck_id == rec.duck_id and r.sample_id != rec.sample_id),
        None,
    )
    if twin is not None:
        print(f"\n{twin.sample_id} is the same duck in another pose:")
        for name in LABEL_NAMES:
            tag = "same" if rec.labels[name] == twin.labels[name] else "differs"
            print(f"  {name:20s} {twin.labels[name]:9.2f} ({tag})")


if __name__ == "__main__":
    main()
