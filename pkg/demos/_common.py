"""Shared plumbing for the demo scripts: one small cached dataset."""

from pathlib import Path

from duckmorph import data

DEMO_ROOT = Path(__file__).resolve().parent / "demo_data"


def demo_dataset(count: int = 10, seed: int = 11):
    """Build (or reuse) a small synthetic dataset next to the demos."""
    if (DEMO_ROOT / "manifest.json").exists():
        return data.build_manifest(DEMO_ROOT)
    print(f"building a {count}-duck demo dataset in {DEMO_ROOT} ...")
    return data.build_dataset(DEMO_ROOT, count=count, seed=seed)
