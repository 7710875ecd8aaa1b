"""Regenerate the benchmark figure data end to end.

Equivalent to `netdiffuse reproduce` with the vendored data and example
seeds; writes into results/ by default.

    python scripts/reproduce_figures.py [out_dir]
"""
from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from netdiffuse.harness import parse_seeds_file, reproduce_paper  # noqa: E402

ROOT = Path(__file__).resolve().parents[1]


def main() -> int:
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT / "results"
    seeds = parse_seeds_file(ROOT / "data" / "seeds_example.txt")
    written = reproduce_paper(ROOT / "data", out_dir, seeds)
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
