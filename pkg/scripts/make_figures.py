#!/usr/bin/env python3
"""Emit the quotient figures: torus and Klein-bottle cut loci with their
fundamental regions, plus the lens/projective slice schematics.

Usage: python scripts/make_figures.py [--out-dir figures] [--resolution 400]
"""

from __future__ import annotations

import argparse
from pathlib import Path

from harmonicspaces.cli import main as cli_main


def run(out_dir: Path, resolution: int) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    jobs = [
        (["quotient", "torus", "0,0"], "torus"),
        (["quotient", "klein", "0,0"], "klein_a0"),
        (["quotient", "klein", "0,0.25"], "klein_a025"),
        (["quotient", "klein", "0,1"], "klein_a1"),
        (["quotient", "lens"], "lens"),
        (["quotient", "cpq"], "cpq"),
    ]
    for argv, stem in jobs:
        csv_path = out_dir / f"{stem}.csv"
        svg_path = out_dir / f"{stem}.svg"
        full = argv + [
            "--resolution", str(resolution),
            "--out", str(csv_path),
            "--svg", str(svg_path),
        ]
        code = cli_main(full)
        if code != 0:
            raise SystemExit(f"figure job {argv} failed with exit code {code}")
        print(f"wrote {csv_path} and {svg_path}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", type=Path, default=Path("figures"))
    parser.add_argument("--resolution", type=int, default=400)
    args = parser.parse_args()
    run(args.out_dir, args.resolution)
