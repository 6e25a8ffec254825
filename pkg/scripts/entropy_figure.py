#!/usr/bin/env python3
"""Reproduce the entropy-versus-parameter figure data as CSV files.

Writes four files into the output directory (default ./figure_data): the
full curve over (0.02, 0.98) and three zooms around the right endpoint of
the qumterval of 001, where the slope blows up.  Any plotting tool can
consume the CSVs (columns: alpha, word, m0, m1, A, h, err_bound); no
plotting dependency is used here.

Usage: python3 scripts/entropy_figure.py [outdir] [samples]
"""

import pathlib
import sys

from fareycf.cli import main as cli_main
from fareycf import bifurcation as bf


def run(outdir: pathlib.Path, samples: int) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    jobs = []
    jobs.append(("curve_full.csv", "1/50", "49/50", samples))
    target = bf.qumterval_of("001").alpha_plus  # approx 0.3660254
    for k, width in enumerate((1, 4, 16), start=1):
        lo = f"{36603 - 160 // width}/100000"
        hi = f"{36603 + 160 // width}/100000"
        jobs.append((f"zoom{k}.csv", lo, hi, max(60, samples // 4)))
    for name, lo, hi, n in jobs:
        out = outdir / name
        code = cli_main(
            ["entropy", "curve", "--from", lo, "--to", hi, "--samples", str(n), "--out", str(out)]
        )
        if code != 0:
            raise SystemExit(code)
        print(f"wrote {out} ({n} samples over [{lo}, {hi}]); endpoint {float(target):.7f}")


if __name__ == "__main__":
    outdir = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path("figure_data")
    samples = int(sys.argv[2]) if len(sys.argv) > 2 else 400
    run(outdir, samples)
