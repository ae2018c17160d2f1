"""Regenerate the d'/d versus d/L family (n = 1e1..1e8) as CSV, JSON and SVG.

    python scripts/reproduce_fig2.py --outdir out/ [--profile paper] [--ppd 20]
"""

import argparse
from pathlib import Path

from casimir_sandbox.sweep import SweepSpec, figure2_sweep, render_svg, write_csv, write_json


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default="out")
    ap.add_argument("--profile", default="codata", choices=["codata", "paper"])
    ap.add_argument("--ppd", type=int, default=20, help="points per decade of d/L")
    ap.add_argument("--log-y", action="store_true")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    curves = figure2_sweep(SweepSpec(points_per_decade=args.ppd, profile=args.profile))
    stem = f"fig2_{args.profile}"
    for name, n in ((f"{stem}.csv", write_csv(curves, outdir / f"{stem}.csv")),
                    (f"{stem}.json", write_json(curves, outdir / f"{stem}.json")),
                    (f"{stem}.svg", render_svg(curves, outdir / f"{stem}.svg", log_y=args.log_y))):
        print(f"{outdir / name}: {n} bytes")


if __name__ == "__main__":
    main()
