#!/usr/bin/env python3
"""Sweep the two-dimensional constructions over the deformation parameter.

Writes one CSV per family showing how the branch point and matrix
entries move with hbar (Type I) or with the branch point itself
(Type II, where hbar is derived). Example:

    python scripts/existence_sweep.py --g 3 --alpha 0.005 --c 1 --out-dir out/
"""

import argparse
import csv
import math
from pathlib import Path

from genusrep.errors import GenusRepError
from genusrep.reps import construct_type_I, construct_type_II
from genusrep.surface import SurfaceParams, alpha_upper_bound


def sweep_type_I(g, alpha, c, hbars):
    for hbar in hbars:
        row = {"hbar": hbar}
        try:
            rep = construct_type_I(SurfaceParams(g=g, alpha=alpha, c=c, hbar=hbar))
            row.update(x_hat=rep.meta.x_hat, abs_z=abs(rep.Y[0, 1]),
                       residual=rep.residuals().max_relative, ok=True)
        except GenusRepError as exc:
            row.update(ok=False, reason=str(exc))
        yield row


def sweep_type_II(g, alpha, c, x_hats):
    for x_hat in x_hats:
        row = {"x_hat": x_hat}
        try:
            hbar, rep = construct_type_II(g, alpha, c, x_hat)
            row.update(hbar=hbar, y=float(rep.Y[0, 0].real), abs_z=abs(rep.Y[0, 1]),
                       residual=rep.residuals().max_relative, ok=True)
        except GenusRepError as exc:
            row.update(ok=False, reason=str(exc))
        yield row


def write_csv(path, rows):
    rows = list(rows)
    fields = sorted({k for r in rows for k in r})
    with open(path, "w", newline="") as fp:
        writer = csv.DictWriter(fp, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {path} ({len(rows)} rows)")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--g", type=int, default=2)
    parser.add_argument("--alpha", type=float, default=None,
                        help="default: half the admissible upper bound")
    parser.add_argument("--c", type=float, default=1.0)
    parser.add_argument("--points", type=int, default=25)
    parser.add_argument("--out-dir", type=Path, default=Path("."))
    args = parser.parse_args()

    alpha = args.alpha
    if alpha is None:
        alpha = 0.5 * alpha_upper_bound(args.g, args.c)
        print(f"alpha not given; using {alpha!r}")

    hbars = [10.0 ** (-1.0 + 2.0 * i / (args.points - 1)) for i in range(args.points)]
    write_csv(args.out_dir / f"type_I_g{args.g}.csv",
              sweep_type_I(args.g, alpha, args.c, hbars))

    x_max = args.g - 0.05
    x_hats = [0.05 + (x_max - 0.05) * i / (args.points - 1) for i in range(args.points)]
    write_csv(args.out_dir / f"type_II_g{args.g}.csv",
              sweep_type_II(args.g, alpha, args.c, x_hats))

    ratio = alpha / math.sqrt(args.c)
    gate = 2.0 / math.factorial(2 * args.g - 1)
    print(f"alpha/sqrt(c) = {ratio:.6g}; Type II branch at g-1 needs < {gate:.6g}")


if __name__ == "__main__":
    main()
