"""Tabulate Delta_g(-1) and the 9-sphere type of branched covers z^p + f.

By default runs the three even-degree bases with their two-weight split and
every odd-degree row of Table 1, over odd p coprime to d.

Usage:
  python3 scripts/cover_spheres.py --p 3 5 7 9 11
"""

from __future__ import annotations

import argparse
import csv
from importlib import resources
from math import gcd

from linktop.covers import cover_record, even_degree_split
from linktop.weights import make_weight_system

EVEN_BASES = [(118, 118, 185, 135, 35), (64, 512, 475, 375, 175), (3532, 7064, 5355, 115, 1595)]


def table1_odd_degree():
    with resources.files("linktop").joinpath("data/table1.csv").open() as fh:
        for row in csv.DictReader(fh):
            ws = make_weight_system([int(x) for x in row["weights"].split()])
            if ws.degree % 2:
                yield ws


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--p", type=int, nargs="+", default=[3, 5, 7, 9, 11])
    ap.add_argument("--skip-odd", action="store_true", help="only the even-degree bases")
    args = ap.parse_args()

    bases = [make_weight_system(w) for w in EVEN_BASES]
    if not args.skip_odd:
        bases += list(table1_odd_degree())

    print(f"{'weights':<34} {'d':>6} {'split':>12} {'p':>3} {'Delta(-1)':>12}  type")
    for ws in bases:
        split = even_degree_split(ws)
        tag = f"{split.m2}x{split.m3}" if split else "-"
        for p in args.p:
            if gcd(p, ws.degree) != 1:
                continue
            rec = cover_record(ws, p)
            print(f"{str(ws.weights):<34} {ws.degree:>6} {tag:>12} {p:>3} {rec.delta_minus_one:>12}  {rec.sphere_type.value}")


if __name__ == "__main__":
    main()
