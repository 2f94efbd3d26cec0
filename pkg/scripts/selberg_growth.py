"""Selberg sums and Hypothesis-H partial sums along a cutoff grid.

Compares the Hasse-Weil coefficients of y^2 = x^3 - x against a seeded
Saito-Kurokawa stream and writes one CSV row per cutoff.

    python scripts/selberg_growth.py --limit 1000000 -o results/selberg_growth.csv
"""

import argparse
import csv
import math
import sys
from dataclasses import dataclass

import numpy as np

from lfunc.curves import HyperCurve, hasse_weil_table
from lfunc.diagnostics import hypothesis_h_partial, selberg_pairing
from lfunc.euler import global_from_satake
from lfunc.primes import sieve
from lfunc.siegel import random_unit, saito_kurokawa_local, spin_local


@dataclass
class Config:
    limit: int = 10**6
    sk_limit: int = 10**4
    weight: int = 10
    seed: int = 1


def grid_for(limit):
    out, X = [], 100
    while X <= limit:
        out.append(X)
        X *= 10
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=Config.limit)
    ap.add_argument("--sk-limit", type=int, default=Config.sk_limit)
    ap.add_argument("--weight", type=int, default=Config.weight)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("-o", "--output")
    args = ap.parse_args(argv)
    cfg = Config(args.limit, args.sk_limit, args.weight, args.seed)
    out_path = args.output

    curve = hasse_weil_table(HyperCurve((0, -1, 0, 1)), cfg.limit, extra_powers=2, method="auto")
    rng = np.random.default_rng(cfg.seed)
    sk_locals = {p: spin_local(saito_kurokawa_local(p, cfg.weight, random_unit(rng)))
                 for p in sieve(cfg.sk_limit).primes.tolist()}
    sk = global_from_satake(sk_locals, cfg.sk_limit, extra_powers=2)

    rows = []
    for X in grid_for(cfg.limit):
        ll = math.log(math.log(X))
        row = {"X": X, "curve_selberg_over_loglog": selberg_pairing(curve, curve, X)[1].real,
               "curve_H2": hypothesis_h_partial(curve, 2, X)}
        if X <= cfg.sk_limit:
            row["sk_selberg_over_loglog"] = selberg_pairing(sk, sk, X)[1].real
            row["sk_H2_over_loglog"] = hypothesis_h_partial(sk, 2, X) / ll
        rows.append(row)

    fields = ["X", "curve_selberg_over_loglog", "curve_H2", "sk_selberg_over_loglog", "sk_H2_over_loglog"]
    fh = open(out_path, "w", newline="") if out_path else sys.stdout
    w = csv.DictWriter(fh, fieldnames=fields, restval="", lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: (f"{v:.10g}" if isinstance(v, float) else v) for k, v in row.items()})
    if out_path:
        fh.close()


if __name__ == "__main__":
    main()
