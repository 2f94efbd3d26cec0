"""Discrepancy sums for pairs of curves and a perturbed copy.

For each pair the script prints the S1/X, S2/X and Selberg columns on a
cutoff grid, followed by the advisory verdict.

    python scripts/multiplicity_one.py --limit 200000
"""

import argparse

import numpy as np

from lfunc.curves import HyperCurve, hasse_weil_table
from lfunc.diagnostics import VerdictConfig, ssmo_sums
from lfunc.euler import CoefficientTable

CURVES = {
    "x^3-x": (0, -1, 0, 1),
    "x^3+x+1": (1, 1, 0, 1),
}


def perturbed(table: CoefficientTable, scale: float, seed: int) -> CoefficientTable:
    """Copy of ``table`` with noise of size scale/p added at every prime p."""
    rng = np.random.default_rng(seed)
    dense = table.dense.copy()
    n = np.arange(len(dense))
    noise = rng.normal(size=len(dense)) * scale / np.maximum(n, 1)
    dense[2:] = dense[2:] + noise[2:]
    return CoefficientTable(table.limit, dense, table.degree_d, extra=dict(table.extra), multiplicative=False)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--limit", type=int, default=200_000)
    ap.add_argument("--tau", type=float, default=VerdictConfig.tau)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    tables = {name: hasse_weil_table(HyperCurve(c), args.limit, extra_powers=2) for name, c in CURVES.items()}
    tables["x^3-x (noisy)"] = perturbed(tables["x^3-x"], 1.0, args.seed)
    grid = [args.limit // 1000, args.limit // 100, args.limit // 10, args.limit]
    names = list(tables)
    for i, a in enumerate(names):
        for b in names[i:]:
            r = ssmo_sums(tables[a], tables[b], grid, VerdictConfig(tau=args.tau))
            print(f"== {a}  vs  {b}")
            print(f"{'X':>9} {'S1/X':>12} {'S2/X':>12} {'selberg':>10}")
            for X, s1, s2, sel in zip(r.X_grid, r.S1_over_X, r.S2_over_X, r.selberg):
                print(f"{X:>9} {s1:>12.5g} {s2:>12.5g} {sel:>10.4f}")
            print(f"verdict: {r.verdict}")
            for note in r.notes:
                print(f"note: {note}")


if __name__ == "__main__":
    main()
