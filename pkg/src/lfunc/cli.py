"""Command-line entry point: ``lfunc <subcommand> ...``.

Exit codes: 0 success, 2 usage, 3 data error, 4 numeric/consistency error.
Tables go to stdout, diagnostics to stderr.  ``LFUNC_THREADS`` caps the
worker threads used for point counting.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from . import curves, diagnostics, fedata, io, power, primes, siegel
from .errors import ConsistencyError, DataError, DomainError, NumericError, PartialLError
from .euler import CoefficientTable, global_from_satake

DEFAULT_SEED = 1


def _complex_arg(text: str) -> complex:
    try:
        re_, im = text.split(",")
        return complex(float(re_), float(im))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected re,im, got {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _grid(text: str) -> list[int]:
    try:
        return [int(float(x)) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid {text!r}") from None


def _write_csv(rows: list[dict], out=None):
    out = out or sys.stdout
    if not rows:
        return
    w = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: io.fmt(v) if isinstance(v, float) else v for k, v in row.items()})


def cmd_primes(args):
    table = primes.sieve(args.limit)
    if args.theta is None and args.recip is None:
        if args.list:
            sys.stdout.write("\n".join(map(str, table.primes.tolist())) + "\n")
        else:
            print(len(table))
    if args.theta is not None:
        print(io.fmt(primes.chebyshev_theta(table, args.theta)))
    if args.recip is not None:
        print(io.fmt(primes.mertens_recip(table, args.recip)))


def cmd_expand(args):
    _, satake = io.read_satake(args.satake)
    table = global_from_satake(satake, args.limit, extra_powers=args.extra_powers)
    io.write_lcoef(table, args.output)


def cmd_power(args):
    degree, satake = io.read_satake(args.input)
    kind = power.PowerKind(args.kind, args.n)
    out = {}
    skipped = []
    for p, s in satake.items():
        try:
            out[p] = power.power_satake(s, kind)
        except PartialLError:
            skipped.append(p)
    if skipped:
        print(f"skipped bad primes (partial L-function): {skipped}", file=sys.stderr)
    io.write_satake(out, kind.degree(degree), args.output)


def cmd_fe_validate(args):
    fe = fedata.load_fe(args.file)
    tempered = fedata.validate_tempered(fe)
    selberg = fedata.validate_partial_selberg(fe)
    print(fedata.gamma_factor_doc(fe))
    print(f"tempered\t{str(tempered.ok).lower()}\t{'; '.join(tempered.violations)}")
    print(f"partial_selberg\t{str(selberg.ok).lower()}\t{'; '.join(selberg.violations)}")
    return 0 if tempered.ok and selberg.ok else 3


def cmd_fe_spin(args):
    print(json.dumps(fedata.spin_fe(args.weight).to_json()))


def cmd_fe_hasse_weil(args):
    print(json.dumps(fedata.hasse_weil_fe(args.genus, args.conductor, args.sign).to_json()))


def cmd_curve_count(args):
    curve = curves.HyperCurve(tuple(args.poly))
    if curve.genus_g > 2:
        raise DomainError("genus > 2 is not supported")
    rows = []
    for rec in curves.count_rows(curve, args.pmax, ext=args.ext):
        rows.append({
            "p": rec.p,
            "N1": rec.N1,
            "N2": "" if rec.N2 is None else rec.N2,
            "a_p": rec.a_p,
            "poly_coeffs": " ".join(map(str, rec.local_poly)) if rec.local_poly else "",
        })
    if not rows:
        sys.stdout.write("p,N1,N2,a_p,poly_coeffs\n")
    _write_csv(rows)


def cmd_curve_table(args):
    curve = curves.HyperCurve(tuple(args.poly))
    table = curves.hasse_weil_table(curve, args.limit, extra_powers=args.extra_powers,
                                    normalize=not args.raw, method=args.method)
    io.write_lcoef(table, args.output)


def cmd_siegel_eigen(args):
    sl = siegel.SiegelLocal(args.p, args.weight, args.alpha, args.beta)
    mu_p, mu_p2 = siegel.eigenvalues(sl)
    print(f"mu_p\t{io.fmt_complex(mu_p)}")
    print(f"mu_p2\t{io.fmt_complex(mu_p2)}")
    print(f"normalized_trace\t{io.fmt_complex(siegel.normalized_trace(sl))}")


def cmd_siegel_sk(args):
    ps = primes.sieve(max(args.pmax, 2)).upto(args.pmax).tolist()
    if args.beta_file:
        _, sat = io.read_satake(args.beta_file)
        betas = {}
        for p in ps:
            if p not in sat or not sat[p].alphas:
                raise DataError(f"beta file has no parameter for p={p}")
            betas[p] = sat[p].alphas[0]
    else:
        rng = np.random.default_rng(args.seed)
        betas = {p: siegel.random_unit(rng) for p in ps}
    values = {p: siegel.saito_kurokawa_ap(p, betas[p]) for p in ps}
    io.write_lcoef(CoefficientTable.from_mapping(values, 4, multiplicative=False), args.output)


def cmd_compare(args):
    a = io.read_lcoef(args.a)
    b = io.read_lcoef(args.b)
    config = diagnostics.VerdictConfig(tau=args.tau)
    if args.mode == "selberg":
        rows = []
        for X in sorted(args.grid):
            value, ratio = diagnostics.selberg_sum(a, b, X)
            rows.append({"X": X, "selberg": value, "selberg_over_loglog": ratio})
        _write_csv(rows)
        last = rows[-1]["selberg_over_loglog"]
        side = "below" if last < diagnostics.SELBERG_THRESHOLD else "not below"
        print(f"verdict: selberg ratio {last:.6g} at X={rows[-1]['X']} is {side} 2", file=sys.stderr)
        return 0
    if args.mode == "siegel":
        if args.k1 is None or args.k2 is None:
            raise DomainError("--mode siegel needs --k1 and --k2")
        report = diagnostics.siegel_compare(dict(a.items()), args.k1, dict(b.items()), args.k2,
                                            args.grid, config)
    else:
        report = diagnostics.ssmo_sums(a, b, args.grid, config)
    _write_csv(report.rows())
    for note in report.notes:
        print(f"note: {note}", file=sys.stderr)
    print(f"verdict: {report.verdict}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lfunc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("primes", help="sieve and weighted prime sums")
    p.add_argument("--limit", type=int, required=True, help="sieve bound N (2..1e8)")
    p.add_argument("--theta", type=int, help="print sum of log p for p <= X")
    p.add_argument("--recip", type=int, help="print sum of 1/p for p <= X")
    p.add_argument("--list", action="store_true", help="list the primes instead of their count")
    p.set_defaults(func=cmd_primes)

    p = sub.add_parser("expand", help="satake TSV -> coefficient TSV")
    p.add_argument("--satake", required=True, help="input satake TSV")
    p.add_argument("--limit", type=int, required=True, help="largest n to emit")
    p.add_argument("--extra-powers", type=int, default=0, help="also emit a(p^j), j <= K, beyond limit")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("power", help="satake TSV -> satake TSV of sym^n or ext^n")
    p.add_argument("--kind", choices=["sym", "ext"], required=True)
    p.add_argument("--n", type=int, required=True, help="power n >= 1")
    p.add_argument("-i", "--input", default=sys.stdin, help="input satake TSV (default stdin)")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(func=cmd_power)

    fe = sub.add_parser("fe", help="functional-equation data").add_subparsers(dest="fe_cmd", required=True)
    p = fe.add_parser("validate", help="temperedness and partial Selberg checks; exit 3 on violation")
    p.add_argument("--file", required=True, help="JSON document")
    p.set_defaults(func=cmd_fe_validate)
    p = fe.add_parser("spin", help="emit the spin FE data for weight k")
    p.add_argument("--weight", type=int, required=True)
    p.set_defaults(func=cmd_fe_spin)
    p = fe.add_parser("hasse-weil", help="emit Hasse-Weil FE data")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--conductor", type=int, required=True)
    p.add_argument("--sign", type=int, choices=[1, -1], default=1)
    p.set_defaults(func=cmd_fe_hasse_weil)

    cv = sub.add_parser("curve", help="hyperelliptic curves y^2 = f(x)").add_subparsers(dest="curve_cmd", required=True)
    p = cv.add_parser("count", help="CSV p,N1,N2,a_p,poly_coeffs for good p <= pmax")
    p.add_argument("--poly", type=_int_list, required=True, help='"c0,c1,...,cdeg" ascending')
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--ext", action="store_true", help="also count over F_{p^2}")
    p.set_defaults(func=cmd_curve_count)
    p = cv.add_parser("table", help="Hasse-Weil coefficient TSV (normalised unless --raw)")
    p.add_argument("--poly", type=_int_list, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--extra-powers", type=int, default=0)
    p.add_argument("--method", choices=["count", "auto"], default="count")
    p.add_argument("--raw", action="store_true", help="skip the a(n)/sqrt(n) normalisation")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_curve_table)

    sg = sub.add_parser("siegel", help="genus-2 Siegel eigenforms").add_subparsers(dest="siegel_cmd", required=True)
    p = sg.add_parser("eigen", help="mu(p), mu(p^2) and the normalised trace")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--alpha", type=_complex_arg, required=True, help="re,im")
    p.add_argument("--beta", type=_complex_arg, required=True, help="re,im")
    p.set_defaults(func=cmd_siegel_eigen)
    p = sg.add_parser("sk", help="Saito-Kurokawa a(p) coefficient TSV")
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--beta-file", help="satake TSV; first parameter per prime is beta")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="RNG seed when no beta file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_siegel_sk)

    p = sub.add_parser("compare", help="closeness diagnostics between two coefficient TSVs")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--grid", type=_grid, default=[10**3, 10**4, 10**5, 10**6])
    p.add_argument("--mode", choices=["ssmo", "selberg", "siegel"], default="ssmo")
    p.add_argument("--k1", type=int, help="weight of form a (siegel mode; files hold mu(p))")
    p.add_argument("--k2", type=int, help="weight of form b")
    p.add_argument("--tau", type=float, default=diagnostics.VerdictConfig.tau)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rc = args.func(args)
    except (DataError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NumericError, ConsistencyError, FloatingPointError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 4
    return rc or 0


def run(argv) -> int:
    """Like :func:`main` but returns the usage exit code instead of raising."""
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
