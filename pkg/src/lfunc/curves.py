"""Point counts on y^2 = f(x) and the Hasse-Weil coefficients built from them.

Counts are on the smooth projective model: affine solutions plus one point
at infinity for odd deg f, and for even deg f two points when the leading
coefficient is a nonzero square in the field (none otherwise).

``a(p^n) = p^n + 1 - N(p^n)``.  Genus 1 needs only N(p); genus 2 needs N(p)
and N(p^2) to pin down the quartic local factor.  p = 2 is always bad.
"""

from __future__ import annotations

import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
import sympy

from .errors import ArityError, BadReductionError, ConsistencyError, DomainError, WorkBoundError
from .euler import (
    CoefficientTable,
    LocalSeries,
    SatakeLocal,
    assemble_global,
    default_truncation,
    series_inverse,
)
from .fedata import analytic_normalize
from .primes import primes_upto

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CountConfig:
    max_p: int = 10**6       # F_p counts
    max_p_ext: int = 3163    # F_{p^2} counts; p^4 stays well inside int64


DEFAULT_CONFIG = CountConfig()


@dataclass(frozen=True)
class HyperCurve:
    """y^2 = f(x) with integer ``f_coeffs`` in ascending degree order."""

    f_coeffs: tuple[int, ...]
    disc_primes: frozenset[int] = field(default=frozenset(), compare=False)

    def __post_init__(self):
        c = [int(x) for x in self.f_coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "f_coeffs", tuple(c))
        if not 3 <= self.degree <= 6:
            raise DomainError(f"deg f must be in 3..6, got {self.degree}")
        x = sympy.Symbol("x")
        disc = int(sympy.discriminant(sum(ci * x**i for i, ci in enumerate(c)), x))
        if disc == 0:
            raise DomainError(f"f = {self.poly_str()} has a repeated root")
        bad = {2} | set(sympy.primefactors(disc)) | set(sympy.primefactors(c[-1]))
        object.__setattr__(self, "disc_primes", frozenset(int(q) for q in bad | set(self.disc_primes)))

    @property
    def degree(self) -> int:
        return len(self.f_coeffs) - 1

    @property
    def genus_g(self) -> int:
        return (self.degree - 1) // 2

    @property
    def leading(self) -> int:
        return self.f_coeffs[-1]

    def is_good(self, p: int) -> bool:
        return p not in self.disc_primes

    def poly_str(self) -> str:
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.f_coeffs) if c]
        return " + ".join(reversed(terms)) or "0"


@dataclass(frozen=True)
class CountRecord:
    p: int
    N1: int
    N2: int | None = None
    genus_g: int = 1
    local_poly: tuple[int, ...] | None = None

    def __post_init__(self):
        bound = 2 * self.genus_g * math.sqrt(self.p)
        if abs(self.a_p) > bound + 1e-9:
            raise ConsistencyError(
                f"p={self.p}: |a_p|={abs(self.a_p)} exceeds Hasse-Weil bound {bound:.3f}"
            )
        if self.N2 is not None and self.N2 < 0:
            raise ConsistencyError(f"p={self.p}: negative F_p^2 count {self.N2}")

    @property
    def a_p(self) -> int:
        return self.p + 1 - self.N1


def _check_good(curve: HyperCurve, p: int):
    if not curve.is_good(p):
        raise BadReductionError(f"p={p} is a bad prime for y^2 = {curve.poly_str()}")


def qr_table(p: int) -> np.ndarray:
    """Quadratic character mod p as an int8 lookup: 0, +1 or -1."""
    chi = np.full(p, -1, dtype=np.int8)
    chi[(np.arange(1, p, dtype=np.int64) ** 2) % p] = 1
    chi[0] = 0
    return chi


def nonresidue(p: int) -> int:
    r = 2
    while pow(r, (p - 1) // 2, p) != p - 1:
        r += 1
    return r


def _infinity_points(curve: HyperCurve, p: int, lc_is_square: bool) -> int:
    if curve.degree % 2:
        return 1
    return 2 if lc_is_square else 0


def count_points(curve: HyperCurve, p: int, config: CountConfig = DEFAULT_CONFIG) -> int:
    """Projective point count over F_p, O(p) via a quadratic-character table."""
    _check_good(curve, p)
    if p > config.max_p:
        raise WorkBoundError(f"p={p} exceeds F_p work bound {config.max_p}")
    chi = qr_table(p)
    xs = np.arange(p, dtype=np.int64)
    fx = np.zeros(p, dtype=np.int64)
    for c in reversed(curve.f_coeffs):
        fx = (fx * xs + c) % p
    affine = p + int(chi[fx].sum(dtype=np.int64))
    return affine + _infinity_points(curve, p, chi[curve.leading % p] == 1)


def count_points_ext(curve: HyperCurve, p: int, config: CountConfig = DEFAULT_CONFIG) -> int:
    """Projective point count over F_{p^2} = F_p[t]/(t^2 - r).

    A nonzero z is a square in F_{p^2} iff its norm a^2 - r b^2 is a square
    in F_p, so the F_p character table does all the work.
    """
    _check_good(curve, p)
    if p > config.max_p_ext:
        raise WorkBoundError(f"p={p} exceeds F_p^2 work bound {config.max_p_ext}")
    chi = qr_table(p)
    r = nonresidue(p)
    x0 = np.repeat(np.arange(p, dtype=np.int64), p)
    x1 = np.tile(np.arange(p, dtype=np.int64), p)
    u0 = np.zeros(p * p, dtype=np.int64)
    u1 = np.zeros(p * p, dtype=np.int64)
    for c in reversed(curve.f_coeffs):
        u0, u1 = (u0 * x0 + r * ((u1 * x1) % p) + c) % p, (u0 * x1 + u1 * x0) % p
    norm = (u0 * u0 - r * ((u1 * u1) % p)) % p
    affine = p * p + int(chi[norm].sum(dtype=np.int64))
    # every element of F_p is a square in F_{p^2}
    return affine + _infinity_points(curve, p, curve.leading % p != 0)


def naive_count(curve: HyperCurve, p: int) -> int:
    """Double loop over (x, y) in F_p^2; the oracle for :func:`count_points`."""
    affine = sum(
        1
        for x in range(p)
        for y in range(p)
        if (y * y - sum(c * pow(x, i, p) for i, c in enumerate(curve.f_coeffs))) % p == 0
    )
    lc = curve.leading % p
    lc_square = any((y * y - lc) % p == 0 for y in range(1, p))
    return affine + _infinity_points(curve, p, lc_square)


def naive_count_ext(curve: HyperCurve, p: int) -> int:
    """Enumerate F_{p^2} with explicit multiplication; oracle for the norm trick."""
    r = nonresidue(p)

    def mul(u, v):
        return ((u[0] * v[0] + r * u[1] * v[1]) % p, (u[0] * v[1] + u[1] * v[0]) % p)

    elems = [(a, b) for a in range(p) for b in range(p)]
    square_count: dict[tuple[int, int], int] = {}
    for y in elems:
        s = mul(y, y)
        square_count[s] = square_count.get(s, 0) + 1
    affine = 0
    for x in elems:
        acc = (0, 0)
        for c in reversed(curve.f_coeffs):
            acc = mul(acc, x)
            acc = ((acc[0] + c) % p, acc[1])
        affine += square_count.get(acc, 0)
    lc = (curve.leading % p, 0)
    return affine + _infinity_points(curve, p, lc != (0, 0) and lc in square_count)


def count_record(curve: HyperCurve, p: int, ext: bool | None = None,
                 config: CountConfig = DEFAULT_CONFIG) -> CountRecord:
    """N1 (and N2 when ``ext``, default: genus 2) plus the local polynomial."""
    if ext is None:
        ext = curve.genus_g >= 2
    N1 = count_points(curve, p, config)
    N2 = count_points_ext(curve, p, config) if ext else None
    rec = CountRecord(p, N1, N2, curve.genus_g)
    if curve.genus_g == 1 or N2 is not None:
        rec = CountRecord(p, N1, N2, curve.genus_g, local_factor_from_counts(curve, rec))
    return rec


def local_factor_from_counts(curve: HyperCurve, rec: CountRecord) -> tuple[int, ...]:
    """Integer coefficients of P_p(T) = prod (1 - alpha_i T), ascending.

    The roots are recovered and checked to satisfy |alpha| = sqrt(p).
    """
    p, g = rec.p, curve.genus_g
    s1 = p + 1 - rec.N1
    if g == 1:
        poly = (1, -s1, p)
    elif g == 2:
        if rec.N2 is None:
            raise ArityError(f"p={p}: genus 2 needs the F_p^2 count")
        s2 = p * p + 1 - rec.N2
        twice_e2 = s1 * s1 - s2
        if twice_e2 % 2:
            raise ConsistencyError(f"p={p}: (s1^2 - s2)/2 = {twice_e2}/2 is not an integer")
        e2 = twice_e2 // 2
        poly = (1, -s1, e2, -p * s1, p * p)
    else:
        raise DomainError(f"genus {g} is not supported (needs counts over F_p^3)")
    frobenius_roots(poly, p)
    return poly


def frobenius_roots(poly: tuple[int, ...], p: int, rtol: float = 1e-6) -> list[complex]:
    """Inverse roots alpha of P_p(T), paired as (alpha, p/alpha).

    Writing P = prod (1 - x_i T + p T^2), the real traces x_i are roots of a
    quadratic (genus 2) or read off directly (genus 1); each alpha then has
    |alpha|^2 = p by construction, which avoids the precision loss of a
    general root finder at repeated roots.
    """
    g = (len(poly) - 1) // 2
    if g == 1:
        traces = [-poly[1]]
    elif g == 2:
        e1, e2 = -poly[1], poly[2]
        disc = e1 * e1 - 4 * (e2 - 2 * p)
        if disc < 0:
            raise ConsistencyError(f"p={p}: real Weil polynomial has complex roots")
        sq = math.sqrt(disc)
        traces = [(e1 + sq) / 2, (e1 - sq) / 2]
    else:
        raise DomainError(f"unsupported local polynomial degree {len(poly) - 1}")
    roots = []
    for x in traces:
        if x * x > 4 * p * (1 + 1e-12):
            raise ConsistencyError(f"p={p}: trace {x} violates the Weil bound 2*sqrt(p)")
        im = math.sqrt(max(4 * p - x * x, 0.0))
        roots += [complex(x / 2, im / 2), complex(x / 2, -im / 2)]
    sp = math.sqrt(p)
    for a in roots:
        if abs(abs(a) - sp) > rtol * sp:
            raise ConsistencyError(f"p={p}: root {a} has modulus {abs(a)}, expected {sp}")
    return roots


def normalized_satake(curve: HyperCurve, p: int, rec: CountRecord | None = None) -> SatakeLocal:
    """Unit-modulus Satake parameters alpha/sqrt(p) at a good prime."""
    if rec is None:
        rec = count_record(curve, p, ext=curve.genus_g >= 2)
    poly = rec.local_poly or local_factor_from_counts(curve, rec)
    sp = math.sqrt(p)
    return SatakeLocal.good(p, [a / sp for a in frobenius_roots(poly, p)])


def two_squares(p: int) -> tuple[int, int]:
    """(a, b) with a^2 + b^2 = p, a odd and b even, for primes p = 1 mod 4 (Cornacchia)."""
    if p % 4 != 1:
        raise DomainError(f"{p} is not 1 mod 4")
    x = pow(nonresidue(p), (p - 1) // 4, p)
    a, b = p, x
    bound = math.isqrt(p)
    while b > bound:
        a, b = b, a % b
    c = math.isqrt(p - b * b)
    u, v = (b, c) if b % 2 else (c, b)
    return u, v


def trace_x3_minus_x(p: int) -> int:
    """a_p of y^2 = x^3 - x by its CM by Z[i]; agrees with point counts."""
    if p == 2:
        raise BadReductionError("p=2 is bad for y^2 = x^3 - x")
    if p % 4 == 3:
        return 0
    a, b = two_squares(p)
    return 2 * a if (a + b) % 4 == 1 else -2 * a


X3_MINUS_X = (0, -1, 0, 1)


def _trace_shortcut(curve: HyperCurve):
    if curve.f_coeffs == X3_MINUS_X:
        return trace_x3_minus_x
    return None


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("LFUNC_THREADS", "1")))
    except ValueError:
        return 1


def hasse_weil_local(curve: HyperCurve, p: int, J: int, *, method: str = "count",
                     config: CountConfig = DEFAULT_CONFIG) -> LocalSeries:
    """Unnormalised local series [1, a(p), ..., a(p^J)]; trivial at bad primes."""
    if not curve.is_good(p):
        return LocalSeries(p, np.eye(1, J + 1, dtype=np.complex128)[0])
    g = curve.genus_g
    shortcut = _trace_shortcut(curve) if method == "auto" else None
    if shortcut is not None:
        poly = (1, -shortcut(p), p)
    elif g == 2 and J < 2:
        # only a(p) = s1 is needed; skip the O(p^2) extension count
        N1 = count_points(curve, p, config)
        CountRecord(p, N1, None, g)  # Hasse-Weil bound check
        return LocalSeries(p, [1.0, p + 1 - N1][: J + 1])
    else:
        rec = count_record(curve, p, ext=g >= 2, config=config)
        poly = rec.local_poly
    return LocalSeries(p, series_inverse(poly, J))


def hasse_weil_table(curve: HyperCurve, limit: int, *, extra_powers: int = 0,
                     normalize: bool = True, method: str = "count",
                     config: CountConfig = DEFAULT_CONFIG) -> CoefficientTable:
    """Dirichlet coefficients of the partial Hasse-Weil L-function up to ``limit``.

    Bad primes get the factor 1.  With ``normalize`` the result is
    b(n) = a(n)/sqrt(n).  ``method="auto"`` uses a closed-form trace where
    one is known (currently y^2 = x^3 - x), else counts points.
    """
    if method not in ("count", "auto"):
        raise DomainError(f"unknown method {method!r}")
    primes = primes_upto(max(limit, 2)).upto(limit).tolist()

    def one(p):
        return p, hasse_weil_local(curve, p, max(default_truncation(p, limit), extra_powers),
                                   method=method, config=config)

    if _threads() > 1 and len(primes) > 64:
        with ThreadPoolExecutor(_threads()) as pool:
            locals_ = dict(pool.map(one, primes))
    else:
        locals_ = dict(map(one, primes))
    table = assemble_global(locals_, limit, degree_d=2 * curve.genus_g, theta_claim=0.5,
                            extra_powers=extra_powers)
    return analytic_normalize(table, 0.5) if normalize else table


def count_rows(curve: HyperCurve, pmax: int, ext: bool = False,
               config: CountConfig = DEFAULT_CONFIG) -> list[CountRecord]:
    """Count records for every good prime p <= pmax, ascending."""
    primes = [p for p in primes_upto(max(pmax, 2)).upto(pmax).tolist() if curve.is_good(p)]
    return [count_record(curve, p, ext=ext, config=config) for p in primes]


def hasse_bound_ok(curve: HyperCurve, rec: CountRecord) -> bool:
    return abs(rec.a_p) <= 2 * curve.genus_g * math.sqrt(rec.p) + 1e-9

