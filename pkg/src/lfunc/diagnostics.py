"""Finite-X closeness sums between two coefficient streams.

Everything here is a partial sum over primes p <= X.  The statements these
sums come from are asymptotic (``<< X``, ``~ loglog X``), so the verdict is
advisory only; see :func:`verdict`.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Literal, NamedTuple

import numpy as np

from .errors import DomainError, IncompleteInputError
from .euler import CoefficientTable
from .primes import primes_upto

Verdict = Literal["consistent-with-equal", "inconsistent", "indeterminate"]

MIN_LOGLOG_X = 16
SELBERG_THRESHOLD = 2.0


@dataclass(frozen=True)
class VerdictConfig:
    tau: float = 0.05
    blowup: float = 10.0  # "inconsistent" needs the last ratio above blowup * tau


@dataclass
class DiscrepancyReport:
    X_grid: list[int]
    S1: list[float]
    S2: list[float] | None
    S1_over_X: list[float]
    S2_over_X: list[float] | None
    selberg: list[float]
    selberg_over_loglog: list[float]
    verdict: Verdict
    verdict_grid: list[int] = field(default_factory=list)
    verdict_ratios: list[float] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def condition1_tested(self) -> bool:
        return self.S2 is not None

    def rows(self) -> list[dict]:
        out = []
        for i, X in enumerate(self.X_grid):
            out.append({
                "X": X,
                "S1": self.S1[i],
                "S1_over_X": self.S1_over_X[i],
                "S2": self.S2[i] if self.S2 is not None else float("nan"),
                "S2_over_X": self.S2_over_X[i] if self.S2_over_X is not None else float("nan"),
                "selberg": self.selberg[i],
                "selberg_over_loglog": self.selberg_over_loglog[i],
            })
        return out


class MBoundEstimate(NamedTuple):
    M1_sq: float
    M2_sq: float
    zero_pole_bound: float


class SelbergResult(NamedTuple):
    value: float
    ratio: float


def _values_at(table: CoefficientTable, ns: np.ndarray, what: str) -> np.ndarray:
    vals = table.lookup(ns)
    missing = np.isnan(vals.real)
    if missing.any():
        n = int(ns[np.argmax(missing)])
        raise IncompleteInputError(f"{what}: coefficient a({n}) missing")
    return vals


def _has_all(table: CoefficientTable, ns: np.ndarray) -> bool:
    return not np.isnan(table.lookup(ns).real).any()


def _prefix_sums(primes: np.ndarray, terms: np.ndarray, grid: Sequence[int]) -> list[float]:
    cut = np.searchsorted(primes, np.asarray(grid), side="right")
    return [math.fsum(terms[:c]) for c in cut]


def loglog(X: float) -> float:
    if X < MIN_LOGLOG_X:
        raise DomainError(f"loglog ratios need X >= {MIN_LOGLOG_X}, got {X}")
    return math.log(math.log(X))


def verdict(ratios: Sequence[float], config: VerdictConfig = VerdictConfig()) -> Verdict:
    """Advisory verdict from S1(X)/X on a doubling grid.

    consistent-with-equal  all ratios < tau
    inconsistent           ratios nondecreasing and the last > blowup * tau
    indeterminate          otherwise
    """
    r = list(ratios)
    if not r:
        return "indeterminate"
    if all(x < config.tau for x in r):
        return "consistent-with-equal"
    if all(x <= y for x, y in zip(r, r[1:])) and r[-1] > config.blowup * config.tau:
        return "inconsistent"
    return "indeterminate"


def doubling_grid(X_max: int, steps: int = 4) -> list[int]:
    base = X_max // 2 ** (steps - 1)
    return [base * 2**i for i in range(steps)] if base >= 2 else []


def ssmo_sums(a: CoefficientTable, b: CoefficientTable, grid: Sequence[int],
              config: VerdictConfig = VerdictConfig()) -> DiscrepancyReport:
    """S1 = sum p log p |a(p)-b(p)|^2, S2 = sum log p |a(p^2)-b(p^2)|^2, and the
    reciprocal sum sum |a(p)-b(p)|^2/p, each over p <= X for X in ``grid``."""
    grid = sorted(int(X) for X in grid)
    if not grid or grid[0] < 2:
        raise DomainError("grid must be nonempty with every X >= 2")
    X_max = grid[-1]
    vgrid = doubling_grid(X_max)
    primes = primes_upto(X_max).upto(X_max)
    pf = primes.astype(np.float64)
    logp = np.log(pf)
    d1 = np.abs(_values_at(a, primes, "table a") - _values_at(b, primes, "table b")) ** 2

    t1 = pf * logp * d1
    S1 = _prefix_sums(primes, t1, grid)
    recip = d1 / pf
    selberg = _prefix_sums(primes, recip, grid)

    notes = []
    sq = primes * primes
    if _has_all(a, sq) and _has_all(b, sq):
        d2 = np.abs(a.lookup(sq) - b.lookup(sq)) ** 2
        S2 = _prefix_sums(primes, d2 * logp, grid)
        S2_over = [s / X for s, X in zip(S2, grid)]
    else:
        S2 = S2_over = None
        notes.append("a(p^2) not available for every p <= X: condition 1 untested")

    vratios = [s / X for s, X in zip(_prefix_sums(primes, t1, vgrid), vgrid)]
    return DiscrepancyReport(
        X_grid=grid,
        S1=S1,
        S2=S2,
        S1_over_X=[s / X for s, X in zip(S1, grid)],
        S2_over_X=S2_over,
        selberg=selberg,
        selberg_over_loglog=[s / loglog(X) if X >= MIN_LOGLOG_X else float("nan")
                             for s, X in zip(selberg, grid)],
        verdict=verdict(vratios, config),
        verdict_grid=vgrid,
        verdict_ratios=vratios,
        notes=notes,
    )


def selberg_sum(a: CoefficientTable, b: CoefficientTable, X: int) -> SelbergResult:
    """sum_{p<=X} |a(p)-b(p)|^2 / p and its ratio to loglog X.

    For distinct primitive L-functions the ratio tends to 2; callers compare
    it against (2 - eps).
    """
    ll = loglog(X)
    primes = primes_upto(X).upto(X)
    d1 = np.abs(_values_at(a, primes, "table a") - _values_at(b, primes, "table b")) ** 2
    value = math.fsum(d1 / primes.astype(np.float64))
    return SelbergResult(value, value / ll)


def selberg_pairing(a: CoefficientTable, b: CoefficientTable, X: int) -> tuple[complex, complex]:
    """sum_{p<=X} a(p) conj(b(p)) / p and its ratio to loglog X.

    The ratio tends to 1 for a primitive L-function paired with itself and
    to 0 for distinct ones, up to an O(1/loglog X) offset.
    """
    ll = loglog(X)
    primes = primes_upto(X).upto(X)
    terms = _values_at(a, primes, "table a") * np.conj(_values_at(b, primes, "table b")) / primes
    value = complex(math.fsum(terms.real), math.fsum(terms.imag))
    return value, value / ll


def m_bounds(a: CoefficientTable, X: int) -> MBoundEstimate:
    primes = primes_upto(X).upto(X)
    pf = primes.astype(np.float64)
    logp = np.log(pf)
    m1 = math.fsum(np.abs(_values_at(a, primes, "a(p)")) ** 2 * logp) / X
    m2 = math.fsum(np.abs(_values_at(a, primes * primes, "a(p^2)")) ** 2 * logp / pf**2) / X
    return MBoundEstimate(m1, m2, (math.sqrt(m1) + 2 * math.sqrt(m2)) ** 2)


def hypothesis_h_terms(a: CoefficientTable, k: int, X: int, *, strict: bool = True
                       ) -> tuple[np.ndarray, np.ndarray]:
    """Primes and summands |a(p^k)|^2 log^2 p / p^k for p <= X.

    With ``strict=False`` primes whose p^k is absent are dropped instead of
    raising, which truncates the sum.
    """
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    primes = primes_upto(max(X, 2)).upto(X)
    pk = primes.astype(object) ** k  # p^k can pass 2^63
    vals = np.array([a.extra.get(int(q), np.nan) if q > a.limit else a.dense[int(q)] for q in pk],
                    dtype=np.complex128)
    missing = np.isnan(vals.real)
    if missing.any():
        if strict:
            raise IncompleteInputError(f"a({primes[np.argmax(missing)]}^{k}) missing")
        primes, vals = primes[~missing], vals[~missing]
    pf = primes.astype(np.float64)
    return primes, np.abs(vals) ** 2 * np.log(pf) ** 2 / pf**k


def hypothesis_h_partial(a: CoefficientTable, k: int, X: int, *, strict: bool = True) -> float:
    return math.fsum(hypothesis_h_terms(a, k, X, strict=strict)[1])


def _stream(mu) -> dict[int, complex]:
    items = mu.items() if isinstance(mu, Mapping) else mu
    return {int(p): complex(v) for p, v in items}


def siegel_compare(mu1: Mapping[int, complex] | Iterable[tuple[int, complex]], k1: int,
                   mu2: Mapping[int, complex] | Iterable[tuple[int, complex]], k2: int,
                   grid: Sequence[int], config: VerdictConfig = VerdictConfig()) -> DiscrepancyReport:
    """Compare two Hecke-eigenvalue streams via p^(3/2-k) mu(p)."""
    tables = []
    for mu, k in ((mu1, k1), (mu2, k2)):
        norm = {p: v * p ** (1.5 - k) for p, v in _stream(mu).items()}
        tables.append(CoefficientTable.from_mapping(norm, degree_d=4, multiplicative=False))
    report = ssmo_sums(tables[0], tables[1], grid, config)
    if k1 != k2:
        report.notes.append(f"weight mismatch: k1={k1}, k2={k2}; equal normalised traces "
                            "do not make the forms equal")
    return report
