"""Functional-equation data and the checks on it.

The completed L-function is
``Lambda(s) = N^(s/2) prod_j Gamma_R(s + mu_j) prod_k Gamma_C(s + nu_k) L(s)``
with ``Gamma_R(s) = pi^(-s/2) Gamma(s/2)`` and
``Gamma_C(s) = 2 (2 pi)^(-s) Gamma(s)``, and ``Lambda(s) = eps * conj(Lambda)(1 - s)``.
The Gamma factors are kept symbolically as their shifts; nothing here
evaluates Gamma.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .errors import DomainError, ParseError
from .euler import CoefficientTable

TOL = 1e-9


def _canon(shifts) -> tuple[complex, ...]:
    return tuple(sorted((complex(z) for z in shifts), key=lambda z: (z.real, z.imag)))


@dataclass(frozen=True)
class FeData:
    degree_d: int
    conductor_N: int
    mu: tuple[complex, ...] = ()
    nu: tuple[complex, ...] = ()
    epsilon: complex = 1

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(complex(z) for z in self.mu))
        object.__setattr__(self, "nu", tuple(complex(z) for z in self.nu))
        object.__setattr__(self, "epsilon", complex(self.epsilon))
        if self.conductor_N < 1 or int(self.conductor_N) != self.conductor_N:
            raise DomainError(f"conductor must be a positive integer, got {self.conductor_N}")
        if self.degree_d != len(self.mu) + 2 * len(self.nu):
            raise DomainError(
                f"degree {self.degree_d} != J + 2K = {len(self.mu)} + 2*{len(self.nu)}"
            )
        if abs(abs(self.epsilon) - 1) > TOL:
            raise DomainError(f"root number must have modulus 1, got |eps|={abs(self.epsilon)}")

    def same_as(self, other: FeData, tol: float = TOL) -> bool:
        """Componentwise comparison, order-insensitive in mu and nu."""
        if (self.degree_d, self.conductor_N) != (other.degree_d, other.conductor_N):
            return False
        if len(self.mu) != len(other.mu) or len(self.nu) != len(other.nu):
            return False
        pairs = list(zip(_canon(self.mu), _canon(other.mu))) + list(zip(_canon(self.nu), _canon(other.nu)))
        pairs.append((self.epsilon, other.epsilon))
        return all(abs(x - y) <= tol for x, y in pairs)

    def to_json(self) -> dict:
        pair = lambda z: [z.real, z.imag]  # noqa: E731
        return {
            "degree": self.degree_d,
            "conductor": self.conductor_N,
            "mu": [pair(z) for z in self.mu],
            "nu": [pair(z) for z in self.nu],
            "epsilon": pair(self.epsilon),
        }

    @classmethod
    def from_json(cls, doc: dict) -> FeData:
        try:
            z = lambda v: complex(v[0], v[1]) if isinstance(v, list) else complex(v)  # noqa: E731
            return cls(
                degree_d=int(doc["degree"]),
                conductor_N=int(doc["conductor"]),
                mu=tuple(z(v) for v in doc.get("mu", [])),
                nu=tuple(z(v) for v in doc.get("nu", [])),
                epsilon=z(doc.get("epsilon", [1.0, 0.0])),
            )
        except (KeyError, TypeError, IndexError, ValueError) as exc:
            if isinstance(exc, DomainError):
                raise
            raise ParseError(f"malformed functional-equation document: {exc}") from exc


def load_fe(path) -> FeData:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, path=path) from exc
    return FeData.from_json(doc)


class Validation(NamedTuple):
    ok: bool
    violations: tuple[str, ...]


def _is_half_integer_or_integer(x: float) -> bool:
    return x > TOL and abs(2 * x - round(2 * x)) <= 2 * TOL


def validate_tempered(fe: FeData) -> Validation:
    """Re(mu) in {0, 1} and Re(nu) in {1/2, 1, 3/2, ...}."""
    bad = []
    for m in fe.mu:
        if min(abs(m.real), abs(m.real - 1)) > TOL:
            bad.append(f"Re(mu)={m.real:g} not in {{0,1}}")
    for n in fe.nu:
        if not _is_half_integer_or_integer(n.real):
            bad.append(f"Re(nu)={n.real:g} not a positive integer or half-integer")
    return Validation(not bad, tuple(bad))


def validate_partial_selberg(fe: FeData) -> Validation:
    """Every Re(mu), Re(nu) strictly greater than -1/2."""
    bad = [f"Re(mu)={m.real:g} <= -1/2" for m in fe.mu if not m.real > -0.5]
    bad += [f"Re(nu)={n.real:g} <= -1/2" for n in fe.nu if not n.real > -0.5]
    return Validation(not bad, tuple(bad))


def spin_fe(weight_k: int) -> FeData:
    """Spin L-function of a full-level genus-2 Siegel eigenform of weight k."""
    if weight_k < 2:
        raise DomainError(f"weight must be >= 2, got {weight_k}")
    return FeData(4, 1, (), (0.5, weight_k - 1.5), (-1) ** weight_k)


def hasse_weil_fe(genus_g: int, conductor_N: int, sign: int) -> FeData:
    """Analytically normalised Hasse-Weil L-function of a genus-g curve."""
    if genus_g < 1:
        raise DomainError(f"genus must be >= 1, got {genus_g}")
    if conductor_N < 1:
        raise DomainError(f"conductor must be >= 1, got {conductor_N}")
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    return FeData(2 * genus_g, conductor_N, (), (0.5,) * genus_g, sign)


def analytic_normalize(table: CoefficientTable, shift_w: float) -> CoefficientTable:
    """b(n) = a(n) / n^w, applied to dense and extra entries alike."""
    n = np.arange(table.limit + 1, dtype=np.float64)
    n[0] = 1.0
    dense = table.dense / n**shift_w
    extra = {k: v / k**shift_w for k, v in table.extra.items()}
    theta = table.theta_claim - shift_w if table.theta_claim is not None else None
    if theta is not None and theta < 0:
        theta = 0.0
    return CoefficientTable(table.limit, dense, table.degree_d, theta_claim=theta, extra=extra,
                            multiplicative=table.multiplicative)


def gamma_factor_doc(fe: FeData) -> str:
    """Human-readable Gamma-factor string, e.g. ``G_C(s+0.5) G_C(s+8.5)``."""
    parts = [f"G_R(s+{m.real:g})" for m in fe.mu] + [f"G_C(s+{n.real:g})" for n in fe.nu]
    eps = fe.epsilon
    eps_s = f"{eps.real:+g}" if abs(eps.imag) < TOL else f"{eps.real:g}{eps.imag:+g}i"
    return f"N={fe.conductor_N} d={fe.degree_d} " + " ".join(parts) + f" eps={eps_s}"

