"""Ladder representations and generic algebra-level checks.

A three-generator polynomial algebra is [N0, N+-] = +-N+- together with
[N+, N-] = f(N0) for a polynomial f.  Every irreducible representation we
build is a ladder: N0 diagonal with unit spacing, N+ one step up, N- its
adjoint one step down.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Tuple

import numpy as np

from .polynomial import Polynomial, antidifference


class LabelError(ValueError):
    """Representation label outside the unitary regime."""


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    def add(self, name: str, residual: float, tolerance: float) -> Check:
        c = Check(name, float(residual), float(tolerance))
        self.checks.append(c)
        return c

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks), default=0.0)

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "residual": c.residual,
                    "tolerance": c.tolerance,
                    "passed": c.passed,
                }
                for c in self.checks
            ],
        }


@dataclass(frozen=True)
class AlgebraSpec:
    """Abstract algebra: order, structure polynomial f, central values."""

    order: int
    f: Polynomial
    central_values: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.order != max(self.f.degree(), 0):
            raise ValueError(
                f"order {self.order} inconsistent with deg f = {self.f.degree()}"
            )


@dataclass(frozen=True)
class LadderRep:
    """Finite matrix triple for one irrep (or a truncation of one).

    raise_amps[i] is <i+1|N+|i>; unitarity forces lower_amps == raise_amps.
    `truncated` marks a cutoff of an infinite-dimensional representation,
    in which case the last row is a boundary artifact.
    """

    dim: int
    labels: Mapping[str, Fraction]
    n0_diag: Tuple[float, ...]
    raise_amps: Tuple[float, ...]
    lower_amps: Tuple[float, ...]
    truncated: bool = False

    def __post_init__(self):
        if self.dim != len(self.n0_diag):
            raise ValueError("dim does not match n0_diag length")
        if len(self.raise_amps) != max(self.dim - 1, 0):
            raise ValueError("raise_amps must have length dim-1")
        if self.raise_amps != self.lower_amps:
            raise ValueError("unitary ladder requires lower_amps == raise_amps")
        if any(a < 0 for a in self.raise_amps):
            raise ValueError("ladder amplitudes must be nonnegative")
        spacings = np.diff(self.n0_diag)
        if self.dim > 1 and np.max(np.abs(spacings - 1.0)) > 1e-12:
            raise ValueError("n0_diag must increase with unit spacing")

    def matrices(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        n0 = np.diag(np.asarray(self.n0_diag, dtype=float))
        nplus = np.zeros((self.dim, self.dim))
        for i, a in enumerate(self.raise_amps):
            nplus[i + 1, i] = a
        return n0, nplus, nplus.T.copy()

    def interior_rows(self) -> range:
        """Rows whose one-step commutator stencil avoids the cutoff."""
        return range(self.dim - 1) if self.truncated else range(self.dim)


def boson_rep(cutoff: int) -> LadderRep:
    """Truncated harmonic-oscillator ladder (order-0 algebra, f = -1)."""
    amps = tuple(float(np.sqrt(n + 1)) for n in range(cutoff - 1))
    return LadderRep(
        dim=cutoff,
        labels={"kind": "boson"},
        n0_diag=tuple(float(n) for n in range(cutoff)),
        raise_amps=amps,
        lower_amps=amps,
        truncated=True,
    )


def su2_rep(j: Fraction) -> LadderRep:
    """Spin-j ladder: J0 = m, J+ amplitude sqrt((j-m)(j+m+1))."""
    j = Fraction(j)
    if j < 0 or (2 * j).denominator != 1:
        raise LabelError("j must be a nonnegative half-integer")
    dim = int(2 * j) + 1
    ms = [-j + n for n in range(dim)]
    amps = tuple(float(np.sqrt(float((j - m) * (j + m + 1)))) for m in ms[:-1])
    return LadderRep(
        dim=dim,
        labels={"kind": "su2", "j": j},
        n0_diag=tuple(float(m) for m in ms),
        raise_amps=amps,
        lower_amps=amps,
    )


def su11_rep(k: Fraction, cutoff: int) -> LadderRep:
    """Positive discrete series D+(k), truncated at `cutoff` states."""
    k = Fraction(k)
    if k <= 0:
        raise LabelError("Bargmann index k must be positive")
    amps = tuple(
        float(np.sqrt(float((n + 1) * (n + 2 * k)))) for n in range(cutoff - 1)
    )
    return LadderRep(
        dim=cutoff,
        labels={"kind": "su11", "k": k},
        n0_diag=tuple(float(k + n) for n in range(cutoff)),
        raise_amps=amps,
        lower_amps=amps,
        truncated=True,
    )


def su2_structure() -> Polynomial:
    return Polynomial([0, 2])


def su11_structure() -> Polynomial:
    return Polynomial([0, -2])


def casimir_on_rep(rep: LadderRep, f: Polynomial) -> np.ndarray:
    """Diagonal of C = N+N- + g(N0 - 1) with g the g(0)=0 antidifference.

    Constant across the diagonal on a true irrep; constancy is the caller's
    check, not enforced here.
    """
    g = antidifference(f)
    diag = np.empty(rep.dim)
    for i in range(rep.dim):
        plus_minus = rep.lower_amps[i - 1] ** 2 if i > 0 else 0.0
        diag[i] = plus_minus + g(rep.n0_diag[i] - 1.0)
    return diag


def verify_closure(rep: LadderRep, f: Polynomial, tol: float) -> VerificationReport:
    """Check [N0,N+-] = +-N+- and [N+,N-] = f(N0) in max-entry norm.

    For truncated reps the [N+,N-] check runs on interior rows only; the
    missing amplitude above the cutoff is a truncation artifact, not an
    algebra violation.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    report = VerificationReport()

    spacing_res = 0.0
    for i, a in enumerate(rep.raise_amps):
        spacing_res = max(
            spacing_res, abs((rep.n0_diag[i + 1] - rep.n0_diag[i] - 1.0) * a)
        )
    report.add("[N0,N+] - N+", spacing_res, tol)
    report.add("[N0,N-] + N-", spacing_res, tol)

    comm_res = 0.0
    for i in rep.interior_rows():
        down_sq = rep.lower_amps[i - 1] ** 2 if i > 0 else 0.0
        up_sq = rep.raise_amps[i] ** 2 if i < rep.dim - 1 else 0.0
        comm_res = max(comm_res, abs(down_sq - up_sq - f(rep.n0_diag[i])))
    report.add("[N+,N-] - f(N0)", comm_res, tol)
    return report


def casimir_constancy(rep: LadderRep, f: Polynomial) -> float:
    """Spread of the Casimir diagonal over interior rows (max |C_i - mean|)."""
    diag = casimir_on_rep(rep, f)
    rows = list(rep.interior_rows())
    vals = diag[rows]
    return float(np.max(np.abs(vals - vals.mean()))) if len(vals) else 0.0
