"""Generalized Jordan-Schwinger composition of two ladder algebras.

Products of raising pairs on the tensor subspace where half the difference
of the diagonals is fixed close into a polynomial algebra of order
m + n + 1; `fit_order` verifies the closure degree numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .core import LadderRep
from .fock import EmptySubspaceError


@dataclass
class ComposedAlgebra:
    left: LadderRep
    right: LadderRep
    pi_value: Fraction
    product_rep: LadderRep
    left_order: Optional[int] = None
    right_order: Optional[int] = None


def compose(
    left: LadderRep,
    right: LadderRep,
    pi_value,
    left_order: Optional[int] = None,
    right_order: Optional[int] = None,
) -> ComposedAlgebra:
    """Pi+ = L+ R+, Pi0 = (L0 + R0)/2 on the (L0 - R0)/2 = pi subspace.

    The subspace is the diagonal chain (i0 + t, j0 + t); the composed
    amplitudes are entrywise products.
    """
    pi = float(pi_value)
    pairs = []
    for i in range(left.dim):
        target = left.n0_diag[i] - 2.0 * pi
        j = int(round(target - right.n0_diag[0]))
        if 0 <= j < right.dim and abs(right.n0_diag[j] - target) < 1e-9:
            pairs.append((i, j))
    if not pairs:
        raise EmptySubspaceError(
            f"no tensor states with (L0 - R0)/2 = {pi_value}"
        )
    pairs.sort(key=lambda ij: left.n0_diag[ij[0]])
    # the chain must be consecutive in both factors
    amps = []
    n0 = []
    for t, (i, j) in enumerate(pairs):
        n0.append(0.5 * (left.n0_diag[i] + right.n0_diag[j]))
        if t + 1 < len(pairs):
            i2, j2 = pairs[t + 1]
            if i2 != i + 1 or j2 != j + 1:
                raise EmptySubspaceError("subspace chain is not consecutive")
            amps.append(left.raise_amps[i] * right.raise_amps[j])
    truncated = left.truncated or right.truncated
    # a finite chain ending strictly inside both ladders is complete
    i_last, j_last = pairs[-1]
    if i_last < left.dim - 1 and j_last < right.dim - 1:
        truncated = False
    product = LadderRep(
        dim=len(pairs),
        labels={
            "kind": "composed",
            "left": left.labels.get("class", left.labels.get("kind", "?")),
            "right": right.labels.get("class", right.labels.get("kind", "?")),
            "pi": Fraction(pi_value),
        },
        n0_diag=tuple(n0),
        raise_amps=tuple(amps),
        lower_amps=tuple(amps),
        truncated=truncated,
    )
    return ComposedAlgebra(
        left=left,
        right=right,
        pi_value=Fraction(pi_value),
        product_rep=product,
        left_order=left_order,
        right_order=right_order,
    )


@dataclass
class FitResult:
    degree: int
    coeffs: np.ndarray  # lowest degree first
    residual: float


def fit_bracket(rep: LadderRep, max_degree: int, coeff_floor: float = 1e-8) -> FitResult:
    """Least-squares fit of diag([N+, N-]) against powers of the diagonal.

    Interior rows only; the reported degree drops trailing coefficients
    whose relative size is below `coeff_floor`.
    """
    rows = list(rep.interior_rows())
    if len(rows) < max_degree + 2:
        raise ValueError(
            f"need at least {max_degree + 2} interior rows to resolve degree "
            f"{max_degree}, have {len(rows)}"
        )
    xs = np.array([rep.n0_diag[i] for i in rows])
    ys = np.empty(len(rows))
    for t, i in enumerate(rows):
        down = rep.lower_amps[i - 1] ** 2 if i > 0 else 0.0
        up = rep.raise_amps[i] ** 2 if i < rep.dim - 1 else 0.0
        ys[t] = down - up
    series = np.polynomial.Polynomial.fit(xs, ys, deg=max_degree)
    coeffs = series.convert().coef
    fitted = np.polynomial.polynomial.polyval(xs, coeffs)
    residual = float(np.max(np.abs(fitted - ys)))
    scale = max(np.max(np.abs(coeffs)), 1.0)
    degree = 0
    for d in range(len(coeffs) - 1, -1, -1):
        if abs(coeffs[d]) > coeff_floor * scale:
            degree = d
            break
    return FitResult(degree=degree, coeffs=coeffs, residual=residual)


def fit_order(comp: ComposedAlgebra, max_degree: Optional[int] = None) -> FitResult:
    """Fit the composed bracket; defaults to degree m + n + 1 when known."""
    if max_degree is None:
        if comp.left_order is None or comp.right_order is None:
            raise ValueError("orders unknown; pass max_degree explicitly")
        max_degree = comp.left_order + comp.right_order + 1
    return fit_bracket(comp.product_rep, max_degree)
