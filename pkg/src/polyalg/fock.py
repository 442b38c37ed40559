"""Truncated multi-mode Fock spaces: the independent oracle.

Every generator of every class has a realization as a product of boson
creation/annihilation operators.  Restricting those sparse operators to the
subspace where the central elements take fixed values must reproduce the
ladder matrix elements; `compare` measures exactly that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.sparse as sp

from .core import LabelError, LadderRep, VerificationReport
from .cubic import CubicClass, CubicLabel
from . import cubic as _cubic
from . import quadratic as _quadratic
from .quadratic import QuadLabel, QuadraticClass


class EmptySubspaceError(ValueError):
    """No Fock states carry the requested central-element values."""


class ShapeMismatchError(ValueError):
    """Constrained subspace too small for the representation."""


@dataclass(frozen=True)
class FockSpace:
    """Occupation-number basis, colexicographic (first mode fastest)."""

    modes: int
    cutoffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.cutoffs) != self.modes:
            raise ValueError("cutoffs length must equal modes")
        if any(c < 1 for c in self.cutoffs):
            raise ValueError("every cutoff must be >= 1")

    @property
    def dim(self) -> int:
        d = 1
        for c in self.cutoffs:
            d *= c + 1
        return d

    def index_of(self, occupations: Sequence[int]) -> int:
        idx = 0
        stride = 1
        for n, c in zip(occupations, self.cutoffs):
            if not 0 <= n <= c:
                raise IndexError(f"occupation {n} outside cutoff {c}")
            idx += n * stride
            stride *= c + 1
        return idx

    def occupations_of(self, index: int) -> Tuple[int, ...]:
        occ = []
        for c in self.cutoffs:
            index, n = divmod(index, c + 1)
            occ.append(n)
        return tuple(occ)

    def occupation_arrays(self) -> List[np.ndarray]:
        """Per-mode occupation of every basis state (vectorized index map)."""
        out = []
        idx = np.arange(self.dim)
        for c in self.cutoffs:
            idx, n = np.divmod(idx, c + 1)
            out.append(n)
        return out


@dataclass
class FockOperator:
    space: FockSpace
    matrix: sp.csr_matrix

    def __matmul__(self, other: "FockOperator") -> "FockOperator":
        return FockOperator(self.space, (self.matrix @ other.matrix).tocsr())

    def __add__(self, other):
        m = other.matrix if isinstance(other, FockOperator) else other
        return FockOperator(self.space, (self.matrix + m).tocsr())

    def __sub__(self, other):
        m = other.matrix if isinstance(other, FockOperator) else other
        return FockOperator(self.space, (self.matrix - m).tocsr())

    def __mul__(self, scalar) -> "FockOperator":
        return FockOperator(self.space, (self.matrix * float(scalar)).tocsr())

    __rmul__ = __mul__

    def adjoint(self) -> "FockOperator":
        return FockOperator(self.space, self.matrix.T.conj().tocsr())

    def diagonal(self) -> np.ndarray:
        return np.asarray(self.matrix.diagonal()).ravel()


def _single_mode(kind: str, levels: int) -> sp.csr_matrix:
    n = np.arange(levels)
    if kind == "annihilate":
        return sp.diags(np.sqrt(n[1:].astype(float)), 1).tocsr()
    if kind == "create":
        return sp.diags(np.sqrt(n[1:].astype(float)), -1).tocsr()
    if kind == "number":
        return sp.diags(n.astype(float), 0).tocsr()
    raise ValueError(f"unknown mode operator kind {kind!r}")


def mode_operator(space: FockSpace, mode: int, kind: str) -> FockOperator:
    """a, a-dagger or the number operator on one mode of the full space.

    The raising operator annihilates the top state: the standard truncation
    artifact, confined to the boundary layer.
    """
    if not 0 <= mode < space.modes:
        raise ValueError(f"mode {mode} out of range")
    acc = sp.identity(1, format="csr")
    for i, c in enumerate(space.cutoffs):
        factor = (
            _single_mode(kind, c + 1) if i == mode else sp.identity(c + 1, format="csr")
        )
        acc = sp.kron(factor, acc, format="csr")
    return FockOperator(space, acc)


# -- generator expressions -------------------------------------------------

# A generator expression is a sum of scaled operator products; each product
# is applied right-to-left, written left-to-right as in the defining text.
# Example: Q+ = a1+ a2 a3 is (1.0, [("create",0),("annihilate",1),("annihilate",2)]).
Product = List[Tuple[str, int]]
Term = Tuple[float, Product]


@dataclass(frozen=True)
class Realization:
    """Named bosonic realization of one algebra's generators."""

    name: str
    q0: List[Term]
    qplus: List[Term]
    qminus: List[Term]
    centrals: dict = field(default_factory=dict)  # name -> list[Term]
    constant_shifts: dict = field(default_factory=dict)  # name -> float added to diag


def _eval_terms(space: FockSpace, terms: List[Term], shift: float = 0.0) -> FockOperator:
    total = sp.csr_matrix((space.dim, space.dim))
    for coeff, product in terms:
        acc = sp.identity(space.dim, format="csr")
        for kind, mode in product:
            acc = acc @ mode_operator(space, mode, kind).matrix
        total = total + float(coeff) * acc
    if shift:
        total = total + shift * sp.identity(space.dim, format="csr")
    return FockOperator(space, total.tocsr())


def realize(space: FockSpace, realization: Realization):
    """Sparse (Q0, Q+, Q-, centrals) on the given space."""
    q0 = _eval_terms(space, realization.q0, realization.constant_shifts.get("q0", 0.0))
    qp = _eval_terms(space, realization.qplus)
    qm = _eval_terms(space, realization.qminus)
    centrals = {
        name: _eval_terms(space, terms, realization.constant_shifts.get(name, 0.0))
        for name, terms in realization.centrals.items()
    }
    return q0, qp, qm, centrals


def constrained_subspace(
    space: FockSpace,
    constraint: Union[FockOperator, Sequence[FockOperator]],
    value: Union[float, Sequence[float]],
    tol: float,
    order_by: Optional[FockOperator] = None,
) -> List[int]:
    """Basis indices where each diagonal constraint equals its value.

    Ordered by increasing diagonal of `order_by` (typically Q0) when given,
    else by basis index.
    """
    constraints = [constraint] if isinstance(constraint, FockOperator) else list(constraint)
    values = [value] if np.isscalar(value) else list(value)
    if len(constraints) != len(values):
        raise ValueError("constraint/value count mismatch")
    mask = np.ones(space.dim, dtype=bool)
    for op, val in zip(constraints, values):
        offdiag = op.matrix - sp.diags(op.matrix.diagonal())
        if offdiag.nnz and abs(offdiag).max() > 1e-14:
            raise ValueError("constraint operator must be diagonal in the Fock basis")
        mask &= np.abs(op.diagonal() - float(val)) <= tol
    idx = np.nonzero(mask)[0]
    if idx.size == 0:
        raise EmptySubspaceError(
            f"no basis states with constraint values {values} in {space}"
        )
    if order_by is not None:
        order = np.argsort(order_by.diagonal()[idx], kind="stable")
        idx = idx[order]
    return [int(i) for i in idx]


def interior_mask(space: FockSpace, subspace: Sequence[int], margin: int = 3) -> np.ndarray:
    """Rows whose occupations sit at least `margin` below every cutoff.

    Generators shift occupations by at most 3 per mode (the cubic-boson
    case), so such rows cannot feel the truncation.
    """
    occ = space.occupation_arrays()
    sub = np.asarray(subspace)
    ok = np.ones(len(sub), dtype=bool)
    for per_mode, c in zip(occ, space.cutoffs):
        ok &= per_mode[sub] <= c - margin
    return ok


def compare(
    rep: LadderRep,
    oracle_ops: Tuple[FockOperator, FockOperator, FockOperator],
    subspace: Sequence[int],
    tol: float,
) -> VerificationReport:
    """Entrywise oracle-vs-ladder comparison on interior rows."""
    q0, qp, qm = oracle_ops
    space = q0.space
    interior = interior_mask(space, subspace)
    rep_interior = rep.dim - 1 if rep.truncated else rep.dim
    if len(subspace) < rep_interior:
        raise ShapeMismatchError(
            f"subspace of size {len(subspace)} cannot cover the "
            f"{rep_interior} interior rows of the representation"
        )
    n_rows = min(len(subspace), rep.dim)
    sub = np.asarray(subspace[:n_rows])

    q0_diag = q0.diagonal()[sub]
    qp_sub = qp.matrix[np.ix_(sub, sub)].toarray()
    qm_sub = qm.matrix[np.ix_(sub, sub)].toarray()

    report = VerificationReport()
    res_q0 = 0.0
    res_qp = 0.0
    res_qm = 0.0
    off_mass = 0.0
    compared = 0
    for i in range(n_rows):
        if not interior[i]:
            continue
        compared += 1
        res_q0 = max(res_q0, abs(q0_diag[i] - rep.n0_diag[i]))
        up = rep.raise_amps[i] if i < rep.dim - 1 else 0.0
        if i + 1 < n_rows:
            res_qp = max(res_qp, abs(qp_sub[i + 1, i] - up))
            res_qm = max(res_qm, abs(qm_sub[i, i + 1] - up))
        # everything off the ladder band must vanish
        row_p = np.abs(qp_sub[:, i]).sum() - abs(qp_sub[i + 1, i] if i + 1 < n_rows else 0.0)
        row_m = np.abs(qm_sub[i, :]).sum() - abs(qm_sub[i, i + 1] if i + 1 < n_rows else 0.0)
        off_mass = max(off_mass, row_p, row_m)
    if compared == 0:
        raise ShapeMismatchError(
            "no interior rows to compare; enlarge the Fock cutoffs"
        )
    report.add("Q0 diagonal", res_q0, tol)
    report.add("Q+ amplitudes", res_qp, tol)
    report.add("Q- amplitudes", res_qm, tol)
    report.add("off-ladder leakage", off_mass, tol)
    return report


# -- catalog of realizations ------------------------------------------------

def quadratic_realization(cls: QuadraticClass) -> Realization:
    """Three-mode realization (two Schwinger modes + one Heisenberg mode)."""
    A, AD, N = "annihilate", "create", "number"
    if cls is QuadraticClass.QMINUS2:
        return Realization(
            name=cls.value,
            q0=[(0.25, [(N, 0)]), (-0.25, [(N, 1)]), (-0.5, [(N, 2)])],
            qplus=[(1.0, [(AD, 0), (A, 1), (A, 2)])],
            qminus=[(1.0, [(A, 0), (AD, 1), (AD, 2)])],
            centrals={
                "pair": [(1.0, [(N, 0)]), (1.0, [(N, 1)])],  # 2j
                "ell4": [(1.0, [(N, 0)]), (-1.0, [(N, 1)]), (2.0, [(N, 2)])],  # 4l
            },
        )
    if cls is QuadraticClass.QPLUS2:
        return Realization(
            name=cls.value,
            q0=[(0.25, [(N, 0)]), (-0.25, [(N, 1)]), (0.5, [(N, 2)])],
            qplus=[(1.0, [(AD, 0), (A, 1), (AD, 2)])],
            qminus=[(1.0, [(A, 0), (AD, 1), (A, 2)])],
            centrals={
                "pair": [(1.0, [(N, 0)]), (1.0, [(N, 1)])],  # 2j
                "ell4": [(1.0, [(N, 0)]), (-1.0, [(N, 1)]), (-2.0, [(N, 2)])],  # 4l
            },
        )
    if cls is QuadraticClass.QMINUS11:
        return Realization(
            name=cls.value,
            q0=[(0.25, [(N, 0)]), (0.25, [(N, 1)]), (-0.5, [(N, 2)])],
            qplus=[(1.0, [(AD, 0), (AD, 1), (A, 2)])],
            qminus=[(1.0, [(A, 0), (A, 1), (AD, 2)])],
            centrals={
                "diff": [(1.0, [(N, 0)]), (-1.0, [(N, 1)])],  # 2k-1
                "ell4": [(1.0, [(N, 0)]), (1.0, [(N, 1)]), (2.0, [(N, 2)])],  # 4l-1
            },
            constant_shifts={"q0": 0.25},
        )
    return Realization(
        name=cls.value,
        q0=[(0.25, [(N, 0)]), (0.25, [(N, 1)]), (0.5, [(N, 2)])],
        qplus=[(1.0, [(AD, 0), (AD, 1), (AD, 2)])],
        qminus=[(1.0, [(A, 0), (A, 1), (A, 2)])],
        centrals={
            "diff": [(1.0, [(N, 0)]), (-1.0, [(N, 1)])],  # 2k-1
            "ell4": [(1.0, [(N, 0)]), (1.0, [(N, 1)]), (-2.0, [(N, 2)])],  # 4l-1
        },
        constant_shifts={"q0": 0.25},
    )


def cubic_realization(cls: CubicClass) -> Realization:
    """Four-mode realization: two Schwinger pairs (su(1,1)/su(2) each)."""
    A, AD, N = "annihilate", "create", "number"
    su11_first = cls in (CubicClass.CMINUS_11_11, CubicClass.CPLUS_11_11)
    su11_second = cls in (
        CubicClass.CMINUS_11_11,
        CubicClass.CPLUS_11_11,
        CubicClass.CMINUS_2_11,
        CubicClass.CPLUS_2_11,
    )
    minus = cls in (CubicClass.CMINUS_11_11, CubicClass.CMINUS_2_2, CubicClass.CMINUS_2_11)

    # first algebra on modes (0,1), second on modes (2,3)
    first_plus = [(AD, 0), (AD, 1)] if su11_first else [(AD, 0), (A, 1)]
    first_minus = [(A, 0), (A, 1)] if su11_first else [(A, 0), (AD, 1)]
    second_plus = [(AD, 2), (AD, 3)] if su11_second else [(AD, 2), (A, 3)]
    second_minus = [(A, 2), (A, 3)] if su11_second else [(A, 2), (AD, 3)]

    # diagonal combinations: L0 = (N0+N1+1)/2 (su11) or (N0-N1)/2 (su2)
    def half_diag(pair_su11: bool, modes: Tuple[int, int], sign: float):
        terms = [(sign * 0.25, [(N, modes[0])])]
        terms.append(((sign * 0.25) if pair_su11 else (-sign * 0.25), [(N, modes[1])]))
        return terms, (sign * 0.25 if pair_su11 else 0.0)

    t1, s1 = half_diag(su11_first, (0, 1), 1.0)
    if minus:
        t2, s2 = half_diag(su11_second, (2, 3), -1.0)
    else:
        t2, s2 = half_diag(su11_second, (2, 3), 1.0)
    tk1, sk1 = half_diag(su11_first, (0, 1), 1.0)
    tk2, sk2 = half_diag(su11_second, (2, 3), 1.0 if minus else -1.0)

    second = second_minus if minus else second_plus
    second_dag = second_plus if minus else second_minus
    return Realization(
        name=cls.value,
        q0=t1 + t2,
        qplus=[(1.0, first_plus + second)],
        qminus=[(1.0, first_minus + second_dag)],
        centrals={
            "first_diff": [(1.0, [(N, 0)]), (-1.0, [(N, 1)])],
            "second_diff": [(1.0, [(N, 2)]), (-1.0, [(N, 3)])],
            "first_sum": [(1.0, [(N, 0)]), (1.0, [(N, 1)])],
            "second_sum": [(1.0, [(N, 2)]), (1.0, [(N, 3)])],
            "kay": tk1 + tk2,  # K = (first0 +/- second0)/2
        },
        constant_shifts={"q0": s1 + s2, "kay": sk1 + sk2},
    )


def cubic_boson_realization() -> Realization:
    """Single-mode cubic construction Q+ = (a+)^3/sqrt(3), Q0 = N."""
    s = 1.0 / math.sqrt(3.0)
    A, AD, N = "annihilate", "create", "number"
    return Realization(
        name="cubic-boson",
        q0=[(1.0, [(N, 0)])],
        qplus=[(s, [(AD, 0), (AD, 0), (AD, 0)])],
        qminus=[(s, [(A, 0), (A, 0), (A, 0)])],
    )


def calogero_realization() -> Realization:
    """Two-mode Schwinger form C+ = (a1+ a2)^2/2, C0 = (N1-N2)/2."""
    A, AD, N = "annihilate", "create", "number"
    return Realization(
        name="calogero",
        q0=[(0.5, [(N, 0)]), (-0.5, [(N, 1)])],
        qplus=[(0.5, [(AD, 0), (A, 1), (AD, 0), (A, 1)])],
        qminus=[(0.5, [(A, 0), (AD, 1), (A, 0), (AD, 1)])],
        centrals={"pair": [(1.0, [(N, 0)]), (1.0, [(N, 1)])]},
    )


# -- high-level comparison pipelines ----------------------------------------

def _quad_occupations(cls: QuadraticClass, label: QuadLabel, dim: int) -> List[Tuple[int, int, int]]:
    """Subspace occupations (n1,n2,n3) for ladder index n = 0..dim-1."""
    a, l = label.spin_or_bargmann, label.l
    occ = []
    for n in range(dim):
        if cls is QuadraticClass.QMINUS2:
            m = -a + n
            occ.append((a + m, a - m, 2 * l - m))
        elif cls is QuadraticClass.QPLUS2:
            m = -a + n
            occ.append((a + m, a - m, m - 2 * l))
        elif cls is QuadraticClass.QMINUS11:
            occ.append((n + 2 * a - 1, n, 2 * l - a - n))
        else:
            occ.append((n + 2 * a - 1, n, n + a - 2 * l))
    out = []
    for t in occ:
        if any(x.denominator != 1 or x < 0 for x in map(Fraction, t)):
            raise LabelError(f"label {label} not realizable on the Fock lattice")
        out.append(tuple(int(x) for x in t))
    return out


def oracle_compare_quadratic(
    cls: QuadraticClass,
    label: QuadLabel,
    tol: float = 1e-10,
    cutoff: Optional[int] = None,
    margin: int = 3,
) -> VerificationReport:
    """Build the three-mode oracle and compare with `quadratic.build`."""
    dim = _quadratic.dimension(cls, label)
    if dim is _quadratic.INFINITE:
        if cutoff is None:
            raise LabelError("infinite representation needs a cutoff")
        dim = cutoff + margin  # extra rows so trimming leaves `cutoff` interior
    rep = _quadratic.build(cls, label, cutoff=dim if _quadratic.dimension(cls, label) is _quadratic.INFINITE else None)
    occs = _quad_occupations(cls, label, dim)
    cutoffs = tuple(max(o[i] for o in occs) + margin for i in range(3))
    space = FockSpace(3, cutoffs)
    q0, qp, qm, centrals = realize(space, quadratic_realization(cls))

    a, l = label.spin_or_bargmann, label.l
    if cls.compact:
        cons = [centrals["pair"], centrals["ell4"]]
        vals = [float(2 * a), float(4 * l)]
    else:
        cons = [centrals["diff"], centrals["ell4"]]
        vals = [float(2 * a - 1), float(4 * l - 1)]
    sub = constrained_subspace(space, cons, vals, tol=1e-9, order_by=q0)
    return compare(rep, (q0, qp, qm), sub, tol)


_CUBIC_FOUR_MODE = (
    CubicClass.CMINUS_11_11,
    CubicClass.CPLUS_11_11,
    CubicClass.CMINUS_2_2,
    CubicClass.CPLUS_2_2,
    CubicClass.CMINUS_2_11,
    CubicClass.CPLUS_2_11,
)


def _cubic_occupations(cls: CubicClass, label: CubicLabel, dim: int) -> List[Tuple[int, ...]]:
    """Four-mode occupations along the ladder, asserted integral."""
    occ = []
    for n in range(dim):
        n = Fraction(n)
        if cls is CubicClass.CMINUS_11_11:
            k1, k2, k = label["k1"], label["k2"], label["k"]
            p = 2 * k - k1 - k2 - n
            occ.append((n + 2 * k1 - 1, n, p + 2 * k2 - 1, p))
        elif cls is CubicClass.CPLUS_11_11:
            k1, k2, k = label["k1"], label["k2"], label["k"]
            p = n + 2 * k + k1 - k2
            occ.append((n + 2 * k1 - 1, n, p + 2 * k2 - 1, p))
        elif cls is CubicClass.CMINUS_2_2:
            j1, j2, k = label["j1"], label["j2"], label["k"]
            m = _cubic._m_lo(cls, label) + n
            p = 2 * k + j1 + j2 - m
            occ.append((m, 2 * j1 - m, p, 2 * j2 - p))
        elif cls is CubicClass.CPLUS_2_2:
            j1, j2, k = label["j1"], label["j2"], label["k"]
            m = _cubic._m_lo(cls, label) + n
            p = m - j1 + j2 - 2 * k
            occ.append((m, 2 * j1 - m, p, 2 * j2 - p))
        elif cls is CubicClass.CMINUS_2_11:
            j, k1, k = label["j"], label["k1"], label["k"]
            m = -j + n
            p = 2 * k - k1 - m  # su(1,1) excitation
            occ.append((j + m, j - m, p + 2 * k1 - 1, p))
        else:  # CPLUS_2_11
            j, k1, k = label["j"], label["k1"], label["k"]
            m = k1 + 2 * k + n  # su(2) magnetic number
            occ.append((j + m, j - m, n + 2 * k1 - 1, n))
    out = []
    for t in occ:
        t = tuple(Fraction(x) for x in t)
        if any(x.denominator != 1 or x < 0 for x in t):
            raise LabelError(
                f"label {label.params} not realizable on the four-mode Fock lattice"
            )
        out.append(tuple(int(x) for x in t))
    return out


def oracle_compare_cubic(
    cls: CubicClass,
    label: CubicLabel,
    tol: float = 1e-10,
    cutoff: Optional[int] = None,
    margin: int = 3,
) -> VerificationReport:
    """Four-mode double-Schwinger oracle for the six linear-pair classes."""
    if cls not in _CUBIC_FOUR_MODE:
        return oracle_compare_qh(cls, label, tol=tol, cutoff=cutoff)
    dim = _cubic.dimension_cubic(cls, label)
    infinite = dim is _cubic.INFINITE
    if infinite:
        if cutoff is None:
            raise LabelError("infinite representation needs a cutoff")
        dim = cutoff + margin
    rep = _cubic.build_cubic(cls, label, cutoff=dim if infinite else None)
    occs = _cubic_occupations(cls, label, dim)
    cutoffs = tuple(max(o[i] for o in occs) + margin for i in range(4))
    space = FockSpace(4, cutoffs)
    q0, qp, qm, centrals = realize(space, cubic_realization(cls))

    su11_first = cls in (CubicClass.CMINUS_11_11, CubicClass.CPLUS_11_11)
    su11_second = cls in (
        CubicClass.CMINUS_11_11,
        CubicClass.CPLUS_11_11,
        CubicClass.CMINUS_2_11,
        CubicClass.CPLUS_2_11,
    )
    o0 = occs[0]
    cons, vals = [], []
    if su11_first:
        cons.append(centrals["first_diff"])
        vals.append(float(o0[0] - o0[1]))
    else:
        cons.append(centrals["first_sum"])
        vals.append(float(o0[0] + o0[1]))
    if su11_second:
        cons.append(centrals["second_diff"])
        vals.append(float(o0[2] - o0[3]))
    else:
        cons.append(centrals["second_sum"])
        vals.append(float(o0[2] + o0[3]))
    # central half-combination eigenvalue: -k for C+(11,11) (M0 grows ahead
    # of L0 by 2k), +k for the other five classes
    kay_value = -label["k"] if cls is CubicClass.CPLUS_11_11 else label["k"]
    cons.append(centrals["kay"])
    vals.append(float(kay_value))
    sub = constrained_subspace(space, cons, vals, tol=1e-9, order_by=q0)
    return compare(rep, (q0, qp, qm), sub, tol)


def oracle_compare_qh(
    cls: CubicClass,
    label: CubicLabel,
    tol: float = 1e-10,
    cutoff: Optional[int] = None,
    five_mode: bool = False,
    margin: int = 3,
) -> VerificationReport:
    """Oracle for the quadratic-boson classes.

    Default: composite construction, the quadratic LadderRep tensored with a
    boson ladder (memory-friendly, and these classes are defined that way).
    `five_mode=True` runs the raw five-mode Fock realization instead.
    """
    if five_mode:
        return _oracle_qh_five_mode(cls, label, tol=tol, cutoff=cutoff, margin=margin)

    dim = _cubic.dimension_cubic(cls, label)
    infinite = dim is _cubic.INFINITE
    if infinite:
        if cutoff is None:
            raise LabelError("infinite representation needs a cutoff")
        dim = cutoff
    rep = _cubic.build_cubic(cls, label, cutoff=dim if infinite else None)

    qcls = _cubic._quad_class_of(cls)
    qlabel = QuadLabel(label["k1"], label["l"])
    m0 = _cubic._fock_offset(cls, label)
    plus_pairing = cls in (CubicClass.CPLUS_QM1_H, CubicClass.CPLUS_QP1_H)
    base = max(0, int(-m0)) if (m0 < 0 and plus_pairing) else 0
    qdim_needed = dim + base + 1
    qd = _quadratic.dimension(qcls, qlabel)
    qrep = _quadratic.build(
        qcls, qlabel, cutoff=qdim_needed if qd is _quadratic.INFINITE else None
    )

    report = VerificationReport()
    res_q0 = res_amp = 0.0
    for n in rep.interior_rows():
        qn = base + n
        bos = float(m0 + base + n) if plus_pairing else float(m0 - n)
        q0_val = 0.5 * (qrep.n0_diag[qn] + bos) if plus_pairing else 0.5 * (qrep.n0_diag[qn] - bos)
        res_q0 = max(res_q0, abs(q0_val - rep.n0_diag[n]))
        if n < rep.dim - 1:
            if plus_pairing:
                amp = qrep.raise_amps[qn] * math.sqrt(bos + 1.0)
            else:
                amp = qrep.raise_amps[qn] * math.sqrt(bos)
            res_amp = max(res_amp, abs(amp - rep.raise_amps[n]))
    report.add("Q0 diagonal (composite oracle)", res_q0, tol)
    report.add("ladder amplitudes (composite oracle)", res_amp, tol)
    return report


def _oracle_qh_five_mode(
    cls: CubicClass,
    label: CubicLabel,
    tol: float,
    cutoff: Optional[int],
    margin: int = 3,
) -> VerificationReport:
    """Raw five-mode realization: three quadratic modes plus strategy boson.

    Heavy; used as a spot check on small labels.
    """
    dim = _cubic.dimension_cubic(cls, label)
    infinite = dim is _cubic.INFINITE
    if infinite:
        if cutoff is None:
            raise LabelError("infinite representation needs a cutoff")
        dim = cutoff + margin
    rep = _cubic.build_cubic(cls, label, cutoff=dim if infinite else None)

    qcls = _cubic._quad_class_of(cls)
    qlabel = QuadLabel(label["k1"], label["l"])
    m0 = _cubic._fock_offset(cls, label)
    plus_pairing = cls in (CubicClass.CPLUS_QM1_H, CubicClass.CPLUS_QP1_H)
    base = max(0, int(-m0)) if (m0 < 0 and plus_pairing) else 0

    qoccs = _quad_occupations(qcls, qlabel, dim + base)
    bos = [int(m0 + base + n) if plus_pairing else int(m0 - n) for n in range(dim)]
    cutoffs = tuple(
        max(o[i] for o in qoccs) + margin for i in range(3)
    ) + (max(bos) + margin,)
    space = FockSpace(4, cutoffs)

    qr = quadratic_realization(qcls)
    A, AD, N = "annihilate", "create", "number"
    boson = 3
    if plus_pairing:
        qplus = [(c, prod + [(AD, boson)]) for c, prod in qr.qplus]
        qminus = [(c, prod + [(A, boson)]) for c, prod in qr.qminus]
        q0 = [(0.5 * c, p) for c, p in qr.q0] + [(0.5, [(N, boson)])]
        shift = 0.5 * qr.constant_shifts.get("q0", 0.0)
    else:
        qplus = [(c, prod + [(A, boson)]) for c, prod in qr.qplus]
        qminus = [(c, prod + [(AD, boson)]) for c, prod in qr.qminus]
        q0 = [(0.5 * c, p) for c, p in qr.q0] + [(-0.5, [(N, boson)])]
        shift = 0.5 * qr.constant_shifts.get("q0", 0.0)
    centrals = dict(qr.centrals)
    centrals["boson"] = [(1.0, [(N, boson)])]
    real = Realization(
        name=cls.value, q0=q0, qplus=qplus, qminus=qminus, centrals=centrals,
        constant_shifts={"q0": shift, **{k: v for k, v in qr.constant_shifts.items() if k != "q0"}},
    )
    q0op, qp, qm, cent = realize(space, real)

    a, l = qlabel.spin_or_bargmann, qlabel.l
    cons = [cent["diff"], cent["ell4"]]
    vals = [float(2 * a - 1), float(4 * l - 1)]
    # fix K = (Q0 -/+ N_b)/2 through the boson occupation of the lowest state
    kay_terms = [(0.5 * c, p) for c, p in qr.q0]
    kay_terms.append(((-0.5 if plus_pairing else 0.5), [(N, boson)]))
    kay = _eval_terms(space, kay_terms, 0.5 * qr.constant_shifts.get("q0", 0.0))
    cons.append(kay)
    vals.append(float(label["k"]))
    sub = constrained_subspace(space, cons, vals, tol=1e-9, order_by=q0op)
    return compare(rep, (q0op, qp, qm), sub, tol)
