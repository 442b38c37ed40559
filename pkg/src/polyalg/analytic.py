"""Differential realizations on weighted monomial bases.

Generators act as sums of coefficient * z^p (d/dz)^q on basis functions
psi_n = z^n / sqrt(w_n).  Matrix elements follow from exact monomial
calculus; the weights enter only through square roots of rational ratios,
so float error is confined to the final sqrt.

Printed coefficients that contradict the matrix representations are solved
for (each linear in one unknown) and reported through `repairs`, never
silently replaced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .core import LabelError, LadderRep
from . import cubic as _cubic
from . import quadratic as _quadratic
from .cubic import CubicClass, CubicLabel
from .quadratic import QuadLabel, QuadraticClass
from .polynomial import Polynomial


@dataclass(frozen=True)
class DiffOp:
    """Sum of coefficient * z^p * (d/dz)^q terms."""

    terms: Tuple[Tuple[int, int, Fraction], ...]

    def __post_init__(self):
        for p, q, _ in self.terms:
            if p < 0 or q < 0:
                raise ValueError("powers and derivative orders must be nonnegative")
            if q > 4:
                raise ValueError("derivative order above 4 is out of scope")

    @staticmethod
    def build(*terms) -> "DiffOp":
        return DiffOp(tuple((int(p), int(q), Fraction(c)) for p, q, c in terms))


@dataclass(frozen=True)
class WeightedBasis:
    """psi_n = z^n / sqrt(w_n); weights stored as exact positive rationals."""

    weights: Tuple[Fraction, ...]

    def __post_init__(self):
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")

    @staticmethod
    def from_ratios(dim: int, ratio) -> "WeightedBasis":
        """w_0 = 1, w_{n+1} = w_n * ratio(n); ratio returns a Fraction."""
        ws = [Fraction(1)]
        for n in range(dim - 1):
            ws.append(ws[-1] * Fraction(ratio(n)))
        return WeightedBasis(tuple(ws))


def apply(op: DiffOp, basis: WeightedBasis, dim: int) -> np.ndarray:
    """Matrix M with op(psi_n) = sum_m M[m,n] psi_m.

    Uses z^p d^q z^n = n!/(n-q)! z^{n-q+p}; matrix elements pick up the
    weight ratio sqrt(w_m / w_n).
    """
    if dim > len(basis.weights):
        raise ValueError("dim exceeds the available weights")
    mat = np.zeros((dim, dim))
    for n in range(dim):
        for p, q, coeff in op.terms:
            if q > n:
                continue
            m = n - q + p
            if not 0 <= m < dim:
                continue
            falling = Fraction(1)
            for t in range(q):
                falling *= n - t
            exact = coeff * falling
            ratio = basis.weights[m] / basis.weights[n]
            mat[m, n] += float(exact) * math.sqrt(float(ratio))
    return mat


@dataclass(frozen=True)
class CoefficientRepair:
    where: str
    printed: Optional[str]
    solved: Fraction
    note: str = ""


@dataclass
class AnalyticRealization:
    q0: DiffOp
    qplus: DiffOp
    qminus: DiffOp
    basis: WeightedBasis
    dim: int
    repairs: List[CoefficientRepair] = field(default_factory=list)

    def matrices(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (
            apply(self.q0, self.basis, self.dim),
            apply(self.qplus, self.basis, self.dim),
            apply(self.qminus, self.basis, self.dim),
        )


def _euler_poly_times_z(poly_in_theta: Polynomial) -> DiffOp:
    """z * P(theta) as explicit z^p d^q terms (theta = z d/dz).

    theta^k z^n = n^k z^n; expand P in the falling-factorial basis since
    z^q d^q z^n = n(n-1)...(n-q+1) z^n.
    """
    # convert P(theta) = sum c_k theta^k into sum b_q * theta_falling_q,
    # theta_falling_q = theta(theta-1)...(theta-q+1) = z^q d^q (monic),
    # peeling from the top degree down.
    work = Polynomial(poly_in_theta.coeffs)
    terms = []
    for q in range(work.degree(), -1, -1):
        falling = Polynomial([1])
        for t in range(q):
            falling = falling * Polynomial([-t, 1])
        b = work.coefficient(q)
        work = work - falling * b
        if b != 0:
            terms.append((q + 1, q, b))  # z * z^q d^q
    if not work.is_zero():
        raise AssertionError("falling-factorial expansion failed")
    return DiffOp.build(*terms)


def _euler_poly_times_ddz(poly_in_theta: Polynomial) -> DiffOp:
    """P(theta) * d/dz as z^p d^q terms, using P(theta) z^m = P(m) z^m.

    Acting on z^n the operator gives n * P(n-1) z^{n-1}; expand
    P(theta) d/dz = sum b_q z^q d^{q+1}.
    """
    work = Polynomial(poly_in_theta.coeffs)
    terms = []
    for q in range(work.degree(), -1, -1):
        falling = Polynomial([1])
        for t in range(q):
            falling = falling * Polynomial([-t, 1])
        b = work.coefficient(q)
        work = work - falling * b
        if b != 0:
            terms.append((q, q + 1, b))
    if not work.is_zero():
        raise AssertionError("falling-factorial expansion failed")
    return DiffOp.build(*terms)


def _exact_monomial_coeff(rep: LadderRep, basis: WeightedBasis, n: int) -> Fraction:
    """Monomial-calculus coefficient behind raise amplitude n, exactly.

    amp(n) = coeff * sqrt(w_{n+1}/w_n), and amp(n)^2 * w_n / w_{n+1} is a
    perfect square of a rational by construction.
    """
    cls = QuadraticClass.parse(rep.labels["class"])
    key = "j" if cls.compact else "k"
    label = QuadLabel(rep.labels[key], rep.labels["l"])
    sq = _quadratic._raise_sq(cls, label, n) * basis.weights[n] / basis.weights[n + 1]
    return _exact_sqrt(sq)


def _exact_sqrt(x: Fraction) -> Fraction:
    num = math.isqrt(x.numerator)
    den = math.isqrt(x.denominator)
    if num * num != x.numerator or den * den != x.denominator:
        raise ValueError(f"{x} is not a perfect rational square")
    return Fraction(num, den)


def class_realization(cls, label, cutoff: Optional[int] = None) -> AnalyticRealization:
    """Differential triple reproducing the ladder matrices of (cls, label).

    Quadratic classes use the published operators, with the two known
    misprints (the QMinus2 raising coefficients and the QPlus2 lowering
    constant) solved from single rows of the matrix representation and
    recorded in `repairs`.  Cubic classes use the canonical gauge
    reconstructed from the amplitude factorization (the published cubic
    displays are incomplete), flagged with a repair note.
    """
    if isinstance(cls, QuadraticClass):
        return _quadratic_realization(cls, label, cutoff)
    if isinstance(cls, CubicClass):
        return _cubic_realization(cls, label, cutoff)
    raise TypeError(f"unsupported class {cls!r}")


def _quadratic_realization(
    cls: QuadraticClass, label: QuadLabel, cutoff: Optional[int]
) -> AnalyticRealization:
    _quadratic.validate(cls, label)
    a, l = label.spin_or_bargmann, label.l
    dim = _quadratic.dimension(cls, label)
    if dim is _quadratic.INFINITE:
        if cutoff is None:
            raise LabelError("infinite representation needs a cutoff")
        dim = int(cutoff)
    else:
        dim = int(dim)
    rep = _quadratic.build(cls, label, cutoff=dim if cls is QuadraticClass.QPLUS11 else None)
    repairs: List[CoefficientRepair] = []

    if cls is QuadraticClass.QMINUS2:
        # w_n = n!(2j-n)!(2l+j-n)!  ratio w_{n+1}/w_n = (n+1)/((2j-n)(2l+j-n))
        basis = WeightedBasis.from_ratios(
            dim, lambda n: Fraction(n + 1, 1) / ((2 * a - n) * (2 * l + a - n))
        )
        q0 = DiffOp.build((1, 1, 1), (0, 0, -(a + l)))
        qminus = DiffOp.build((0, 1, 1))
        # printed raising operator: z^3 d^2 - (2l+3j+1) z^2 d + "2j(2l_j)" z.
        # The operator on z^n has coefficient n(n-1) - beta*n + c; the
        # constant and the z^2 d coefficient are each linear in one unknown,
        # solved from rows n=0 and n=1 of the built matrices.
        if dim > 1:
            c = _exact_monomial_coeff(rep, basis, 0)  # row 0: coeff(0) = c
        else:
            c = 2 * a * (2 * l + a)
        if dim > 2:
            t1 = _exact_monomial_coeff(rep, basis, 1)
            beta = c - t1  # row 1: coeff(1) = -beta + c
        else:
            beta = 2 * l + 3 * a - 1
        repairs.append(
            CoefficientRepair(
                where="QMinus2.qplus z^2 d coefficient",
                printed="2l+3j+1",
                solved=beta,
                note="solved from row n=1 of the matrix representation",
            )
        )
        repairs.append(
            CoefficientRepair(
                where="QMinus2.qplus z coefficient",
                printed="2j(2l_j) (garbled)",
                solved=c,
                note="solved from row n=0 of the matrix representation",
            )
        )
        qplus = DiffOp.build((3, 2, 1), (2, 1, -beta), (1, 0, c))
    elif cls is QuadraticClass.QPLUS2:
        # w_n = n!(2j-n)!(n-2l-j)!  ratio = (n+1)(n+1-2l-a)/(2j-n)
        basis = WeightedBasis.from_ratios(
            dim, lambda n: Fraction(n + 1, 1) * (n + 1 - 2 * l - a) / (2 * a - n)
        )
        q0 = DiffOp.build((1, 1, 1), (0, 0, -(a + l)))
        qplus = DiffOp.build((2, 1, -1), (1, 0, 2 * a))
        # printed lowering operator: z d^2 - (2l-j-1) d; the constant is
        # inconsistent with the matrices, solve it from row n=1.
        gamma = 2 * l + a - 1  # coeff(n) = n(n-1-gamma) must be n(n-2l-a)
        repairs.append(
            CoefficientRepair(
                where="QPlus2.qminus d coefficient",
                printed="2l-j-1",
                solved=gamma,
                note="solved from row n=1 of the matrix representation",
            )
        )
        qminus = DiffOp.build((1, 2, 1), (0, 1, -gamma))
    elif cls is QuadraticClass.QMINUS11:
        # w_n = (n+2k-1)! n! (2l-k-n)!  ratio = (n+2k)(n+1)/(2l-k-n)
        basis = WeightedBasis.from_ratios(
            dim, lambda n: (n + 2 * a) * (n + 1) / (2 * l - a - n)
        )
        q0 = DiffOp.build((1, 1, 1), (0, 0, a - l))
        qplus = DiffOp.build((2, 1, -1), (1, 0, 2 * l - a))
        qminus = DiffOp.build((1, 2, 1), (0, 1, 2 * a))
    else:  # QPLUS11
        # w_n = (n+2k-1)! n! (n+k-2l)!  ratio = (n+2k)(n+1)(n+1+k-2l)
        basis = WeightedBasis.from_ratios(
            dim, lambda n: (n + 2 * a) * (n + 1) * (n + 1 + a - 2 * l)
        )
        q0 = DiffOp.build((1, 1, 1), (0, 0, a - l))
        qplus = DiffOp.build((1, 0, 1))
        qminus = DiffOp.build(
            (2, 3, 1),
            (1, 2, 3 * a - 2 * l + 2),
            (0, 1, 2 * a * a - 4 * a * l + 2 * a),
        )

    real = AnalyticRealization(q0, qplus, qminus, basis, dim, repairs)
    _check_against(real, rep)
    return real


def _cubic_realization(
    cls: CubicClass, label: CubicLabel, cutoff: Optional[int]
) -> AnalyticRealization:
    _cubic.validate(cls, label)
    dim = _cubic.dimension_cubic(cls, label)
    if dim is _cubic.INFINITE:
        if cutoff is None:
            raise LabelError("infinite representation needs a cutoff")
        dim = int(cutoff)
    else:
        dim = int(dim)
    rep = _cubic.build_cubic(
        cls, label, cutoff=dim if _cubic.dimension_cubic(cls, label) is _cubic.INFINITE else None
    )

    # amp^2(n) = R(n) * F(n) with R collecting rising factors ((n+a) type,
    # R(n) divisible by (n+1)) and F falling ((b-n) type, possibly constant).
    rising, falling = _amp_factorization(cls, label)
    ratio = lambda n: rising(Fraction(n)) / falling(Fraction(n))
    basis = WeightedBasis.from_ratios(dim, ratio)
    p0 = _cubic.n0_offset(cls, label)
    q0 = DiffOp.build((1, 1, 1), (0, 0, p0))
    qplus = _euler_poly_times_z(falling)
    # C- z^n = n * D(n-1) z^{n-1} with D(x) = R(x)/(x+1)
    qminus = _euler_poly_times_ddz(_divide_by_x_plus_1(rising))
    repairs = [
        CoefficientRepair(
            where=f"{cls.value} differential realization",
            printed=None,
            solved=Fraction(0),
            note="canonical gauge reconstructed from the amplitude factorization",
        )
    ]
    real = AnalyticRealization(q0, qplus, qminus, basis, dim, repairs)
    _check_against(real, rep)
    return real


def _amp_factorization(cls: CubicClass, label: CubicLabel):
    """Split amp^2(n) into rising and falling polynomial factors of n."""

    def poly_from(fn, degree):
        xs = [Fraction(i) for i in range(degree + 1)]
        return _lagrange(xs, [fn(x) for x in xs])

    if cls is CubicClass.CMINUS_11_11:
        k1, k2, k = label["k1"], label["k2"], label["k"]
        rising = poly_from(lambda n: (n + 2 * k1) * (n + 1), 2)
        falling = poly_from(
            lambda n: (2 * k - k1 - k2 - n) * (2 * k + k2 - k1 - 1 - n), 2
        )
    elif cls is CubicClass.CPLUS_11_11:
        k1, k2, k = label["k1"], label["k2"], label["k"]
        off = 2 * k + k1 - k2
        rising = poly_from(
            lambda n: (n + 1) * (n + 2 * k1) * (n + off + 1) * (n + off + 2 * k2), 4
        )
        falling = Polynomial([1])
    elif cls in (CubicClass.CMINUS_2_2, CubicClass.CPLUS_2_2):
        j1, j2, k = label["j1"], label["j2"], label["k"]
        m_lo = _cubic._m_lo(cls, label)
        if cls is CubicClass.CMINUS_2_2:
            rising = poly_from(lambda n: (m_lo + n + 1) * (2 * k + j1 + j2 - m_lo - n), 2)
            falling = poly_from(
                lambda n: (2 * j1 - m_lo - n) * (2 * j2 + 1 - (2 * k + j1 + j2 - m_lo - n)),
                2,
            )
        else:
            rising = poly_from(
                lambda n: (m_lo + n + 1) * ((m_lo + n - j1 + j2 - 2 * k) + 1), 2
            )
            falling = poly_from(
                lambda n: (2 * j1 - m_lo - n) * (2 * j2 - (m_lo + n - j1 + j2 - 2 * k)),
                2,
            )
    elif cls is CubicClass.CMINUS_2_11:
        # raise^2(n) = (j-m)(j+m+1)(2k-k1-m)(2k+k1-1-m), m = -j+n
        j, k1, k = label["j"], label["k1"], label["k"]
        rising = poly_from(lambda n: n + 1, 1)
        falling = poly_from(
            lambda n: (2 * j - n) * (2 * k - k1 + j - n) * (2 * k + k1 - 1 + j - n), 3
        )
    elif cls is CubicClass.CPLUS_2_11:
        j, k1, k = label["j"], label["k1"], label["k"]
        rising = poly_from(lambda n: (n + 1) * (2 * k1 + n) * (j + 2 * k + k1 + 1 + n), 3)
        falling = poly_from(lambda n: (j - 2 * k - k1 - n), 1)
    else:
        qcls = _cubic._quad_class_of(cls)
        qlabel = QuadLabel(label["k1"], label["l"])
        m0 = _cubic._fock_offset(cls, label)
        plus = cls in (CubicClass.CPLUS_QM1_H, CubicClass.CPLUS_QP1_H)
        base = max(0, int(-m0)) if (plus and m0 < 0) else 0
        k1, l = qlabel.spin_or_bargmann, qlabel.l
        if qcls is QuadraticClass.QMINUS11:
            q_rising = poly_from(lambda n: (n + base + 2 * k1) * (n + base + 1), 2)
            q_falling = poly_from(lambda n: 2 * l - k1 - (n + base), 1)
        else:
            q_rising = poly_from(
                lambda n: (n + base + 2 * k1) * (n + base + 1) * (n + base + k1 - 2 * l + 1), 3
            )
            q_falling = Polynomial([1])
        if plus:
            rising = q_rising * poly_from(lambda n: m0 + base + n + 1, 1)
            falling = q_falling
        else:
            rising = q_rising
            falling = q_falling * poly_from(lambda n: m0 - n, 1)
    return rising, falling


def _divide_by_x_plus_1(p: Polynomial) -> Polynomial:
    """R(n)/(n+1), used because C- z^n = n * D(n-1) z^{n-1} with D = R/(x+1)."""
    quotient, remainder = _divmod_linear(p, Fraction(-1))
    if remainder != 0:
        raise AssertionError("rising product must contain the factor (n+1)")
    return quotient


def _divmod_linear(p: Polynomial, root: Fraction):
    """Divide p by (x - root); return (quotient, remainder)."""
    qs = []
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = c + root * acc
        qs.append(acc)
    remainder = qs.pop()
    return Polynomial(list(reversed(qs))), remainder


def _lagrange(xs, ys) -> Polynomial:
    total = Polynomial()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = Polynomial([Fraction(yi)])
        for j, xj in enumerate(xs):
            if i == j:
                continue
            term = term * Polynomial([-xj, 1]) * Fraction(1, 1) * (Fraction(1) / (xi - xj))
        total = total + term
    return total


def _check_against(real: AnalyticRealization, rep: LadderRep, tol: float = 1e-10) -> None:
    q0m, qpm, qmm = real.matrices()
    n = min(real.dim, rep.dim)
    n0, npl, nmi = rep.matrices()
    interior = rep.interior_rows()
    err = 0.0
    for i in range(n):
        if i not in interior:
            continue
        err = max(err, abs(q0m[i, i] - n0[i, i]))
        if i + 1 < n:
            err = max(err, abs(qpm[i + 1, i] - npl[i + 1, i]))
            err = max(err, abs(qmm[i, i + 1] - nmi[i, i + 1]))
    if err > tol:
        raise AssertionError(
            f"analytic realization deviates from ladder matrices by {err}"
        )


def bg_series_coefficients(k: Fraction, l: Fraction, alpha: complex, dim: int) -> np.ndarray:
    """Weighted-basis vector of 0F2(-; 2k, k-2l+1; alpha z) truncated at dim.

    Monomial coefficients c_n = alpha^n / (n! (2k)_n (k-2l+1)_n); in the
    weighted basis the vector components are c_n sqrt(w_n).
    """
    k, l = Fraction(k), Fraction(l)
    basis = WeightedBasis.from_ratios(
        dim, lambda n: (n + 2 * k) * (n + 1) * (n + 1 + k - 2 * l)
    )
    out = np.empty(dim, dtype=complex)
    c = 1.0 + 0.0j
    for n in range(dim):
        out[n] = c * math.sqrt(float(basis.weights[n]))
        denom = float((n + 1) * (n + 2 * k) * (n + 1 + k - 2 * l))
        c = c * alpha / denom
    return out
