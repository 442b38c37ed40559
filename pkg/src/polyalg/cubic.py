"""The ten cubic deformation classes and the Higgs-algebra reduction.

Six classes pair two linear algebras (su(1,1) x su(1,1), su(2) x su(2),
su(2) x su(1,1)); four pair a quadratic class with a boson.  Amplitudes are
the products of the component ladder amplitudes on the constrained tensor
subspace, dimensions come from the first vanishing amplitude (the C+C- >= 0
positivity census), and structure polynomials are derived from the defining
operator products.  The printed brackets for several cases carry sign and
factor errors; closure tests against the built matrices arbitrate.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Union

from .core import LabelError, LadderRep
from .polynomial import Polynomial, antidifference
from . import quadratic
from .quadratic import INFINITE, QuadLabel, QuadraticClass


class CubicClass(enum.Enum):
    CMINUS_11_11 = "cminus-11-11"
    CPLUS_11_11 = "cplus-11-11"
    CMINUS_2_2 = "cminus-2-2"
    CPLUS_2_2 = "cplus-2-2"
    CMINUS_2_11 = "cminus-2-11"
    CPLUS_2_11 = "cplus-2-11"
    CPLUS_QM1_H = "cplus-qminus1-h"
    CMINUS_QM1_H = "cminus-qminus1-h"
    CPLUS_QP1_H = "cplus-qplus1-h"
    CMINUS_QP1_H = "cminus-qplus1-h"

    @staticmethod
    def parse(text: str) -> "CubicClass":
        key = (
            text.strip()
            .lower()
            .replace("(", "-")
            .replace(")", "")
            .replace(",", "-")
            .replace("_", "-")
            .replace("--", "-")
            .strip("-")
        )
        for member in CubicClass:
            if key == member.value:
                return member
        raise LabelError(f"unknown cubic class {text!r}")

    @property
    def quad_based(self) -> bool:
        return self in (
            CubicClass.CPLUS_QM1_H,
            CubicClass.CMINUS_QM1_H,
            CubicClass.CPLUS_QP1_H,
            CubicClass.CMINUS_QP1_H,
        )


@dataclass(frozen=True)
class CubicLabel:
    """Per-class parameter collection.

    keys: (k1, k2, k) for (11,11); (j1, j2, k) for (2,2); (j, k1, k) for
    (2,11); (k1, l, k) for the quadratic-boson classes.
    """

    params: Dict[str, Fraction]

    def __post_init__(self):
        object.__setattr__(
            self, "params", {key: Fraction(v) for key, v in self.params.items()}
        )

    def __getitem__(self, key: str) -> Fraction:
        try:
            return self.params[key]
        except KeyError:
            raise LabelError(f"missing label parameter {key!r}") from None


def _is_nonneg_int(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 0


def _quad_class_of(cls: CubicClass) -> QuadraticClass:
    if cls in (CubicClass.CPLUS_QM1_H, CubicClass.CMINUS_QM1_H):
        return QuadraticClass.QMINUS11
    return QuadraticClass.QPLUS11


def _fock_offset(cls: CubicClass, label: CubicLabel) -> Fraction:
    """Boson occupation paired with the lowest quadratic-ladder state."""
    qcls = _quad_class_of(cls)
    qlabel = QuadLabel(label["k1"], label["l"])
    p0 = quadratic.n0_offset(qcls, qlabel)
    k = label["k"]
    if cls in (CubicClass.CPLUS_QM1_H, CubicClass.CPLUS_QP1_H):
        return p0 - 2 * k  # C0 = (Q0+N)/2, K = (Q0-N)/2
    return 2 * k - p0  # C0 = (Q0-N)/2, K = (Q0+N)/2


def validate(cls: CubicClass, label: CubicLabel) -> None:
    if cls is CubicClass.CMINUS_11_11 or cls is CubicClass.CPLUS_11_11:
        k1, k2, k = label["k1"], label["k2"], label["k"]
        if k1 <= 0 or k2 <= 0:
            raise LabelError("Bargmann indices k1, k2 must be positive")
        if cls is CubicClass.CMINUS_11_11:
            if 2 * k - k1 - k2 < 0 and 2 * k + k2 - k1 - 1 < 0:
                raise LabelError(
                    f"empty ladder for C-(11,11) with k1={k1}, k2={k2}, k={k}"
                )
        else:
            if not _is_nonneg_int(2 * k + k1 - k2):
                raise LabelError(
                    f"C+(11,11) needs 2k+k1-k2 a nonnegative integer, got "
                    f"k1={k1}, k2={k2}, k={k}"
                )
    elif cls is CubicClass.CMINUS_2_2 or cls is CubicClass.CPLUS_2_2:
        j1, j2, k = label["j1"], label["j2"], label["k"]
        for j in (j1, j2):
            if j < 0 or (2 * j).denominator != 1:
                raise LabelError(f"j1, j2 must be nonnegative half-integers, got {j}")
        if (j1 + j2 + 2 * k).denominator != 1:
            raise LabelError("2k must be compatible with the occupation lattice")
        m_lo = _m_lo(cls, label)
        m_hi = (
            min(2 * j1, 2 * k + j1 + j2)
            if cls is CubicClass.CMINUS_2_2
            else min(2 * j1, j1 + j2 + 2 * k)
        )
        if m_lo > m_hi:
            raise LabelError(
                f"empty constrained subspace for {cls.value} with {label.params}"
            )
    elif cls is CubicClass.CMINUS_2_11:
        j, k1, k = label["j"], label["k1"], label["k"]
        if j < 0 or (2 * j).denominator != 1 or k1 <= 0:
            raise LabelError("C-(2,11) needs half-integer j >= 0 and k1 > 0")
        # Termination may come from the su(2) side (dim 2j+1) or, when the
        # su(1,1) factor vanishes on the lattice first, from 2k-k1-j being
        # an integer; the amplitude census arbitrates either way.
        if 2 * k + j - k1 < 0:
            raise LabelError(
                f"empty ladder for C-(2,11) with j={j}, k1={k1}, k={k}"
            )
    elif cls is CubicClass.CPLUS_2_11:
        j, k1, k = label["j"], label["k1"], label["k"]
        if j < 0 or (2 * j).denominator != 1 or k1 <= 0:
            raise LabelError("C+(2,11) needs half-integer j >= 0 and k1 > 0")
        if not _is_nonneg_int(j - 2 * k - k1):
            raise LabelError(
                f"C+(2,11) needs j-2k-k1 a nonnegative integer, got j={j}, "
                f"k1={k1}, k={k}"
            )
        if j + 2 * k + k1 < 0:
            raise LabelError(
                f"C+(2,11) needs 2k+k1 >= -j, got j={j}, k1={k1}, k={k}"
            )
    else:
        qcls = _quad_class_of(cls)
        quadratic.validate(qcls, QuadLabel(label["k1"], label["l"]))
        m0 = _fock_offset(cls, label)
        if cls is CubicClass.CPLUS_QP1_H:
            if m0.denominator != 1:
                raise LabelError(
                    f"C+(q+1,h) needs k1-l-2k an integer, got {m0}"
                )
        elif not _is_nonneg_int(m0):
            raise LabelError(
                f"{cls.value} needs the boson offset {m0} to be a nonnegative integer"
            )


def _raise_sq(cls: CubicClass, label: CubicLabel, n: int) -> Fraction:
    """Exact squared raising amplitude between ladder states n, n+1."""
    n = Fraction(n)
    if cls is CubicClass.CMINUS_11_11:
        k1, k2, k = label["k1"], label["k2"], label["k"]
        return (n + 2 * k1) * (n + 1) * (2 * k - k1 - k2 - n) * (2 * k + k2 - k1 - 1 - n)
    if cls is CubicClass.CPLUS_11_11:
        k1, k2, k = label["k1"], label["k2"], label["k"]
        off = 2 * k + k1 - k2
        return (n + 1) * (n + 2 * k1) * (n + off + 1) * (n + off + 2 * k2)
    if cls is CubicClass.CMINUS_2_2:
        j1, j2, k = label["j1"], label["j2"], label["k"]
        m = _m_lo(cls, label) + n
        p = 2 * k + j1 + j2 - m
        return (m + 1) * (2 * j1 - m) * p * (2 * j2 + 1 - p)
    if cls is CubicClass.CPLUS_2_2:
        j1, j2, k = label["j1"], label["j2"], label["k"]
        m = _m_lo(cls, label) + n
        p = m - j1 + j2 - 2 * k
        return (m + 1) * (2 * j1 - m) * (p + 1) * (2 * j2 - p)
    if cls is CubicClass.CMINUS_2_11:
        j, k1, k = label["j"], label["k1"], label["k"]
        m = -j + n  # su(2) magnetic quantum number
        return (j - m) * (j + m + 1) * (2 * k - k1 - m) * (2 * k + k1 - 1 - m)
    if cls is CubicClass.CPLUS_2_11:
        j, k1, k = label["j"], label["k1"], label["k"]
        return (j - 2 * k - k1 - n) * (j + 2 * k + k1 + 1 + n) * (n + 1) * (2 * k1 + n)
    # quadratic (x) boson classes
    qcls = _quad_class_of(cls)
    qlabel = QuadLabel(label["k1"], label["l"])
    m0 = _fock_offset(cls, label)
    if cls in (CubicClass.CPLUS_QM1_H, CubicClass.CPLUS_QP1_H):
        base = max(0, int(-m0)) if m0 < 0 else 0
        return quadratic._raise_sq(qcls, qlabel, int(n) + base) * (m0 + base + n + 1)
    return quadratic._raise_sq(qcls, qlabel, int(n)) * (m0 - n)


def _m_lo(cls: CubicClass, label: CubicLabel) -> Fraction:
    """Lowest J-occupation for the (2,2) classes."""
    j1, j2, k = label["j1"], label["j2"], label["k"]
    if cls is CubicClass.CMINUS_2_2:
        return max(Fraction(0), 2 * k + j1 - j2)
    return max(Fraction(0), j1 - j2 + 2 * k)


def n0_offset(cls: CubicClass, label: CubicLabel) -> Fraction:
    """C0 eigenvalue of the lowest ladder state."""
    if cls is CubicClass.CMINUS_11_11:
        return label["k1"] - label["k"]
    if cls is CubicClass.CPLUS_11_11:
        return label["k1"] + label["k"]
    if cls in (CubicClass.CMINUS_2_2, CubicClass.CPLUS_2_2):
        return _m_lo(cls, label) - label["j1"] - label["k"]
    if cls is CubicClass.CMINUS_2_11:
        return -label["j"] - label["k"]
    if cls is CubicClass.CPLUS_2_11:
        return label["k1"] + label["k"]
    qcls = _quad_class_of(cls)
    p0 = quadratic.n0_offset(qcls, QuadLabel(label["k1"], label["l"]))
    m0 = _fock_offset(cls, label)
    base = max(0, int(-m0)) if (cls is CubicClass.CPLUS_QP1_H and m0 < 0) else 0
    return p0 + base - label["k"]


_MAX_CENSUS = 100_000


def dimension_cubic(cls: CubicClass, label: CubicLabel) -> Union[int, float]:
    """Dimension from the positivity census: first n with amplitude^2 <= 0.

    Agrees with the published closed rules where those are themselves
    consistent (2k-k1-k2+1, j-2k-k1+1, the C-(2,11) two-branch rule, the
    2k+l-k1+1 rule for the quadratic-boson minus classes).
    """
    validate(cls, label)
    if cls in (CubicClass.CPLUS_11_11, CubicClass.CPLUS_QP1_H):
        return INFINITE
    if cls is CubicClass.CPLUS_QM1_H:
        qd = quadratic.dimension(QuadraticClass.QMINUS11, QuadLabel(label["k1"], label["l"]))
        return qd
    n = 0
    while n < _MAX_CENSUS:
        sq = _raise_sq(cls, label, n)
        if sq == 0:
            return n + 1
        if sq < 0:
            raise LabelError(
                f"negative amplitude^2 {sq} at step {n} before termination: "
                f"label {label.params} invalid for {cls.value}"
            )
        n += 1
    raise LabelError("representation did not terminate (census bound exceeded)")


def build_cubic(
    cls: CubicClass, label: CubicLabel, cutoff: Optional[int] = None
) -> LadderRep:
    validate(cls, label)
    dim = dimension_cubic(cls, label)
    infinite = dim is INFINITE
    if infinite:
        if cutoff is None:
            raise LabelError(f"{cls.value} is infinite dimensional; a cutoff is required")
        dim = int(cutoff)
    elif cutoff is not None and cutoff < dim:
        raise LabelError(f"cutoff {cutoff} below the representation dimension {dim}")
    else:
        dim = int(dim)

    amps = []
    for n in range(dim - 1):
        sq = _raise_sq(cls, label, n)
        if sq < 0:
            raise LabelError(
                f"negative radicand {sq} at step {n}: label {label.params} is "
                f"outside the unitary regime of {cls.value}"
            )
        amps.append(math.sqrt(float(sq)))
    p0 = n0_offset(cls, label)
    return LadderRep(
        dim=dim,
        labels={"class": cls.value, **label.params},
        n0_diag=tuple(float(p0 + n) for n in range(dim)),
        raise_amps=tuple(amps),
        lower_amps=tuple(amps),
        truncated=infinite,
    )


def structure_polynomial_cubic(cls: CubicClass, label: CubicLabel) -> Polynomial:
    """Exact f with [C+,C-] = f(C0); mu fixed to 1.

    Derived from the defining products rather than the printed brackets
    (several of which are malformed); `fit_bracket` in `compose` provides
    the numerical confirmation path.
    """
    validate(cls, label)
    x = Polynomial([0, 1])
    if cls in (CubicClass.CMINUS_11_11, CubicClass.CPLUS_11_11):
        k1, k2, k = label["k1"], label["k2"], label["k"]
        c1, c2 = k1 * (1 - k1), k2 * (1 - k2)
        sigma = 2 * (c1 + c2)
        lam = 2 * (c1 - c2)
        kappa = k if cls is CubicClass.CMINUS_11_11 else -k
        return Polynomial([lam * kappa, 4 * kappa**2 - sigma, 0, -4])
    if cls in (CubicClass.CMINUS_2_2, CubicClass.CPLUS_2_2):
        j1, j2, k = label["j1"], label["j2"], label["k"]
        jj1, jj2 = j1 * (j1 + 1), j2 * (j2 + 1)
        sigma = 2 * (jj1 + jj2)
        return Polynomial([2 * (jj2 - jj1) * k, 4 * k**2 + sigma, 0, -4])
    if cls in (CubicClass.CMINUS_2_11, CubicClass.CPLUS_2_11):
        j, k1, k = label["j"], label["k1"], label["k"]
        jj, c1 = j * (j + 1), k1 * (1 - k1)
        return Polynomial([2 * (jj + c1) * k, -(4 * k**2 + 2 * (jj - c1)), 0, 4])
    # quadratic (x) boson: [C+,C-] = fq(Q0) N + g(Q0) - Cq   ("+" pairing)
    #                      [C+,C-] = fq(Q0) N + Cq - g(Q0-1) ("-" pairing)
    # with Q0 = C0 + K, N = +/-(C0 - K) on the constrained subspace.
    qcls = _quad_class_of(cls)
    qlabel = QuadLabel(label["k1"], label["l"])
    k = label["k"]
    fq = quadratic.structure_polynomial(qcls, qlabel)
    gq = antidifference(fq)
    cq = quadratic.casimir_value(qcls, qlabel)
    fq_at = fq.shift(k)  # fq(Q0) with Q0 = C0 + K
    if cls in (CubicClass.CPLUS_QM1_H, CubicClass.CPLUS_QP1_H):
        return fq_at * (x - k) + gq.shift(k) - cq
    return fq_at * (k - x) + cq - gq.shift(k - 1)


def higgs_reduction(label: CubicLabel) -> tuple:
    """Reduce C-(11,11) with k1 == k2 to the odd bracket h*x^3 + 2a*x.

    Returns (h, a) with h = -4 and a = 2k^2 - (C1 + C2) = 2k^2 - 2k1(1-k1).
    The printed reduction drops the factor 2 on the Casimir term; the value
    returned here is the one the structure polynomial actually reduces to.
    """
    k1, k2, k = label["k1"], label["k2"], label["k"]
    if k1 != k2:
        raise LabelError(f"Higgs reduction requires k1 == k2, got {k1} != {k2}")
    f = structure_polynomial_cubic(CubicClass.CMINUS_11_11, label)
    h = Fraction(-4)
    a = 2 * k**2 - 2 * k1 * (1 - k1)
    assert f == Polynomial([0, 2 * a, 0, h])
    return h, a


def printed_dimension_rules(cls: CubicClass, label: CubicLabel) -> Optional[Fraction]:
    """Published closed dimension where one is stated; None otherwise."""
    if cls is CubicClass.CMINUS_11_11:
        k1, k2, k = label["k1"], label["k2"], label["k"]
        if k2 >= Fraction(1, 2):
            return 2 * k - k1 - k2 + 1
        return 2 * k + k2 - k1
    if cls is CubicClass.CMINUS_2_11:
        j, k1, k = label["j"], label["k1"], label["k"]
        return 2 * k + j - k1 + 1 if j > 2 * k - k1 else 2 * j + 1
    if cls is CubicClass.CPLUS_2_11:
        j, k1, k = label["j"], label["k1"], label["k"]
        return j - 2 * k - k1 + 1
    if cls in (CubicClass.CMINUS_QM1_H, CubicClass.CMINUS_QP1_H):
        k1, l, k = label["k1"], label["l"], label["k"]
        if cls is CubicClass.CMINUS_QP1_H:
            return 2 * k - k1 + l + 1
        return min(2 * l - k1, 2 * k - k1 + l) + 1
    return None
