"""The four quadratic deformation classes built from su(2)/su(1,1) and a boson.

Class tags follow the sign convention of the diagonal combination: the
minus classes pair the linear algebra's raising with the boson lowering
(Q+ = J+a or K+a), the plus classes with the boson raising.

Structure polynomials are derived from the defining products (and confirmed
against the matrix commutators); where the source text's printed constant
differs, `structure_discrepancies` reports it rather than silently patching.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .core import LabelError, LadderRep
from .polynomial import Polynomial, antidifference

INFINITE = math.inf


class QuadraticClass(enum.Enum):
    QMINUS2 = "qminus2"
    QPLUS2 = "qplus2"
    QMINUS11 = "qminus11"
    QPLUS11 = "qplus11"

    @property
    def compact(self) -> bool:
        return self in (QuadraticClass.QMINUS2, QuadraticClass.QPLUS2)

    @staticmethod
    def parse(text: str) -> "QuadraticClass":
        key = text.strip().lower().replace("-", "").replace("_", "").replace("(", "").replace(")", "").replace(",", "")
        aliases = {
            "qminus2": QuadraticClass.QMINUS2,
            "qplus2": QuadraticClass.QPLUS2,
            "qminus11": QuadraticClass.QMINUS11,
            "qplus11": QuadraticClass.QPLUS11,
        }
        if key not in aliases:
            raise LabelError(f"unknown quadratic class {text!r}")
        return aliases[key]


@dataclass(frozen=True)
class QuadLabel:
    """(j, l) for the (2)-classes, (k, l) for the (1,1)-classes."""

    spin_or_bargmann: Fraction
    l: Fraction

    def __post_init__(self):
        object.__setattr__(self, "spin_or_bargmann", Fraction(self.spin_or_bargmann))
        object.__setattr__(self, "l", Fraction(self.l))


def _is_nonneg_int(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 0


def validate(cls: QuadraticClass, label: QuadLabel) -> None:
    a, l = label.spin_or_bargmann, label.l
    if cls.compact:
        if a < Fraction(1, 2) or (2 * a).denominator != 1:
            raise LabelError(f"j must be a positive half-integer, got {a}")
        if cls is QuadraticClass.QMINUS2 and not _is_nonneg_int(2 * l + a):
            raise LabelError(f"QMinus2 needs 2l+j a nonnegative integer, got j={a}, l={l}")
        if cls is QuadraticClass.QPLUS2 and not _is_nonneg_int(-(2 * l + a)):
            raise LabelError(f"QPlus2 needs -(2l+j) a nonnegative integer, got j={a}, l={l}")
    else:
        if a <= 0:
            raise LabelError(f"Bargmann index must be positive, got {a}")
        if cls is QuadraticClass.QMINUS11 and not _is_nonneg_int(2 * l - a):
            raise LabelError(f"QMinus11 needs 2l-k a nonnegative integer, got k={a}, l={l}")
        if cls is QuadraticClass.QPLUS11 and not _is_nonneg_int(a - 2 * l):
            raise LabelError(f"QPlus11 needs k-2l a nonnegative integer, got k={a}, l={l}")


def dimension(cls: QuadraticClass, label: QuadLabel) -> Union[int, float]:
    validate(cls, label)
    a, l = label.spin_or_bargmann, label.l
    if cls is QuadraticClass.QMINUS2:
        return int(2 * a) + 1 if 2 * l - a >= 0 else int(a + 2 * l) + 1
    if cls is QuadraticClass.QPLUS2:
        return int(2 * a) + 1
    if cls is QuadraticClass.QMINUS11:
        return int(2 * l - a) + 1
    return INFINITE


def _raise_sq(cls: QuadraticClass, label: QuadLabel, n: int) -> Fraction:
    """Exact squared raising amplitude from basis state n to n+1."""
    a, l = label.spin_or_bargmann, label.l
    n = Fraction(n)
    if cls is QuadraticClass.QMINUS2:
        m = -a + n
        return (a - m) * (a + m + 1) * (2 * l - m)
    if cls is QuadraticClass.QPLUS2:
        m = -a + n
        return (a - m) * (a + m + 1) * (m - 2 * l + 1)
    if cls is QuadraticClass.QMINUS11:
        return (n + 2 * a) * (n + 1) * (2 * l - a - n)
    return (n + 2 * a) * (n + 1) * (n + a - 2 * l + 1)


def n0_offset(cls: QuadraticClass, label: QuadLabel) -> Fraction:
    """Q0 eigenvalue of the lowest basis state."""
    a, l = label.spin_or_bargmann, label.l
    if cls.compact:
        return -a - l  # m = -j
    return a - l  # n = 0


def build(cls: QuadraticClass, label: QuadLabel, cutoff: Optional[int] = None) -> LadderRep:
    """Matrix irrep with amplitudes from the class square-root formulas."""
    validate(cls, label)
    dim = dimension(cls, label)
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
                f"negative radicand {sq} at step {n}: label {label} is outside "
                f"the unitary regime of {cls.value}"
            )
        amps.append(math.sqrt(float(sq)))
    p0 = n0_offset(cls, label)
    return LadderRep(
        dim=dim,
        labels={
            "class": cls.value,
            ("j" if cls.compact else "k"): label.spin_or_bargmann,
            "l": label.l,
        },
        n0_diag=tuple(float(p0 + n) for n in range(dim)),
        raise_amps=tuple(amps),
        lower_amps=tuple(amps),
        truncated=infinite,
    )


def structure_polynomial(cls: QuadraticClass, label: QuadLabel) -> Polynomial:
    """f with [Q+,Q-] = f(Q0) on the (cls, label) irrep; mu fixed to 1.

    Central substitutions: L -> l, J -> j(j+1), K -> k(1-k).  The QPlus2
    constant is L(L-1), not the printed L(L+1); the matrices decide.
    """
    validate(cls, label)
    a, l = label.spin_or_bargmann, label.l
    if cls is QuadraticClass.QMINUS2:
        jj = a * (a + 1)
        return Polynomial([jj + l * (l + 1), -(2 * l - 1), -3])
    if cls is QuadraticClass.QPLUS2:
        jj = a * (a + 1)
        return Polynomial([-(jj + l * (l - 1)), 2 * l + 1, 3])
    kk = a * (1 - a)
    if cls is QuadraticClass.QMINUS11:
        return Polynomial([kk - l * (l + 1), 2 * l - 1, 3])
    return Polynomial([-(kk - l * (l - 1)), -(2 * l + 1), -3])


def casimir_value(cls: QuadraticClass, label: QuadLabel) -> Fraction:
    """Exact Casimir eigenvalue Q+Q- + g(Q0-1) on the irrep.

    On the lowest state Q+Q- vanishes, so the value is g(p0 - 1) with the
    g(0)=0 antidifference of the structure polynomial.
    """
    g = antidifference(structure_polynomial(cls, label))
    return g(n0_offset(cls, label) - 1)


# -- printed closed forms and their status --------------------------------

def printed_casimir_forms(cls: QuadraticClass, label: QuadLabel) -> list:
    """Published closed-form candidates for the Casimir, evaluated exactly.

    Returns (expression, value, applicable) triples; `casimir_report`
    compares them with the matrix-backed value.
    """
    a, l = label.spin_or_bargmann, label.l
    forms = []
    if cls is QuadraticClass.QPLUS2:
        forms.append(("(1-l)*(j(j+1)-l(l+1))", (1 - l) * (a * (a + 1) - l * (l + 1)), True))
    elif cls is QuadraticClass.QMINUS2:
        forms.append(
            ("(-4l^3+7l+3)/4", (-4 * l**3 + 7 * l + 3) / 4, a == Fraction(1, 2))
        )
        forms.append(
            (
                "(-3j^3+5j^2+11j+3)/8",
                (-3 * a**3 + 5 * a**2 + 11 * a + 3) / 8,
                l == (1 - a) / 2,
            )
        )
    elif cls is QuadraticClass.QMINUS11:
        forms.append(
            ("(l+1)*(k(1-k)+l(l-1))", (l + 1) * (a * (1 - a) + l * (l - 1)), True)
        )
    else:
        forms.append(("l*(l-k^2)", l * (l - a**2), True))
    return forms


def exact_casimir_closed_form(cls: QuadraticClass, label: QuadLabel) -> Fraction:
    """Factored closed form of the matrix-backed Casimir (for reporting)."""
    a, l = label.spin_or_bargmann, label.l
    if cls is QuadraticClass.QMINUS2:
        return l * (a - l) * (a + l + 1)
    if cls is QuadraticClass.QPLUS2:
        return (1 - l) * (a - l) * (a + l + 1)
    if cls is QuadraticClass.QMINUS11:
        return l * (a + l) * (l - a + 1)
    return (a - l - 1) * (l - 1) * (a + l)


def casimir_report(cls: QuadraticClass, label: QuadLabel) -> dict:
    """Matrix-authoritative Casimir plus comparison with printed forms."""
    value = casimir_value(cls, label)
    assert value == exact_casimir_closed_form(cls, label)
    entries = []
    for expr, printed, applicable in printed_casimir_forms(cls, label):
        if not applicable:
            continue
        entries.append(
            {
                "printed_expression": expr,
                "printed_value": printed,
                "computed_value": value,
                "matches": printed == value,
            }
        )
    return {"class": cls.value, "label": label, "value": value, "printed": entries}
