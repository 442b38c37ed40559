"""Machine-readable ledger of published-formula vs computed disagreements.

The matrices built from the representation formulas (and confirmed by the
bosonic oracle) are authoritative; wherever a published closed form
disagrees, an entry lands here instead of a silent patch.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from fractions import Fraction
from typing import List

from .quadratic import (
    QuadLabel,
    QuadraticClass,
    casimir_value,
    exact_casimir_closed_form,
    printed_casimir_forms,
    validate,
)
from .core import LabelError


@dataclass(frozen=True)
class DiscrepancyRecord:
    where: str
    printed_expression: str
    printed_value: str
    computed_value: str
    matches: bool
    note: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


def casimir_discrepancies(labels=None) -> List[DiscrepancyRecord]:
    """Sweep the published Casimir closed forms against exact computation.

    The Q+(2) form (1-l)[j(j+1)-l(l+1)] agrees identically; the Q-(2),
    Q-(1,1) and Q+(1,1) forms differ (the first two by the constant term of
    the structure polynomial, a g-convention shift; the last outright).
    """
    if labels is None:
        labels = _default_label_grid()
    records = []
    for cls, label in labels:
        try:
            validate(cls, label)
        except LabelError:
            continue
        value = casimir_value(cls, label)
        for expr, printed, applicable in printed_casimir_forms(cls, label):
            if not applicable:
                continue
            match = printed == value
            note = ""
            if not match:
                from .polynomial import Polynomial
                from .quadratic import structure_polynomial

                c0 = structure_polynomial(cls, label).coefficient(0)
                if printed - value == c0:
                    note = (
                        "printed form equals the computed value plus f(0): "
                        "an antidifference-constant convention shift"
                    )
                else:
                    note = (
                        "no constant-shift reading reconciles the printed form; "
                        f"matrix-backed closed form is {exact_casimir_closed_form(cls, label)}"
                    )
            records.append(
                DiscrepancyRecord(
                    where=f"{cls.value} Casimir, label ({label.spin_or_bargmann}, {label.l})",
                    printed_expression=expr,
                    printed_value=str(printed),
                    computed_value=str(value),
                    matches=match,
                    note=note,
                )
            )
    return records


def structure_constant_discrepancies() -> List[DiscrepancyRecord]:
    """Known bracket-constant disagreements, stated once each."""
    return [
        DiscrepancyRecord(
            where="Q+(2) bracket constant",
            printed_expression="-(J + L(L+1))",
            printed_value="-(j(j+1) + l(l+1))",
            computed_value="-(j(j+1) + l(l-1))",
            matches=False,
            note="commutator of the representation matrices fixes L(L-1)",
        ),
        DiscrepancyRecord(
            where="C-(11,11) Higgs reduction coefficient a",
            printed_expression="mu^2 (2K^2 - C1)",
            printed_value="2k^2 - k1(1-k1)",
            computed_value="2k^2 - 2 k1(1-k1)",
            matches=False,
            note="the structure polynomial reduces to -4x^3 + 2a x with "
            "a = 2k^2 - (C1 + C2)",
        ),
        DiscrepancyRecord(
            where="finite-representation coherent measure prefactor",
            printed_expression="(2l-k+1)/(2l+k+1)",
            printed_value="(2l-k+1)/(2l+k+1)",
            computed_value="(2l-k+1)/(2l+k)",
            matches=False,
            note="only the corrected denominator closes the moment equations "
            "(projector deviation ~ 1/(2l+k+1) otherwise)",
        ),
        DiscrepancyRecord(
            where="single-mode cubic boson identification",
            printed_expression="Q+|n> = (n+1) sqrt(n+4) |n+1> on Q0 = a+a",
            printed_value="(n+1) sqrt(n+4)",
            computed_value="sqrt((3n+1)(3n+2)(n+1)) on the |3n> tower, "
            "and [Q0, Q+] = 3 Q+ rather than Q+",
            matches=False,
            note="(a+)^3/sqrt(3) does not carry the (k=2, l=1) ladder as printed",
        ),
        DiscrepancyRecord(
            where="Calogero even-ladder amplitudes",
            printed_expression="sqrt((j-m)(j+m+1)(j-1-m)(j+2+m))",
            printed_value="2x the realization",
            computed_value="J+^2/2 gives half the printed amplitude",
            matches=False,
            note="oracle realization C+ = (A1+ A2)^2 / 2 is authoritative",
        ),
    ]


def _default_label_grid():
    grid = []
    half = Fraction(1, 2)
    for twoj in range(1, 6):
        j = Fraction(twoj, 2)
        for t in range(0, 6):
            l_minus = -j / 2 + Fraction(t, 2)
            grid.append((QuadraticClass.QMINUS2, QuadLabel(j, l_minus)))
            grid.append((QuadraticClass.QPLUS2, QuadLabel(j, -j / 2 - Fraction(t, 2))))
    for twok in range(1, 6):
        k = Fraction(twok, 2)
        for t in range(0, 6):
            grid.append((QuadraticClass.QMINUS11, QuadLabel(k, k / 2 + Fraction(t, 2))))
            grid.append((QuadraticClass.QPLUS11, QuadLabel(k, k / 2 - Fraction(t, 2))))
    return grid
