"""Polynomially deformed su(2)/su(1,1) ladder algebras.

Explicit matrix representations of the four quadratic and ten cubic
deformation classes, independent bosonic Fock-space oracles, differential
realizations, Casimir invariants, Barut-Girardello and Perelomov coherent
states, canonical-conjugate and linearization maps, and the physical
applications (oscillator degeneracies, Tavis-Cummings and trilinear
spectra, Calogero cubic symmetry, Hahn invariants, QES parameters).
"""

from .polynomial import Polynomial, antidifference
from .core import (
    AlgebraSpec,
    LabelError,
    LadderRep,
    VerificationReport,
    boson_rep,
    casimir_constancy,
    casimir_on_rep,
    su2_rep,
    su11_rep,
    verify_closure,
)
from .quadratic import INFINITE, QuadLabel, QuadraticClass
from .cubic import CubicClass, CubicLabel
from . import analytic, apps, coherent, compose, cubic, discrepancies, fock, quadratic

__all__ = [
    "AlgebraSpec",
    "CubicClass",
    "CubicLabel",
    "INFINITE",
    "LabelError",
    "LadderRep",
    "Polynomial",
    "QuadLabel",
    "QuadraticClass",
    "VerificationReport",
    "analytic",
    "antidifference",
    "apps",
    "boson_rep",
    "casimir_constancy",
    "casimir_on_rep",
    "coherent",
    "compose",
    "cubic",
    "discrepancies",
    "fock",
    "quadratic",
    "su2_rep",
    "su11_rep",
    "verify_closure",
]

__version__ = "0.1.0"
