"""The ten cubic classes: dimensions, builds, structure polynomials, Higgs."""

import math
from fractions import Fraction

import numpy as np
import pytest

from polyalg.compose import fit_bracket
from polyalg.core import LabelError, casimir_constancy, verify_closure
from polyalg.cubic import (
    CubicClass,
    CubicLabel,
    build_cubic,
    dimension_cubic,
    higgs_reduction,
    printed_dimension_rules,
    structure_polynomial_cubic,
)
from polyalg.polynomial import Polynomial
from polyalg.quadratic import INFINITE

F = Fraction


def cubic_label_grid():
    """At least three valid labels per class (>= 30 total)."""
    grid = []
    for k1, k2, k in [(F(1, 2), F(1, 2), F(3, 2)), (F(1), F(1, 2), F(9, 4)), (F(1), F(1), F(3))]:
        grid.append((CubicClass.CMINUS_11_11, CubicLabel({"k1": k1, "k2": k2, "k": k}), None))
    for k1, k2, k in [(F(1, 2), F(1, 2), F(0)), (F(3, 2), F(1, 2), F(1, 2)), (F(1), F(2), F(1))]:
        grid.append((CubicClass.CPLUS_11_11, CubicLabel({"k1": k1, "k2": k2, "k": k}), 14))
    for j1, j2, k in [(F(1), F(3, 2), F(1, 4)), (F(2), F(2), F(1, 2)), (F(5, 2), F(3, 2), F(0))]:
        grid.append((CubicClass.CMINUS_2_2, CubicLabel({"j1": j1, "j2": j2, "k": k}), None))
    for j1, j2, k in [(F(3, 2), F(3, 2), F(1)), (F(1), F(3, 2), F(-1, 4)), (F(2), F(3), F(-3, 2))]:
        grid.append((CubicClass.CPLUS_2_2, CubicLabel({"j1": j1, "j2": j2, "k": k}), None))
    for j, k1, k in [(F(1), F(1, 2), F(1)), (F(2), F(1), F(1, 2)), (F(3), F(1, 2), F(3, 4))]:
        grid.append((CubicClass.CMINUS_2_11, CubicLabel({"j": j, "k1": k1, "k": k}), None))
    for j, k1, k in [(F(3), F(1, 2), F(1, 4)), (F(4), F(1), F(1, 2)), (F(7, 2), F(1, 2), F(1))]:
        grid.append((CubicClass.CPLUS_2_11, CubicLabel({"j": j, "k1": k1, "k": k}), None))
    for k1, l, k in [(F(1, 2), F(3, 4), F(-5, 8)), (F(1, 2), F(9, 4), F(-11, 8)), (F(1), F(2), F(-1, 2))]:
        grid.append((CubicClass.CPLUS_QM1_H, CubicLabel({"k1": k1, "l": l, "k": k}), None))
    for k1, l, k in [(F(1, 2), F(9, 4), F(9, 8)), (F(1, 2), F(7, 4), F(7, 8)), (F(1), F(3), F(1))]:
        grid.append((CubicClass.CMINUS_QM1_H, CubicLabel({"k1": k1, "l": l, "k": k}), None))
    for k1, l, k in [(F(1, 2), F(1, 4), F(-7, 8)), (F(1), F(1, 2), F(5, 4)), (F(1), F(-1, 2), F(-3, 4))]:
        grid.append((CubicClass.CPLUS_QP1_H, CubicLabel({"k1": k1, "l": l, "k": k}), 14))
    for k1, l, k in [(F(1, 2), F(1, 4), F(13, 8)), (F(1), F(1, 2), F(9, 4)), (F(1), F(-1, 2), F(11, 4))]:
        grid.append((CubicClass.CMINUS_QP1_H, CubicLabel({"k1": k1, "l": l, "k": k}), None))
    return grid


def test_dimension_examples():
    assert dimension_cubic(
        CubicClass.CMINUS_11_11, CubicLabel({"k1": F(1, 2), "k2": F(1, 2), "k": F(3, 2)})
    ) == 3
    assert dimension_cubic(
        CubicClass.CPLUS_11_11, CubicLabel({"k1": F(1, 2), "k2": F(1, 2), "k": F(1)})
    ) is INFINITE
    # two-branch rule: j < 2k - k1 picks dim 2j + 1
    assert dimension_cubic(
        CubicClass.CMINUS_2_11, CubicLabel({"j": F(1), "k1": F(1, 2), "k": F(1)})
    ) == 3


def test_dimension_census_equals_printed_rules():
    for cls, label, cutoff in cubic_label_grid():
        printed = printed_dimension_rules(cls, label)
        if printed is None:
            continue
        assert dimension_cubic(cls, label) == printed, (cls, label.params)


def test_invalid_labels_raise():
    with pytest.raises(LabelError):
        dimension_cubic(
            CubicClass.CPLUS_2_11, CubicLabel({"j": F(1), "k1": F(1, 2), "k": F(1)})
        )  # j - 2k - k1 < 0
    with pytest.raises(LabelError):
        dimension_cubic(
            CubicClass.CMINUS_QP1_H, CubicLabel({"k1": F(1, 2), "l": F(1, 4), "k": F(1)})
        )  # boson offset not an integer


def test_two_dim_matrices_example():
    # dim 2 at k = (k1 + k2 + 1)/2 with amplitude 2 sqrt(k1 k2)
    for k1, k2 in [(F(1, 2), F(1, 2)), (F(1), F(3, 2)), (F(2), F(1, 2))]:
        label = CubicLabel({"k1": k1, "k2": k2, "k": (k1 + k2 + 1) / 2})
        rep = build_cubic(CubicClass.CMINUS_11_11, label)
        assert rep.dim == 2
        assert np.isclose(rep.raise_amps[0], 2 * math.sqrt(float(k1 * k2)))
        # C0 = diag((k1 - k2 -/+ 1)/2)
        assert np.isclose(rep.n0_diag[0], float((k1 - k2 - 1) / 2))


def test_lowest_state_has_no_lowering():
    for cls, label, cutoff in cubic_label_grid():
        rep = build_cubic(cls, label, cutoff=cutoff)
        # first lower amplitude couples states 0 and 1 only; nothing below
        assert len(rep.lower_amps) == rep.dim - 1


def test_closure_all_ten_classes():
    grid = cubic_label_grid()
    assert len(grid) >= 30
    for cls, label, cutoff in grid:
        rep = build_cubic(cls, label, cutoff=cutoff)
        f = structure_polynomial_cubic(cls, label)
        report = verify_closure(rep, f, 1e-9)
        assert report.passed, (cls.value, label.params, report.max_residual)


def test_structure_polynomial_degree_three():
    for cls, label, cutoff in cubic_label_grid():
        f = structure_polynomial_cubic(cls, label)
        assert f.degree() == 3, (cls, label.params)


def test_higgs_form_for_symmetric_labels():
    # k1 == k2 kills the constant and even terms: f = -4x^3 + (4k^2 - sigma)x
    label = CubicLabel({"k1": F(1, 2), "k2": F(1, 2), "k": F(3, 2)})
    f = structure_polynomial_cubic(CubicClass.CMINUS_11_11, label)
    assert f.coefficient(0) == 0 and f.coefficient(2) == 0
    assert f.coefficient(3) == -4


def test_higgs_reduction_values():
    # a = 2k^2 - 2 k1(1-k1); the printed reduction misses the factor 2
    h, a = higgs_reduction(CubicLabel({"k1": F(1, 2), "k2": F(1, 2), "k": F(1)}))
    assert (h, a) == (-4, F(3, 2))
    h, a = higgs_reduction(CubicLabel({"k1": F(1), "k2": F(1), "k": F(1)}))
    assert (h, a) == (-4, F(2))
    # at k = 1/2 the linear term cancels entirely (sigma = 4k^2 = 1)
    h, a = higgs_reduction(CubicLabel({"k1": F(1, 2), "k2": F(1, 2), "k": F(1, 2)}))
    assert (h, a) == (-4, F(0))
    with pytest.raises(LabelError):
        higgs_reduction(CubicLabel({"k1": F(1, 2), "k2": F(1), "k": F(2)}))


def test_cminus22_sign_is_matrix_backed():
    # the printed bracket for C-(2,2) has the overall sign flipped; the
    # matrices fix f(x) = -4x^3 + (4k^2 + sigma) x + ...
    label = CubicLabel({"j1": F(1, 2), "j2": F(1, 2), "k": F(0)})
    f = structure_polynomial_cubic(CubicClass.CMINUS_2_2, label)
    assert f == Polynomial([0, 3, 0, -4])
    rep = build_cubic(CubicClass.CMINUS_2_2, label)
    assert verify_closure(rep, f, 1e-12).passed


def test_fit_confirms_closed_forms():
    # least-squares fit of the diagonal commutator reproduces the exact
    # structure polynomial wherever the rep resolves a cubic
    for cls, label, cutoff in cubic_label_grid():
        rep = build_cubic(cls, label, cutoff=cutoff)
        if len(list(rep.interior_rows())) < 5:
            continue
        f = structure_polynomial_cubic(cls, label)
        fit = fit_bracket(rep, 3)
        exact = [float(f.coefficient(i)) for i in range(4)]
        scale = max(1.0, max(abs(c) for c in exact))
        assert fit.residual < 1e-8 * scale
        assert np.allclose(fit.coeffs, exact, atol=1e-7 * scale), (cls, label.params)


def test_positivity_census_matches_dimension():
    # C+C- >= 0 and C-C+ >= 0 hold at every state; the first violation
    # index is the dimension
    from polyalg.cubic import _raise_sq

    for cls, label, cutoff in cubic_label_grid():
        dim = dimension_cubic(cls, label)
        if dim is INFINITE:
            continue
        for n in range(int(dim) - 1):
            assert _raise_sq(cls, label, n) > 0
        assert _raise_sq(cls, label, int(dim) - 1) == 0


def test_casimir_constant_on_cubic_reps():
    for cls, label, cutoff in cubic_label_grid():
        rep = build_cubic(cls, label, cutoff=cutoff)
        f = structure_polynomial_cubic(cls, label)
        from polyalg.core import casimir_on_rep

        diag_mean = 1.0 + abs(float(np.mean(casimir_on_rep(rep, f))))
        assert casimir_constancy(rep, f) <= 1e-9 * diag_mean
