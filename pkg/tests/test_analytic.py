"""Differential realizations against the ladder matrices."""

import math
from fractions import Fraction

import numpy as np
import pytest

from polyalg.analytic import (
    DiffOp,
    WeightedBasis,
    apply,
    bg_series_coefficients,
    class_realization,
)
from polyalg.cubic import CubicClass, CubicLabel, build_cubic
from polyalg.quadratic import QuadLabel, QuadraticClass, build

F = Fraction


def test_apply_euler_operator_diagonal():
    basis = WeightedBasis.from_ratios(6, lambda n: F(1))
    mat = apply(DiffOp.build((1, 1, 1)), basis, 6)
    assert np.allclose(mat, np.diag(np.arange(6.0)))


def test_apply_z_shifts_with_weight_ratio():
    # z psi_n = sqrt(w_{n+1}/w_n) psi_{n+1} for psi_n = z^n / sqrt(w_n)
    basis = WeightedBasis.from_ratios(4, lambda n: F(n + 1))  # w_n = n!
    mat = apply(DiffOp.build((1, 0, 1)), basis, 4)
    for n in range(3):
        assert np.isclose(mat[n + 1, n], math.sqrt(n + 1.0))


def test_apply_ddz_on_qminus11_basis():
    k, l = F(1, 2), F(3, 4)
    basis = WeightedBasis.from_ratios(2, lambda n: (n + 2 * k) * (n + 1) / (2 * l - k - n))
    mat = apply(DiffOp.build((0, 1, 1)), basis, 2)
    assert np.isclose(mat[0, 1], math.sqrt(float(basis.weights[0] / basis.weights[1])))


QUAD_CASES = [
    (QuadraticClass.QMINUS2, QuadLabel(F(1, 2), F(1, 4)), None),
    (QuadraticClass.QMINUS2, QuadLabel(F(3, 2), F(5, 4)), None),
    (QuadraticClass.QMINUS2, QuadLabel(F(2), F(-1, 2)), None),
    (QuadraticClass.QPLUS2, QuadLabel(F(1, 2), F(-1, 4)), None),
    (QuadraticClass.QPLUS2, QuadLabel(F(2), F(-3, 2)), None),
    (QuadraticClass.QMINUS11, QuadLabel(F(1, 2), F(3, 4)), None),
    (QuadraticClass.QMINUS11, QuadLabel(F(3, 2), F(13, 4)), None),
    (QuadraticClass.QPLUS11, QuadLabel(F(1, 2), F(1, 4)), 12),
    (QuadraticClass.QPLUS11, QuadLabel(F(2), F(-1, 2)), 12),
]


@pytest.mark.parametrize("cls,label,cutoff", QUAD_CASES)
def test_quadratic_realizations_match_ladders(cls, label, cutoff):
    real = class_realization(cls, label, cutoff=cutoff)
    rep = build(cls, label, cutoff=cutoff)
    q0m, qpm, qmm = real.matrices()
    n0, npl, nmi = rep.matrices()
    rows = rep.interior_rows()
    err = 0.0
    for i in rows:
        err = max(err, abs(q0m[i, i] - n0[i, i]))
        if i + 1 < rep.dim:
            err = max(err, abs(qpm[i + 1, i] - npl[i + 1, i]))
            err = max(err, abs(qmm[i, i + 1] - nmi[i, i + 1]))
    assert err <= 1e-10


def test_qminus2_typo_coefficients_solved_and_reported():
    real = class_realization(QuadraticClass.QMINUS2, QuadLabel(F(1, 2), F(1, 4)))
    by_where = {r.where: r for r in real.repairs}
    # coeff(n) = n(n-1) - beta n + c with beta = 2l+3j-1, c = 2j(2l+j)
    assert by_where["QMinus2.qplus z^2 d coefficient"].solved == F(1)
    assert by_where["QMinus2.qplus z coefficient"].solved == F(1)
    real = class_realization(QuadraticClass.QMINUS2, QuadLabel(F(3, 2), F(5, 4)))
    by_where = {r.where: r for r in real.repairs}
    assert by_where["QMinus2.qplus z^2 d coefficient"].solved == F(6)  # 2l+3j-1
    assert by_where["QMinus2.qplus z coefficient"].solved == F(12)  # 2j(2l+j)


def test_qplus2_lowering_constant_repaired():
    real = class_realization(QuadraticClass.QPLUS2, QuadLabel(F(2), F(-3, 2)))
    by_where = {r.where: r for r in real.repairs}
    # printed 2l-j-1; solved 2l+j-1 = -2
    assert by_where["QPlus2.qminus d coefficient"].solved == F(-2)


def test_no_repairs_needed_for_the_11_classes():
    real = class_realization(QuadraticClass.QMINUS11, QuadLabel(F(1, 2), F(3, 4)))
    assert real.repairs == []
    real = class_realization(QuadraticClass.QPLUS11, QuadLabel(F(1, 2), F(1, 4)), cutoff=8)
    assert real.repairs == []


CUBIC_CASES = [
    (CubicClass.CMINUS_11_11, {"k1": F(1, 2), "k2": F(1, 2), "k": F(3, 2)}, None),
    (CubicClass.CPLUS_11_11, {"k1": F(3, 2), "k2": F(1, 2), "k": F(1, 2)}, 8),
    (CubicClass.CMINUS_2_2, {"j1": F(1), "j2": F(3, 2), "k": F(1, 4)}, None),
    (CubicClass.CPLUS_2_2, {"j1": F(3, 2), "j2": F(3, 2), "k": F(1)}, None),
    (CubicClass.CMINUS_2_11, {"j": F(2), "k1": F(1), "k": F(1, 2)}, None),
    (CubicClass.CPLUS_2_11, {"j": F(3), "k1": F(1, 2), "k": F(1, 4)}, None),
    (CubicClass.CPLUS_QM1_H, {"k1": F(1, 2), "l": F(3, 4), "k": F(-5, 8)}, None),
    (CubicClass.CMINUS_QM1_H, {"k1": F(1, 2), "l": F(9, 4), "k": F(9, 8)}, None),
    (CubicClass.CPLUS_QP1_H, {"k1": F(1, 2), "l": F(1, 4), "k": F(-7, 8)}, 8),
    (CubicClass.CMINUS_QP1_H, {"k1": F(1, 2), "l": F(1, 4), "k": F(13, 8)}, None),
]


@pytest.mark.parametrize("cls,params,cutoff", CUBIC_CASES)
def test_cubic_realizations_match_ladders(cls, params, cutoff):
    label = CubicLabel(params)
    real = class_realization(cls, label, cutoff=cutoff)
    rep = build_cubic(cls, label, cutoff=cutoff)
    q0m, qpm, _ = real.matrices()
    n0, npl, _ = rep.matrices()
    for i in rep.interior_rows():
        assert abs(q0m[i, i] - n0[i, i]) <= 1e-10
        if i + 1 < rep.dim:
            assert abs(qpm[i + 1, i] - npl[i + 1, i]) <= 1e-10
    assert real.repairs and "canonical gauge" in real.repairs[0].note


def test_commutators_exact_before_weighting():
    # [Q0, Q+-] = +-Q+- holds at the matrix level (monomial calculus is
    # exact; the weight scaling cancels in the commutator)
    real = class_realization(QuadraticClass.QMINUS11, QuadLabel(F(3, 2), F(13, 4)))
    q0m, qpm, qmm = real.matrices()
    assert np.allclose(q0m @ qpm - qpm @ q0m, qpm, atol=1e-12)
    assert np.allclose(q0m @ qmm - qmm @ q0m, -qmm, atol=1e-12)


def test_bg_differential_equation():
    # 0F2(-; 2k, k-2l+1; alpha z) solves Q- psi = alpha psi up to truncation
    k, l, alpha = F(1, 2), F(1, 4), 0.9 + 0.4j
    dim = 26
    real = class_realization(QuadraticClass.QPLUS11, QuadLabel(k, l), cutoff=dim)
    vec = bg_series_coefficients(k, l, alpha, dim)
    qm = apply(real.qminus, real.basis, dim)
    resid = np.linalg.norm(qm @ vec - alpha * vec) / np.linalg.norm(vec)
    assert resid < 1e-12


def test_diffop_order_bound():
    with pytest.raises(ValueError):
        DiffOp.build((0, 5, 1))
