"""Fock-space oracle: mode operators, realizations, subspaces, comparisons."""

import math
from fractions import Fraction

import numpy as np
import pytest

from polyalg.cubic import CubicClass, CubicLabel
from polyalg.fock import (
    EmptySubspaceError,
    FockSpace,
    ShapeMismatchError,
    calogero_realization,
    compare,
    constrained_subspace,
    cubic_boson_realization,
    mode_operator,
    oracle_compare_cubic,
    oracle_compare_qh,
    oracle_compare_quadratic,
    quadratic_realization,
    realize,
)
from polyalg.quadratic import QuadLabel, QuadraticClass, build

F = Fraction


def test_mode_operator_actions():
    space = FockSpace(1, (5,))
    a = mode_operator(space, 0, "annihilate")
    ad = mode_operator(space, 0, "create")
    # annihilate on |0> -> 0
    v = np.zeros(space.dim)
    v[space.index_of((0,))] = 1.0
    assert np.allclose(a.matrix @ v, 0.0)
    # create on |2> -> sqrt(3)|3>
    assert np.isclose(ad.matrix[space.index_of((3,)), space.index_of((2,))], math.sqrt(3))
    # a+ annihilates the top state (truncation artifact)
    v = np.zeros(space.dim)
    v[space.index_of((5,))] = 1.0
    assert np.allclose(ad.matrix @ v, 0.0)


def test_canonical_commutator_interior():
    space = FockSpace(2, (5, 4))
    for i in range(2):
        for jj in range(2):
            ai = mode_operator(space, i, "annihilate").matrix
            adj = mode_operator(space, jj, "create").matrix
            comm = (ai @ adj - adj @ ai).toarray()
            expected = 1.0 if i == jj else 0.0
            for n0 in range(5):  # interior in mode 0
                for n1 in range(4):
                    idx = space.index_of((n0, n1))
                    assert np.isclose(comm[idx, idx], expected)


def test_colex_enumeration_and_index_map():
    space = FockSpace(2, (2, 2))
    assert space.index_of((1, 0)) == 1
    assert space.index_of((0, 1)) == 3
    assert space.occupations_of(4) == (1, 1)


def test_realize_qminus2_action_example():
    # Q+ = a1+ a2 a3 on |0,1,1> gives exactly |1,0,0>
    space = FockSpace(3, (4, 4, 4))
    q0, qp, qm, _ = realize(space, quadratic_realization(QuadraticClass.QMINUS2))
    src = space.index_of((0, 1, 1))
    dst = space.index_of((1, 0, 0))
    col = qp.matrix[:, src].toarray().ravel()
    assert np.isclose(col[dst], 1.0)
    assert np.isclose(np.abs(col).sum(), 1.0)


def test_cubic_boson_mismatch_with_printed_identification():
    # (a+)^3/sqrt(3)|0> = sqrt(2)|3>, not the printed (n+1)sqrt(n+4) = 2
    space = FockSpace(1, (8,))
    q0, qp, qm, _ = realize(space, cubic_boson_realization())
    amp = qp.matrix[space.index_of((3,)), space.index_of((0,))]
    assert np.isclose(amp, math.sqrt(2))
    assert not np.isclose(amp, 2.0)
    # and Q0 = N steps by 3 under Q+, not by 1
    comm = (q0.matrix @ qp.matrix - qp.matrix @ q0.matrix).toarray()
    assert np.isclose(comm[space.index_of((3,)), space.index_of((0,))], 3.0 * amp)


def test_calogero_realization_action():
    # C+ = (a1+ a2)^2/2 at j=1 (occupations (0,2) = |1,-1>): amplitude 1
    space = FockSpace(2, (4, 4))
    q0, qp, qm, _ = realize(space, calogero_realization())
    src = space.index_of((0, 2))
    dst = space.index_of((2, 0))
    assert np.isclose(qp.matrix[dst, src], 1.0)


def test_constrained_subspace_examples():
    space = FockSpace(3, (2, 2, 2))
    q0, qp, qm, cents = realize(space, quadratic_realization(QuadraticClass.QMINUS2))
    sub = constrained_subspace(
        space, [cents["pair"], cents["ell4"]], [1.0, 1.0], tol=1e-9, order_by=q0
    )
    assert len(sub) == 2
    occs = [space.occupations_of(i) for i in sub]
    assert occs == [(0, 1, 1), (1, 0, 0)]

    with pytest.raises(EmptySubspaceError):
        constrained_subspace(space, cents["pair"], 0.37, tol=1e-12)


def test_constrained_subspace_qplus11_size():
    space = FockSpace(3, (6, 6, 6))
    q0, qp, qm, cents = realize(space, quadratic_realization(QuadraticClass.QPLUS11))
    sub = constrained_subspace(
        space, [cents["diff"], cents["ell4"]], [0.0, 0.0], tol=1e-9, order_by=q0
    )
    assert len(sub) == 7  # states (t,t,t), t = 0..6


def test_compare_shape_mismatch():
    space = FockSpace(3, (6, 6, 6))
    q0, qp, qm, cents = realize(space, quadratic_realization(QuadraticClass.QPLUS11))
    rep = build(QuadraticClass.QPLUS11, QuadLabel(F(1, 2), F(1, 4)), cutoff=3)
    with pytest.raises(ShapeMismatchError):
        compare(rep, (q0, qp, qm), [0], 1e-10)


QUAD_GRID = [
    (QuadraticClass.QMINUS2, QuadLabel(F(1, 2), F(1, 4)), None),
    (QuadraticClass.QMINUS2, QuadLabel(F(3, 2), F(-1, 4)), None),
    (QuadraticClass.QMINUS2, QuadLabel(F(2), F(3, 2)), None),
    (QuadraticClass.QPLUS2, QuadLabel(F(1, 2), F(-1, 4)), None),
    (QuadraticClass.QPLUS2, QuadLabel(F(3, 2), F(-5, 4)), None),
    (QuadraticClass.QMINUS11, QuadLabel(F(1, 2), F(3, 4)), None),
    (QuadraticClass.QMINUS11, QuadLabel(F(1), F(3, 2)), None),
    (QuadraticClass.QMINUS11, QuadLabel(F(3, 2), F(13, 4)), None),
    (QuadraticClass.QPLUS11, QuadLabel(F(1, 2), F(1, 4)), 8),
    (QuadraticClass.QPLUS11, QuadLabel(F(1), F(-1, 2)), 8),
]


@pytest.mark.parametrize("cls,label,cutoff", QUAD_GRID)
def test_oracle_compare_quadratic(cls, label, cutoff):
    report = oracle_compare_quadratic(cls, label, tol=1e-10, cutoff=cutoff)
    assert report.passed, report.as_dict()


CUBIC_GRID = [
    (CubicClass.CMINUS_11_11, {"k1": F(1, 2), "k2": F(1, 2), "k": F(3, 2)}, None),
    (CubicClass.CMINUS_11_11, {"k1": F(1), "k2": F(1, 2), "k": F(9, 4)}, None),
    (CubicClass.CPLUS_11_11, {"k1": F(1, 2), "k2": F(1, 2), "k": F(0)}, 6),
    (CubicClass.CPLUS_11_11, {"k1": F(3, 2), "k2": F(1, 2), "k": F(1, 2)}, 6),
    (CubicClass.CMINUS_2_2, {"j1": F(1), "j2": F(3, 2), "k": F(1, 4)}, None),
    (CubicClass.CPLUS_2_2, {"j1": F(3, 2), "j2": F(3, 2), "k": F(1)}, None),
    (CubicClass.CMINUS_2_11, {"j": F(2), "k1": F(1), "k": F(1, 2)}, None),
    (CubicClass.CPLUS_2_11, {"j": F(3), "k1": F(1, 2), "k": F(1, 4)}, None),
]


@pytest.mark.parametrize("cls,params,cutoff", CUBIC_GRID)
def test_oracle_compare_cubic(cls, params, cutoff):
    report = oracle_compare_cubic(cls, CubicLabel(params), tol=1e-10, cutoff=cutoff)
    assert report.passed, report.as_dict()


QH_GRID = [
    (CubicClass.CPLUS_QM1_H, {"k1": F(1, 2), "l": F(3, 4), "k": F(-5, 8)}, None),
    (CubicClass.CMINUS_QM1_H, {"k1": F(1, 2), "l": F(9, 4), "k": F(9, 8)}, None),
    (CubicClass.CPLUS_QP1_H, {"k1": F(1, 2), "l": F(1, 4), "k": F(-7, 8)}, 8),
    (CubicClass.CMINUS_QP1_H, {"k1": F(1, 2), "l": F(1, 4), "k": F(13, 8)}, None),
]


@pytest.mark.parametrize("cls,params,cutoff", QH_GRID)
def test_oracle_compare_qh_composite(cls, params, cutoff):
    report = oracle_compare_qh(cls, CubicLabel(params), tol=1e-10, cutoff=cutoff)
    assert report.passed, report.as_dict()


@pytest.mark.parametrize("cls,params,cutoff", QH_GRID)
def test_oracle_compare_qh_five_mode(cls, params, cutoff):
    cutoff = 5 if cutoff else None
    report = oracle_compare_qh(
        cls, CubicLabel(params), tol=1e-10, cutoff=cutoff, five_mode=True
    )
    assert report.passed, report.as_dict()


def test_centrals_commute_with_generators():
    space = FockSpace(3, (5, 5, 5))
    for cls in QuadraticClass:
        q0, qp, qm, cents = realize(space, quadratic_realization(cls))
        for name, op in cents.items():
            for gen in (q0, qp, qm):
                comm = op.matrix @ gen.matrix - gen.matrix @ op.matrix
                # interior states only: one generator application must fit
                interior = [
                    space.index_of(occ)
                    for occ in np.ndindex(3, 3, 3)
                ]
                block = comm[np.ix_(interior, interior)].toarray()
                assert np.max(np.abs(block)) <= 1e-12, (cls, name)


def test_cutoff_monotonicity():
    # interior residuals do not grow as cutoffs increase
    label = QuadLabel(F(1, 2), F(1, 4))
    resids = []
    for cutoff in (6, 9, 12):
        report = oracle_compare_quadratic(
            QuadraticClass.QPLUS11, label, tol=1e-9, cutoff=cutoff
        )
        resids.append(report.max_residual)
    assert all(r <= 1e-10 for r in resids)
