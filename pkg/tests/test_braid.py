"""Braid-equation verification: lifts, reports, conjugation, group relations."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from polybraid import catalog
from polybraid.braid import (
    BraidArity,
    DimensionOverflowError,
    braid_group_check,
    braid_group_report,
    far_commutativity_tuples,
    lift,
    nary_braid_report,
    partial_ternary_reports,
    partial_ternary_residuals,
    q_conjugate,
)

SWAP = catalog.build("yb.perm.bisymm", variant="first")

_entries = st.complex_numbers(
    max_magnitude=2.0, allow_nan=False, allow_infinity=False
)


def _mat(side: int):
    return hnp.arrays(np.complex128, (side, side), elements=_entries).map(
        lambda a: a + 0.1 * np.identity(side)
    )


def test_arity_validation():
    a = BraidArity(3)
    assert a.op_dim == 8
    assert a.equation_slots == 5
    with pytest.raises(ValueError):
        BraidArity(1, 2)
    with pytest.raises(ValueError):
        BraidArity(2, 1)


def test_lift_places_operator():
    c = np.asarray(SWAP)
    assert np.array_equal(np.asarray(lift(SWAP, 2, 1, 3)), np.kron(c, np.identity(2)))
    assert np.array_equal(np.asarray(lift(SWAP, 2, 2, 3)), np.kron(np.identity(2), c))


def test_lift_rejects_bad_inputs():
    with pytest.raises(ValueError):
        lift(SWAP, 2, 0, 3)
    with pytest.raises(ValueError):
        lift(SWAP, 2, 3, 3)
    with pytest.raises(ValueError):
        lift(np.identity(3), 2, 1, 3)
    with pytest.raises(DimensionOverflowError):
        lift(SWAP, BraidArity(2), 1, 40)


@settings(max_examples=25, deadline=None)
@given(c=_mat(4))
def test_lift_far_positions_commute(c):
    # supports two slots apart are disjoint, so the lifted operators commute
    a = np.asarray(lift(c, 2, 1, 4))
    b = np.asarray(lift(c, 2, 3, 4))
    scale = max(1.0, float(np.max(np.abs(a))) ** 2)
    assert np.max(np.abs(a @ b - b @ a)) <= 1e-10 * scale


def test_swap_binary_report():
    rep = nary_braid_report(SWAP, 2)
    assert rep.passed
    assert len(rep.chain_values) == 2
    assert rep.residuals == (0.0,)


def test_minkowski_ternary_report():
    mk = catalog.build("nb.minkowski", {"n": 3})
    rep = nary_braid_report(mk, 3)
    assert rep.passed
    assert max(rep.residuals) <= 1e-12


def test_random_operator_fails():
    rng = np.random.default_rng(7)
    bad = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rep = nary_braid_report(bad, 2)
    assert not rep.passed
    assert max(rep.residuals) > 1e-3


@settings(max_examples=25, deadline=None)
@given(
    t=st.complex_numbers(
        min_magnitude=0.25, max_magnitude=4.0, allow_nan=False, allow_infinity=False
    )
)
def test_scaling_preserves_solutions(t):
    # both chains are products of the same length, so scaling cancels
    rep = nary_braid_report(t * np.asarray(SWAP), 2)
    assert rep.passed


def test_q_conjugate_star_to_vertex():
    # a triangular 2x2 conjugator carries the 8-vertex star family onto the
    # 4-vertex one with parameters y(x+z), y(x-z)
    for x, y, z in ((0.7, 1.3, 2.1), (1.0, 2.0, 0.5), (-0.4, 0.9, 1.7)):
        c34 = catalog.build("yb.star8.c34", {"x": x, "y": y, "z": z}, variant="upper")
        b = y / z
        q = np.array(
            [[np.sqrt(complex(y / z)), b], [1.0, -b * np.sqrt(complex(z / y))]]
        )
        got = np.asarray(q_conjugate(c34, q, 1.0, 2))
        u, w = y * (x + z), y * (x - z)
        want = np.zeros((4, 4), dtype=complex)
        want[0, 0] = want[3, 3] = u
        want[1, 2] = want[2, 1] = w
        scale = max(abs(u), abs(w), 1.0)
        assert np.max(np.abs(got - want)) <= 1e-12 * scale


def test_q_conjugation_preserves_pass():
    rng = np.random.default_rng(3)
    for _ in range(5):
        q = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        while abs(np.linalg.det(q)) < 0.3:
            q = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        moved = q_conjugate(SWAP, q, 1.0, 2)
        assert nary_braid_report(moved, 2).passed


def test_partial_reports_distinguish_equations():
    p13 = catalog.build(
        "tb.circ16.p13", {"x": 1.0, "y": 2.0}, variant="first-upper"
    )
    assert partial_ternary_reports(p13) == (False, True, False)
    res = partial_ternary_residuals(p13)
    assert res[1] <= 1e-12
    assert res[0] > 1e-3 and res[2] > 1e-3


def test_partial_reports_full_solutions_pass_all():
    # the middle-equation family degenerates to a full solution at y=1
    deg = catalog.build(
        "tb.circ16.p13",
        {"x": 1.0, "y": 1.0},
        variant="first-upper",
        check_constraints=False,
    )
    assert partial_ternary_reports(deg) == (True, True, True)
    assert partial_ternary_reports(catalog.build("tb.perm.bisymm1")) == (
        True,
        True,
        True,
    )
    assert partial_ternary_reports(np.identity(8)) == (True, True, True)


def test_far_commutativity_tuples():
    assert far_commutativity_tuples(2, 4) == [(1, 3)]
    assert far_commutativity_tuples(2, 5) == [(1, 3), (1, 4), (2, 4)]
    assert far_commutativity_tuples(3, 4) == []


def test_braid_group_binary():
    rep = braid_group_report(SWAP, 2, 4)
    assert rep.passed
    assert [idx for idx, _ in rep.relation_residuals] == [1, 2]
    assert [pair for pair, _ in rep.far_comm_residuals] == [(1, 3)]
    assert braid_group_check(SWAP, 2, 4)


def test_braid_group_ternary():
    t1 = catalog.build("tb.perm.symm1")
    rep = braid_group_report(t1, 3, 4)
    assert rep.passed
    # strings 4 with arity 3 leave a single adjacent relation and no far pairs
    assert len(rep.relation_residuals) == 1
    assert rep.far_comm_residuals == ()
    assert braid_group_check(t1, 3, 4)


def test_braid_group_rejects_nonsolution():
    rng = np.random.default_rng(11)
    bad = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert not braid_group_check(bad, 2, 4)
