"""Catalog construction, metadata verification, and conjugation identities."""

import numpy as np
import pytest

from polybraid import catalog
from polybraid.catalog import (
    ConstraintViolationError,
    UnknownFamilyError,
    UnknownVariantError,
)
from polybraid.matrices import numeric_rank

EXPECTED_IDS = (
    "yb.perm.bisymm",
    "yb.perm.circ",
    "yb.star4.cp1",
    "yb.circ4.cp2",
    "yb.star8.c24",
    "yb.star8.c34",
    "yb.star8.c34y",
    "yb.star8.c22",
    "yb.circ8.c4c",
    "yb.circ8.c2c",
    "yb.tri9.v1",
    "yb.tri9.v2",
    "yb.tri9.v3",
    "yb.tri9.f1",
    "yb.tri9.f2",
    "yb.tri9.p4",
    "yb.tri9.p5",
    "yb.tri10",
    "tb.perm.bisymm1",
    "tb.perm.bisymm2",
    "tb.perm.symm1",
    "tb.perm.symm2",
    "tb.star8.b11",
    "tb.star8.b12",
    "tb.star8.b21",
    "tb.star8.b22",
    "tb.star8.s11",
    "tb.star8.s12",
    "tb.star8.s21",
    "tb.star8.s22",
    "tb.star16.cv16",
    "tb.circ16.cv16c",
    "tb.circ16.p13",
    "tb.circ16.p13r1",
    "tb.circ16.p13r2",
    "nb.minkowski",
    "aux.q4",
    "aux.q8",
    "aux.reverse",
    "aux.pauli.sigma",
)


def test_family_registry_is_stable():
    assert catalog.family_ids() == EXPECTED_IDS


def test_build_literals():
    swap = np.asarray(catalog.build("yb.perm.bisymm", variant="first"))
    assert np.array_equal(
        swap, [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
    )
    mk2 = np.asarray(catalog.build("nb.minkowski", {"n": 2}))
    assert np.array_equal(
        mk2, [[1, 0, 0, -1], [0, 1, -1, 0], [0, 1, 1, 0], [1, 0, 0, 1]]
    )
    b11 = np.asarray(
        catalog.build("tb.star8.b11", {"x": 1.0, "y": 1.0}, variant="upper")
    )
    cols = [int(np.argmax(np.abs(b11[i]))) + 1 for i in range(8)]
    assert cols == [1, 7, 3, 5, 4, 6, 2, 8]
    assert np.allclose(b11 @ b11, np.identity(8))


def test_build_errors():
    with pytest.raises(UnknownFamilyError):
        catalog.build("yb.never.was")
    with pytest.raises(UnknownVariantError):
        catalog.build("yb.perm.bisymm", variant="diagonal")
    with pytest.raises(ConstraintViolationError):
        catalog.build("yb.star8.c34", {"x": 1.0, "y": 1.0, "z": 1.0}, variant="upper")
    with pytest.raises(ConstraintViolationError):
        catalog.build("aux.q4", {"a": 1.0})
    with pytest.raises(ConstraintViolationError):
        catalog.build("nb.minkowski", {"n": 9})


def test_verify_meta_examples():
    checks = catalog.verify_meta("yb.star8.c24", {"x": 2.0, "y": 3.0}, variant="upper")
    assert checks.trace_ok and checks.det_ok and checks.eigen_ok and checks.rank_ok
    m = np.asarray(catalog.build("yb.star8.c24", {"x": 2.0, "y": 3.0}, variant="upper"))
    assert abs(np.linalg.det(m) - 4 * 2.0**4 * 3.0**4) <= 1e-9 * 5184

    checks = catalog.verify_meta("tb.star8.b11", {"x": 1.1, "y": 0.7}, variant="upper")
    assert checks.eigen_ok

    checks = catalog.verify_meta("yb.circ8.c2c", {"x": 1.0, "y": 1.0})
    assert checks.rank_ok
    assert numeric_rank(catalog.build("yb.circ8.c2c", {"x": 1.0, "y": 1.0})) == 2


def test_rank_degeneration_of_partial_circulants():
    for fid in ("tb.circ16.p13", "tb.circ16.p13r1", "tb.circ16.p13r2"):
        variant = "first-upper" if fid == "tb.circ16.p13" else None
        generic = catalog.build(fid, {"x": 1.3, "y": 1.7}, variant=variant)
        assert numeric_rank(generic) == 8
        pinched = catalog.build(
            fid, {"x": 1.3, "y": 1.0}, variant=variant, check_constraints=False
        )
        assert numeric_rank(pinched) == 4


def test_conjugation_pairs_verify():
    for pid in catalog.CONJUGATION_PAIR_IDS:
        for params in catalog.conjugation_sample_params(pid, count=3, seed=0):
            assert catalog.verify_conjugation(pid, params)
            src, tgt = catalog.conjugation_sides(pid, params)
            q = np.asarray(catalog.known_conjugator(pid, params))
            moved = np.linalg.inv(q) @ np.asarray(src) @ q
            scale = max(1.0, float(np.max(np.abs(tgt))))
            assert np.max(np.abs(moved - np.asarray(tgt))) <= 1e-9 * scale


def test_conjugators_are_not_kron_factorable():
    # similar but not equivalent: the carriers live outside the one-qubit form
    for pid in catalog.CONJUGATION_PAIR_IDS:
        params = catalog.conjugation_sample_params(pid, count=1, seed=1)[0]
        assert not catalog.is_kron_product(catalog.known_conjugator(pid, params))
    q = np.array([[1.0, 2.0], [3.0, 4.0]])
    assert catalog.is_kron_product(np.kron(q, q))
    assert catalog.is_kron_product(np.identity(4))


def test_minkowski_rows_are_scaled_orthogonal():
    for n in (2, 3, 4):
        c = np.asarray(catalog.build("nb.minkowski", {"n": n}))
        prod = c @ c.T
        assert np.max(np.abs(prod - 2.0 * np.identity(2**n))) <= 1e-12


def test_pauli_sigma_entries():
    s = np.asarray(catalog.pauli_sigma(1, 1, 1))
    assert np.array_equal(s, np.fliplr(np.identity(8)))
    z = np.diag([1.0, -1.0])
    x = np.array([[0.0, 1.0], [1.0, 0.0]])
    want = np.kron(np.kron(x, z), x)
    assert np.array_equal(np.asarray(catalog.pauli_sigma(1, 3, 1)), want)


def test_sample_params_contract():
    a = catalog.sample_params("yb.star8.c34", count=4, seed=9)
    b = catalog.sample_params("yb.star8.c34", count=4, seed=9)
    assert a == b
    for params in a:
        for v in params.values():
            assert 0.5 <= abs(v) <= 2.0
    # constraints respected with margin
    for params in catalog.sample_params("aux.q4", count=5, seed=2):
        assert abs(params["a"] * params["d"] - params["c"]) > 0.05


def test_sample_params_pin_identified_parameters():
    for params in catalog.sample_params("yb.star4.cp1", count=3, seed=0, variant="second"):
        assert params["t"] == params["x"]


def test_manifest_matches_registry():
    assert catalog.load_manifest() == catalog.manifest_records()
    recs = catalog.manifest_records()
    assert len(recs) == len(EXPECTED_IDS)
    for rec in recs:
        assert set(rec) >= {
            "id",
            "anchor",
            "arity",
            "dimension",
            "parameters",
            "constraints",
            "variants",
        }


def test_declared_equation_passes():
    assert catalog.declared_equation_passes("yb.perm.bisymm", variant="first")
    assert catalog.declared_equation_passes(
        "tb.circ16.p13", {"x": 1.0, "y": 2.0}, variant="first-upper"
    )
    with pytest.raises(ValueError):
        catalog.declared_equation_passes("aux.q4", {"a": 1.0, "c": 0.5, "d": 2.0})
