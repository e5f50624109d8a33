"""Core matrix layer: Kronecker products, chains, spectra, rank, Penrose."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from polybraid import catalog
from polybraid.matrices import (
    EigenClaim,
    chain_product,
    char_poly,
    close,
    conj_transpose,
    eigencheck,
    identity,
    kron,
    matrix,
    numeric_rank,
    penrose_check,
    support,
)
from polybraid.polyadic import build_m2, build_m3

J4 = matrix(np.fliplr(np.identity(4)))
SWAP = catalog.build("yb.perm.bisymm", variant="first")

_entries = st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False)


def _mat(side: int):
    return hnp.arrays(np.complex128, (side, side), elements=_entries).map(matrix)


def test_kron_identity_blocks():
    assert np.array_equal(np.asarray(kron(identity(2), identity(2))), np.identity(4))


def test_kron_generic_square_matches_catalog_form():
    # kron of q = [[a,1],[c,d]] with itself must agree with the registered
    # 4x4 builder that spells the same block structure entrywise
    a, c, d = 1.3 + 0.2j, -0.7j, 2.0 - 1.0j
    q = matrix([[a, 1.0], [c, d]])
    built = catalog.build("aux.q4", {"a": a, "c": c, "d": d})
    assert np.allclose(np.asarray(kron(q, q)), np.asarray(built), atol=0, rtol=0)


def test_kron_triple_antidiagonal():
    rho1 = catalog.pauli_sigma(1, 4, 4)  # sigma_x (x) I (x) I has sigma_x block
    r = matrix([[0, 1], [1, 0]])
    triple = kron(kron(r, r), r)
    assert np.array_equal(np.asarray(triple), np.fliplr(np.identity(8)))
    assert np.array_equal(np.asarray(rho1), np.kron(np.array([[0, 1], [1, 0]]), np.identity(4)))


# dyadic-rational entries keep every intermediate product exactly
# representable, so associativity really is bit-for-bit
_dyadic = st.integers(-16, 16).map(lambda k: k / 8.0)
_dyadic_entries = st.tuples(_dyadic, _dyadic).map(lambda t: complex(*t))


def _dyadic_mat(side: int):
    return hnp.arrays(np.complex128, (side, side), elements=_dyadic_entries).map(matrix)


@settings(max_examples=25, deadline=None)
@given(a=_dyadic_mat(2), b=_dyadic_mat(2), c=_dyadic_mat(2))
def test_kron_associative_exact(a, b, c):
    left = kron(kron(a, b), c)
    right = kron(a, kron(b, c))
    assert np.array_equal(np.asarray(left), np.asarray(right))


@settings(max_examples=25, deadline=None)
@given(a=_mat(2), b=_mat(2), c=_mat(2), d=_mat(2))
def test_kron_mixed_product(a, b, c, d):
    # unit-norm inputs keep the 1e-12 bound meaningful
    mats = []
    for m in (a, b, c, d):
        arr = np.asarray(m)
        norm = np.linalg.norm(arr)
        if norm < 1e-6:
            arr = arr + np.identity(2)
            norm = np.linalg.norm(arr)
        mats.append(matrix(arr / norm))
    a, b, c, d = mats
    lhs = np.asarray(kron(a, b)) @ np.asarray(kron(c, d))
    rhs = np.asarray(kron(matrix(np.asarray(a) @ np.asarray(c)), matrix(np.asarray(b) @ np.asarray(d))))
    assert np.max(np.abs(lhs - rhs)) <= 1e-12


@settings(max_examples=25, deadline=None)
@given(a=_mat(3), b=_mat(3))
def test_conj_transpose_involution_and_antihomomorphism(a, b):
    assert np.array_equal(np.asarray(conj_transpose(conj_transpose(a))), np.asarray(a))
    lhs = np.asarray(conj_transpose(matrix(np.asarray(a) @ np.asarray(b))))
    rhs = np.asarray(conj_transpose(b)) @ np.asarray(conj_transpose(a))
    # product reversal is exact mathematics but the two matmuls may round
    # differently at the ulp level
    scale = max(1.0, float(np.max(np.abs(lhs))))
    assert np.max(np.abs(lhs - rhs)) <= 1e-14 * scale


def test_chain_product_basics():
    assert np.array_equal(np.asarray(chain_product([identity(4), identity(4)])), np.identity(4))
    r = matrix([[0, 1], [1, 0]])
    assert np.array_equal(np.asarray(chain_product([r, r])), np.identity(2))
    assert np.array_equal(np.asarray(chain_product([J4, J4, J4])), np.asarray(J4))
    assert np.array_equal(np.asarray(chain_product([], dim=3)), np.identity(3))


def test_chain_product_dimension_mismatch():
    with pytest.raises(ValueError):
        chain_product([identity(2), identity(4)])


def test_char_poly_small_cases():
    np.testing.assert_allclose(char_poly(identity(2)), [1.0, -2.0, 1.0], atol=1e-14)
    rho3 = matrix([[1, 0], [0, -1]])
    np.testing.assert_allclose(char_poly(rho3), [1.0, 0.0, -1.0], atol=1e-14)


def test_char_poly_star_family_double_roots():
    m = catalog.build("yb.star8.c24", {"x": 1.0, "y": 1.0}, variant="upper")
    claims = [EigenClaim(1 + 1j, 2), EigenClaim(1 - 1j, 2)]
    assert eigencheck(m, claims)


@settings(max_examples=20, deadline=None)
@given(m=_mat(3), p=_mat(3))
def test_char_poly_similarity_invariant(m, p):
    arr = np.asarray(p) + 3.0 * np.identity(3)  # push away from singularity
    if abs(np.linalg.det(arr)) < 1e-3:
        arr = arr + 3.0 * np.identity(3)
    sim = matrix(arr @ np.asarray(m) @ np.linalg.inv(arr))
    ref = char_poly(m)
    got = char_poly(sim)
    scale = max(1.0, float(np.max(np.abs(ref))))
    assert np.max(np.abs(ref - got)) <= 1e-9 * scale * np.linalg.cond(arr)


def test_eigencheck_cases():
    assert eigencheck(identity(4), [EigenClaim(1.0, 4)])
    # trace 2 and det -1 force one -1 against three 1s for the swap matrix
    assert eigencheck(SWAP, [EigenClaim(1.0, 3), EigenClaim(-1.0, 1)])
    assert not eigencheck(SWAP, [EigenClaim(1.0, 2), EigenClaim(-1.0, 2)])
    assert eigencheck(J4, [EigenClaim(1.0, 2), EigenClaim(-1.0, 2)])
    assert not eigencheck(SWAP, [EigenClaim(1.0, 4)])


def test_numeric_rank_values():
    assert numeric_rank(build_m3(0.3, 0.7, 1.1)) == 3
    assert numeric_rank(identity(5)) == 5
    m = catalog.build("yb.circ8.c2c", {"x": 1.0, "y": 1.0})
    assert numeric_rank(m) == 2


@settings(max_examples=20, deadline=None)
@given(a=_mat(2), b=_mat(2), kill_row=st.integers(0, 2))
def test_rank_multiplicative_under_kron(a, b, kill_row):
    arr = np.asarray(a).copy()
    if kill_row < 2:  # force a rank drop on some runs
        arr[kill_row, :] = 0.0
    a = matrix(arr)
    ra, rb = numeric_rank(a), numeric_rank(b)
    assert numeric_rank(kron(a, b)) == ra * rb


def test_penrose_check_examples():
    m3 = build_m3(0.2, 0.9, -0.4)
    assert penrose_check(m3, conj_transpose(m3))
    assert penrose_check(identity(4), identity(4))
    m2 = build_m2(0.5, 1.3)
    assert penrose_check(m2, conj_transpose(m2))
    assert not penrose_check(identity(4), matrix(2.0 * np.identity(4)))


def test_support_positions():
    assert support(J4) == frozenset({(0, 3), (1, 2), (2, 1), (3, 0)})


def test_close_uses_scale():
    a = matrix(1e6 * np.identity(3))
    b = matrix(1e6 * np.identity(3) + 1e-5)
    assert close(a, b)  # relative to the 1e6 scale
    assert not close(identity(3), matrix(np.identity(3) + 1e-5))
