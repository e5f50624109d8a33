"""Zero-pattern matrix classes, polyadic products, and partial unitarity.

The 4x4 and 8x8 solution matrices organize into support-pattern classes:
sparse "N" classes whose support is a single weighted permutation, and
wider "M" classes (star = diagonal + antidiagonal, circle = diagonal +
a crossed off-diagonal pattern, quad = the even part of a parity grading).
Binary products generally leave the N classes, but triple (and for the
4x4 circle family, five-fold) products return to them, which is what the
registered closure laws record. On top of the product laws the module
provides querelements (polyadic inverses), polyadic identities, and the
partial-unitarity analysis used for non-invertible gates.

A note on the partially-bounded pairing: for an operator U with left/right
diagonal patterns I1 = U*U and I2 = UU*, the partial inner product
< I1 psi | I2 phi > defines a new sesquilinear pairing. It is NOT equal to
the ordinary inner product < U psi | U phi >, which instead equals
< I1 psi | I1 phi > exactly; when I1 and I2 are orthogonal the partial
pairing vanishes identically even though U is nonzero.
"""

from __future__ import annotations

import cmath
import itertools
import math
import zlib
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .matrices import ComplexMatrix, conj_transpose, matrix

Params = Mapping[str, complex]


class ShapeClass(Enum):
    NSTAR1 = "Nstar1"
    NSTAR2 = "Nstar2"
    NCIRC1 = "Ncirc1"
    NCIRC2 = "Ncirc2"
    MSTAR = "Mstar"
    MCIRC = "Mcirc"
    NSTAR1P = "Nstar1p"
    NSTAR2P = "Nstar2p"
    NCIRC1P = "Ncirc1p"
    NCIRC2P = "Ncirc2p"
    MSTARP = "Mstarp"
    MCIRCP = "Mcircp"
    MQUADP = "Mquadp"
    DIAG = "Diag"
    ADIAG = "ADiag"
    OTHER = "Other"


def _pat(positions: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    # positions are written 1-based to mirror the displays; stored 0-based
    return frozenset((r - 1, c - 1) for r, c in positions)


_N4 = {
    ShapeClass.NSTAR1: _pat([(1, 1), (2, 3), (3, 2), (4, 4)]),
    ShapeClass.NSTAR2: _pat([(1, 4), (2, 2), (3, 3), (4, 1)]),
    ShapeClass.NCIRC1: _pat([(1, 3), (2, 1), (3, 4), (4, 2)]),
    ShapeClass.NCIRC2: _pat([(1, 2), (2, 4), (3, 1), (4, 3)]),
}

_N8 = {
    ShapeClass.NSTAR1P: _pat(
        [(1, 1), (2, 7), (3, 3), (4, 5), (5, 4), (6, 6), (7, 2), (8, 8)]
    ),
    ShapeClass.NSTAR2P: _pat(
        [(1, 8), (2, 2), (3, 6), (4, 4), (5, 5), (6, 3), (7, 7), (8, 1)]
    ),
    ShapeClass.NCIRC1P: _pat(
        [(1, 1), (2, 5), (3, 8), (4, 4), (5, 2), (6, 6), (7, 7), (8, 3)]
    ),
    ShapeClass.NCIRC2P: _pat(
        [(1, 6), (2, 2), (3, 3), (4, 7), (5, 5), (6, 1), (7, 4), (8, 8)]
    ),
}


def _diag(dim: int) -> frozenset[tuple[int, int]]:
    return frozenset((i, i) for i in range(dim))


def _adiag(dim: int) -> frozenset[tuple[int, int]]:
    return frozenset((i, dim - 1 - i) for i in range(dim))


_CIRC8_OFF = _pat([(1, 6), (2, 5), (3, 8), (4, 7), (5, 2), (6, 1), (7, 4), (8, 3)])

_QUAD_EVEN = (0, 2, 5, 7)  # 0-based rows/cols {1,3,6,8}
_QUAD_ODD = (1, 3, 4, 6)

_M4 = {
    ShapeClass.MSTAR: _diag(4) | _adiag(4),
    ShapeClass.MCIRC: _pat(
        [(1, 2), (1, 3), (2, 1), (2, 4), (3, 1), (3, 4), (4, 2), (4, 3)]
    ),
}

_M8 = {
    ShapeClass.MSTARP: _diag(8) | _adiag(8),
    ShapeClass.MCIRCP: _diag(8) | _CIRC8_OFF,
    ShapeClass.MQUADP: frozenset(
        itertools.chain(
            itertools.product(_QUAD_EVEN, _QUAD_EVEN),
            itertools.product(_QUAD_ODD, _QUAD_ODD),
        )
    ),
}

_CLASS_DIM = {
    **{tag: 4 for tag in (*_N4, *_M4)},
    **{tag: 8 for tag in (*_N8, *_M8)},
}


def class_support(tag: ShapeClass, dim: int | None = None) -> frozenset[tuple[int, int]]:
    """0-based support pattern of a class; Diag/ADiag need the dimension."""
    if tag in _CLASS_DIM:
        want = _CLASS_DIM[tag]
        if dim is not None and dim != want:
            raise ValueError(f"{tag.value} lives in dimension {want}")
        return {**_N4, **_N8, **_M4, **_M8}[tag]
    if tag in (ShapeClass.DIAG, ShapeClass.ADIAG):
        if dim is None:
            raise ValueError(f"{tag.value} needs an explicit dimension")
        return _diag(dim) if tag is ShapeClass.DIAG else _adiag(dim)
    raise ValueError(f"{tag.value} has no support pattern")


def _support_of(m: np.ndarray, tol: float) -> frozenset[tuple[int, int]]:
    if tol <= 0.0:
        rows, cols = np.nonzero(m)
    else:
        rows, cols = np.nonzero(np.abs(m) > tol * max(1.0, float(np.max(np.abs(m)))))
    return frozenset(zip(rows.tolist(), cols.tolist()))


def is_member(m: ComplexMatrix, tag: ShapeClass, tol: float = 0.0) -> bool:
    """Support containment in the class pattern (structural zeros are exact)."""
    a = np.asarray(m)
    return _support_of(a, tol) <= class_support(tag, a.shape[0])


def classify(m: ComplexMatrix, tol: float = 0.0) -> ShapeClass:
    """Most specific pattern class of a 4x4 or 8x8 matrix.

    Purely (anti)diagonal support wins over the wider star/circle classes;
    the sparse N classes require their exact support with every position
    filled; the M classes match by containment.
    """
    a = np.asarray(m)
    dim = a.shape[0]
    if a.shape != (dim, dim) or dim not in (4, 8):
        raise ValueError("classification supports dimensions 4 and 8 only")
    supp = _support_of(a, tol)
    if supp <= _diag(dim):
        return ShapeClass.DIAG
    if supp <= _adiag(dim):
        return ShapeClass.ADIAG
    n_classes = _N4 if dim == 4 else _N8
    for tag, pattern in n_classes.items():
        if supp == pattern:
            return tag
    m_classes = _M4 if dim == 4 else _M8
    for tag, pattern in m_classes.items():
        if supp <= pattern:
            return tag
    return ShapeClass.OTHER


def random_member(
    tag: ShapeClass, rng: np.random.Generator, dim: int | None = None
) -> ComplexMatrix:
    """A class member with every support entry random of modulus in [0.5, 2]."""
    pattern = class_support(tag, dim)
    size = _CLASS_DIM.get(tag, dim)
    m = np.zeros((size, size), dtype=np.complex128)
    for r, c in sorted(pattern):
        rad = rng.uniform(0.5, 2.0)
        th = rng.uniform(0.0, 2.0 * np.pi)
        m[r, c] = rad * cmath.exp(1j * th)
    return matrix(m)


# ---------------------------------------------------------------------------
# named builders for the pattern classes
# ---------------------------------------------------------------------------


def _from_map(dim: int, placed: Mapping[tuple[int, int], complex]) -> ComplexMatrix:
    m = np.zeros((dim, dim), dtype=np.complex128)
    for (r, c), v in placed.items():
        m[r - 1, c - 1] = v
    return matrix(m)


def build_nstar1(p: Params) -> ComplexMatrix:
    return _from_map(4, {(1, 1): p["x"], (2, 3): p["y"], (3, 2): p["z"], (4, 4): p["t"]})


def build_nstar2(p: Params) -> ComplexMatrix:
    return _from_map(4, {(1, 4): p["y"], (2, 2): p["x"], (3, 3): p["t"], (4, 1): p["z"]})


def build_ncirc1(p: Params) -> ComplexMatrix:
    return _from_map(4, {(1, 3): p["x"], (2, 1): p["y"], (3, 4): p["z"], (4, 2): p["t"]})


def build_ncirc2(p: Params) -> ComplexMatrix:
    return _from_map(4, {(1, 2): p["x"], (2, 4): p["y"], (3, 1): p["z"], (4, 3): p["t"]})


def build_mstar(p: Params) -> ComplexMatrix:
    return _from_map(
        4,
        {
            (1, 1): p["x"], (1, 4): p["y"],
            (2, 2): p["z"], (2, 3): p["s"],
            (3, 2): p["t"], (3, 3): p["u"],
            (4, 1): p["v"], (4, 4): p["w"],
        },
    )


def build_mcirc(p: Params) -> ComplexMatrix:
    return _from_map(
        4,
        {
            (1, 2): p["x"], (1, 3): p["y"],
            (2, 1): p["z"], (2, 4): p["s"],
            (3, 1): p["t"], (3, 4): p["u"],
            (4, 2): p["v"], (4, 3): p["w"],
        },
    )


def build_nstar1p(p: Params) -> ComplexMatrix:
    return _from_map(
        8,
        {
            (1, 1): p["x"], (2, 7): p["y"], (3, 3): p["z"], (4, 5): p["s"],
            (5, 4): p["t"], (6, 6): p["u"], (7, 2): p["v"], (8, 8): p["w"],
        },
    )


def build_nstar2p(p: Params) -> ComplexMatrix:
    return _from_map(
        8,
        {
            (1, 8): p["y"], (2, 2): p["x"], (3, 6): p["s"], (4, 4): p["z"],
            (5, 5): p["u"], (6, 3): p["t"], (7, 7): p["w"], (8, 1): p["v"],
        },
    )


def build_ncirc1p(p: Params) -> ComplexMatrix:
    return _from_map(
        8,
        {
            (1, 1): p["x"], (2, 5): p["y"], (3, 8): p["z"], (4, 4): p["s"],
            (5, 2): p["t"], (6, 6): p["u"], (7, 7): p["v"], (8, 3): p["w"],
        },
    )


def build_ncirc2p(p: Params) -> ComplexMatrix:
    return _from_map(
        8,
        {
            (1, 6): p["y"], (2, 2): p["x"], (3, 3): p["s"], (4, 7): p["z"],
            (5, 5): p["u"], (6, 1): p["t"], (7, 4): p["w"], (8, 8): p["v"],
        },
    )


_M8_PARAMS = ("x", "y", "z", "s", "t", "u", "v", "w", "a", "b", "c", "d", "f", "g", "h", "p")


def build_mstar8(p: Params) -> ComplexMatrix:
    return _from_map(
        8,
        {
            (1, 1): p["x"], (1, 8): p["y"],
            (2, 2): p["z"], (2, 7): p["s"],
            (3, 3): p["t"], (3, 6): p["u"],
            (4, 4): p["v"], (4, 5): p["w"],
            (5, 4): p["a"], (5, 5): p["b"],
            (6, 3): p["c"], (6, 6): p["d"],
            (7, 2): p["f"], (7, 7): p["g"],
            (8, 1): p["h"], (8, 8): p["p"],
        },
    )


def build_mcirc8(p: Params) -> ComplexMatrix:
    return _from_map(
        8,
        {
            (1, 1): p["x"], (1, 6): p["y"],
            (2, 2): p["z"], (2, 5): p["s"],
            (3, 3): p["t"], (3, 8): p["u"],
            (4, 4): p["v"], (4, 7): p["w"],
            (5, 2): p["f"], (5, 5): p["g"],
            (6, 1): p["h"], (6, 6): p["p"],
            (7, 4): p["a"], (7, 7): p["b"],
            (8, 3): p["c"], (8, 8): p["d"],
        },
    )


# ---------------------------------------------------------------------------
# querelements
# ---------------------------------------------------------------------------


def querelement(m: ComplexMatrix, k: int, tol: float = 1e-9) -> ComplexMatrix:
    """Polyadic inverse for the k-ary product: m-bar = m^(2-k).

    Verifies the defining relation (k-1 copies of m and one m-bar, the bar
    in any position, multiply to m) before returning.
    """
    if k < 3:
        raise ValueError("querelements are defined for arity k >= 3")
    a = np.asarray(m)
    try:
        bar = np.linalg.matrix_power(a, 2 - k)
    except np.linalg.LinAlgError as exc:
        raise ValueError("querelement needs an invertible matrix") from exc
    scale = max(1.0, float(np.max(np.abs(a))))
    for pos in range(k):
        factors = [a] * k
        factors[pos] = bar
        prod = factors[0]
        for f in factors[1:]:
            prod = prod @ f
        if float(np.max(np.abs(prod - a))) > tol * scale:
            raise ValueError("querelement defining relation failed numerically")
    return matrix(bar)


def _inv(v: complex) -> complex:
    return 1.0 / v


_QUER_CASES: dict[str, tuple[tuple[ShapeClass, int, Callable, Callable], ...]] = {
    # (class, arity k, member builder, printed querelement builder)
    "nn": (
        (
            ShapeClass.NSTAR1,
            3,
            build_nstar1,
            lambda p: _from_map(
                4,
                {(1, 1): _inv(p["x"]), (2, 3): _inv(p["z"]), (3, 2): _inv(p["y"]), (4, 4): _inv(p["t"])},
            ),
        ),
        (
            ShapeClass.NSTAR2,
            3,
            build_nstar2,
            lambda p: _from_map(
                4,
                {(1, 4): _inv(p["z"]), (2, 2): _inv(p["x"]), (3, 3): _inv(p["t"]), (4, 1): _inv(p["y"])},
            ),
        ),
        (
            ShapeClass.NCIRC1,
            5,
            build_ncirc1,
            lambda p: _from_map(
                4,
                {
                    (1, 3): 1 / (p["y"] * p["z"] * p["t"]),
                    (2, 1): 1 / (p["x"] * p["z"] * p["t"]),
                    (3, 4): 1 / (p["x"] * p["y"] * p["t"]),
                    (4, 2): 1 / (p["x"] * p["y"] * p["z"]),
                },
            ),
        ),
        (
            ShapeClass.NCIRC2,
            5,
            build_ncirc2,
            lambda p: _from_map(
                4,
                {
                    (1, 2): 1 / (p["y"] * p["z"] * p["t"]),
                    (2, 4): 1 / (p["x"] * p["z"] * p["t"]),
                    (3, 1): 1 / (p["x"] * p["y"] * p["t"]),
                    (4, 3): 1 / (p["x"] * p["y"] * p["z"]),
                },
            ),
        ),
    ),
    "nq1": (
        (
            ShapeClass.NSTAR1P,
            3,
            build_nstar1p,
            lambda p: _from_map(
                8,
                {
                    (1, 1): _inv(p["x"]), (2, 7): _inv(p["v"]), (3, 3): _inv(p["z"]),
                    (4, 5): _inv(p["t"]), (5, 4): _inv(p["s"]), (6, 6): _inv(p["u"]),
                    (7, 2): _inv(p["y"]), (8, 8): _inv(p["w"]),
                },
            ),
        ),
        (
            ShapeClass.NSTAR2P,
            3,
            build_nstar2p,
            lambda p: _from_map(
                8,
                {
                    (1, 8): _inv(p["v"]), (2, 2): _inv(p["x"]), (3, 6): _inv(p["t"]),
                    (4, 4): _inv(p["z"]), (5, 5): _inv(p["u"]), (6, 3): _inv(p["s"]),
                    (7, 7): _inv(p["w"]), (8, 1): _inv(p["y"]),
                },
            ),
        ),
    ),
    "nq2": (
        (
            ShapeClass.NCIRC1P,
            3,
            build_ncirc1p,
            lambda p: _from_map(
                8,
                {
                    (1, 1): _inv(p["x"]), (2, 5): _inv(p["t"]), (3, 8): _inv(p["w"]),
                    (4, 4): _inv(p["s"]), (5, 2): _inv(p["y"]), (6, 6): _inv(p["u"]),
                    (7, 7): _inv(p["v"]), (8, 3): _inv(p["z"]),
                },
            ),
        ),
        (
            ShapeClass.NCIRC2P,
            3,
            build_ncirc2p,
            lambda p: _from_map(
                8,
                {
                    (1, 6): _inv(p["t"]), (2, 2): _inv(p["x"]), (3, 3): _inv(p["s"]),
                    (4, 7): _inv(p["w"]), (5, 5): _inv(p["u"]), (6, 1): _inv(p["y"]),
                    (7, 4): _inv(p["z"]), (8, 8): _inv(p["v"]),
                },
            ),
        ),
    ),
}

_QUER_PARAM_NAMES = {
    ShapeClass.NSTAR1: ("x", "y", "z", "t"),
    ShapeClass.NSTAR2: ("x", "y", "z", "t"),
    ShapeClass.NCIRC1: ("x", "y", "z", "t"),
    ShapeClass.NCIRC2: ("x", "y", "z", "t"),
    ShapeClass.NSTAR1P: ("x", "y", "z", "s", "t", "u", "v", "w"),
    ShapeClass.NSTAR2P: ("x", "y", "z", "s", "t", "u", "v", "w"),
    ShapeClass.NCIRC1P: ("x", "y", "z", "s", "t", "u", "v", "w"),
    ShapeClass.NCIRC2P: ("x", "y", "z", "s", "t", "u", "v", "w"),
}


# ---------------------------------------------------------------------------
# polyadic identities
# ---------------------------------------------------------------------------


def polyadic_identity_check(
    e: ComplexMatrix,
    k: int,
    cls: ShapeClass,
    samples: int = 5,
    seed: int = 0,
    tol: float = 1e-9,
) -> bool:
    """Whether e acts as a k-ary identity on the given pattern class.

    Requires e^(k-1) = I. End insertions (the member leftmost or rightmost
    among the k factors) must reproduce the member pointwise; interior
    insertions are checked for class membership, since pattern-preserving
    identities may permute the free entries of an interior member.
    """
    a = np.asarray(e)
    dim = a.shape[0]
    if cls is ShapeClass.OTHER:
        raise ValueError("cannot check the identity property against Other")
    power = np.linalg.matrix_power(a, k - 1)
    if float(np.max(np.abs(power - np.identity(dim)))) > tol:
        return False
    rng = np.random.default_rng([seed, a.shape[0], k])
    for _ in range(samples):
        member = np.asarray(random_member(cls, rng, dim))
        scale = max(1.0, float(np.max(np.abs(member))))
        for pos in range(k):
            factors = [a] * k
            factors[pos] = member
            prod = factors[0]
            for f in factors[1:]:
                prod = prod @ f
            if pos in (0, k - 1):
                if float(np.max(np.abs(prod - member))) > tol * scale:
                    return False
            else:
                if not is_member(prod, cls, tol=1e-12):
                    return False
    return True


@dataclass(frozen=True)
class IdentityFamily:
    """A parametric k-ary identity with its class and phase constraints."""

    name: str
    k: int
    cls: ShapeClass
    param_names: tuple[str, ...]
    member: Callable[[dict], ComplexMatrix]
    sample: Callable[[np.random.Generator], dict]


def _phase_map(dim: int, placed: Mapping[tuple[int, int], complex]) -> ComplexMatrix:
    return _from_map(dim, {rc: cmath.exp(1j * v) for rc, v in placed.items()})


def _half_turn(rng: np.random.Generator) -> float:
    return math.pi * float(rng.integers(0, 2))


def _is1_member(p: dict) -> ComplexMatrix:
    return _phase_map(4, {(1, 1): p["a1"], (2, 3): p["a2"], (3, 2): p["a3"], (4, 4): p["a4"]})


def _is1_sample(rng: np.random.Generator) -> dict:
    a2 = rng.uniform(0.0, 2.0 * math.pi)
    return {"a1": _half_turn(rng), "a2": a2, "a3": -a2, "a4": _half_turn(rng)}


def _is2_member(p: dict) -> ComplexMatrix:
    return _phase_map(4, {(1, 4): p["a1"], (2, 2): p["a2"], (3, 3): p["a3"], (4, 1): p["a4"]})


def _is2_sample(rng: np.random.Generator) -> dict:
    a1 = rng.uniform(0.0, 2.0 * math.pi)
    return {"a1": a1, "a2": _half_turn(rng), "a3": _half_turn(rng), "a4": -a1}


def _ic1_member(p: dict) -> ComplexMatrix:
    return _phase_map(4, {(1, 3): p["a1"], (2, 1): p["a2"], (3, 4): p["a3"], (4, 2): p["a4"]})


def _ic2_member(p: dict) -> ComplexMatrix:
    return _phase_map(4, {(1, 2): p["a1"], (2, 4): p["a2"], (3, 1): p["a3"], (4, 3): p["a4"]})


def _ic_sample(rng: np.random.Generator) -> dict:
    a1, a2, a3 = rng.uniform(0.0, 2.0 * math.pi, size=3)
    return {"a1": a1, "a2": a2, "a3": a3, "a4": -(a1 + a2 + a3)}


def _istar1p_member(p: dict) -> ComplexMatrix:
    return _phase_map(
        8,
        {
            (1, 1): p["a1"], (2, 7): p["a2"], (3, 3): p["a3"], (4, 5): p["a4"],
            (5, 4): p["a5"], (6, 6): p["a6"], (7, 2): p["a7"], (8, 8): p["a8"],
        },
    )


def _istar2p_member(p: dict) -> ComplexMatrix:
    return _phase_map(
        8,
        {
            (1, 8): p["a2"], (2, 2): p["a1"], (3, 6): p["a4"], (4, 4): p["a3"],
            (5, 5): p["a6"], (6, 3): p["a5"], (7, 7): p["a8"], (8, 1): p["a7"],
        },
    )


def _istar_sample(rng: np.random.Generator) -> dict:
    a2 = rng.uniform(0.0, 2.0 * math.pi)
    a4 = rng.uniform(0.0, 2.0 * math.pi)
    return {
        "a1": _half_turn(rng), "a3": _half_turn(rng),
        "a6": _half_turn(rng), "a8": _half_turn(rng),
        "a2": a2, "a7": -a2, "a4": a4, "a5": -a4,
    }


def _icirc1p_member(p: dict) -> ComplexMatrix:
    return _phase_map(
        8,
        {
            (1, 1): p["a1"], (2, 5): p["a2"], (3, 8): p["a3"], (4, 4): p["a4"],
            (5, 2): p["a5"], (6, 6): p["a6"], (7, 7): p["a7"], (8, 3): p["a8"],
        },
    )


def _icirc2p_member(p: dict) -> ComplexMatrix:
    return _phase_map(
        8,
        {
            (1, 6): p["a2"], (2, 2): p["a1"], (3, 3): p["a4"], (4, 7): p["a3"],
            (5, 5): p["a6"], (6, 1): p["a5"], (7, 4): p["a8"], (8, 8): p["a7"],
        },
    )


def _icirc_sample(rng: np.random.Generator) -> dict:
    a2 = rng.uniform(0.0, 2.0 * math.pi)
    a3 = rng.uniform(0.0, 2.0 * math.pi)
    return {
        "a1": _half_turn(rng), "a4": _half_turn(rng),
        "a6": _half_turn(rng), "a7": _half_turn(rng),
        "a2": a2, "a5": -a2, "a3": a3, "a8": -a3,
    }


def _i3c1_member(p: dict) -> ComplexMatrix:
    a, b, c = p["a"], p["b"], p["c"]
    return _from_map(
        4,
        {(1, 2): 1 / a, (1, 3): b, (2, 1): a, (2, 4): -a * b / c, (3, 4): 1 / c, (4, 3): c},
    )


def _i3c2_member(p: dict) -> ComplexMatrix:
    a, b, c = p["a"], p["b"], p["c"]
    return _from_map(
        4,
        {(1, 2): -a * b / c, (1, 3): 1 / c, (2, 4): 1 / b, (3, 1): c, (3, 4): a, (4, 2): b},
    )


def _i3c3_member(p: dict) -> ComplexMatrix:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    return _from_map(
        4,
        {
            (1, 2): -a * b / c, (1, 3): (1 - a * d) / c,
            (2, 1): -c * d / b, (2, 4): (1 - a * d) / b,
            (3, 1): c, (3, 4): a,
            (4, 2): b, (4, 3): d,
        },
    )


def _nonzero_complex(rng: np.random.Generator) -> complex:
    return rng.uniform(0.5, 2.0) * cmath.exp(1j * rng.uniform(0.0, 2.0 * math.pi))


def _i3c_sample_abc(rng: np.random.Generator) -> dict:
    return {name: _nonzero_complex(rng) for name in ("a", "b", "c")}


def _i3c_sample_abcd(rng: np.random.Generator) -> dict:
    return {name: _nonzero_complex(rng) for name in ("a", "b", "c", "d")}


IDENTITY_FAMILIES: dict[str, IdentityFamily] = {
    f.name: f
    for f in (
        IdentityFamily("is1", 3, ShapeClass.NSTAR1, ("a1", "a2", "a3", "a4"), _is1_member, _is1_sample),
        IdentityFamily("is2", 3, ShapeClass.NSTAR2, ("a1", "a2", "a3", "a4"), _is2_member, _is2_sample),
        IdentityFamily("ic1", 5, ShapeClass.NCIRC1, ("a1", "a2", "a3", "a4"), _ic1_member, _ic_sample),
        IdentityFamily("ic2", 5, ShapeClass.NCIRC2, ("a1", "a2", "a3", "a4"), _ic2_member, _ic_sample),
        IdentityFamily(
            "istar1p", 3, ShapeClass.NSTAR1P,
            tuple(f"a{i}" for i in range(1, 9)), _istar1p_member, _istar_sample,
        ),
        IdentityFamily(
            "istar2p", 3, ShapeClass.NSTAR2P,
            tuple(f"a{i}" for i in range(1, 9)), _istar2p_member, _istar_sample,
        ),
        IdentityFamily(
            "icirc1p", 3, ShapeClass.NCIRC1P,
            tuple(f"a{i}" for i in range(1, 9)), _icirc1p_member, _icirc_sample,
        ),
        IdentityFamily(
            "icirc2p", 3, ShapeClass.NCIRC2P,
            tuple(f"a{i}" for i in range(1, 9)), _icirc2p_member, _icirc_sample,
        ),
        IdentityFamily("i3c1", 3, ShapeClass.MCIRC, ("a", "b", "c"), _i3c1_member, _i3c_sample_abc),
        IdentityFamily("i3c2", 3, ShapeClass.MCIRC, ("a", "b", "c"), _i3c2_member, _i3c_sample_abc),
        IdentityFamily("i3c3", 3, ShapeClass.MCIRC, ("a", "b", "c", "d"), _i3c3_member, _i3c_sample_abcd),
    )
}


# ---------------------------------------------------------------------------
# law registry
# ---------------------------------------------------------------------------

_S1, _S2 = ShapeClass.NSTAR1, ShapeClass.NSTAR2
_C1, _C2 = ShapeClass.NCIRC1, ShapeClass.NCIRC2
_MS, _MC = ShapeClass.MSTAR, ShapeClass.MCIRC
_S1P, _S2P = ShapeClass.NSTAR1P, ShapeClass.NSTAR2P
_C1P, _C2P = ShapeClass.NCIRC1P, ShapeClass.NCIRC2P
_MSP, _MCP, _MQP = ShapeClass.MSTARP, ShapeClass.MCIRCP, ShapeClass.MQUADP

Statement = tuple[tuple[ShapeClass, ...], ShapeClass]

_CLOSURE_LAWS: dict[str, tuple[Statement, ...]] = {
    "ns1": (((_S1,) * 3, _S1),),
    "ns2": (((_S2,) * 3, _S2),),
    "nc1": (((_C1,) * 5, _C1),),
    "nc2": (((_C2,) * 5, _C2),),
    "sss1": (((_S1, _S2, _S1), _S2), ((_C1, _C2, _C1), _C1)),
    "sss2": (((_S1, _S1, _S2), _S2), ((_C1, _C1, _C2), _C1)),
    "sss3": (((_S2, _S1, _S1), _S2), ((_C2, _C1, _C1), _C1)),
    "sss4": (((_S2, _S2, _S1), _S1), ((_C2, _C2, _C1), _C2)),
    "sss5": (((_S2, _S1, _S2), _S1), ((_C2, _C1, _C2), _C2)),
    "sss6": (((_S1, _S2, _S2), _S1), ((_C1, _C2, _C2), _C2)),
    "scs1": (((_S1, _C1, _S1), _C2), ((_S1, _C2, _S1), _C1)),
    "scs2": (((_S2, _C1, _S2), _C2), ((_S2, _C2, _S2), _C1)),
    "scs3": (((_S1, _S1, _C1), _C1), ((_C1, _S1, _S1), _C1)),
    "scs4": (((_S1, _S1, _C2), _C2), ((_C2, _S1, _S1), _C2)),
    "scs5": (((_S2, _S2, _C1), _C1), ((_C1, _S2, _S2), _C1)),
    "scs6": (((_S2, _S2, _C2), _C2), ((_C2, _S2, _S2), _C2)),
    "csc1": (((_C1, _S1, _C1), _S1), ((_C1, _S2, _C1), _S2)),
    "csc2": (((_C2, _S1, _C2), _S1), ((_C2, _S2, _C2), _S2)),
    "csc3": (((_C1, _C1, _S1), _S2), ((_S1, _C1, _C1), _S2)),
    "csc4": (((_C1, _C1, _S2), _S1), ((_S2, _C1, _C1), _S1)),
    "csc5": (((_C2, _C2, _S1), _S2), ((_S1, _C2, _C2), _S2)),
    "csc6": (((_C2, _C2, _S2), _S1), ((_S2, _C2, _C2), _S1)),
    "ccc1": (((_C1, _C1, _C1, _C1, _S1), _S1), ((_C1, _C1, _C1, _C1, _S2), _S2)),
    "ccc2": (((_S1, _C1, _C1, _C1, _C1), _S1), ((_S2, _C1, _C1, _C1, _C1), _S2)),
    "ccc3": (((_C2, _C2, _C2, _C2, _S1), _S1), ((_C2, _C2, _C2, _C2, _S2), _S2)),
    "ccc4": (((_S1, _C2, _C2, _C2, _C2), _S1), ((_S2, _C2, _C2, _C2, _C2), _S2)),
    "ccc5": (((_C1, _C1, _C1, _C1, _C2), _C2), ((_C2, _C1, _C1, _C1, _C1), _C2)),
    "ccc6": (((_C2, _C2, _C2, _C2, _C1), _C1), ((_C1, _C2, _C2, _C2, _C2), _C1)),
    "mmm": (((_MS, _MS), _MS),),
    "mmm1": (((_MS, _MC), _MC), ((_MC, _MS), _MC)),
    "mmm2": (((_MC, _MC), _MS),),
    "mc": (((_MC, _MC, _MC), _MC),),
    "nns1": (((_S1P,) * 3, _S1P),),
    "nns2": (((_S2P,) * 3, _S2P),),
    "nnc1": (((_C1P,) * 3, _C1P),),
    "nnc2": (((_C2P,) * 3, _C2P),),
    "s8s1": (((_S1P, _S2P, _S1P), _S2P), ((_C1P, _C2P, _C1P), _C2P)),
    "s8s2": (((_S1P, _S1P, _S2P), _S2P), ((_C1P, _C1P, _C2P), _C2P)),
    "s8s3": (((_S2P, _S1P, _S1P), _S2P), ((_C2P, _C1P, _C1P), _C2P)),
    "s8s4": (((_S2P, _S2P, _S1P), _S1P), ((_C2P, _C2P, _C1P), _C1P)),
    "s8s5": (((_S2P, _S1P, _S2P), _S1P), ((_C2P, _C1P, _C2P), _C1P)),
    "s8s6": (((_S1P, _S2P, _S2P), _S1P), ((_C1P, _C2P, _C2P), _C1P)),
    "s8c3": (((_S1P, _S1P, _C1P), _C1P), ((_C1P, _S1P, _S1P), _C1P)),
    "s8c4": (((_S1P, _S1P, _C2P), _C2P), ((_C2P, _S1P, _S1P), _C2P)),
    "s8c5": (((_S2P, _S2P, _C1P), _C1P), ((_C1P, _S2P, _S2P), _C1P)),
    "s8c6": (((_S2P, _S2P, _C2P), _C2P), ((_C2P, _S2P, _S2P), _C2P)),
    "c8c1": (((_C1P, _C1P, _S1P), _S1P), ((_S1P, _C1P, _C1P), _S1P)),
    "c8c2": (((_C1P, _C1P, _S2P), _S2P), ((_S2P, _C1P, _C1P), _S2P)),
    "c8c3": (((_C2P, _C2P, _S1P), _S1P), ((_S1P, _C2P, _C2P), _S1P)),
    "c8c4": (((_C2P, _C2P, _S2P), _S2P), ((_S2P, _C2P, _C2P), _S2P)),
    "mm8": (((_MSP, _MSP), _MSP), ((_MCP, _MCP), _MCP)),
    "mcq": (((_MSP, _MCP), _MQP), ((_MCP, _MSP), _MQP)),
    "mq": (((_MQP, _MQP), _MQP),),
}

_IDENTITY_LAWS: dict[str, tuple[str, ...]] = {
    "is": ("is1", "is2", "istar1p", "istar2p"),
    "ic": ("ic1", "ic2", "icirc1p", "icirc2p"),
    "i3c": ("i3c1", "i3c2", "i3c3"),
}


CLOSURE_LAW_IDS: tuple[str, ...] = tuple(_CLOSURE_LAWS)
QUERELEMENT_LAW_IDS: tuple[str, ...] = tuple(_QUER_CASES)
IDENTITY_LAW_IDS: tuple[str, ...] = tuple(_IDENTITY_LAWS)


def law_ids() -> tuple[str, ...]:
    return CLOSURE_LAW_IDS + QUERELEMENT_LAW_IDS + IDENTITY_LAW_IDS


def _law_rng(law_id: str, seed: int) -> np.random.Generator:
    return np.random.default_rng([seed, zlib.crc32(law_id.encode())])


def closure_check(law_id: str, samples: int = 20, seed: int = 0) -> bool:
    """Sampled zero-pattern closure: classify(product) equals the stated class."""
    if law_id not in _CLOSURE_LAWS:
        raise KeyError(f"unknown closure law {law_id!r}")
    rng = _law_rng(law_id, seed)
    for operands, output in _CLOSURE_LAWS[law_id]:
        for _ in range(samples):
            prod = np.asarray(random_member(operands[0], rng))
            for tag in operands[1:]:
                prod = prod @ np.asarray(random_member(tag, rng))
            if classify(prod) is not output:
                return False
    return True


def _querelement_law_check(law_id: str, samples: int, seed: int, tol: float) -> bool:
    rng = _law_rng(law_id, seed)
    for cls, k, member_builder, quer_builder in _QUER_CASES[law_id]:
        names = _QUER_PARAM_NAMES[cls]
        for _ in range(samples):
            p = {name: _nonzero_complex(rng) for name in names}
            m = member_builder(p)
            got = np.asarray(querelement(m, k, tol))
            want = np.asarray(quer_builder(p))
            scale = max(1.0, float(np.max(np.abs(want))))
            if float(np.max(np.abs(got - want))) > tol * scale:
                return False
    return True


def _identity_law_check(law_id: str, samples: int, seed: int, tol: float) -> bool:
    rng = _law_rng(law_id, seed)
    for name in _IDENTITY_LAWS[law_id]:
        fam = IDENTITY_FAMILIES[name]
        for i in range(samples):
            e = fam.member(fam.sample(rng))
            if not polyadic_identity_check(e, fam.k, fam.cls, samples=3, seed=seed + i, tol=tol):
                return False
    return True


def law_check(law_id: str, samples: int = 20, seed: int = 0, tol: float = 1e-9) -> bool:
    """Run any registered law: closure, querelement formula, or identity family."""
    if law_id in _CLOSURE_LAWS:
        return closure_check(law_id, samples, seed)
    if law_id in _QUER_CASES:
        return _querelement_law_check(law_id, samples, seed, tol)
    if law_id in _IDENTITY_LAWS:
        return _identity_law_check(law_id, samples, seed, tol)
    raise KeyError(f"unknown law {law_id!r}")


# ---------------------------------------------------------------------------
# partial identities and partial unitarity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PartialIdentityPattern:
    """A diagonal 0/1 pattern; "block" when the ones form a prefix."""

    dimension: int
    mask: tuple[int, ...]
    rank: int
    kind: str  # "block" | "shuffle"

    @staticmethod
    def from_mask(mask: Sequence[int]) -> "PartialIdentityPattern":
        bits = tuple(int(b) for b in mask)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("mask entries must be 0 or 1")
        rank = sum(bits)
        kind = "block" if bits[:rank] == (1,) * rank else "shuffle"
        return PartialIdentityPattern(len(bits), bits, rank, kind)

    @property
    def as_matrix(self) -> ComplexMatrix:
        return matrix(np.diag(np.array(self.mask, dtype=np.complex128)))


def _pattern_from_product(prod: np.ndarray, tol: float) -> PartialIdentityPattern | None:
    dim = prod.shape[0]
    off = prod - np.diag(np.diag(prod))
    if float(np.max(np.abs(off))) > tol:
        return None
    mask = []
    for v in np.diag(prod):
        if abs(v) <= tol:
            mask.append(0)
        elif abs(v - 1.0) <= tol:
            mask.append(1)
        else:
            return None
    return PartialIdentityPattern.from_mask(mask)


def partial_unitarity(
    m: ComplexMatrix, tol: float = 1e-10
) -> tuple[PartialIdentityPattern | None, PartialIdentityPattern | None, bool]:
    """Diagonal 0/1 patterns of m*m and m m*, and whether they are orthogonal.

    A side is reported only when the product is a clean 0/1 diagonal within
    tol; orthogonality means the two patterns multiply to zero.
    """
    a = np.asarray(m)
    star = np.asarray(conj_transpose(a))
    left = _pattern_from_product(star @ a, tol)
    right = _pattern_from_product(a @ star, tol)
    orthogonal = bool(
        left is not None
        and right is not None
        and all(l * r == 0 for l, r in zip(left.mask, right.mask))
    )
    return left, right, orthogonal


def _amplitudes(state) -> np.ndarray:
    if hasattr(state, "amplitudes"):
        return np.asarray(state.amplitudes, dtype=np.complex128)
    return np.asarray(state, dtype=np.complex128)


def partial_inner_product(
    psi, phi, left: PartialIdentityPattern, right: PartialIdentityPattern
) -> complex:
    """< left psi | right phi >; vanishes identically for orthogonal patterns."""
    a = _amplitudes(psi)
    b = _amplitudes(phi)
    if a.shape != b.shape or a.shape[0] != left.dimension or left.dimension != right.dimension:
        raise ValueError("state and pattern dimensions must agree")
    lm = np.array(left.mask)
    rm = np.array(right.mask)
    return complex(np.sum(np.conj(a) * b * lm * rm))


def partial_identity_count(dimension: int, rank: int) -> int:
    """Number of (left, right) partial-identity pattern pairs at fixed rank."""
    return math.comb(dimension, rank) ** 2


# ---------------------------------------------------------------------------
# worked non-invertible operators
# ---------------------------------------------------------------------------


def build_m3(alpha: float, beta: float, gamma: float) -> ComplexMatrix:
    """Rank-3 partial-unitary solution: left diag(1,1,0,1), right diag(0,1,1,1)."""
    return _from_map(
        4,
        {
            (2, 2): cmath.exp(1j * beta),
            (3, 4): cmath.exp(1j * gamma),
            (4, 1): cmath.exp(1j * alpha),
        },
    )


def build_m2(alpha: float, beta: float) -> ComplexMatrix:
    """Rank-2 left-partial-unitary solution; the right product has uniform
    1/2 blocks and is not a 0/1 pattern, so only a left pattern exists."""
    rt = 1.0 / math.sqrt(2.0)
    return _from_map(
        4,
        {
            (1, 4): rt * cmath.exp(1j * alpha),
            (2, 2): rt * cmath.exp(1j * beta),
            (3, 2): rt * cmath.exp(1j * beta),
            (4, 4): rt * cmath.exp(1j * beta),
        },
    )


def build_unil(alpha: float, beta: float) -> ComplexMatrix:
    """Nilpotent rank-2 operator with orthogonal partial identities."""
    return _from_map(
        4,
        {
            (2, 4): cmath.exp(1j * beta),
            (3, 1): cmath.exp(1j * alpha),
        },
    )
