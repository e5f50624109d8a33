"""Exhaustive rediscovery searches over finite solution spaces.

Two spaces are supported: all permutation matrices of a given dimension
(binary 4x4 or ternary 8x8 braid equations, checked exactly over integer
index maps), and sign-pattern grids that assign values from a finite set to
a fixed support pattern (checked numerically). Pattern results are grid
evidence, not a classification: they say nothing about assignments outside
the chosen value set.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import braid
from .matrices import ComplexMatrix, matrix

EQUATIONS = ("full", "partial-12", "partial-13", "partial-23")

PATTERN_CAP = 10**7


class CapExceededError(ValueError):
    """Candidate count above the configured enumeration cap."""


@dataclass(frozen=True)
class SearchSpec:
    """A finite search space plus the braid equation to test.

    space: "permutations" (dim in {4, 8}, matching arity 2 or 3) or
    "sign_patterns" (explicit 0-based support with a finite value set).
    Partial equations exist only at arity 3.
    """

    space: str
    dim: int
    arity: int
    equation: str = "full"
    tol: float = 1e-9
    support: tuple[tuple[int, int], ...] = ()
    values: tuple[complex, ...] = ()
    cap: int = PATTERN_CAP

    def __post_init__(self) -> None:
        if self.space not in ("permutations", "sign_patterns"):
            raise ValueError(f"unknown search space {self.space!r}")
        if self.dim not in (4, 8):
            raise ValueError("search dimension must be 4 or 8")
        if self.equation not in EQUATIONS:
            raise ValueError(f"unknown equation {self.equation!r}")
        if self.dim != 2**self.arity:
            raise ValueError("dimension must equal 2^arity (4 <-> 2, 8 <-> 3)")
        if self.equation != "full" and self.arity != 3:
            raise ValueError("partial equations are defined only at arity 3")
        if self.space == "sign_patterns" and not self.values:
            raise ValueError("sign_patterns space needs a value set")

    @property
    def candidate_count(self) -> int:
        if self.space == "permutations":
            return math.factorial(self.dim)
        return len(self.values) ** len(self.support)


@dataclass(frozen=True)
class SearchResult:
    matrices: tuple[ComplexMatrix, ...]
    candidate_count: int
    match_count: int
    note: str = ""


# ---------------------------------------------------------------------------
# permutation search: exact integer index maps
# ---------------------------------------------------------------------------


def _lift_perm(perm: Sequence[int], bits: int, slots: int, offset: int) -> tuple[int, ...]:
    """Index map of I x ... x perm x ... x I on `slots` qubits, the permuted
    block starting at qubit `offset` (big-endian bit order)."""
    size = 1 << slots
    shift = slots - bits - offset
    mask = ((1 << bits) - 1) << shift
    out = []
    for i in range(size):
        block = (i & mask) >> shift
        out.append((i & ~mask) | (perm[block] << shift))
    return tuple(out)


def _compose(*maps: tuple[int, ...]) -> tuple[int, ...]:
    """Index map of the matrix product maps[0] @ maps[1] @ ... ."""
    result = list(range(len(maps[0])))
    for m in reversed(maps):
        result = [m[r] for r in result]
    return tuple(result)


def _perm_matrix(perm: Sequence[int]) -> ComplexMatrix:
    dim = len(perm)
    m = np.zeros((dim, dim), dtype=np.complex128)
    for col, row in enumerate(perm):
        m[row, col] = 1.0
    return matrix(m)


def _perm_passes(perm: tuple[int, ...], arity: int, equation: str) -> bool:
    bits = arity
    slots = 2 * arity - 1
    lifts = [_lift_perm(perm, bits, slots, pos) for pos in range(arity)]
    if arity == 2:
        a1, a2 = lifts
        return _compose(a1, a2, a1) == _compose(a2, a1, a2)
    b1, b2, b3 = lifts
    c1 = _compose(b1, b2, b3, b1)
    c2 = _compose(b2, b3, b1, b2)
    if equation == "partial-12":
        return c1 == c2
    if equation == "partial-13":
        return c1 == _compose(b3, b1, b2, b3)
    if equation == "partial-23":
        return c2 == _compose(b3, b1, b2, b3)
    # full: reject on the 12-equality first, most candidates stop here
    if c1 != c2:
        return False
    return c1 == _compose(b3, b1, b2, b3)


def permutation_search(spec: SearchSpec, include_identity: bool = False) -> SearchResult:
    """All permutation matrices of spec.dim passing the braid equation.

    Deterministic lexicographic order; the identity (a trivial solution) is
    excluded unless requested.
    """
    if spec.space != "permutations":
        raise ValueError("spec.space must be 'permutations'")
    found = []
    identity_map = tuple(range(spec.dim))
    for perm in itertools.permutations(range(spec.dim)):
        if perm == identity_map and not include_identity:
            continue
        if _perm_passes(perm, spec.arity, spec.equation):
            found.append(_perm_matrix(perm))
    return SearchResult(
        matrices=tuple(found),
        candidate_count=spec.candidate_count,
        match_count=len(found),
        note="exhaustive over all permutations",
    )


# ---------------------------------------------------------------------------
# sign-pattern grid search: numeric verification
# ---------------------------------------------------------------------------


def _pattern_passes(m: np.ndarray, spec: SearchSpec) -> bool:
    arity = braid.BraidArity(spec.arity)
    if spec.equation == "full":
        return braid.nary_braid_report(m, arity, tol=spec.tol).passed
    r12, r13, r23 = braid.partial_ternary_reports(m, tol=spec.tol)
    return {"partial-12": r12, "partial-13": r13, "partial-23": r23}[spec.equation]


def pattern_search(spec: SearchSpec) -> SearchResult:
    """Braid solutions among value assignments on a fixed support.

    Grid evidence, not classification: only the listed values are tried.
    Identically zero assignments are not admitted as solutions.
    """
    if spec.space != "sign_patterns":
        raise ValueError("spec.space must be 'sign_patterns'")
    count = spec.candidate_count
    if count > spec.cap:
        raise CapExceededError(f"{count} candidates exceed the cap {spec.cap}")
    found = []
    cells = list(spec.support)
    for assignment in itertools.product(spec.values, repeat=len(cells)):
        if not any(assignment):
            continue
        m = np.zeros((spec.dim, spec.dim), dtype=np.complex128)
        for (r, c), v in zip(cells, assignment):
            m[r, c] = v
        if _pattern_passes(m, spec):
            found.append(matrix(m))
    return SearchResult(
        matrices=tuple(found),
        candidate_count=count,
        match_count=len(found),
        note="grid evidence, not classification",
    )
