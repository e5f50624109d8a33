"""Kronecker-lifted braid operators and braid-equation residuals.

An arity-n braid operator C acts on n adjacent tensor slots. The n-ary
braid system lives on 2n-1 slots and asserts that the n cyclic chains

    chain_j = A_{j} A_{j+1} ... A_{j+n}   (indices mod n, n+1 factors)

are all equal; n=2 is the usual A1 A2 A1 = A2 A1 A2. Higher braid group
generators B_i(m) are the same lift on m+n-2 slots, with one relation set
per i = 1..m-n plus n-ary far commutativity for index tuples with pairwise
gaps of at least n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .matrices import ComplexMatrix, identity, kron, matrix

DEFAULT_BRAID_TOL = 1e-9


class DimensionOverflowError(ValueError):
    """Raised when a requested lift would exceed the supported size."""


@dataclass(frozen=True)
class BraidArity:
    """Arity n of the operator and local space dimension d."""

    n: int
    d: int = 2

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("braid arity must be at least 2")
        if self.d < 2:
            raise ValueError("local dimension must be at least 2")

    @property
    def op_dim(self) -> int:
        return self.d**self.n

    @property
    def equation_slots(self) -> int:
        # the n-ary braid system is stated on 2n-1 slots
        return 2 * self.n - 1


@dataclass(frozen=True)
class BraidReport:
    """Chain products plus scale-free residuals against the first chain."""

    chain_values: tuple[ComplexMatrix, ...]
    residuals: tuple[float, ...]
    passed: bool
    tol: float


def _as_arity(arity: BraidArity | int) -> BraidArity:
    return arity if isinstance(arity, BraidArity) else BraidArity(int(arity))


def lift(c: ComplexMatrix, arity: BraidArity | int, p: int, slots: int) -> ComplexMatrix:
    """Embed c at slot position p (1-based) among `slots` tensor slots.

    Returns I^(p-1) (x) c (x) I^(slots-n-p+1), a d^slots square matrix.
    """
    ar = _as_arity(arity)
    if np.asarray(c).shape != (ar.op_dim, ar.op_dim):
        raise ValueError(f"operator must be {ar.op_dim}x{ar.op_dim} for arity {ar.n}, d={ar.d}")
    if slots < ar.n:
        raise ValueError("not enough slots for the operator")
    if not 1 <= p <= slots - ar.n + 1:
        raise ValueError(f"position {p} out of range 1..{slots - ar.n + 1}")
    if ar.d**slots > 2**13:
        raise DimensionOverflowError(f"lift to {ar.d}**{slots} dimensions refused")
    return kron(identity(ar.d ** (p - 1)), c, identity(ar.d ** (slots - ar.n - p + 1)))


def _chain_residuals(chains: list[np.ndarray], floor: float = 0.0) -> tuple[float, ...]:
    """Max entry difference of each chain against the first, over the max chain entry.

    The equation is homogeneous of the chain length in the operator entries,
    so `floor` (the operator-scale bound on chain entries) keeps the metric
    meaningful when the chains cancel to zero, as they do for nilpotent-type
    solutions whose both sides vanish identically.
    """
    scale = max(max(float(np.max(np.abs(ch))) for ch in chains), floor)
    out = []
    for ch in chains[1:]:
        diff = float(np.max(np.abs(chains[0] - ch)))
        out.append(diff / scale if scale > 0 else (0.0 if diff == 0 else np.inf))
    return tuple(out)


def _chain_floor(c: np.ndarray, length: int) -> float:
    return float(np.max(np.abs(c))) ** length


def _cyclic_chains(ops: list[np.ndarray], length: int) -> list[np.ndarray]:
    """Cyclic products ops[j] ops[j+1] ... of `length` factors, one per start."""
    n = len(ops)
    chains = []
    for j in range(n):
        prod = ops[j % n]
        for t in range(1, length):
            prod = prod @ ops[(j + t) % n]
        chains.append(prod)
    return chains


def nary_braid_report(
    c: ComplexMatrix, arity: BraidArity | int, tol: float = DEFAULT_BRAID_TOL
) -> BraidReport:
    """Evaluate the n-ary braid system for a constant operator c.

    The n lifted operators A_p sit on 2n-1 slots; the report carries the n
    cyclic chains of n+1 factors and the n-1 residuals of chains 2..n
    against chain 1.
    """
    ar = _as_arity(arity)
    slots = ar.equation_slots
    ops = [np.asarray(lift(c, ar, p, slots)) for p in range(1, ar.n + 1)]
    chains = _cyclic_chains(ops, ar.n + 1)
    residuals = _chain_residuals(chains, _chain_floor(np.asarray(c), ar.n + 1))
    return BraidReport(
        chain_values=tuple(matrix(ch) for ch in chains),
        residuals=residuals,
        passed=all(r <= tol for r in residuals),
        tol=tol,
    )


def ternary_chain_values(c: ComplexMatrix) -> tuple[ComplexMatrix, ...]:
    """The three ternary chains A1A2A3A1, A2A3A1A2, A3A1A2A3 on 32 dims."""
    ar = BraidArity(3)
    ops = [np.asarray(lift(c, ar, p, ar.equation_slots)) for p in (1, 2, 3)]
    return tuple(matrix(ch) for ch in _cyclic_chains(ops, 4))


def partial_ternary_residuals(c: ComplexMatrix) -> tuple[float, float, float]:
    """Residuals of the three pairwise chain equalities (12, 13, 23)."""
    c1, c2, c3 = (np.asarray(ch) for ch in ternary_chain_values(c))
    floor = _chain_floor(np.asarray(c), 4)
    out = []
    for a, b in ((c1, c2), (c1, c3), (c2, c3)):
        scale = max(float(np.max(np.abs(a))), float(np.max(np.abs(b))), floor)
        diff = float(np.max(np.abs(a - b)))
        out.append(diff / scale if scale > 0 else (0.0 if diff == 0 else np.inf))
    return tuple(out)


def partial_ternary_reports(
    c: ComplexMatrix, tol: float = DEFAULT_BRAID_TOL
) -> tuple[bool, bool, bool]:
    """Which of the 12-, 13-, 23-partial ternary braid equations hold."""
    if np.asarray(c).shape != (8, 8):
        raise ValueError("partial ternary equations need an 8x8 operator")
    r12, r13, r23 = partial_ternary_residuals(c)
    return (r12 <= tol, r13 <= tol, r23 <= tol)


def q_conjugate(
    c: ComplexMatrix,
    q: ComplexMatrix,
    t: complex = 1.0,
    arity: BraidArity | int | None = None,
) -> ComplexMatrix:
    """Scale-and-conjugate c by the n-fold Kronecker power of a 2x2 matrix q.

    Returns t (q(x)...(x)q) c (q(x)...(x)q)^(-1). Preserves braid-equation
    solutions for any invertible q and nonzero t.
    """
    qm = np.asarray(q, dtype=np.complex128)
    if qm.shape != (2, 2):
        raise ValueError("q must be 2x2")
    det = qm[0, 0] * qm[1, 1] - qm[0, 1] * qm[1, 0]
    if abs(det) < 1e-300:
        raise ValueError("q must be invertible")
    dim = np.asarray(c).shape[0]
    n = int(round(np.log2(dim))) if arity is None else _as_arity(arity).n
    if 2**n != dim:
        raise ValueError("operator dimension is not a power of 2")
    qn = np.asarray(kron(*([qm] * n)))
    return matrix(t * (qn @ np.asarray(c) @ np.linalg.inv(qn)))


def braid_group_generators(
    c: ComplexMatrix, arity: BraidArity | int, m: int
) -> list[ComplexMatrix]:
    """Lifted generators B_1..B_{m-1} of the m-strand representation."""
    ar = _as_arity(arity)
    if m < ar.n + 1:
        raise ValueError(f"need at least {ar.n + 1} strands for arity {ar.n}")
    slots = m + ar.n - 2
    if ar.d**slots > 2**13:
        raise DimensionOverflowError(
            f"representation dimension {ar.d}**{slots} exceeds the 2**13 guard"
        )
    return [lift(c, ar, i, slots) for i in range(1, m)]


def far_commutativity_tuples(n: int, m: int, cap: int = 200) -> list[tuple[int, ...]]:
    """Generator index n-tuples with pairwise gaps >= n, in lexicographic order.

    When more than `cap` tuples exist the list is strided deterministically,
    always keeping the first and last.
    """
    tuples = [
        t
        for t in itertools.combinations(range(1, m), n)
        if all(t[i + 1] - t[i] >= n for i in range(n - 1))
    ]
    if len(tuples) <= cap:
        return tuples
    picks = sorted({round(i * (len(tuples) - 1) / (cap - 1)) for i in range(cap)})
    return [tuples[i] for i in picks]


@dataclass(frozen=True)
class BraidGroupReport:
    """Residuals for every braid relation set and far-commutativity tuple."""

    relation_residuals: tuple[tuple[int, float], ...]  # (starting index i, max residual)
    far_comm_residuals: tuple[tuple[tuple[int, ...], float], ...]
    passed: bool
    tol: float


def braid_group_report(
    c: ComplexMatrix,
    arity: BraidArity | int,
    m: int,
    tol: float = DEFAULT_BRAID_TOL,
    far_cap: int = 200,
) -> BraidGroupReport:
    ar = _as_arity(arity)
    gens = [np.asarray(g) for g in braid_group_generators(c, ar, m)]
    op_scale = float(np.max(np.abs(np.asarray(c))))

    relation_residuals = []
    for i in range(1, m - ar.n + 1):
        window = [gens[i - 1 + k] for k in range(ar.n)]
        chains = _cyclic_chains(window, ar.n + 1)
        res = _chain_residuals(chains, op_scale ** (ar.n + 1))
        relation_residuals.append((i, max(res) if res else 0.0))

    far_comm_residuals = []
    for idxs in far_commutativity_tuples(ar.n, m, far_cap):
        base = None
        worst = 0.0
        for perm in itertools.permutations(idxs):
            prod = gens[perm[0] - 1]
            for i in perm[1:]:
                prod = prod @ gens[i - 1]
            if base is None:
                base = prod
                scale = max(float(np.max(np.abs(base))), op_scale ** len(idxs), 1e-300)
            else:
                worst = max(worst, float(np.max(np.abs(base - prod))) / scale)
        far_comm_residuals.append((idxs, worst))

    all_res = [r for _, r in relation_residuals] + [r for _, r in far_comm_residuals]
    return BraidGroupReport(
        relation_residuals=tuple(relation_residuals),
        far_comm_residuals=tuple(far_comm_residuals),
        passed=all(r <= tol for r in all_res),
        tol=tol,
    )


def braid_group_check(
    c: ComplexMatrix, arity: BraidArity | int, m: int, tol: float = DEFAULT_BRAID_TOL
) -> bool:
    """True iff all m-strand braid relations and far commutativity hold."""
    return braid_group_report(c, arity, m, tol).passed
