"""Dense complex matrix kernel.

Immutable complex128 arrays plus the verification primitives everything else
is built on: Kronecker and chain products, a division-free characteristic
polynomial, eigenvalue claims checked by polynomial factor matching,
row-reduction rank, and Moore-Penrose condition checks.

Eigenvalue claims are deliberately NOT checked with an eigensolver: a claim
is a multiset {value}^[multiplicity], and factor matching against the
characteristic polynomial tests exactly that, without conditioning issues
for repeated eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

# Every matrix in this package is a read-only np.complex128 ndarray.
ComplexMatrix = np.ndarray

DEFAULT_TOL = 1e-9


def matrix(entries) -> ComplexMatrix:
    """Validate and freeze a 2-D complex matrix."""
    m = np.asarray(entries, dtype=np.complex128).copy()
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix entries must be finite")
    m.setflags(write=False)
    return m


def identity(n: int) -> ComplexMatrix:
    return matrix(np.eye(n, dtype=np.complex128))


def zeros(rows: int, cols: int | None = None) -> ComplexMatrix:
    return matrix(np.zeros((rows, cols if cols is not None else rows)))


def frobenius(m: ComplexMatrix) -> float:
    return float(np.linalg.norm(m))


def default_tol(*operands: ComplexMatrix, base: float = DEFAULT_TOL) -> float:
    """base times the product of operand Frobenius norms, each floored at 1.

    The flooring keeps the tolerance scale-free across homogeneous families
    without collapsing to zero for small-norm operands.
    """
    scale = 1.0
    for m in operands:
        scale *= max(1.0, frobenius(m))
    return base * scale


def close(a: ComplexMatrix, b: ComplexMatrix, tol: float | None = None) -> bool:
    """Entrywise comparison at the default scale-aware tolerance."""
    if a.shape != b.shape:
        return False
    if tol is None:
        tol = default_tol(a, b)
    return bool(np.max(np.abs(np.asarray(a) - np.asarray(b))) <= tol)


def kron(*factors: ComplexMatrix) -> ComplexMatrix:
    """Kronecker product of one or more matrices, left to right."""
    if not factors:
        raise ValueError("kron needs at least one factor")
    out = np.asarray(factors[0], dtype=np.complex128)
    for f in factors[1:]:
        out = np.kron(out, np.asarray(f, dtype=np.complex128))
    return matrix(out)


def chain_product(factors: Sequence[ComplexMatrix], dim: int | None = None) -> ComplexMatrix:
    """Left-to-right matrix product; an empty chain is the identity.

    dim is only needed to size the identity for an empty chain.
    """
    if not factors:
        if dim is None:
            raise ValueError("empty chain needs an explicit dimension")
        return identity(dim)
    out = np.asarray(factors[0], dtype=np.complex128)
    for f in factors[1:]:
        out = out @ np.asarray(f, dtype=np.complex128)
    return matrix(out)


def conj_transpose(m: ComplexMatrix) -> ComplexMatrix:
    return matrix(np.conjugate(np.asarray(m)).T)


def support(m: ComplexMatrix, tol: float = 0.0) -> frozenset[tuple[int, int]]:
    """Positions (row, col), 0-based, of entries with magnitude > tol."""
    rows, cols = np.nonzero(np.abs(np.asarray(m)) > tol)
    return frozenset(zip(rows.tolist(), cols.tolist()))


@dataclass(frozen=True)
class EigenClaim:
    """One eigenvalue with its algebraic multiplicity."""

    value: complex
    multiplicity: int

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")


def char_poly(m: ComplexMatrix) -> np.ndarray:
    """Monic characteristic polynomial coefficients, degree first.

    Faddeev-LeVerrier recurrence: division-free except by integer step
    counts, so it is exact up to rounding for the small dimensions used
    here. Returns [1, c1, ..., cn] with p(t) = t^n + c1 t^(n-1) + ... + cn.
    """
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("char_poly needs a square matrix")
    n = a.shape[0]
    eye = np.eye(n, dtype=np.complex128)
    coeffs = [1.0 + 0.0j]
    work = np.zeros_like(a)
    for k in range(1, n + 1):
        work = a @ work + coeffs[-1] * eye
        coeffs.append(-np.trace(a @ work) / k)
    return np.array(coeffs, dtype=np.complex128)


def poly_from_claims(claims: Iterable[EigenClaim]) -> np.ndarray:
    """Expand prod (t - value)^multiplicity into monic coefficients."""
    poly = np.array([1.0 + 0.0j])
    for claim in claims:
        for _ in range(claim.multiplicity):
            poly = np.convolve(poly, np.array([1.0, -complex(claim.value)]))
    return poly


def eigencheck(m: ComplexMatrix, claims: Sequence[EigenClaim], tol: float = DEFAULT_TOL) -> bool:
    """True iff the claimed spectrum matches the characteristic polynomial.

    Coefficientwise comparison at tol times the largest coefficient
    magnitude (floored at 1), so homogeneous families compare scale-free.
    """
    n = np.asarray(m).shape[0]
    total = sum(c.multiplicity for c in claims)
    if total != n:
        raise ValueError(f"claim multiplicities sum to {total}, expected {n}")
    actual = char_poly(m)
    claimed = poly_from_claims(claims)
    scale = max(1.0, float(np.max(np.abs(actual))), float(np.max(np.abs(claimed))))
    return bool(np.max(np.abs(actual - claimed)) <= tol * scale)


def numeric_rank(m: ComplexMatrix, tol: float = 1e-10) -> int:
    """Rank by row reduction with full pivoting.

    Pivot threshold is tol times the largest initial row norm, so the
    answer is invariant under overall scaling of the matrix.
    """
    a = np.asarray(m, dtype=np.complex128).copy()
    if a.size == 0:
        return 0
    row_norms = np.linalg.norm(a, axis=1)
    threshold = tol * float(np.max(row_norms))
    if threshold == 0.0:
        return 0
    rank = 0
    rows, cols = a.shape
    for _ in range(min(rows, cols)):
        sub = np.abs(a[rank:, rank:])
        if sub.size == 0:
            break
        i, j = np.unravel_index(int(np.argmax(sub)), sub.shape)
        if sub[i, j] <= threshold:
            break
        a[[rank, rank + i]] = a[[rank + i, rank]]
        a[:, [rank, rank + j]] = a[:, [rank + j, rank]]
        pivot = a[rank, rank]
        for r in range(rank + 1, rows):
            if a[r, rank] != 0:
                a[r, rank:] -= (a[r, rank] / pivot) * a[rank, rank:]
        rank += 1
    return rank


def is_hermitian(m: ComplexMatrix, tol: float) -> bool:
    a = np.asarray(m)
    return bool(np.max(np.abs(a - np.conjugate(a.T))) <= tol)


def penrose_conditions(
    m: ComplexMatrix, plus: ComplexMatrix, tol: float | None = None
) -> tuple[bool, bool, bool, bool]:
    """The four Moore-Penrose conditions for plus as pseudoinverse of m."""
    a = np.asarray(m)
    g = np.asarray(plus)
    if tol is None:
        tol = default_tol(m, plus)
    ag = a @ g
    ga = g @ a
    return (
        bool(np.max(np.abs(ag @ a - a)) <= tol),
        bool(np.max(np.abs(ga @ g - g)) <= tol),
        is_hermitian(ag, tol),
        is_hermitian(ga, tol),
    )


def penrose_check(m: ComplexMatrix, plus: ComplexMatrix, tol: float | None = None) -> bool:
    return all(penrose_conditions(m, plus, tol))
