"""Braiding quantum gates and their entanglement analysis.

Unitarized braid-equation solutions acting on 2, 3, or L qubits: the binary
star and circle 8-vertex gates, the ternary 8-vertex bisymmetric/symmetric
and 16-vertex star gates, and the n-ary "signature" gate family. For each
gate with a printed transformed-concurrence closed form the module evaluates
both the numeric concurrence (gate applied to a Bloch product state) and the
closed form, and enumerates the non-entangling parameter relations.

Conventions: a Bloch pair (theta, gamma) is the one-qubit state
cos(theta/2)|0> + e^{i gamma} sin(theta/2)|1>; gate sign variants are
labeled "upper"/"lower" after the stacked signs in the matrix displays, and
kappa = +-1 where a family carries an extra free sign.

The 16-vertex gate locus needs care: its concurrence brackets are
e^{2ia}(1 + cos t) -+ e^{2ig}(1 - cos t), which cannot vanish at the poles
(cos t = +-1 leaves a single nonzero term), so only equator qubits
(theta = pi/2) admit non-entangling relations; an all-pole product state
transforms to concurrence 1. The locus reported here is equator-only.

The 8-vertex star ternary gates also need care: their concurrence is
sin^2(theta_2) times the squared product of two outer-qubit brackets for
the upper sign, but the lower-sign expression is a three-term polynomial
that does not factor, so no single-qubit relation makes it vanish. The
lower gates stay entangling unless two outer qubits are pinned jointly
(one at a pole with the other on the equator, or both on the equator with
2 gamma_1 - 2 gamma_3 = pi), and kappa = -1 shifts every equator relation
by pi.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from .matrices import ComplexMatrix, conj_transpose, matrix

GATE_TOL = 1e-12

# r^2 for the circle radial solution, and the concurrence prefactor
_CIRCLE_R2 = (math.sqrt(5.0) - 1.0) / 2.0
CIRCLE_RADIUS = math.sqrt(_CIRCLE_R2)
W_CIRCLE = (math.sqrt(5.0) - 1.0) ** 1.5 / math.sqrt(2.0)


def _exp(x: float) -> complex:
    return cmath.exp(1j * x)


@dataclass(frozen=True, eq=False)
class QubitState:
    """Normalized pure state of qubit_count qubits (2^L amplitudes)."""

    amplitudes: np.ndarray
    qubit_count: int


def qubit_state(amplitudes) -> QubitState:
    a = np.array(amplitudes, dtype=np.complex128).reshape(-1)
    length = a.shape[0]
    count = int(round(math.log2(length)))
    if 2**count != length:
        raise ValueError("amplitude vector length must be a power of two")
    norm = float(np.sum(np.abs(a) ** 2))
    if abs(norm - 1.0) > 1e-12:
        raise ValueError(f"state not normalized: |psi|^2 = {norm}")
    a.flags.writeable = False
    return QubitState(a, count)


@dataclass(frozen=True)
class BlochParams:
    """Bloch-sphere angles: theta in [0, pi], gamma in [0, 2 pi)."""

    theta: float
    gamma: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError("theta must lie in [0, pi]")
        if not 0.0 <= self.gamma < 2.0 * math.pi:
            raise ValueError("gamma must lie in [0, 2 pi)")


@dataclass(frozen=True)
class GateParams:
    """Gate phases (|alpha|, |beta| <= 2 pi) and sign-variant selectors."""

    alpha: float = 0.0
    beta: float = 0.0
    sign: str = "upper"
    kappa: int = 1

    def __post_init__(self) -> None:
        if abs(self.alpha) > 2.0 * math.pi or abs(self.beta) > 2.0 * math.pi:
            raise ValueError("gate phases limited to |angle| <= 2 pi")
        if self.sign not in ("upper", "lower"):
            raise ValueError("sign variant must be 'upper' or 'lower'")
        if self.kappa not in (1, -1):
            raise ValueError("kappa must be +1 or -1")

    @property
    def s(self) -> int:
        return 1 if self.sign == "upper" else -1


def bloch_state(p: BlochParams) -> QubitState:
    return qubit_state([math.cos(p.theta / 2.0), _exp(p.gamma) * math.sin(p.theta / 2.0)])


def product_state(factors: Sequence[QubitState]) -> QubitState:
    if not factors:
        raise ValueError("product of zero states is undefined")
    amps = factors[0].amplitudes
    for f in factors[1:]:
        amps = np.kron(amps, f.amplitudes)
    return qubit_state(amps)


def concurrence2(state: QubitState) -> float:
    """2 |det| of the 2x2 amplitude matrix of a two-qubit state."""
    if state.qubit_count != 2:
        raise ValueError("concurrence2 needs a two-qubit state")
    a = state.amplitudes
    return 2.0 * abs(a[0] * a[3] - a[1] * a[2])


def hyperdet3(state: QubitState) -> complex:
    """2x2x2 hyperdeterminant of a three-qubit amplitude tensor.

    Degree-4 polynomial: squared complementary-pair products, minus twice
    each product of two distinct complementary pairs, plus four times the
    two odd quadruples.
    """
    if state.qubit_count != 3:
        raise ValueError("hyperdet3 needs a three-qubit state")
    a = state.amplitudes.reshape(2, 2, 2)
    a000, a001, a010, a011 = a[0, 0, 0], a[0, 0, 1], a[0, 1, 0], a[0, 1, 1]
    a100, a101, a110, a111 = a[1, 0, 0], a[1, 0, 1], a[1, 1, 0], a[1, 1, 1]
    squares = (
        a000**2 * a111**2
        + a001**2 * a110**2
        + a010**2 * a101**2
        + a100**2 * a011**2
    )
    pairs = (
        a000 * a001 * a110 * a111
        + a000 * a010 * a101 * a111
        + a000 * a011 * a100 * a111
        + a001 * a010 * a101 * a110
        + a001 * a011 * a100 * a110
        + a010 * a011 * a100 * a101
    )
    quads = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111
    return squares - 2.0 * pairs + 4.0 * quads


def concurrence3(state: QubitState) -> float:
    return 4.0 * abs(hyperdet3(state))


# ---------------------------------------------------------------------------
# gate constructors
# ---------------------------------------------------------------------------


def _assemble(dim: int, entries: Mapping[tuple[int, int], complex]) -> np.ndarray:
    m = np.zeros((dim, dim), dtype=np.complex128)
    for (r, c), v in entries.items():
        m[r - 1, c - 1] = v
    return m


def _ua1(p: GateParams) -> np.ndarray:
    e = _exp(p.alpha + p.beta)
    s = p.s
    return _assemble(
        4,
        {
            (1, 1): e, (1, 4): _exp(2 * p.beta),
            (2, 2): e, (2, 3): s * e,
            (3, 2): -s * e, (3, 3): e,
            (4, 1): -_exp(2 * p.alpha), (4, 4): e,
        },
    ) / math.sqrt(2.0)


def _ua2(p: GateParams) -> np.ndarray:
    e = _exp(p.alpha + p.beta)
    ea = _exp(2 * p.alpha)
    r = CIRCLE_RADIUS
    return r * _assemble(
        4,
        {
            (1, 2): e, (1, 3): 1j * e * r,
            (2, 1): -ea * r, (2, 4): e,
            (3, 1): 1j * ea, (3, 4): 1j * e * r,
            (4, 2): -ea * r, (4, 3): 1j * ea,
        },
    )


def _ua3(p: GateParams) -> np.ndarray:
    e = _exp(p.alpha + p.beta)
    ea = _exp(2 * p.alpha)
    return _assemble(4, {(1, 3): e, (2, 1): ea, (3, 4): e, (4, 2): ea})


def _u8b1(p: GateParams) -> np.ndarray:
    e = _exp(p.alpha + p.beta)
    k, s = p.kappa, p.s
    return _assemble(
        8,
        {
            (1, 1): e, (3, 3): e, (6, 6): e, (8, 8): e,
            (2, 7): k * _exp(2 * p.beta),
            (4, 5): k * _exp(2 * p.alpha),
            (5, 4): s * k * _exp(2 * p.beta),
            (7, 2): s * k * _exp(2 * p.alpha),
        },
    )


def _u8b2(p: GateParams) -> np.ndarray:
    e3 = p.kappa * _exp(3 * (p.alpha + p.beta))
    s = p.s
    return _assemble(
        8,
        {
            (1, 8): _exp(6 * p.alpha),
            (2, 2): e3, (4, 4): e3, (5, 5): e3, (7, 7): e3,
            (3, 6): _exp(2 * (2 * p.alpha + p.beta)),
            (6, 3): s * _exp(2 * (p.alpha + 2 * p.beta)),
            (8, 1): s * _exp(6 * p.beta),
        },
    )


def _u8s1(p: GateParams) -> np.ndarray:
    e = _exp(p.alpha + p.beta)
    k, s = p.kappa, p.s
    return _assemble(
        8,
        {
            (1, 1): e, (4, 4): e, (6, 6): e, (7, 7): e,
            (2, 5): k * e,
            (3, 8): _exp(2 * p.beta),
            (5, 2): s * k * e,
            (8, 3): s * _exp(2 * p.alpha),
        },
    )


def _u8s2(p: GateParams) -> np.ndarray:
    e = _exp(p.alpha + p.beta)
    k, s = p.kappa, p.s
    return _assemble(
        8,
        {
            (1, 6): _exp(2 * p.beta),
            (2, 2): e, (3, 3): e, (5, 5): e, (8, 8): e,
            (4, 7): k * e,
            (6, 1): s * _exp(2 * p.alpha),
            (7, 4): s * k * e,
        },
    )


def _u16(p: GateParams) -> np.ndarray:
    a = p.alpha
    s = p.s
    d = _exp(3 * a)
    m = _assemble(
        8,
        {
            (1, 8): -1.0,
            (2, 7): -s * _exp(2 * a),
            (3, 6): -_exp(2 * a),
            (4, 5): -s * _exp(4 * a),
            (5, 4): s * _exp(2 * a),
            (6, 3): _exp(4 * a),
            (7, 2): s * _exp(4 * a),
            (8, 1): _exp(6 * a),
        },
    )
    m += np.diag(np.full(8, d))
    return m / math.sqrt(2.0)


def minkowski_gate(L: int) -> np.ndarray:
    """(1/sqrt 2) x (identity plus signed antidiagonal): the n-ary GHZ-type gate."""
    if L < 1:
        raise ValueError("qubit count must be positive")
    n = 2**L
    m = np.identity(n, dtype=np.complex128)
    for i in range(n):
        m[i, n - 1 - i] += -1.0 if i < n // 2 else 1.0
    return m / math.sqrt(2.0)


_BUILDERS: dict[str, Callable[[GateParams], np.ndarray]] = {
    "ua1": _ua1,
    "ua2": _ua2,
    "ua3": _ua3,
    "u8b1": _u8b1,
    "u8b2": _u8b2,
    "u8s1": _u8s1,
    "u8s2": _u8s2,
    "u16": _u16,
}

# braid-equation arity of each gate family ("ul" uses its qubit count)
GATE_ARITY: dict[str, int] = {
    "ua1": 2, "ua2": 2, "ua3": 2,
    "u8b1": 3, "u8b2": 3, "u8s1": 3, "u8s2": 3, "u16": 3,
}


def gate_ids() -> tuple[str, ...]:
    return tuple(_BUILDERS) + ("ul",)


def build_gate(gate_id: str, params: GateParams | None = None, L: int | None = None) -> ComplexMatrix:
    """Construct a braiding gate; every output is unitary within 1e-12."""
    params = params or GateParams()
    if gate_id == "ul":
        if L is None:
            raise ValueError("the 'ul' family needs an explicit qubit count L")
        m = minkowski_gate(L)
    elif gate_id in _BUILDERS:
        m = _BUILDERS[gate_id](params)
    else:
        raise KeyError(f"unknown gate id {gate_id!r}")
    dim = m.shape[0]
    residual = float(np.max(np.abs(np.asarray(conj_transpose(m)) @ m - np.identity(dim))))
    if residual > GATE_TOL:
        raise AssertionError(f"gate {gate_id} failed unitarity: residual {residual}")
    return matrix(m)


@dataclass(frozen=True)
class RadialSolution:
    """One solution of the circle unitarity system with its three residuals."""

    r_x: float
    r: float
    residuals: tuple[float, float, float]


def circle_unitarity_solutions() -> tuple[RadialSolution, RadialSolution]:
    """The two nonnegative radial solutions of the circle unitarity system.

    The system is r_y = r_z = r, r^2 (r_x^2 + r^2) = 1, and
    r^8 + r^6 - 2 r^4 + 1 = r^2; solutions (r_x=1, r=sqrt((sqrt5-1)/2))
    and (r_x=0, r=1), each with residuals at most 1e-12.
    """
    out = []
    for r_x, r in ((1.0, CIRCLE_RADIUS), (0.0, 1.0)):
        res = (
            0.0,  # r_y = r_z = r holds by construction
            abs(r**2 * (r_x**2 + r**2) - 1.0),
            abs(r**8 + r**6 - 2.0 * r**4 + 1.0 - r**2),
        )
        out.append(RadialSolution(r_x, r, res))
    return tuple(out)


# ---------------------------------------------------------------------------
# transformed concurrence: numeric and closed forms
# ---------------------------------------------------------------------------


def transformed_concurrence(
    gate_id: str, params: GateParams, blochs: Sequence[BlochParams]
) -> float:
    """Concurrence of the gate applied to the Bloch product state."""
    L = len(blochs)
    if gate_id == "ul":
        gate = build_gate("ul", L=L)
    else:
        if gate_id not in GATE_ARITY:
            raise KeyError(f"unknown gate id {gate_id!r}")
        if GATE_ARITY[gate_id] != L:
            raise ValueError(f"gate {gate_id} acts on {GATE_ARITY[gate_id]} qubits, got {L}")
        gate = build_gate(gate_id, params)
    state = product_state([bloch_state(b) for b in blochs])
    out = qubit_state(np.asarray(gate) @ state.amplitudes)
    if L == 2:
        return concurrence2(out)
    if L == 3:
        return concurrence3(out)
    raise ValueError("no concurrence measure registered beyond three qubits")


def _star_bracket(alpha: float, beta: float, b: BlochParams, sign: int) -> complex:
    half = b.theta / 2.0
    return _exp(beta + 2.0 * b.gamma) * math.sin(half) ** 2 + sign * _exp(alpha) * math.cos(half) ** 2


def _circle_bracket(alpha: float, beta: float, b: BlochParams) -> complex:
    half = b.theta / 2.0
    return _exp(beta + 2.0 * b.gamma) * math.sin(half) ** 2 - 1j * _exp(alpha) * math.cos(half) ** 2


def _u16_bracket(alpha: float, b: BlochParams, sign: int) -> complex:
    ea, eg = _exp(2.0 * alpha), _exp(2.0 * b.gamma)
    return ea - sign * eg + (ea + sign * eg) * math.cos(b.theta)


def closed_form_concurrence(
    gate_id: str, params: GateParams, blochs: Sequence[BlochParams]
) -> float:
    """Closed-form transformed concurrence for the gate family."""
    s = params.s
    a, b = params.alpha, params.beta
    if gate_id == "ua1":
        _need(blochs, 2, gate_id)
        return abs(
            _star_bracket(a, b, blochs[0], s) * _star_bracket(a, b, blochs[1], -s)
        )
    if gate_id == "ua2":
        _need(blochs, 2, gate_id)
        return W_CIRCLE * abs(
            _circle_bracket(a, b, blochs[0]) * _circle_bracket(a, b, blochs[1])
        )
    if gate_id == "ua3":
        _need(blochs, 2, gate_id)
        return 0.0
    if gate_id == "u16":
        _need(blochs, 3, gate_id)
        prod = (
            _u16_bracket(a, blochs[0], -s)
            * _u16_bracket(a, blochs[1], 1)
            * _u16_bracket(a, blochs[2], s)
        )
        return abs(prod**2) / 64.0
    if gate_id in ("u8b1", "u8b2"):
        _need(blochs, 3, gate_id)
        t1, t2, t3 = (x.theta for x in blochs)
        inner, outer = (b + blochs[1].gamma, a) if gate_id == "u8b1" else (a + blochs[1].gamma, b)
        half = blochs[1].theta / 2.0
        bracket = _exp(2.0 * inner) * math.sin(half) ** 2 - _exp(2.0 * outer) * math.cos(half) ** 2
        return abs(math.sin(t1) ** 2 * math.sin(t3) ** 2 * bracket**2)
    if gate_id in ("u8s1", "u8s2"):
        _need(blochs, 3, gate_id)
        # the printed expression has first-power outer brackets, degree 8 in
        # the half-angle functions where the degree-4 hyperdeterminant needs
        # 12; squaring them matches the numeric concurrence for the upper
        # sign, while the lower-sign polynomial does not factor at all. Both
        # supports share one expression. kappa flips the relative sign
        # inside each bracket.
        k = 1 if params.kappa > 0 else -1
        mid = math.sin(blochs[1].theta) ** 2
        dm1 = _star_bracket(a, b, blochs[0], -k)
        dm3 = _star_bracket(a, b, blochs[2], -k)
        if s > 0:
            return abs(mid * (dm1 * dm3) ** 2)
        dp1 = _star_bracket(a, b, blochs[0], k)
        dp3 = _star_bracket(a, b, blochs[2], k)
        return abs(mid * (dp1**2 * dp3**2 - dm1**2 * dp3**2 + dm1**2 * dm3**2))
    raise KeyError(f"no printed concurrence form for gate {gate_id!r}")


def _need(blochs: Sequence[BlochParams], count: int, gate_id: str) -> None:
    if len(blochs) != count:
        raise ValueError(f"gate {gate_id} pairs with {count} Bloch factors, got {len(blochs)}")


# ---------------------------------------------------------------------------
# non-entangling loci
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LocusRelation:
    """A parameter relation making the transformed concurrence vanish.

    kind "always" needs no gate condition (the state alone suffices);
    "alpha-beta" constrains (alpha - beta) and "alpha" constrains alpha,
    each congruent to offset modulo the given modulus.
    """

    gate_id: str
    qubit: int | None
    kind: str
    offset: float = 0.0
    modulus: float = 2.0 * math.pi
    description: str = ""

    def satisfied_by(self, params: GateParams, tol: float = 1e-9) -> bool:
        if self.kind == "always":
            return True
        value = params.alpha - params.beta if self.kind == "alpha-beta" else params.alpha
        delta = (value - self.offset) % self.modulus
        return min(delta, self.modulus - delta) <= tol

    def example_params(self, sign: str = "upper", kappa: int = 1) -> GateParams:
        alpha = self.offset % (2.0 * math.pi) if self.kind != "always" else 0.0
        return GateParams(alpha=alpha, beta=0.0, sign=sign, kappa=kappa)


def _near(x: float, y: float, tol: float) -> bool:
    return abs(x - y) <= tol


def nonentangling_locus(
    gate_id: str,
    blochs: Sequence[BlochParams],
    sign: str = "upper",
    kappa: int = 1,
    tol: float = 1e-9,
) -> tuple[LocusRelation, ...]:
    """Parameter relations under which the gate leaves the given product
    state unentangled; empty when the state lies on no such locus."""
    if gate_id == "ul":
        return ()
    if gate_id not in GATE_ARITY:
        raise KeyError(f"unknown gate id {gate_id!r}")
    _need(blochs, GATE_ARITY[gate_id], gate_id)
    s = 1 if sign == "upper" else -1
    half_pi, pi, two_pi = math.pi / 2.0, math.pi, 2.0 * math.pi
    out: list[LocusRelation] = []

    if gate_id == "ua3":
        return (LocusRelation(gate_id, None, "always", description="identically non-entangling"),)

    if gate_id == "ua1":
        # bracket signs: qubit 1 carries +s, qubit 2 carries -s
        for idx, bsign in ((0, s), (1, -s)):
            if _near(blochs[idx].theta, half_pi, tol):
                shift = pi if bsign > 0 else 0.0
                out.append(
                    LocusRelation(
                        gate_id, idx, "alpha-beta",
                        (2.0 * blochs[idx].gamma - shift) % two_pi, two_pi,
                        f"equator qubit {idx + 1}: alpha - beta = 2 gamma - "
                        + ("pi" if bsign > 0 else "0"),
                    )
                )
    elif gate_id == "ua2":
        for idx in (0, 1):
            if _near(blochs[idx].theta, half_pi, tol):
                out.append(
                    LocusRelation(
                        gate_id, idx, "alpha-beta",
                        (2.0 * blochs[idx].gamma - half_pi) % two_pi, two_pi,
                        f"equator qubit {idx + 1}: alpha - beta = 2 gamma - pi/2",
                    )
                )
    elif gate_id == "u16":
        # bracket signs per qubit: (-s, +1, +s); minus-form needs alpha = gamma
        # (mod pi), plus-form alpha = gamma + pi/2 (mod pi); equator only
        for idx, bsign in ((0, -s), (1, 1), (2, s)):
            if _near(blochs[idx].theta, half_pi, tol):
                shift = 0.0 if bsign > 0 else half_pi
                out.append(
                    LocusRelation(
                        gate_id, idx, "alpha",
                        (blochs[idx].gamma + shift) % pi, pi,
                        f"equator qubit {idx + 1}: alpha = gamma"
                        + ("" if bsign > 0 else " + pi/2") + " (mod pi)",
                    )
                )
    elif gate_id in ("u8b1", "u8b2"):
        for idx in (0, 2):
            if _near(blochs[idx].theta, 0.0, tol) or _near(blochs[idx].theta, pi, tol):
                out.append(
                    LocusRelation(
                        gate_id, idx, "always",
                        description=f"pole qubit {idx + 1}: sin theta = 0",
                    )
                )
        if _near(blochs[1].theta, half_pi, tol):
            gamma2 = blochs[1].gamma
            offset = gamma2 if gate_id == "u8b1" else -gamma2
            out.append(
                LocusRelation(
                    gate_id, 1, "alpha-beta", offset % pi, pi,
                    "equator middle qubit: alpha - beta = "
                    + ("gamma" if gate_id == "u8b1" else "-gamma") + " (mod pi)",
                )
            )
    elif gate_id in ("u8s1", "u8s2"):
        if _near(blochs[1].theta, 0.0, tol) or _near(blochs[1].theta, pi, tol):
            out.append(
                LocusRelation(gate_id, 1, "always", description="pole middle qubit: sin theta = 0")
            )
        # outer-bracket zeros need the equator; the difference bracket
        # vanishes at alpha - beta = 2 gamma + delta and the sum bracket at
        # 2 gamma + delta + pi, with delta = 0 for kappa = +1 and pi otherwise
        delta = 0.0 if kappa > 0 else pi

        def _ab(idx: int, extra: float, where: str) -> LocusRelation:
            off = (2.0 * blochs[idx].gamma + delta + extra) % two_pi
            suffix = "" if (delta + extra) % two_pi < tol else " + pi"
            return LocusRelation(
                gate_id, idx, "alpha-beta", off, two_pi,
                f"{where}: alpha - beta = 2 gamma_{idx + 1}{suffix}",
            )

        eq1 = _near(blochs[0].theta, half_pi, tol)
        eq3 = _near(blochs[2].theta, half_pi, tol)
        if s > 0:
            # the upper-sign concurrence factors, so one vanishing bracket
            # suffices
            if eq1:
                out.append(_ab(0, 0.0, "equator qubit 1"))
            if eq3:
                out.append(_ab(2, 0.0, "equator qubit 3"))
        else:
            # the lower-sign polynomial does not factor; it vanishes only
            # with both outer qubits pinned at once
            pole1 = _near(blochs[0].theta, 0.0, tol) or _near(blochs[0].theta, pi, tol)
            pole3 = _near(blochs[2].theta, 0.0, tol) or _near(blochs[2].theta, pi, tol)
            if pole1 and eq3:
                out.append(_ab(2, 0.0, "pole qubit 1 with equator qubit 3"))
            if pole3 and eq1:
                out.append(_ab(0, pi, "pole qubit 3 with equator qubit 1"))
            if eq1 and eq3:
                gap = (2.0 * blochs[0].gamma - 2.0 * blochs[2].gamma - pi) % two_pi
                if min(gap, two_pi - gap) <= tol:
                    rel = _ab(0, 0.0, "equator qubits 1 and 3 with 2 gamma_1 - 2 gamma_3 = pi")
                    out.append(
                        LocusRelation(
                            gate_id, None, rel.kind, rel.offset, rel.modulus, rel.description
                        )
                    )
    return tuple(out)
