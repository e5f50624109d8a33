"""Registry of constant solution families for binary and higher braid equations.

Each family is stored as a parametric builder over named (complex) parameters
together with printed metadata claims: trace, determinant, spectrum, generic
rank, vertex count. The claims are kept as evaluable expression strings over
the same parameter names so that every one of them can be revalidated
numerically against a freshly built matrix.

Sign variants follow the printed displays row by row: the "upper" variant
takes the top sign of every two-sign entry, "lower" the bottom sign. Families
shown as two separate displays use "first"/"second". Square roots inside
builders and claims use the principal branch.
"""

from __future__ import annotations

import cmath
import importlib.resources
import json
import math
import zlib
from dataclasses import dataclass
from typing import Callable, Mapping, NamedTuple

import numpy as np

from .braid import BraidArity, nary_braid_report, partial_ternary_reports
from .matrices import (
    ComplexMatrix,
    EigenClaim,
    char_poly,
    eigencheck,
    matrix,
    numeric_rank,
)

Params = Mapping[str, complex]


class UnknownFamilyError(KeyError):
    """Requested family id is not in the registry."""


class UnknownVariantError(KeyError):
    """Requested sign/display variant does not exist for the family."""


class ConstraintViolationError(ValueError):
    """Parameters sit on (or miss) a declared validity locus."""


_EVAL_GLOBALS = {"__builtins__": {}}
_EVAL_FUNCS = {"sqrt": cmath.sqrt, "pi": math.pi, "abs": abs}


def _eval_expr(expr: str, ns: Mapping[str, complex]) -> complex:
    scope = dict(_EVAL_FUNCS)
    scope.update(ns)
    return complex(eval(expr, _EVAL_GLOBALS, scope))


@dataclass(frozen=True)
class FamilyMeta:
    """Printed per-family claims, with formulas over the parameter names."""

    arity: int
    dimension: int
    vertex_count: int
    claimed_rank: int
    trace_formula: str
    det_formula: str
    eigen_claims: tuple[tuple[str, int], ...]  # (value expression, multiplicity)
    sign_choices: tuple[str, ...]
    param_constraints: tuple[str, ...]


@dataclass(frozen=True)
class Family:
    family_id: str
    anchor: str  # bare display label
    arity: int | None  # None: parameter-dependent or not an operator
    dimension: int | None
    parameters: tuple[str, ...]
    variants: tuple[str, ...]
    constraints: tuple[str, ...]  # |expr| must stay nonzero; enforced at build
    genericity: tuple[str, ...]  # extra loci avoided only while sampling
    equation: str  # "full" | "partial-13" | "none"
    int_params: tuple[tuple[str, int, int], ...]  # (name, lo, hi) inclusive
    builder: Callable[[dict, str | None], np.ndarray]
    meta_builder: Callable[[dict], FamilyMeta]
    # (variant, param, expr): sampling for `variant` pins param := expr, so
    # seeded draws land on the locus where that variant actually solves the
    # declared equation. Builders accept off-locus params unchanged.
    identifications: tuple[tuple[str, str, str], ...] = ()


_REGISTRY: dict[str, Family] = {}


def _register(
    family_id: str,
    anchor: str,
    arity: int | None,
    dimension: int | None,
    parameters: tuple[str, ...],
    builder: Callable[[dict, str | None], np.ndarray],
    *,
    variants: tuple[str, ...] = (),
    constraints: tuple[str, ...] = (),
    genericity: tuple[str, ...] = (),
    equation: str = "full",
    int_params: tuple[tuple[str, int, int], ...] = (),
    meta: FamilyMeta | None = None,
    meta_builder: Callable[[dict], FamilyMeta] | None = None,
    identifications: tuple[tuple[str, str, str], ...] = (),
) -> None:
    if meta_builder is None:
        fixed = meta
        meta_builder = lambda p, _m=fixed: _m  # noqa: E731
    _REGISTRY[family_id] = Family(
        family_id=family_id,
        anchor=anchor,
        arity=arity,
        dimension=dimension,
        parameters=parameters,
        variants=variants,
        constraints=constraints,
        genericity=genericity,
        equation=equation,
        int_params=int_params,
        builder=builder,
        meta_builder=meta_builder,
        identifications=identifications,
    )


def _sp(dim: int, entries: Mapping[tuple[int, int], complex]) -> np.ndarray:
    """Dense matrix from a 1-based sparse (row, col) -> value map."""
    m = np.zeros((dim, dim), dtype=np.complex128)
    for (r, c), v in entries.items():
        m[r - 1, c - 1] = v
    return m


def _sign(variant: str | None) -> float:
    # upper (or unspecified) takes the top printed sign
    return -1.0 if variant is not None and "lower" in variant else 1.0


def _is_second(variant: str | None) -> bool:
    return variant is not None and variant.startswith("second")


UPPER_LOWER = ("upper", "lower")
FIRST_SECOND = ("first", "second")


# ---------------------------------------------------------------------------
# binary solutions, dimension 4
# ---------------------------------------------------------------------------


def _build_cp(p: dict, v: str | None) -> np.ndarray:
    if _is_second(v):
        return _sp(4, {(1, 4): 1, (2, 2): 1, (3, 3): 1, (4, 1): 1})
    return _sp(4, {(1, 1): 1, (2, 3): 1, (3, 2): 1, (4, 4): 1})


_register(
    "yb.perm.bisymm",
    "cp",
    2,
    4,
    (),
    _build_cp,
    variants=FIRST_SECOND,
    meta=FamilyMeta(2, 4, 4, 4, "2", "-1", (("1", 3), ("-1", 1)), FIRST_SECOND, ()),
)


def _build_cpc(p: dict, v: str | None) -> np.ndarray:
    if _is_second(v):
        return _sp(4, {(1, 3): 1, (2, 1): 1, (3, 4): 1, (4, 2): 1})
    return _sp(4, {(1, 2): 1, (2, 4): 1, (3, 1): 1, (4, 3): 1})


_register(
    "yb.perm.circ",
    "cpc",
    2,
    4,
    (),
    _build_cpc,
    variants=FIRST_SECOND,
    meta=FamilyMeta(
        2, 4, 4, 4, "0", "-1", (("1", 1), ("1j", 1), ("-1", 1), ("-1j", 1)), FIRST_SECOND, ()
    ),
)


def _build_cp1(p: dict, v: str | None) -> np.ndarray:
    x, y, z, t = p["x"], p["y"], p["z"], p["t"]
    if _is_second(v):
        return _sp(4, {(1, 4): y, (2, 2): x, (3, 3): t, (4, 1): z})
    return _sp(4, {(1, 1): x, (2, 3): y, (3, 2): z, (4, 4): t})


_register(
    "yb.star4.cp1",
    "cp1",
    2,
    4,
    ("x", "y", "z", "t"),
    _build_cp1,
    variants=FIRST_SECOND,
    constraints=("x", "y", "z", "t"),
    # the second display needs t = x: acting on the |111> basis vector, the
    # two chain sides give t*y*z vs x*y*z, so generic t breaks the equation.
    identifications=(("second", "t", "x"),),
    meta=FamilyMeta(
        2,
        4,
        4,
        4,
        "x + t",
        "-x*y*z*t",
        (("x", 1), ("t", 1), ("sqrt(y*z)", 1), ("-sqrt(y*z)", 1)),
        FIRST_SECOND,
        ("x", "y", "z", "t"),
    ),
)


def _build_cp2(p: dict, v: str | None) -> np.ndarray:
    x, y = p["x"], p["y"]
    if _is_second(v):
        return _sp(4, {(1, 2): x, (2, 4): x, (3, 1): y, (4, 3): y})
    return _sp(4, {(1, 3): x, (2, 1): y, (3, 4): x, (4, 2): y})


_register(
    "yb.circ4.cp2",
    "cp2",
    2,
    4,
    ("x", "y"),
    _build_cp2,
    variants=FIRST_SECOND,
    constraints=("x", "y"),
    meta=FamilyMeta(
        2,
        4,
        4,
        4,
        "0",
        "-x**2*y**2",
        (
            ("sqrt(x*y)", 1),
            ("-sqrt(x*y)", 1),
            ("1j*sqrt(x*y)", 1),
            ("-1j*sqrt(x*y)", 1),
        ),
        FIRST_SECOND,
        ("x", "y"),
    ),
)


def _build_c24(p: dict, v: str | None) -> np.ndarray:
    x, y, s = p["x"], p["y"], _sign(v)
    return np.array(
        [
            [x * y, 0, 0, y**2],
            [0, x * y, s * x * y, 0],
            [0, -s * x * y, x * y, 0],
            [-(x**2), 0, 0, x * y],
        ],
        dtype=np.complex128,
    )


_register(
    "yb.star8.c24",
    "c24",
    2,
    4,
    ("x", "y"),
    _build_c24,
    variants=UPPER_LOWER,
    constraints=("x", "y"),
    meta=FamilyMeta(
        2,
        4,
        8,
        4,
        "4*x*y",
        "4*x**4*y**4",
        (("(1+1j)*x*y", 2), ("(1-1j)*x*y", 2)),
        UPPER_LOWER,
        ("x", "y"),
    ),
)


def _build_c34(p: dict, v: str | None) -> np.ndarray:
    x, y, z, s = p["x"], p["y"], p["z"], _sign(v)
    return np.array(
        [
            [x * y, 0, 0, y**2],
            [0, z * y, s * x * y, 0],
            [0, s * x * y, z * y, 0],
            [z**2, 0, 0, x * y],
        ],
        dtype=np.complex128,
    )


_register(
    "yb.star8.c34",
    "c34",
    2,
    4,
    ("x", "y", "z"),
    _build_c34,
    variants=UPPER_LOWER,
    constraints=("y", "z - x", "z + x"),
    meta=FamilyMeta(
        2,
        4,
        8,
        4,
        "2*y*(x + z)",
        # det printed alongside the eigenvalues has the wrong sign; the
        # eigenvalue product is -y**4*(x**2 - z**2)**2.
        "-y**4*(z**2 - x**2)**2",
        (("y*(x - z)", 1), ("-y*(x - z)", 1), ("y*(x + z)", 2)),
        UPPER_LOWER,
        ("y", "z - x", "z + x"),
    ),
)


def _build_c34y(p: dict, v: str | None) -> np.ndarray:
    x, y, z, s = p["x"], p["y"], p["z"], _sign(v)
    w = cmath.sqrt((x**2 + z**2) / 2)
    return np.array(
        [
            [x * y, 0, 0, y**2],
            [0, (x + z) * y / 2, s * y * w, 0],
            [0, s * y * w, (x + z) * y / 2, 0],
            [(x + z) ** 2 / 4, 0, 0, y * z],
        ],
        dtype=np.complex128,
    )


_register(
    "yb.star8.c34y",
    "c34y",
    2,
    4,
    ("x", "y", "z"),
    _build_c34y,
    variants=UPPER_LOWER,
    constraints=("y",),
    genericity=("x - z", "x + z"),
    meta=FamilyMeta(
        2,
        4,
        8,
        4,
        "2*y*(x + z)",
        "y**4*(x - z)**4/16",
        (
            ("y*(x + z - sqrt(2)*sqrt(x**2 + z**2))/2", 2),
            ("y*(x + z + sqrt(2)*sqrt(x**2 + z**2))/2", 2),
        ),
        UPPER_LOWER,
        ("y",),
    ),
)


def _build_c22(p: dict, v: str | None) -> np.ndarray:
    x, y, s = p["x"], p["y"], _sign(v)
    return np.array(
        [
            [x * y, 0, 0, y**2],
            [0, x * y, s * x * y, 0],
            [0, s * x * y, x * y, 0],
            [x**2, 0, 0, x * y],
        ],
        dtype=np.complex128,
    )


_register(
    "yb.star8.c22",
    "c22",
    2,
    4,
    ("x", "y"),
    _build_c22,
    variants=UPPER_LOWER,
    constraints=("x", "y"),
    meta=FamilyMeta(
        2, 4, 8, 2, "4*x*y", "0", (("2*x*y", 2), ("0", 2)), UPPER_LOWER, ("x", "y")
    ),
)


def _build_c4c(p: dict, v: str | None) -> np.ndarray:
    x, y, z = p["x"], p["y"], p["z"]
    return np.array(
        [
            [0, x * y, y * z, 0],
            [z**2, 0, 0, x * y],
            [x * z, 0, 0, y * z],
            [0, z**2, x * z, 0],
        ],
        dtype=np.complex128,
    )


_register(
    "yb.circ8.c4c",
    "c4c",
    2,
    4,
    ("x", "y", "z"),
    _build_c4c,
    constraints=("y", "z", "z - x", "z + x"),
    meta=FamilyMeta(
        2,
        4,
        8,
        4,
        "0",
        # the printed det is degree 6, impossible for degree-2 entries; the
        # eigenvalue product fixes both the degree and the sign.
        "-y**2*z**2*(z**2 - x**2)**2",
        (
            ("sqrt(-y*z)*(x - z)", 1),
            ("-sqrt(-y*z)*(x - z)", 1),
            ("sqrt(y*z)*(x + z)", 1),
            ("-sqrt(y*z)*(x + z)", 1),
        ),
        (),
        ("y", "z", "z - x", "z + x"),
    ),
)


def _build_c2c(p: dict, v: str | None) -> np.ndarray:
    x, y = p["x"], p["y"]
    return np.array(
        [[0, -y, -y, 0], [-x, 0, 0, y], [-x, 0, 0, y], [0, x, x, 0]],
        dtype=np.complex128,
    )


_register(
    "yb.circ8.c2c",
    "c2c",
    2,
    4,
    ("x", "y"),
    _build_c2c,
    constraints=("x", "y"),
    meta=FamilyMeta(
        2,
        4,
        8,
        2,
        "0",
        "0",
        (("2*sqrt(x*y)", 1), ("-2*sqrt(x*y)", 1), ("0", 2)),
        (),
        ("x", "y"),
    ),
)


def _build_tri9_v1(p: dict, v: str | None) -> np.ndarray:
    x, y, z, s = p["x"], p["y"], p["z"], p["s"]
    return np.array(
        [[x, y, z, s], [0, 0, x, y], [0, x, 0, z], [0, 0, 0, x]], dtype=np.complex128
    )


_TRI9_EIG = (("x", 3), ("-x", 1))

_register(
    "yb.tri9.v1",
    "c9.1",
    2,
    4,
    ("x", "y", "z", "s"),
    _build_tri9_v1,
    constraints=("x",),
    meta=FamilyMeta(2, 4, 9, 4, "2*x", "-x**4", _TRI9_EIG, (), ("x",)),
)


def _build_tri9_v2(p: dict, v: str | None) -> np.ndarray:
    x, y, z = p["x"], p["y"], p["z"]
    return np.array(
        [[x, y, y, z], [0, 0, -x, -y], [0, -x, 0, -y], [0, 0, 0, x]],
        dtype=np.complex128,
    )


_register(
    "yb.tri9.v2",
    "c9.2",
    2,
    4,
    ("x", "y", "z"),
    _build_tri9_v2,
    constraints=("x",),
    meta=FamilyMeta(2, 4, 9, 4, "2*x", "-x**4", _TRI9_EIG, (), ("x",)),
)


def _build_tri9_v3(p: dict, v: str | None) -> np.ndarray:
    x, y, z = p["x"], p["y"], p["z"]
    return np.array(
        [
            [x, y, -y, z],
            [0, 0, x, -z * x / y],
            [0, x, 0, z * x / y],
            [0, 0, 0, x],
        ],
        dtype=np.complex128,
    )


_register(
    "yb.tri9.v3",
    "c9.3",
    2,
    4,
    ("x", "y", "z"),
    _build_tri9_v3,
    constraints=("x", "y"),
    meta=FamilyMeta(2, 4, 9, 4, "2*x", "-x**4", _TRI9_EIG, (), ("x", "y")),
)


def _build_tri9_f1(p: dict, v: str | None) -> np.ndarray:
    x, y, z = p["x"], p["y"], p["z"]
    a = y - 2 * x * z / y
    return np.array(
        [
            [x, y, y, z],
            [0, 0, -x, a],
            [0, -x, 0, a],
            [0, 0, 0, x * (4 * x * z / y**2 - 3)],
        ],
        dtype=np.complex128,
    )


_register(
    "yb.tri9.f1",
    "f1",
    2,
    4,
    ("x", "y", "z"),
    _build_tri9_f1,
    constraints=("x", "y", "z - 3*y**2/(4*x)"),
    meta=FamilyMeta(
        2,
        4,
        9,
        4,
        "2*x*(2*x*z - y**2)/y**2",
        "x**4*(3 - 4*x*z/y**2)",
        (("x", 2), ("-x", 1), ("x*(4*x*z/y**2 - 3)", 1)),
        (),
        ("x", "y", "z - 3*y**2/(4*x)"),
    ),
)


def _build_tri9_f2(p: dict, v: str | None) -> np.ndarray:
    x, y, z = p["x"], p["y"], p["z"]
    return np.array(
        [
            [x, y, -y, z],
            [0, 0, -x, 2 * z * x / y + y],
            [0, 3 * x, 0, 2 * z * x / y - y],
            [0, 0, 0, 4 * z * x**2 / y**2 + x],
        ],
        dtype=np.complex128,
    )


_register(
    "yb.tri9.f2",
    "f2",
    2,
    4,
    ("x", "y", "z"),
    _build_tri9_f2,
    constraints=("x", "y", "z + y**2/(4*x)"),
    meta=FamilyMeta(
        2,
        4,
        9,
        4,
        "2*x*(1 + 2*x*z/y**2)",
        "3*x**4*(4*z*x/y**2 + 1)",
        (
            ("x", 1),
            ("1j*sqrt(3)*x", 1),
            ("-1j*sqrt(3)*x", 1),
            ("x*(1 + 4*z*x/y**2)", 1),
        ),
        (),
        ("x", "y", "z + y**2/(4*x)"),
    ),
)


def _build_tri9_p4(p: dict, v: str | None) -> np.ndarray:
    x, y, z, s = p["x"], p["y"], p["z"], p["s"]
    return np.array(
        [
            [x, y, z, s],
            [0, 0, -x, y - 2 * s * x / z],
            [0, x - 2 * x * y / z, 0, z - 2 * s * x / z],
            [0, 0, 0, x * (4 * s * x - z * (2 * y + z)) / z**2],
        ],
        dtype=np.complex128,
    )


_register(
    "yb.tri9.p4",
    "p4",
    2,
    4,
    ("x", "y", "z", "s"),
    _build_tri9_p4,
    constraints=("x", "z", "y - z/2"),
    genericity=("z*(2*y + z) - 4*s*x",),
    meta=FamilyMeta(
        2,
        4,
        9,
        4,
        "2*x*(2*s*x - y*z)/z**2",
        "x**4*(2*y - z)*(z*(2*y + z) - 4*s*x)/z**3",
        (
            ("x", 1),
            ("x*sqrt(2*y/z - 1)", 1),
            ("-x*sqrt(2*y/z - 1)", 1),
            ("x*(4*s*x - z*(2*y + z))/z**2", 1),
        ),
        (),
        ("x", "z", "y - z/2"),
    ),
)


def _build_tri9_p5(p: dict, v: str | None) -> np.ndarray:
    x, y, z, s, t = p["x"], p["y"], p["z"], p["s"], p["t"]
    return np.array(
        [
            [x, y, z, s],
            [0, 0, t, s * (t - x) / z + y],
            [0, y * (t - x) / z + x, 0, s * (t - x) / z + z],
            [0, 0, 0, (s * (t - x) ** 2 + t * z * (y + z) - x * y * z) / z**2],
        ],
        dtype=np.complex128,
    )


_register(
    "yb.tri9.p5",
    "p5",
    2,
    4,
    ("x", "y", "z", "s", "t"),
    _build_tri9_p5,
    constraints=("x", "z", "t"),
    genericity=(
        "y*(t - x)/z + x",
        "s*(t - x)**2 + t*z*(y + z) - x*y*z",
        "(t/z)*(t*y - x*y + x*z)",
    ),
    meta=FamilyMeta(
        2,
        4,
        9,
        4,
        "x + (s*(t - x)**2 + t*z*(y + z) - x*y*z)/z**2",
        "-x*t*(y*(t - x)/z + x)*(s*(t - x)**2 + t*z*(y + z) - x*y*z)/z**2",
        (
            ("x", 1),
            ("sqrt((t/z)*(t*y - x*y + x*z))", 1),
            ("-sqrt((t/z)*(t*y - x*y + x*z))", 1),
            ("(s*t**2 - 2*s*t*x + t*z**2 + y*t*z + s*x**2 - y*x*z)/z**2", 1),
        ),
        (),
        ("x", "z", "t"),
    ),
)


def _build_tri10(p: dict, v: str | None) -> np.ndarray:
    x, y, z = p["x"], p["y"], p["z"]
    return np.array(
        [
            [x, y, y, y**2 / x],
            [0, 0, -x, -y],
            [0, -x, 0, -y],
            [z, 0, 0, x],
        ],
        dtype=np.complex128,
    )


_register(
    "yb.tri10",
    "c10",
    2,
    4,
    ("x", "y", "z"),
    _build_tri10,
    constraints=("x",),
    genericity=("x**3 + z*y**2",),
    meta=FamilyMeta(
        2,
        4,
        10,
        4,
        "2*x",
        "-x*(x**3 + z*y**2)",
        (
            ("x", 2),
            ("sqrt(x**2 + z*y**2/x)", 1),
            ("-sqrt(x**2 + z*y**2/x)", 1),
        ),
        (),
        ("x",),
    ),
)


# ---------------------------------------------------------------------------
# ternary solutions, dimension 8
# ---------------------------------------------------------------------------

_PERM8_POSITIONS = {
    "bisymm1": ((1, 1), (2, 7), (3, 3), (4, 5), (5, 4), (6, 6), (7, 2), (8, 8)),
    "bisymm2": ((1, 8), (2, 2), (3, 6), (4, 4), (5, 5), (6, 3), (7, 7), (8, 1)),
    "symm1": ((1, 1), (2, 5), (3, 8), (4, 4), (5, 2), (6, 6), (7, 7), (8, 3)),
    "symm2": ((1, 6), (2, 2), (3, 3), (4, 7), (5, 5), (6, 1), (7, 4), (8, 8)),
}

_PERM8_META = FamilyMeta(3, 8, 8, 8, "4", "1", (("1", 6), ("-1", 2)), (), ())

for _name, _pos in _PERM8_POSITIONS.items():
    _register(
        f"tb.perm.{_name}",
        _name,
        3,
        8,
        (),
        lambda p, v, _pos=_pos: _sp(8, {rc: 1 for rc in _pos}),
        meta=_PERM8_META,
    )


def _star8_meta(trace: str, eig: tuple[tuple[str, int], ...], det: str = "x**8*y**8") -> FamilyMeta:
    return FamilyMeta(3, 8, 8, 8, trace, det, eig, UPPER_LOWER, ("x", "y"))


def _build_b11(p: dict, v: str | None) -> np.ndarray:
    x, y, s = p["x"], p["y"], _sign(v)
    d = x * y
    return _sp(
        8,
        {
            (1, 1): d, (3, 3): d, (6, 6): d, (8, 8): d,
            (2, 7): s * y**2, (7, 2): s * x**2,
            (4, 5): s * x**2, (5, 4): s * y**2,
        },
    )


def _build_b12(p: dict, v: str | None) -> np.ndarray:
    x, y, s = p["x"], p["y"], _sign(v)
    d = x * y
    return _sp(
        8,
        {
            (1, 1): d, (3, 3): d, (6, 6): d, (8, 8): d,
            (2, 7): s * y**2, (7, 2): -s * x**2,
            (4, 5): s * x**2, (5, 4): -s * y**2,
        },
    )


def _build_b21(p: dict, v: str | None) -> np.ndarray:
    x, y, s = p["x"], p["y"], _sign(v)
    d = s * x**3 * y**3
    return _sp(
        8,
        {
            (2, 2): d, (4, 4): d, (5, 5): d, (7, 7): d,
            (1, 8): x**6, (3, 6): x**4 * y**2,
            (6, 3): x**2 * y**4, (8, 1): y**6,
        },
    )


def _build_b22(p: dict, v: str | None) -> np.ndarray:
    x, y, s = p["x"], p["y"], _sign(v)
    d = s * x**3 * y**3
    return _sp(
        8,
        {
            (2, 2): d, (4, 4): d, (5, 5): d, (7, 7): d,
            (1, 8): x**6, (3, 6): x**4 * y**2,
            (6, 3): -(x**2) * y**4, (8, 1): -(y**6),
        },
    )


def _build_s11(p: dict, v: str | None) -> np.ndarray:
    x, y, s = p["x"], p["y"], _sign(v)
    d = x * y
    return _sp(
        8,
        {
            (1, 1): d, (4, 4): d, (6, 6): d, (7, 7): d,
            (2, 5): s * d, (5, 2): s * d,
            (3, 8): y**2, (8, 3): x**2,
        },
    )


def _build_s12(p: dict, v: str | None) -> np.ndarray:
    x, y, s = p["x"], p["y"], _sign(v)
    d = x * y
    return _sp(
        8,
        {
            (1, 1): d, (4, 4): d, (6, 6): d, (7, 7): d,
            (2, 5): s * d, (5, 2): -s * d,
            (3, 8): y**2, (8, 3): -(x**2),
        },
    )


def _build_s21(p: dict, v: str | None) -> np.ndarray:
    x, y, s = p["x"], p["y"], _sign(v)
    d = x * y
    return _sp(
        8,
        {
            (2, 2): d, (3, 3): d, (5, 5): d, (8, 8): d,
            (1, 6): y**2, (6, 1): x**2,
            (4, 7): s * d, (7, 4): s * d,
        },
    )


def _build_s22(p: dict, v: str | None) -> np.ndarray:
    x, y, s = p["x"], p["y"], _sign(v)
    d = x * y
    return _sp(
        8,
        {
            (2, 2): d, (3, 3): d, (5, 5): d, (8, 8): d,
            (1, 6): y**2, (6, 1): -(x**2),
            (4, 7): s * d, (7, 4): -s * d,
        },
    )


_EIG_REAL8 = (("x*y", 6), ("-x*y", 2))
_EIG_IMAG8 = (("x*y", 4), ("1j*x*y", 2), ("-1j*x*y", 2))

for _fid, _anchor, _b, _tr, _eig, _det in (
    ("tb.star8.b11", "b11", _build_b11, "4*x*y", _EIG_REAL8, "x**8*y**8"),
    ("tb.star8.b12", "b12", _build_b12, "4*x*y", _EIG_IMAG8, "x**8*y**8"),
    (
        "tb.star8.b21",
        "b21",
        _build_b21,
        "4*s*x**3*y**3",
        (("x**3*y**3", 2), ("-x**3*y**3", 2), ("s*x**3*y**3", 4)),
        "x**24*y**24",
    ),
    (
        "tb.star8.b22",
        "b22",
        _build_b22,
        "4*s*x**3*y**3",
        (("1j*x**3*y**3", 2), ("-1j*x**3*y**3", 2), ("s*x**3*y**3", 4)),
        "x**24*y**24",
    ),
    ("tb.star8.s11", "s11", _build_s11, "4*x*y", _EIG_REAL8, "x**8*y**8"),
    ("tb.star8.s12", "s12", _build_s12, "4*x*y", _EIG_IMAG8, "x**8*y**8"),
    ("tb.star8.s21", "s21", _build_s21, "4*x*y", _EIG_REAL8, "x**8*y**8"),
    ("tb.star8.s22", "s22", _build_s22, "4*x*y", _EIG_IMAG8, "x**8*y**8"),
):
    _register(
        _fid,
        _anchor,
        3,
        8,
        ("x", "y"),
        _b,
        variants=UPPER_LOWER,
        constraints=("x", "y"),
        meta=_star8_meta(_tr, _eig, _det),
    )


def _build_cv16(p: dict, v: str | None) -> np.ndarray:
    x, s = p["x"], _sign(v)
    d = x**3
    return _sp(
        8,
        {
            (1, 1): d, (2, 2): d, (3, 3): d, (4, 4): d,
            (5, 5): d, (6, 6): d, (7, 7): d, (8, 8): d,
            (1, 8): -1.0, (8, 1): x**6,
            (2, 7): -s * x**2, (7, 2): s * x**4,
            (3, 6): -(x**2), (6, 3): x**4,
            (4, 5): -s * x**4, (5, 4): s * x**2,
        },
    )


_register(
    "tb.star16.cv16",
    "cv16",
    3,
    8,
    ("x",),
    _build_cv16,
    variants=UPPER_LOWER,
    constraints=("x",),
    meta=FamilyMeta(
        3,
        8,
        16,
        8,
        "8*x**3",
        "16*x**24",
        (("(1+1j)*x**3", 4), ("(1-1j)*x**3", 4)),
        UPPER_LOWER,
        ("x",),
    ),
)


def _build_cv16c(p: dict, v: str | None) -> np.ndarray:
    x, y, s = p["x"], p["y"], _sign(v)
    d = s * x * y
    return _sp(
        8,
        {
            (1, 1): d, (2, 2): d, (3, 3): d, (4, 4): d,
            (5, 5): d, (6, 6): d, (7, 7): d, (8, 8): d,
            (1, 6): y**2, (6, 1): x**2,
            (2, 5): x * y, (5, 2): x * y,
            (3, 8): y**2, (8, 3): x**2,
            (4, 7): x * y, (7, 4): x * y,
        },
    )


_register(
    "tb.circ16.cv16c",
    "cv16c",
    3,
    8,
    ("x", "y"),
    _build_cv16c,
    variants=UPPER_LOWER,
    constraints=("x", "y"),
    meta=FamilyMeta(
        3,
        8,
        16,
        4,
        "8*s*x*y",
        "0",
        (("2*s*x*y", 4), ("0", 4)),
        UPPER_LOWER,
        ("x", "y"),
    ),
)


_P13_VARIANTS = ("first-upper", "first-lower", "second-upper", "second-lower")


def _build_c16c(p: dict, v: str | None) -> np.ndarray:
    x, y = p["x"], p["y"]
    s = _sign(v)
    sig = -1.0 if _is_second(v) else 1.0
    return _sp(
        8,
        {
            (1, 1): x, (2, 2): x * y, (3, 3): x, (4, 4): x * y,
            (5, 5): x * y, (6, 6): x, (7, 7): x * y, (8, 8): x,
            (1, 6): y**2, (6, 1): x**2,
            (2, 5): sig * x, (5, 2): sig * x,
            (3, 8): s * y**2, (8, 3): s * x**2,
            (4, 7): s * sig * x, (7, 4): s * sig * x,
        },
    )


_register(
    "tb.circ16.p13",
    "c16c",
    3,
    8,
    ("x", "y"),
    _build_c16c,
    variants=_P13_VARIANTS,
    constraints=("x", "y - 1", "y + 1"),
    equation="partial-13",
    meta=FamilyMeta(
        3,
        8,
        16,
        8,
        "4*x*(y + 1)",
        "x**8*(y**2 - 1)**4",
        (("x*(y + 1)", 4), ("x*(y - 1)", 2), ("-x*(y - 1)", 2)),
        _P13_VARIANTS,
        ("x", "y - 1", "y + 1"),
    ),
)


def _build_c16c_r(p: dict, v: str | None, flip: float) -> np.ndarray:
    x, y = p["x"], p["y"]
    s = _sign(v)
    r = flip * x * cmath.sqrt(2 * y**2 - 2 * y + 1)
    g = x * (2 * y - 1)
    return _sp(
        8,
        {
            (1, 1): g, (3, 3): g,
            (2, 2): x * y, (4, 4): x * y, (5, 5): x * y, (7, 7): x * y,
            (6, 6): x, (8, 8): x,
            (1, 6): y**2, (6, 1): x**2,
            (3, 8): s * y**2, (8, 3): s * x**2,
            (2, 5): r, (5, 2): r,
            (4, 7): s * r, (7, 4): s * r,
        },
    )


_P13R_META = FamilyMeta(
    3,
    8,
    16,
    8,
    "8*x*y",
    "x**8*(y - 1)**8",
    (
        ("x*(y + sqrt(2*y**2 - 2*y + 1))", 4),
        ("x*(y - sqrt(2*y**2 - 2*y + 1))", 4),
    ),
    UPPER_LOWER,
    ("x", "y - 1"),
)

_register(
    "tb.circ16.p13r1",
    "c16c1",
    3,
    8,
    ("x", "y"),
    lambda p, v: _build_c16c_r(p, v, 1.0),
    variants=UPPER_LOWER,
    constraints=("x", "y - 1"),
    equation="partial-13",
    meta=_P13R_META,
)

_register(
    "tb.circ16.p13r2",
    "c16c2",
    3,
    8,
    ("x", "y"),
    lambda p, v: _build_c16c_r(p, v, -1.0),
    variants=UPPER_LOWER,
    constraints=("x", "y - 1"),
    equation="partial-13",
    meta=_P13R_META,
)


# ---------------------------------------------------------------------------
# n-ary ladder and auxiliary matrices
# ---------------------------------------------------------------------------


def _build_minkowski(p: dict, v: str | None) -> np.ndarray:
    n = int(p["n"].real)
    dim = 2**n
    m = np.identity(dim, dtype=np.complex128)
    for i in range(dim):
        m[i, dim - 1 - i] = -1.0 if i < dim // 2 else 1.0
    return m


def _minkowski_meta(p: dict) -> FamilyMeta:
    n = int(p["n"].real)
    dim = 2**n
    return FamilyMeta(
        n,
        dim,
        2 * dim,
        dim,
        str(dim),
        str(2 ** (dim // 2)),
        (("1+1j", dim // 2), ("1-1j", dim // 2)),
        (),
        (),
    )


_register(
    "nb.minkowski",
    "ctilde",
    None,
    None,
    ("n",),
    _build_minkowski,
    int_params=(("n", 2, 4),),
    meta_builder=_minkowski_meta,
)


def _build_q4(p: dict, v: str | None) -> np.ndarray:
    a, c, d = p["a"], p["c"], p["d"]
    q = np.array([[a, 1], [c, d]], dtype=np.complex128)
    return np.kron(q, q)


_register(
    "aux.q4",
    "q4",
    2,
    4,
    ("a", "c", "d"),
    _build_q4,
    genericity=("a", "c", "d", "a*d - c"),
    equation="none",
    meta=FamilyMeta(
        2,
        4,
        16,
        4,
        "(a + d)**2",
        "(a*d - c)**4",
        (
            ("((a + d + sqrt((a - d)**2 + 4*c))/2)**2", 1),
            ("a*d - c", 2),
            ("((a + d - sqrt((a - d)**2 + 4*c))/2)**2", 1),
        ),
        (),
        ("a*d - c",),
    ),
)


def _build_q8(p: dict, v: str | None) -> np.ndarray:
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    q = np.array([[a, b], [c, d]], dtype=np.complex128)
    return np.kron(q, np.kron(q, q))


def _q8_eigs() -> tuple[tuple[str, int], ...]:
    mp = "((a + d + sqrt((a - d)**2 + 4*b*c))/2)"
    mm = "((a + d - sqrt((a - d)**2 + 4*b*c))/2)"
    return (
        (f"{mp}**3", 1),
        (f"{mp}**2*{mm}", 3),
        (f"{mp}*{mm}**2", 3),
        (f"{mm}**3", 1),
    )


_register(
    "aux.q8",
    "q8",
    3,
    8,
    ("a", "b", "c", "d"),
    _build_q8,
    genericity=("a", "b", "c", "d", "a*d - b*c"),
    equation="none",
    meta=FamilyMeta(
        3, 8, 64, 8, "(a + d)**3", "(a*d - b*c)**12", _q8_eigs(), (), ("a*d - b*c",)
    ),
)


def _build_reverse(p: dict, v: str | None) -> np.ndarray:
    n = int(p["n"].real)
    return np.fliplr(np.identity(n)).astype(np.complex128)


def _reverse_meta(p: dict) -> FamilyMeta:
    n = int(p["n"].real)
    return FamilyMeta(
        0,
        n,
        n,
        n,
        str(n % 2),
        str((-1) ** (n // 2)),
        (("1", (n + 1) // 2), ("-1", n // 2)),
        (),
        (),
    )


_register(
    "aux.reverse",
    "J",
    None,
    None,
    ("n",),
    _build_reverse,
    int_params=(("n", 2, 6),),
    equation="none",
    meta_builder=_reverse_meta,
)

_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
    np.identity(2, dtype=np.complex128),
)


def _build_pauli(p: dict, v: str | None) -> np.ndarray:
    i, j, k = (int(p[name].real) for name in ("i", "j", "k"))
    return np.kron(_PAULI[i - 1], np.kron(_PAULI[j - 1], _PAULI[k - 1]))


def _pauli_meta(p: dict) -> FamilyMeta:
    i, j, k = (int(p[name].real) for name in ("i", "j", "k"))
    tr = 8 if (i, j, k) == (4, 4, 4) else 0
    return FamilyMeta(
        3,
        8,
        8,
        8,
        str(tr),
        "1",
        (("1", (8 + tr) // 2), ("-1", (8 - tr) // 2)),
        (),
        (),
    )


_register(
    "aux.pauli.sigma",
    "sigma",
    3,
    8,
    ("i", "j", "k"),
    _build_pauli,
    int_params=(("i", 1, 4), ("j", 1, 4), ("k", 1, 4)),
    equation="none",
    meta_builder=_pauli_meta,
)


# ---------------------------------------------------------------------------
# registry access
# ---------------------------------------------------------------------------


def family_ids() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def get_family(family_id: str) -> Family:
    try:
        return _REGISTRY[family_id]
    except KeyError:
        raise UnknownFamilyError(family_id) from None


def _normalize_variant(fam: Family, variant: str | None) -> str | None:
    if not fam.variants:
        if variant is not None:
            raise UnknownVariantError(f"{fam.family_id} has no variants")
        return None
    if variant is None:
        return fam.variants[0]
    if variant not in fam.variants:
        raise UnknownVariantError(f"{fam.family_id}: unknown variant {variant!r}")
    return variant


def _normalize_params(fam: Family, params: Params | None) -> dict[str, complex]:
    given = dict(params or {})
    unknown = set(given) - set(fam.parameters)
    if unknown:
        raise ConstraintViolationError(
            f"{fam.family_id}: unexpected parameters {sorted(unknown)}"
        )
    missing = [name for name in fam.parameters if name not in given]
    if missing:
        raise ConstraintViolationError(f"{fam.family_id}: missing parameters {missing}")
    out: dict[str, complex] = {}
    int_names = {name for name, _, _ in fam.int_params}
    for name in fam.parameters:
        val = complex(given[name])
        if name in int_names:
            if val.imag != 0 or val.real != int(val.real):
                raise ConstraintViolationError(f"{fam.family_id}: {name} must be an integer")
        out[name] = val
    for name, lo, hi in fam.int_params:
        iv = int(out[name].real)
        if not lo <= iv <= hi:
            raise ConstraintViolationError(
                f"{fam.family_id}: {name}={iv} outside supported range {lo}..{hi}"
            )
    return out


def build(
    family_id: str,
    params: Params | None = None,
    variant: str | None = None,
    check_constraints: bool = True,
) -> ComplexMatrix:
    """Construct a family member; parameters on a declared locus are refused.

    Pass check_constraints=False to study degenerate limits deliberately.
    """
    fam = get_family(family_id)
    p = _normalize_params(fam, params)
    v = _normalize_variant(fam, variant)
    if check_constraints:
        for expr in fam.constraints:
            if abs(_eval_expr(expr, p)) == 0:
                raise ConstraintViolationError(
                    f"{family_id}: constraint {expr!r} must stay nonzero"
                )
    return matrix(fam.builder(p, v))


def family_meta(family_id: str, params: Params | None = None) -> FamilyMeta:
    fam = get_family(family_id)
    return fam.meta_builder(_normalize_params(fam, params))


def family_arity(family_id: str, params: Params | None = None) -> int | None:
    fam = get_family(family_id)
    if fam.equation == "none":
        return None
    if fam.arity is not None:
        return fam.arity
    return family_meta(family_id, params).arity


class MetaChecks(NamedTuple):
    trace_ok: bool
    det_ok: bool
    eigen_ok: bool
    rank_ok: bool


def verify_meta(
    family_id: str,
    params: Params | None = None,
    variant: str | None = None,
    tol: float = 1e-9,
) -> MetaChecks:
    """Revalidate the printed trace/determinant/spectrum/rank claims."""
    fam = get_family(family_id)
    p = _normalize_params(fam, params)
    v = _normalize_variant(fam, variant)
    m = np.asarray(build(family_id, p, v))
    meta = fam.meta_builder(p)

    ns = dict(p)
    ns.setdefault("s", _sign(v))

    coeffs = char_poly(m)
    dim = m.shape[0]
    trace = -coeffs[1]
    det = (-1) ** dim * coeffs[-1]

    claimed_tr = _eval_expr(meta.trace_formula, ns)
    claimed_det = _eval_expr(meta.det_formula, ns)
    trace_ok = abs(trace - claimed_tr) <= tol * max(1.0, abs(trace), abs(claimed_tr))
    det_ok = abs(det - claimed_det) <= tol * max(1.0, abs(det), abs(claimed_det))

    if meta.eigen_claims:
        claims = tuple(
            EigenClaim(_eval_expr(expr, ns), mult) for expr, mult in meta.eigen_claims
        )
        eigen_ok = eigencheck(m, claims, tol)
    else:
        eigen_ok = True

    rank_ok = numeric_rank(m) == meta.claimed_rank
    return MetaChecks(trace_ok, det_ok, eigen_ok, rank_ok)


def declared_equation_passes(
    family_id: str,
    params: Params | None = None,
    variant: str | None = None,
    tol: float = 1e-9,
) -> bool:
    """Check the braid property the family is declared to satisfy."""
    fam = get_family(family_id)
    if fam.equation == "none":
        raise ValueError(f"{family_id} is not declared as an equation solution")
    m = build(family_id, params, variant)
    n = family_arity(family_id, params)
    if fam.equation == "partial-13":
        return partial_ternary_reports(m, tol)[1]
    return nary_braid_report(m, BraidArity(n), tol).passed


def sample_params(
    family_id: str,
    count: int = 5,
    seed: int = 0,
    margin: float = 0.1,
    variant: str | None = None,
) -> list[dict[str, complex]]:
    """Deterministic parameter draws staying `margin` away from every locus.

    Complex parameters have modulus in [0.5, 2]; integer parameters draw from
    their supported range. When `variant` names a display with a registered
    parameter identification, drawn values are pinned onto that locus before
    the constraint check.
    """
    fam = get_family(family_id)
    rng = np.random.default_rng([seed, zlib.crc32(family_id.encode())])
    int_ranges = {name: (lo, hi) for name, lo, hi in fam.int_params}
    pins = [(name, expr) for v, name, expr in fam.identifications if v == variant]
    out: list[dict[str, complex]] = []
    guard = 0
    while len(out) < count:
        guard += 1
        if guard > 10000 * count:
            raise RuntimeError(f"{family_id}: sampling failed to clear loci")
        cand: dict[str, complex] = {}
        for name in fam.parameters:
            if name in int_ranges:
                lo, hi = int_ranges[name]
                cand[name] = complex(int(rng.integers(lo, hi + 1)))
            else:
                r = rng.uniform(0.5, 2.0)
                th = rng.uniform(0.0, 2.0 * np.pi)
                cand[name] = complex(r * np.cos(th), r * np.sin(th))
        for name, expr in pins:
            cand[name] = _eval_expr(expr, cand)
        exprs = fam.constraints + fam.genericity
        if all(abs(_eval_expr(e, cand)) >= margin for e in exprs):
            out.append(cand)
    return out


def pauli_sigma(i: int, j: int, k: int) -> ComplexMatrix:
    """Triple Kronecker product of the four basis 2x2 matrices (4 = identity)."""
    for idx in (i, j, k):
        if idx not in (1, 2, 3, 4):
            raise ValueError("indices must be 1..4")
    return matrix(np.kron(_PAULI[i - 1], np.kron(_PAULI[j - 1], _PAULI[k - 1])))


# ---------------------------------------------------------------------------
# known conjugations between catalog members
# ---------------------------------------------------------------------------

CONJUGATION_PAIR_IDS = ("tri9-to-4vert", "tri10-to-4vert", "star16-circ16")

_STAR16_PARAM_NAMES = (
    "x", "y", "z", "s", "t", "u", "v", "w",
    "a", "b", "c", "d", "f", "g", "h", "p",
)


def conjugation_sample_params(
    pair_id: str, count: int = 5, seed: int = 0
) -> list[dict[str, complex]]:
    """Seeded parameter draws suited to a named conjugation pair."""
    if pair_id == "tri9-to-4vert":
        return sample_params("yb.tri9.v3", count, seed)
    if pair_id == "tri10-to-4vert":
        return sample_params("yb.tri10", count, seed)
    if pair_id == "star16-circ16":
        rng = np.random.default_rng([seed, zlib.crc32(pair_id.encode())])
        out = []
        for _ in range(count):
            draw = {}
            for name in _STAR16_PARAM_NAMES:
                r = rng.uniform(0.5, 2.0)
                th = rng.uniform(0.0, 2.0 * np.pi)
                draw[name] = complex(r * np.cos(th), r * np.sin(th))
            out.append(draw)
        return out
    raise UnknownFamilyError(pair_id)


def known_conjugator(pair_id: str, params: Params | None = None) -> ComplexMatrix:
    """The invertible U with U^-1 . source . U = target for a named pair."""
    p = dict(params or {})
    if pair_id == "tri9-to-4vert":
        x, y, z = p["x"], p["y"], p["z"]
        return matrix(
            np.array(
                [
                    [1, -y / (2 * x), y / (2 * x), 0],
                    [0, 1, 0, -z / y],
                    [0, 0, 1, 0],
                    [0, 0, 0, 1],
                ],
                dtype=np.complex128,
            )
        )
    if pair_id == "tri10-to-4vert":
        x, y, z = p["x"], p["y"], p["z"]
        return matrix(
            np.array(
                [
                    [0, x / z, -x / z, 0],
                    [-1, -(x**2) / (y * z), x**2 / (y * z), -y / x],
                    [1, -(x**2) / (y * z), x**2 / (y * z), 0],
                    [0, 0, 1, 1],
                ],
                dtype=np.complex128,
            )
        )
    if pair_id == "star16-circ16":
        # basis relabeling swapping rows/cols 5<->7 and 6<->8; the entries of
        # the star and circle shapes match position by position under it
        u = np.identity(8, dtype=np.complex128)
        u[4:8, 4:8] = 0
        u[4, 6] = u[5, 7] = u[6, 4] = u[7, 5] = 1
        return matrix(u)
    raise UnknownFamilyError(pair_id)


def conjugation_sides(
    pair_id: str, params: Params | None = None
) -> tuple[ComplexMatrix, ComplexMatrix]:
    """(source, target) matrices for a named conjugation pair."""
    p = dict(params or {})
    if pair_id == "tri9-to-4vert":
        x = p["x"]
        source = build("yb.tri9.v3", {"x": x, "y": p["y"], "z": p["z"]})
        target = matrix(x * np.asarray(_build_cp(p, None)))
        return source, target
    if pair_id == "tri10-to-4vert":
        x, y, z = p["x"], p["y"], p["z"]
        source = build("yb.tri10", {"x": x, "y": y, "z": z})
        target = matrix(
            _sp(4, {(1, 1): x, (2, 3): x + y**2 * z / x**2, (3, 2): x, (4, 4): x})
        )
        return source, target
    if pair_id == "star16-circ16":
        from . import polyadic

        source = polyadic.build_mstar8(p)
        target = polyadic.build_mcirc8(p)
        return source, target
    raise UnknownFamilyError(pair_id)


def verify_conjugation(
    pair_id: str, params: Params | None = None, tol: float = 1e-9
) -> bool:
    source, target = conjugation_sides(pair_id, params)
    u = np.asarray(known_conjugator(pair_id, params))
    lhs = np.linalg.inv(u) @ np.asarray(source) @ u
    t = np.asarray(target)
    scale = max(1.0, float(np.max(np.abs(t))))
    return float(np.max(np.abs(lhs - t))) <= tol * scale


def is_kron_product(m: ComplexMatrix, tol: float = 1e-10) -> bool:
    """Whether a 2^k-dimensional matrix factors as (2x2) (x) (rest).

    Any Kronecker power q (x) ... (x) q factors this way, so returning False
    certifies the matrix is not such a power. The test stacks the four
    half-size blocks as vectors and asks for numeric rank 1.
    """
    a = np.asarray(m)
    dim = a.shape[0]
    if dim % 2 != 0:
        raise ValueError("dimension must be even")
    h = dim // 2
    blocks = [a[r * h : (r + 1) * h, c * h : (c + 1) * h].ravel() for r in (0, 1) for c in (0, 1)]
    stacked = np.vstack(blocks)
    return numeric_rank(matrix(stacked), tol) <= 1


def manifest_records() -> list[dict]:
    """Stable JSON-ready description of every registered family."""
    records = []
    for fid in family_ids():
        fam = _REGISTRY[fid]
        records.append(
            {
                "id": fid,
                "anchor": fam.anchor,
                "arity": fam.arity,
                "dimension": fam.dimension,
                "parameters": list(fam.parameters),
                "constraints": list(fam.constraints),
                "variants": list(fam.variants),
                "equation": fam.equation,
            }
        )
    return records


def load_manifest() -> list[dict]:
    """The shipped family manifest; regenerate with scripts/generate_manifest.py."""
    text = importlib.resources.files("polybraid").joinpath("families.json").read_text()
    return json.loads(text)
