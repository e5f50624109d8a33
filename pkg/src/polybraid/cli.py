"""Command line interface for the braid-solution toolkit.

Every command prints a report with the same shape: the command echo, the
parsed inputs, the per-check outcomes, and a version stamp. With --json the
report is one JSON document; for identical inputs and seed the output is
byte-identical apart from the version value.

Exit codes: 0 all checks passed, 1 a verification check failed, 2 unknown
identifier or malformed input, 3 a build-time constraint violation, 4 a
search space exceeded its candidate cap.
"""

from __future__ import annotations

import json
import math
import re
import zlib
from typing import Sequence

import click
import numpy as np

from . import __version__, braid, catalog, gates, polyadic, search
from .gates import BlochParams, GateParams
from .matrices import conj_transpose, penrose_check
from .polyadic import ShapeClass

ENTANGLING_THRESHOLD = 1e-3

LAW_SUITES = ("closure", "identities", "partial-unitarity", "braid-group")

_GREEK_KEYS = {
    "α": "alpha",
    "β": "beta",
    "γ": "gamma",
    "θ": "theta",
    "κ": "kappa",
}

_SUPPORT_PRESETS = {
    "star": (ShapeClass.MSTAR, None),
    "circle": (ShapeClass.MCIRC, None),
    "star8": (ShapeClass.MSTARP, None),
    "circle8": (ShapeClass.MCIRCP, None),
    "quad8": (ShapeClass.MQUADP, None),
}


class ConstraintFailure(click.ClickException):
    exit_code = 3


class CapFailure(click.ClickException):
    exit_code = 4


# ---------------------------------------------------------------------------
# input parsing
# ---------------------------------------------------------------------------


def _norm_key(raw: str) -> str:
    key = raw.strip()
    return _GREEK_KEYS.get(key, key.lower())


def parse_angle(text: str) -> float:
    """Angles as decimal radians or pi literals: '0.5', '-pi', '3pi/4'."""
    t = text.strip().lower().replace("π", "pi").replace(" ", "").replace("*", "")
    try:
        return float(t)
    except ValueError:
        pass
    m = re.fullmatch(r"([+-]?\d*\.?\d*)pi(?:/([\d.]+))?", t)
    if m is None:
        raise ValueError(f"cannot parse angle {text!r}")
    coef = m.group(1)
    value = math.pi * (
        1.0 if coef in ("", "+") else -1.0 if coef == "-" else float(coef)
    )
    if m.group(2):
        value /= float(m.group(2))
    return value


def parse_complex(text: str) -> complex:
    """Complex values as 're+imi' ('1-0.5i') or polar 'r@theta' ('1@pi/4')."""
    t = text.strip().replace(" ", "")
    if "@" in t:
        mod_text, _, ang_text = t.partition("@")
        return float(mod_text) * complex(
            math.cos(parse_angle(ang_text)), math.sin(parse_angle(ang_text))
        )
    try:
        return complex(t.replace("i", "j"))
    except ValueError:
        return complex(parse_angle(t))


def parse_params(text: str | None) -> dict[str, complex]:
    out: dict[str, complex] = {}
    if not text:
        return out
    for item in text.split(","):
        if not item.strip():
            continue
        if "=" not in item:
            raise ValueError(f"expected name=value, got {item!r}")
        key, _, val = item.partition("=")
        out[_norm_key(key)] = parse_complex(val)
    return out


def _as_float(value: complex, name: str) -> float:
    if abs(value.imag) > 1e-12:
        raise ValueError(f"{name} must be real, got {value}")
    return float(value.real)


def parse_state(text: str) -> tuple[BlochParams, ...]:
    """Semicolon-separated 'theta,gamma' pairs, one per qubit factor."""
    factors = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'theta,gamma', got {chunk!r}")
        theta = parse_angle(parts[0])
        gamma = parse_angle(parts[1]) % (2.0 * math.pi)
        factors.append(BlochParams(theta=theta, gamma=gamma))
    return tuple(factors)


def parse_support(text: str) -> tuple[tuple[int, int], ...]:
    """Named support preset or explicit 1-based 'row,col;row,col' cells."""
    key = text.strip().lower()
    if key in _SUPPORT_PRESETS:
        tag, dim = _SUPPORT_PRESETS[key]
        return tuple(sorted(polyadic.class_support(tag, dim)))
    cells = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'row,col', got {chunk!r}")
        r, c = int(parts[0]), int(parts[1])
        if r < 1 or c < 1:
            raise ValueError("support cells are 1-based")
        cells.append((r - 1, c - 1))
    return tuple(sorted(set(cells)))


# ---------------------------------------------------------------------------
# report formatting
# ---------------------------------------------------------------------------


def _fmt_float(x: float) -> str:
    return format(float(x), ".12g")


def _fmt_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return _fmt_float(z.real)
    if z.real == 0:
        return f"{_fmt_float(z.imag)}i"
    sign = "+" if z.imag > 0 else "-"
    return f"{_fmt_float(z.real)}{sign}{_fmt_float(abs(z.imag))}i"


def _fmt_params(params: dict[str, complex]) -> str:
    return ", ".join(f"{k}={_fmt_complex(v)}" for k, v in params.items())


def _matrix_payload(m) -> list[list[str]]:
    return [[_fmt_complex(z) for z in row] for row in np.asarray(m)]


def _matrix_lines(m, indent: str = "  ") -> list[str]:
    rows = _matrix_payload(m)
    width = max((len(cell) for row in rows for cell in row), default=1)
    return [indent + "[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in rows]


def _pattern_payload(pat: polyadic.PartialIdentityPattern | None):
    if pat is None:
        return None
    return {"mask": list(pat.mask), "rank": pat.rank, "kind": pat.kind}


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _finish(ctx: click.Context, report: dict, lines: list[str], as_json: bool, code: int) -> None:
    report["version"] = __version__
    if as_json:
        click.echo(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in lines:
            click.echo(line)
        click.echo(f"version: {__version__}")
    ctx.exit(code)


def _opt_json(fn):
    return click.option("--json", "as_json", is_flag=True, help="emit the report as JSON")(fn)


def _opt_seed(fn):
    return click.option(
        "--seed", type=int, default=0, show_default=True, help="seed for sampled checks"
    )(fn)


def _opt_tol(fn):
    return click.option("--tol", type=float, default=None, help="residual tolerance override")(fn)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="polybraid")
def main() -> None:
    """Verification toolkit for constant braid-equation solutions."""


@main.group()
def catalog_group() -> None:
    """Inspect and build the cataloged solution families."""


# click uses the function name by default; expose the group as `catalog`
main.add_command(catalog_group, name="catalog")


@catalog_group.command("list")
@_opt_json
@click.pass_context
def catalog_list(ctx: click.Context, as_json: bool) -> None:
    """List every registered family with its declared shape."""
    records = catalog.load_manifest()
    report = {
        "command": "catalog list",
        "inputs": {},
        "outcomes": {"count": len(records), "families": records},
    }
    lines = ["command: catalog list"]
    for rec in records:
        dim = rec["dimension"] if rec["dimension"] is not None else "-"
        arity = rec["arity"] if rec["arity"] is not None else "-"
        lines.append(
            f"{rec['id']:18s} arity={arity} dim={dim} "
            f"params={','.join(rec['parameters']) or '-'} "
            f"variants={','.join(rec['variants']) or '-'} equation={rec['equation']}"
        )
    lines.append(f"families: {len(records)}")
    _finish(ctx, report, lines, as_json, 0)


def _resolve_family(family_id: str) -> catalog.Family:
    try:
        return catalog.get_family(family_id)
    except KeyError as exc:
        raise click.UsageError(f"unknown family id {family_id!r}") from exc


def _resolve_params(
    fam: catalog.Family, params_text: str | None, seed: int, variant: str | None = None
) -> tuple[dict[str, complex], str]:
    if params_text:
        try:
            return parse_params(params_text), "given"
        except ValueError as exc:
            raise click.UsageError(str(exc)) from exc
    if not fam.parameters:
        return {}, "none"
    draw = catalog.sample_params(fam.family_id, count=1, seed=seed, variant=variant)
    return draw[0], "sampled"


@catalog_group.command("build")
@click.argument("family_id")
@click.option("--params", "params_text", default=None, help="comma list name=value")
@click.option("--variant", default=None, help="sign variant; defaults to the first declared")
@_opt_seed
@_opt_json
@click.pass_context
def catalog_build(
    ctx: click.Context,
    family_id: str,
    params_text: str | None,
    variant: str | None,
    seed: int,
    as_json: bool,
) -> None:
    """Build one family member and print the matrix."""
    fam = _resolve_family(family_id)
    params, origin = _resolve_params(fam, params_text, seed, variant)
    try:
        m = catalog.build(family_id, params, variant)
    except catalog.UnknownVariantError as exc:
        raise click.UsageError(str(exc)) from exc
    except catalog.ConstraintViolationError as exc:
        raise ConstraintFailure(str(exc)) from exc
    report = {
        "command": "catalog build",
        "inputs": {
            "family": family_id,
            "params": {k: _fmt_complex(v) for k, v in params.items()},
            "params_origin": origin,
            "variant": variant,
            "seed": seed,
        },
        "outcomes": {"dimension": int(np.asarray(m).shape[0]), "matrix": _matrix_payload(m)},
    }
    lines = [
        "command: catalog build",
        f"family: {family_id}",
        f"params ({origin}): {_fmt_params(params) or '-'}",
        f"variant: {variant or (fam.variants[0] if fam.variants else '-')}",
    ]
    lines.extend(_matrix_lines(m))
    _finish(ctx, report, lines, as_json, 0)


@main.command()
@click.argument("family_id")
@click.option("--params", "params_text", default=None, help="comma list name=value; defaults to a seeded sample")
@click.option("--variant", default=None, help="restrict checks to one sign variant")
@_opt_tol
@_opt_seed
@_opt_json
@click.pass_context
def verify(
    ctx: click.Context,
    family_id: str,
    params_text: str | None,
    variant: str | None,
    tol: float | None,
    seed: int,
    as_json: bool,
) -> None:
    """Run the declared braid equation and metadata checks for a family."""
    tol = tol if tol is not None else braid.DEFAULT_BRAID_TOL
    fam = _resolve_family(family_id)
    if variant is not None and fam.variants and variant not in fam.variants:
        raise click.UsageError(f"{family_id}: unknown variant {variant!r}")
    variants: Sequence[str | None] = (variant,) if variant else (fam.variants or (None,))

    origin = "given" if params_text else ("none" if not fam.parameters else "sampled")
    outcomes: dict[str, dict] = {}
    lines = [
        "command: verify",
        f"family: {family_id}",
        f"seed: {seed}",
        f"tolerance: {_fmt_float(tol)}",
    ]
    all_ok = True
    for v in variants:
        tag = v or "-"
        # sampled draws may sit on variant-specific loci, so resolve per variant
        params, _ = _resolve_params(fam, params_text, seed, v)
        lines.append(f"params [{tag}] ({origin}): {_fmt_params(params) or '-'}")
        try:
            m = catalog.build(family_id, params, v)
        except catalog.ConstraintViolationError as exc:
            raise ConstraintFailure(str(exc)) from exc
        entry: dict = {"params": {k: _fmt_complex(val) for k, val in params.items()}}

        if fam.equation == "none":
            entry["braid"] = {"checked": False}
            lines.append(f"check braid [{tag}]: SKIP (no declared equation)")
        else:
            arity = catalog.family_arity(family_id, params)
            if fam.equation == "partial-13":
                r12, r13, r23 = braid.partial_ternary_residuals(m)
                ok = r13 <= tol
                entry["braid"] = {
                    "checked": True,
                    "equation": "partial-13",
                    "passed": ok,
                    "residual": _fmt_float(r13),
                    "partial_residuals": [_fmt_float(r) for r in (r12, r13, r23)],
                }
                lines.append(
                    f"check braid partial-13 [{tag}]: {_status(ok)} "
                    f"(residual {_fmt_float(r13)})"
                )
            else:
                rep = braid.nary_braid_report(m, arity, tol)
                worst = max(rep.residuals) if rep.residuals else 0.0
                entry["braid"] = {
                    "checked": True,
                    "equation": f"{arity}-ary",
                    "passed": rep.passed,
                    "residual": _fmt_float(worst),
                }
                lines.append(
                    f"check braid {arity}-ary [{tag}]: {_status(rep.passed)} "
                    f"(max residual {_fmt_float(worst)})"
                )
                if arity == 3:
                    parts = braid.partial_ternary_reports(m, tol)
                    entry["braid"]["partial_passed"] = list(parts)
            all_ok &= entry["braid"].get("passed", True)

        checks = catalog.verify_meta(family_id, params, v, tol)
        entry["meta"] = {
            "trace": checks.trace_ok,
            "det": checks.det_ok,
            "eigenvalues": checks.eigen_ok,
            "rank": checks.rank_ok,
        }
        for name, ok in entry["meta"].items():
            lines.append(f"check meta {name} [{tag}]: {_status(ok)}")
            all_ok &= ok
        outcomes[tag] = entry

    report = {
        "command": "verify",
        "inputs": {
            "family": family_id,
            "params_origin": origin,
            "variant": variant,
            "seed": seed,
            "tol": tol,
        },
        "outcomes": {"variants": outcomes, "passed": all_ok},
    }
    lines.append(f"result: {_status(all_ok)}")
    _finish(ctx, report, lines, as_json, 0 if all_ok else 1)


@main.command(name="search")
@click.option("--space", type=click.Choice(["perms", "patterns"]), required=True)
@click.option("--dim", type=int, required=True, help="operator dimension (4 or 8)")
@click.option("--arity", type=int, required=True, help="braid arity (2 or 3)")
@click.option(
    "--equation",
    type=click.Choice(list(search.EQUATIONS)),
    default="full",
    show_default=True,
)
@click.option("--support", "support_text", default=None, help="star|circle|star8|circle8|quad8 or 1-based 'r,c;r,c'")
@click.option("--values", "values_text", default=None, help="comma list of candidate entry values")
@click.option("--include-identity", is_flag=True, help="admit the identity permutation")
@click.option("--cap", type=int, default=None, help="candidate cap for pattern grids")
@_opt_tol
@_opt_json
@click.pass_context
def search_cmd(
    ctx: click.Context,
    space: str,
    dim: int,
    arity: int,
    equation: str,
    support_text: str | None,
    values_text: str | None,
    include_identity: bool,
    cap: int | None,
    tol: float | None,
    as_json: bool,
) -> None:
    """Exhaust a finite candidate space against a braid equation."""
    tol = tol if tol is not None else braid.DEFAULT_BRAID_TOL
    space_name = {"perms": "permutations", "patterns": "sign_patterns"}[space]
    try:
        support = parse_support(support_text) if support_text else ()
        values = (
            tuple(parse_complex(v) for v in values_text.split(",")) if values_text else ()
        )
        spec_args = dict(
            space=space_name,
            dim=dim,
            arity=arity,
            equation=equation,
            tol=tol,
            support=support,
            values=values,
        )
        if cap is not None:
            spec_args["cap"] = cap
        spec = search.SearchSpec(**spec_args)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc

    try:
        if space_name == "permutations":
            result = search.permutation_search(spec, include_identity=include_identity)
        else:
            result = search.pattern_search(spec)
    except search.CapExceededError as exc:
        raise CapFailure(str(exc)) from exc

    inline = len(result.matrices) <= 32
    report = {
        "command": "search",
        "inputs": {
            "space": space,
            "dim": dim,
            "arity": arity,
            "equation": equation,
            "support": [list(cell) for cell in support],
            "values": [_fmt_complex(v) for v in values],
            "include_identity": include_identity,
            "tol": tol,
        },
        "outcomes": {
            "candidate_count": result.candidate_count,
            "match_count": result.match_count,
            "note": result.note,
            "matrices": [_matrix_payload(m) for m in result.matrices] if inline else None,
        },
    }
    lines = [
        "command: search",
        f"space: {space} dim={dim} arity={arity} equation={equation}",
        f"candidates: {result.candidate_count}",
        f"solutions: {result.match_count}",
        f"note: {result.note}",
    ]
    if inline:
        for i, m in enumerate(result.matrices, start=1):
            lines.append(f"solution {i}:")
            lines.extend(_matrix_lines(m))
    else:
        lines.append("matrices omitted (more than 32 solutions)")
    _finish(ctx, report, lines, as_json, 0)


@main.command()
@click.argument("gate_id")
@click.option("--gate-params", "gp_text", default=None, help="comma list, e.g. 'alpha=pi/4,beta=0'")
@click.option("--state", "state_text", required=True, help="semicolon list 'theta,gamma' per qubit")
@click.option("--variant", type=click.Choice(["upper", "lower"]), default="upper", show_default=True)
@click.option("--kappa", type=click.Choice(["1", "-1"]), default="1", show_default=True)
@_opt_tol
@_opt_json
@click.pass_context
def entangle(
    ctx: click.Context,
    gate_id: str,
    gp_text: str | None,
    state_text: str,
    variant: str,
    kappa: str,
    tol: float | None,
    as_json: bool,
) -> None:
    """Apply a braiding gate to a Bloch product state and measure concurrence."""
    agree_tol = tol if tol is not None else 1e-10
    if gate_id not in gates.gate_ids():
        raise click.UsageError(f"unknown gate id {gate_id!r}")
    try:
        blochs = parse_state(state_text)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    expected = gates.GATE_ARITY.get(gate_id)
    if expected is not None and len(blochs) != expected:
        raise click.UsageError(
            f"gate {gate_id} acts on {expected} qubits, state has {len(blochs)} factors"
        )
    if expected is None and len(blochs) not in (2, 3):
        raise click.UsageError("concurrence is measured on 2 or 3 qubit factors")

    try:
        raw = parse_params(gp_text)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    unknown = set(raw) - {"alpha", "beta"}
    if unknown:
        raise click.UsageError(f"unexpected gate parameters {sorted(unknown)}")
    params = GateParams(
        alpha=_as_float(raw.get("alpha", 0.0 + 0.0j), "alpha"),
        beta=_as_float(raw.get("beta", 0.0 + 0.0j), "beta"),
        sign=variant,
        kappa=int(kappa),
    )

    numeric = gates.transformed_concurrence(gate_id, params, blochs)
    try:
        closed = gates.closed_form_concurrence(gate_id, params, blochs)
    except KeyError:
        closed = None
    residual = abs(numeric - closed) if closed is not None else None
    relations = gates.nonentangling_locus(gate_id, blochs, sign=variant, kappa=params.kappa)
    satisfied = [r for r in relations if r.satisfied_by(params, tol=1e-9)]
    entangling = numeric > ENTANGLING_THRESHOLD

    outcomes = {
        "concurrence": _fmt_float(numeric),
        "closed_form": _fmt_float(closed) if closed is not None else None,
        "agreement_residual": _fmt_float(residual) if residual is not None else None,
        "entangling": entangling,
        "relations_on_state": [r.description for r in relations],
        "relations_satisfied": [r.description for r in satisfied],
    }
    report = {
        "command": "entangle",
        "inputs": {
            "gate": gate_id,
            "alpha": _fmt_float(params.alpha),
            "beta": _fmt_float(params.beta),
            "variant": variant,
            "kappa": params.kappa,
            "state": [
                {"theta": _fmt_float(b.theta), "gamma": _fmt_float(b.gamma)} for b in blochs
            ],
            "tol": agree_tol,
        },
        "outcomes": outcomes,
    }
    lines = [
        "command: entangle",
        f"gate: {gate_id} (variant={variant}, kappa={params.kappa})",
        f"gate params: alpha={_fmt_float(params.alpha)}, beta={_fmt_float(params.beta)}",
        "state: " + " ; ".join(
            f"theta={_fmt_float(b.theta)}, gamma={_fmt_float(b.gamma)}" for b in blochs
        ),
        f"transformed concurrence: {_fmt_float(numeric)}",
    ]
    ok = True
    if closed is not None:
        ok = residual <= agree_tol
        lines.append(f"closed form value: {_fmt_float(closed)}")
        lines.append(
            f"agreement: {_status(ok)} (residual {_fmt_float(residual)}, tol {_fmt_float(agree_tol)})"
        )
    else:
        lines.append("closed form value: not registered for this gate")
    lines.append(f"entangling: {'yes' if entangling else 'no'} (threshold {ENTANGLING_THRESHOLD})")
    for r in relations:
        mark = "satisfied" if r in satisfied else "available"
        lines.append(f"non-entangling relation [{mark}]: {r.description}")
    if not relations:
        lines.append("non-entangling relations: none printed for this state")
    lines.append(f"result: {_status(ok)}")
    _finish(ctx, report, lines, as_json, 0 if ok else 1)


# ---------------------------------------------------------------------------
# law suites
# ---------------------------------------------------------------------------


def _suite_closure(samples: int, seed: int, tol: float) -> list[tuple[str, bool]]:
    return [
        (law, polyadic.law_check(law, samples=samples, seed=seed, tol=tol))
        for law in polyadic.CLOSURE_LAW_IDS
    ]


def _suite_identities(samples: int, seed: int, tol: float) -> list[tuple[str, bool]]:
    ids = polyadic.QUERELEMENT_LAW_IDS + polyadic.IDENTITY_LAW_IDS
    return [(law, polyadic.law_check(law, samples=samples, seed=seed, tol=tol)) for law in ids]


def _random_state(rng: np.random.Generator, dim: int) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def _suite_partial_unitarity(samples: int, seed: int, tol: float) -> list[tuple[str, bool]]:
    rng = np.random.default_rng([seed, zlib.crc32(b"partial-unitarity")])
    a, b, g = rng.uniform(0.0, 2.0 * math.pi, size=3)
    checks: list[tuple[str, bool]] = []

    m3 = np.asarray(polyadic.build_m3(a, b, g))
    left, right, orth = polyadic.partial_unitarity(m3, tol)
    checks.append(("m3 left identity diag(1,1,0,1)", left is not None and left.mask == (1, 1, 0, 1)))
    checks.append(("m3 right identity diag(0,1,1,1)", right is not None and right.mask == (0, 1, 1, 1)))
    checks.append(("m3 identities not orthogonal", not orth))
    checks.append(("m3 conjugate transpose is the pseudoinverse", penrose_check(m3, np.asarray(conj_transpose(m3)), tol)))
    checks.append(("m3 solves the binary braid equation", braid.nary_braid_report(m3, 2, tol=1e-9).passed))

    m2 = np.asarray(polyadic.build_m2(a, b))
    l2, r2, _ = polyadic.partial_unitarity(m2, tol)
    checks.append(("m2 left identity diag(0,1,0,1)", l2 is not None and l2.mask == (0, 1, 0, 1)))
    checks.append(("m2 right product is not a partial identity", r2 is None))
    checks.append(("m2 solves the binary braid equation", braid.nary_braid_report(m2, 2, tol=1e-9).passed))

    # same matrix shape used as a two-qubit operator: pairing identities
    star = np.asarray(conj_transpose(m3))
    i1 = np.diag(np.array(left.mask, dtype=np.complex128))
    i2 = np.diag(np.array(right.mask, dtype=np.complex128))
    checks.append(("u3 adjoint pairing: U* I2 equals I1 U*", bool(np.max(np.abs(star @ i2 - i1 @ star)) <= tol)))
    worst = 0.0
    for _ in range(max(samples, 1)):
        psi = _random_state(rng, 4)
        phi = _random_state(rng, 4)
        lhs = complex(np.vdot(m3 @ psi, m3 @ phi))
        rhs = polyadic.partial_inner_product(psi, phi, left, left)
        worst = max(worst, abs(lhs - rhs))
    checks.append(("u3 gate pairing equals the left-mask inner product", worst <= 1e-10))

    un = np.asarray(polyadic.build_unil(a, b))
    ln, rn, orthn = polyadic.partial_unitarity(un, tol)
    checks.append(("unil left identity diag(1,0,0,1)", ln is not None and ln.mask == (1, 0, 0, 1)))
    checks.append(("unil right identity diag(0,1,1,0)", rn is not None and rn.mask == (0, 1, 1, 0)))
    checks.append(("unil identities orthogonal", orthn))
    worst_pair = 0.0
    for _ in range(max(samples, 1)):
        psi = _random_state(rng, 4)
        phi = _random_state(rng, 4)
        worst_pair = max(worst_pair, abs(polyadic.partial_inner_product(psi, phi, ln, rn)))
    checks.append(("unil cross-mask inner product vanishes", worst_pair <= 1e-12))
    return checks


def _suite_braid_group(tol: float) -> list[tuple[str, bool]]:
    checks: list[tuple[str, bool]] = []
    c4 = catalog.build("nb.minkowski", {"n": 2})
    rep = braid.braid_group_report(c4, 2, 4, tol)
    checks.append(("binary generators, 4 strands: braid relations", all(r <= tol for _, r in rep.relation_residuals)))
    far = {idxs: r for idxs, r in rep.far_comm_residuals}
    checks.append(("binary generators, 4 strands: far commutativity (1,3)", far.get((1, 3), math.inf) <= tol))

    c8 = catalog.build("nb.minkowski", {"n": 3})
    rep34 = braid.braid_group_report(c8, 3, 4, tol)
    checks.append(("ternary generators, 4 strands: single relation window", rep34.passed))

    rep38 = braid.braid_group_report(c8, 3, 8, tol)
    checks.append(("ternary generators, 8 strands: braid relations", all(r <= tol for _, r in rep38.relation_residuals)))
    checks.append(("ternary generators, 8 strands: far commutativity", all(r <= tol for _, r in rep38.far_comm_residuals)))
    return checks


@main.command()
@click.option("--suite", type=click.Choice(list(LAW_SUITES)), required=True)
@click.option("--samples", type=int, default=20, show_default=True)
@_opt_tol
@_opt_seed
@_opt_json
@click.pass_context
def laws(
    ctx: click.Context,
    suite: str,
    samples: int,
    tol: float | None,
    seed: int,
    as_json: bool,
) -> None:
    """Run a registered suite of algebraic law checks."""
    tol = tol if tol is not None else 1e-9
    if suite == "closure":
        checks = _suite_closure(samples, seed, tol)
    elif suite == "identities":
        checks = _suite_identities(samples, seed, tol)
    elif suite == "partial-unitarity":
        checks = _suite_partial_unitarity(samples, seed, tol)
    else:
        checks = _suite_braid_group(tol)

    all_ok = all(ok for _, ok in checks)
    report = {
        "command": "laws",
        "inputs": {"suite": suite, "samples": samples, "seed": seed, "tol": tol},
        "outcomes": {
            "checks": [{"name": name, "passed": ok} for name, ok in checks],
            "passed": all_ok,
        },
    }
    lines = ["command: laws", f"suite: {suite}", f"seed: {seed}"]
    for name, ok in checks:
        lines.append(f"check {name}: {_status(ok)}")
    lines.append(f"result: {_status(all_ok)}")
    _finish(ctx, report, lines, as_json, 0 if all_ok else 1)


if __name__ == "__main__":
    main()
