"""Command line interface: subcommands, task files, JSON output records.

A task file is a sequence of JSON lines.  Declaration lines create named
objects (one ring, then polynomials, maps, derivations, actions); command
lines run computations.  Every referenced name must be declared on an
earlier line; name, schema, and expression problems are load-time errors.
Each command emits exactly one JSON record on stdout; after a recoverable
command error the stream continues.

Exit codes: 0 all commands ok, 1 at least one command failed, 2 usage or
parse error.  GAQL_DEFAULT_BOUND overrides the default nilpotency bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .action import GaAction, UncertifiedDerivationError, act, deg_function, exponentiate, is_invariant
from .derivation import (
    DEFAULT_BOUND,
    DegreeExplosionError,
    Derivation,
    apply,
    certify_locally_nilpotent,
    fixed_locus,
)
from .exprs import PolyParseError, format_polynomial, parse_polynomial
from .geometry import GridSpec, complement_scan, fiber_probe, singular_locus
from .groebner import GREVLEX, LEX, MonomialOrder, subalgebra_membership
from .poly import NEG_INF, PolyMap, Polynomial, Ring, RingMismatchError
from .quotient import (
    DEFAULT_POWER_BOUND,
    DEFAULT_SLICE_DEGREE_BOUND,
    find_local_slice,
    jacobian_derivation,
    slice_coefficient_as_P,
    verify_localization_identity,
)

EXIT_OK = 0
EXIT_COMMAND_ERROR = 1
EXIT_USAGE = 2

BOUND_ENV_VAR = "GAQL_DEFAULT_BOUND"


class TaskLoadError(Exception):
    """A task file problem found before execution starts."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class CommandFailure(Exception):
    """A structured per-command error carried into the output record."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass
class TaskState:
    ring: Ring | None = None
    polys: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    derivations: dict = field(default_factory=dict)
    actions: dict = field(default_factory=dict)
    declared_actions: set = field(default_factory=set)


def _default_bound() -> int:
    return int(os.environ.get(BOUND_ENV_VAR, DEFAULT_BOUND))


def _check_bound_env():
    raw = os.environ.get(BOUND_ENV_VAR)
    if raw is None:
        return
    try:
        value = int(raw)
    except ValueError:
        raise TaskLoadError(f"{BOUND_ENV_VAR} must be an integer, got {raw!r}")
    if value < 1:
        raise TaskLoadError(f"{BOUND_ENV_VAR} must be at least 1, got {value}")


def _parse_fraction(text, what: str, line_no=None) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError):
        raise TaskLoadError(f"malformed rational in {what}: {text!r}", line_no)


def _resolve_poly(state: TaskState, ref, line_no=None) -> Polynomial:
    """A polynomial parameter is a declared name or an inline expression."""
    if not isinstance(ref, str):
        raise TaskLoadError(f"expected a polynomial name or expression, got {ref!r}", line_no)
    if ref in state.polys:
        return state.polys[ref]
    try:
        return parse_polynomial(ref, state.ring)
    except PolyParseError as exc:
        raise TaskLoadError(f"in {ref!r}: {exc}", line_no) from None


# ---------------------------------------------------------------------------
# task loading

_DECL_KINDS = ("ring", "poly", "map", "derivation", "action", "command")

# cmd -> (required parameter names, optional parameter names)
_COMMANDS = {
    "ring": (frozenset(), frozenset()),
    "poly": (frozenset({"poly"}), frozenset()),
    "apply": (frozenset({"derivation", "poly"}), frozenset({"k"})),
    "nilpotency": (frozenset({"derivation"}), frozenset({"bound"})),
    "exp": (frozenset({"derivation"}), frozenset({"bound"})),
    "act": (frozenset({"poly"}), frozenset({"action", "derivation", "bound"})),
    "invariant": (frozenset({"poly"}), frozenset({"action", "derivation", "bound"})),
    "fixed-locus": (frozenset({"derivation"}), frozenset()),
    "jacobian-derivation": (frozenset({"map"}), frozenset()),
    "slice": (frozenset({"derivation"}), frozenset({"degree_bound"})),
    "localization": (
        frozenset({"derivation", "map", "poly"}),
        frozenset({"degree_bound", "power_bound"}),
    ),
    "fiber": (frozenset({"map", "point"}), frozenset({"order"})),
    "singular-locus": (frozenset({"map"}), frozenset({"order"})),
    "scan": (frozenset({"map"}), frozenset({"points", "box", "steps", "order"})),
    "subalgebra": (frozenset({"poly", "map"}), frozenset()),
}


def _need_ring(state: TaskState, line_no):
    if state.ring is None:
        raise TaskLoadError("no ring declared yet", line_no)


def _check_int(params, key, line_no, minimum=1):
    if key in params:
        value = params[key]
        if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
            raise TaskLoadError(f"{key} must be an integer >= {minimum}", line_no)


def _load_declaration(state: TaskState, kind: str, body, line_no: int):
    if kind == "ring":
        if state.ring is not None:
            raise TaskLoadError("ring already declared", line_no)
        if not isinstance(body, list) or not all(isinstance(v, str) for v in body):
            raise TaskLoadError("ring declaration must list variable names", line_no)
        try:
            state.ring = Ring(tuple(body))
        except ValueError as exc:
            raise TaskLoadError(str(exc), line_no)
        return

    _need_ring(state, line_no)
    if not isinstance(body, dict) or not isinstance(body.get("name"), str):
        raise TaskLoadError(f"{kind} declaration needs a name", line_no)
    name = body["name"]

    if kind == "poly":
        if name in state.polys:
            raise TaskLoadError(f"polynomial {name!r} already declared", line_no)
        if "expr" not in body:
            raise TaskLoadError("poly declaration needs an expr", line_no)
        state.polys[name] = _resolve_poly(state, body["expr"], line_no)
    elif kind == "map":
        if name in state.maps:
            raise TaskLoadError(f"map {name!r} already declared", line_no)
        comps = body.get("components")
        if not isinstance(comps, list) or not comps:
            raise TaskLoadError("map declaration needs components", line_no)
        target = body.get("target", [])
        if not isinstance(target, list) or not all(isinstance(v, str) for v in target):
            raise TaskLoadError("map target must list names", line_no)
        try:
            state.maps[name] = PolyMap(
                state.ring,
                tuple(_resolve_poly(state, c, line_no) for c in comps),
                tuple(target),
            )
        except ValueError as exc:
            raise TaskLoadError(str(exc), line_no)
    elif kind == "derivation":
        if name in state.derivations:
            raise TaskLoadError(f"derivation {name!r} already declared", line_no)
        images = body.get("images")
        if not isinstance(images, list):
            raise TaskLoadError("derivation declaration needs images", line_no)
        try:
            state.derivations[name] = Derivation(
                state.ring, tuple(_resolve_poly(state, img, line_no) for img in images)
            )
        except ValueError as exc:
            raise TaskLoadError(str(exc), line_no)
    elif kind == "action":
        if name in state.declared_actions:
            raise TaskLoadError(f"action {name!r} already declared", line_no)
        if body.get("derivation") not in state.derivations:
            raise TaskLoadError("action declaration needs a declared derivation", line_no)
        _check_int(body, "bound", line_no)
        state.declared_actions.add(name)
    else:
        raise TaskLoadError(f"unknown declaration kind {kind!r}", line_no)


def _validate_point(values, what, line_no):
    if not isinstance(values, list) or not values:
        raise TaskLoadError(f"{what} must be a nonempty list", line_no)
    return [str(_parse_fraction(v, what, line_no)) for v in values]


def _load_command(state: TaskState, cmd: dict, line_no: int):
    if not isinstance(cmd, dict) or not isinstance(cmd.get("cmd"), str):
        raise TaskLoadError("command needs a cmd field", line_no)
    name = cmd["cmd"]
    if name not in _COMMANDS:
        raise TaskLoadError(f"unknown command {name!r}", line_no)
    required, optional = _COMMANDS[name]
    keys = set(cmd) - {"cmd"}
    missing = required - keys
    if missing:
        raise TaskLoadError(f"{name} needs {sorted(missing)}", line_no)
    unknown = keys - required - optional
    if unknown:
        raise TaskLoadError(f"{name} does not take {sorted(unknown)}", line_no)
    _need_ring(state, line_no)

    if "derivation" in keys and cmd["derivation"] not in state.derivations:
        raise TaskLoadError(f"unknown derivation {cmd['derivation']!r}", line_no)
    if "map" in keys and cmd["map"] not in state.maps:
        raise TaskLoadError(f"unknown map {cmd['map']!r}", line_no)
    if "action" in keys and cmd["action"] not in state.declared_actions:
        raise TaskLoadError(f"unknown action {cmd['action']!r}", line_no)
    if "poly" in keys:
        _resolve_poly(state, cmd["poly"], line_no)  # syntax check
    if name in ("act", "invariant"):
        if ("action" in keys) == ("derivation" in keys):
            raise TaskLoadError(
                f"{name} needs exactly one of action or derivation", line_no
            )
    _check_int(cmd, "k", line_no, minimum=0)
    for key in ("bound", "degree_bound", "steps"):
        _check_int(cmd, key, line_no)
    _check_int(cmd, "power_bound", line_no, minimum=0)
    if "order" in keys and cmd["order"] not in ("lex", "grevlex"):
        raise TaskLoadError("order must be lex or grevlex", line_no)

    if name == "fiber":
        cmd["point"] = _validate_point(cmd["point"], "point", line_no)
        if len(cmd["point"]) != state.maps[cmd["map"]].arity:
            raise TaskLoadError("point length does not match the map", line_no)
    if name == "scan":
        has_points = "points" in keys
        has_box = "box" in keys
        if has_points == has_box:
            raise TaskLoadError("scan needs exactly one of points or box", line_no)
        arity = state.maps[cmd["map"]].arity
        if has_points:
            pts = cmd["points"]
            if not isinstance(pts, list) or not pts:
                raise TaskLoadError("points must be a nonempty list", line_no)
            cmd["points"] = [_validate_point(p, "points", line_no) for p in pts]
            if any(len(p) != arity for p in cmd["points"]):
                raise TaskLoadError("point length does not match the map", line_no)
        else:
            box = cmd["box"]
            if not isinstance(box, list) or len(box) != arity:
                raise TaskLoadError("box needs one [lo, hi] pair per map component", line_no)
            checked = []
            for axis in box:
                if not isinstance(axis, list) or len(axis) != 2:
                    raise TaskLoadError("box axes are [lo, hi] pairs", line_no)
                lo = _parse_fraction(axis[0], "box", line_no)
                hi = _parse_fraction(axis[1], "box", line_no)
                if lo > hi:
                    raise TaskLoadError(f"malformed box axis: [{lo}, {hi}]", line_no)
                checked.append([str(lo), str(hi)])
            cmd["box"] = checked
            if "steps" not in keys:
                raise TaskLoadError("scan over a box needs steps", line_no)


def load_task(objects) -> tuple[TaskState, list]:
    """Validate declarations and commands; returns state plus ordered steps.

    Steps are ("action", declaration) or ("command", command) pairs; other
    declarations are applied to the state immediately.
    """
    state = TaskState()
    steps = []
    for line_no, obj in objects:
        if not isinstance(obj, dict) or len(obj) != 1:
            raise TaskLoadError(
                "each line must be an object with exactly one of "
                + ", ".join(_DECL_KINDS),
                line_no,
            )
        kind, body = next(iter(obj.items()))
        if kind == "command":
            _load_command(state, body, line_no)
            steps.append(("command", body))
        elif kind == "action":
            _load_declaration(state, kind, body, line_no)
            steps.append(("action", body))
        elif kind in _DECL_KINDS:
            _load_declaration(state, kind, body, line_no)
        else:
            raise TaskLoadError(f"unknown line kind {kind!r}", line_no)
    return state, steps


def parse_task_text(text: str):
    """JSON-decode nonblank lines, keeping 1-based line numbers."""
    objects = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            objects.append((line_no, json.loads(line)))
        except json.JSONDecodeError as exc:
            raise TaskLoadError(f"invalid JSON: {exc.msg}", line_no) from None
    return objects


# ---------------------------------------------------------------------------
# execution

def _frac_str(value: Fraction) -> str:
    return str(value)


def _certificate_payload(cert) -> dict:
    return {
        "status": cert.status,
        "bound": cert.bound,
        "orders": list(cert.orders) if cert.orders is not None else None,
        "chains": [[format_polynomial(p) for p in chain] for chain in cert.chains],
    }


def _action_payload(action: GaAction) -> dict:
    return {
        "parameter": action.parameter,
        "components": [format_polynomial(c) for c in action.components],
        "orders": list(action.certificate.orders),
    }


def _fiber_payload(report) -> dict:
    return {
        "point": [_frac_str(v) for v in report.point],
        "empty": report.empty,
        "dimension": report.dimension,
        "basis": [format_polynomial(p) for p in report.witness.basis],
    }


def _build_action(state: TaskState, params) -> GaAction:
    if "action" in params:
        return state.actions[params["action"]]
    D = state.derivations[params["derivation"]]
    bound = params.get("bound", _default_bound())
    cert = certify_locally_nilpotent(D, bound)
    return exponentiate(D, cert)


def _order_from(params) -> MonomialOrder:
    return LEX if params.get("order") == "lex" else GREVLEX


def _cmd_ring(state, params):
    return {"variables": list(state.ring.variables), "arity": state.ring.arity}


def _cmd_poly(state, params):
    return {"canonical": format_polynomial(_resolve_poly(state, params["poly"]))}


def _cmd_apply(state, params):
    D = state.derivations[params["derivation"]]
    p = _resolve_poly(state, params["poly"])
    result = apply(D, p, params.get("k", 1))
    return {"result": format_polynomial(result)}


def _cmd_nilpotency(state, params):
    D = state.derivations[params["derivation"]]
    cert = certify_locally_nilpotent(D, params.get("bound", _default_bound()))
    return _certificate_payload(cert)


def _cmd_exp(state, params):
    return _action_payload(_build_action(state, params))


def _cmd_act(state, params):
    action = _build_action(state, params)
    moved = act(action, _resolve_poly(state, params["poly"]))
    return {"result": format_polynomial(moved), "parameter": action.parameter}


def _cmd_invariant(state, params):
    action = _build_action(state, params)
    p = _resolve_poly(state, params["poly"])
    deg = deg_function(action, p)
    return {
        "invariant": is_invariant(action, p),
        "t_degree": None if deg == NEG_INF else int(deg),
    }


def _cmd_fixed_locus(state, params):
    loc = fixed_locus(state.derivations[params["derivation"]])
    return {
        "generators": [format_polynomial(g) for g in loc.generators],
        "dimension": loc.dimension,
        "fixed_point_free": loc.is_fixed_point_free,
    }


def _cmd_jacobian_derivation(state, params):
    D = jacobian_derivation(state.maps[params["map"]])
    return {"images": [format_polynomial(img) for img in D.images]}


def _cmd_slice(state, params):
    D = state.derivations[params["derivation"]]
    slc = find_local_slice(D, params.get("degree_bound", DEFAULT_SLICE_DEGREE_BOUND))
    if slc is None:
        return {"found": False}
    return {
        "found": True,
        "f": format_polynomial(slc.f),
        "c": format_polynomial(slc.c),
    }


def _cmd_localization(state, params):
    D = state.derivations[params["derivation"]]
    F = state.maps[params["map"]]
    R = _resolve_poly(state, params["poly"])
    slc = find_local_slice(D, params.get("degree_bound", DEFAULT_SLICE_DEGREE_BOUND))
    if slc is None:
        return {"found": False}
    payload = {
        "found": True,
        "f": format_polynomial(slc.f),
        "c": format_polynomial(slc.c),
        "P": None,
        "k": None,
        "T": None,
    }
    P = slice_coefficient_as_P(D, slc, F)
    if P is None:
        return payload
    payload["P"] = format_polynomial(P)
    out = verify_localization_identity(
        D, replace(slc, P=P), F, R, params.get("power_bound", DEFAULT_POWER_BOUND)
    )
    if out is not None:
        k, witness = out
        payload["k"] = k
        payload["T"] = format_polynomial(witness)
        payload["tags"] = list(witness.ring.variables)
    return payload


def _cmd_fiber(state, params):
    report = fiber_probe(
        state.maps[params["map"]],
        [Fraction(v) for v in params["point"]],
        order=_order_from(params),
    )
    return _fiber_payload(report)


def _cmd_singular_locus(state, params):
    report = singular_locus(state.maps[params["map"]], order=_order_from(params))
    return {
        "minors": [format_polynomial(m) for m in report.minors],
        "basis": [format_polynomial(p) for p in report.basis.basis],
        "dimension": report.dimension,
        "codimension": report.codimension,
        "nonsingular_in_codim_1": report.nonsingular_in_codim_1,
    }


def _cmd_scan(state, params):
    F = state.maps[params["map"]]
    if "points" in params:
        probe = [[Fraction(v) for v in point] for point in params["points"]]
        probed = len(probe)
    else:
        probe = GridSpec(
            box=tuple((Fraction(lo), Fraction(hi)) for lo, hi in params["box"]),
            steps=params["steps"],
        )
        probed = probe.steps ** len(probe.box)
    reports = complement_scan(F, probe, order=_order_from(params))
    return {
        "probed": probed,
        "empty": [
            {
                "point": [_frac_str(v) for v in r.point],
                "basis": [format_polynomial(p) for p in r.witness.basis],
            }
            for r in reports
        ],
    }


def _cmd_subalgebra(state, params):
    F = state.maps[params["map"]]
    g = _resolve_poly(state, params["poly"])
    witness = subalgebra_membership(g, F.components, F.target_names)
    return {
        "member": witness is not None,
        "witness": None if witness is None else format_polynomial(witness),
        "tags": list(F.target_names),
    }


_HANDLERS = {
    "ring": _cmd_ring,
    "poly": _cmd_poly,
    "apply": _cmd_apply,
    "nilpotency": _cmd_nilpotency,
    "exp": _cmd_exp,
    "act": _cmd_act,
    "invariant": _cmd_invariant,
    "fixed-locus": _cmd_fixed_locus,
    "jacobian-derivation": _cmd_jacobian_derivation,
    "slice": _cmd_slice,
    "localization": _cmd_localization,
    "fiber": _cmd_fiber,
    "singular-locus": _cmd_singular_locus,
    "scan": _cmd_scan,
    "subalgebra": _cmd_subalgebra,
}


def _failure_from(exc: Exception) -> CommandFailure:
    if isinstance(exc, CommandFailure):
        return exc
    if isinstance(exc, UncertifiedDerivationError):
        return CommandFailure("not-certified", str(exc))
    if isinstance(exc, DegreeExplosionError):
        return CommandFailure("degree-explosion", str(exc))
    if isinstance(exc, RingMismatchError):
        return CommandFailure("ring-mismatch", str(exc))
    if isinstance(exc, PolyParseError):
        return CommandFailure("parse-error", str(exc))
    if isinstance(exc, (ValueError, IndexError, KeyError)):
        return CommandFailure("invalid-argument", str(exc))
    return CommandFailure("internal-error", f"{type(exc).__name__}: {exc}")


def _emit(record: dict, started: float, out):
    record["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
    print(json.dumps(record, sort_keys=True, separators=(",", ":")), file=out)


def run_steps(state: TaskState, steps, out) -> int:
    """Execute in order; one record per command; abort on declaration failure."""
    failed = False
    for kind, body in steps:
        started = time.perf_counter()
        if kind == "action":
            try:
                D = state.derivations[body["derivation"]]
                cert = certify_locally_nilpotent(D, body.get("bound", _default_bound()))
                state.actions[body["name"]] = exponentiate(D, cert)
            except Exception as exc:  # declaration failure poisons later steps
                failure = _failure_from(exc)
                _emit(
                    {
                        "command": {"action": body},
                        "status": "error",
                        "error": {"code": failure.code, "message": str(failure)},
                    },
                    started,
                    out,
                )
                return EXIT_COMMAND_ERROR
            continue
        try:
            payload = _HANDLERS[body["cmd"]](state, body)
            _emit(
                {"command": body, "status": "ok", "payload": payload}, started, out
            )
        except Exception as exc:
            failure = _failure_from(exc)
            _emit(
                {
                    "command": body,
                    "status": "error",
                    "error": {"code": failure.code, "message": str(failure)},
                },
                started,
                out,
            )
            failed = True
    return EXIT_COMMAND_ERROR if failed else EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing

def _split_csv(text: str) -> list[str]:
    return [part.strip() for part in text.split(",")]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaql",
        description="Exact probes for derivations, flows, and polynomial maps.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    run = sub.add_parser("run", help="execute a JSON-lines task file")
    run.add_argument("task", help="path to the task file, or - for stdin")

    def common(p, order=False):
        p.add_argument("--ring", required=True, help="comma-separated variable names")
        if order:
            p.add_argument("--order", choices=("lex", "grevlex"), default="grevlex")

    p = sub.add_parser("ring", help="validate and echo a ring")
    common(p)

    p = sub.add_parser("poly", help="parse and canonically print a polynomial")
    common(p)
    p.add_argument("--expr", required=True)

    p = sub.add_parser("apply", help="apply a derivation k times")
    common(p)
    p.add_argument("--derivation", required=True, help="comma-separated images")
    p.add_argument("--poly", required=True)
    p.add_argument("--k", type=int, default=1)

    p = sub.add_parser("nilpotency", help="certify bounded local nilpotency")
    common(p)
    p.add_argument("--derivation", required=True)
    p.add_argument("--bound", type=int)

    p = sub.add_parser("exp", help="exponentiate a certified derivation")
    common(p)
    p.add_argument("--derivation", required=True)
    p.add_argument("--bound", type=int)

    p = sub.add_parser("act", help="pull a polynomial back along the flow")
    common(p)
    p.add_argument("--derivation", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--bound", type=int)

    p = sub.add_parser("invariant", help="test invariance under the flow")
    common(p)
    p.add_argument("--derivation", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--bound", type=int)

    p = sub.add_parser("fixed-locus", help="vanishing locus of a derivation")
    common(p)
    p.add_argument("--derivation", required=True)

    p = sub.add_parser("jacobian-derivation", help="derivation attached to a map")
    common(p)
    p.add_argument("--map", required=True, help="comma-separated components")
    p.add_argument("--target", help="comma-separated target names")

    p = sub.add_parser("slice", help="search for a local slice")
    common(p)
    p.add_argument("--derivation", required=True)
    p.add_argument("--degree-bound", type=int)

    p = sub.add_parser("localization", help="slice, coefficient, and identity")
    common(p)
    p.add_argument("--derivation", required=True)
    p.add_argument("--map", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--target", help="comma-separated target names")
    p.add_argument("--degree-bound", type=int)
    p.add_argument("--power-bound", type=int)

    p = sub.add_parser("fiber", help="probe one fiber of a map")
    common(p, order=True)
    p.add_argument("--map", required=True)
    p.add_argument("--target", help="comma-separated target names")
    p.add_argument("--point", required=True, help="comma-separated rationals")

    p = sub.add_parser("singular-locus", help="rank-drop locus of a map")
    common(p, order=True)
    p.add_argument("--map", required=True)
    p.add_argument("--target", help="comma-separated target names")

    p = sub.add_parser("scan", help="probe many fibers, reporting the empty ones")
    common(p, order=True)
    p.add_argument("--map", required=True)
    p.add_argument("--target", help="comma-separated target names")
    p.add_argument("--points", help="semicolon-separated points")
    p.add_argument("--box", help="comma-separated lo:hi ranges")
    p.add_argument("--steps", type=int)

    p = sub.add_parser("subalgebra", help="membership in the algebra a map generates")
    common(p)
    p.add_argument("--map", required=True)
    p.add_argument("--target", help="comma-separated target names")
    p.add_argument("--poly", required=True)

    return parser


def _synthesize_task(args) -> list:
    """Translate one subcommand invocation into task-file objects."""
    objects = [(None, {"ring": _split_csv(args.ring)})]
    cmd = {"cmd": args.subcommand}

    def add_map():
        decl = {"name": "F", "components": _split_csv(args.map)}
        if getattr(args, "target", None):
            decl["target"] = _split_csv(args.target)
        objects.append((None, {"map": decl}))
        cmd["map"] = "F"

    if getattr(args, "derivation", None):
        objects.append(
            (None, {"derivation": {"name": "D", "images": _split_csv(args.derivation)}})
        )
        cmd["derivation"] = "D"
    if getattr(args, "map", None):
        add_map()
    if getattr(args, "expr", None):
        cmd["poly"] = args.expr
    if getattr(args, "poly", None):
        cmd["poly"] = args.poly
    if getattr(args, "point", None):
        cmd["point"] = _split_csv(args.point)
    if getattr(args, "points", None):
        cmd["points"] = [_split_csv(p) for p in args.points.split(";")]
    if getattr(args, "box", None):
        axes = []
        for axis in _split_csv(args.box):
            parts = axis.split(":")
            if len(parts) != 2:
                raise TaskLoadError(f"box axes are lo:hi ranges, got {axis!r}")
            axes.append(parts)
        cmd["box"] = axes
    for key in ("k", "steps", "bound"):
        if getattr(args, key, None) is not None:
            cmd[key] = getattr(args, key)
    for key, param in (("degree_bound", "degree_bound"), ("power_bound", "power_bound")):
        if getattr(args, key, None) is not None:
            cmd[param] = getattr(args, key)
    if getattr(args, "order", "grevlex") != "grevlex":
        cmd["order"] = args.order
    objects.append((None, {"command": cmd}))
    return objects


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _check_bound_env()
        if args.subcommand == "run":
            if args.task == "-":
                text = sys.stdin.read()
            else:
                try:
                    with open(args.task, "r", encoding="utf-8") as handle:
                        text = handle.read()
                except OSError as exc:
                    raise TaskLoadError(f"cannot read task file: {exc}")
            objects = parse_task_text(text)
        else:
            objects = _synthesize_task(args)
        state, steps = load_task(objects)
    except TaskLoadError as exc:
        print(f"gaql: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run_steps(state, steps, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
