"""Command line front end.

Subcommands: ``radius``, ``verify``, ``sweep``, ``constants`` and
``plot-data``. Exit codes are 0 on success, 1 when a verification check
fails and 2 on usage or parameter errors. Floats are written with 17
significant digits so outputs round-trip exactly.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import sys
from typing import Any, Iterable, Sequence

import numpy as np

from . import __version__
from .errors import PolyLandauError
from .polyanalytic import eval_poly
from .radii import (
    F1,
    F2,
    F3,
    RootFindConfig,
    bilipschitz,
    classical_landau,
    harmonic_landau_constants,
    solve_radius,
    theorem_c_radius,
    theorem_d_radius,
    theorem_e_radius,
)
from .verify import BoundarySampler, run_battery, witness_function

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
CLASSES = ("f1", "f2", "f3", "c", "d", "e")
CHECKS = ("all", "colipschitz", "lipschitz", "schlicht", "collision", "coefficients")


class UsageError(Exception):
    pass


# -- serialization ------------------------------------------------------------


def format_number(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x}")
    return format(x + 0.0, ".17g")


def to_json(obj: Any) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    return format_number(obj)


def to_csv(rows: Sequence[dict[str, Any]]) -> str:
    if not rows:
        return ""
    header = list(rows[0])
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for key in header:
            v = row[key]
            cells.append(v if isinstance(v, str) else format_number(v))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


# -- parameter handling -------------------------------------------------------


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for class {args.cls}")


def _first(value):
    return value[0] if isinstance(value, list) else value


def build_params(cls: str, args) -> F1 | F2 | F3:
    if cls == "f1":
        _require(args, "lambda_")
        return F1(_first(args.lambda_), tuple(args.mks or ()))
    if cls == "f2":
        _require(args, "M")
        return F2(_first(args.M), tuple(args.lambdas or ()))
    if cls == "f3":
        _require(args, "lambda0")
        return F3(_first(args.lambda0), tuple(args.lambdas or ()))
    raise UsageError(f"class {cls} has no poly-analytic parameter set")


def _params_dict(p) -> dict[str, Any]:
    if isinstance(p, F1):
        head = {"Lambda": p.Lambda}
        tail_name = "M"
    elif isinstance(p, F2):
        head = {"M": p.M}
        tail_name = "Lambda"
    else:
        head = {"Lambda0": p.Lambda0}
        tail_name = "Lambda"
    head.update({f"{tail_name}_{k}": v for k, v in enumerate(p.tail, 1)})
    return head


def _class_row(p, cfg: RootFindConfig, rho_frac: float = 0.9) -> dict[str, Any]:
    res = solve_radius(p, cfg)
    rho = rho_frac * res.r
    bounds = bilipschitz(p, rho, cfg)
    row = dict(_params_dict(p))
    row.update({"m": p.m, "r": res.r, "R": res.R, "residual": res.residual,
                "iterations": res.iterations, "whole_disc": res.whole_disc,
                "rho": rho, "l": bounds.l, "L": bounds.L})
    if isinstance(p, F3) and p.m == 2:
        ref = theorem_d_radius(p.Lambdas[0], p.Lambda0)
        row.update({"theorem_d_rho": ref.rho, "theorem_d_sigma": ref.sigma})
    return row


def _reference(cls: str, values: dict[str, Any], cfg: RootFindConfig) -> dict[str, Any]:
    if cls == "c":
        ref = theorem_c_radius(values["m"], values["M"], cfg)
    elif cls == "d":
        ref = theorem_d_radius(values["Lambda1"], values["Lambda2"])
    else:
        ref = theorem_e_radius(values["Lambda"])
    row = dict(values)
    row.update({"rho": ref.rho, "sigma": ref.sigma})
    return row


def _reference_values(cls: str, args) -> dict[str, Any]:
    if cls == "c":
        _require(args, "m", "M")
        return {"m": int(_first(args.m)), "M": _first(args.M)}
    if cls == "d":
        _require(args, "lambda1", "lambda2")
        return {"Lambda1": _first(args.lambda1), "Lambda2": _first(args.lambda2)}
    _require(args, "lambda_")
    return {"Lambda": _first(args.lambda_)}


def _cfg(args) -> RootFindConfig:
    return RootFindConfig(tol=args.tol)


# -- subcommands --------------------------------------------------------------


def cmd_radius(args, out) -> int:
    cfg = _cfg(args)
    if args.cls in ("c", "d", "e"):
        payload = {"class": args.cls}
        payload.update(_reference(args.cls, _reference_values(args.cls, args), cfg))
    else:
        p = build_params(args.cls, args)
        res = solve_radius(p, cfg)
        payload = {"class": args.cls}
        payload.update(_params_dict(p))
        payload.update({"m": p.m, "r": res.r, "R": res.R, "residual": res.residual,
                        "iterations": res.iterations, "whole_disc": res.whole_disc})
    if args.format == "csv":
        out.write(to_csv([payload]))
    else:
        out.write(to_json(payload) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.cls not in ("f1", "f2", "f3"):
        raise UsageError("verify supports classes f1, f2 and f3")
    p = build_params(args.cls, args)
    checks = None if args.check == "all" else [args.check]
    reports = run_battery(p, rho_frac=args.rho_frac, seed=args.seed, pairs=args.pairs,
                          boundary_points=args.boundary_points, r_offset=args.r_offset,
                          checks=checks, cfg=_cfg(args))
    for rep in reports:
        out.write(to_json(rep.to_dict()) + "\n")
    return EXIT_OK if all(rep.passed for rep in reports) else EXIT_FAILED


def parse_values(tokens: Iterable[str]) -> list[float]:
    """Numbers or ``start:stop:steps`` ranges, sorted ascending without repeats."""
    values: set[float] = set()
    for token in tokens:
        if ":" in token:
            parts = token.split(":")
            if len(parts) != 3:
                raise UsageError(f"range {token!r} must look like start:stop:steps")
            start, stop, steps = float(parts[0]), float(parts[1]), parts[2]
            if not steps.isdigit() or int(steps) < 1:
                raise UsageError(f"range {token!r} needs an integer steps >= 1")
            if int(steps) == 1:
                values.add(start)
            else:
                values.update(float(v) for v in np.linspace(start, stop, int(steps)))
        else:
            try:
                values.add(float(token))
            except ValueError:
                raise UsageError(f"not a number: {token!r}") from None
    if not values:
        raise UsageError("empty value list")
    if any(not math.isfinite(v) for v in values):
        raise UsageError("values must be finite")
    return sorted(values)


def cmd_sweep(args, out) -> int:
    cfg = _cfg(args)
    cls = args.cls
    tails = [parse_values(t) for t in (args.tail or [])]
    rows = []
    if cls in ("f1", "f2", "f3"):
        flag = {"f1": "lambda_", "f2": "M", "f3": "lambda0"}[cls]
        _require(args, flag)
        heads = parse_values(getattr(args, flag))
        maker = {"f1": F1, "f2": F2, "f3": F3}[cls]
        for combo in itertools.product(heads, *tails):
            rows.append(_class_row(maker(combo[0], tuple(combo[1:])), cfg))
    else:
        if tails:
            raise UsageError(f"--tail does not apply to class {cls}")
        if cls == "c":
            _require(args, "m", "M")
            ms = parse_values(args.m)
            if any(v != int(v) for v in ms):
                raise UsageError("--m values must be integers")
            grid = [{"m": int(a), "M": b} for a, b in itertools.product(ms, parse_values(args.M))]
        elif cls == "d":
            _require(args, "lambda1", "lambda2")
            grid = [{"Lambda1": a, "Lambda2": b}
                    for a, b in itertools.product(parse_values(args.lambda1), parse_values(args.lambda2))]
        else:
            _require(args, "lambda_")
            grid = [{"Lambda": a} for a in parse_values(args.lambda_)]
        rows = [_reference(cls, values, cfg) for values in grid]
    if args.format == "csv":
        out.write(to_csv(rows))
    else:
        out.write(to_json(rows) + "\n")
    return EXIT_OK


def cmd_constants(args, out) -> int:
    M = 1.0 if args.M is None else _first(args.M)
    lam = 1.0 if args.lambda_ is None else _first(args.lambda_)
    landau = classical_landau(M)
    harm = harmonic_landau_constants(M, lam)
    payload = {"M": M, "Lambda": lam, "m_const": harm.m_const,
               "classical_r0": landau.rho, "classical_sigma0": landau.sigma,
               "rho0_A": harm.rho0_A, "R0_A": harm.R0_A,
               "rho0_B": harm.rho0_B, "R0_B": harm.R0_B}
    if args.format == "csv":
        out.write(to_csv([payload]))
    else:
        out.write(to_json(payload) + "\n")
    return EXIT_OK


def cmd_plotdata(args, out) -> int:
    if args.cls not in ("f1", "f2", "f3"):
        raise UsageError("plot-data supports classes f1, f2 and f3")
    p = build_params(args.cls, args)
    res = solve_radius(p, _cfg(args))
    if res.whole_disc:
        raise UsageError("the univalence disc is the whole unit disc; no boundary circle to plot")
    boundary = BoundarySampler(res.r, args.boundary_points)
    values = eval_poly(witness_function(p), boundary.points())
    rows = [{"theta": t, "re": w.real, "im": w.imag, "abs": abs(w), "R": res.R}
            for t, w in zip(boundary.angles, values)]
    out.write(to_csv(rows))
    return EXIT_OK


# -- argument parsing ---------------------------------------------------------


def _add_class_flags(p: argparse.ArgumentParser, multi: bool = False):
    nargs = "+" if multi else None
    kind = str if multi else float
    p.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    p.add_argument("--lambda", dest="lambda_", type=kind, nargs=nargs, help="Lambda (f1, e)")
    p.add_argument("--lambda0", type=kind, nargs=nargs, help="Lambda0 (f3)")
    p.add_argument("--lambda1", type=kind, nargs=nargs, help="Lambda1 (d)")
    p.add_argument("--lambda2", type=kind, nargs=nargs, help="Lambda2 (d)")
    p.add_argument("--M", type=kind, nargs=nargs, help="M (f2, c)")
    p.add_argument("--m", type=str if multi else int, nargs=nargs, help="order m (c)")
    if not multi:
        p.add_argument("--lambdas", type=float, nargs="*", help="tail Lambda_1 .. Lambda_{m-1} (f2, f3)")
        p.add_argument("--mks", type=float, nargs="*", help="tail M_1 .. M_{m-1} (f1)")
    p.add_argument("--tol", type=float, default=1e-12, help="root-finding tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polylandau", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", help="univalence and schlicht radii")
    _add_class_flags(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("verify", help="run the certification battery on the class witness")
    _add_class_flags(p)
    p.add_argument("--rho-frac", type=float, default=0.9)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--pairs", type=int, default=100_000)
    p.add_argument("--boundary-points", type=int, default=720)
    p.add_argument("--r-offset", type=float, default=0.05)
    p.add_argument("--check", choices=CHECKS, default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="tabulate radii over a parameter grid")
    _add_class_flags(p, multi=True)
    p.add_argument("--tail", nargs="+", action="append",
                   help="values of the next tail coefficient; repeat for each k")
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("constants", help="classical and harmonic Landau constants")
    p.add_argument("--M", type=float)
    p.add_argument("--lambda", dest="lambda_", type=float)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("plot-data", help="boundary image of the class witness as CSV")
    _add_class_flags(p)
    p.add_argument("--boundary-points", type=int, default=720)
    p.set_defaults(func=cmd_plotdata)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, PolyLandauError) as exc:
        print(f"polylandau: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
