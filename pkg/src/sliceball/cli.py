"""Command line interface.

Subcommands: verify, sample-field, transform, distance, series.
Quaternions are written as 4-arrays [w, x, y, z] everywhere: flags,
JSON fields, CSV columns.  verify emits a JSON report grouped by suite
with one {name, claim, samples, max_error, tolerance, pass} row per
check.  Exit status is 0 when every requested check passes, 1 when a
check fails, 2 on usage or validation errors.  The environment
variable SLICEBALL_SEED overrides the default seed; an explicit
--seed wins over both.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .config import RunConfig
from .errors import (ConversionError, DomainError, PreconditionError,
                     SingularValueError)
from .geometry import hyperbolic_metric, tensor_value
from .hardy import delta, delta_detail
from .mobius import (RegularMobius, SpOneOneMatrix, classical_apply,
                     matrix_regular_apply, regular_apply)
from .quat import Quaternion, as_imaginary_unit
from .series import RegularPowerSeries
from .verify import run_checks

_ENV_SEED = "SLICEBALL_SEED"


class UsageError(ValueError):
    pass


def _parse_quat(text, label):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError("%s is not valid JSON: %s" % (label, e))
    if not isinstance(data, list) or len(data) != 4 \
            or not all(isinstance(v, (int, float)) for v in data):
        raise UsageError("%s must be a 4-array [w, x, y, z]" % label)
    return Quaternion.from_components(data)


def _parse_series(text, label):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError("%s is not valid JSON: %s" % (label, e))
    coeffs = data.get("coeffs") if isinstance(data, dict) else None
    if not isinstance(coeffs, list) or not coeffs:
        raise UsageError('%s must look like {"coeffs": [[w,x,y,z], ...]}'
                         % label)
    out = []
    for c in coeffs:
        if not isinstance(c, list) or len(c) != 4:
            raise UsageError("%s coefficients must be 4-arrays" % label)
        out.append(Quaternion.from_components(c))
    return RegularPowerSeries(out)


def _quat_list(q):
    return [float(q.w), float(q.x), float(q.y), float(q.z)]


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config_from(args):
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get(_ENV_SEED, RunConfig.seed))
    return RunConfig(seed=seed, samples=args.samples,
                     truncation=args.truncation, atol=args.atol,
                     rtol=args.rtol, delta_tol=args.tol)


# ---------------------------------------------------------------- verify

def cmd_verify(args):
    config = _config_from(args)
    results = run_checks(config, args.pattern)
    if not results:
        raise UsageError("no suite matches %r" % args.pattern)
    suites = []
    for r in results:
        row = {"name": r.name, "claim": r.claim, "samples": r.samples,
               "max_error": float(r.max_error),
               "tolerance": float(r.tolerance), "pass": r.passed}
        if r.details:
            row["details"] = r.details
        if not suites or suites[-1]["suite"] != r.suite:
            suites.append({"suite": r.suite, "checks": []})
        suites[-1]["checks"].append(row)
    failed = sum(1 for r in results if not r.passed)
    report = {"seed": config.seed, "samples": config.samples,
              "suites": suites, "checks": len(results),
              "passed": len(results) - failed, "failed": failed,
              "pass": failed == 0}
    _emit(json.dumps(report, indent=1) + "\n", args.out)
    return 0 if failed == 0 else 1


# ----------------------------------------------------------- sample-field

_FIELD_TENSORS = ("G", "H", "Omega", "Ghat", "delta0")


def _grid_coords(n):
    # n interior lattice points per axis on (-1, 1)
    return [(-1.0 + 2.0 * (k + 1) / (n + 1)) for k in range(n)]


def _f(v):
    # adding 0.0 folds negative zero into plain zero
    return float(v) + 0.0


def cmd_sample_field(args):
    config = _config_from(args)
    unit = as_imaginary_unit(_parse_quat(args.slice, "--slice"))
    offset = _parse_quat(args.offset, "--offset") if args.offset else None
    alpha = _parse_quat(args.alpha, "--alpha")
    beta = _parse_quat(args.beta, "--beta")
    if args.grid < 1:
        raise UsageError("--grid must be at least 1")

    rows = []
    coords = _grid_coords(args.grid)
    limit = 1.0 - config.boundary_margin
    for x in coords:
        for y in coords:
            q = Quaternion(x, y * unit.x, y * unit.y, y * unit.z)
            if offset is not None:
                q = q + offset
            if abs(q) >= limit:
                continue
            row = {"q_w": _f(q.w), "q_x": _f(q.x), "q_y": _f(q.y),
                   "q_z": _f(q.z)}
            if args.tensor == "delta0":
                row["delta0"] = _f(delta(Quaternion(), q, config.delta_tol))
            else:
                for name, v in (("alpha", alpha), ("beta", beta)):
                    row.update({"%s_%s" % (name, c): _f(getattr(v, c))
                                for c in "wxyz"})
                if args.tensor == "Ghat":
                    row["Ghat"] = _f(hyperbolic_metric(q, alpha, beta))
                else:
                    tv = tensor_value(q, alpha, beta)
                    row.update({"H_w": _f(tv.h.w), "H_x": _f(tv.h.x),
                                "H_y": _f(tv.h.y), "H_z": _f(tv.h.z),
                                "G": _f(tv.g), "Omega_x": _f(tv.omega.x),
                                "Omega_y": _f(tv.omega.y),
                                "Omega_z": _f(tv.omega.z)})
            rows.append(row)

    if args.format == "json":
        _emit(json.dumps(rows, indent=2) + "\n", args.out)
    else:
        header = list(rows[0].keys()) if rows else ["q_w", "q_x", "q_y",
                                                    "q_z"]
        lines = [",".join(header)]
        lines += [",".join(repr(row[k]) for k in header) for row in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


# -------------------------------------------------------------- transform

def cmd_transform(args):
    q = _parse_quat(args.q, "--q")
    if abs(q) >= 1.0:
        raise UsageError("--q must lie in the open unit ball")
    if args.matrix:
        data = _parse_json_object(args.matrix, "--matrix")
        try:
            A = SpOneOneMatrix(
                a=_parse_quat(json.dumps(data["a"]), "matrix entry a"),
                b=_parse_quat(json.dumps(data["b"]), "matrix entry b"),
                c=_parse_quat(json.dumps(data["c"]), "matrix entry c"),
                d=_parse_quat(json.dumps(data["d"]), "matrix entry d"))
        except KeyError as e:
            raise UsageError("matrix JSON needs entries a, b, c, d "
                             "(missing %s)" % e)
        violated = A.violated_relation(1e-8)
        if violated:
            raise UsageError("matrix violates %s" % violated)
        if args.mode == "classical":
            result = classical_apply(A, q)
        else:
            result = matrix_regular_apply(A, q)
        payload = {"input": "matrix", "mode": args.mode,
                   "q": _quat_list(q), "result": _quat_list(result)}
    else:
        data = _parse_json_object(args.canonical, "--canonical")
        try:
            m = RegularMobius(
                a=_parse_quat(json.dumps(data["a"]), "canonical entry a"),
                u=_parse_quat(json.dumps(data["u"]), "canonical entry u"))
        except KeyError as e:
            raise UsageError("canonical JSON needs entries a and u "
                             "(missing %s)" % e)
        if abs(m.a) >= 1.0:
            raise UsageError("canonical zero a must lie in the unit ball")
        if abs(abs(m.u) - 1.0) > 1e-6:
            raise UsageError("canonical unit u must have |u| = 1")
        if args.mode == "classical":
            raise UsageError("canonical pairs define regular maps only")
        result = regular_apply(m, q)
        payload = {"input": "canonical", "mode": "regular",
                   "q": _quat_list(q), "result": _quat_list(result)}
    _emit(json.dumps(payload) + "\n", args.out)
    return 0


def _parse_json_object(text, label):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError("%s is not valid JSON: %s" % (label, e))
    if not isinstance(data, dict):
        raise UsageError("%s must be a JSON object" % label)
    return data


# --------------------------------------------------------------- distance

def cmd_distance(args):
    p = _parse_quat(args.p, "--p")
    q = _parse_quat(args.q, "--q")
    if abs(p) >= 1.0 or abs(q) >= 1.0:
        raise UsageError("both points must lie in the open unit ball")
    d, trunc = delta_detail(p, q, args.tol)
    payload = {"delta": d, "N_used": trunc.order,
               "tail_bound": trunc.tail_bound}
    _emit(json.dumps(payload) + "\n", args.out)
    return 0


# ----------------------------------------------------------------- series

def cmd_series(args):
    f = _parse_series(args.f, "--f")
    if args.op == "star":
        if not args.g:
            raise UsageError("op star needs --g")
        g = _parse_series(args.g, "--g")
        payload = {"coeffs": [_quat_list(c) for c in f.star(g).coeffs]}
    elif args.op == "conjugate":
        payload = {"coeffs": [_quat_list(c) for c in f.conjugate().coeffs]}
    elif args.op == "symmetrize":
        payload = {"coeffs": [_quat_list(c) for c in f.symmetrize().coeffs]}
    elif args.op == "reciprocal":
        rec = f.reciprocal_series(args.truncation)
        payload = {"coeffs": [_quat_list(c) for c in rec.coeffs]}
    else:  # eval
        if not args.q:
            raise UsageError("op eval needs --q")
        q = _parse_quat(args.q, "--q")
        payload = {"value": _quat_list(f.eval(q))}
    _emit(json.dumps(payload) + "\n", args.out)
    return 0


# ----------------------------------------------------------------- parser

def _add_common(parser):
    parser.add_argument("--seed", type=int, default=None,
                        help="sample stream seed (default: env %s or %d)"
                        % (_ENV_SEED, RunConfig.seed))
    parser.add_argument("--samples", type=int, default=RunConfig.samples)
    parser.add_argument("--tol", type=float, default=RunConfig.delta_tol,
                        help="distance tolerance")
    parser.add_argument("--atol", type=float, default=RunConfig.atol)
    parser.add_argument("--rtol", type=float, default=RunConfig.rtol)
    parser.add_argument("--truncation", type=int,
                        default=RunConfig.truncation)
    parser.add_argument("--out", default=None, help="write output to a file")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sliceball",
        description="slice-regular analysis and invariant geometry on "
                    "the quaternionic unit ball")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run named invariant suites")
    p.add_argument("pattern", nargs="?", default=None,
                   help="only run checks whose suite/name contains this")
    _add_common(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("sample-field", help="tabulate a tensor on a slice")
    p.add_argument("--tensor", choices=_FIELD_TENSORS, default="G")
    p.add_argument("--slice", default="[0, 1, 0, 0]",
                   help="unit imaginary slice axis")
    p.add_argument("--offset", default=None,
                   help="constant offset added to every grid point")
    p.add_argument("--alpha", default="[1, 0, 0, 0]")
    p.add_argument("--beta", default="[1, 0, 0, 0]")
    p.add_argument("--grid", type=int, default=16,
                   help="interior lattice points per axis")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_common(p)
    p.set_defaults(handler=cmd_sample_field)

    p = sub.add_parser("transform", help="apply a ball transformation")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--matrix", help='JSON {"a":..,"b":..,"c":..,"d":..}')
    group.add_argument("--canonical", help='JSON {"a":.., "u":..}')
    p.add_argument("--q", required=True, help="point to transform")
    p.add_argument("--mode", choices=("regular", "classical"),
                   default="regular")
    _add_common(p)
    p.set_defaults(handler=cmd_transform)

    p = sub.add_parser("distance", help="pseudo-hyperbolic distance")
    p.add_argument("--p", required=True)
    p.add_argument("--q", required=True)
    _add_common(p)
    p.set_defaults(handler=cmd_distance)

    p = sub.add_parser("series", help="operate on power series")
    p.add_argument("op", choices=("star", "conjugate", "symmetrize",
                                  "reciprocal", "eval"))
    p.add_argument("--f", required=True, help='JSON {"coeffs": [...]}')
    p.add_argument("--g", default=None)
    p.add_argument("--q", default=None)
    _add_common(p)
    p.set_defaults(handler=cmd_series)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if not e.code else int(e.code)
    try:
        return args.handler(args)
    except UsageError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except (DomainError, PreconditionError, SingularValueError,
            ConversionError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
