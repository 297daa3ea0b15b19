"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 domain error, 4 clause failure,
5 hypothesis violated.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from pathlib import Path

from . import __version__
from .errors import (ArityMismatch, DomainError, ExprSyntaxError, HypothesisViolated,
                     SymDiscError)
from .geometry import Direction, Point, classify
from .holo.maps import Arity, format_map_file, load_map_file
from .metric import fc_origin, fc_royal, fc_s_axis, fc_sup, fc_sup_alt, metric
from .schwarz import checks
from .schwarz.fixtures import check_fixture, fixtures
from .schwarz.report import TOL_FIRST, CheckReport, TheoremId, _jsonable
from .schwarz.suite import DEFAULT_COUNTS, SuiteResult, run_suite

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_CLAUSE, EXIT_HYPOTHESIS = 0, 2, 3, 4, 5
TOL_ENV = "SYMDISC_TOL"
SAME_POINT = 1e-12

_LITERAL = re.compile(r"^[0-9eE.+\-ij]+$")


class UsageError(Exception):
    """Malformed command-line input; maps to the parse exit code."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_complex(text: str) -> complex:
    """``a+bi``, ``bi``, ``a`` or ``a,b``; ``j`` is accepted for ``i``."""
    t = text.strip().replace(" ", "")
    if "," in t:
        parts = t.split(",")
        if len(parts) != 2:
            raise UsageError(f"bad complex literal {text!r}")
        try:
            value = complex(float(parts[0]), float(parts[1]))
        except ValueError:
            raise UsageError(f"bad complex literal {text!r}") from None
    else:
        if not _LITERAL.match(t):
            raise UsageError(f"bad complex literal {text!r}")
        t = re.sub(r"(^|[+-])[ij]", r"\g<1>1j", t).replace("i", "j")
        try:
            value = complex(t)
        except ValueError:
            raise UsageError(f"bad complex literal {text!r}") from None
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise UsageError(f"non-finite complex literal {text!r}")
    return value


def parse_pair(text: str) -> tuple[complex, complex]:
    """Two complex numbers separated by a comma, e.g. ``1,0`` or ``1+2i,-i``."""
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected two comma-separated components, got {text!r}")
    return parse_complex(parts[0]), parse_complex(parts[1])


def default_tolerance() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return TOL_FIRST
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"{TOL_ENV}={raw!r} is not a number") from None
    if not (tol > 0 and math.isfinite(tol)):
        raise UsageError(f"{TOL_ENV} must be a positive number")
    return tol


# -- output ------------------------------------------------------------------

def _envelope(command: str, config: dict, results: list, failures: list) -> dict:
    return {"version": __version__, "command": command, "config": _jsonable(config),
            "results": _jsonable(results), "failures": _jsonable(failures)}


def _emit(doc: dict, fmt: str, out, rows=None) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, sort_keys=True, indent=2, allow_nan=False) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        if rows is None:
            rows = [{"result": json.dumps(r, sort_keys=True)} for r in doc["results"]]
        if not rows:
            rows = [{"failure": json.dumps(f, sort_keys=True)} for f in doc["failures"]]
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        out.write(buf.getvalue())
    else:
        for r in doc["results"]:
            out.write(_text(r) + "\n")
        for f in doc["failures"]:
            out.write(f"FAIL {_text(f)}\n")


def _text(obj) -> str:
    if isinstance(obj, dict):
        return " ".join(f"{k}={_text(v)}" for k, v in sorted(obj.items()) if k != "report")
    if isinstance(obj, list):
        return "[" + ",".join(_text(v) for v in obj) + "]"
    return str(obj)


# -- subcommands ---------------------------------------------------------------

def cmd_classify(args, tol):
    z = Point(parse_complex(args.s), parse_complex(args.p))
    v = classify(z)
    res = {"s": z.s, "p": z.p, "status": v.status.value, "h": v.h_value,
           "conditions": v.per_condition}
    return _envelope("classify", {"s": z.s, "p": z.p}, [res], []), EXIT_OK, None


def _metric_methods(z: Point, xi: Direction, which: str) -> dict:
    methods = {"sup1": lambda: fc_sup(z, xi).value, "sup2": lambda: fc_sup_alt(z, xi).value}
    alpha = z.s / 2
    if abs(z.p - alpha * alpha) <= SAME_POINT and abs(alpha) < 1:
        methods["royal"] = lambda: fc_royal(alpha, xi)
    if abs(z.p) <= SAME_POINT and abs(xi.xi2 - z.s * xi.xi1) <= SAME_POINT:
        methods["saxis"] = lambda: fc_s_axis(z.s, xi.xi1)
    if abs(z.s) <= SAME_POINT and abs(z.p) <= SAME_POINT:
        methods["origin"] = lambda: fc_origin(xi)
    if which == "all":
        return {k: f() for k, f in sorted(methods.items())}
    if which == "auto":
        return {"auto": metric(z, xi).value}
    if which not in methods:
        raise DomainError(f"method {which!r} does not apply at ({z.s}, {z.p}) in this direction")
    return {which: methods[which]()}


def cmd_metric(args, tol):
    z = Point(parse_complex(args.s), parse_complex(args.p))
    xi = Direction(*parse_pair(args.xi))
    values = _metric_methods(z, xi, args.method)
    res = {"method": args.method, "values": values}
    if args.method == "all":
        vs = list(values.values())
        res["max_disagreement"] = max(abs(a - b) for a in vs for b in vs)
    if args.method in ("sup1", "auto"):
        r = fc_sup(z, xi) if args.method == "sup1" else metric(z, xi)
        res["argmax"] = r.argmax_omega
        res["ill_conditioned"] = r.ill_conditioned
    cfg = {"s": z.s, "p": z.p, "xi": [xi.xi1, xi.xi2], "method": args.method}
    rows = [{"method": k, "value": repr(v)} for k, v in values.items()]
    return _envelope("metric", cfg, [res], []), EXIT_OK, rows


def _theta(args) -> float:
    if args.theta_deg is not None:
        return math.radians(args.theta_deg)
    return args.theta


def _select_map(path: str, name: str | None):
    maps = load_map_file(path)
    if name is None:
        return maps[0]
    for m in maps:
        if m.name == name:
            return m
    raise UsageError(f"no map named {name!r} in {path}")


def _run_check(args, tol) -> CheckReport:
    tid = TheoremId(args.theorem)
    theta = _theta(args)
    alpha = parse_complex(args.alpha)
    lam = parse_complex(args.lam)
    if tid is TheoremId.P_AXIS_REMARK:
        res = checks.check_theorem_3_2_remark(args.r, theta, tol)
        rep = CheckReport(tid, {"dH1_dp": res.dH1_dp, "expected": res.expected},
                          subject=f"remark(r={args.r!r})")
        rep.clauses.append(checks.equal("formula", res.dH1_dp, res.expected, tol,
                                        "dH1/dp = 2ri e^{-i theta/2}/(1 - r^2)"))
        return rep
    if args.mapfile is None:
        raise UsageError("a map file is required")
    m = _select_map(args.mapfile, args.name)
    if tid is TheoremId.S_AXIS:
        return checks.check_theorem_3_1(m, theta, tol)
    if tid is TheoremId.P_AXIS:
        return checks.check_theorem_3_2(m, theta, tol)
    if tid is TheoremId.ROYAL:
        return checks.check_theorem_3_3(m, alpha, tol)
    if tid is TheoremId.INTERIOR:
        return checks.interior_schwarz_check(m, parse_pair(args.fixed), tol)
    if tid is TheoremId.DISC_SCHWARZ:
        z = parse_complex(args.z)
        holds = checks.disc_schwarz_check(m, z)
        rep = CheckReport(tid, {"z": z, "f_z": m(z)}, subject=m.name)
        rep.clauses.append(checks.Clause("bound", holds, abs(m(z)) - abs(z), 1e-10, "|f(z)| <= |z|"))
        return rep
    if tid is TheoremId.DISC_BOUNDARY:
        res = checks.disc_boundary_schwarz(m, tol)
        rep = CheckReport(tid, {"fprime1": res.fprime1, "lower_bound": res.lower_bound},
                          subject=m.name)
        rep.clauses.append(checks.Clause("bound", res.holds, res.lower_bound - res.fprime1.real,
                                         tol, "f'(1) >= lower bound"))
        return rep
    return checks.check_corollary(tid, m, theta=theta, alpha=alpha, lam=lam, tol=tol)


def cmd_check(args, tol):
    cfg = {"mapfile": args.mapfile, "name": args.name, "theorem": args.theorem,
           "theta": _theta(args), "alpha": parse_complex(args.alpha),
           "lam": parse_complex(args.lam), "r": args.r, "fixed": args.fixed, "z": args.z,
           "tol": tol}
    try:
        rep = _run_check(args, tol)
    except HypothesisViolated as err:
        fail = {"error": "HypothesisViolated", "hypothesis": err.hypothesis,
                "message": str(err), "residual": err.residual}
        return _envelope("check", cfg, [], [fail]), EXIT_HYPOTHESIS, None
    d = rep.to_dict()
    failures = [{"clause": c.id, "residual": c.residual, "tolerance": c.tolerance}
                for c in rep.failed()]
    rows = [{"clause": c.id, "passed": c.passed, "residual": repr(c.residual),
             "tolerance": repr(c.tolerance)} for c in rep.clauses]
    return _envelope("check", cfg, [d], failures), (EXIT_OK if rep.overall else EXIT_CLAUSE), rows


def _spot_check_maps(path: str, seed: int) -> list[SuiteResult]:
    import numpy as np

    from .sampling import interior_points
    from .schwarz.checks import self_map_spot_check

    pts = interior_points(np.random.default_rng(seed), 200)
    out = []
    for m in load_map_file(path):
        worst = self_map_spot_check(m, pts) if m.arity is not Arity.DISC_TO_DISC else float("nan")
        ok = not worst >= 0
        out.append(SuiteResult(f"maps:{m.name}", ok, len(pts), worst,
                               [] if ok else ["self-map"]))
    return out


def cmd_suite(args, tol):
    counts = dict(DEFAULT_COUNTS)
    if args.quick:
        counts = {k: max(1, v // 10) for k, v in counts.items()}
    extra = []
    for path in args.maps or []:
        extra += _spot_check_maps(path, args.seed)
    results = sorted(run_suite(args.seed, counts, tol) + extra, key=lambda r: r.name)
    docs = [r.to_dict() for r in results]
    if not args.verbose:
        for d in docs:
            d["detail"].pop("report", None)
    failures = [{"name": r.name, "failures": r.failures} for r in results if not r.passed]
    cfg = {"seed": args.seed, "counts": counts, "maps": args.maps or [], "tol": tol}
    rows = [{"name": r.name, "passed": r.passed, "count": r.count, "worst": repr(r.worst)}
            for r in results]
    return _envelope("suite", cfg, docs, failures), (EXIT_CLAUSE if failures else EXIT_OK), rows


def cmd_fixtures(args, tol):
    items = fixtures()
    results = []
    for fx in items:
        entry = {"name": fx.name, "theorem": fx.theorem.value, "arity": fx.map.arity.value,
                 "params": fx.params, "origin_fixing": fx.origin_fixing,
                 "expected": {k: {"value": e.value, "provenance": e.provenance}
                              for k, e in sorted(fx.expected.items())}}
        if args.run:
            entry["overall"] = check_fixture(fx, tol).overall
        results.append(entry)
    if args.write:
        out = Path(args.write)
        out.mkdir(parents=True, exist_ok=True)
        for fx in items:
            header = f"# theorem {fx.theorem.value}; params {json.dumps(_jsonable(fx.params), sort_keys=True)}\n"
            (out / f"{fx.name}.map").write_text(header + format_map_file([fx.map]), encoding="utf-8")
    failures = [{"name": r["name"]} for r in results if args.run and not r["overall"]]
    rows = [{"name": r["name"], "theorem": r["theorem"], "arity": r["arity"]} for r in results]
    cfg = {"write": args.write, "run": args.run}
    return _envelope("fixtures", cfg, results, failures), (EXIT_CLAUSE if failures else EXIT_OK), rows


def cmd_parse(args, tol):
    maps = load_map_file(args.mapfile)
    results = [{"name": m.name, "arity": m.arity.value, "components": m.serialize()} for m in maps]
    return _envelope("parse", {"mapfile": args.mapfile}, results, []), EXIT_OK, None


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="symdisc", description="Geometry of the symmetrized bidisc and "
                 "numerical checks of boundary Schwarz lemmas.")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--format", choices=("json", "text", "csv"), default="json")
    # --format is accepted before or after the subcommand
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text", "csv"), default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[fmt], help="interior / boundary / exterior verdict")
    p.add_argument("--s", required=True)
    p.add_argument("--p", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("metric", parents=[fmt], help="Caratheodory metric at (s, p) in direction xi")
    p.add_argument("--s", required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--xi", required=True, help="two components, e.g. 1,0 or 1+i,-2i")
    p.add_argument("--method", default="auto",
                   choices=("auto", "sup1", "sup2", "royal", "saxis", "origin", "all"))
    p.set_defaults(func=cmd_metric)

    p = sub.add_parser("check", parents=[fmt], help="run a theorem checker on a map file")
    p.add_argument("mapfile", nargs="?")
    p.add_argument("--theorem", required=True, choices=[t.value for t in TheoremId])
    p.add_argument("--name", help="map to use when the file holds several")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--theta", type=float, default=0.0, help="radians")
    g.add_argument("--theta-deg", type=float, default=None)
    p.add_argument("--alpha", default="1")
    p.add_argument("--lam", default="1")
    p.add_argument("--r", type=float, default=0.5, help="remark-map parameter")
    p.add_argument("--fixed", default="0,0", help="interior fixed point s,p")
    p.add_argument("--z", default="0.5", help="disc point")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("suite", parents=[fmt], help="fixtures plus randomized property sweeps")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quick", action="store_true", help="a tenth of the default sample counts")
    p.add_argument("--maps", action="append", help="extra map file to parse and spot-check")
    p.add_argument("--verbose", action="store_true", help="include full fixture reports")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("fixtures", parents=[fmt], help="list the named fixtures")
    p.add_argument("--write", metavar="DIR", help="write each fixture as a map file")
    p.add_argument("--run", action="store_true", help="also run each fixture's checker")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("parse", parents=[fmt], help="lint a map file")
    p.add_argument("mapfile")
    p.set_defaults(func=cmd_parse)
    return ap


def _error_doc(command: str, kind: str, message: str) -> dict:
    return _envelope(command or "", {}, [], [{"error": kind, "message": message}])


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    fmt, command = "json", None
    try:
        args = ap.parse_args(argv)
        fmt, command = args.format, args.command
        tol = default_tolerance()
        doc, code, rows = args.func(args, tol)
    except UsageError as err:
        doc, code, rows = _error_doc(command, "UsageError", str(err)), EXIT_PARSE, None
    except (ExprSyntaxError, ArityMismatch) as err:
        doc, code, rows = _error_doc(command, type(err).__name__, str(err)), EXIT_PARSE, None
    except OSError as err:
        doc, code, rows = _error_doc(command, "OSError", str(err)), EXIT_PARSE, None
    except HypothesisViolated as err:
        doc, code, rows = _error_doc(command, "HypothesisViolated", str(err)), EXIT_HYPOTHESIS, None
    except (DomainError, SymDiscError) as err:
        doc, code, rows = _error_doc(command, type(err).__name__, str(err)), EXIT_DOMAIN, None
    if code in (EXIT_PARSE, EXIT_DOMAIN) and fmt != "json":
        sys.stderr.write(f"error: {doc['failures'][0]['message']}\n")
        return code
    _emit(doc, fmt, out, rows)
    return code


if __name__ == "__main__":
    sys.exit(main())
