"""Command-line interface.

Exit status: 0 on success, 1 when a verification or certification fails,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import closed_form, cospectral
from .errors import (
    Disconnected,
    HypothesisViolated,
    InvalidGraph,
    NonRegular,
    SubjoinError,
    TooLarge,
)
from .graph import (
    GENERATORS,
    JoinKind,
    MatrixKind,
    graph_matrix,
    join,
    load_graph,
    to_json,
)
from .linalg import char_poly_exact, sym_eigen
from .verify import Tolerances, kirchhoff_oracle, run_suite, spanning_tree_oracle

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
INPUT_ERRORS = (InvalidGraph, NonRegular, HypothesisViolated, Disconnected, TooLarge)


class UsageError(Exception):
    pass


# -- output helpers ---------------------------------------------------------

def _emit(text: str, out: str | None):
    if not text.endswith("\n"):
        text += "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1)


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _number(s: str):
    try:
        return int(s)
    except ValueError:
        pass
    try:
        return float(s)
    except ValueError:
        raise UsageError(f"expected a number, got {s!r}") from None


def _scalar_output(args, closed: float, oracle: float, residual: float, ok: bool) -> int:
    if args.format == "json":
        text = _dump({"closed_form": closed, "oracle": oracle, "residual": residual, "pass": ok})
    elif args.format == "csv":
        text = _csv([["closed_form", "oracle", "residual", "pass"], [closed, oracle, residual, ok]])
    else:
        text = f"{closed} {oracle} {residual:g}"
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


# -- subcommands ------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.family not in GENERATORS:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(GENERATORS)}")
    params = [_number(p) for p in args.params]
    if args.family == "circulant":
        if not params:
            raise UsageError("circulant needs n and at least one offset")
        params = [params[0], params[1:]]
    elif args.family == "erdos-renyi" and len(params) == 2:
        params.append(args.seed)
    try:
        g = GENERATORS[args.family](*params)
    except TypeError as exc:
        raise UsageError(f"bad parameters for {args.family}: {exc}") from None
    if args.format == "plain":
        text = "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges])
    elif args.format == "csv":
        text = _csv([["u", "v"]] + [list(e) for e in g.edges])
    else:
        text = to_json(g)
    _emit(text, args.out)
    return EXIT_OK


def _spectrum_text(values, args, header: dict) -> str:
    values = [float(v) for v in values]
    if args.format == "json":
        return _dump({**header, "eigenvalues": values})
    if args.format == "csv":
        return _csv([["index", "eigenvalue"]] + [[i, repr(v)] for i, v in enumerate(values)])
    return "\n".join(repr(v) for v in values)


def cmd_join(args) -> int:
    g1, g2 = load_graph(args.g1), load_graph(args.g2)
    kind, matrix = JoinKind(args.kind), MatrixKind.parse(args.matrix)
    J, layout = join(kind, g1, g2)
    header = {"join": kind.value, "matrix": matrix.value, "n": J.n}
    if args.emit == "graph":
        if args.format == "plain":
            text = "\n".join([str(J.n)] + [f"{u} {v}" for u, v in J.edges])
        elif args.format == "csv":
            text = _csv([["u", "v"]] + [list(e) for e in J.edges])
        else:
            text = to_json(J)
    elif args.emit == "spectrum-closed":
        result = closed_form.join_spectrum(kind, matrix, g1, g2)
        text = _spectrum_text(result.spectrum.values, args, {**header, "source": "closed-form"})
    elif args.emit == "spectrum-direct":
        values = sym_eigen(graph_matrix(J, matrix)).values
        text = _spectrum_text(values, args, {**header, "source": "direct"})
    else:
        coef = char_poly_exact(graph_matrix(J, matrix))
        if args.format == "json":
            text = _dump({**header, "order": "ascending", "coefficients": coef})
        elif args.format == "csv":
            text = _csv([["power", "coefficient"]] + [[k, c] for k, c in enumerate(coef)])
        else:
            text = " ".join(str(c) for c in coef)
    _emit(text, args.out)
    return EXIT_OK


def cmd_trees(args) -> int:
    g1, g2 = load_graph(args.g1), load_graph(args.g2)
    kind = JoinKind(args.kind)
    cf = closed_form.spanning_trees(kind, g1, g2)
    oracle = spanning_tree_oracle(join(kind, g1, g2)[0])
    closed = cf.as_int()
    residual = abs(cf.value - oracle) / oracle if oracle else abs(cf.value)
    tol = args.tol if args.tol is not None else Tolerances().trees
    return _scalar_output(args, closed, oracle, residual, closed == oracle and residual <= tol)


def cmd_kirchhoff(args) -> int:
    g1, g2 = load_graph(args.g1), load_graph(args.g2)
    kind = JoinKind(args.kind)
    value = closed_form.kirchhoff(kind, g1, g2).value
    oracle = kirchhoff_oracle(join(kind, g1, g2)[0])
    residual = abs(value - oracle) / oracle if oracle else abs(value)
    tol = args.tol if args.tol is not None else Tolerances().kirchhoff
    return _scalar_output(args, value, oracle, residual, residual <= tol)


def _cospectral_text(result: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump(result)
    rows = [["seed", "partner", "join", "kind", "status", "residual", "detail"]]
    for p in result["certified"]:
        prov = p["provenance"]
        rows.append([prov.get("seed", ""), prov.get("partner", "-"), p["join"], p["kind"],
                     "certified", repr(p["residual"]), ""])
    for i in result["issues"]:
        rows.append([i["seed"], i["partner"], i["join"], i["kind"], i["status"], "", i["detail"]])
    if fmt == "csv":
        return _csv(rows)
    s = result["summary"]
    lines = [" ".join(str(x) for x in r[:5]) for r in rows[1:]]
    lines.append(f"certified={s['certified']} refused={s['refused']} failed={s['failed']}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    out = args.report or args.out
    if args.suite == "joins":
        tol = Tolerances()
        if args.tol is not None:
            tol = replace(tol, spectrum=args.tol, pointwise=args.tol, trees=args.tol, kirchhoff=args.tol)
        report = run_suite(seed=args.seed, tolerances=tol)
        if args.format == "csv":
            text = report.to_csv()
        elif args.format == "plain":
            bad = [c for c in report.cases if c.status == "fail"]
            text = "\n".join([f"FAIL {' '.join(c.key)} residual={c.residual:g} {c.detail}" for c in bad]
                             + [" ".join(f"{k}={v}" for k, v in report.summary.items())])
        else:
            text = report.to_json()
        _emit(text, out)
        s = report.summary
        print(f"joins: {s['pass']} pass, {s['fail']} fail, {s['skip']} skip", file=sys.stderr)
        return EXIT_OK if report.all_pass else EXIT_FAIL
    tol = cospectral.CERTIFY_TOL if args.tol is None else args.tol
    result = cospectral.run_fixtures(cospectral.load_seed_pairs(), tol=tol)
    _emit(_cospectral_text(result, args.format), out)
    s = result["summary"]
    print(f"cospectral: {s['certified']} certified, {s['refused']} refused, {s['failed']} failed",
          file=sys.stderr)
    return EXIT_OK if s["failed"] == 0 and s["certified"] > 0 else EXIT_FAIL


def cmd_cospectral(args) -> int:
    seeds = cospectral.load_seed_pairs(args.fixture)
    partners = None
    if args.partners is not None:
        partners = [(Path(p).stem, load_graph(p)) for p in args.partners]
    tol = cospectral.CERTIFY_TOL if args.tol is None else args.tol
    result = cospectral.run_fixtures(seeds, partners, join_kinds=args.joins,
                                     matrices=args.kinds, tol=tol)
    _emit(_cospectral_text(result, args.format), args.out)
    return EXIT_FAIL if result["summary"]["failed"] else EXIT_OK


# -- parser -----------------------------------------------------------------

def _positive(s: str) -> float:
    v = float(s)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"tolerance must be positive, got {s}")
    return v


def _seed(s: str) -> int:
    v = int(s)
    if not -(2 ** 63) <= v < 2 ** 64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 bits, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive, default=None, help="tolerance override")
    common.add_argument("--seed", type=_seed, default=42)
    common.add_argument("--format", choices=["json", "csv", "plain"], default="json")
    common.add_argument("--out", default=None, help="output path (default stdout)")

    parser = argparse.ArgumentParser(prog="subjoin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a graph")
    p.add_argument("family", help=", ".join(GENERATORS))
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("join", parents=[common], help="build a join or its spectrum")
    p.add_argument("kind", choices=["sv", "se"])
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--emit", choices=["graph", "spectrum-closed", "spectrum-direct", "charpoly"],
                   default="graph")
    p.add_argument("--matrix", choices=["a", "l", "q"], default="a")
    p.set_defaults(func=cmd_join)

    for name, func in (("trees", cmd_trees), ("kirchhoff", cmd_kirchhoff)):
        p = sub.add_parser(name, parents=[common], help=f"closed-form {name} with oracle check")
        p.add_argument("kind", choices=["sv", "se"])
        p.add_argument("g1")
        p.add_argument("g2")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=["joins", "cospectral"], default="joins")
    p.add_argument("--report", default=None, help="report path (same as --out)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cospectral", parents=[common], help="certified cospectral pairs")
    p.add_argument("--fixture", default=None, help="seed-pair JSON (default: shipped fixtures)")
    p.add_argument("--partners", nargs="*", default=None, help="partner graph files")
    p.add_argument("--kinds", nargs="*", choices=["a", "l", "q"], default=None)
    p.add_argument("--joins", nargs="*", choices=["sv", "se"], default=["sv", "se"])
    p.set_defaults(func=cmd_cospectral)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, OSError, *INPUT_ERRORS) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SubjoinError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
