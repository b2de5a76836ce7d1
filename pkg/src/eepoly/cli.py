"""Command-line front end: file ingestion, computation, verification, atlas.

Commands
    compute     emit the edge elimination polynomial (labeled when the
                input carries labels)
    specialize  emit one of the named classical polynomials
    eval        evaluate the recurrence at an exact rational point
    verify      run a verification suite over the desk-scale corpus
    atlas       enumerate graph families and search for collisions

Exit codes: 0 success, 1 input error, 2 verification failure.  Output is
byte-identical across runs and parallelism settings; EEPOLY_JOBS controls
the worker count and EEPOLY_CACHE_BOUND caps the memo tables.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .multigraph import Multigraph
from .polyring import ExactDivisionError, MPoly
from .specializations import IdentityDefect, SPECIALIZATIONS
from .xi_core import (
    EdgeLabeling,
    GeneralParams,
    SeededPolicy,
    UnlabeledEdgeError,
    set_cache_bound,
    xi,
    xi_general_eval,
    xi_lab,
)
from . import atlas, verify


class CliInputError(ValueError):
    pass


# ----- graph ingestion ---------------------------------------------------------


def parse_graph_text(text, fmt="edge-list", source="<input>"):
    """Parse a graph (and labeling, for the labeled format) from text."""
    if fmt == "graph6":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise CliInputError("%s: expected exactly one graph6 line" % source)
        try:
            return atlas.graph_from_graph6(lines[0]), None
        except Exception as exc:
            raise CliInputError("%s: bad graph6 data (%s)" % (source, exc)) from None
    if fmt not in ("edge-list", "labeled-edge-list"):
        raise CliInputError("unknown graph format %r" % fmt)
    labeled = fmt == "labeled-edge-list"
    lines = text.splitlines()
    rows = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not rows:
        raise CliInputError("%s: empty graph file" % source)
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
        raise CliInputError("%s:%d: expected header 'n m'" % (source, lineno))
    n, m = int(parts[0]), int(parts[1])
    if n < 0 or m < 0:
        raise CliInputError("%s:%d: negative counts in header" % (source, lineno))
    if len(rows) - 1 != m:
        raise CliInputError("%s: header promises %d edges, found %d lines"
                            % (source, m, len(rows) - 1))
    pairs = []
    labels = {}
    for eid, (lineno, line) in enumerate(rows[1:]):
        parts = line.split()
        want = 3 if labeled else 2
        if len(parts) != want:
            raise CliInputError("%s:%d: expected '%s'" % (
                source, lineno, "u v label" if labeled else "u v"))
        if not parts[0].isdigit() or not parts[1].isdigit():
            raise CliInputError("%s:%d: vertex ids must be integers" % (source, lineno))
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise CliInputError("%s:%d: vertex out of range 0..%d" % (source, lineno, n - 1))
        pairs.append((u, v))
        if labeled:
            labels[eid] = parts[2]
    graph = Multigraph.from_edge_list(n, pairs)
    return graph, (EdgeLabeling(labels) if labeled else None)


def parse_graph_file(path, fmt="edge-list"):
    try:
        with open(path, "r", encoding="ascii") as handle:
            text = handle.read()
    except OSError as exc:
        raise CliInputError("cannot read %s: %s" % (path, exc)) from None
    return parse_graph_text(text, fmt, source=str(path))


def _load_graph(args):
    if getattr(args, "inline", None):
        text = args.inline.replace(";", "\n")
        return parse_graph_text(text, args.format, source="<inline>")
    if getattr(args, "input", None):
        return parse_graph_file(args.input, args.format)
    raise CliInputError("no graph given: use --input PATH or --inline TEXT")


# ----- rendering -----------------------------------------------------------------


def render_polynomial(poly, fmt="text"):
    if fmt == "structured":
        return json.dumps({"polynomial": poly.to_record()}, sort_keys=True) + "\n"
    return str(poly) + "\n"


def _emit(out, text):
    out.write(text)


# ----- commands -------------------------------------------------------------------


def _cmd_compute(args, out):
    graph, labeling = _load_graph(args)
    poly = xi_lab(graph, labeling) if labeling is not None else xi(graph)
    _emit(out, render_polynomial(poly, args.output))
    return 0


def _cmd_specialize(args, out):
    graph, labeling = _load_graph(args)
    try:
        fn, needs_labeling = SPECIALIZATIONS[args.poly]
    except KeyError:
        raise CliInputError("unknown specialization %r (options: %s)"
                            % (args.poly, ", ".join(sorted(SPECIALIZATIONS))))
    if needs_labeling:
        if labeling is None:
            raise CliInputError("specialization %r needs a labeled-edge-list input"
                                % args.poly)
        poly = fn(graph, labeling)
    else:
        poly = fn(graph)
    _emit(out, render_polynomial(poly, args.output))
    return 0


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CliInputError("bad rational %r" % text) from None


def _cmd_eval(args, out):
    graph, _ = _load_graph(args)
    params = GeneralParams.of(
        _rational(args.w) if args.w is not None else Fraction(1),
        _rational(args.x), _rational(args.y), _rational(args.z),
    )
    value = xi_general_eval(graph, params, SeededPolicy(args.seed))
    if args.output == "structured":
        _emit(out, json.dumps({"value": str(value)}, sort_keys=True) + "\n")
    else:
        _emit(out, str(value) + "\n")
    return 0


def _cmd_verify(args, out):
    jobs = _jobs_from_env()
    try:
        report = verify.run_suite(
            args.suite,
            max_vertices=args.max_vertices,
            trials=args.trials,
            seed=args.seed,
            jobs=jobs,
        )
    except ValueError as exc:
        raise CliInputError(str(exc)) from None
    if args.output == "structured":
        _emit(out, json.dumps(report.to_record(), sort_keys=True) + "\n")
    else:
        _emit(out, "\n".join(report.summary_lines()) + "\n")
    return 0 if report.passed else 2


def _cmd_atlas(args, out):
    jobs = _jobs_from_env()
    if args.family == "trees":
        if args.min_n > args.max_n:
            raise CliInputError("--min-n exceeds --max-n")
        reports = []
        for n in range(args.min_n, args.max_n + 1):
            family = atlas.enumerate_trees(n)
            name = "trees n=%d" % n
            if args.mode == "collisions":
                reports.append(atlas.find_xi_collisions(family, name, jobs=jobs))
            else:
                reports.append(atlas.search_oq2(family, name, jobs=jobs))
    else:
        family = atlas.enumerate_graphs(args.max_n, args.m_max)
        name = "graphs n=%d" % args.max_n
        if args.m_max is not None:
            name += " m<=%d" % args.m_max
        if args.mode == "collisions":
            reports = [atlas.find_xi_collisions(family, name, jobs=jobs)]
        else:
            reports = [atlas.search_oq2(family, name, jobs=jobs)]
    if args.output == "structured":
        record = {"reports": [r.to_record() for r in reports]}
        _emit(out, json.dumps(record, sort_keys=True) + "\n")
    else:
        lines = []
        for r in reports:
            lines.extend(r.summary_lines())
        _emit(out, "\n".join(lines) + "\n")
    return 0


# ----- argument plumbing --------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliInputError(message)


def _add_graph_options(sub):
    sub.add_argument("--input", help="path to a graph file")
    sub.add_argument("--inline", help="inline graph text; ';' separates lines")
    sub.add_argument("--format", default="edge-list",
                     choices=["edge-list", "graph6", "labeled-edge-list"])


def _add_output_option(sub):
    sub.add_argument("--output", default="text", choices=["text", "structured"])


def build_parser():
    parser = _Parser(prog="eepoly",
                     description="Exact edge elimination polynomial toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="compute the polynomial")
    _add_graph_options(compute)
    _add_output_option(compute)

    spec = sub.add_parser("specialize", help="compute a classical polynomial")
    spec.add_argument("--poly", required=True)
    _add_graph_options(spec)
    _add_output_option(spec)

    ev = sub.add_parser("eval", help="evaluate at an exact rational point")
    ev.add_argument("-x", required=True)
    ev.add_argument("-y", required=True)
    ev.add_argument("-z", required=True)
    ev.add_argument("-w", default=None,
                    help="deletion coefficient of the raw recurrence (default 1)")
    ev.add_argument("--seed", type=int, default=0)
    _add_graph_options(ev)
    _add_output_option(ev)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", default="all")
    ver.add_argument("--max-vertices", type=int, default=5)
    ver.add_argument("--trials", type=int, default=50)
    ver.add_argument("--seed", type=int, default=0)
    _add_output_option(ver)

    at = sub.add_parser("atlas", help="family enumeration and collision search")
    at.add_argument("--family", default="trees", choices=["trees", "graphs"])
    at.add_argument("--mode", default="collisions", choices=["collisions", "oq2"])
    at.add_argument("--min-n", type=int, default=1)
    at.add_argument("--max-n", type=int, default=8)
    at.add_argument("--m-max", type=int, default=None)
    _add_output_option(at)

    return parser


def _jobs_from_env():
    raw = os.environ.get("EEPOLY_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise CliInputError("EEPOLY_JOBS must be an integer, got %r" % raw)
    return max(jobs, 1)


def _apply_cache_env():
    raw = os.environ.get("EEPOLY_CACHE_BOUND", "")
    if not raw:
        return
    try:
        set_cache_bound(int(raw))
    except ValueError:
        raise CliInputError("EEPOLY_CACHE_BOUND must be an integer, got %r" % raw)


_COMMANDS = {
    "compute": _cmd_compute,
    "specialize": _cmd_specialize,
    "eval": _cmd_eval,
    "verify": _cmd_verify,
    "atlas": _cmd_atlas,
}


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _apply_cache_env()
        return _COMMANDS[args.command](args, out)
    except CliInputError as exc:
        print("error: %s" % exc, file=err)
        return 1
    except UnlabeledEdgeError as exc:
        print("error: %s" % exc, file=err)
        return 1
    except (ExactDivisionError, IdentityDefect, atlas.IdentityDefect) as exc:
        print("verification failure: %s" % exc, file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
