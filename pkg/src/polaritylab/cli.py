"""Command-line front end: batch recognition, decomposition, polarity
checks, obstruction lists, and theorem verification.

Graphs travel as newline-delimited graph6 on stdin/stdout so shell
pipelines compose with external generators. Exit codes: 0 success / all
verdicts true, 1 any false verdict or per-line error, 2 usage error, 3 cap
violation. POLARITYLAB_MAX_N overrides the default enumeration bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable

from . import classes as cl
from . import obstructions as ob
from . import polarity as po
from .errors import CapExceeded, Graph6Error, NotInClass, PolarityLabError
from .graphs import Graph, graph6_decode, graph6_encode, list_induced_p4s

MAX_N_LIMIT = 10
DEFAULT_MAX_N = 8


def _resolve_max_n(args) -> int:
    value = args.max_n
    if value is None:
        env = os.environ.get("POLARITYLAB_MAX_N")
        value = int(env) if env else DEFAULT_MAX_N
    if not 1 <= value <= MAX_N_LIMIT:
        raise CapExceeded(f"max-n {value} outside 1..{MAX_N_LIMIT}")
    return value


def _resolve_workers(args) -> int:
    w = args.workers if args.workers else (os.cpu_count() or 1)
    if w < 1:
        raise CapExceeded(f"workers {w} < 1")
    return w


def _emit(args, text_line: str, record: dict) -> None:
    if args.format == "json":
        print(json.dumps(record, sort_keys=True))
    else:
        print(text_line)


def _input_lines(stream) -> Iterable[str]:
    for raw in stream:
        line = raw.strip()
        if line:
            yield line


# ---------------------------------------------------------------------------
# per-line subcommands


def classify_stream(lines: Iterable[str]) -> Iterable[dict]:
    """Per-line class membership records; malformed lines yield error records."""
    for line in lines:
        try:
            g = graph6_decode(line)
        except (Graph6Error, CapExceeded) as exc:
            yield {"input": line, "error": f"{type(exc).__name__}: {exc}"}
            continue
        yield {
            "input": line,
            "classes": {
                "cograph": cl.is_cograph(g),
                "p4sparse": cl.is_p4_sparse(g),
                "p4extendible": cl.is_p4_extendible(g),
                "62": cl.is_62_graph(g),
            },
            "p4_count": len(list_induced_p4s(g)),
            "canonical": g.canonical_key().hex(),
        }


def _cmd_recognize(args) -> int:
    failures = 0
    if args.klass is None:
        for rec in classify_stream(_input_lines(sys.stdin)):
            if "error" in rec:
                failures += 1
                _emit(args, f"{rec['input']}\terror: {rec['error']}", rec)
                continue
            flags = " ".join(f"{k}={str(v).lower()}" for k, v in rec["classes"].items())
            _emit(args, f"{rec['input']}\t{flags} p4_count={rec['p4_count']}", rec)
        return 1 if failures else 0
    check = cl.recognizer(args.klass)
    for line in _input_lines(sys.stdin):
        try:
            g = graph6_decode(line)
        except (Graph6Error, CapExceeded) as exc:
            failures += 1
            _emit(args, f"{line}\terror: {exc}",
                  {"input": line, "error": f"{type(exc).__name__}: {exc}"})
            continue
        if args.mode and args.klass in ("p4sparse", "p4extendible"):
            verdict = (
                cl.is_p4_sparse(g, args.mode)
                if args.klass == "p4sparse"
                else cl.is_p4_extendible(g, args.mode)
            )
        else:
            verdict = check(g)
        record = {
            "input": line,
            "verdict": verdict,
            "canonical": g.canonical_key().hex(),
        }
        if not verdict and not args.quiet:
            cert = None
            if args.klass in ("cograph", "p4sparse"):
                cert = cl.p4_sparse_certificate(g)
                if args.klass == "cograph" and cert is None:
                    cert = list_induced_p4s(g)[0]
            elif args.klass == "p4extendible":
                cert = cl.p4_extendible_certificate(g)
            if cert is not None:
                record["certificate"] = cert
        if not verdict:
            failures += 1
        _emit(args, f"{line}\t{str(verdict).lower()}", record)
    return 1 if failures else 0


def _render_tree(node) -> str:
    if isinstance(node, cl.Leaf):
        return str(node.vertex)
    if isinstance(node, cl.UnionNode):
        return "union(" + ",".join(_render_tree(c) for c in node.children) + ")"
    if isinstance(node, cl.JoinNode):
        return "join(" + ",".join(_render_tree(c) for c in node.children) + ")"
    if isinstance(node, cl.SpiderNode):
        p = node.partition
        head = _render_tree(node.head) if node.head else "-"
        kind = "thin" if p.thin else "thick"
        return f"spider[{kind}](S={list(p.legs)},K={list(p.body)},head={head})"
    if isinstance(node, cl.ExtGraphNode):
        return f"ext[{node.kind}]({','.join(map(str, node.members))})"
    return (
        f"extspider[{node.kind}](S={list(node.endpoints)},"
        f"K={list(node.midpoints)},head={_render_tree(node.head)})"
    )


def _tree_json(node) -> dict:
    if isinstance(node, cl.Leaf):
        return {"kind": "leaf", "vertex": node.vertex}
    if isinstance(node, (cl.UnionNode, cl.JoinNode)):
        kind = "union" if isinstance(node, cl.UnionNode) else "join"
        return {"kind": kind, "children": [_tree_json(c) for c in node.children]}
    if isinstance(node, cl.SpiderNode):
        p = node.partition
        return {
            "kind": "spider",
            "thin": p.thin,
            "legs": list(p.legs),
            "body": list(p.body),
            "pairing": [list(pair) for pair in p.pairing],
            "head": _tree_json(node.head) if node.head else None,
        }
    if isinstance(node, cl.ExtGraphNode):
        return {"kind": "extgraph", "name": node.kind, "vertices": list(node.members)}
    return {
        "kind": "extspider",
        "name": node.kind,
        "endpoints": list(node.endpoints),
        "midpoints": list(node.midpoints),
        "head": _tree_json(node.head),
    }


def _cmd_decompose(args) -> int:
    failures = 0
    for line in _input_lines(sys.stdin):
        try:
            g = graph6_decode(line)
            tree = cl.build_decomposition(g, args.klass)
        except (Graph6Error, CapExceeded) as exc:
            failures += 1
            _emit(args, f"{line}\terror: {exc}",
                  {"input": line, "error": f"{type(exc).__name__}: {exc}"})
            continue
        except NotInClass as exc:
            failures += 1
            _emit(args, f"{line}\tnot in class: certificate={exc.certificate}",
                  {"input": line, "verdict": False, "certificate": exc.certificate})
            continue
        _emit(args, f"{line}\t{_render_tree(tree)}",
              {"input": line, "verdict": True, "tree": _tree_json(tree),
               "canonical": g.canonical_key().hex()})
    return 1 if failures else 0


def _cmd_polar(args) -> int:
    spec = po.parse_spec(args.spec)
    failures = 0
    for line in _input_lines(sys.stdin):
        try:
            g = graph6_decode(line)
        except (Graph6Error, CapExceeded) as exc:
            failures += 1
            _emit(args, f"{line}\terror: {exc}",
                  {"input": line, "error": f"{type(exc).__name__}: {exc}"})
            continue
        witness = po.find_polar_partition(g, spec)
        record = {
            "input": line,
            "verdict": witness is not None,
            "canonical": g.canonical_key().hex(),
        }
        if witness is None:
            failures += 1
            _emit(args, f"{line}\tnone", record)
        elif args.quiet:
            _emit(args, f"{line}\tpresent", record)
        else:
            record["witness"] = {"a": list(witness.a), "b": list(witness.b)}
            _emit(args, f"{line}\tA={list(witness.a)} B={list(witness.b)}", record)
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# generators and the harness


def _emit_graphs(args, graphs, spec=None) -> None:
    # emit the canonical labeling so isomorphic results match byte-for-byte
    # across the enumerate / construct / catalog routes
    from .graphs import canonical_form

    for g in graphs:
        if args.format == "json":
            print(json.dumps(ob.obstruction_record(g, spec), sort_keys=True))
        else:
            print(graph6_encode(canonical_form(g)))


def _cmd_obstructions(args) -> int:
    from .errors import BadParameter

    if args.action in ("enumerate", "check") and not args.spec:
        raise BadParameter(f"obstructions {args.action} needs --spec")
    if args.action in ("enumerate", "construct") and not args.klass:
        raise BadParameter(f"obstructions {args.action} needs --class")
    if args.action == "enumerate":
        spec = po.parse_spec(args.spec)
        graphs = ob.enumerate_minimal_obstructions(
            args.klass, spec, _resolve_max_n(args), workers=_resolve_workers(args)
        )
        _emit_graphs(args, graphs, None if args.quiet else spec)
        if args.sidecar:
            with open(args.sidecar, "w", encoding="utf-8") as fh:
                json.dump([ob.obstruction_record(g, spec) for g in graphs], fh, indent=2)
        return 0
    if args.action == "construct":
        if args.s is None:
            raise BadParameter("obstructions construct needs --s")
        _emit_graphs(args, ob.construct_s1_obstructions(args.klass, args.s))
        return 0
    if args.action == "catalog":
        if not args.id:
            raise BadParameter("obstructions catalog needs --id")
        _emit_graphs(args, ob.catalog_list(args.id, args.s))
        return 0
    spec = po.parse_spec(args.spec)
    failures = 0
    for line in _input_lines(sys.stdin):
        try:
            g = graph6_decode(line)
        except (Graph6Error, CapExceeded) as exc:
            failures += 1
            _emit(args, f"{line}\terror: {exc}",
                  {"input": line, "error": f"{type(exc).__name__}: {exc}"})
            continue
        report = ob.is_minimal_obstruction(g, spec)
        record = {
            "input": line,
            "verdict": report.is_minimal,
            "obstruction": report.is_obstruction,
            "canonical": g.canonical_key().hex(),
        }
        if report.is_minimal and not args.quiet:
            record["witness"] = {
                str(v): {"a": list(w.a), "b": list(w.b)}
                for v, w in sorted(report.deletion_witnesses.items())
            }
        if not report.is_minimal:
            failures += 1
        _emit(
            args,
            f"{line}\tobstruction={str(report.is_obstruction).lower()} "
            f"minimal={str(report.is_minimal).lower()}",
            record,
        )
    return 1 if failures else 0


def _cmd_verify(args) -> int:
    report = ob.verify_claim(args.claim, _resolve_max_n(args),
                             workers=_resolve_workers(args))
    if args.format == "json":
        print(json.dumps(report.__dict__, sort_keys=True))
    else:
        print(f"claim {report.claim} at n<={report.n_max}: "
              f"{'pass' if report.passed else 'FAIL'}")
        for key, value in sorted(report.details.items()):
            print(f"  {key}: {value}")
        for bad in report.counterexamples:
            print(f"  counterexample: {bad}")
    return 0 if report.passed else 1


def _cmd_gen(args) -> int:
    n_max = _resolve_max_n(args)
    if args.klass == "all":
        from .graphs import enumerate_graphs

        graphs = enumerate_graphs(n_max)
    else:
        graphs = cl.generate_class(args.klass, n_max)
    _emit_graphs(args, graphs)
    return 0


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-n", type=int, default=None, dest="max_n")
    common.add_argument("--workers", type=int, default=None)
    common.add_argument("--quiet", action="store_true")

    parser = argparse.ArgumentParser(
        prog="polaritylab",
        description="Graph-class recognition, polar partitions, and minimal "
        "obstruction lists over graph6 streams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", parents=[common],
                       help="class membership per input line")
    p.add_argument("--class", dest="klass", choices=cl.CLASS_IDS, default=None)
    p.add_argument("--mode", choices=("definitional", "structural"), default=None)
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("decompose", parents=[common],
                       help="decomposition tree per input line")
    p.add_argument("--class", dest="klass", required=True,
                   choices=("p4sparse", "p4extendible"))
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("polar", parents=[common],
                       help="polar partition witness per input line")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=_cmd_polar)

    p = sub.add_parser("obstructions", parents=[common])
    p.add_argument("action", choices=("enumerate", "construct", "catalog", "check"))
    p.add_argument("--class", dest="klass", choices=("p4sparse", "p4extendible"))
    p.add_argument("--spec")
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--id")
    p.add_argument("--sidecar", help="also write a JSON sidecar file")
    p.set_defaults(func=_cmd_obstructions)

    p = sub.add_parser("verify", parents=[common], help="run a claim check")
    p.add_argument("--claim", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", parents=[common], help="stream class members")
    p.add_argument("--class", dest="klass", required=True,
                   choices=cl.CLASS_IDS + ("all",))
    p.set_defaults(func=_cmd_gen)
    return parser


def run(argv=None) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"cap violation: {exc}", file=sys.stderr)
        return 3
    except PolarityLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
