"""Command-line batch interface. Every subcommand writes JSON lines.

Exit codes: 0 clean, 1 input or parse errors, 2 a violated claim or a
certificate that failed re-verification.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from pathlib import Path

from .classifier import classify, classify_via_proof, verify_verdict
from .connectivity import is_two_connected
from .dirac import dirac_cycle
from .errors import BudgetExceeded, GraphError, NotSimple, NotTwoConnected, TheoremViolation
from .generators import gen_join_family
from .graph import min_degree
from .graph6 import encode_graph6, parse_graph6, read_graph6
from .oracles import hamilton_cycle_exact, longest_cycle_exact
from .sweep import SweepReport, sweep_enumerated, sweep_graphs

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2
RECORD_FIELDS = ("line", "graph6", "n", "delta", "verdict", "certificate", "verified", "engine")

log = logging.getLogger("longcycle")


@contextmanager
def _open_out(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _emit(out, record: dict) -> None:
    out.write(json.dumps(record) + "\n")


def _read_lines(path: str) -> list[tuple[int, str]]:
    if path == "-":
        return list(read_graph6(sys.stdin))
    with open(path) as fh:
        return list(read_graph6(fh))


def _error_record(line: int, text: str, tag: str, message: str, engine: str, g=None) -> dict:
    return {
        "line": line,
        "graph6": text,
        "n": g.n if g is not None else None,
        "delta": min_degree(g) if g is not None and g.n else None,
        "verdict": tag,
        "certificate": {"error": message},
        "verified": False,
        "engine": engine,
    }


def classify_record(args: tuple[int, str, str]) -> tuple[dict, int]:
    """One VerdictRecord plus the severity it contributes to the exit code."""
    line, text, engine = args
    try:
        g = parse_graph6(text)
    except GraphError as exc:
        return _error_record(line, text, "parse_error", str(exc), engine), EXIT_INPUT
    try:
        v = classify(g) if engine == "oracle" else classify_via_proof(g)
    except NotTwoConnected as exc:
        return _error_record(line, text, "not_two_connected", str(exc), engine, g), EXIT_INPUT
    except NotSimple as exc:
        return _error_record(line, text, "not_simple", str(exc), engine, g), EXIT_INPUT
    except BudgetExceeded as exc:
        return _error_record(line, text, "budget_exceeded", str(exc), engine, g), EXIT_INPUT
    except TheoremViolation as exc:
        msg = f"{exc} [stage {exc.stage}]"
        return _error_record(line, text, "theorem_violation", msg, engine, g), EXIT_VIOLATION
    verified = verify_verdict(g, v)
    record = {
        "line": line,
        "graph6": text,
        "n": g.n,
        "delta": min_degree(g),
        "verdict": v.tag,
        "certificate": v.payload(),
        "verified": verified,
        "engine": v.engine,
    }
    return record, EXIT_OK if verified else EXIT_VIOLATION


def _map(fn, items: list, jobs: int):
    if jobs <= 1 or len(items) < 2:
        yield from map(fn, items)
        return
    pool = ProcessPoolExecutor(max_workers=jobs)
    chunk = max(1, len(items) // (4 * jobs))
    try:
        # pool.map preserves input order, so output stays line-ordered
        yield from pool.map(fn, items, chunksize=chunk)
    finally:
        pool.shutdown()


def cmd_classify(ns) -> int:
    try:
        lines = _read_lines(ns.input)
    except OSError as exc:
        log.error("cannot read %s: %s", ns.input, exc)
        return EXIT_INPUT
    status = EXIT_OK
    with _open_out(ns.output) as out:
        for record, severity in _map(classify_record, [(i, t, ns.engine) for i, t in lines], ns.jobs):
            _emit(out, record)
            status = max(status, severity)
    return status


def _load_sweep_inputs(paths: list[str]) -> tuple[list, int]:
    graphs, bad = [], 0
    for path in paths:
        for line, text in _read_lines(path):
            try:
                g = parse_graph6(text)
            except GraphError as exc:
                log.error("%s:%d: %s", path, line, exc)
                bad += 1
                continue
            if not (g.is_consistent() and is_two_connected(g)):
                log.error("%s:%d: not a simple 2-connected graph", path, line)
                bad += 1
                continue
            graphs.append(g)
    return graphs, bad


def cmd_verify_theorem(ns) -> int:
    bad = 0
    if ns.source == "enumerate":
        if ns.max_n > 7:
            log.error("--max-n above 7 is outside the enumeration budget")
            return EXIT_INPUT
        report = sweep_enumerated(ns.max_n, jobs=ns.jobs, min_n=ns.min_n)
    else:
        if not ns.input:
            log.error("--source file needs at least one --input")
            return EXIT_INPUT
        try:
            graphs, bad = _load_sweep_inputs(ns.input)
        except OSError as exc:
            log.error("cannot read input: %s", exc)
            return EXIT_INPUT
        report = sweep_graphs(graphs) if graphs else SweepReport()
    result = report.to_dict()
    result["input_errors"] = bad
    with _open_out(ns.report) as out:
        _emit(out, result)
    if ns.figures:
        from .report import verdict_histogram

        Path(ns.figures).mkdir(parents=True, exist_ok=True)
        verdict_histogram(result, Path(ns.figures) / "verdicts_by_n.png")
    if report.violations:
        return EXIT_VIOLATION
    if bad or not report.graphs:
        return EXIT_INPUT
    return EXIT_OK


def cmd_generate(ns) -> int:
    rng = random.Random(ns.seed)
    try:
        graphs = [
            gen_join_family(ns.delta, ns.m, ns.inner, seed=rng.randrange(1 << 32), shuffle=ns.shuffle)
            for _ in range(ns.count)
        ]
    except GraphError as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    with _open_out(ns.output) as out:
        for g in graphs:
            out.write(encode_graph6(g) + "\n")
    return EXIT_OK


def oracle_record(line: int, text: str, query: str) -> tuple[dict, int]:
    record = {"line": line, "graph6": text, "query": query}
    try:
        g = parse_graph6(text)
        record.update(n=g.n, delta=min_degree(g) if g.n else None)
        if query == "circumference":
            c = longest_cycle_exact(g)
        elif query == "hamilton":
            c = hamilton_cycle_exact(g)
        else:
            c = dirac_cycle(g)
            record["bound"] = min(g.n, 2 * min_degree(g))
    except GraphError as exc:
        record["error"] = f"{type(exc).__name__}: {exc}"
        return record, EXIT_INPUT
    except TheoremViolation as exc:
        record["error"] = f"TheoremViolation: {exc}"
        return record, EXIT_VIOLATION
    record["length"] = len(c) if c is not None else 0
    record["cycle"] = list(c) if c is not None else None
    if query == "dirac":
        record["bound_met"] = record["length"] >= record["bound"]
        return record, EXIT_OK if record["bound_met"] else EXIT_VIOLATION
    return record, EXIT_OK


def cmd_oracle(ns) -> int:
    try:
        lines = _read_lines(ns.input)
    except OSError as exc:
        log.error("cannot read %s: %s", ns.input, exc)
        return EXIT_INPUT
    status = EXIT_OK
    with _open_out(ns.output) as out:
        for line, text in lines:
            record, severity = oracle_record(line, text, ns.query)
            _emit(out, record)
            status = max(status, severity)
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="longcycle", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)
    default_jobs = os.cpu_count() or 1

    c = sub.add_parser("classify", help="classify graph6 lines, one JSON record per graph")
    c.add_argument("input", help="graph6 file, or - for stdin")
    c.add_argument("--engine", choices=("oracle", "proof"), default="oracle")
    c.add_argument("--output", help="JSONL destination (default stdout)")
    c.add_argument("--jobs", type=int, default=default_jobs)
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify-theorem", help="sweep graphs and check every claim")
    v.add_argument("--max-n", type=int, default=7)
    v.add_argument("--min-n", type=int, default=3)
    v.add_argument("--source", choices=("enumerate", "file"), default="enumerate")
    v.add_argument("--input", action="append", help="graph6 corpus (repeatable) for --source file")
    v.add_argument("--report", help="JSON report destination (default stdout)")
    v.add_argument("--figures", help="directory for a verdict histogram PNG")
    v.add_argument("--jobs", type=int, default=default_jobs)
    v.set_defaults(func=cmd_verify_theorem)

    g = sub.add_parser("generate", help="write graph6 lines for a graph family")
    g.add_argument("--family", choices=("join",), default="join")
    g.add_argument("--delta", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--inner", choices=("empty", "complete", "random"), default="empty")
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--shuffle", action="store_true", help="randomly relabel vertices")
    g.add_argument("--output")
    g.set_defaults(func=cmd_generate)

    o = sub.add_parser("oracle", help="exact or constructive cycle queries")
    o.add_argument("input")
    o.add_argument("--query", choices=("circumference", "hamilton", "dirac"), required=True)
    o.add_argument("--output")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    return ns.func(ns)


if __name__ == "__main__":
    sys.exit(main())
