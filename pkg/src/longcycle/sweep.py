"""Theorem verification harness: run every check on a stream of graphs and tally results."""

from __future__ import annotations

import logging
import os
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .classifier import check_corollary, classify, classify_via_proof, verify_verdict
from .connectivity import is_two_connected
from .dirac import dirac_cycle
from .errors import GraphError, TheoremViolation
from .generators import iter_labeled_adjacency
from .graph import Graph, min_degree
from .graph6 import encode_graph6

log = logging.getLogger(__name__)

CHECKS = (
    "classified",
    "verified",
    "extremal_recognized",
    "degree_bound",
    "engine_agreement",
    "proof_verified",
    "dirac_bound",
    "corollary",
    "tight_order_join",
)
MAX_COUNTEREXAMPLES = 20


@dataclass
class SweepReport:
    graphs: int = 0
    tags: dict = field(default_factory=lambda: defaultdict(Counter))
    proof_steps: Counter = field(default_factory=Counter)
    checked: Counter = field(default_factory=Counter)
    violations: Counter = field(default_factory=Counter)
    counterexamples: list = field(default_factory=list)

    def merge(self, other: "SweepReport") -> None:
        self.graphs += other.graphs
        for n, counts in other.tags.items():
            self.tags[n].update(counts)
        self.proof_steps.update(other.proof_steps)
        self.checked.update(other.checked)
        self.violations.update(other.violations)
        room = MAX_COUNTEREXAMPLES - len(self.counterexamples)
        self.counterexamples.extend(other.counterexamples[:room])

    @property
    def ok(self) -> bool:
        return not self.violations and self.graphs > 0

    def to_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "ok": self.ok,
            "verdicts_by_n": {str(n): dict(sorted(c.items())) for n, c in sorted(self.tags.items())},
            "checked": {k: self.checked[k] for k in CHECKS},
            "violations": {k: self.violations[k] for k in CHECKS},
            "proof_steps": dict(sorted(self.proof_steps.items())),
            "counterexamples": self.counterexamples,
        }


def _fail(report: SweepReport, check: str, g: Graph, detail: str) -> None:
    report.violations[check] += 1
    if len(report.counterexamples) < MAX_COUNTEREXAMPLES:
        report.counterexamples.append({"check": check, "graph6": encode_graph6(g), "detail": detail})


def check_graph(g: Graph, report: SweepReport) -> None:
    """Run every theorem-level check on one 2-connected graph."""
    report.graphs += 1
    n, delta = g.n, min_degree(g)
    checked = report.checked

    checked["classified"] += 1
    try:
        v = classify(g)
    except (TheoremViolation, GraphError) as exc:
        _fail(report, "classified", g, f"{type(exc).__name__}: {exc}")
        return
    report.tags[n][v.tag] += 1

    checked["verified"] += 1
    if not verify_verdict(g, v):
        _fail(report, "verified", g, f"{v.tag} certificate rejected")

    if v.tag != "hamiltonian":
        checked["degree_bound"] += 1
        if n < 2 * delta + 1:
            _fail(report, "degree_bound", g, "non-Hamiltonian with n <= 2*delta")
        if n == 2 * delta + 1:
            checked["tight_order_join"] += 1
            if v.tag != "join_structure":
                _fail(report, "tight_order_join", g, f"{v.tag} on n = 2*delta+1")
        if v.tag == "join_structure":
            checked["extremal_recognized"] += 1
            if v.certificate.m <= delta:
                _fail(report, "extremal_recognized", g, "join with m <= delta")

    checked["engine_agreement"] += 1
    checked["proof_verified"] += 1
    try:
        w = classify_via_proof(g)
    except (TheoremViolation, GraphError) as exc:
        _fail(report, "engine_agreement", g, f"proof engine: {type(exc).__name__}: {exc}")
    else:
        report.proof_steps.update(w.steps)
        if w.tag != v.tag:
            _fail(report, "engine_agreement", g, f"oracle {v.tag} vs proof {w.tag}")
        if not verify_verdict(g, w):
            _fail(report, "proof_verified", g, f"proof {w.tag} certificate rejected")

    checked["dirac_bound"] += 1
    try:
        c = dirac_cycle(g)
    except (TheoremViolation, GraphError) as exc:
        _fail(report, "dirac_bound", g, f"{type(exc).__name__}: {exc}")
    else:
        if not c.is_valid(g) or len(c) < min(n, 2 * delta):
            _fail(report, "dirac_bound", g, f"cycle of length {len(c)}")

    if n >= 2 * delta + 1:
        checked["corollary"] += 1
        if not check_corollary(g):
            _fail(report, "corollary", g, "biconditional fails")


def sweep_graphs(graphs: Iterable[Graph]) -> SweepReport:
    report = SweepReport()
    for g in graphs:
        check_graph(g, report)
    return report


def _sweep_chunk(args: tuple[int, int, int]) -> SweepReport:
    n, start, stop = args
    report = SweepReport()
    for _, adj in iter_labeled_adjacency(n, start, stop):
        if min(a.bit_count() for a in adj) < 2:
            continue
        g = Graph._trusted(n, adj)
        if is_two_connected(g):
            check_graph(g, report)
    return report


def sweep_enumerated(max_n: int, jobs: int | None = None, min_n: int = 3) -> SweepReport:
    """Every labeled 2-connected graph with ``min_n <= n <= max_n`` vertices."""
    jobs = jobs or os.cpu_count() or 1
    tasks = []
    for n in range(min_n, max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        pieces = max(1, min(total // 4096, 4 * jobs))
        step = -(-total // pieces)
        tasks += [(n, lo, min(lo + step, total)) for lo in range(0, total, step)]
    report = SweepReport()
    if jobs == 1:
        for task in tasks:
            report.merge(_sweep_chunk(task))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_sweep_chunk, tasks):
                report.merge(part)
    return report
