#!/usr/bin/env python3
"""Regenerate the n=8 and n=9 graph6 corpora under tests/fixtures/.

Each corpus mixes seeded random 2-connected graphs (biased toward
non-Hamiltonian ones), every join-family member on that many vertices, and
one-edge perturbations of those join graphs.
"""

from __future__ import annotations

import argparse
import random
from itertools import combinations
from pathlib import Path

from longcycle.connectivity import is_two_connected
from longcycle.generators import gen_join_family, random_graph, relabel
from longcycle.graph import from_edge_list
from longcycle.graph6 import encode_graph6
from longcycle.oracles import hamilton_cycle_exact

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def corpus(n: int, seed: int, random_ham: int, random_nonham: int) -> list[str]:
    rng = random.Random(seed)
    lines: dict[str, None] = {}

    for delta in range(2, n):
        m = n - delta
        if m <= delta:
            break
        for inner in ("empty", "complete", "random"):
            for rep in range(3):
                g = gen_join_family(delta, m, inner, seed=rng.randrange(1 << 30), shuffle=rep > 0)
                lines[encode_graph6(g)] = None
                non_edges = [e for e in combinations(range(n), 2) if not g.has_edge(*e)]
                for e in rng.sample(non_edges, min(3, len(non_edges))):
                    lines[encode_graph6(g.add_edges([e]))] = None
                edges = list(g.edges())
                for e in rng.sample(edges, min(3, len(edges))):
                    h = from_edge_list(n, [f for f in edges if f != e])
                    if is_two_connected(h):
                        lines[encode_graph6(h)] = None

    ham = nonham = 0
    attempts = 0
    while (ham < random_ham or nonham < random_nonham) and attempts < 2_000_000:
        attempts += 1
        g = random_graph(n, rng.uniform(0.2, 0.55), rng)
        if not is_two_connected(g):
            continue
        is_ham = hamilton_cycle_exact(g) is not None
        if is_ham and ham < random_ham:
            ham += 1
        elif not is_ham and nonham < random_nonham:
            nonham += 1
        else:
            continue
        perm = list(range(n))
        rng.shuffle(perm)
        lines[encode_graph6(relabel(g, perm))] = None
    return list(lines)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=20261014)
    parser.add_argument("--hamiltonian", type=int, default=150)
    parser.add_argument("--non-hamiltonian", type=int, default=350)
    args = parser.parse_args()
    FIXTURES.mkdir(parents=True, exist_ok=True)
    for n in (8, 9):
        lines = corpus(n, args.seed + n, args.hamiltonian, args.non_hamiltonian)
        path = FIXTURES / f"two_connected_n{n}.g6"
        path.write_text("".join(line + "\n" for line in lines))
        print(f"{path}: {len(lines)} graphs")


if __name__ == "__main__":
    main()
