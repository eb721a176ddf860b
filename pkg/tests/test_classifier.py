import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import longcycle.classifier as classifier
from longcycle.classifier import (
    Hamiltonian,
    JoinStructure,
    LongCycle,
    LongerCycle,
    Structure,
    check_corollary,
    classify,
    classify_via_proof,
    improve_or_structure,
    recognize_join,
    verify_verdict,
)
from longcycle.connectivity import is_two_connected
from longcycle.errors import NotSimple, NotTwoConnected, PreconditionViolated, TheoremViolation
from longcycle.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    enumerate_labeled_graphs,
    gen_join_family,
    path_graph,
    petersen_graph,
    random_graph,
)
from longcycle.graph import Cycle, Graph, JoinCertificate, min_degree

from mutations import KINDS, mutation_stream
from oracles import brute_join_split, judge_certificate, neighbor_sets
from test_graph import graphs


def test_k23_join():
    v = classify(complete_bipartite(2, 3))
    assert isinstance(v, JoinStructure)
    assert v.certificate.hub == (0, 1) and v.certificate.independent == (2, 3, 4)
    assert v.payload() == {"hub": [0, 1], "independent": [2, 3, 4]}
    assert verify_verdict(complete_bipartite(2, 3), v)


def test_petersen_long_cycle():
    g = petersen_graph()
    v = classify(g)
    assert isinstance(v, LongCycle) and len(v.cycle) == 9 and verify_verdict(g, v)


def test_cycles_hamiltonian():
    for n in range(3, 12):
        v = classify(cycle_graph(n))
        assert isinstance(v, Hamiltonian) and verify_verdict(cycle_graph(n), v)
        assert classify_via_proof(cycle_graph(n)).tag == "hamiltonian"


def six_cycle(g):
    nbrs = neighbor_sets(g)
    for p in permutations(range(g.n), 6):
        if p[0] == min(p) and all(p[i - 1] in nbrs[p[i]] for i in range(6)):
            return Cycle(p)


def test_petersen_improves_six_cycle():
    g = petersen_graph()
    out = improve_or_structure(g, six_cycle(g))
    assert isinstance(out, LongerCycle)
    assert out.cycle.is_valid(g) and len(out.cycle) >= 7


def test_c6_is_not_join():
    assert recognize_join(cycle_graph(6)) is None


def test_forged_short_long_cycle_rejected():
    g = complete_bipartite(2, 3)
    assert not verify_verdict(g, LongCycle(cycle=Cycle([0, 2, 1, 3])))


def test_verify_is_total():
    g = complete_bipartite(2, 3)
    assert not verify_verdict(g, Hamiltonian(cycle=Cycle([0, 9, 1, 2, 3])))
    assert not verify_verdict(g, LongCycle(cycle=Cycle([0, 2, 0, 3, 1])))
    assert not verify_verdict(g, JoinStructure(certificate=JoinCertificate([0, 1], [2, 3])))
    assert not verify_verdict(Graph._trusted(0, []), LongCycle(cycle=Cycle([0, 1, 2])))


def test_classify_rejects_bad_inputs():
    with pytest.raises(NotTwoConnected):
        classify(path_graph(4))
    with pytest.raises(NotTwoConnected):
        classify_via_proof(path_graph(4))
    with pytest.raises(NotSimple):
        classify(Graph._trusted(3, [0b110, 0b100, 0b011]))


def test_missing_join_is_a_theorem_violation(monkeypatch):
    monkeypatch.setattr(classifier, "recognize_join", lambda g: None)
    with pytest.raises(TheoremViolation) as info:
        classify(complete_bipartite(2, 3))
    assert info.value.stage == "recognize" and info.value.graph == complete_bipartite(2, 3)


def test_improve_preconditions():
    g = petersen_graph()
    with pytest.raises(PreconditionViolated):
        improve_or_structure(g, Cycle([0, 1, 2, 3, 4]))
    with pytest.raises(PreconditionViolated):
        improve_or_structure(cycle_graph(4), Cycle([0, 1, 2, 3]))


@pytest.mark.parametrize("n", range(1, 7))
def test_recognize_join_matches_subset_search(n):
    for g in enumerate_labeled_graphs(n):
        cert, brute = recognize_join(g), brute_join_split(g)
        if brute is None:
            assert cert is None
        else:
            assert cert is not None and set(cert.hub) == brute[0]


def test_recognize_join_matches_subset_search_sampled_n7():
    rng = random.Random(7)
    samples = [random_graph(7, rng.uniform(0.1, 0.9), rng) for _ in range(3000)]
    samples += [gen_join_family(d, 7 - d, inner, seed=s, shuffle=True)
                for d in (2, 3) for inner in ("empty", "complete", "random") for s in range(20)]
    for g in samples:
        cert, brute = recognize_join(g), brute_join_split(g)
        assert (cert is None) == (brute is None)
        if cert is not None:
            assert set(cert.hub) == brute[0]


def test_corollary_examples():
    assert check_corollary(complete_bipartite(2, 3))
    assert check_corollary(cycle_graph(5))
    assert check_corollary(petersen_graph())
    assert check_corollary(gen_join_family(3, 5, "random", seed=1))
    with pytest.raises(PreconditionViolated):
        check_corollary(complete_graph(4))
    with pytest.raises(NotTwoConnected):
        check_corollary(path_graph(5))


def test_proof_engine_frame_on_extremal_join():
    g = gen_join_family(3, 4, "complete")
    v = classify_via_proof(g)
    assert isinstance(v, JoinStructure) and v.engine == "proof"
    assert v.frame.p.length == 1 and v.frame.k + 1 == 3
    assert v.certificate.hub == (0, 1, 2)
    assert verify_verdict(g, v)


@pytest.mark.parametrize("delta", [2, 3, 4])
@pytest.mark.parametrize("inner", ["empty", "complete", "random"])
def test_join_family_both_engines(delta, inner):
    for m in range(delta + 1, delta + 4):
        g = gen_join_family(delta, m, inner, seed=m, shuffle=True)
        for engine in (classify, classify_via_proof):
            v = engine(g)
            assert isinstance(v, JoinStructure) and verify_verdict(g, v)
            assert v.certificate.m == m


def test_small_order_non_hamiltonian_are_joins():
    # delta = 2 on 5 vertices; delta = 3 on 7 is covered by the exhaustive sweep
    for g in enumerate_labeled_graphs(5, is_two_connected):
        if min_degree(g) == 2:
            v = classify(g)
            assert v.tag in ("hamiltonian", "join_structure")


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_engines_agree_exhaustive_small(n):
    for g in enumerate_labeled_graphs(n, is_two_connected):
        v, w = classify(g), classify_via_proof(g)
        assert v.tag == w.tag
        assert verify_verdict(g, v) and verify_verdict(g, w)
        if v.tag != "hamiltonian":
            assert g.n >= 2 * min_degree(g) + 1


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_verdicts_verified_and_agree(g):
    if not is_two_connected(g):
        with pytest.raises(NotTwoConnected):
            classify(g)
        return
    v, w = classify(g), classify_via_proof(g)
    assert v.tag == w.tag
    for verdict in (v, w):
        assert verify_verdict(g, verdict)
        assert judge_certificate(g, verdict.tag, verdict.payload())


def verdict_pool(fixture_graphs):
    pool = [(g, classify(g)) for g in fixture_graphs[8][:150]]
    for d in (2, 3, 4):
        for m in range(d + 1, d + 4):
            g = gen_join_family(d, m, "random", seed=d * m, shuffle=True)
            pool.append((g, classify(g)))
    return pool


def test_mutations_rejected(fixture_graphs):
    pool = verdict_pool(fixture_graphs)
    assert {v.tag for _, v in pool} == {"hamiltonian", "long_cycle", "join_structure"}
    kinds = set()
    for kind, g, v in mutation_stream(pool, 300, seed=3):
        kinds.add(kind)
        assert not judge_certificate(g, v.tag, v.payload())
        assert not verify_verdict(g, v)
    assert kinds == set(KINDS)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8), st.data())
def test_verify_matches_reference_on_arbitrary_certificates(g, data):
    n = g.n
    if n < 3:
        return
    kind = data.draw(st.sampled_from(["hamiltonian", "long_cycle", "join_structure"]))
    if kind == "join_structure":
        hub = data.draw(st.lists(st.integers(0, n - 1), max_size=n, unique=True))
        rest = [v for v in range(n) if v not in hub]
        v = JoinStructure(certificate=JoinCertificate(hub, rest))
    else:
        cyc = data.draw(st.lists(st.integers(0, n - 1), min_size=3, max_size=n, unique=True))
        v = (Hamiltonian if kind == "hamiltonian" else LongCycle)(cycle=Cycle(cyc))
    assert verify_verdict(g, v) == judge_certificate(g, v.tag, v.payload())
