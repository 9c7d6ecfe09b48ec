"""End-to-end acceptance criteria, one test (or parametrized group) per criterion.

Each test times itself against its budget; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import itertools
import random
import time
from contextlib import contextmanager

import networkx as nx
import pytest

from helpers import from_nx
from sspgraph.classify import Settings, all_stage_verdicts, classify, classify_tree
from sspgraph.forcing import OddCycleForce, SpiderForce, close, replay
from sspgraph.graph import (
    Graph,
    complement,
    complete,
    corona_empty,
    cycle,
    lollipop,
    parse_graph6,
    path,
    path_with_chord,
    petersen,
    spider,
)
from sspgraph.linalg import RatMatrix, adjacency, in_S, sample_in_S
from sspgraph.refute import (
    A_98,
    A_99,
    G_98,
    G_99,
    X_98,
    X_99,
    Witness,
    barbell_search,
    c4_witness,
    cocktail_witness,
    complement_path_witness,
    corona_lift,
    kn_minus_c4_witness,
    regular_witness,
    verify_witness,
)
from sspgraph.strong import has_property


@contextmanager
def budget(seconds: float):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.1f} s, budget {seconds} s"


@pytest.mark.acceptance(1)
def test_lollipop_trace():
    with budget(1):
        cert = close(lollipop(3, 2))
        assert cert.final == complete(5)
        # the same set in one-based labels is these plus one
        assert {s.added for s in cert.steps} == {(0, 2), (1, 3), (1, 4), (0, 3), (0, 4)}
        assert len(cert.steps) == 5
        assert replay(cert)


@pytest.mark.acceptance(2)
def test_paths_close():
    with budget(5):
        for n in range(1, 13):
            assert close(path(n)).final == complete(n)


def _prufer_trees(n: int):
    if n == 1:
        yield Graph(1)
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield from_nx(nx.from_prufer_sequence(list(seq)))


@pytest.mark.acceptance(3)
def test_tree_theorem_all_labeled_trees():
    counts = {}
    with budget(600):
        for n in range(1, 9):
            total = 0
            for t in _prufer_trees(n):
                v = classify_tree(t)
                if v.is_out:
                    assert barbell_search(t) is not None, t
                    assert verify_witness(v.witness)
                else:
                    assert v.is_in and close(t).complete, t
                total += 1
            counts[n] = total
    assert counts == {n: max(1, n ** (n - 2)) for n in range(1, 9)}


@pytest.mark.acceptance(4)
def test_complement_path_dichotomy():
    with budget(30):
        for n in (4, 5, 7, 8, 10, 11):
            v = classify(complement(path(n)))
            assert v.is_in
            assert v.certificate.final == complete(n) and replay(v.certificate)
        for n in (6, 9, 12):
            g = complement(path(n))
            v = classify(g)
            assert v.is_out and v.witness.graph == g and verify_witness(v.witness)


@pytest.mark.acceptance(5)
def test_fixed_matrices():
    with budget(1):
        assert verify_witness(Witness(G_98, A_98, X_98, "fixed"))
        assert verify_witness(Witness(G_99, A_99, X_99, "fixed"))
        assert has_property(A_98, "ssp") is False
        assert has_property(A_99, "ssp") is False


@pytest.mark.acceptance(6)
def test_regular_family():
    with budget(1):
        for g in [cycle(n) for n in range(4, 9)] + [petersen()]:
            assert verify_witness(regular_witness(g))
            assert not has_property(adjacency(g), "ssp")


@pytest.mark.acceptance(7)
def test_odd_cycle_and_spider_forces():
    with budget(5):
        for n in range(4, 9):
            g = complement(Graph(n, [(0, 1), (1, 2), (0, 2)]))
            v = classify(g)
            assert v.is_in and replay(v.certificate) and v.certificate.complete
            assert any(isinstance(s, OddCycleForce) for s in v.certificate.steps)
        v = classify(spider(2, 3, 4))
        assert v.is_in and replay(v.certificate) and v.certificate.complete
        steps = v.certificate.steps
        assert any(isinstance(s, OddCycleForce) for s in steps)
        assert any(isinstance(s, SpiderForce) for s in steps)


@pytest.mark.acceptance(8)
def test_lollipops_and_chorded_paths():
    graphs = [lollipop(m, n) for m in range(3, 11) for n in range(1, 11 - m)]
    graphs += [path_with_chord(n, m) for n in range(3, 11) for m in range(1, n - 1)]
    with budget(30):
        for g in graphs:
            v = classify(g)
            assert v.is_in, g
            cert = v.certificate
            assert cert is not None and cert.base == g and cert.complete and replay(cert)


@pytest.mark.acceptance(9)
def test_counterexample_constructors():
    with budget(10):
        for n in range(4, 8):
            assert verify_witness(kn_minus_c4_witness(n))
        w = kn_minus_c4_witness(4)
        assert w.A == RatMatrix([[1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1]])
        assert w.X == RatMatrix([[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])
        for n in range(2, 5):
            assert verify_witness(cocktail_witness(n))
        for m in range(2, 5):
            w = complement_path_witness(m)
            assert in_S(w.A, complement(path(3 * m))) and verify_witness(w)
        w = corona_lift(c4_witness(), 3)
        assert w.graph == corona_empty(cycle(4), 2) and verify_witness(w)


@pytest.mark.acceptance(10)
def test_strong_property_chain():
    rng = random.Random(2024)
    with budget(60):
        for k in range(20):
            n = rng.randint(1, 7)
            g = Graph(n, [p for p in itertools.combinations(range(n), 2) if rng.random() < 0.5])
            for s in range(5):
                a = sample_in_S(g, 100 * k + s)
                ssp, smp, sap = (has_property(a, p) for p in ("ssp", "smp", "sap"))
                assert (not ssp or smp) and (not smp or sap), (g, s)


@pytest.mark.acceptance(11)
def test_known_table_and_unknown():
    with budget(30):
        c4_pendant = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
        v = classify(c4_pendant)
        assert v.is_in and v.stage == "known-table"
        assert all(has_property(sample_in_S(c4_pendant, seed), "ssp") for seed in range(100))
        c5_pendant = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
        v = classify(c5_pendant, Settings(trials=20))
        assert v.status == "unknown" and v.samples_passed == 20


def _graph6_upto(n: int) -> list[str]:
    return [
        nx.to_graph6_bytes(h, header=False).decode().strip()
        for h in nx.graph_atlas_g()
        if 1 <= h.number_of_nodes() <= n
    ]


@pytest.mark.acceptance(12)
def test_exclusivity_all_graphs_to_six():
    lines = _graph6_upto(6)
    assert len(lines) == 208
    with budget(900):
        for line in lines:
            g = parse_graph6(line)
            ins, outs = [], []
            for v in all_stage_verdicts(g, Settings(trials=5)):
                if v.is_out:
                    assert verify_witness(v.witness) and v.witness.graph == g
                    outs.append(v)
                elif v.certificate is not None:
                    assert replay(v.certificate) and v.certificate.complete
                    ins.append(v)
                else:
                    ins.append(v)
            assert not (ins and outs), line
