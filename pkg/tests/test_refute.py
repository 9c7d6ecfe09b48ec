import itertools

import pytest
from hypothesis import given, settings

from helpers import atlas, graphs
from sspgraph.graph import (
    Graph,
    complement,
    complete,
    complete_bipartite,
    corona_empty,
    cycle,
    empty,
    path,
    petersen,
    tensor,
)
from sspgraph.linalg import RatMatrix, adjacency, in_S
from sspgraph.refute import (
    A_98,
    A_99,
    G_98,
    G_99,
    X_98,
    X_99,
    BarbellPartition,
    Witness,
    WitnessError,
    barbell_search,
    barbell_witness,
    c4_witness,
    cocktail_witness,
    complement_path_witness,
    corona_lift,
    cut_vertex_partition,
    is_barbell_partition,
    kn_minus_c4_witness,
    kron_lift,
    named_witness,
    regular_witness,
    relabel_witness,
    sample_refute,
    tensor_lift,
    tree_partition,
    unicyclic_partition,
    verify_witness,
)
from sspgraph.strong import has_property


def brute_force_barbell(g: Graph) -> bool:
    for colours in itertools.product(range(3), repeat=g.n):
        p = BarbellPartition(
            frozenset(v for v in range(g.n) if colours[v] == 0),
            frozenset(v for v in range(g.n) if colours[v] == 1),
            frozenset(v for v in range(g.n) if colours[v] == 2),
        )
        if is_barbell_partition(g, p):
            return True
    return False


class TestVerify:
    def test_c4(self):
        a = adjacency(cycle(4))
        x = RatMatrix.ones(4) - a - RatMatrix.identity(4)
        assert verify_witness(Witness(cycle(4), a, x, "hand"))

    def test_zero_x(self):
        a = adjacency(cycle(4))
        assert not verify_witness(Witness(cycle(4), a, RatMatrix.zeros(4), "hand"))

    def test_pattern_mismatch(self):
        w = c4_witness()
        assert not verify_witness(Witness(path(4), w.A, w.X, "hand"))

    def test_fixed_matrices(self):
        assert verify_witness(Witness(G_98, A_98, X_98, "fixed"))
        assert verify_witness(Witness(G_99, A_99, X_99, "fixed"))
        assert not has_property(A_98, "ssp") and not has_property(A_99, "ssp")
        assert verify_witness(named_witness("G98")) and verify_witness(named_witness("G99"))

    def test_relabel(self):
        w = relabel_witness(c4_witness(), [2, 0, 3, 1])
        assert verify_witness(w)


class TestBarbell:
    def test_examples(self):
        p = barbell_search(empty(2))
        assert p.R == frozenset() and {p.W1, p.W2} == {frozenset({0}), frozenset({1})}
        assert barbell_search(complete_bipartite(1, 3)) is None
        double_star = Graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
        p = barbell_search(double_star)
        assert p.R == frozenset({0, 1})
        assert verify_witness(barbell_witness(double_star, p))

    def test_star_k14(self):
        g = complete_bipartite(1, 4)
        p = cut_vertex_partition(g)
        assert p.R == frozenset({0}) and len(p.W1) == len(p.W2) == 2
        assert verify_witness(barbell_witness(g, p))

    def test_unicyclic_off_cycle_vertex(self):
        # triangle with a degree-3 vertex hanging off it
        g = Graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (3, 5)])
        p = unicyclic_partition(g)
        assert p is not None and verify_witness(barbell_witness(g, p))

    def test_two_isolated_vertices(self):
        w = barbell_witness(empty(2), barbell_search(empty(2)))
        assert w.X == RatMatrix([[0, 1], [1, 0]])

    def test_witness_annihilates(self):
        g = complete_bipartite(1, 4)
        w = barbell_witness(g, barbell_search(g))
        assert (w.A @ w.X).is_zero()

    @pytest.mark.parametrize("g", atlas(6), ids=lambda g: f"n{g.n}e{g.num_edges()}")
    def test_against_brute_force(self, g):
        p = barbell_search(g)
        assert (p is not None) == brute_force_barbell(g)
        if p is not None:
            assert is_barbell_partition(g, p)
            w = barbell_witness(g, p)
            assert verify_witness(w) and (w.A @ w.X).is_zero()

    @settings(max_examples=25, deadline=None)
    @given(graphs(min_n=7, max_n=7))
    def test_against_brute_force_n7(self, g):
        assert (barbell_search(g) is not None) == brute_force_barbell(g)

    def test_tree_partition(self):
        g = Graph(8, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (4, 6), (5, 7)])
        p = tree_partition(g)
        assert p is not None and verify_witness(barbell_witness(g, p))

    def test_search_cap(self):
        with pytest.raises(ValueError):
            barbell_search(path(20))


class TestRegular:
    @pytest.mark.parametrize("n", range(4, 9))
    def test_cycles(self, n):
        w = regular_witness(cycle(n))
        assert verify_witness(w)
        assert not has_property(adjacency(cycle(n)), "ssp")

    def test_c5_and_petersen(self):
        assert verify_witness(regular_witness(petersen()))
        assert not has_property(adjacency(petersen()), "ssp")

    def test_complete_and_irregular(self):
        assert regular_witness(complete(4)) is None
        assert regular_witness(path(4)) is None


class TestLifts:
    def test_corona(self):
        w = corona_lift(c4_witness(), 3)
        assert w.graph == corona_empty(cycle(4), 2)
        assert verify_witness(w)

    def test_tensor(self):
        w = tensor_lift(c4_witness(), complete(2))
        assert w.graph == tensor(complete(2), cycle(4))
        assert verify_witness(w)

    def test_all_zero_rejected(self):
        with pytest.raises(ValueError):
            kron_lift([RatMatrix.zeros(2)], RatMatrix.identity(2), c4_witness())


class TestConstructions:
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_complement_path(self, m):
        w = complement_path_witness(m)
        target = complement(path(3 * m))
        assert w.graph == target and in_S(w.A, target) and verify_witness(w)

    def test_complement_path_block_zeros(self):
        w = complement_path_witness(2)
        # consecutive path pairs are exactly the zero off-diagonal entries
        zeros = {(i, j) for i in range(6) for j in range(i + 1, 6) if w.A[i, j] == 0}
        assert zeros == {(i, i + 1) for i in range(5)}

    @pytest.mark.parametrize("n", range(4, 8))
    def test_kn_minus_c4(self, n):
        w = kn_minus_c4_witness(n)
        assert verify_witness(w)
        assert w.graph == complement(Graph(n, [(0, 1), (1, 2), (2, 3), (3, 0)]))

    def test_kn_minus_c4_small_case(self):
        w = kn_minus_c4_witness(4)
        assert w.A == RatMatrix([[1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1]])
        assert w.X == RatMatrix([[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])
        big = kn_minus_c4_witness(6)
        assert big.A.submatrix(range(4), range(4, 6)) == RatMatrix([[1, 1], [1, 1], [-1, -1], [-1, -1]])

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_cocktail(self, n):
        w = cocktail_witness(n)
        assert verify_witness(w)
        assert all(not w.graph.has_edge(2 * i, 2 * i + 1) for i in range(n))
        assert w.graph.num_edges() == 2 * n * (2 * n - 1) // 2 - n

    def test_cocktail_two_is_c4(self):
        w = cocktail_witness(2)
        assert regular_witness(w.graph) is not None


class TestSampling:
    def test_p5_never_refuted(self):
        assert sample_refute(path(5), 20, seed=0) is None

    def test_k3(self):
        assert sample_refute(complete(3), 5, seed=0) is None

    def test_c6_any_return_verifies(self):
        w = sample_refute(cycle(6), 10, seed=0)
        assert w is None or verify_witness(w)

    @settings(max_examples=30, deadline=None)
    @given(graphs(max_n=6))
    def test_returns_only_verified(self, g):
        w = sample_refute(g, 3, seed=g.num_edges())
        assert w is None or (verify_witness(w) and w.graph == g)

    def test_checked(self):
        w = c4_witness()
        with pytest.raises(WitnessError):
            relabel_witness(Witness(w.graph, w.A, RatMatrix.zeros(4), "bad"), [0, 1, 2, 3])
