from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import graphs, small_fracs, symmetric_matrices
from sspgraph.graph import Graph, complete, cycle, path
from sspgraph.linalg import RatMatrix, adjacency, rank_exact, sample_in_S
from sspgraph.refute import A_98, X_98
from sspgraph.strong import (
    PropertyKind,
    block_matrix,
    block_ssp_sufficient,
    build_system,
    has_property,
    property_witness,
    satisfies_constraints,
)

KINDS = list(PropertyKind)


class TestSystem:
    @pytest.mark.parametrize("kind", KINDS)
    def test_complete_graph_has_no_columns(self, kind):
        a = sample_in_S(complete(4), seed=1)
        system = build_system(a, complete(4), kind)
        assert system.matrix.cols == 0 and system.kernel_is_trivial()

    def test_c4_ssp_shape(self):
        system = build_system(adjacency(cycle(4)), cycle(4), "ssp")
        assert system.matrix.shape == (6, 2)
        assert system.pairs == ((0, 2), (1, 3))
        assert system.column_index == {(0, 2): 0, (1, 3): 1}

    def test_c4_smp_adds_trace_rows(self):
        system = build_system(adjacency(cycle(4)), cycle(4), "smp")
        assert system.matrix.shape == (8, 2)

    def test_sap_rows(self):
        system = build_system(adjacency(path(3)), path(3), PropertyKind.SAP)
        assert system.matrix.shape == (9, 1)

    def test_pattern_mismatch(self):
        with pytest.raises(ValueError):
            build_system(adjacency(cycle(4)), path(4), "ssp")


class TestHasProperty:
    @given(st.integers(0, 10**6))
    def test_complete_pattern_always_has_ssp(self, seed):
        a = sample_in_S(complete(3), seed)
        assert all(has_property(a, k) for k in KINDS)

    def test_c4_adjacency_fails_ssp(self):
        a = adjacency(cycle(4))
        assert not has_property(a, "ssp")
        x = property_witness(a, "ssp")
        j_a_i = RatMatrix.ones(4) - a - RatMatrix.identity(4)
        ratio = {x[i, j] / j_a_i[i, j] for i in range(4) for j in range(4) if j_a_i[i, j]}
        assert len(ratio) == 1

    def test_p3_has_ssp(self):
        assert has_property(adjacency(path(3)), "ssp")

    def test_fixed_matrix_kernel(self):
        x = property_witness(A_98, "ssp")
        # one-dimensional kernel, so the witness is a multiple of X_98
        assert rank_exact(RatMatrix([x.flat(), X_98.flat()])) == 1

    def test_non_symmetric(self):
        with pytest.raises(ValueError):
            has_property(RatMatrix([[0, 1], [2, 0]]), "ssp")

    @settings(max_examples=60, deadline=None)
    @given(symmetric_matrices(max_n=5, elems=st.integers(-2, 2).map(Fraction)))
    def test_monotone_chain(self, a):
        ssp, smp, sap = (has_property(a, k) for k in KINDS)
        assert not ssp or smp
        assert not smp or sap

    @settings(max_examples=40, deadline=None)
    @given(symmetric_matrices(max_n=5), small_fracs.filter(bool), st.sampled_from(KINDS))
    def test_scaling_invariance(self, a, c, kind):
        assert has_property(a.scale(c), kind) == has_property(a, kind)

    @settings(max_examples=40, deadline=None)
    @given(symmetric_matrices(max_n=5), small_fracs)
    def test_shift_invariance(self, a, c):
        assert has_property(a + RatMatrix.identity(a.rows).scale(c), "ssp") == has_property(a, "ssp")

    @settings(max_examples=40, deadline=None)
    @given(symmetric_matrices(max_n=5, elems=st.integers(-1, 1).map(Fraction)), st.sampled_from(KINDS))
    def test_witnesses_satisfy_constraints(self, a, kind):
        x = property_witness(a, kind)
        if x is None:
            assert has_property(a, kind)
        else:
            assert not x.is_zero() and x.is_symmetric()
            assert satisfies_constraints(a, x, kind)

    def test_satisfies_rejects_bad_candidates(self):
        a = adjacency(cycle(4))
        assert not satisfies_constraints(a, RatMatrix.identity(4), "ssp")
        assert not satisfies_constraints(a, RatMatrix([[0, 1], [1, 0]]), "ssp")


class TestBlock:
    def test_one_by_one_block(self):
        a = adjacency(path(3))
        b = RatMatrix([[5]])
        c = RatMatrix([[1], [2], [3]])
        assert block_ssp_sufficient(a, b, c)
        assert has_property(block_matrix(a, b, c), "ssp")

    def test_complement_tree(self):
        # pattern of B has complement P_3
        a = RatMatrix([[1]])
        b = RatMatrix([[1, 0, 2], [0, 1, 0], [2, 0, 1]])
        c = RatMatrix([[1, 1, 1]])
        assert block_ssp_sufficient(a, b, c)
        assert has_property(block_matrix(a, b, c), "ssp")

    def test_two_cliques(self):
        a = RatMatrix([[1, 2], [2, 0]])
        b = RatMatrix([[3, -1], [-1, 1]])
        c = RatMatrix.ones(2)
        assert block_ssp_sufficient(a, b, c)
        assert has_property(block_matrix(a, b, c), "ssp")

    @settings(max_examples=30, deadline=None)
    @given(graphs(min_n=1, max_n=3), graphs(min_n=1, max_n=3), st.integers(0, 10**6))
    def test_sufficient_implies_ssp(self, g, h, seed):
        a = sample_in_S(g, seed)
        b = sample_in_S(h, seed + 1)
        c = RatMatrix([[1 + (i + j) % 3 for j in range(h.n)] for i in range(g.n)])
        if not has_property(a, "ssp"):
            return
        if block_ssp_sufficient(a, b, c):
            assert has_property(block_matrix(a, b, c), "ssp")

    def test_errors(self):
        a = RatMatrix([[1]])
        with pytest.raises(ValueError):
            block_ssp_sufficient(a, a, RatMatrix([[0]]))
        with pytest.raises(ValueError):
            block_ssp_sufficient(a, a, RatMatrix([[1, 1]]))
        with pytest.raises(ValueError):
            block_ssp_sufficient(adjacency(cycle(4)), a, RatMatrix.ones(4, 1))
