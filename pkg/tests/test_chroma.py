from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromlie.chroma import (ChromaticPolynomial, binomial_poly, chmply_from_mults,
                             chromatic_discriminant, count_colorings_brute, csf_bruteforce,
                             csf_from_bond_mults, csf_mainthm, csf_root_expansion, csf_stanley,
                             gen_chromatic_poly, join_graph, plethystic_elementary,
                             stable_tuple_counts, weight_factorial)
from chromlie.errors import BoundTooSmall, BudgetExceeded
from chromlie.graph import Graph, complete_graph, edgeless_graph, path_graph
from chromlie.rootmult import mult_table
from chromlie.symfunc import NVarPoly, PowerSumExpr, powersum_expand
from conftest import graphs
from oracles import chromatic_dc, count_multicolourings

K2, P3, K3 = complete_graph(2), path_graph(3), complete_graph(3)
p = PowerSumExpr.p


def weights(g, top=2, low=0):
    return st.lists(st.integers(low, top), min_size=g.n, max_size=g.n).map(tuple).filter(any)


class TestCounting:
    def test_examples(self):
        assert count_colorings_brute(K2, (1, 1), 2) == 2
        assert count_colorings_brute(K2, (1, 1), 0) == 0
        assert count_colorings_brute(P3, (1, 1, 1), 2) == 2

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            count_colorings_brute(K3, (1, 1, 1), 50, budget=1000)

    @given(graphs(max_n=4), st.data())
    @settings(max_examples=40)
    def test_against_subset_oracle(self, g, data):
        k = data.draw(weights(g))
        q = data.draw(st.integers(0, 5))
        assert count_colorings_brute(g, k, q) == count_multicolourings(g.n, g.edges, k, q)


class TestStableTuples:
    def test_examples(self):
        assert stable_tuple_counts(K2, (1, 1)) == {2: 2}
        assert stable_tuple_counts(edgeless_graph(2), (1, 1)) == {1: 1, 2: 2}

    def test_repeated_set_counted_once_per_ordering(self):
        # the tuples are the orderings of ({1}, {1}, {2}): three of them
        assert stable_tuple_counts(K2, (2, 1)) == {3: 3}


class TestChromaticPolynomial:
    def test_examples(self):
        assert gen_chromatic_poly(K2, (1, 1)) == ChromaticPolynomial([0, -1, 1])
        assert gen_chromatic_poly(P3) == ChromaticPolynomial([0, 1, -2, 1])

    def test_k2_21_matches_counting(self):
        pi = gen_chromatic_poly(K2, (2, 1))
        # C(q,2) (q-2) = q(q-1)(q-2)/2
        assert pi == ChromaticPolynomial([0, 1, Fraction(-3, 2), Fraction(1, 2)])
        assert [pi(q) for q in range(6)] == [count_multicolourings(2, K2.edges, (2, 1), q) for q in range(6)]

    @given(graphs(max_n=5))
    @settings(max_examples=40)
    def test_k1_matches_deletion_contraction(self, g):
        assert list(gen_chromatic_poly(g).coeffs) == chromatic_dc(g.n, g.edges)

    @given(graphs(max_n=4), st.data())
    @settings(max_examples=30)
    def test_interpolates_counts(self, g, data):
        k = data.draw(weights(g))
        pi = gen_chromatic_poly(g, k)
        for q in range(sum(k) + 2):
            assert pi(q) == count_multicolourings(g.n, g.edges, k, q)

    def test_arithmetic_and_json(self):
        a = ChromaticPolynomial([1, 2])
        b = ChromaticPolynomial([0, Fraction(1, 2)])
        assert (a * b) == ChromaticPolynomial([0, Fraction(1, 2), 1])
        assert (a + b).to_json() == {"coeffs": ["1", "5/2"]}
        assert ChromaticPolynomial([0, 0]) == ChromaticPolynomial([])

    def test_binomial_poly(self):
        # C(2q, 2) = q(2q - 1)
        assert binomial_poly(2, 2) == ChromaticPolynomial([0, -1, 2])
        assert binomial_poly(0, 1) == ChromaticPolynomial([])
        assert binomial_poly(3, 0) == ChromaticPolynomial([1])


class TestChromaticFromRoots:
    def test_examples(self):
        assert chmply_from_mults(K2, (1, 1), mult_table(K2, 2)) == ChromaticPolynomial([0, -1, 1])
        assert chmply_from_mults(P3, (1, 1, 1), mult_table(P3, 3)) == ChromaticPolynomial([0, 1, -2, 1])
        assert chmply_from_mults(K2, (2, 2), mult_table(K2, 4)) == gen_chromatic_poly(K2, (2, 2))

    def test_sign_from_distinct_parts_disagrees(self):
        t = mult_table(K2, 3)
        assert chmply_from_mults(K2, (2, 1), t) == gen_chromatic_poly(K2, (2, 1))
        assert chmply_from_mults(K2, (2, 1), t, sign_count="underlying") != gen_chromatic_poly(K2, (2, 1))

    def test_bound_checked(self):
        with pytest.raises(BoundTooSmall):
            chmply_from_mults(K2, (2, 2), mult_table(K2, 3))

    @given(graphs(max_n=4), st.data())
    @settings(max_examples=30)
    def test_equals_direct(self, g, data):
        k = data.draw(weights(g))
        assert chmply_from_mults(g, k, mult_table(g, sum(k))) == gen_chromatic_poly(g, k)


class TestSymmetricFunction:
    def test_bruteforce_examples(self):
        assert csf_bruteforce(K2, (1, 1), 2) == NVarPoly(2, {(1, 1): 2})
        assert csf_bruteforce(K2, (1, 1), 3) == NVarPoly(3, {(1, 1, 0): 2, (1, 0, 1): 2, (0, 1, 1): 2})
        assert csf_bruteforce(Graph(1, frozenset()), (2,), 2) == NVarPoly(2, {(1, 1): 1})

    def test_literal_formula_examples(self):
        assert csf_mainthm(K2, (1, 1), mult_table(K2, 2)) == p(1, 1) - p(2)
        assert csf_mainthm(P3, (1, 1, 1), mult_table(P3, 3)) == p(1, 1, 1) - p(2, 1) * 2 + p(3)

    def test_literal_formula_counterexample(self):
        # K2 with k = (2,1): X = 3 x1 x2 x3 in three variables, but the binomial
        # formula gives p_3 - p_21 (the bond {(1,0),(1,0),(0,1)} gets weight
        # C(1,2) = 0 and the non-root part (2,0) kills another bond)
        t = mult_table(K2, 3)
        literal = csf_mainthm(K2, (2, 1), t)
        assert literal == p(3) - p(2, 1)
        assert powersum_expand(literal, 3) != csf_bruteforce(K2, (2, 1), 3)

    def test_root_expansion_fixes_counterexample(self):
        got = csf_root_expansion(K2, (2, 1), mult_table(K2, 3))
        assert got == p(1, 1, 1) * Fraction(1, 2) - p(2, 1) * Fraction(3, 2) + p(3)
        assert powersum_expand(got, 3) == NVarPoly(3, {(1, 1, 1): 3})

    def test_plethystic_elementary(self):
        # e_2[p_1] = (p_11 - p_2)/2 and e_2[2 p_1] = 2 p_11 - p_2
        assert plethystic_elementary(2, 1, 1) == (p(1, 1) - p(2)) * Fraction(1, 2)
        assert plethystic_elementary(2, 2, 1) == p(1, 1) * 2 - p(2)

    @given(graphs(max_n=4, connected=True), st.data())
    @settings(max_examples=30)
    def test_root_expansion_matches_bruteforce(self, g, data):
        k = data.draw(weights(g, low=0))
        ht = sum(k)
        if ht > 6:
            return
        expr = csf_root_expansion(g, k, mult_table(g, ht))
        assert powersum_expand(expr, ht) == csf_bruteforce(g, k, ht)

    @given(graphs(max_n=5, connected=True))
    @settings(max_examples=25)
    def test_three_routes_at_k_one(self, g):
        ones = (1,) * g.n
        t = mult_table(g, g.n, cap=ones)
        literal = csf_mainthm(g, ones, t)
        assert literal == csf_stanley(g) == csf_from_bond_mults(g, t)
        assert powersum_expand(literal, g.n) == csf_bruteforce(g, ones, g.n)

    @given(graphs(max_n=4), st.data())
    @settings(max_examples=30)
    def test_specialisation_counts_colourings(self, g, data):
        k = data.draw(weights(g))
        q = data.draw(st.integers(1, 4))
        assert csf_bruteforce(g, k, q).total() == count_colorings_brute(g, k, q)

    def test_stanley_examples(self):
        assert csf_stanley(K2) == p(1, 1) - p(2)
        assert csf_stanley(P3) == p(1, 1, 1) - p(2, 1) * 2 + p(3)
        assert csf_stanley(K3) == p(1, 1, 1) - p(2, 1) * 3 + p(3) * 2


class TestDiscriminant:
    @pytest.mark.parametrize("g, want", [(K2, 1), (P3, 1), (K3, 2)], ids=str)
    def test_examples(self, g, want):
        assert chromatic_discriminant(g, mult_table(g, g.n)) == want

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            chromatic_discriminant(edgeless_graph(2), mult_table(edgeless_graph(2), 2))


class TestJoin:
    def test_examples(self):
        assert join_graph(K2, (2, 1)) == K3
        assert join_graph(Graph(1, frozenset()), (3,)) == K3
        assert join_graph(P3, (1, 1, 1)) == P3
        assert join_graph(P3, (1, 0, 1)) == edgeless_graph(2)

    def test_empty_weights(self):
        with pytest.raises(ValueError):
            join_graph(K2, (0, 0))

    @given(graphs(max_n=3), st.data())
    @settings(max_examples=30)
    def test_identity(self, g, data):
        k = data.draw(weights(g, top=3))
        lhs = gen_chromatic_poly(g, k) * ChromaticPolynomial([weight_factorial(k)])
        assert lhs == gen_chromatic_poly(join_graph(g, k))
