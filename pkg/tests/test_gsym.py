import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromlie.chroma import csf_bruteforce
from chromlie.graph import complete_graph, edgeless_graph, path_graph
from chromlie.gsym import (elementary_g, elementary_g_partition, powersum_g_closed_form,
                           powersum_g_via_log, signed_elementary_series, t_function_coefficient)
from chromlie.rootmult import independence_series, mult_table
from chromlie.series import QSeries
from chromlie.symfunc import NVarPoly
from conftest import graphs

K2, P3 = complete_graph(2), path_graph(3)


def linear(n):
    return QSeries(n, 1, {tuple(int(i == j) for j in range(n)): 1 for i in range(n)})


class TestElementary:
    @given(graphs(max_n=5))
    def test_low_degrees(self, g):
        assert elementary_g(g, 0) == QSeries.one(g.n, 0)
        assert elementary_g(g, 1) == linear(g.n)

    def test_k2_pair(self):
        assert elementary_g(K2, 2) == QSeries.zero(2, 2)

    def test_partition_products(self):
        assert elementary_g_partition(K2, (1, 1)) == QSeries(2, 2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
        assert elementary_g_partition(K2, (2,)) == QSeries.zero(2, 2)
        want = QSeries(3, 3, {(2, 0, 1): 1, (1, 1, 1): 1, (1, 0, 2): 1})
        assert elementary_g_partition(P3, (2, 1)) == want

    def test_negative_degree(self):
        with pytest.raises(ValueError):
            elementary_g(K2, -1)

    @given(graphs(max_n=5))
    def test_alternating_sum_is_independence_series(self, g):
        total = QSeries.zero(g.n, g.n)
        for i in range(g.n + 1):
            total = total + QSeries(g.n, g.n, dict(elementary_g(g, i).items())).scale((-1) ** i)
        assert total == independence_series(g, g.n)

    @given(graphs(max_n=5), st.integers(0, 5))
    def test_homogeneous(self, g, i):
        assert all(sum(e) == i for e, _ in elementary_g(g, i).items())

    def test_signed_series_layout(self):
        s = signed_elementary_series(P3, 2)
        assert s.n == 4 and s.bound == 4
        assert s[(1, 0, 1, 2)] == 1 and s[(0, 1, 0, 1)] == -1


class TestPowerSum:
    @given(graphs(max_n=4))
    @settings(max_examples=20)
    def test_degree_one(self, g):
        assert powersum_g_via_log(g, 1) == linear(g.n)
        assert powersum_g_closed_form(g, 1, mult_table(g, 1)) == linear(g.n)

    def test_k2_degree_two(self):
        want = QSeries(2, 2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
        assert powersum_g_via_log(K2, 2) == want
        assert powersum_g_closed_form(K2, 2, mult_table(K2, 2)) == want

    def test_edgeless_degree_two(self):
        want = QSeries(2, 2, {(2, 0): 1, (0, 2): 1})
        g = edgeless_graph(2)
        assert powersum_g_via_log(g, 2) == want
        assert powersum_g_closed_form(g, 2, mult_table(g, 2)) == want

    def test_p3_degree_three(self):
        assert powersum_g_via_log(P3, 3) == powersum_g_closed_form(P3, 3, mult_table(P3, 3))

    @given(graphs(max_n=4), st.integers(1, 5))
    @settings(max_examples=30)
    def test_dual_routes_nonnegative_integral_homogeneous(self, g, n):
        via_log = powersum_g_via_log(g, n)
        assert via_log == powersum_g_closed_form(g, n, mult_table(g, n))
        assert all(isinstance(c, int) and c > 0 and sum(e) == n for e, c in via_log.items())

    def test_degree_validation(self):
        with pytest.raises(ValueError):
            powersum_g_via_log(K2, 0)


class TestTFunction:
    def test_k2_ones(self):
        assert t_function_coefficient(K2, (1, 1), 2) == NVarPoly(2, {(1, 1): 2})

    def test_k2_twos(self):
        assert t_function_coefficient(K2, (2, 2), 2) == csf_bruteforce(K2, (2, 2), 2)
        assert t_function_coefficient(K2, (2, 2), 4) == csf_bruteforce(K2, (2, 2), 4)

    def test_p3_ones(self):
        assert t_function_coefficient(P3, (1, 1, 1), 3) == csf_bruteforce(P3, (1, 1, 1), 3)

    def test_too_few_variables_is_zero_not_error(self):
        assert t_function_coefficient(K2, (1, 1), 1) == NVarPoly(1, {})

    @given(graphs(max_n=4), st.data())
    @settings(max_examples=30)
    def test_matches_bruteforce(self, g, data):
        k = tuple(data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n)))
        if not any(k):
            return
        n = data.draw(st.integers(1, sum(k)))
        assert t_function_coefficient(g, k, n) == csf_bruteforce(g, k, n)
