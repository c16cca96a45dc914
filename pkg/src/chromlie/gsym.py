"""G-analogues of elementary and power-sum symmetric functions.

``e^G_i`` is the sum of ``v^{chi(S)}`` over i-element stable sets S and
``p^G_n`` is defined by

    -log(1 - e^G_1 X + e^G_2 X^2 - ...) = sum_n p^G_n X^n / n.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import BoundTooSmall, IntegralityError
from .graph import Graph, indicator, independence_number, stable_sets
from .rootmult import MultTable
from .series import QSeries, series_log, series_mul
from .symfunc import NVarPoly, monomial_sym, partitions_of


def elementary_g(g: Graph, i: int) -> QSeries:
    if i < 0:
        raise ValueError("degree must be non-negative")
    terms = {indicator(g, s): 1 for s in stable_sets(g, i) if len(s) == i}
    return QSeries(g.n, i, terms)


def elementary_g_partition(g: Graph, lam: Sequence[int], cap: Sequence[int] | None = None) -> QSeries:
    """Product of ``e^G_part`` over the parts; with ``cap``, only exponents below it are kept."""
    bound = sum(lam)
    result = QSeries.one(g.n, bound)
    for part in lam:
        factor = elementary_g(g, part)
        result = series_mul(result, QSeries(g.n, bound, dict(factor.items())), cap)
    return result


def signed_elementary_series(g: Graph, bound: int) -> QSeries:
    """sum_i (-1)^i e^G_i X^i with X as an extra last coordinate."""
    terms = {}
    for s in stable_sets(g, bound):
        terms[indicator(g, s) + (len(s),)] = (-1) ** len(s)
    return QSeries(g.n + 1, 2 * bound, terms)


def powersum_g_via_log(g: Graph, n: int) -> QSeries:
    if n < 1:
        raise ValueError("degree must be at least 1")
    # every term has X-degree equal to its v-height, so total height 2n
    # truncates both gradings at n
    log_series = -series_log(signed_elementary_series(g, n))
    terms = {}
    for exp, c in log_series.items():
        if exp[-1] == n:
            value = c * n
            if Fraction(value).denominator != 1:
                raise IntegralityError(f"p^G_{n} coefficient {value} at {exp[:-1]} is not an integer")
            terms[exp[:-1]] = int(value)
    return QSeries(g.n, n, terms)


def powersum_g_closed_form(g: Graph, n: int, mults: MultTable) -> QSeries:
    """p^G_n = sum_{ht a = n} (sum_{d | a} (n/d) mult(a/d)) v^a."""
    if mults.bound < n:
        raise BoundTooSmall(f"multiplicity table bound {mults.bound} < {n}")
    terms = {}
    for root, m in mults.items():
        h = sum(root)
        if n % h:
            continue
        d = n // h
        terms[tuple(d * x for x in root)] = terms.get(tuple(d * x for x in root), 0) + h * m
    return QSeries(g.n, n, terms)


def t_function_coefficient(g: Graph, k: Sequence[int], nvars: int) -> NVarPoly:
    """[v^k] of sum over stable number partitions lambda of m_lambda(x) e^G_lambda(v)."""
    k = tuple(k)
    total = NVarPoly(nvars)
    alpha = independence_number(g)
    for lam in partitions_of(sum(k), alpha):
        coef = elementary_g_partition(g, lam, cap=k)[k]
        if coef:
            total = total + monomial_sym(lam, nvars) * coef
    return total
