"""Generalised chromatic polynomials and k-chromatic symmetric functions.

A proper k-multicolouring gives vertex ``i`` a set of ``k_i`` colours with
adjacent vertices receiving disjoint sets. Its symmetric function is the
sum over such colourings of the product of the colour variables used.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, prod
from typing import Iterable, Sequence

from .errors import BoundTooSmall, BudgetExceeded, IntegralityError
from .graph import Graph, RootVector, components, stable_sets, indicator
from .lattice import (bond_lattice, bond_type, mobius_table, part_counts,
                      weighted_bond_lattice)
from .rootmult import MultTable
from .series import Number, normalize
from .symfunc import NVarPoly, PowerSumExpr, partition, partitions_of, z_factor

DEFAULT_BUDGET = 10 ** 7


class ChromaticPolynomial:
    """Polynomial in q with exact coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number]):
        cs = [normalize(Fraction(c)) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return normalize(Fraction(acc))

    def coefficient(self, power: int) -> Number:
        return self.coeffs[power] if power < len(self.coeffs) else 0

    def __add__(self, other: "ChromaticPolynomial") -> "ChromaticPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return ChromaticPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ChromaticPolynomial(c * other for c in self.coeffs)
        return ChromaticPolynomial(_poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ChromaticPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*q^{i}" for i, c in reversed(list(enumerate(self.coeffs))) if c)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}


def _poly_mul(a: Sequence[Number], b: Sequence[Number]) -> list[Number]:
    if not a or not b:
        return []
    out: list[Number] = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def binomial_poly(m: int, d: int) -> ChromaticPolynomial:
    """binom(m*q, d) as a polynomial in q."""
    coeffs: list[Number] = [1]
    for i in range(d):
        coeffs = _poly_mul(coeffs, [-i, m])
    return ChromaticPolynomial(Fraction(c, factorial(d)) for c in coeffs)


def eta_height(k: Sequence[int]) -> int:
    return sum(k)


def _check_weights(g: Graph, k: Sequence[int]) -> tuple[int, ...]:
    k = tuple(k)
    if len(k) != g.n:
        raise ValueError(f"weight vector has length {len(k)}, graph has {g.n} vertices")
    if any(x < 0 for x in k):
        raise ValueError("weights must be non-negative")
    return k


def _multicolourings(g: Graph, k: Sequence[int], ncolours: int, budget: int):
    """Yield the colour tuple chosen for each vertex, one proper multicolouring at a time."""
    leaves = prod(comb(ncolours, x) for x in k)
    if leaves > budget:
        raise BudgetExceeded(f"{leaves} candidate colourings exceed budget {budget}")
    n = g.n
    chosen: list[tuple[int, ...]] = [()] * n
    masks = [0] * n
    earlier_nbrs = [[u - 1 for u in g.neighbours(v) if u < v] for v in g.vertices]

    def rec(i: int):
        if i == n:
            yield chosen
            return
        forbidden = 0
        for u in earlier_nbrs[i]:
            forbidden |= masks[u]
        allowed = [c for c in range(ncolours) if not forbidden >> c & 1]
        for combo in combinations(allowed, k[i]):
            chosen[i] = combo
            m = 0
            for c in combo:
                m |= 1 << c
            masks[i] = m
            yield from rec(i + 1)

    yield from rec(0)


def count_colorings_brute(g: Graph, k: Sequence[int], q: int, budget: int = DEFAULT_BUDGET) -> int:
    k = _check_weights(g, k)
    if q < 0:
        raise ValueError("number of colours must be non-negative")
    return sum(1 for _ in _multicolourings(g, k, q, budget))


def csf_bruteforce(g: Graph, k: Sequence[int], nvars: int, budget: int = DEFAULT_BUDGET) -> NVarPoly:
    """The k-chromatic symmetric function restricted to colours 1..nvars."""
    k = _check_weights(g, k)
    counts: Counter = Counter()
    for colouring in _multicolourings(g, k, nvars, budget):
        exp = [0] * nvars
        for combo in colouring:
            for c in combo:
                exp[c] += 1
        counts[tuple(exp)] += 1
    return NVarPoly(nvars, counts)


def stable_tuple_counts(g: Graph, k: Sequence[int], max_height: int = 24) -> dict[int, int]:
    """Number of ordered tuples of non-empty stable sets covering the multiset ``k``, by length.

    Enumerates multisets of stable sets and counts their distinct orderings.
    """
    k = _check_weights(g, k)
    if eta_height(k) > max_height:
        raise BudgetExceeded(f"height {eta_height(k)} exceeds budget {max_height}")
    sets = [indicator(g, s) for s in stable_sets(g, g.n) if s]
    sets = [s for s in sets if all(a <= b for a, b in zip(s, k))]
    counts: Counter = Counter()

    def rec(remaining, start, chosen):
        if not any(remaining):
            length = len(chosen)
            counts[length] += factorial(length) // prod(factorial(r) for r in Counter(chosen).values())
            return
        for idx in range(start, len(sets)):
            s = sets[idx]
            if all(a <= b for a, b in zip(s, remaining)):
                chosen.append(s)
                rec(tuple(b - a for a, b in zip(s, remaining)), idx, chosen)
                chosen.pop()

    rec(k, 0, [])
    return dict(sorted(counts.items()))


def gen_chromatic_poly(g: Graph, k: Sequence[int] | None = None) -> ChromaticPolynomial:
    """pi_k(q) as sum_j |P_j| * binom(q, j)."""
    if k is None:
        k = (1,) * g.n
    total = ChromaticPolynomial([])
    for length, count in stable_tuple_counts(g, k).items():
        total = total + binomial_poly(1, length) * count
    return total


def _require(mults: MultTable, k: Sequence[int]):
    if not mults.covers(k):
        raise BoundTooSmall(f"multiplicity table (bound {mults.bound}) does not reach {tuple(k)}")


def _sign_count(bond, sign_count: str) -> int:
    if sign_count == "multiset":
        return len(bond)
    if sign_count == "underlying":
        return len(set(bond))
    raise ValueError(f"unknown sign convention {sign_count!r}")


def chmply_from_mults(g: Graph, k: Sequence[int], mults: MultTable,
                      sign_count: str = "multiset") -> ChromaticPolynomial:
    """pi_k(q) = sum_J (-1)^{ht k + |J|} prod_J binom(q * mult(J), D(J)).

    ``sign_count="underlying"`` counts distinct parts instead of all parts in
    the sign; that variant disagrees with direct counting once a part repeats.
    """
    k = _check_weights(g, k)
    _require(mults, k)
    total = ChromaticPolynomial([])
    ht = eta_height(k)
    for bond in weighted_bond_lattice(g, k):
        term = ChromaticPolynomial([(-1) ** (ht + _sign_count(bond, sign_count))])
        for part, d in part_counts(bond).items():
            term = term * binomial_poly(mults[part], d)
            if not term.coeffs:
                break
        total = total + term
    return total


def csf_mainthm(g: Graph, k: Sequence[int], mults: MultTable,
                sign_count: str = "multiset") -> PowerSumExpr:
    """sum_J (-1)^{ht k + |J|} (prod_J binom(mult(J), D(J))) p_{type(J)}.

    Agrees with the symmetric function whenever no weighted bond repeats a
    part, in particular for k = 1. When parts repeat, binomial weights do not
    account for the repeated part being spread over several colours; see
    ``csf_root_expansion`` for the expansion that does.
    """
    k = _check_weights(g, k)
    _require(mults, k)
    ht = eta_height(k)
    out: dict = {}
    for bond in weighted_bond_lattice(g, k):
        weight = (-1) ** (ht + _sign_count(bond, sign_count))
        for part, d in part_counts(bond).items():
            weight *= comb(mults[part], d)
            if not weight:
                break
        if weight:
            lam = bond_type(bond)
            out[lam] = out.get(lam, 0) + weight
    return PowerSumExpr(out)


def plethystic_elementary(d: int, m: int, h: int) -> PowerSumExpr:
    """e_d evaluated on m copies of the alphabet (x_i^h), in power sums.

    e_d[m p_h] = sum_{mu |- d} (-1)^{d - l(mu)} m^{l(mu)} / z_mu  p_{h mu}.
    """
    out = {}
    for mu in partitions_of(d):
        coef = Fraction((-1) ** (d - len(mu)) * m ** len(mu), z_factor(mu))
        out[tuple(h * x for x in mu)] = coef
    return PowerSumExpr(out)


def csf_root_expansion(g: Graph, k: Sequence[int], mults: MultTable) -> PowerSumExpr:
    """X_k from root multiplicities, valid for every weight vector.

    Each distinct part J repeated D times contributes (-1)^D e_D[mult(J) p_{ht J}],
    the coefficient extracted from prod_i (1 - x_i^{ht J} v^J)^{mult J}.
    """
    k = _check_weights(g, k)
    _require(mults, k)
    ht = eta_height(k)
    total = PowerSumExpr()
    for bond in weighted_bond_lattice(g, k):
        term = PowerSumExpr({(): (-1) ** (ht + len(bond))})
        for part, d in part_counts(bond).items():
            m = mults[part]
            if m == 0:
                term = PowerSumExpr()
                break
            term = term * plethystic_elementary(d, m, sum(part))
        total = total + term
    return total


def csf_stanley(g: Graph) -> PowerSumExpr:
    """X_G = sum over the bond lattice of mu(0, pi) p_{type(pi)}."""
    lattice = bond_lattice(g)
    mu = mobius_table(lattice)
    out: dict = {}
    for pi in lattice:
        lam = partition(len(b) for b in pi)
        out[lam] = out.get(lam, 0) + mu[pi]
    return PowerSumExpr(out)


def csf_from_bond_mults(g: Graph, mults: MultTable) -> PowerSumExpr:
    """X_G = sum_pi (-1)^{n - |pi|} prod_B mult(chi(B)) p_{type(pi)}."""
    _require(mults, (1,) * g.n)
    out: dict = {}
    for pi in bond_lattice(g):
        w = (-1) ** (g.n - len(pi))
        for block in pi:
            w *= mults[indicator(g, block)]
        lam = partition(len(b) for b in pi)
        out[lam] = out.get(lam, 0) + w
    return PowerSumExpr(out)


def chromatic_discriminant(g: Graph, mults: MultTable) -> int:
    """|[q] pi_G(q)|, cross-checked against [p_(n)] X_G and mult of the all-ones root."""
    if len(components(g)) != 1:
        raise ValueError("the chromatic discriminant identities need a connected graph")
    ones = (1,) * g.n
    _require(mults, ones)
    linear = abs(gen_chromatic_poly(g).coefficient(1))
    top = abs(csf_stanley(g)[(g.n,)])
    root = mults[ones]
    if not linear == top == root:
        raise IntegralityError(f"discriminant routes disagree: |[q]pi|={linear}, "
                               f"|[p_n]X|={top}, mult(1)={root}")
    return root


def join_graph(g: Graph, k: Sequence[int]) -> Graph:
    """Replace vertex j by a k_j-clique; cliques of adjacent vertices are fully joined.

    Clique vertices are numbered consecutively following the original order;
    vertices with k_j = 0 disappear.
    """
    k = _check_weights(g, k)
    if not any(k):
        raise ValueError("weight vector must have non-empty support")
    ids: dict[int, list[int]] = {}
    nxt = 1
    for v in g.vertices:
        ids[v] = list(range(nxt, nxt + k[v - 1]))
        nxt += k[v - 1]
    edges = []
    for v in g.vertices:
        edges.extend(combinations(ids[v], 2))
    for u, v in g.edges:
        edges.extend((a, b) for a in ids[u] for b in ids[v])
    return Graph.from_edges(nxt - 1, edges)


def weight_factorial(k: Sequence[int]) -> int:
    return prod(factorial(x) for x in k)


def ones(g: Graph) -> RootVector:
    return (1,) * g.n
