"""Small-graph corpora: all non-isomorphic graphs on a given number of vertices.

Canonical forms are brute force: the minimum upper-triangle adjacency code
over all vertex orders compatible with an iterated degree refinement.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .graph import Graph, components

MAX_CORPUS_N = 7


def _refined_classes(g: Graph) -> list[list[int]]:
    colour = {v: g.degree(v) for v in g.vertices}
    while True:
        sig = {v: (colour[v], tuple(sorted(colour[u] for u in g.neighbours(v)))) for v in g.vertices}
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranks[sig[v]] for v in g.vertices}
        if len(set(new.values())) == len(set(colour.values())):
            colour = new
            break
        colour = new
    classes: dict[int, list[int]] = {}
    for v in g.vertices:
        classes.setdefault(colour[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def _code(g: Graph, order: list[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    n = g.n
    code = 0
    for u, v in g.edges:
        a, b = sorted((pos[u], pos[v]))
        # row-major index in the strict upper triangle
        code |= 1 << (a * n - a * (a + 1) // 2 + (b - a - 1))
    return code


def canonical_form(g: Graph) -> tuple[int, int]:
    best = None
    classes = _refined_classes(g)
    for choice in product(*(permutations(c) for c in classes)):
        order = [v for block in choice for v in block]
        code = _code(g, order)
        if best is None or code < best:
            best = code
    return (g.n, best)


def canonical_form_exhaustive(g: Graph) -> tuple[int, int]:
    """Canonical code over all n! vertex orders; slow, for cross-checking."""
    return (g.n, min(_code(g, list(p)) for p in permutations(g.vertices)))


def graph_from_code(n: int, code: int) -> Graph:
    edges = []
    idx = 0
    for a in range(n):
        for b in range(a + 1, n):
            if code >> idx & 1:
                edges.append((a + 1, b + 1))
            idx += 1
    return Graph.from_edges(n, edges)


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, frozenset()),)
    seen: dict[tuple[int, int], Graph] = {}
    for h in _all_graphs(n - 1):
        for mask in range(1 << (n - 1)):
            edges = set(h.edges) | {(u, n) for u in range(1, n) if mask >> (u - 1) & 1}
            g = Graph(n, frozenset(edges))
            key = canonical_form(g)
            if key not in seen:
                seen[key] = graph_from_code(*key)
    return tuple(seen[k] for k in sorted(seen, key=lambda k: (bin(k[1]).count("1"), k[1])))


def enumerate_corpus(n: int, connected_only: bool = True) -> list[Graph]:
    """All graphs on exactly ``n`` vertices up to isomorphism."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if n > MAX_CORPUS_N:
        raise ValueError(f"corpus enumeration is brute force; n={n} exceeds {MAX_CORPUS_N}")
    graphs = _all_graphs(n)
    if connected_only:
        return [g for g in graphs if len(components(g)) == 1]
    return list(graphs)


def corpus_up_to(max_n: int, connected_only: bool = True, min_n: int = 1) -> list[Graph]:
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(enumerate_corpus(n, connected_only))
    return out
