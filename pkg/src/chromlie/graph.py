"""Finite simple graphs on the vertex set {1..n}.

Vertices are dense 1-based integers. Vectors indexed by vertices (weights,
root vectors) are plain tuples where position ``i - 1`` belongs to vertex ``i``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .errors import GraphParseError

RootVector = tuple[int, ...]
VertexSet = frozenset[int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    # neighbour bitmask per vertex; bit (j - 1) set iff j adjacent to vertex i
    _nbr: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        nbr = [0] * self.n
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"bad edge {(u, v)} for n={self.n}")
            nbr[u - 1] |= 1 << (v - 1)
            nbr[v - 1] |= 1 << (u - 1)
        object.__setattr__(self, "_nbr", tuple(nbr))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        return cls(n, frozenset(norm))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._nbr[u - 1] >> (v - 1) & 1)

    def neighbours(self, v: int) -> list[int]:
        mask = self._nbr[v - 1]
        return [u for u in self.vertices if mask >> (u - 1) & 1]

    def degree(self, v: int) -> int:
        return bin(self._nbr[v - 1]).count("1")

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to 1..m, plus the old labels in order."""
        old = sorted(set(vertices))
        pos = {v: i + 1 for i, v in enumerate(old)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph.from_edges(len(old), edges), old

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Apply ``v -> perm[v - 1]``."""
        return Graph.from_edges(self.n, [(perm[u - 1], perm[v - 1]) for u, v in self.edges])

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def __str__(self):
        body = " ".join(f"{u}-{v}" for u, v in self.sorted_edges())
        return f"G(n={self.n}; {body})"


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << (v - 1)
    return m


def parse_graph(text: bytes | str, format: str = "edge_list") -> Graph:
    """Parse a graph from edge-list or JSON text.

    Edge-list: ``#`` comments, optional ``vertices <n>`` directive first,
    then one ``u v`` pair per line. Without the directive the vertex count
    is the largest id seen.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if format == "json":
        return _parse_json(text)
    if format != "edge_list":
        raise ValueError(f"unknown graph format {format!r}")

    n = None
    edges: list[tuple[int, int, int]] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "vertices":
            if seen_content:
                raise GraphParseError("'vertices' directive must come first", lineno)
            if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) < 1:
                raise GraphParseError(f"malformed directive {line!r}", lineno)
            n = int(tokens[1])
            seen_content = True
            continue
        seen_content = True
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {line!r}", lineno) from None
        if u < 1 or v < 1:
            raise GraphParseError("vertex ids start at 1", lineno)
        if n is not None and max(u, v) > n:
            raise GraphParseError(f"vertex id exceeds declared n={n}", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v, lineno))

    if n is None:
        if not edges:
            raise GraphParseError("empty graph description without 'vertices' directive")
        n = max(max(u, v) for u, v, _ in edges)
    return Graph.from_edges(n, [(u, v) for u, v, _ in edges])


def _parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict) or not isinstance(obj.get("n"), int) or obj["n"] < 1:
        raise GraphParseError("JSON graph needs a positive integer field 'n'")
    n = obj["n"]
    edges = obj.get("edges", [])
    if not isinstance(edges, list):
        raise GraphParseError("'edges' must be an array")
    out = []
    for idx, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphParseError(f"edge #{idx} is not a pair of integers")
        u, v = e
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"edge #{idx} has a vertex outside 1..{n}")
        if u == v:
            raise GraphParseError(f"edge #{idx} is a self-loop")
        out.append((u, v))
    return Graph.from_edges(n, out)


def is_connected(g: Graph, s: Iterable[int]) -> bool:
    members = set(s)
    if not members:
        raise ValueError("connectivity of the empty vertex set is undefined")
    target = _mask(members)
    start = min(members)
    seen = 1 << (start - 1)
    queue = deque([start])
    while queue:
        v = queue.popleft()
        fresh = g._nbr[v - 1] & target & ~seen
        seen |= fresh
        while fresh:
            low = fresh & -fresh
            queue.append(low.bit_length())
            fresh ^= low
    return seen == target


def components(g: Graph) -> list[list[int]]:
    left = set(g.vertices)
    out = []
    while left:
        start = min(left)
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in g.neighbours(v):
                if u not in comp:
                    comp.add(u)
                    queue.append(u)
        out.append(sorted(comp))
        left -= comp
    return out


def stable_sets(g: Graph, max_size: int) -> list[VertexSet]:
    """All independent sets with at most ``max_size`` vertices, the empty set included.

    Ordered by size, then lexicographically on the sorted members.
    """
    if max_size < 0:
        raise ValueError("max_size must be non-negative")
    found: list[tuple[int, ...]] = []

    def extend(current: tuple[int, ...], forbidden: int, nxt: int):
        found.append(current)
        if len(current) == max_size:
            return
        for v in range(nxt, g.n + 1):
            if not forbidden >> (v - 1) & 1:
                extend(current + (v,), forbidden | g._nbr[v - 1], v + 1)

    extend((), 0, 1)
    found.sort(key=lambda s: (len(s), s))
    return [frozenset(s) for s in found]


def independence_number(g: Graph) -> int:
    return max(len(s) for s in stable_sets(g, g.n))


def indicator(g: Graph, s: Iterable[int]) -> RootVector:
    vec = [0] * g.n
    for v in s:
        vec[v - 1] = 1
    return tuple(vec)


def support(vec: Sequence[int]) -> list[int]:
    return [i + 1 for i, x in enumerate(vec) if x]


def connected_multiset_supports(g: Graph, k: Sequence[int]) -> list[RootVector]:
    """Non-zero vectors ``m <= k`` whose support induces a connected subgraph.

    The order varies the first coordinate fastest, e.g. for K2 and k=(2,1):
    (1,0), (2,0), (0,1), (1,1), (2,1).
    """
    if len(k) != g.n:
        raise ValueError(f"weight vector has length {len(k)}, graph has {g.n} vertices")
    ranges = [range(c + 1) for c in reversed(k)]
    out = []
    for rev in product(*ranges):
        m = tuple(reversed(rev))
        if any(m) and is_connected(g, support(m)):
            out.append(m)
    return out


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def edgeless_graph(n: int) -> Graph:
    return Graph(n, frozenset())
