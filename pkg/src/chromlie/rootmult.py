"""Root multiplicities of the free partially commutative Lie algebra on a graph.

Letters ``e_i, e_j`` commute exactly when ``i`` and ``j`` are non-adjacent.
With every simple root imaginary the denominator identity reads

    sum_{S stable} (-1)^{|S|} v^{chi(S)} = prod_{a > 0} (1 - v^a)^{mult a},

so ``-log`` of the left side is ``sum_g c_g v^g`` with
``c_g = sum_{d | g} mult(g/d) / d``, and multiplicities follow by
number-theoretic Moebius inversion over the divisors of ``gcd(g)``.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import factorial, gcd, prod
from typing import Sequence

from more_itertools import distinct_permutations

from .errors import BoundTooSmall, BudgetExceeded, IntegralityError
from .graph import Graph, RootVector, is_connected, stable_sets, support
from .series import QSeries, canonical_key, series_log

log = logging.getLogger(__name__)


def independence_series(g: Graph, bound: int) -> QSeries:
    if bound < 0:
        raise ValueError("bound must be non-negative")
    terms = {}
    for s in stable_sets(g, min(bound, g.n)):
        vec = [0] * g.n
        for v in s:
            vec[v - 1] = 1
        terms[tuple(vec)] = (-1) ** len(s)
    return QSeries(g.n, bound, terms)


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("Moebius function is defined on positive integers")
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def vector_gcd(g: Sequence[int]) -> int:
    nz = [x for x in g if x]
    if not nz:
        raise ValueError("gcd of the zero vector is undefined")
    return reduce(gcd, nz)


def graph_digest(g: Graph) -> str:
    text = f"{g.n};" + ",".join(f"{u}-{v}" for u, v in g.sorted_edges())
    return hashlib.sha256(text.encode()).hexdigest()


@dataclass
class MultTable:
    graph_digest: str
    n: int
    bound: int
    mults: dict[RootVector, int] = field(default_factory=dict)
    # entries are only known for vectors <= cap coordinatewise (None: no cap)
    cap: RootVector | None = None

    def covers(self, gamma: Sequence[int]) -> bool:
        if sum(gamma) > self.bound:
            return False
        return self.cap is None or all(x <= c for x, c in zip(gamma, self.cap))

    def __getitem__(self, gamma: Sequence[int]) -> int:
        gamma = tuple(gamma)
        if len(gamma) != self.n:
            raise ValueError(f"vector {gamma} has wrong length for n={self.n}")
        if not self.covers(gamma):
            raise BoundTooSmall(f"multiplicity table (bound {self.bound}, cap {self.cap}) "
                                f"does not cover {gamma}")
        return self.mults.get(gamma, 0)

    def items(self) -> list[tuple[RootVector, int]]:
        return sorted(self.mults.items(), key=lambda t: canonical_key(t[0]))

    def to_json(self) -> dict:
        out = {"digest": self.graph_digest, "n": self.n, "bound": self.bound,
               "mults": [{"exp": list(e), "m": str(m)} for e, m in self.items()]}
        if self.cap is not None:
            out["cap"] = list(self.cap)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "MultTable":
        cap = obj.get("cap")
        return cls(obj["digest"], obj["n"], obj["bound"],
                   {tuple(t["exp"]): int(t["m"]) for t in obj["mults"]},
                   tuple(cap) if cap is not None else None)


def mult_table(g: Graph, bound: int, cap: Sequence[int] | None = None) -> MultTable:
    """Multiplicities of every root of height at most ``bound``.

    ``cap`` limits the computation to vectors below it coordinatewise, which
    is all that is needed for one weight vector and is much cheaper.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if cap is not None:
        cap = tuple(cap)
        if len(cap) != g.n:
            raise ValueError("cap has wrong length")
    c = -series_log(independence_series(g, bound), cap)
    mults: dict[RootVector, int] = {}
    for gamma, _ in c.items():
        total = Fraction(0)
        for d in divisors(vector_gcd(gamma)):
            mu = mobius(d)
            if mu:
                total += Fraction(mu, d) * c[tuple(x // d for x in gamma)]
        if total.denominator != 1:
            raise IntegralityError(f"mult{gamma} = {total} is not an integer")
        if total < 0:
            raise IntegralityError(f"mult{gamma} = {total} is negative")
        if total:
            if not is_connected(g, support(gamma)):
                raise IntegralityError(f"root {gamma} has disconnected support")
            mults[gamma] = int(total)
    for i in range(g.n):
        unit = tuple(int(j == i) for j in range(g.n))
        if mults.get(unit) != 1:
            raise IntegralityError(f"simple root {unit} has multiplicity {mults.get(unit)}")
    return MultTable(graph_digest(g), g.n, bound, mults, cap)


def witt_oracle(gamma: Sequence[int]) -> int:
    """Dimension of the multidegree-``gamma`` part of the free Lie algebra."""
    total_height = sum(gamma)
    if total_height == 0:
        raise ValueError("gamma must be non-zero")
    acc = 0
    for d in divisors(vector_gcd(gamma)):
        acc += mobius(d) * factorial(total_height // d) // prod(factorial(x // d) for x in gamma)
    q, r = divmod(acc, total_height)
    if r:
        raise IntegralityError(f"Witt sum {acc} not divisible by {total_height}")
    return q


def _lex_normal_form(g: Graph, word: Sequence[int]) -> tuple[int, ...]:
    # greedy: repeatedly pull out the smallest letter whose first occurrence
    # commutes with every letter before it
    rest = list(word)
    out = []
    while rest:
        best = None
        seen: set[int] = set()
        for pos, a in enumerate(rest):
            if a not in seen and all(not g.adjacent(a, b) and a != b for b in rest[:pos]):
                if best is None or a < rest[best]:
                    best = pos
            seen.add(a)
        out.append(rest.pop(best))
    return tuple(out)


def trace_monoid_dim(g: Graph, gamma: Sequence[int], max_height: int = 10) -> int:
    """Number of commutation classes of words with letter counts ``gamma``.

    Letters commute iff non-adjacent in ``g``. Each class is represented by
    its lexicographically least word.
    """
    gamma = tuple(gamma)
    if len(gamma) != g.n:
        raise ValueError("gamma has wrong length")
    if sum(gamma) > max_height:
        raise BudgetExceeded(f"height {sum(gamma)} exceeds word-enumeration budget {max_height}")
    letters = [v for v in g.vertices for _ in range(gamma[v - 1])]
    return len({_lex_normal_form(g, w) for w in distinct_permutations(letters)})


def cache_store(table: MultTable, path: str | os.PathLike) -> None:
    """Write ``table`` as JSON via a temp file and atomic rename."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".mult-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(table.to_json(), fh, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cache_load(g: Graph, path: str | os.PathLike, bound: int | None = None) -> MultTable | None:
    """Load a cached table for ``g``, or None if missing, stale or corrupt."""
    try:
        with open(path) as fh:
            table = MultTable.from_json(json.load(fh))
    except FileNotFoundError:
        return None
    except (OSError, ValueError, KeyError, TypeError) as exc:
        log.warning("ignoring unreadable multiplicity cache %s: %s", path, exc)
        return None
    if table.graph_digest != graph_digest(g) or table.n != g.n:
        return None
    if bound is not None and table.bound < bound:
        return None
    if table.cap is not None:
        return None
    return table


def cached_mult_table(g: Graph, bound: int, path: str | os.PathLike | None) -> MultTable:
    if path is not None:
        table = cache_load(g, path, bound)
        if table is not None:
            return table
    table = mult_table(g, bound)
    if path is not None:
        cache_store(table, path)
    return table
