"""Bond lattices, their Moebius function, and weighted bond lattices.

A weighted bond for a weight vector ``k`` is a multiset of non-zero vectors,
each with connected support, summing to ``k``. With ``k`` all ones these are
exactly the connected set partitions (the ordinary bond lattice).
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from more_itertools import set_partitions

from .errors import BoundTooSmall
from .graph import Graph, RootVector, connected_multiset_supports, is_connected, support
from .rootmult import MultTable
from .symfunc import Partition, partition

BondPartition = tuple[tuple[int, ...], ...]
WeightedBond = tuple[RootVector, ...]


def _canonical_blocks(blocks) -> BondPartition:
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def bond_lattice(g: Graph) -> list[BondPartition]:
    """Connected set partitions, finest first (by decreasing block count, then lex)."""
    out = []
    for blocks in set_partitions(list(g.vertices)):
        if all(is_connected(g, b) for b in blocks):
            out.append(_canonical_blocks(blocks))
    out.sort(key=lambda p: (-len(p), p))
    return out


def refines(finer: BondPartition, coarser: BondPartition) -> bool:
    owner = {}
    for idx, block in enumerate(coarser):
        for v in block:
            owner[v] = idx
    return all(len({owner[v] for v in block}) == 1 for block in finer)


def mobius_table(lattice: Sequence[BondPartition]) -> dict[BondPartition, int]:
    """mu(0, p) for every element, from mu(0,0) = 1 and sum_{s <= p} mu(0,s) = 0."""
    # finest-first order guarantees everything below p is already computed
    ordered = sorted(lattice, key=lambda p: -len(p))
    bottom = ordered[0]
    mu: dict[BondPartition, int] = {bottom: 1}
    for p in ordered[1:]:
        mu[p] = -sum(m for s, m in mu.items() if len(s) > len(p) and refines(s, p))
    return mu


def mobius_from_bottom(lattice: Sequence[BondPartition], pi: BondPartition) -> int:
    pi = _canonical_blocks(pi)
    if pi not in set(lattice):
        raise ValueError(f"{pi} is not an element of the lattice")
    sub = [s for s in lattice if refines(s, pi)]
    return mobius_table(sub)[pi]


def weighted_bond_lattice(g: Graph, k: Sequence[int]) -> list[WeightedBond]:
    """Every multiset of connected-support parts summing to ``k``.

    Parts are drawn in non-increasing position of a fixed list, so each
    multiset appears exactly once.
    """
    k = tuple(k)
    if not any(k):
        raise ValueError("weight vector must have non-empty support")
    parts = connected_multiset_supports(g, k)
    parts.sort(key=lambda m: (sum(m), m), reverse=True)
    out: list[WeightedBond] = []

    def rec(remaining: tuple[int, ...], start: int, chosen: list[RootVector]):
        if not any(remaining):
            out.append(tuple(chosen))
            return
        for idx in range(start, len(parts)):
            m = parts[idx]
            if all(a <= b for a, b in zip(m, remaining)):
                chosen.append(m)
                rec(tuple(b - a for a, b in zip(m, remaining)), idx, chosen)
                chosen.pop()

    rec(k, 0, [])
    out.sort(key=lambda b: (-len(b), b))
    return out


def bond_type(b: WeightedBond) -> Partition:
    return partition(sum(part) for part in b)


def part_counts(b: WeightedBond) -> Counter:
    """Multiplicity D(J, b) of each distinct part J."""
    return Counter(b)


def bond_blocks(b: WeightedBond) -> BondPartition:
    """Blocks of a 0/1 weighted bond viewed as a set partition."""
    return _canonical_blocks(support(part) for part in b)


def psi_image(b: WeightedBond, mults: MultTable) -> WeightedBond | None:
    """The multiset of roots ``beta(J)``, or None if some part is not a root."""
    for part in b:
        if not mults.covers(part):
            raise BoundTooSmall(f"multiplicity table does not cover part {part}")
    if all(mults[part] >= 1 for part in b):
        return tuple(sorted(b, reverse=True))
    return None


def stable_partitions(g: Graph) -> list[BondPartition]:
    """Set partitions of the vertices into stable blocks."""
    out = []
    for blocks in set_partitions(list(g.vertices)):
        if all(not g.adjacent(u, v) for b in blocks for i, u in enumerate(b) for v in b[i + 1:]):
            out.append(_canonical_blocks(blocks))
    out.sort(key=lambda p: (-len(p), p))
    return out


def stable_partition_type(p: BondPartition) -> Partition:
    return partition(len(b) for b in p)
