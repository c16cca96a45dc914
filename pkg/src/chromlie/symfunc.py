"""Partitions, power-sum expressions and their N-variable specialisations."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from operator import add
from typing import Iterable, Mapping, Sequence

from more_itertools import distinct_permutations

from .series import Number, normalize

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    parts = tuple(sorted(parts, reverse=True))
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, parts capped at ``max_part``."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


def part_multiplicities(lam: Partition) -> Counter:
    return Counter(lam)


def z_factor(lam: Partition) -> int:
    """Size of the centraliser of a permutation of cycle type ``lam``."""
    return prod(j ** r * factorial(r) for j, r in Counter(lam).items())


def partition_str(lam: Partition) -> str:
    return ",".join(map(str, lam))


def _graded_lex(lam: Partition):
    return (sum(lam), lam)


class PowerSumExpr:
    """Finite linear combination of power sums ``p_lambda`` with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Partition, Number] | None = None):
        clean: dict[Partition, Number] = {}
        for lam, c in (terms or {}).items():
            lam = partition(lam)
            clean[lam] = clean.get(lam, 0) + c
        self.terms = {lam: normalize(c) for lam, c in clean.items() if c != 0}

    @classmethod
    def p(cls, *parts: int) -> "PowerSumExpr":
        return cls({partition(parts): 1})

    def __getitem__(self, lam: Sequence[int]) -> Number:
        return self.terms.get(partition(lam), 0)

    def items(self) -> list[tuple[Partition, Number]]:
        return sorted(self.terms.items(), key=lambda t: _graded_lex(t[0]))

    def __add__(self, other: "PowerSumExpr") -> "PowerSumExpr":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return PowerSumExpr(out)

    def __neg__(self):
        return PowerSumExpr({lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSumExpr({lam: c * other for lam, c in self.terms.items()})
        out: dict[Partition, Number] = {}
        for l1, c1 in self.terms.items():
            for l2, c2 in other.terms.items():
                lam = partition(l1 + l2)
                out[lam] = out.get(lam, 0) + c1 * c2
        return PowerSumExpr(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PowerSumExpr):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*p[{partition_str(lam)}]" for lam, c in self.items())

    def to_json(self) -> dict:
        return {"terms": [{"lambda": list(lam), "coef": str(c)} for lam, c in self.items()]}

    @classmethod
    def from_json(cls, obj: dict) -> "PowerSumExpr":
        return cls({tuple(t["lambda"]): Fraction(t["coef"]) for t in obj["terms"]})


class NVarPoly:
    """Polynomial in ``nvars`` commuting variables with exact coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Number] | None = None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            clean[e] = clean.get(e, 0) + c
        self.terms = {e: normalize(c) for e, c in clean.items() if c != 0}

    def __add__(self, other: "NVarPoly") -> "NVarPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return NVarPoly(self.nvars, out)

    def __neg__(self):
        return NVarPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NVarPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(add, e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return NVarPoly(self.nvars, out)

    __rmul__ = __mul__

    def _check(self, other):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __eq__(self, other):
        if not isinstance(other, NVarPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def total(self) -> Number:
        """Sum of all coefficients, i.e. the value at x_1 = ... = x_N = 1."""
        return normalize(sum(self.terms.values(), 0))

    def permute(self, perm: Sequence[int]) -> "NVarPoly":
        """Substitute ``x_i -> x_{perm[i]}`` (0-based)."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.nvars
            for i, x in enumerate(e):
                new[perm[i]] = x
            out[tuple(new)] = c
        return NVarPoly(self.nvars, out)

    def __repr__(self):
        if not self.terms:
            return f"NVarPoly({self.nvars}, 0)"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i + 1}" + (f"^{x}" if x > 1 else "") for i, x in enumerate(e) if x)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return f"NVarPoly({self.nvars}, " + " + ".join(parts) + ")"

    def to_json(self) -> dict:
        return {"nvars": self.nvars,
                "terms": [{"exp": list(e), "coef": str(c)} for e, c in sorted(self.terms.items(), reverse=True)]}


@lru_cache(maxsize=None)
def _p_lambda_terms(lam: Partition, nvars: int) -> tuple:
    acc = {(0,) * nvars: 1}
    for r in lam:
        nxt: dict = {}
        for e, c in acc.items():
            for i in range(nvars):
                f = list(e)
                f[i] += r
                f = tuple(f)
                nxt[f] = nxt.get(f, 0) + c
        acc = nxt
    return tuple(acc.items())


def powersum_expand(e: PowerSumExpr, nvars: int) -> NVarPoly:
    """Substitute ``p_r -> x_1^r + ... + x_N^r`` and multiply out."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    out: dict = {}
    for lam, c in e.terms.items():
        for exp, m in _p_lambda_terms(lam, nvars):
            out[exp] = out.get(exp, 0) + c * m
    return NVarPoly(nvars, out)


def monomial_sym(lam: Sequence[int], nvars: int) -> NVarPoly:
    lam = partition(lam)
    if len(lam) > nvars:
        return NVarPoly(nvars)
    padded = lam + (0,) * (nvars - len(lam))
    return NVarPoly(nvars, {e: 1 for e in distinct_permutations(padded)})


def augmented_monomial_count(lam: Sequence[int]) -> int:
    """Ratio M_lambda / m_lambda, the product of factorials of part multiplicities."""
    return prod(factorial(r) for r in Counter(lam).values())


def augmented_monomial_sym(lam: Sequence[int], nvars: int) -> NVarPoly:
    """Sum of x_{i_1}^{l_1} ... x_{i_k}^{l_k} over ordered tuples of distinct indices."""
    lam = partition(lam)
    out: dict = {}
    for idx in permutations(range(nvars), len(lam)):
        e = [0] * nvars
        for i, part in zip(idx, lam):
            e[i] = part
        e = tuple(e)
        out[e] = out.get(e, 0) + 1
    return NVarPoly(nvars, out)
