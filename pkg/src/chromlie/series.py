"""Truncated multivariate power series with exact rational coefficients.

A monomial ``v_1^{g_1} ... v_n^{g_n}`` is stored as the exponent tuple ``g``.
Truncation is by total height ``sum(g) <= bound``. Coefficients are ``int``
where integral and ``Fraction`` otherwise; floats are never produced.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from operator import add
from typing import Iterable, Mapping, Sequence, Union

from .graph import RootVector

Number = Union[int, Fraction]


def normalize(x: Number) -> Number:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def height(g: Sequence[int]) -> int:
    return sum(g)


def canonical_key(g: Sequence[int]):
    return (sum(g), tuple(g))


class QSeries:
    """Immutable truncated power series in ``n`` variables."""

    __slots__ = ("n", "bound", "_terms", "_graded")

    def __init__(self, n: int, bound: int, terms: Mapping[RootVector, Number] | Iterable = ()):
        if n < 1:
            raise ValueError("series needs at least one variable")
        if bound < 0:
            raise ValueError("truncation bound must be non-negative")
        self.n = n
        self.bound = bound
        clean: dict[RootVector, Number] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} has wrong length for n={n}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent {exp}")
            if sum(exp) > bound:
                continue
            c = clean.get(exp, 0) + c
            clean[exp] = c
        self._terms = {e: normalize(c) for e, c in clean.items() if c != 0}
        self._graded = None

    @classmethod
    def one(cls, n: int, bound: int) -> "QSeries":
        return cls(n, bound, {(0,) * n: 1})

    @classmethod
    def zero(cls, n: int, bound: int) -> "QSeries":
        return cls(n, bound, {})

    @classmethod
    def monomial(cls, exp: Sequence[int], bound: int, coef: Number = 1) -> "QSeries":
        return cls(len(exp), bound, {tuple(exp): coef})

    @classmethod
    def _raw(cls, n: int, bound: int, terms: dict) -> "QSeries":
        # trusted constructor: terms already truncated, normalised and non-zero
        obj = cls.__new__(cls)
        obj.n, obj.bound, obj._terms, obj._graded = n, bound, terms, None
        return obj

    # -- access ---------------------------------------------------------
    def __getitem__(self, exp: Sequence[int]) -> Number:
        return self._terms.get(tuple(exp), 0)

    def coefficient(self, exp: Sequence[int]) -> Number:
        exp = tuple(exp)
        if sum(exp) > self.bound:
            raise ValueError(f"height of {exp} exceeds truncation bound {self.bound}")
        return self._terms.get(exp, 0)

    def items(self) -> list[tuple[RootVector, Number]]:
        """Terms in canonical (height, lex) order."""
        return sorted(self._terms.items(), key=lambda t: canonical_key(t[0]))

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.items())

    @property
    def constant(self) -> Number:
        return self._terms.get((0,) * self.n, 0)

    def graded(self) -> list[list[tuple[RootVector, Number]]]:
        if self._graded is None:
            buckets: list[list] = [[] for _ in range(self.bound + 1)]
            for e, c in self._terms.items():
                buckets[sum(e)].append((e, c))
            self._graded = buckets
        return self._graded

    def homogeneous(self, h: int) -> "QSeries":
        return QSeries._raw(self.n, self.bound, {e: c for e, c in self._terms.items() if sum(e) == h})

    def truncate(self, bound: int) -> "QSeries":
        bound = min(bound, self.bound)
        return QSeries._raw(self.n, bound, {e: c for e, c in self._terms.items() if sum(e) <= bound})

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "QSeries"):
        if not isinstance(other, QSeries):
            raise TypeError(f"expected QSeries, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n} variables")

    def __add__(self, other: "QSeries") -> "QSeries":
        self._check(other)
        bound = min(self.bound, other.bound)
        out = {e: c for e, c in self._terms.items() if sum(e) <= bound}
        for e, c in other._terms.items():
            if sum(e) <= bound:
                out[e] = out.get(e, 0) + c
        return QSeries._raw(self.n, bound, _strip(out))

    def __neg__(self) -> "QSeries":
        return QSeries._raw(self.n, self.bound, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def scale(self, c: Number) -> "QSeries":
        if c == 0:
            return QSeries.zero(self.n, self.bound)
        return QSeries._raw(self.n, self.bound, {e: normalize(v * c) for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.n == other.n and self.bound == other.bound and self._terms == other._terms

    def agrees_with(self, other: "QSeries") -> bool:
        """Equality of all terms up to the smaller of the two bounds."""
        bound = min(self.bound, other.bound)
        return self.truncate(bound)._terms == other.truncate(bound)._terms

    def __hash__(self):
        return hash((self.n, self.bound, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return f"QSeries(n={self.n}, bound={self.bound}, 0)"
        parts = []
        for e, c in self.items():
            mono = "*".join(f"v{i + 1}" + (f"^{x}" if x > 1 else "") for i, x in enumerate(e) if x)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return f"QSeries(n={self.n}, bound={self.bound}, " + " + ".join(parts) + ")"

    # -- serialisation --------------------------------------------------
    def to_json(self) -> dict:
        terms = []
        for e, c in self.items():
            fc = Fraction(c)
            terms.append({"exp": list(e), "num": str(fc.numerator), "den": str(fc.denominator)})
        return {"n": self.n, "bound": self.bound, "terms": terms}

    @classmethod
    def from_json(cls, obj: dict) -> "QSeries":
        terms = {tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in obj["terms"]}
        return cls(obj["n"], obj["bound"], terms)


def _strip(d: dict) -> dict:
    return {e: normalize(c) for e, c in d.items() if c != 0}


def _mul_terms(a: QSeries, b: QSeries, bound: int, cap: Sequence[int] | None = None) -> dict:
    out: dict = {}
    ga, gb = a.graded(), b.graded()
    for ha in range(min(bound, a.bound) + 1):
        la = ga[ha]
        if not la:
            continue
        for hb in range(min(bound - ha, b.bound) + 1):
            lb = gb[hb]
            if not lb:
                continue
            for ea, ca in la:
                for eb, cb in lb:
                    e = tuple(map(add, ea, eb))
                    if cap is not None and any(x > c for x, c in zip(e, cap)):
                        continue
                    out[e] = out.get(e, 0) + ca * cb
    return _strip(out)


def series_mul(a: QSeries, b: QSeries, cap: Sequence[int] | None = None) -> QSeries:
    """Product truncated at the smaller bound.

    With ``cap`` only exponents ``<= cap`` coordinatewise are kept; this is a
    ring quotient by a monomial ideal, so repeated products stay exact there.
    """
    a._check(b)
    bound = min(a.bound, b.bound)
    return QSeries._raw(a.n, bound, _mul_terms(a, b, bound, cap))


def _power_sum(u: QSeries, coeff, cap=None) -> QSeries:
    """sum_{m>=1} coeff(m) * u^m for u without constant term."""
    result: dict = {}
    power = u
    m = 1
    while len(power):
        c = coeff(m)
        if c:
            for e, v in power._terms.items():
                result[e] = result.get(e, 0) + c * v
        m += 1
        power = series_mul(power, u, cap)
    return QSeries._raw(u.n, u.bound, _strip(result))


def _restrict(a: QSeries, cap) -> QSeries:
    if cap is None:
        return a
    return QSeries._raw(a.n, a.bound, {e: c for e, c in a._terms.items()
                                       if all(x <= y for x, y in zip(e, cap))})


def series_inverse(a: QSeries, cap: Sequence[int] | None = None) -> QSeries:
    c0 = a.constant
    if c0 == 0:
        raise ZeroDivisionError("series with zero constant term has no inverse")
    c0 = Fraction(c0)
    u = _restrict(a - QSeries.one(a.n, a.bound).scale(c0), cap).scale(1 / c0)
    # 1/(c0 (1 + u)) = (1/c0) sum_m (-u)^m
    tail = _power_sum(u, lambda m: (-1) ** m, cap)
    return (QSeries.one(a.n, a.bound) + tail).scale(1 / c0)


def series_log(a: QSeries, cap: Sequence[int] | None = None) -> QSeries:
    if a.constant != 1:
        raise ValueError(f"log needs constant term 1, got {a.constant}")
    u = _restrict(a - QSeries.one(a.n, a.bound), cap)
    return _power_sum(u, lambda m: Fraction((-1) ** (m + 1), m), cap)


def series_exp(a: QSeries, cap: Sequence[int] | None = None) -> QSeries:
    if a.constant != 0:
        raise ValueError(f"exp needs zero constant term, got {a.constant}")
    u = _restrict(a, cap)
    return QSeries.one(a.n, a.bound) + _power_sum(u, lambda m: Fraction(1, factorial(m)), cap)


def power_with_multiplicity(factors: Mapping[RootVector, int], bound: int, n: int | None = None,
                            cap: Sequence[int] | None = None) -> QSeries:
    """prod_g (1 - v^g)^{m_g}, truncated at ``bound``.

    Each factor is expanded binomially up to the bound and multiplied in,
    lowest height first.
    """
    if n is None:
        if not factors:
            raise ValueError("cannot infer the number of variables from an empty product")
        n = len(next(iter(factors)))
    result = QSeries.one(n, bound)
    for g in sorted(factors, key=canonical_key):
        m = factors[g]
        if m < 0:
            raise ValueError(f"negative exponent {m} for factor {g}")
        if len(g) != n:
            raise ValueError("dimension mismatch in factor vectors")
        h = sum(g)
        if h == 0:
            raise ValueError("factor vectors must be non-zero")
        if m == 0 or h > bound:
            continue
        terms = {}
        j = 0
        while j * h <= bound and j <= m:
            terms[tuple(j * x for x in g)] = (-1) ** j * comb(m, j)
            j += 1
        result = series_mul(result, QSeries(n, bound, terms), cap)
    return result
