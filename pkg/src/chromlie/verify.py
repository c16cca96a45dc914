"""Identity-verification harness over small-graph corpora.

Each suite runs one family of identities on a fixed corpus and collects
failures (with the graph, the weight vector and the mismatch) into a
``VerificationReport``. A case whose estimated cost exceeds the budget is
skipped, never failed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product
from math import comb, prod
from typing import Callable, Iterable, Sequence

from . import chroma, gsym, lattice, rootmult
from .corpus import corpus_up_to
from .errors import BudgetExceeded
from .graph import Graph, complete_graph, indicator
from .series import series_inverse, power_with_multiplicity
from .symfunc import powersum_expand

SUITES = ("stanley", "mainthm", "csf_roots", "chmply", "denominator", "oracles",
          "gsym_dual", "discriminant", "tfunction", "bijection", "join")


@dataclass(frozen=True)
class Budget:
    steps: int = 10 ** 7


@dataclass
class VerificationReport:
    suite: str
    corpus: str
    cases: int = 0
    skipped: int = 0
    failures: list[dict] = field(default_factory=list)
    notes: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool | None:
        """True/False, or None when nothing ran (indeterminate)."""
        if self.failures:
            return False
        if self.cases == 0:
            return None
        return True

    def failures_for(self, identity: str) -> list[dict]:
        return [f for f in self.failures if f["identity"] == identity]

    def to_json(self, timing: bool = True) -> dict:
        out = {"suite": self.suite, "corpus": self.corpus, "cases": self.cases,
               "failures": self.failures, "skipped": self.skipped, "pass": self.passed,
               "notes": self.notes}
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def summary(self) -> str:
        status = {True: "PASS", False: "FAIL", None: "INDETERMINATE"}[self.passed]
        return (f"{self.suite}: {status} ({self.cases} cases, {len(self.failures)} failures, "
                f"{self.skipped} skipped, {self.wall_time:.1f}s)")


class _Runner:
    def __init__(self, report: VerificationReport, budget: Budget):
        self.report = report
        self.budget = budget

    def case(self, cost: int, fn: Callable[[], Iterable[dict]]):
        if cost > self.budget.steps:
            self.report.skipped += 1
            return
        try:
            found = list(fn())
        except BudgetExceeded:
            self.report.skipped += 1
            return
        self.report.cases += 1
        self.report.failures.extend(found)


def _fail(identity: str, g: Graph, k=None, **detail) -> dict:
    out = {"identity": identity, "graph": str(g)}
    if k is not None:
        out["k"] = ",".join(map(str, k))
    out.update({key: str(v) for key, v in detail.items()})
    return out


def _series_cost(n: int, bound: int) -> int:
    return comb(bound + n, n)


def _leaves(k: Sequence[int], ncolours: int) -> int:
    return prod(comb(ncolours, x) for x in k)


def weight_vectors(n: int, values: Sequence[int], max_height: int | None = None) -> list[tuple[int, ...]]:
    out = []
    for k in product(values, repeat=n):
        if any(k) and (max_height is None or sum(k) <= max_height):
            out.append(k)
    return out


def _mult_for_ones(g: Graph) -> rootmult.MultTable:
    return rootmult.mult_table(g, g.n, cap=(1,) * g.n)


# -- suites ------------------------------------------------------------------

def _suite_stanley(run: _Runner, graphs, height):
    for g in graphs:
        ones = (1,) * g.n

        def check(g=g, ones=ones):
            mults = _mult_for_ones(g)
            main = chroma.csf_mainthm(g, ones, mults)
            brute = chroma.csf_bruteforce(g, ones, g.n, run.budget.steps)
            if powersum_expand(main, g.n) != brute:
                yield _fail("mainthm_vs_brute", g, ones, mainthm=main)
            stanley = chroma.csf_stanley(g)
            if main != stanley:
                yield _fail("mainthm_vs_stanley", g, ones, mainthm=main, stanley=stanley)
            cor = chroma.csf_from_bond_mults(g, mults)
            if cor != stanley:
                yield _fail("bond_mults_vs_stanley", g, ones, bond_mults=cor, stanley=stanley)

        run.case(_leaves((1,) * g.n, g.n), check)


def _small_k_cases(graphs, values=(1, 2), max_height=6, report=None):
    """Weighted cases; with ``report``, weights supported on one vertex are
    left out (the identities assume |supp k| > 1) and counted in a note."""
    excluded = 0
    for g in graphs:
        for k in weight_vectors(g.n, values, max_height):
            if report is not None and sum(1 for x in k if x) < 2:
                excluded += 1
                continue
            yield g, k
    if excluded:
        report.notes.append({"outside_hypothesis": str(excluded),
                             "reason": "weight supported on a single vertex"})


def _suite_csf(run: _Runner, graphs, height, route: str):
    tables = {}
    cases = _small_k_cases(graphs, report=run.report if route == "literal" else None)
    for g, k in cases:
        ht = sum(k)

        def check(g=g, k=k, ht=ht):
            if g not in tables:
                tables[g] = rootmult.mult_table(g, max(height or 6, ht))
            mults = tables[g]
            if route == "literal":
                expr = chroma.csf_mainthm(g, k, mults)
            else:
                expr = chroma.csf_root_expansion(g, k, mults)
            brute = chroma.csf_bruteforce(g, k, ht, run.budget.steps)
            got = powersum_expand(expr, ht)
            if got != brute:
                yield _fail("mainthm_vs_brute" if route == "literal" else "roots_vs_brute",
                            g, k, powersum=expr, expanded=got, brute=brute)

        run.case(_leaves(k, ht), check)


def _suite_chmply(run: _Runner, graphs, height):
    tables = {}
    for g, k in _small_k_cases(graphs, report=run.report):
        def check(g=g, k=k):
            if g not in tables:
                tables[g] = rootmult.mult_table(g, max(height or 6, sum(k)))
            direct = chroma.gen_chromatic_poly(g, k)
            via_roots = chroma.chmply_from_mults(g, k, tables[g])
            if direct != via_roots:
                yield _fail("chmply", g, k, direct=direct, roots=via_roots)
            # spot check the polynomial against brute-force counting
            for q in range(sum(k) + 3):
                if _leaves(k, q) > run.budget.steps:
                    break
                brute = chroma.count_colorings_brute(g, k, q, run.budget.steps)
                if direct(q) != brute:
                    yield _fail("chmply_vs_count", g, k, q=q, poly=direct(q), brute=brute)

        run.case(_leaves(k, sum(k)), check)


def _suite_denominator(run: _Runner, graphs, height):
    height = height or 8
    for g in graphs:
        def check(g=g):
            mults = rootmult.mult_table(g, height)
            product_side = power_with_multiplicity(mults.mults, height, g.n)
            sum_side = rootmult.independence_series(g, height)
            if product_side != sum_side:
                diff = product_side - sum_side
                yield _fail("denominator", g, height=height, difference=diff)

        run.case(_series_cost(g.n, height), check)


def _suite_oracles(run: _Runner, graphs, height):
    witt_height = height or 8
    for n in range(1, 5):
        g = complete_graph(n)

        def check_witt(g=g):
            mults = rootmult.mult_table(g, witt_height)
            for gamma in _vectors(g.n, witt_height):
                if mults[gamma] != rootmult.witt_oracle(gamma):
                    yield _fail("witt", g, gamma=gamma, table=mults[gamma],
                                witt=rootmult.witt_oracle(gamma))

        run.case(_series_cost(n, witt_height), check_witt)

    trace_height = min(height or 6, 6)
    for g in graphs:
        def check_trace(g=g):
            inv = series_inverse(rootmult.independence_series(g, trace_height))
            for gamma in _vectors(g.n, trace_height):
                words = rootmult.trace_monoid_dim(g, gamma)
                if inv[gamma] != words:
                    yield _fail("hilbert_vs_trace", g, gamma=gamma, series=inv[gamma], trace=words)

        run.case(_series_cost(g.n, trace_height) * 100, check_trace)


def _vectors(n: int, max_height: int):
    for gamma in product(range(max_height + 1), repeat=n):
        if 0 < sum(gamma) <= max_height:
            yield gamma


def _suite_gsym(run: _Runner, graphs, height):
    top = height or 6
    for g in graphs:
        def check(g=g):
            mults = rootmult.mult_table(g, top)
            for n in range(1, top + 1):
                via_log = gsym.powersum_g_via_log(g, n)
                closed = gsym.powersum_g_closed_form(g, n, mults)
                bad = [(e, c) for e, c in via_log.items() if not isinstance(c, int) or c < 0]
                if bad:
                    yield _fail("nonnegative_integral", g, n=n, offending=bad)
                if via_log != closed:
                    yield _fail("log_vs_closed_form", g, n=n, via_log=via_log, closed=closed)
                if any(sum(e) != n for e, _ in via_log.items()):
                    yield _fail("homogeneous", g, n=n)

        run.case(_series_cost(g.n + 1, 2 * top), check)


def _suite_discriminant(run: _Runner, graphs, height):
    by_x: dict[tuple, list[tuple[Graph, int]]] = {}
    for g in graphs:
        def check(g=g):
            mults = _mult_for_ones(g)
            try:
                disc = chroma.chromatic_discriminant(g, mults)
            except ArithmeticError as exc:
                yield _fail("discriminant_routes", g, error=exc)
                return
            key = (g.n, tuple(chroma.csf_stanley(g).items()))
            by_x.setdefault(key, []).append((g, disc))

        run.case(2 ** g.n, check)
    for (n, _), members in sorted(by_x.items(), key=lambda t: (t[0][0], str(t[1][0][0]))):
        if len(members) > 1:
            discs = sorted({d for _, d in members})
            run.report.notes.append({"equal_X": [str(g) for g, _ in members],
                                     "discriminants": [str(d) for d in discs]})
            if len(discs) > 1:
                run.report.failures.append(_fail("equal_X_equal_discriminant", members[0][0],
                                                 graphs=[str(g) for g, _ in members]))


def _suite_tfunction(run: _Runner, graphs, height):
    for g in graphs:
        for k in weight_vectors(g.n, (0, 1, 2)):
            ht = sum(k)

            def check(g=g, k=k, ht=ht):
                t = gsym.t_function_coefficient(g, k, ht)
                brute = chroma.csf_bruteforce(g, k, ht, run.budget.steps)
                if t != brute:
                    yield _fail("tfunction", g, k, t=t, brute=brute)

            run.case(_leaves(k, ht), check)


def _suite_bijection(run: _Runner, graphs, height, mobius_graphs):
    tables = {}
    for g, k in _small_k_cases(graphs, report=run.report):
        def check_psi(g=g, k=k):
            if g not in tables:
                tables[g] = rootmult.mult_table(g, max(height or 6, sum(k)))
            for bond in lattice.weighted_bond_lattice(g, k):
                if lattice.psi_image(bond, tables[g]) is None:
                    not_roots = [p for p in bond if tables[g][p] == 0]
                    yield _fail("psi", g, k, bond=bond, non_roots=not_roots)

        run.case(_series_cost(g.n, sum(k)), check_psi)

    for g in mobius_graphs:
        def check_mobius(g=g):
            mults = _mult_for_ones(g)
            bl = lattice.bond_lattice(g)
            mu = lattice.mobius_table(bl)
            for pi in bl:
                bridge = (-1) ** (g.n - len(pi)) * prod(mults[indicator(g, b)] for b in pi)
                if mu[pi] != bridge:
                    yield _fail("mobius", g, partition=pi, mobius=mu[pi], bridge=bridge)
            if len(bl) > 1 and sum(mu.values()) != 0:
                yield _fail("mobius_sum", g, total=sum(mu.values()))

        run.case(2 ** g.n, check_mobius)


def _suite_join(run: _Runner, graphs, height):
    for g in graphs:
        for k in weight_vectors(g.n, (0, 1, 2, 3)):
            def check(g=g, k=k):
                lhs = chroma.gen_chromatic_poly(g, k) * chroma.weight_factorial(k)
                joined = chroma.join_graph(g, k)
                rhs = chroma.gen_chromatic_poly(joined)
                if lhs != rhs:
                    yield _fail("join", g, k, lhs=lhs, rhs=rhs)

            run.case(2 ** sum(k), check)


# -- entry point ---------------------------------------------------------------

_DEFAULT_CORPUS = {
    "stanley": ("connected graphs on 5 and 6 vertices, k = 1", lambda: corpus_up_to(6, True, min_n=5)),
    "mainthm": ("connected graphs on <= 4 vertices, k in {1,2}^n, ht <= 6", lambda: corpus_up_to(4)),
    "csf_roots": ("connected graphs on <= 4 vertices, k in {1,2}^n, ht <= 6", lambda: corpus_up_to(4)),
    "chmply": ("connected graphs on <= 4 vertices, k in {1,2}^n, ht <= 6", lambda: corpus_up_to(4)),
    "denominator": ("connected graphs on <= 5 vertices, H = 8", lambda: corpus_up_to(5)),
    "oracles": ("K_n for n <= 4 at H = 8; all graphs on <= 4 vertices at height <= 6",
                lambda: corpus_up_to(4, connected_only=False)),
    "gsym_dual": ("connected graphs on <= 5 vertices, n <= 6", lambda: corpus_up_to(5)),
    "discriminant": ("connected graphs on <= 6 vertices", lambda: corpus_up_to(6)),
    "tfunction": ("connected graphs on <= 4 vertices, k in {0,1,2}^n, N = ht k", lambda: corpus_up_to(4)),
    "bijection": ("weighted bonds: connected <= 4 vertices, k in {1,2}^n, ht <= 6; "
                  "Moebius bridge: connected <= 6 vertices", lambda: corpus_up_to(4)),
    "join": ("connected graphs on <= 3 vertices, k in {0,..,3}^n", lambda: corpus_up_to(3)),
}


def run_verify(suite: str, budget: Budget | None = None, graphs: Sequence[Graph] | None = None,
               height: int | None = None) -> VerificationReport:
    """Run one suite (``"all"`` is handled by ``run_all``).

    ``graphs`` and ``height`` override the default corpus and truncation.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    budget = budget or Budget()
    description, default = _DEFAULT_CORPUS[suite]
    supplied = graphs is not None
    if not supplied:
        graphs = default()
    else:
        description = f"{len(graphs)} supplied graph(s)"
    if height is not None:
        description += f", height {height}"
    report = VerificationReport(suite, description)
    run = _Runner(report, budget)
    start = time.perf_counter()
    if suite == "stanley":
        _suite_stanley(run, graphs, height)
    elif suite == "mainthm":
        _suite_csf(run, graphs, height, "literal")
    elif suite == "csf_roots":
        _suite_csf(run, graphs, height, "roots")
    elif suite == "chmply":
        _suite_chmply(run, graphs, height)
    elif suite == "denominator":
        _suite_denominator(run, graphs, height)
    elif suite == "oracles":
        _suite_oracles(run, graphs, height)
    elif suite == "gsym_dual":
        _suite_gsym(run, graphs, height)
    elif suite == "discriminant":
        _suite_discriminant(run, graphs, height)
    elif suite == "tfunction":
        _suite_tfunction(run, graphs, height)
    elif suite == "bijection":
        mobius_graphs = graphs if supplied else corpus_up_to(6)
        _suite_bijection(run, graphs, height, mobius_graphs)
    elif suite == "join":
        _suite_join(run, graphs, height)
    report.wall_time = time.perf_counter() - start
    return report


def run_all(budget: Budget | None = None) -> list[VerificationReport]:
    return [run_verify(s, budget) for s in SUITES]
