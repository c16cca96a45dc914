"""Command-line entry point: ``chromlie <command> [flags]``.

Exit codes: 0 success or pass, 1 usage or I/O error, 2 verification
failure, 3 budget exhaustion with skipped cases.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import chroma, gsym, lattice, rootmult
from .errors import BudgetExceeded, GraphParseError
from .graph import Graph, parse_graph
from .symfunc import powersum_expand
from .verify import SUITES, Budget, run_verify

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_SKIPPED = 0, 1, 2, 3

log = logging.getLogger("chromlie")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_globals(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--graph", metavar="FILE", default=d(None), help="graph file ('-' for stdin)")
    p.add_argument("--format", choices=("edge_list", "json"), default=d("edge_list"))
    p.add_argument("--weights", metavar="k1,k2,...", default=d(None), help="weight vector (default all ones)")
    p.add_argument("--height", type=int, default=d(None), help="truncation height (default ht k)")
    p.add_argument("--nvars", type=int, default=d(None), help="number of x variables (default ht k)")
    p.add_argument("--cache", metavar="FILE", default=d(None), help="multiplicity table cache")
    p.add_argument("--out", choices=("json", "text"), default=d("text"))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chromlie", description=__doc__.splitlines()[0])
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, help_):
        p = sub.add_parser(name, help=help_)
        _add_globals(p, suppress=True)
        return p

    command("mult", "root multiplicities up to the truncation height")
    command("chrompoly", "generalized chromatic polynomial for the weights")
    csf = command("csf", "chromatic symmetric function in the power-sum basis")
    csf.add_argument("--route", choices=("roots", "literal", "stanley", "brute"), default="roots",
                     help="roots: corrected root expansion; literal: binomial formula as stated")
    gs = command("gsym", "G-elementary or G-power-sum function")
    gs.add_argument("--kind", choices=("e", "p"), required=True)
    gs.add_argument("--degree", type=int, required=True)
    command("bondlattice", "weighted bond lattice for the weights")
    ver = command("verify", "run an identity-verification suite")
    ver.add_argument("suite", choices=SUITES + ("all",))
    ver.add_argument("--budget", type=int, default=Budget().steps, help="per-case step budget")
    ver.add_argument("--no-timing", action="store_true", help="omit wall time for diff-stable output")
    return parser


def _read_graph(args) -> Graph:
    if args.graph is None:
        raise GraphParseError("--graph is required for this command")
    if args.graph == "-":
        text = sys.stdin.read()
    else:
        with open(args.graph, "rb") as fh:
            text = fh.read()
    return parse_graph(text, args.format)


def _weights(args, g: Graph) -> tuple[int, ...]:
    if args.weights is None:
        return (1,) * g.n
    try:
        k = tuple(int(x) for x in args.weights.split(","))
    except ValueError:
        raise ValueError(f"bad --weights {args.weights!r}") from None
    if len(k) != g.n or any(x < 0 for x in k) or not any(k):
        raise ValueError(f"--weights needs {g.n} non-negative entries, not all zero")
    return k


def _mults(args, g: Graph, height: int) -> rootmult.MultTable:
    if args.cache:
        return rootmult.cached_mult_table(g, height, args.cache)
    return rootmult.mult_table(g, height)


def _emit(args, payload: dict, text: str):
    if args.out == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _vec(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def cmd_mult(args) -> int:
    g = _read_graph(args)
    k = _weights(args, g)
    table = _mults(args, g, args.height or sum(k))
    lines = [f"{_vec(r)} {m}" for r, m in table.items()]
    _emit(args, table.to_json(), "\n".join(lines))
    return EXIT_OK


def cmd_chrompoly(args) -> int:
    g = _read_graph(args)
    k = _weights(args, g)
    poly = chroma.gen_chromatic_poly(g, k)
    _emit(args, {"k": [str(x) for x in k], **poly.to_json()}, str(poly))
    return EXIT_OK


def cmd_csf(args) -> int:
    g = _read_graph(args)
    k = _weights(args, g)
    ht = sum(k)
    nvars = args.nvars or ht
    if args.route == "brute":
        expanded = chroma.csf_bruteforce(g, k, nvars)
        _emit(args, {"k": [str(x) for x in k], "expansion": expanded.to_json()}, str(expanded))
        return EXIT_OK
    if args.route == "stanley":
        if any(x != 1 for x in k):
            raise ValueError("the stanley route needs all weights equal to 1")
        expr = chroma.csf_stanley(g)
    else:
        mults = _mults(args, g, max(args.height or ht, ht))
        if args.route == "literal":
            expr = chroma.csf_mainthm(g, k, mults)
        else:
            expr = chroma.csf_root_expansion(g, k, mults)
    payload = {"k": [str(x) for x in k], "powersum": expr.to_json()}
    text = str(expr)
    if args.nvars is not None:
        expanded = powersum_expand(expr, nvars)
        payload["expansion"] = expanded.to_json()
        text += "\n" + str(expanded)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_gsym(args) -> int:
    g = _read_graph(args)
    if args.kind == "e":
        s = gsym.elementary_g(g, args.degree)
    else:
        s = gsym.powersum_g_via_log(g, args.degree)
    lines = [f"{c} v^{_vec(e)}" for e, c in s.items()]
    _emit(args, {"kind": args.kind, "degree": str(args.degree), "series": s.to_json()},
          "\n".join(lines) or "0")
    return EXIT_OK


def cmd_bondlattice(args) -> int:
    g = _read_graph(args)
    k = _weights(args, g)
    bonds = lattice.weighted_bond_lattice(g, k)
    mu = None
    if all(x == 1 for x in k):
        mu = lattice.mobius_table(lattice.bond_lattice(g))
    entries, lines = [], []
    for b in bonds:
        entry = {"parts": [list(part) for part in b], "type": list(lattice.bond_type(b)),
                 "mobius": None}
        line = " + ".join(_vec(part) for part in b)
        if mu is not None:
            entry["mobius"] = mu[lattice.bond_blocks(b)]
            line += f"  mu={entry['mobius']}"
        entries.append(entry)
        lines.append(line)
    _emit(args, entries, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.budget < 0:
        raise ValueError("--budget must be non-negative")
    budget = Budget(args.budget)
    suites = SUITES if args.suite == "all" else (args.suite,)
    reports = [run_verify(s, budget, height=args.height) for s in suites]
    timing = not args.no_timing
    if args.out == "json":
        payload = reports[0].to_json(timing) if len(reports) == 1 else [r.to_json(timing) for r in reports]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.summary())
    if any(r.passed is False for r in reports):
        return EXIT_FAIL
    if any(r.skipped for r in reports):
        return EXIT_SKIPPED
    return EXIT_OK


COMMANDS = {"mult": cmd_mult, "chrompoly": cmd_chrompoly, "csf": cmd_csf, "gsym": cmd_gsym,
            "bondlattice": cmd_bondlattice, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"chromlie: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_SKIPPED
    except (GraphParseError, OSError, ValueError) as exc:
        print(f"chromlie: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
