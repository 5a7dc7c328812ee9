"""Command-line interface.

Subcommands: ``bound`` (report every applicable upper bound for one (n, d)),
``table`` (best bounds over a grid), ``construct`` (build a named array and
write it out), ``search`` (run an exhaustive oracle and write its witness),
``verify`` (check a written array against a distance).

Exit codes: 0 success, 1 usage or parse/range errors, 2 verification failure,
3 search limits exceeded. ``--json`` switches any subcommand to a structured
report carrying the same numbers as the human output.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn

from . import pafile
from .bounds import (
    BoundResult,
    CwTable,
    best_upper_bound,
    dv_bound,
    me_bound,
    mo_bound,
    sp_bound,
)
from .constructions import (
    BinaryCwCode,
    PermutationArray,
    block_cycle_cwpa,
    greedy_partial_steiner,
    known_perfect,
    lift_binary_cw_code,
    perfect_families,
    perfect_pa,
)
from .constructions import family_distance as _family_distance
from .search import (
    DEFAULT_LIMITS,
    STATUS_EXACT,
    SearchLimits,
    exact_a_cw,
    exact_p,
    exact_p_cw,
    verify_pa,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_LIMITS = 3

_RULE_LETTERS = {"DV": "D", "SP": "S", "ME": "E", "MO-corollary": "O", "MO-exact-A": "O"}


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage by default; this CLI reserves 2 for
    verification failures, so usage errors are remapped to 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _scientific(value: int) -> str:
    if value < 10_000_000:
        return str(value)
    text = str(value)
    mantissa = f"{text[0]}.{text[1:4]}"
    return f"{mantissa}e{len(text) - 1}"


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        low = int(lo)
        high = int(hi) if sep else low
    except ValueError:
        raise ValueError(f"range must be N or LO:HI, got {text!r}") from None
    if low > high:
        raise ValueError(f"empty range {text!r}")
    return low, high


def _load_table(path: str | None) -> CwTable | None:
    if path is None:
        return None
    return CwTable.load(path)


def _bound_row(name: str, result: BoundResult) -> dict:
    return {
        "rule": name,
        "value": result.value,
        "kind": result.kind,
        "derivation": list(result.derivation),
    }


def _cmd_bound(args: argparse.Namespace) -> int:
    table = _load_table(args.cw_table)
    n, d = args.n, args.d
    rows = [("DV", dv_bound(n, d)), ("SP", sp_bound(n, d))]
    if d % 2 == 0:
        rows.append(("ME", me_bound(n, d // 2)))
    else:
        rows.append(("MO", mo_bound(n, (d - 1) // 2, table)))
    best = best_upper_bound(n, d, table)
    tight = known_perfect(n, d)
    if args.json:
        report = {
            "n": n,
            "d": d,
            "bounds": [_bound_row(name, r) for name, r in rows if r.applicable],
            "best": _bound_row(best.derivation[0], best),
            "tight": tight,
        }
        print(json.dumps(report))
        return EXIT_OK
    print(f"upper bounds for P({n},{d}):")
    for name, result in rows:
        if result.applicable:
            print(f"  {name:3} {result.value}  [{' -> '.join(result.derivation)}]")
        else:
            print(f"  {name:3} not applicable at (n={n}, d={d})")
    note = "  (tight: a known family meets it)" if tight else ""
    print(f"best: {best.value}  [{' -> '.join(best.derivation)}]{note}")
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    table = _load_table(args.cw_table)
    n_lo, n_hi = _parse_range(args.n_range)
    d_lo, d_hi = _parse_range(args.d_range)
    if n_lo < 1 or d_lo < 1:
        raise ValueError("table ranges must start at 1 or above")
    render = _scientific if args.scientific else str
    cells = []
    for n in range(n_lo, n_hi + 1):
        for d in range(d_lo, min(d_hi, n) + 1):
            best = best_upper_bound(n, d, table)
            letter = next(
                (_RULE_LETTERS[t] for t in best.derivation if t in _RULE_LETTERS), "?"
            )
            cells.append({"n": n, "d": d, "value": best.value, "rule": letter})
    if args.json:
        print(json.dumps({"rules": _RULE_LETTERS, "cells": cells}))
        return EXIT_OK
    by_cell = {(c["n"], c["d"]): c for c in cells}
    header = ["n\\d"] + [str(d) for d in range(d_lo, d_hi + 1)]
    matrix = [header]
    for n in range(n_lo, n_hi + 1):
        row = [str(n)]
        for d in range(d_lo, d_hi + 1):
            cell = by_cell.get((n, d))
            row.append("-" if cell is None else f"{render(cell['value'])}({cell['rule']})")
        matrix.append(row)
    widths = [max(len(r[i]) for r in matrix) for i in range(len(header))]
    print("best upper bounds on P(n,d); rules: D=DV S=SP E=ME O=MO")
    for row in matrix:
        print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return EXIT_OK


def _builders() -> dict[str, tuple[int, str]]:
    """CLI construction names -> (parameter count, parameter hint)."""
    named = {name: (1, "n" if name in ("cyclic", "symmetric", "alternating") else "p")
             for name in perfect_families()}
    named["block-cycle"] = (2, "n k")
    named["steiner-lift"] = (2, "n k")
    return named


def _construct(family: str, params: list[int]) -> tuple[PermutationArray, int, int | None]:
    """Build a named array; returns (array, claimed distance, weight)."""
    if family == "block-cycle":
        n, k = params
        return block_cycle_cwpa(n, k), 2 * k, k
    if family == "steiner-lift":
        n, k = params
        code = greedy_partial_steiner(n, k + 1)
        return lift_binary_cw_code(code, k), 2 * k + 1, k + 1
    return perfect_pa(family, params[0]), _family_distance(family, params[0]), None


def _cmd_construct(args: argparse.Namespace) -> int:
    builders = _builders()
    if args.family not in builders:
        raise ValueError(
            f"unknown family {args.family!r}; expected one of {', '.join(sorted(builders))}"
        )
    arity, hint = builders[args.family]
    if len(args.params) != arity:
        raise ValueError(f"family {args.family!r} takes parameters: {hint}")
    array, d, w = _construct(args.family, args.params)
    text = pafile.dump_pa(array, d, w)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.json:
        report = {
            "family": args.family,
            "params": args.params,
            "n": array.n,
            "d": d,
            "w": w,
            "size": len(array),
            "out": args.out,
        }
        if not args.out:
            report["members"] = [list(p) for p in array]
        print(json.dumps(report))
        return EXIT_OK
    print(f"{args.family}({', '.join(map(str, args.params))}): "
          f"{len(array)} permutations of {array.n} points, distance {d}")
    if args.out:
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_search(args: argparse.Namespace) -> int:
    limits = SearchLimits(
        max_nodes=args.limit_nodes if args.limit_nodes is not None else DEFAULT_LIMITS.max_nodes,
        max_seconds=(
            args.limit_seconds if args.limit_seconds is not None else DEFAULT_LIMITS.max_seconds
        ),
    )
    if args.kind == "p":
        if args.w is not None:
            raise ValueError("search kind 'p' takes no weight")
        outcome = exact_p(args.n, args.d, limits)
        target = f"P({args.n},{args.d})"
    elif args.kind == "pcw":
        if args.w is None:
            raise ValueError("search kind 'pcw' needs a weight")
        outcome = exact_p_cw(args.n, args.d, args.w, limits)
        target = f"P({args.n},{args.d},{args.w})"
    else:
        if args.w is None:
            raise ValueError("search kind 'acw' needs a weight")
        outcome = exact_a_cw(args.n, args.d, args.w, limits)
        target = f"A({args.n},{args.d},{args.w})"
    witness = outcome.witness
    if args.out:
        if isinstance(witness, BinaryCwCode):
            pafile.write_cw(witness, args.out)
        else:
            pafile.write_pa(witness, args.d, args.out, args.w)
    if args.json:
        report = {
            "target": target,
            "status": outcome.status,
            "value": outcome.value,
            "nodes": outcome.nodes,
            "witness_size": len(witness),
            "out": args.out,
        }
        print(json.dumps(report))
    else:
        relation = "=" if outcome.status == STATUS_EXACT else ">="
        print(f"{target} {relation} {outcome.value}  [{outcome.status}, {outcome.nodes} nodes]")
        if args.out:
            print(f"wrote witness to {args.out}")
    return EXIT_OK if outcome.status == STATUS_EXACT else EXIT_LIMITS


def _cmd_verify(args: argparse.Namespace) -> int:
    header, payload = pafile.load(args.path)
    d = args.d if args.d is not None else header.d
    if isinstance(payload, BinaryCwCode):
        bad = payload.violations(d)
        kind = "words"
    else:
        bad = verify_pa(payload, d)
        kind = "permutations"
    if args.json:
        report = {
            "path": args.path,
            "n": header.n,
            "count": header.count,
            "d": d,
            "ok": not bad,
            "violations": [
                {"a": list(a), "b": list(b), "distance": dist} for a, b, dist in bad
            ],
        }
        print(json.dumps(report))
        return EXIT_OK if not bad else EXIT_VERIFY
    if not bad:
        print(f"OK: {header.count} {kind} on {header.n} points, pairwise distance >= {d}")
        return EXIT_OK
    print(f"FAIL: {len(bad)} pair(s) below distance {d}:")
    for a, b, dist in bad:
        print(f"  {','.join(map(str, a))} <-> {','.join(map(str, b))} distance {dist}")
    return EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="permarray", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="report upper bounds for one (n, d)")
    p_bound.add_argument("n", type=int)
    p_bound.add_argument("d", type=int)
    p_bound.add_argument("--cw-table", metavar="PATH")
    p_bound.add_argument("--json", action="store_true")
    p_bound.set_defaults(func=_cmd_bound)

    p_table = sub.add_parser("table", help="best upper bounds over a grid")
    p_table.add_argument("n_range", metavar="N[:N2]")
    p_table.add_argument("d_range", metavar="D[:D2]")
    p_table.add_argument("--cw-table", metavar="PATH")
    p_table.add_argument("--scientific", action="store_true",
                         help="display large values as mantissa/exponent (display only)")
    p_table.add_argument("--json", action="store_true")
    p_table.set_defaults(func=_cmd_table)

    p_construct = sub.add_parser("construct", help="build a named permutation array")
    p_construct.add_argument("family", help="cyclic | symmetric | alternating | agl | pgl2 | "
                                            "block-cycle | steiner-lift")
    p_construct.add_argument("params", type=int, nargs="+", help="family parameters")
    p_construct.add_argument("--out", metavar="PATH")
    p_construct.add_argument("--json", action="store_true")
    p_construct.set_defaults(func=_cmd_construct)

    p_search = sub.add_parser("search", help="run an exhaustive search oracle")
    p_search.add_argument("kind", choices=("p", "pcw", "acw"),
                          help="p: arrays; pcw: constant-weight arrays; acw: binary codes")
    p_search.add_argument("n", type=int)
    p_search.add_argument("d", type=int)
    p_search.add_argument("w", type=int, nargs="?")
    p_search.add_argument("--limit-nodes", type=int, metavar="N")
    p_search.add_argument("--limit-seconds", type=float, metavar="S")
    p_search.add_argument("--out", metavar="PATH")
    p_search.add_argument("--json", action="store_true")
    p_search.set_defaults(func=_cmd_search)

    p_verify = sub.add_parser("verify", help="check a written array against a distance")
    p_verify.add_argument("path")
    p_verify.add_argument("d", type=int, nargs="?",
                          help="distance to check (default: the file's claimed distance)")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"permarray: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
