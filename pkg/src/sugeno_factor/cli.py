"""Command line front end: ``sugeno-factor {factorize,check,eval,oracle}``.

Exit codes: 0 affirmative, 1 definitive negative (with witness), 2 input or
usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .axioms import Axiom, check
from .oracle import BudgetExceeded, EnumerationBudget, brute_force_factorize
from .polynomial import simplify, to_text
from .suff import ConstantTableError, Factorization, NotSugenoUtility, Policy, factorize
from .sufio import ParseError, load_maps, load_table
from .table import UtilityTable

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2

Records = list[tuple[str, str]]


class UsageError(Exception):
    pass


def _coord_name(f: UtilityTable, k: int) -> str:
    return f.domain.chains[k].name or f"x{k + 1}"


def _format_witness_value(f: UtilityTable, key: str, value) -> str:
    if key == "k":
        return _coord_name(f, value)
    if isinstance(value, tuple) and key != "map":
        return "(" + f.domain.format_point(value) + ")"
    if key == "map":
        return ",".join(f.codomain.labels[v] for v in value)
    return f.codomain.labels[value]


def _factorization_records(f: UtilityTable, fact: Factorization, simplified: bool) -> Records:
    rec = fact.record
    chain = fact.q.chain
    out: Records = [("result", "factorizable")]
    if fact.policy is not None:
        out.append(("policy", fact.policy.value))
    out.append(("dropped", ",".join(_coord_name(f, k) for k in rec.dropped) or "-"))
    lo, hi = rec.codomain_interval
    out.append(("codomain", f"{f.codomain.labels[lo]}..{f.codomain.labels[hi]}"))
    out.append(("variables", ",".join(f"y{j + 1}={_coord_name(f, k)}" for j, k in enumerate(rec.kept))))
    if simplified:
        out.append(("integral", to_text(simplify(fact.q), chain, fact.q.n)))
    else:
        out.append(("integral", to_text(fact.q)))
    for phi, k in zip(fact.phis, rec.kept):
        out.append((f"phi.{_coord_name(f, k)}", ",".join(f"{a}:{b}" for a, b in phi.labels())))
    return out


def _failure_records(f: UtilityTable, exc: NotSugenoUtility) -> Records:
    reason = exc.reason
    out: Records = [("result", "not-factorizable"), ("reason", reason.kind.value), ("detail", reason.message)]
    if reason.coordinate is not None:
        out.append(("coordinate", _coord_name(f, reason.coordinate)))
        out.append(("value", f.domain.chains[reason.coordinate].labels[reason.value]))
    for key, point in reason.points.items():
        out.append((f"witness.{key}", "(" + f.domain.format_point(point) + ")"))
    for key, v in reason.values.items():
        out.append((f"witness.{key}.f", f.codomain.labels[v]))
    return out


def _emit(records: Records, machine: bool, out) -> None:
    if machine:
        for key, value in records:
            print(f"{key}={value}", file=out)
        return
    width = max(len(k) for k, _ in records)
    for key, value in records:
        print(f"{key.ljust(width)}  {value}", file=out)


def cmd_factorize(args, out) -> int:
    f = load_table(args.file)
    try:
        fact = factorize(f, Policy(args.policy))
    except NotSugenoUtility as exc:
        _emit(_failure_records(f, exc), args.machine, out)
        return EXIT_NEGATIVE
    except ConstantTableError as exc:
        raise UsageError(str(exc)) from None
    _emit(_factorization_records(f, fact, args.simplify), args.machine, out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    try:
        axiom = Axiom.parse(args.axiom)
    except ValueError:
        names = ", ".join(a.value for a in Axiom)
        raise UsageError(f"unknown axiom {args.axiom!r}; valid names: {names}") from None
    f = load_table(args.file)
    phis = None
    if axiom.is_pseudo:
        if not args.phi:
            raise UsageError(f"{axiom.value} needs --phi with one map per coordinate")
        phis = load_maps(args.phi, f.domain, f.codomain)
    try:
        result = check(f, axiom, phis)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    records: Records = [("axiom", axiom.value), ("holds", "yes" if result else "no")]
    for key, value in (result.witness or {}).items():
        records.append((f"witness.{key}", _format_witness_value(f, key, value)))
    _emit(records, args.machine, out)
    return EXIT_OK if result else EXIT_NEGATIVE


def cmd_eval(args, out) -> int:
    f = load_table(args.file)
    labels = [s.strip() for s in args.at.split(",")]
    try:
        x = f.domain.parse_point(labels)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad point {args.at!r}: {exc.args[0]}") from None
    print(f.codomain.labels[f(x)], file=out)
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    f = load_table(args.file)
    budget = EnumerationBudget(
        max_candidates=args.max_candidates, max_chain_size=args.max_chain_size, max_seconds=args.max_seconds
    )
    fact = brute_force_factorize(f, budget)
    if fact is None:
        _emit([("result", "none")], args.machine, out)
        return EXIT_NEGATIVE
    _emit(_factorization_records(f, fact, args.simplify), args.machine, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sugeno-factor", description="Sugeno utility function factorisation and axiom checks."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factorize", help="factor a table as a Sugeno integral of local utilities")
    p.add_argument("file")
    p.add_argument("--policy", choices=[p.value for p in Policy], default="lower")
    p.add_argument("--simplify", action="store_true", help="print the integral with absorbed terms removed")
    p.add_argument("--machine", action="store_true", help="key=value output")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("check", help="check one axiom on a table")
    p.add_argument("file")
    p.add_argument("--axiom", required=True)
    p.add_argument("--phi", action="append", default=[], help="file with unary maps (repeatable)")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", help="look up the table at a point")
    p.add_argument("file")
    p.add_argument("--at", required=True, help="comma-separated labels")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("oracle", help="exhaustive search for a factorisation")
    p.add_argument("file")
    p.add_argument("--max-candidates", type=int, default=EnumerationBudget.max_candidates)
    p.add_argument("--max-chain-size", type=int, default=EnumerationBudget.max_chain_size)
    p.add_argument("--max-seconds", type=float, default=EnumerationBudget.max_seconds)
    p.add_argument("--simplify", action="store_true")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
    except (UsageError, BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
