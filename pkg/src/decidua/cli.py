"""Command-line entry point: ``decidua <command> ...``.

Every command exits 0 when all of its checks pass, 1 when a check fails and
2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import decisions, kleene
from .coproducts import UNIT
from .decisions import decide, transform
from .harness import SUITES, Exhaustive, Random, run_suite
from .logic import bot, conj, dec_to_pred, disj, neg, pred_to_dec, top
from .pfn import PfnError, PMap, compose, identity


class UsageError(Exception):
    pass


def _load_pmap(path: str) -> PMap:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        return PMap.from_json(data)
    except (PfnError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path} is not a valid partial map: {exc}") from exc


def _dump(obj, out: str = None) -> None:
    text = json.dumps(obj, indent=2, ensure_ascii=False)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _marks(d) -> str:
    return " ".join(f"{x}:{v}" for x, v in zip(d.carrier, kleene.valuation_of(d)))


# laws

def cmd_laws(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    if args.random is not None:
        mode = Random(trials=args.random, seed=args.seed, max_size=args.max_size or 4)
    else:
        mode = Exhaustive(
            max_size=args.max_size if args.max_size is not None else 3,
            ternary_size=args.max_size_ternary if args.max_size_ternary is not None else 2,
        )
    reports = []
    for name in names:
        report = run_suite(name, mode, include_partial=args.include_partial)
        status = "PASS" if report.passed else "FAIL"
        print(f"{status} {name}: {report.cases} cases, {len(report.failures)} failures, {report.ms} ms")
        if args.verbose:
            for law, n in report.law_cases.items():
                print(f"    {law}: {n}")
        for failure in report.failures[: args.show]:
            print("    " + json.dumps(failure, ensure_ascii=False))
        reports.append(report)
    if args.json:
        payload = [r.to_json() for r in reports]
        _dump(payload[0] if len(payload) == 1 else payload, args.json)
    return 0 if all(r.passed for r in reports) else 1


# truthtable

_ORDER = (kleene.T, kleene.F, kleene.U)


def _tables_from_weak() -> dict:
    return {
        "not": {str(a): str(kleene.weak_not(a)) for a in _ORDER},
        "and": {f"{a}{b}": str(kleene.weak_and(a, b)) for a in _ORDER for b in _ORDER},
        "or": {f"{a}{b}": str(kleene.weak_or(a, b)) for a in _ORDER for b in _ORDER},
    }


def _tables_from_decisions() -> dict:
    X = UNIT
    x = X.elems[0]
    dec = {a: kleene.decision_from_valuation(X, {x: a}) for a in _ORDER}

    def read(d):
        return str(kleene.read_pointwise(d, x))

    return {
        "not": {str(a): read(neg(dec[a])) for a in _ORDER},
        "and": {f"{a}{b}": read(conj(dec[a], dec[b])) for a in _ORDER for b in _ORDER},
        "or": {f"{a}{b}": read(disj(dec[a], dec[b])) for a in _ORDER for b in _ORDER},
    }


def _print_tables(title: str, tables: dict) -> None:
    print(title)
    print("  ¬ | " + "  ".join(f"{a}→{tables['not'][str(a)]}" for a in _ORDER))
    for op, sym in (("and", "∧"), ("or", "∨")):
        print(f"  {sym} | " + " ".join(str(b) for b in _ORDER))
        for a in _ORDER:
            print(f"  {a} | " + " ".join(tables[op][f"{a}{b}"] for b in _ORDER))


def cmd_truthtable(args) -> int:
    weak = _tables_from_weak()
    derived = _tables_from_decisions()
    _print_tables("weak Kleene tables:", weak)
    _print_tables("read off decisions on a one-element carrier:", derived)
    ok = weak == derived and all(
        kleene.read_pointwise(c, UNIT.elems[0]) is v
        for c, v in ((top(UNIT), kleene.T), (bot(UNIT), kleene.F))
    )
    cells = sum(len(t) for t in weak.values())
    print(f"{'PASS' if ok else 'FAIL'}: {cells} cells compared")
    return 0 if ok else 1


# decide / duality

def cmd_decide(args) -> int:
    f = _load_pmap(args.infile)
    if not f.cod.is_sum:
        raise UsageError("the codomain of the input map must be a binary sum")
    d = decide(f)
    ok = decisions.check_decision_laws(d, f)
    _dump(d.underlying.to_json(), args.out)
    print(f"{'PASS' if ok else 'FAIL'}: decision laws", file=sys.stderr)
    return 0 if ok else 1


def cmd_duality(args) -> int:
    p = _load_pmap(args.infile)
    try:
        d = pred_to_dec(p)
    except PfnError as exc:
        raise UsageError(str(exc)) from exc
    g = _load_pmap(args.along) if args.along else identity(p.dom)
    if g.cod != p.dom:
        raise UsageError("the map given with --along must end where the predicate starts")
    print("decision:  " + _marks(d))
    print(json.dumps(d.underlying.to_json(), ensure_ascii=False))
    roundtrip = dec_to_pred(d) == p and pred_to_dec(dec_to_pred(d)) == d
    print(f"roundtrip: {'ok' if roundtrip else 'MISMATCH'}")
    square1 = dec_to_pred(transform(g, d)) == compose(p, g)
    square2 = pred_to_dec(compose(p, g)) == transform(g, d)
    natural = square1 and square2
    print(f"naturality along {'the given map' if args.along else 'the identity'}: "
          f"{'ok' if natural else 'MISMATCH'}")
    ok = roundtrip and natural
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


# run

def _load_program(target: str):
    from .flowchart import corpus, parse

    path = Path(target)
    if path.exists():
        source = path.read_text(encoding="utf-8")
    else:
        programs = corpus()
        if target not in programs:
            raise UsageError(f"no file {target!r} and no bundled program of that name")
        source = programs[target]
    return parse(source)


def _parse_state(text: str) -> dict:
    values = {}
    for part in filter(None, (s.strip() for s in text.split(","))):
        name, sep, value = part.partition("=")
        if not sep:
            raise UsageError(f"bad state assignment {part!r}; expected name=value")
        try:
            values[name.strip()] = int(value)
        except ValueError:
            raise UsageError(f"bad value in {part!r}") from None
    return values


def cmd_run(args) -> int:
    from .flowchart import FlowchartError, disagreements, run_operational

    try:
        space, program = _load_program(args.program)
        if args.state is not None:
            starts = [space.state(_parse_state(args.state))]
        else:
            starts = list(space.states())
    except FlowchartError as exc:
        raise UsageError(str(exc)) from exc
    for s in starts:
        out = run_operational(program, space, s)
        print(f"{space.label(s)} -> {'undefined' if out is None else space.label(out)}")
    if not args.compare:
        return 0
    bad = disagreements(program, space)
    for s in bad:
        print(f"denotation disagrees at {space.label(s)}")
    print(f"{'FAIL' if bad else 'PASS'}: semantics agree on {space.size - len(bad)}/{space.size} states")
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="decidua", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    laws = sub.add_parser("laws", help="run a law suite")
    laws.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    how = laws.add_mutually_exclusive_group()
    how.add_argument("--exhaustive", action="store_true", help="enumerate every case (default)")
    how.add_argument("--random", type=int, metavar="N", help="draw N random instances per law group")
    laws.add_argument("--seed", type=int, default=0)
    laws.add_argument("--max-size", type=int, metavar="K", help="object size cap")
    laws.add_argument("--max-size-ternary", type=int, metavar="K",
                      help="object size cap for laws over three or more variables")
    laws.add_argument("--include-partial", action="store_true",
                      help="feed non-total decisions to the boolean suite")
    laws.add_argument("--json", metavar="PATH", help="write the report as JSON")
    laws.add_argument("--show", type=int, default=3, metavar="N", help="failures to print per suite")
    laws.add_argument("-v", "--verbose", action="store_true", help="print per-law case counts")
    laws.set_defaults(func=cmd_laws)

    tt = sub.add_parser("truthtable", help="print and cross-check the weak Kleene tables")
    tt.set_defaults(func=cmd_truthtable)

    dec = sub.add_parser("decide", help="compute the decision of a map into a sum")
    dec.add_argument("--in", dest="infile", required=True)
    dec.add_argument("--out")
    dec.set_defaults(func=cmd_decide)

    du = sub.add_parser("duality", help="convert a predicate to a decision and back")
    du.add_argument("--in", dest="infile", required=True)
    du.add_argument("--along", help="map to check naturality against (default: identity)")
    du.set_defaults(func=cmd_duality)

    run = sub.add_parser("run", help="run a flowchart program")
    run.add_argument("--program", required=True, help="a .fc file or a bundled program name")
    run.add_argument("--state", help="start state as name=value,...")
    run.add_argument("--compare", action="store_true", help="check against the denotation")
    run.set_defaults(func=cmd_run)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"decidua: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
