"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]``/``[FAIL]`` line with the measured
numbers, whether or not pytest captures output.
"""
import itertools
import time

import pytest

from decidua import kleene
from decidua.coproducts import UNIT, sum_obj
from decidua.decisions import check_decision_laws, decide
from decidua.flowchart import corpus, disagreements, parse
from decidua.harness import Exhaustive, Random, enumerate_pmaps, run_suite, sized_object
from decidua.logic import bot, conj, disj, neg, top


@pytest.fixture
def verdict(capsys):
    def emit(number: int, title: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number} ({title}): {detail}")
        assert ok, detail

    return emit


def _summary(*reports) -> str:
    cases = sum(r.cases for r in reports)
    failures = sum(len(r.failures) for r in reports)
    ms = sum(r.ms for r in reports)
    return f"{cases} cases, {failures} failures, {ms / 1000:.2f} s"


def test_criterion_01_restriction_laws(verdict):
    report = run_suite("restriction", Exhaustive(max_size=3))
    ok = (
        report.passed
        and report.ms < 60_000
        and all(report.law_cases[law] > 0 for law in ("R1", "R2", "R3", "R4"))
    )
    verdict(1, "R1-R4 exhaustive at size 3", ok, _summary(report))


def test_criterion_02_decision_uniqueness(verdict):
    pool = [sized_object(n) for n in range(3)]
    checked = failures = 0
    for X, Y, Z in itertools.product(pool, repeat=3):
        candidates = list(enumerate_pmaps(X, sum_obj(X, X)))
        for f in enumerate_pmaps(X, sum_obj(Y, Z)):
            passing = [p for p in candidates if check_decision_laws(p, f)]
            checked += 1
            failures += passing != [decide(f).underlying]
    verdict(
        2, "unique decision by brute force", failures == 0,
        f"{checked} maps f checked, {failures} failures",
    )


def test_criterion_03_utility_identities(verdict):
    exhaustive = run_suite("utility", Exhaustive(ternary_size=2))
    randomized = run_suite("utility", Random(trials=1000, seed=20261015, max_size=4))
    ok = (
        exhaustive.passed
        and randomized.passed
        and min(randomized.law_cases.values()) >= 1000
    )
    verdict(3, "utility items (i)-(xi)", ok, _summary(exhaustive, randomized))


def test_criterion_04_dmq_axioms(verdict):
    report = run_suite("dmq", Exhaustive(max_size=3, ternary_size=2))
    axioms = [law for law in report.law_cases if law.startswith("DMQ.")]
    ok = report.passed and len(axioms) == 13 and all(report.law_cases[a] > 0 for a in axioms)
    verdict(4, "thirteen De Morgan quasilattice axioms", ok, _summary(report))


# transcribed independently of decidua.kleene, row-major over t, f, u
NOT_CELLS = {"t": "f", "f": "t", "u": "u"}
AND_CELLS = dict(zip(map("".join, itertools.product("tfu", repeat=2)), "tfuffuuuu"))
OR_CELLS = dict(zip(map("".join, itertools.product("tfu", repeat=2)), "ttutfuuuu"))


def test_criterion_05_truth_table_bridge(verdict):
    x = UNIT.elems[0]
    dec = {
        str(v): kleene.decision_from_valuation(UNIT, {x: v})
        for v in (kleene.T, kleene.F, kleene.U)
    }

    def read(d):
        return str(kleene.read_pointwise(d, x))

    wrong = []
    for a, want in NOT_CELLS.items():
        if read(neg(dec[a])) != want:
            wrong.append(f"¬{a}")
    for cell, want in AND_CELLS.items():
        if read(conj(dec[cell[0]], dec[cell[1]])) != want:
            wrong.append(f"{cell[0]}∧{cell[1]}")
    for cell, want in OR_CELLS.items():
        if read(disj(dec[cell[0]], dec[cell[1]])) != want:
            wrong.append(f"{cell[0]}∨{cell[1]}")
    units = read(top(UNIT)) == "t" and read(bot(UNIT)) == "f"
    suite = run_suite("bridge", Exhaustive(max_size=3))
    cells = len(NOT_CELLS) + len(AND_CELLS) + len(OR_CELLS)
    ok = not wrong and units and cells == 21 and suite.passed
    verdict(
        5, "weak Kleene tables from decisions", ok,
        f"{cells - len(wrong)}/{cells} cells match, units {'ok' if units else 'wrong'}; "
        f"pointwise suite {_summary(suite)}",
    )


def test_criterion_06_duality(verdict):
    report = run_suite("duality", Exhaustive(ternary_size=2))
    ok = report.passed and report.law_cases["Du.natural"] > 0
    verdict(6, "predicate/decision duality and naturality", ok, _summary(report))


def test_criterion_07_homomorphism(verdict):
    report = run_suite("homomorphism", Exhaustive(ternary_size=2))
    ok = report.passed and all(n > 0 for n in report.law_cases.values())
    verdict(7, "decision transformers are homomorphisms", ok, _summary(report))


def test_criterion_08_entailment(verdict):
    report = run_suite("entailment", Exhaustive(max_size=3))
    ok = report.passed and report.law_cases["E.characterization"] == 1 + 9 + 81 + 729
    verdict(8, "entailment via truth and definedness", ok, _summary(report))


def test_criterion_09_boolean_recovery(verdict):
    report = run_suite("boolean", Exhaustive(max_size=3))
    X = sized_object(1)
    values = (kleene.T, kleene.F, kleene.U)
    decs = [kleene.decision_from_valuation(X, {X.elems[0]: v}) for v in values]
    absorption_breaks = [
        (p, q) for p in decs for q in decs
        if conj(p, disj(p, q)) != p or disj(p, conj(p, q)) != p
    ]
    tertium_breaks = [p for p in decs if disj(p, neg(p)) != top(X)]
    ok = report.passed and bool(absorption_breaks) and bool(tertium_breaks)
    verdict(
        9, "Boolean laws for total decisions", ok,
        f"{_summary(report)}; {len(absorption_breaks)} non-total absorption and "
        f"{len(tertium_breaks)} tertium counterexamples on one point",
    )


def test_criterion_10_flowchart_adequacy(verdict):
    programs = corpus()
    start = time.perf_counter()
    states = bad = 0
    for source in programs.values():
        space, program = parse(source)
        states += space.size
        bad += len(disagreements(program, space))
    elapsed = time.perf_counter() - start
    required = {"diverge", "undef_guard", "overflow"} <= set(programs)
    ok = len(programs) >= 10 and required and bad == 0 and elapsed < 10
    verdict(
        10, "operational and denotational agreement", ok,
        f"{len(programs)} programs, {states} states, {bad} disagreements, {elapsed:.2f} s",
    )
