"""Generators, law suites and reports.

Every law is identified by a short id (``R1``, ``U.vii``, ``DMQ.x`` ...).
``DOCUMENTED_LAWS`` is the authoritative list; each suite declares the ids it
checks and ``run_suite`` records how many cases each law saw, so a law that
is declared but never exercised shows up as zero cases.

Two modes drive the same suite code:

* ``Exhaustive(max_size, ternary_size)`` walks every object of each size up
  to the cap and every partial map between them.
* ``Random(trials, seed, max_size)`` draws ``trials`` instances per law group
  from a seeded ``random.Random``; reports are reproducible from the seed.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Union

from . import decisions, kleene
from .coproducts import (
    EMPTY,
    UNIT,
    assoc_left,
    assoc_right,
    bang,
    codiagonal,
    copair,
    inj1,
    inj2,
    kappa_dagger,
    proj1_dagger,
    proj2_dagger,
    sum_map,
    sum_obj,
    twist,
    zero_map,
)
from .decisions import Decision, check_decision_laws, decide, decision_inverse, is_tag_only, transform
from .logic import (
    BOOL,
    bot,
    conj,
    conj_codiagonal,
    conj_leq,
    dec_to_pred,
    decision_of_any,
    disj,
    disj_codiagonal,
    disj_leq,
    entails,
    entails_by_order,
    neg,
    pred_to_dec,
    top,
)
from .pfn import (
    FinObj,
    PMap,
    compose,
    identity,
    is_restriction_idempotent,
    is_total,
    natural_leq,
    partial_inverse,
    restriction,
)

ENUMERATION_CAP = 4
UNDEFINED_PROBABILITY = 1 / 3


class UnknownSuiteError(KeyError):
    pass


class CapExceededError(ValueError):
    pass


# generators

def enumerate_pmaps(X: FinObj, Y: FinObj, cap: int = ENUMERATION_CAP) -> Iterator[PMap]:
    """All ``(|Y|+1)^|X|`` partial maps ``X -> Y``, undefined first, in a fixed order."""
    if len(X) > cap or len(Y) > cap:
        raise CapExceededError(f"enumeration is capped at {cap} elements per side")
    choices = (None,) + tuple(range(len(Y)))
    for table in itertools.product(choices, repeat=len(X)):
        yield PMap._raw(X, Y, table)


def _random_table(rng: random.Random, n: int, m: int) -> tuple:
    table = []
    for _ in range(n):
        if m == 0 or rng.random() < UNDEFINED_PROBABILITY:
            table.append(None)
        else:
            table.append(rng.randrange(m))
    return tuple(table)


def random_pmap(X: FinObj, Y: FinObj, seed: Union[int, random.Random]) -> PMap:
    """Each element is undefined with probability 1/3, else sent to a uniform target."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return PMap._raw(X, Y, _random_table(rng, len(X), len(Y)))


def sized_object(n: int) -> FinObj:
    """The canonical object with ``n`` elements used by exhaustive runs."""
    if n == 0:
        return EMPTY
    if n == 1:
        return UNIT
    return FinObj.atom("abcdefgh"[:n])


def random_object(rng: random.Random, max_size: int) -> FinObj:
    n = rng.randint(0, max_size)
    return _random_object_of_size(rng, n, itertools.count())


def _random_object_of_size(rng: random.Random, n: int, names) -> FinObj:
    if n == 0:
        return EMPTY if rng.random() < 0.8 else FinObj.atom(())
    if n == 1 and rng.random() < 0.5:
        return UNIT
    if n >= 1 and rng.random() < 0.35:
        k = rng.randint(0, n)
        return sum_obj(
            _random_object_of_size(rng, k, names), _random_object_of_size(rng, n - k, names)
        )
    return FinObj.atom(f"e{next(names)}" for _ in range(n))


def random_decision(rng: random.Random, X: FinObj, total: bool = False) -> Decision:
    values = (kleene.T, kleene.F) if total else (kleene.T, kleene.F, kleene.U)
    return kleene.decision_from_valuation(X, {x: rng.choice(values) for x in X})


def total_decisions(X: FinObj) -> Iterator[Decision]:
    for values in itertools.product((kleene.T, kleene.F), repeat=len(X)):
        yield kleene.decision_from_valuation(X, dict(zip(X.elems, values)))


def restriction_idempotents(X: FinObj) -> Iterator[PMap]:
    for keep in itertools.product((False, True), repeat=len(X)):
        yield PMap._raw(X, X, tuple(i if k else None for i, k in enumerate(keep)))


# modes and reports

@dataclass(frozen=True)
class Exhaustive:
    max_size: int = 3
    ternary_size: int = 2


@dataclass(frozen=True)
class Random:
    trials: int = 1000
    seed: int = 0
    max_size: int = 4


Mode = Union[Exhaustive, Random]


@dataclass
class LawReport:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)
    seed: Optional[int] = None
    ms: int = 0
    law_cases: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "seed": self.seed,
            "ms": self.ms,
        }


def _encode(value) -> object:
    if isinstance(value, Decision):
        return value.underlying.to_json()
    if isinstance(value, PMap):
        return value.to_json()
    if isinstance(value, FinObj):
        return value.to_json()
    return str(value)


class _Run:
    def __init__(self, report: LawReport, mode: Mode, options: dict):
        self.report = report
        self.mode = mode
        self.options = options
        self._maps: dict = {}

    @property
    def exhaustive(self) -> bool:
        return isinstance(self.mode, Exhaustive)

    def check(self, law: str, ok: bool, **witnesses) -> bool:
        self.report.cases += 1
        self.report.law_cases[law] = self.report.law_cases.get(law, 0) + 1
        if not ok:
            self.report.failures.append(
                {"law": law, "counterexample": {k: _encode(v) for k, v in witnesses.items()}}
            )
        return ok

    def maps(self, X: FinObj, Y: FinObj) -> list[PMap]:
        key = (X, Y)
        if key not in self._maps:
            self._maps[key] = list(enumerate_pmaps(X, Y))
        return self._maps[key]

    def instances(self, objects: str, items: dict, ternary: bool = False) -> Iterator[dict]:
        """Instances of a law signature.

        ``objects`` names the object variables (one letter each).  ``items``
        maps a variable name to ``(kind, *args)``: ``("map", dom, cod)`` where
        ``dom``/``cod`` are object names, ``"A+B"`` sums or ``"1+1"``;
        ``("dec", X)``, ``("tdec", X)`` and ``("idem", X)`` for decisions,
        total decisions and restriction idempotents on ``X``.
        """
        if self.exhaustive:
            size = self.mode.ternary_size if ternary else self.mode.max_size
            pool = [sized_object(n) for n in range(size + 1)]
            for combo in itertools.product(pool, repeat=len(objects)):
                env = dict(zip(objects, combo))
                choices = [list(self._candidates(env, item)) for item in items.values()]
                for picked in itertools.product(*choices):
                    yield {**env, **dict(zip(items, picked))}
        else:
            rng = self.options["rng"]
            for _ in range(self.mode.trials):
                env = {o: random_object(rng, self.mode.max_size) for o in objects}
                for name, item in items.items():
                    env[name] = self._draw(rng, env, item)
                yield env

    @staticmethod
    def _obj(env: dict, ref: str) -> FinObj:
        if ref == "1+1":
            return BOOL
        if ref == "1":
            return UNIT
        if "+" in ref:
            a, b = ref.split("+")
            return sum_obj(env[a], env[b])
        return env[ref]

    def _candidates(self, env: dict, item: tuple) -> Iterable:
        kind = item[0]
        if kind == "map":
            return self.maps(self._obj(env, item[1]), self._obj(env, item[2]))
        X = self._obj(env, item[1])
        if kind == "dec":
            return kleene.all_decisions(X)
        if kind == "tdec":
            return total_decisions(X)
        if kind == "idem":
            return restriction_idempotents(X)
        raise ValueError(kind)

    def _draw(self, rng: random.Random, env: dict, item: tuple):
        kind = item[0]
        if kind == "map":
            return random_pmap(self._obj(env, item[1]), self._obj(env, item[2]), rng)
        X = self._obj(env, item[1])
        if kind == "dec":
            return random_decision(rng, X)
        if kind == "tdec":
            return random_decision(rng, X, total=True)
        if kind == "idem":
            return PMap._raw(X, X, tuple(i if rng.random() < 0.5 else None for i in range(len(X))))
        raise ValueError(kind)


# the documented law list

DOCUMENTED_LAWS = {
    # core-pfn
    "R1": "f ∘ r̄f = f",
    "R2": "r̄f r̄g = r̄g r̄f",
    "R3": "r̄(f r̄g) = r̄f r̄g",
    "R4": "r̄g ∘ f = f ∘ r̄(gf)",
    "order.1": "g ≤ g' implies r̄(gf) ≤ r̄(g'f)",
    "order.2": "r̄(gf) ≤ r̄f",
    "order.3": "f ≤ g implies hf ≤ hg and fh' ≤ gh'",
    "order.4": "f ≤ f' and g ≤ g' iff f+g ≤ f'+g'",
    "order.5": "f ≤ r̄g implies f = r̄f",
    "pinv.unique": "partial inverses are unique and exist exactly for injective maps",
    "pinv.involution": "(f†)† = f",
    "ridem.restriction": "r̄f is a restriction idempotent",
    # coproducts
    "copair.equations": "[f,g]κ1 = f and [f,g]κ2 = g",
    "copair.unique": "copairing is the only map satisfying the copair equations",
    "inj.total": "injections are total",
    "inj.pinv": "injections are partial isomorphisms with inverses [id,0] and [0,id]",
    "nabla.natural": "∇(f+f) = f∇",
    "twist.natural": "γ(f+g) = (g+f)γ",
    "zero.least": "0 ≤ f and r̄0 = 0",
    "summap.restriction": "r̄(f+g) = r̄f + r̄g",
    "summap.functor": "(f+g)(f'+g') = ff' + gg' and id+id = id",
    "structural": "γγ = id, associators inverse, ∇κ1 = id, κ1†κ1 = id, κ1†κ2 = 0, ! total",
    # decisions
    "D.unique": "exactly one map X -> X+X satisfies D1 and D2, and it is decide(f)",
    "D.laws": "decide(f) satisfies D1 and D2",
    "D.decrep": "κ1†p = r̄(κ1†f) and κ2†p = r̄(κ2†f) imply p = ⟨f⟩",
    "D.tag_only": "p is tag-only iff κ1†p and κ2†p are restriction idempotents",
    "D.transform": "transform is contravariantly functorial",
    "U.i": "⟨⟨f⟩⟩ = ⟨f⟩ and (⟨f⟩+⟨f⟩)⟨f⟩ = (κ1+κ2)⟨f⟩",
    "U.ii": "⟨f⟩ is a partial isomorphism with ⟨f⟩† = [r̄(κ1†f), r̄(κ2†f)]",
    "U.iii": "r̄(⟨f⟩†) = r̄(κ1†f) + r̄(κ2†f)",
    "U.iv": "r̄⟨f⟩ = r̄f",
    "U.v": "γ⟨f⟩ = ⟨γf⟩",
    "U.vi": "⟨⟨f⟩g⟩ = ⟨fg⟩",
    "U.vii": "(ē+ē)⟨f⟩ = (ē+ē)⟨f⟩ē",
    "U.viii": "⟨f⟩ē is a decision and equals (ē+ē)⟨f⟩",
    "U.ix": "⟨f⟩ē = ⟨fē⟩",
    "U.x": "κi†⟨f⟩ = r̄(κi†f)",
    "U.xi": "⟨f⟩g = (g+g)⟨fg⟩",
    # logic
    **{f"DMQ.{n}": text for n, text in [
        ("i", "p ∧ p = p"),
        ("ii", "p ∨ p = p"),
        ("iii", "p ∧ q = q ∧ p"),
        ("iv", "p ∨ q = q ∨ p"),
        ("v", "p ∧ (q ∧ r) = (p ∧ q) ∧ r"),
        ("vi", "p ∨ (q ∨ r) = (p ∨ q) ∨ r"),
        ("vii", "p ∧ (q ∨ r) = (p ∧ q) ∨ (p ∧ r)"),
        ("viii", "p ∨ (q ∧ r) = (p ∨ q) ∧ (p ∨ r)"),
        ("ix", "¬¬p = p"),
        ("x", "¬(p ∧ q) = ¬p ∨ ¬q"),
        ("xi", "¬(p ∨ q) = ¬p ∧ ¬q"),
        ("xii", "p ∧ ⊤ = p"),
        ("xiii", "p ∨ ⊥ = p"),
    ]},
    "L.well_formed": "constants and connectives are decisions",
    "L.simplification": "replacing the p† leg by ∇ gives the same connective",
    "L.reversible": "connectives are partial isomorphisms",
    "H.neg": "f◇ preserves ¬",
    "H.conj": "f◇ preserves ∧",
    "H.disj": "f◇ preserves ∨",
    "H.entails": "f◇ preserves ⊨",
    "H.units": "f◇ preserves ⊤ and ⊥ exactly when f is total",
    "H.top_partial": "f◇(⊤) = κ1 r̄f",
    "E.characterization": "p ⊨ q iff κ1†p ≤ κ1†q and r̄p ≤ r̄q",
    "E.anti_iso": "p ≼ q iff ¬q ⊑ ¬p",
    "E.orders_differ": "some p, q have p ≼ q but not p ⊑ q",
    "I.i": "r̄(¬p) = r̄p",
    "I.ii": "r̄(p ∧ q) = r̄p r̄q",
    "I.iii": "r̄(p ∨ q) = r̄p r̄q",
    "I.iv": "r̄(p ∧ q) ≤ r̄p and ≤ r̄q",
    "I.v": "r̄(p ∨ q) ≤ r̄p and ≤ r̄q",
    "B.absorption": "p = p ∧ (p ∨ q) and p = p ∨ (p ∧ q) for total p, q",
    "B.contradiction": "p ∧ ¬p = ⊥ for total p",
    "B.tertium": "p ∨ ¬p = ⊤ for total p",
    "B.totality": "constants are total and connectives preserve totality",
    "B.strict_absorption": "some non-total p, q violate absorption",
    "B.strict_tertium": "some non-total p violates tertium non datur",
    "Du.roundtrip_dec": "⟨(!+!)⟨f⟩⟩ = ⟨f⟩",
    "Du.roundtrip_pred": "p = (!+!)⟨p⟩",
    "Du.general": "(!+!)f = (!+!)⟨f⟩",
    "Du.natural": "both naturality squares commute",
    "Du.any": "⟨(!+!)f⟩ = ⟨f⟩",
    # kleene
    "K.neg": "reading ¬p pointwise gives weak negation",
    "K.conj": "reading p ∧ q pointwise gives weak conjunction",
    "K.disj": "reading p ∨ q pointwise gives weak disjunction",
    "K.units": "⊤ reads t and ⊥ reads f everywhere",
    "K.classical": "weak ∧ and ∨ on {t, f} are classical",
    "K.valuation": "valuations and decisions are in bijection",
    # flowchart
    "F.adequacy": "operational and denotational semantics agree on every state",
    "F.coherence": "branching on a decision equals branching on the evaluated guard",
    "F.unrolling": "while p do c od = if p then (c; while p do c od) else skip fi",
    "F.fixpoint": "loop approximants increase and stabilise within |Σ|+1 steps",
}


SUITES: dict[str, tuple[tuple[str, ...], Callable]] = {}


def suite(name: str, laws: Iterable[str]):
    def register(fn):
        SUITES[name] = (tuple(laws), fn)
        return fn

    return register


def _leq(f: PMap, g: PMap) -> bool:
    return natural_leq(f, g)


# core-pfn

@suite("restriction", ["R1", "R2", "R3", "R4"])
def _restriction(run: _Run) -> None:
    for env in run.instances("XY", {"f": ("map", "X", "Y")}):
        f = env["f"]
        run.check("R1", compose(f, restriction(f)) == f, f=f)
    for env in run.instances("XYZ", {"f": ("map", "X", "Y"), "g": ("map", "X", "Z")}):
        f, g = env["f"], env["g"]
        rf, rg = restriction(f), restriction(g)
        run.check("R2", compose(rf, rg) == compose(rg, rf), f=f, g=g)
        run.check("R3", restriction(compose(f, rg)) == compose(rf, rg), f=f, g=g)
    for env in run.instances("XYZ", {"f": ("map", "X", "Y"), "g": ("map", "Y", "Z")}):
        f, g = env["f"], env["g"]
        run.check(
            "R4",
            compose(restriction(g), f) == compose(f, restriction(compose(g, f))),
            f=f,
            g=g,
        )


@suite("order", [
    "order.1", "order.2", "order.3", "order.4", "order.5",
    "pinv.unique", "pinv.involution", "ridem.restriction",
])
def _order(run: _Run) -> None:
    for env in run.instances(
        "XYZ", {"f": ("map", "X", "Y"), "g": ("map", "Y", "Z"), "g2": ("map", "Y", "Z")}, ternary=True
    ):
        f, g, g2 = env["f"], env["g"], env["g2"]
        if _leq(g, g2):
            run.check(
                "order.1",
                _leq(restriction(compose(g, f)), restriction(compose(g2, f))),
                f=f, g=g, g_prime=g2,
            )
    for env in run.instances("XYZ", {"f": ("map", "X", "Y"), "g": ("map", "Y", "Z")}):
        f, g = env["f"], env["g"]
        run.check("order.2", _leq(restriction(compose(g, f)), restriction(f)), f=f, g=g)
    for env in run.instances(
        "XYZ", {"f": ("map", "X", "Y"), "g": ("map", "X", "Y"), "h": ("map", "Y", "Z")}, ternary=True
    ):
        f, g, h = env["f"], env["g"], env["h"]
        if _leq(f, g):
            run.check("order.3", _leq(compose(h, f), compose(h, g)), f=f, g=g, h=h)
    for env in run.instances(
        "WXY", {"f": ("map", "X", "Y"), "g": ("map", "X", "Y"), "h": ("map", "W", "X")}, ternary=True
    ):
        f, g, h = env["f"], env["g"], env["h"]
        if _leq(f, g):
            run.check("order.3", _leq(compose(f, h), compose(g, h)), f=f, g=g, h_prime=h)
    for env in run.instances(
        "XYZW",
        {
            "f": ("map", "X", "Y"), "f2": ("map", "X", "Y"),
            "g": ("map", "Z", "W"), "g2": ("map", "Z", "W"),
        },
        ternary=True,
    ):
        f, f2, g, g2 = env["f"], env["f2"], env["g"], env["g2"]
        lhs = _leq(f, f2) and _leq(g, g2)
        rhs = _leq(sum_map(f, g), sum_map(f2, g2))
        run.check("order.4", lhs == rhs, f=f, f_prime=f2, g=g, g_prime=g2)
    for env in run.instances("XY", {"f": ("map", "X", "X"), "g": ("map", "X", "Y")}):
        f, g = env["f"], env["g"]
        if _leq(f, restriction(g)):
            run.check("order.5", f == restriction(f), f=f, g=g)
    for env in run.instances("XY", {"f": ("map", "X", "Y")}, ternary=True):
        f = env["f"]
        inv = partial_inverse(f)
        injective = len({t for t in f.table if t is not None}) == sum(
            t is not None for t in f.table
        )
        if run.exhaustive:
            # brute force over every candidate Y -> X
            found = [
                h for h in run.maps(f.cod, f.dom)
                if compose(h, f) == restriction(f) and compose(f, h) == restriction(h)
            ]
            expected = [inv] if injective else []
            run.check("pinv.unique", found == expected and (inv is None) != injective, f=f)
        else:
            ok = (inv is None) != injective
            if inv is not None:
                ok = ok and compose(inv, f) == restriction(f) and compose(f, inv) == restriction(inv)
            run.check("pinv.unique", ok, f=f)
        if inv is not None:
            run.check("pinv.involution", partial_inverse(inv) == f, f=f)
        run.check("ridem.restriction", is_restriction_idempotent(restriction(f)), f=f)


# coproducts

@suite("coproduct", [
    "copair.equations", "copair.unique", "inj.total", "inj.pinv", "nabla.natural",
    "twist.natural", "zero.least", "summap.restriction", "summap.functor", "structural",
])
def _coproduct(run: _Run) -> None:
    for env in run.instances("XYZ", {"f": ("map", "X", "Z"), "g": ("map", "Y", "Z")}, ternary=True):
        f, g = env["f"], env["g"]
        X, Y, Z = env["X"], env["Y"], env["Z"]
        h = copair(f, g)
        run.check(
            "copair.equations",
            compose(h, inj1(X, Y)) == f and compose(h, inj2(X, Y)) == g,
            f=f, g=g,
        )
        if run.exhaustive:
            found = [
                c for c in run.maps(sum_obj(X, Y), Z)
                if compose(c, inj1(X, Y)) == f and compose(c, inj2(X, Y)) == g
            ]
            run.check("copair.unique", found == [h], f=f, g=g)
        else:
            # perturbing [f,g] anywhere breaks one of the equations
            table = list(h.table)
            if table:
                i = run.options["rng"].randrange(len(table))
                alt = [None] + list(range(len(Z)))
                alt.remove(table[i])
                if alt:
                    table[i] = run.options["rng"].choice(alt)
                    c = PMap.from_table(h.dom, Z, table)
                    run.check(
                        "copair.unique",
                        not (compose(c, inj1(X, Y)) == f and compose(c, inj2(X, Y)) == g),
                        f=f, g=g,
                    )
    for env in run.instances("XY", {}):
        X, Y = env["X"], env["Y"]
        k1, k2 = inj1(X, Y), inj2(X, Y)
        run.check("inj.total", is_total(k1) and is_total(k2), X=X, Y=Y)
        run.check(
            "inj.pinv",
            partial_inverse(k1) == proj1_dagger(X, Y)
            and partial_inverse(k2) == proj2_dagger(X, Y)
            and partial_inverse(k1) == copair(identity(X), zero_map(Y, X))
            and compose(proj1_dagger(X, Y), k1) == restriction(k1)
            and compose(k1, proj1_dagger(X, Y)) == restriction(proj1_dagger(X, Y)),
            X=X, Y=Y,
        )
        run.check(
            "structural",
            compose(twist(Y, X), twist(X, Y)) == identity(sum_obj(X, Y))
            and compose(codiagonal(X), inj1(X, X)) == identity(X)
            and compose(codiagonal(X), inj2(X, X)) == identity(X)
            and copair(identity(X), identity(X)) == codiagonal(X)
            and copair(inj2(Y, X), inj1(Y, X)) == twist(X, Y)
            and compose(proj1_dagger(X, Y), k1) == identity(X)
            and compose(proj1_dagger(X, Y), k2) == zero_map(Y, X)
            and compose(proj2_dagger(X, Y), k2) == identity(Y)
            and is_total(bang(X))
            and restriction(zero_map(X, X)) == zero_map(X, X)
            and restriction(zero_map(X, Y)) == zero_map(X, X),
            X=X, Y=Y,
        )
    for env in run.instances("XYZ", {}, ternary=True):
        X, Y, Z = env["X"], env["Y"], env["Z"]
        S = sum_obj(sum_obj(X, Y), Z)
        T = sum_obj(X, sum_obj(Y, Z))
        run.check(
            "structural",
            compose(assoc_left(X, Y, Z), assoc_right(X, Y, Z)) == identity(S)
            and compose(assoc_right(X, Y, Z), assoc_left(X, Y, Z)) == identity(T),
            X=X, Y=Y, Z=Z,
        )
    run.check("structural", bang(UNIT) == identity(UNIT))
    for env in run.instances("XYZW", {"f": ("map", "X", "Y"), "g": ("map", "Z", "W")}, ternary=True):
        f, g = env["f"], env["g"]
        X, Y, Z, W = env["X"], env["Y"], env["Z"], env["W"]
        run.check(
            "twist.natural",
            compose(twist(Y, W), sum_map(f, g)) == compose(sum_map(g, f), twist(X, Z)),
            f=f, g=g,
        )
        run.check(
            "summap.restriction",
            restriction(sum_map(f, g)) == sum_map(restriction(f), restriction(g)),
            f=f, g=g,
        )
        run.check("zero.least", _leq(zero_map(X, Y), f) and _leq(zero_map(Z, W), g), f=f, g=g)
    for env in run.instances("XY", {"f": ("map", "X", "Y")}):
        f = env["f"]
        X, Y = env["X"], env["Y"]
        run.check(
            "nabla.natural",
            compose(codiagonal(Y), sum_map(f, f)) == compose(f, codiagonal(X)),
            f=f,
        )
        run.check(
            "summap.functor",
            sum_map(identity(X), identity(Y)) == identity(sum_obj(X, Y)),
            X=X, Y=Y,
        )
    for env in run.instances(
        "XYZ",
        {"f": ("map", "Y", "Z"), "f2": ("map", "X", "Y"), "g": ("map", "X", "Z"), "g2": ("map", "Y", "X")},
        ternary=True,
    ):
        f, f2, g, g2 = env["f"], env["f2"], env["g"], env["g2"]
        run.check(
            "summap.functor",
            compose(sum_map(f, g), sum_map(f2, g2)) == sum_map(compose(f, f2), compose(g, g2)),
            f=f, f_prime=f2, g=g, g_prime=g2,
        )


# decisions

def _kd(i: int, f: PMap) -> PMap:
    """``κi† ∘ f`` for ``f`` into a sum."""
    return compose(kappa_dagger(i, f.cod), f)


@suite("decision", ["D.unique", "D.laws", "D.decrep", "D.tag_only", "D.transform"])
def _decision(run: _Run) -> None:
    for env in run.instances("XYZ", {"f": ("map", "X", "Y+Z")}, ternary=True):
        f = env["f"]
        d = decide(f)
        run.check("D.laws", check_decision_laws(d, f), f=f)
        if run.exhaustive:
            X = f.dom
            candidates = run.maps(X, sum_obj(X, X))
            passing = [p for p in candidates if check_decision_laws(p, f)]
            run.check("D.unique", passing == [d.underlying], f=f)
            r1, r2 = restriction(_kd(1, f)), restriction(_kd(2, f))
            for p in candidates:
                if _kd(1, p) == r1 and _kd(2, p) == r2:
                    run.check("D.decrep", p == d.underlying, f=f, p=p)
        else:
            r1, r2 = restriction(_kd(1, f)), restriction(_kd(2, f))
            p = d.underlying
            run.check("D.decrep", _kd(1, p) == r1 and _kd(2, p) == r2, f=f)
            other = random_pmap(f.dom, p.cod, run.options["rng"])
            if other != p:
                run.check("D.unique", not check_decision_laws(other, f), f=f, p=other)
    for env in run.instances("X", {"p": ("map", "X", "X+X")}, ternary=True):
        p = env["p"]
        both = is_restriction_idempotent(_kd(1, p)) and is_restriction_idempotent(_kd(2, p))
        run.check("D.tag_only", is_tag_only(p) == both, p=p)
    for env in run.instances(
        "XYZ", {"d": ("dec", "X"), "g": ("map", "Y", "X"), "f": ("map", "Z", "Y")}, ternary=True
    ):
        d, g, f = env["d"], env["g"], env["f"]
        run.check(
            "D.transform",
            transform(identity(d.carrier), d) == d
            and transform(compose(g, f), d) == transform(f, transform(g, d)),
            d=d, g=g, f=f,
        )


@suite("utility", [
    "U.i", "U.ii", "U.iii", "U.iv", "U.v", "U.vi", "U.vii", "U.viii", "U.ix", "U.x", "U.xi",
])
def _utility(run: _Run) -> None:
    for env in run.instances("XYZ", {"f": ("map", "X", "Y+Z")}, ternary=True):
        f = env["f"]
        X, Y, Z = env["X"], env["Y"], env["Z"]
        d = decide(f).underlying
        k12 = sum_map(inj1(X, X), inj2(X, X))
        run.check(
            "U.i",
            decide(d).underlying == d and compose(sum_map(d, d), d) == compose(k12, d),
            f=f,
        )
        r1, r2 = restriction(_kd(1, f)), restriction(_kd(2, f))
        inv = partial_inverse(d)
        run.check(
            "U.ii",
            inv is not None and inv == copair(r1, r2) and inv == decision_inverse(decide(f)),
            f=f,
        )
        run.check("U.iii", inv is not None and restriction(inv) == sum_map(r1, r2), f=f)
        run.check("U.iv", restriction(d) == restriction(f), f=f)
        run.check(
            "U.v",
            compose(twist(X, X), d) == decide(compose(twist(Y, Z), f)).underlying,
            f=f,
        )
        run.check("U.x", _kd(1, d) == r1 and _kd(2, d) == r2, f=f)
    for env in run.instances("XYZ", {"f": ("map", "X", "Y+Z"), "e": ("idem", "X")}, ternary=True):
        f, e = env["f"], env["e"]
        d = decide(f).underlying
        ee = sum_map(e, e)
        run.check("U.vii", compose(ee, d) == compose(compose(ee, d), e), f=f, e=e)
        de = compose(d, e)
        run.check("U.viii", is_tag_only(de) and de == compose(ee, d), f=f, e=e)
        run.check("U.ix", de == decide(compose(f, e)).underlying, f=f, e=e)
    for env in run.instances("WXYZ", {"f": ("map", "X", "Y+Z"), "g": ("map", "W", "X")}, ternary=True):
        f, g = env["f"], env["g"]
        d = decide(f).underlying
        fg = compose(f, g)
        run.check("U.vi", decide(compose(d, g)) == decide(fg), f=f, g=g)
        run.check(
            "U.xi",
            compose(d, g) == compose(sum_map(g, g), decide(fg).underlying),
            f=f, g=g,
        )


# logic

_CONNECTIVES = {"and": conj, "or": disj}


@suite("dmq", [
    "DMQ.i", "DMQ.ii", "DMQ.iii", "DMQ.iv", "DMQ.v", "DMQ.vi", "DMQ.vii", "DMQ.viii",
    "DMQ.ix", "DMQ.x", "DMQ.xi", "DMQ.xii", "DMQ.xiii",
    "L.well_formed", "L.simplification", "L.reversible",
])
def _dmq(run: _Run) -> None:
    for env in run.instances("X", {"p": ("dec", "X")}):
        p, X = env["p"], env["X"]
        run.check("DMQ.i", conj(p, p) == p, p=p)
        run.check("DMQ.ii", disj(p, p) == p, p=p)
        run.check("DMQ.ix", neg(neg(p)) == p, p=p)
        run.check("DMQ.xii", conj(p, top(X)) == p, p=p)
        run.check("DMQ.xiii", disj(p, bot(X)) == p, p=p)
        run.check(
            "L.well_formed",
            all(is_tag_only(c.underlying) for c in (top(X), bot(X), neg(p))),
            p=p,
        )
    for env in run.instances("X", {"p": ("dec", "X"), "q": ("dec", "X")}):
        p, q = env["p"], env["q"]
        pq_and, pq_or = conj(p, q), disj(p, q)
        run.check("DMQ.iii", pq_and == conj(q, p), p=p, q=q)
        run.check("DMQ.iv", pq_or == disj(q, p), p=p, q=q)
        run.check("DMQ.x", neg(pq_and) == disj(neg(p), neg(q)), p=p, q=q)
        run.check("DMQ.xi", neg(pq_or) == conj(neg(p), neg(q)), p=p, q=q)
        run.check(
            "L.well_formed",
            is_tag_only(pq_and.underlying) and is_tag_only(pq_or.underlying),
            p=p, q=q,
        )
        run.check(
            "L.simplification",
            conj_codiagonal(p, q) == pq_and and disj_codiagonal(p, q) == pq_or,
            p=p, q=q,
        )
        run.check(
            "L.reversible",
            partial_inverse(pq_and.underlying) is not None
            and partial_inverse(pq_or.underlying) is not None,
            p=p, q=q,
        )
    for env in run.instances("X", {"p": ("dec", "X"), "q": ("dec", "X"), "r": ("dec", "X")}, ternary=True):
        p, q, r = env["p"], env["q"], env["r"]
        run.check("DMQ.v", conj(p, conj(q, r)) == conj(conj(p, q), r), p=p, q=q, r=r)
        run.check("DMQ.vi", disj(p, disj(q, r)) == disj(disj(p, q), r), p=p, q=q, r=r)
        run.check(
            "DMQ.vii", conj(p, disj(q, r)) == disj(conj(p, q), conj(p, r)), p=p, q=q, r=r
        )
        run.check(
            "DMQ.viii", disj(p, conj(q, r)) == conj(disj(p, q), disj(p, r)), p=p, q=q, r=r
        )


@suite("homomorphism", ["H.neg", "H.conj", "H.disj", "H.entails", "H.units", "H.top_partial"])
def _homomorphism(run: _Run) -> None:
    for env in run.instances(
        "XY", {"f": ("map", "X", "Y"), "p": ("dec", "Y"), "q": ("dec", "Y")}, ternary=True
    ):
        f, p, q = env["f"], env["p"], env["q"]
        X, Y = env["X"], env["Y"]
        fp, fq = transform(f, p), transform(f, q)
        run.check("H.neg", transform(f, neg(p)) == neg(fp), f=f, p=p)
        run.check("H.conj", transform(f, conj(p, q)) == conj(fp, fq), f=f, p=p, q=q)
        run.check("H.disj", transform(f, disj(p, q)) == disj(fp, fq), f=f, p=p, q=q)
        if entails(p, q):
            run.check("H.entails", entails(fp, fq), f=f, p=p, q=q)
    for env in run.instances("XY", {"f": ("map", "X", "Y")}, ternary=True):
        f, X, Y = env["f"], env["X"], env["Y"]
        keeps = transform(f, top(Y)) == top(X) and transform(f, bot(Y)) == bot(X)
        run.check("H.units", keeps == is_total(f), f=f)
        run.check(
            "H.top_partial",
            transform(f, top(Y)).underlying == compose(inj1(X, X), restriction(f)),
            f=f,
        )


@suite("entailment", [
    "E.characterization", "E.anti_iso", "E.orders_differ",
    "I.i", "I.ii", "I.iii", "I.iv", "I.v",
])
def _entailment(run: _Run) -> None:
    differ = None
    for env in run.instances("X", {"p": ("dec", "X"), "q": ("dec", "X")}):
        p, q = env["p"], env["q"]
        run.check("E.characterization", entails(p, q) == entails_by_order(p, q), p=p, q=q)
        run.check("E.anti_iso", conj_leq(p, q) == disj_leq(neg(q), neg(p)), p=p, q=q)
        if differ is None and conj_leq(p, q) and not disj_leq(p, q):
            differ = (p, q)
        rp, rq = restriction(p.underlying), restriction(q.underlying)
        r_and, r_or = restriction(conj(p, q).underlying), restriction(disj(p, q).underlying)
        run.check("I.i", restriction(neg(p).underlying) == rp, p=p)
        run.check("I.ii", r_and == compose(rp, rq), p=p, q=q)
        run.check("I.iii", r_or == compose(rp, rq), p=p, q=q)
        run.check("I.iv", _leq(r_and, rp) and _leq(r_and, rq), p=p, q=q)
        run.check("I.v", _leq(r_or, rp) and _leq(r_or, rq), p=p, q=q)
    if differ is None:
        differ = _search_one_point(lambda p, q: conj_leq(p, q) and not disj_leq(p, q))
    run.check("E.orders_differ", differ is not None)


def _search_one_point(predicate) -> Optional[tuple]:
    X = FinObj.atom(["x"])
    for p in kleene.all_decisions(X):
        for q in kleene.all_decisions(X):
            if predicate(p, q):
                return p, q
    return None


def _absorbs(p: Decision, q: Decision) -> bool:
    return conj(p, disj(p, q)) == p and disj(p, conj(p, q)) == p


@suite("boolean", [
    "B.absorption", "B.contradiction", "B.tertium", "B.totality",
    "B.strict_absorption", "B.strict_tertium",
])
def _boolean(run: _Run) -> None:
    kind = "dec" if run.options.get("include_partial") else "tdec"
    for env in run.instances("X", {"p": (kind, "X"), "q": (kind, "X")}):
        p, q, X = env["p"], env["q"], env["X"]
        run.check("B.absorption", _absorbs(p, q), p=p, q=q)
        run.check("B.contradiction", conj(p, neg(p)) == bot(X), p=p)
        run.check("B.tertium", disj(p, neg(p)) == top(X), p=p)
        if is_total(p.underlying) and is_total(q.underlying):
            run.check(
                "B.totality",
                all(is_total(c.underlying) for c in (top(X), bot(X), neg(p), conj(p, q), disj(p, q))),
                p=p, q=q,
            )
    # non-total witnesses that the laws are strictly Boolean
    witness = _search_one_point(lambda p, q: not _absorbs(p, q))
    run.check("B.strict_absorption", witness is not None and not is_total(witness[1].underlying))
    witness = _search_one_point(lambda p, q: disj(p, neg(p)) != top(p.carrier))
    run.check("B.strict_tertium", witness is not None and not is_total(witness[0].underlying))


@suite("duality", ["Du.roundtrip_dec", "Du.roundtrip_pred", "Du.general", "Du.natural", "Du.any"])
def _duality(run: _Run) -> None:
    for env in run.instances("XYZ", {"f": ("map", "X", "Y+Z")}, ternary=True):
        f, Y, Z = env["f"], env["Y"], env["Z"]
        d = decide(f)
        run.check("Du.roundtrip_dec", pred_to_dec(dec_to_pred(d)) == d, f=f)
        bb = sum_map(bang(Y), bang(Z))
        run.check("Du.general", compose(bb, f) == dec_to_pred(d), f=f)
        run.check("Du.any", decision_of_any(f) == d, f=f)
    for env in run.instances("X", {"p": ("map", "X", "1+1")}, ternary=True):
        p = env["p"]
        run.check("Du.roundtrip_pred", dec_to_pred(pred_to_dec(p)) == p, p=p)
    for env in run.instances(
        "XW", {"d": ("dec", "X"), "p": ("map", "X", "1+1"), "g": ("map", "W", "X")}, ternary=True
    ):
        d, p, g = env["d"], env["p"], env["g"]
        run.check(
            "Du.natural",
            dec_to_pred(transform(g, d)) == compose(dec_to_pred(d), g)
            and pred_to_dec(compose(p, g)) == transform(g, pred_to_dec(p)),
            d=d, p=p, g=g,
        )


# kleene bridge

@suite("bridge", ["K.neg", "K.conj", "K.disj", "K.units", "K.classical", "K.valuation"])
def _bridge(run: _Run) -> None:
    read = kleene.read_pointwise
    for env in run.instances("X", {"p": ("dec", "X"), "q": ("dec", "X")}):
        p, q, X = env["p"], env["q"], env["X"]
        pq_and, pq_or, np_ = conj(p, q), disj(p, q), neg(p)
        run.check(
            "K.conj",
            all(read(pq_and, x) == kleene.weak_and(read(p, x), read(q, x)) for x in X),
            p=p, q=q,
        )
        run.check(
            "K.disj",
            all(read(pq_or, x) == kleene.weak_or(read(p, x), read(q, x)) for x in X),
            p=p, q=q,
        )
        run.check("K.neg", all(read(np_, x) == kleene.weak_not(read(p, x)) for x in X), p=p)
    for env in run.instances("X", {}):
        X = env["X"]
        run.check(
            "K.units",
            all(read(top(X), x) is kleene.T and read(bot(X), x) is kleene.F for x in X),
            X=X,
        )
        if run.exhaustive:
            decisions = list(kleene.all_decisions(X))
            readings = {kleene.valuation_of(d) for d in decisions}
            run.check(
                "K.valuation",
                len(set(decisions)) == 3 ** len(X) == len(readings)
                and all(decide(d.underlying) == d for d in decisions),
                X=X,
            )
        else:
            d = random_decision(run.options["rng"], X)
            v = dict(zip(X.elems, kleene.valuation_of(d)))
            run.check("K.valuation", kleene.decision_from_valuation(X, v) == d, d=d)
    for a, b in itertools.product((True, False), repeat=2):
        ka, kb = (kleene.T if a else kleene.F), (kleene.T if b else kleene.F)
        run.check(
            "K.classical",
            kleene.weak_and(ka, kb) is (kleene.T if a and b else kleene.F)
            and kleene.weak_or(ka, kb) is (kleene.T if a or b else kleene.F),
        )


# flowchart

def _subprograms(program):
    from .flowchart import ast

    yield program
    if isinstance(program, ast.Seq):
        yield from _subprograms(program.first)
        yield from _subprograms(program.second)
    elif isinstance(program, ast.If):
        yield from _subprograms(program.then)
        yield from _subprograms(program.orelse)
    elif isinstance(program, ast.While):
        yield from _subprograms(program.body)


def _flowchart_programs(run: _Run) -> Iterator[tuple[str, object, object]]:
    from .flowchart import corpus, parse

    for name, source in corpus().items():
        space, program = parse(source)
        yield name, space, program
    if not run.exhaustive:
        from .flowchart.generate import random_program

        rng = run.options["rng"]
        for i in range(min(run.mode.trials, 200)):
            space, program = random_program(rng)
            yield f"random-{i}", space, program


@suite("flowchart", ["F.adequacy", "F.coherence", "F.unrolling", "F.fixpoint"])
def _flowchart(run: _Run) -> None:
    from .flowchart import ast, denote, denote_pred, disagreements, eval_pred, while_fixpoint

    for name, space, program in _flowchart_programs(run):
        bad = [space.label(s) for s in disagreements(program, space)]
        run.check("F.adequacy", not bad, program=name, states=",".join(bad[:5]))
        for sub in _subprograms(program):
            if isinstance(sub, ast.If):
                whole = denote(sub, space)
                then, orelse = denote(sub.then, space), denote(sub.orelse, space)
                ok = True
                for s in space.states():
                    guard = eval_pred(sub.cond, space, s)
                    i = space.index(s)
                    expected = {
                        kleene.T: then.table[i],
                        kleene.F: orelse.table[i],
                        kleene.U: None,
                    }[guard]
                    ok = ok and whole.table[i] == expected
                run.check("F.coherence", ok, program=name, statement=repr(sub))
            elif isinstance(sub, ast.While):
                unrolled = ast.If(sub.cond, ast.Seq(sub.body, sub), ast.Skip())
                run.check(
                    "F.unrolling",
                    denote(sub, space) == denote(unrolled, space),
                    program=name, statement=repr(sub),
                )
                decision = pred_to_dec(denote_pred(sub.cond, space)).underlying
                try:
                    while_fixpoint(decision, denote(sub.body, space))
                    ok = True
                except AssertionError:
                    ok = False
                run.check("F.fixpoint", ok, program=name, statement=repr(sub))


# runner

def run_suite(name: str, mode: Mode = None, *, include_partial: bool = False) -> LawReport:
    """Run every law of the named suite and collect failures.

    ``include_partial`` only affects the ``boolean`` suite: it feeds non-total
    decisions into the Boolean laws, which then report counterexamples.
    """
    if name not in SUITES:
        raise UnknownSuiteError(f"unknown suite {name!r}; expected one of {sorted(SUITES)}")
    mode = mode or Exhaustive()
    seed = mode.seed if isinstance(mode, Random) else None
    report = LawReport(suite=name, seed=seed)
    options = {"include_partial": include_partial}
    if seed is not None:
        options["rng"] = random.Random(f"{name}:{seed}")
    laws, fn = SUITES[name]
    # the suites check D1/D2 themselves, so skip the re-check inside decide
    verify, decisions.VERIFY_DECISION_LAWS = decisions.VERIFY_DECISION_LAWS, False
    start = time.perf_counter()
    try:
        fn(_Run(report, mode, options))
    finally:
        decisions.VERIFY_DECISION_LAWS = verify
    report.ms = int((time.perf_counter() - start) * 1000)
    for law in laws:
        report.law_cases.setdefault(law, 0)
    return report
