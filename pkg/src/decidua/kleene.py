"""Weak Kleene three-valued logic and its pointwise bridge to decisions."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .coproducts import sum_obj
from .decisions import Decision
from .pfn import FinObj, PMap


class Kleene3(enum.Enum):
    T = "t"
    F = "f"
    U = "u"

    def __str__(self) -> str:
        return self.value


T, F, U = Kleene3.T, Kleene3.F, Kleene3.U

# Tables indexed [left][right]; undefinedness is contagious.
_AND = {
    T: {T: T, F: F, U: U},
    F: {T: F, F: F, U: U},
    U: {T: U, F: U, U: U},
}
_OR = {
    T: {T: T, F: T, U: U},
    F: {T: T, F: F, U: U},
    U: {T: U, F: U, U: U},
}
_NOT = {T: F, F: T, U: U}


def weak_not(a: Kleene3) -> Kleene3:
    return _NOT[a]


def weak_and(a: Kleene3, b: Kleene3) -> Kleene3:
    return _AND[a][b]


def weak_or(a: Kleene3, b: Kleene3) -> Kleene3:
    return _OR[a][b]


class UnboundVariableError(KeyError):
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


Formula = Union[Var, Const, Not, And, Or]


def eval_formula(phi: Formula, valuation: Mapping[str, Kleene3]) -> Kleene3:
    if isinstance(phi, Var):
        try:
            return valuation[phi.name]
        except KeyError:
            raise UnboundVariableError(phi.name) from None
    if isinstance(phi, Const):
        return T if phi.value else F
    if isinstance(phi, Not):
        return weak_not(eval_formula(phi.arg, valuation))
    if isinstance(phi, And):
        return weak_and(eval_formula(phi.left, valuation), eval_formula(phi.right, valuation))
    if isinstance(phi, Or):
        return weak_or(eval_formula(phi.left, valuation), eval_formula(phi.right, valuation))
    raise TypeError(f"not a formula: {phi!r}")


def read_pointwise(d: Decision, x: str) -> Kleene3:
    """``t`` where ``d`` tags ``x`` left, ``f`` where right, ``u`` where undefined."""
    X = d.carrier
    if x not in X:
        raise KeyError(f"{x!r} is not in the carrier {X}")
    t = d.underlying.table[X.index(x)]
    if t is None:
        return U
    return T if t < len(X) else F


def valuation_of(d: Decision) -> tuple[Kleene3, ...]:
    """Readings of ``d`` at every element, in carrier order."""
    return tuple(read_pointwise(d, x) for x in d.carrier)


def decision_from_valuation(X: FinObj, v: Mapping[str, Kleene3]) -> Decision:
    n = len(X)
    table = []
    for i, x in enumerate(X.elems):
        value = v[x]
        table.append(i if value is T else n + i if value is F else None)
    return Decision(PMap._raw(X, sum_obj(X, X), tuple(table)))


def all_decisions(X: FinObj) -> Iterator[Decision]:
    """Every decision on ``X``, one per valuation, in a fixed order."""
    for values in itertools.product((T, F, U), repeat=len(X)):
        yield decision_from_valuation(X, dict(zip(X.elems, values)))
