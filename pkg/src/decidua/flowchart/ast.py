"""Syntax trees and finite state spaces for the flowchart language."""
from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from ..pfn import FinObj

DEFAULT_STATE_CAP = 4096


class FlowchartError(Exception):
    pass


class StateCapExceededError(FlowchartError):
    pass


# arithmetic expressions

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    ident: str


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - *
    left: "Aexp"
    right: "Aexp"


Aexp = Union[Num, Name, BinOp]


# predicates

@dataclass(frozen=True)
class PTrue:
    pass


@dataclass(frozen=True)
class PFalse:
    pass


@dataclass(frozen=True)
class PUndef:
    pass


@dataclass(frozen=True)
class Cmp:
    left: Aexp
    op: str  # one of = < <=
    right: Aexp


@dataclass(frozen=True)
class PNot:
    arg: "Pred"


@dataclass(frozen=True)
class PAnd:
    left: "Pred"
    right: "Pred"


@dataclass(frozen=True)
class POr:
    left: "Pred"
    right: "Pred"


Pred = Union[PTrue, PFalse, PUndef, Cmp, PNot, PAnd, POr]


# commands

@dataclass(frozen=True)
class Skip:
    pass


@dataclass(frozen=True)
class Assign:
    ident: str
    expr: Aexp


@dataclass(frozen=True)
class Seq:
    first: "Program"
    second: "Program"


@dataclass(frozen=True)
class If:
    cond: Pred
    then: "Program"
    orelse: "Program"


@dataclass(frozen=True)
class While:
    cond: Pred
    body: "Program"


Program = Union[Skip, Assign, Seq, If, While]

State = tuple  # one in-range integer per declared variable, in declaration order


@dataclass(frozen=True)
class StateSpace:
    """Variables ``name in 0..bound``; states are tuples in declaration order."""

    vars: tuple[tuple[str, int], ...] = ()
    cap: int = DEFAULT_STATE_CAP

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple((n, int(b)) for n, b in self.vars))
        names = [n for n, _ in self.vars]
        if len(set(names)) != len(names):
            raise FlowchartError("variable names must be distinct")
        if any(b < 0 for _, b in self.vars):
            raise FlowchartError("bounds must be nonnegative")
        if self.size > self.cap:
            raise StateCapExceededError(
                f"state space has {self.size} states, over the cap of {self.cap}"
            )

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.vars)

    @property
    def size(self) -> int:
        return math.prod(b + 1 for _, b in self.vars)

    @property
    def max_value(self) -> int:
        """Largest value any arithmetic intermediate may take."""
        return max((b for _, b in self.vars), default=0)

    def position(self, name: str) -> int:
        return self.names.index(name)

    def bound(self, name: str) -> int:
        return self.vars[self.position(name)][1]

    def states(self) -> Iterator[State]:
        return itertools.product(*(range(b + 1) for _, b in self.vars))

    def label(self, state: State) -> str:
        if not self.vars:
            return "ε"
        return ",".join(f"{n}={v}" for n, v in zip(self.names, state))

    def state(self, values: Mapping[str, int]) -> State:
        unknown = set(values) - set(self.names)
        if unknown:
            raise FlowchartError(f"undeclared variables: {sorted(unknown)}")
        missing = set(self.names) - set(values)
        if missing:
            raise FlowchartError(f"unassigned variables: {sorted(missing)}")
        state = tuple(int(values[n]) for n in self.names)
        for (n, b), v in zip(self.vars, state):
            if not 0 <= v <= b:
                raise FlowchartError(f"{n}={v} is outside 0..{b}")
        return state

    def as_dict(self, state: State) -> dict[str, int]:
        return dict(zip(self.names, state))

    def index(self, state: State) -> int:
        """Position of ``state`` in :meth:`states` order."""
        i = 0
        for (_, b), v in zip(self.vars, state):
            i = i * (b + 1) + v
        return i

    @functools.cached_property
    def obj(self) -> FinObj:
        return FinObj.atom(self.label(s) for s in self.states())
