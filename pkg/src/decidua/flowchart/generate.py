"""Random flowchart programs over small state spaces, for property checks."""
from __future__ import annotations

import random

from .ast import (
    Assign,
    BinOp,
    Cmp,
    If,
    Name,
    Num,
    PAnd,
    PFalse,
    PNot,
    POr,
    PTrue,
    PUndef,
    Program,
    Seq,
    Skip,
    StateSpace,
    While,
)

_NAMES = ("x", "y", "z")


def random_space(rng: random.Random) -> StateSpace:
    k = rng.randint(0, 2)
    return StateSpace(tuple((_NAMES[i], rng.randint(0, 3)) for i in range(k)))


def random_aexp(rng: random.Random, space: StateSpace, depth: int):
    if depth <= 0 or rng.random() < 0.4:
        if space.names and rng.random() < 0.6:
            return Name(rng.choice(space.names))
        return Num(rng.randint(0, space.max_value + 1))
    return BinOp(
        rng.choice("+-*"),
        random_aexp(rng, space, depth - 1),
        random_aexp(rng, space, depth - 1),
    )


def random_pred(rng: random.Random, space: StateSpace, depth: int):
    r = rng.random()
    if depth <= 0 or r < 0.45:
        if rng.random() < 0.15:
            return rng.choice((PTrue(), PFalse(), PUndef()))
        return Cmp(
            random_aexp(rng, space, 1), rng.choice(("=", "<", "<=")), random_aexp(rng, space, 1)
        )
    if r < 0.6:
        return PNot(random_pred(rng, space, depth - 1))
    node = PAnd if r < 0.8 else POr
    return node(random_pred(rng, space, depth - 1), random_pred(rng, space, depth - 1))


def random_command(rng: random.Random, space: StateSpace, depth: int) -> Program:
    r = rng.random()
    if depth <= 0 or r < 0.35:
        if not space.names or rng.random() < 0.15:
            return Skip()
        return Assign(rng.choice(space.names), random_aexp(rng, space, 2))
    if r < 0.6:
        return Seq(random_command(rng, space, depth - 1), random_command(rng, space, depth - 1))
    if r < 0.8:
        return If(
            random_pred(rng, space, 2),
            random_command(rng, space, depth - 1),
            random_command(rng, space, depth - 1),
        )
    return While(random_pred(rng, space, 2), random_command(rng, space, depth - 1))


def random_program(rng: random.Random, depth: int = 3) -> tuple[StateSpace, Program]:
    space = random_space(rng)
    return space, random_command(rng, space, depth)
