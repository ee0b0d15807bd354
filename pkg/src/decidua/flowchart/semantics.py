"""Operational and denotational semantics of flowchart programs.

Arithmetic is partial: every literal, variable read and intermediate result
must lie in ``0..M`` (``M`` the largest declared bound), and an assignment
must land inside its variable's own range.  Anything else is undefined.

The operational route evaluates predicates to weak Kleene values and
branches on them.  The denotational route turns each predicate into a map
``Σ -> 1 + 1``, combines predicates with the categorical connectives, and
branches with ``[⟦c1⟧, ⟦c2⟧] ∘ ⟨p⟩``.
"""
from __future__ import annotations

import operator
from typing import Optional

from .. import kleene
from ..coproducts import copair, zero_map
from ..kleene import Kleene3
from ..logic import BOOL, conj, dec_to_pred, disj, neg, pred_to_dec
from ..pfn import PMap, compose, identity, natural_leq
from .ast import (
    Aexp,
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
    Pred,
    Program,
    PTrue,
    PUndef,
    Seq,
    Skip,
    State,
    StateCapExceededError,
    StateSpace,
    While,
)

_ARITH = {"+": operator.add, "-": operator.sub, "*": operator.mul}
_CMP = {"=": operator.eq, "<": operator.lt, "<=": operator.le}

_TRUE, _FALSE = BOOL.index("L·•"), BOOL.index("R·•")


def eval_aexp(e: Aexp, space: StateSpace, state: State) -> Optional[int]:
    """Value of ``e`` at ``state``, or ``None`` if anything leaves ``0..M``."""
    if isinstance(e, Num):
        v = e.value
    elif isinstance(e, Name):
        v = state[space.position(e.ident)]
    elif isinstance(e, BinOp):
        a = eval_aexp(e.left, space, state)
        if a is None:
            return None
        b = eval_aexp(e.right, space, state)
        if b is None:
            return None
        v = _ARITH[e.op](a, b)
    else:
        raise TypeError(f"not an arithmetic expression: {e!r}")
    return v if 0 <= v <= space.max_value else None


def _compare(c: Cmp, space: StateSpace, state: State) -> Optional[bool]:
    a = eval_aexp(c.left, space, state)
    b = eval_aexp(c.right, space, state)
    if a is None or b is None:
        return None
    return _CMP[c.op](a, b)


def _assign(a: Assign, space: StateSpace, state: State) -> Optional[State]:
    v = eval_aexp(a.expr, space, state)
    if v is None or v > space.bound(a.ident):
        return None
    i = space.position(a.ident)
    return state[:i] + (v,) + state[i + 1:]


# operational route

def eval_pred(p: Pred, space: StateSpace, state: State) -> Kleene3:
    if isinstance(p, PTrue):
        return kleene.T
    if isinstance(p, PFalse):
        return kleene.F
    if isinstance(p, PUndef):
        return kleene.U
    if isinstance(p, Cmp):
        r = _compare(p, space, state)
        return kleene.U if r is None else (kleene.T if r else kleene.F)
    if isinstance(p, PNot):
        return kleene.weak_not(eval_pred(p.arg, space, state))
    if isinstance(p, PAnd):
        return kleene.weak_and(eval_pred(p.left, space, state), eval_pred(p.right, space, state))
    if isinstance(p, POr):
        return kleene.weak_or(eval_pred(p.left, space, state), eval_pred(p.right, space, state))
    raise TypeError(f"not a predicate: {p!r}")


def run_operational(program: Program, space: StateSpace, state: State) -> Optional[State]:
    """Big-step execution; ``None`` when the run is undefined or diverges.

    A loop that comes back to its head in a state it has already seen during
    the same execution runs forever, since the language is deterministic.
    """
    if isinstance(program, Skip):
        return state
    if isinstance(program, Assign):
        return _assign(program, space, state)
    if isinstance(program, Seq):
        mid = run_operational(program.first, space, state)
        return None if mid is None else run_operational(program.second, space, mid)
    if isinstance(program, If):
        guard = eval_pred(program.cond, space, state)
        if guard is kleene.T:
            return run_operational(program.then, space, state)
        if guard is kleene.F:
            return run_operational(program.orelse, space, state)
        return None
    if isinstance(program, While):
        seen = set()
        while True:
            if state in seen:
                return None
            seen.add(state)
            guard = eval_pred(program.cond, space, state)
            if guard is kleene.F:
                return state
            if guard is kleene.U:
                return None
            state = run_operational(program.body, space, state)
            if state is None:
                return None
    raise TypeError(f"not a program: {program!r}")


# denotational route

def denote_pred(p: Pred, space: StateSpace) -> PMap:
    """The predicate ``p`` as a partial map ``Σ -> 1 + 1``."""
    S = space.obj
    if isinstance(p, PTrue):
        return PMap._raw(S, BOOL, (_TRUE,) * len(S))
    if isinstance(p, PFalse):
        return PMap._raw(S, BOOL, (_FALSE,) * len(S))
    if isinstance(p, PUndef):
        return zero_map(S, BOOL)
    if isinstance(p, Cmp):
        table = []
        for state in space.states():
            r = _compare(p, space, state)
            table.append(None if r is None else (_TRUE if r else _FALSE))
        return PMap._raw(S, BOOL, tuple(table))
    if isinstance(p, PNot):
        return dec_to_pred(neg(pred_to_dec(denote_pred(p.arg, space))))
    if isinstance(p, (PAnd, POr)):
        left = pred_to_dec(denote_pred(p.left, space))
        right = pred_to_dec(denote_pred(p.right, space))
        connective = conj if isinstance(p, PAnd) else disj
        return dec_to_pred(connective(left, right))
    raise TypeError(f"not a predicate: {p!r}")


def denote(program: Program, space: StateSpace, cap: int = None) -> PMap:
    """The program as a partial map ``Σ -> Σ``."""
    cap = space.cap if cap is None else cap
    if space.size > cap:
        raise StateCapExceededError(f"{space.size} states exceed the cap of {cap}")
    return _denote(program, space)


def _denote(program: Program, space: StateSpace) -> PMap:
    S = space.obj
    if isinstance(program, Skip):
        return identity(S)
    if isinstance(program, Assign):
        table = []
        for state in space.states():
            out = _assign(program, space, state)
            table.append(None if out is None else space.index(out))
        return PMap._raw(S, S, tuple(table))
    if isinstance(program, Seq):
        return compose(_denote(program.second, space), _denote(program.first, space))
    if isinstance(program, If):
        branch = copair(_denote(program.then, space), _denote(program.orelse, space))
        return compose(branch, pred_to_dec(denote_pred(program.cond, space)).underlying)
    if isinstance(program, While):
        return while_fixpoint(
            pred_to_dec(denote_pred(program.cond, space)).underlying,
            _denote(program.body, space),
        )
    raise TypeError(f"not a program: {program!r}")


def while_fixpoint(decision: PMap, body: PMap) -> PMap:
    """Least ``W`` with ``W = [W ∘ body, id] ∘ decision``, by Kleene iteration."""
    S = body.dom
    ident = identity(S)
    current = zero_map(S, S)
    for _ in range(len(S) + 2):
        following = compose(copair(compose(current, body), ident), decision)
        assert natural_leq(current, following), "loop approximants must increase"
        if following == current:
            return current
        current = following
    raise AssertionError("loop iteration did not stabilise within |Σ| + 1 steps")


def disagreements(program: Program, space: StateSpace) -> list[State]:
    """States on which the operational and denotational meanings differ."""
    meaning = denote(program, space)
    bad = []
    for state in space.states():
        out = run_operational(program, space, state)
        expected = None if out is None else space.index(out)
        if meaning.table[space.index(state)] != expected:
            bad.append(state)
    return bad
