"""The internal logic of decisions: constants, connectives, entailment, duality.

Connectives are built as composites of structural maps, never pointwise:

* ``p ∧ q = (id + p†) ∘ α ∘ (q + r̄q) ∘ p`` with ``α : (X+X)+X -> X+(X+X)``
* ``p ∨ q = (p† + id) ∘ α ∘ (r̄q + q) ∘ p`` with ``α : X+(X+X) -> (X+X)+X``

Predicates are maps into ``BOOL = 1 + 1`` whose left point means true.
"""
from __future__ import annotations

from .coproducts import (
    UNIT,
    after,
    assoc_left,
    assoc_right,
    bang,
    codiagonal,
    inj1,
    inj2,
    kappa_dagger,
    sum_map,
    sum_obj,
    twist,
)
from .decisions import Decision, decide, decision_inverse
from .pfn import FinObj, PMap, ShapeError, _require, compose, identity, natural_leq, restriction

BOOL = sum_obj(UNIT, UNIT)


def _same_carrier(p: Decision, q: Decision) -> FinObj:
    _require(p.carrier == q.carrier, f"decisions live on different objects: {p.carrier} != {q.carrier}")
    return p.carrier


def top(X: FinObj) -> Decision:
    return Decision(inj1(X, X))


def bot(X: FinObj) -> Decision:
    return Decision(inj2(X, X))


def neg(p: Decision) -> Decision:
    X = p.carrier
    return Decision(compose(twist(X, X), p.underlying))


def conj(p: Decision, q: Decision) -> Decision:
    X = _same_carrier(p, q)
    pu, qu = p.underlying, q.underlying
    m = after(
        sum_map(identity(X), decision_inverse(p)),
        assoc_right(X, X, X),
        sum_map(qu, restriction(qu)),
        pu,
    )
    return Decision(m)


def disj(p: Decision, q: Decision) -> Decision:
    X = _same_carrier(p, q)
    pu, qu = p.underlying, q.underlying
    m = after(
        sum_map(decision_inverse(p), identity(X)),
        assoc_left(X, X, X),
        sum_map(restriction(qu), qu),
        pu,
    )
    return Decision(m)


def conj_codiagonal(p: Decision, q: Decision) -> Decision:
    """Conjunction with the ``p†`` leg replaced by ``∇`` (not reversible)."""
    X = _same_carrier(p, q)
    qu = q.underlying
    m = after(
        sum_map(identity(X), codiagonal(X)),
        assoc_right(X, X, X),
        sum_map(qu, restriction(qu)),
        p.underlying,
    )
    return Decision(m)


def disj_codiagonal(p: Decision, q: Decision) -> Decision:
    """Disjunction with the ``p†`` leg replaced by ``∇`` (not reversible)."""
    X = _same_carrier(p, q)
    qu = q.underlying
    m = after(
        sum_map(codiagonal(X), identity(X)),
        assoc_left(X, X, X),
        sum_map(restriction(qu), qu),
        p.underlying,
    )
    return Decision(m)


def entails(p: Decision, q: Decision) -> bool:
    return conj(p, q) == p


def conj_leq(p: Decision, q: Decision) -> bool:
    return conj(p, q) == p


def disj_leq(p: Decision, q: Decision) -> bool:
    return disj(p, q) == q


def truth_part(p: Decision) -> PMap:
    """``κ1† ∘ p``: the partial identity on the witnesses of ``p``."""
    return compose(kappa_dagger(1, p.underlying.cod), p.underlying)


def entails_by_order(p: Decision, q: Decision) -> bool:
    """Entailment read off the natural order: more true and more defined."""
    _same_carrier(p, q)
    return natural_leq(truth_part(p), truth_part(q)) and natural_leq(
        restriction(p.underlying), restriction(q.underlying)
    )


def dec_to_pred(d: Decision) -> PMap:
    X = d.carrier
    return compose(sum_map(bang(X), bang(X)), d.underlying)


def pred_to_dec(p: PMap) -> Decision:
    if p.cod != BOOL:
        raise ShapeError(f"a predicate must land in 1 + 1, not {p.cod}")
    return decide(p)


def decision_of_any(f: PMap) -> Decision:
    """``⟨f⟩`` computed as the decision of the predicate ``(!+!) ∘ f``."""
    if not f.cod.is_sum:
        raise ShapeError(f"{f.cod} is not a binary sum")
    Y, Z = f.cod.left, f.cod.right
    via_pred = pred_to_dec(compose(sum_map(bang(Y), bang(Z)), f))
    assert via_pred == decide(f)
    return via_pred
