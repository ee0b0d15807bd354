"""Decisions ``⟨f⟩ : X -> X + X`` and decision transformers.

A decision tags each input with the branch a map ``f : X -> Y + Z`` would
take, without otherwise moving it.  :class:`Decision` is a validated wrapper
around such a :class:`~decidua.pfn.PMap`; building one from an arbitrary map
runs the tag-only check.
"""
from __future__ import annotations

from .coproducts import (
    codiagonal,
    copair,
    inj1,
    inj2,
    kappa_dagger,
    sum_map,
    sum_obj,
    tag_split,
)
from .pfn import FinObj, PMap, ShapeError, _require, compose, partial_inverse, restriction

# D1/D2 are re-checked after every ``decide``; switch off for bulk runs.
VERIFY_DECISION_LAWS = True


class DecisionError(ShapeError):
    """Raised when a map is not a decision."""


class Decision:
    """A tag-only map ``X -> X + X``."""

    __slots__ = ("underlying",)

    def __init__(self, underlying: PMap):
        if not is_tag_only(underlying):
            raise DecisionError(f"{underlying!r} is not a decision")
        self.underlying = underlying

    @classmethod
    def _trusted(cls, underlying: PMap) -> "Decision":
        d = cls.__new__(cls)
        d.underlying = underlying
        return d

    @property
    def carrier(self) -> FinObj:
        return self.underlying.dom

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Decision):
            return NotImplemented
        return self.underlying == other.underlying

    def __hash__(self) -> int:
        return hash(self.underlying)

    def __repr__(self) -> str:
        n = len(self.carrier)
        marks = "".join(
            "u" if t is None else ("t" if t < n else "f") for t in self.underlying.table
        )
        return f"Decision({marks!r} on {self.carrier!r})"


def is_tag_only(p: PMap) -> bool:
    """True iff ``p : X -> X + X`` sends each defined ``x`` to ``L·x`` or ``R·x``."""
    X = p.dom
    if p.cod != sum_obj(X, X):
        return False
    n = len(X)
    return all(t is None or t == i or t == n + i for i, t in enumerate(p.table))


def decide(f: PMap) -> Decision:
    """The decision of ``f : X -> Y + Z``, computed pointwise."""
    split = tag_split(f.cod)
    X = f.dom
    n = len(X)
    table = tuple(
        None if t is None else (i if t < split else n + i) for i, t in enumerate(f.table)
    )
    d = Decision._trusted(PMap._raw(X, sum_obj(X, X), table))
    if VERIFY_DECISION_LAWS:
        assert check_decision_laws(d, f), f"decision laws fail for {f!r}"
    return d


def check_decision_laws(d: Decision | PMap, f: PMap) -> bool:
    """D1 ``∇d = restriction(f)`` and D2 ``(f+f)d = (κ1+κ2)f``."""
    p = d.underlying if isinstance(d, Decision) else d
    X = f.dom
    if p.dom != X or p.cod != sum_obj(X, X):
        raise ShapeError("candidate decision must be a map X -> X + X for X = f.dom")
    if not f.cod.is_sum:
        raise ShapeError(f"{f.cod} is not a binary sum")
    Y, Z = f.cod.left, f.cod.right
    d1 = compose(codiagonal(X), p) == restriction(f)
    d2 = compose(sum_map(f, f), p) == compose(sum_map(inj1(Y, Z), inj2(Y, Z)), f)
    return d1 and d2


def decision_inverse(d: Decision) -> PMap:
    """``⟨f⟩† = [r̄(κ1†⟨f⟩), r̄(κ2†⟨f⟩)]``."""
    p = d.underlying
    inv = copair(
        restriction(compose(kappa_dagger(1, p.cod), p)),
        restriction(compose(kappa_dagger(2, p.cod), p)),
    )
    assert compose(inv, p) == restriction(p)
    assert compose(p, inv) == restriction(inv)
    assert inv == partial_inverse(p)
    return inv


def transform(f: PMap, d: Decision) -> Decision:
    """Decision transformer ``f^◇(d) = ⟨d ∘ f⟩`` along ``f : W -> X``."""
    _require(f.cod == d.carrier, f"cannot transform along {f!r}: codomain is not {d.carrier}")
    return decide(compose(d.underlying, f))
