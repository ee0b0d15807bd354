"""Restriction coproducts, zero and terminal object in Pfn.

All structural maps are built directly from position tables: in ``X + Y``
the first ``len(X)`` positions are the left summand and the rest the right.
"""
from __future__ import annotations

from .pfn import FinObj, PMap, ShapeError, _require, compose, identity

EMPTY = FinObj.empty()
UNIT = FinObj.unit()


def sum_obj(X: FinObj, Y: FinObj) -> FinObj:
    return FinObj("sum", (), X, Y)


def _summands(S: FinObj) -> tuple[FinObj, FinObj]:
    if not S.is_sum:
        raise ShapeError(f"{S} is not a binary sum")
    return S.left, S.right


def inj1(X: FinObj, Y: FinObj) -> PMap:
    return PMap._raw(X, sum_obj(X, Y), tuple(range(len(X))))


def inj2(X: FinObj, Y: FinObj) -> PMap:
    n = len(X)
    return PMap._raw(Y, sum_obj(X, Y), tuple(n + j for j in range(len(Y))))


def copair(f: PMap, g: PMap) -> PMap:
    """``[f, g] : f.dom + g.dom -> cod``."""
    _require(f.cod == g.cod, f"copair needs a common codomain: {f.cod} != {g.cod}")
    return PMap._raw(sum_obj(f.dom, g.dom), f.cod, f.table + g.table)


def sum_map(f: PMap, g: PMap) -> PMap:
    """``f + g``, acting on each summand and keeping its tag."""
    n = len(f.cod)
    right = tuple(None if t is None else n + t for t in g.table)
    return PMap._raw(sum_obj(f.dom, g.dom), sum_obj(f.cod, g.cod), f.table + right)


def codiagonal(X: FinObj) -> PMap:
    ident = identity(X)
    return copair(ident, ident)


def twist(X: FinObj, Y: FinObj) -> PMap:
    """``γ = [κ2, κ1] : X + Y -> Y + X``."""
    return copair(inj2(Y, X), inj1(Y, X))


def assoc_right(X: FinObj, Y: FinObj, Z: FinObj) -> PMap:
    """``(X + Y) + Z -> X + (Y + Z)``."""
    # positions are the same on both sides; only the bracketing changes
    n = len(X) + len(Y) + len(Z)
    return PMap._raw(sum_obj(sum_obj(X, Y), Z), sum_obj(X, sum_obj(Y, Z)), tuple(range(n)))


def assoc_left(X: FinObj, Y: FinObj, Z: FinObj) -> PMap:
    """``X + (Y + Z) -> (X + Y) + Z``."""
    n = len(X) + len(Y) + len(Z)
    return PMap._raw(sum_obj(X, sum_obj(Y, Z)), sum_obj(sum_obj(X, Y), Z), tuple(range(n)))


def bang(X: FinObj) -> PMap:
    return PMap._raw(X, UNIT, (0,) * len(X))


def zero_map(X: FinObj, Y: FinObj) -> PMap:
    return PMap._raw(X, Y, (None,) * len(X))


def proj1_dagger(X: FinObj, Y: FinObj) -> PMap:
    """``κ1† = [id, 0] : X + Y -> X``."""
    return copair(identity(X), zero_map(Y, X))


def proj2_dagger(X: FinObj, Y: FinObj) -> PMap:
    """``κ2† = [0, id] : X + Y -> Y``."""
    return copair(zero_map(X, Y), identity(Y))


def kappa_dagger(i: int, S: FinObj) -> PMap:
    """``κi†`` for the summands of the sum object ``S``."""
    X, Y = _summands(S)
    if i == 1:
        return proj1_dagger(X, Y)
    if i == 2:
        return proj2_dagger(X, Y)
    raise ValueError("injection index must be 1 or 2")


def tag_split(S: FinObj) -> int:
    """Number of left-tagged positions of the sum object ``S``."""
    return len(_summands(S)[0])


def after(*maps: PMap) -> PMap:
    """Compose right to left: ``after(h, g, f) == h ∘ g ∘ f``."""
    result = maps[-1]
    for m in reversed(maps[:-1]):
        result = compose(m, result)
    return result
