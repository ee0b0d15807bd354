"""Finite sets and partial functions, with the restriction structure of Pfn.

Objects are :class:`FinObj` values: an ordered list of opaque element ids plus
a structural form (``empty``, ``unit``, ``atom`` or a binary ``sum``).  Sum
objects tag the elements of their summands with ``L·`` and ``R·`` so that two
objects are equal exactly when they were built the same way.

Morphisms are :class:`PMap` values.  Internally a map stores, for every
position of its domain, the position of the image in the codomain (or
``None`` where it is undefined).  Everything else is derived from that table.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Optional, Sequence

LEFT_TAG = "L·"
RIGHT_TAG = "R·"
UNIT_ELEM = "•"

FORMS = ("empty", "unit", "atom", "sum")


class PfnError(Exception):
    """Base class for errors raised by the categorical layer."""


class ObjectMismatchError(PfnError):
    """Raised when two maps do not line up (e.g. ``f.cod != g.dom``)."""


class ShapeError(PfnError):
    """Raised when an object does not have the structural form required."""


class FinObj:
    """A finite object of Pfn.

    Use the constructors :meth:`empty`, :meth:`unit`, :meth:`atom` and
    :func:`decidua.coproducts.sum_obj` rather than calling this directly.
    """

    __slots__ = ("form", "elems", "left", "right", "_index", "_hash")

    def __init__(
        self,
        form: str,
        elems: Sequence[str] = (),
        left: Optional["FinObj"] = None,
        right: Optional["FinObj"] = None,
    ):
        if form not in FORMS:
            raise ShapeError(f"unknown object form {form!r}")
        elems = tuple(elems)
        if form == "sum":
            if left is None or right is None:
                raise ShapeError("sum object needs both summands")
            expected = tuple(LEFT_TAG + e for e in left.elems) + tuple(
                RIGHT_TAG + e for e in right.elems
            )
            if elems and elems != expected:
                raise ShapeError("sum elements must be the tagged summand elements")
            elems = expected
        elif left is not None or right is not None:
            raise ShapeError(f"{form} object cannot have summands")
        if form == "empty" and elems:
            raise ShapeError("empty object has no elements")
        if form == "unit" and len(elems) != 1:
            raise ShapeError("unit object has exactly one element")
        if not all(isinstance(e, str) for e in elems):
            raise ShapeError("element identifiers must be strings")
        index = {e: i for i, e in enumerate(elems)}
        if len(index) != len(elems):
            raise ShapeError("element identifiers must be pairwise distinct")
        self.form = form
        self.elems = elems
        self.left = left
        self.right = right
        self._index = index
        self._hash = hash((form, elems))

    @classmethod
    def empty(cls) -> "FinObj":
        return cls("empty")

    @classmethod
    def unit(cls, elem: str = UNIT_ELEM) -> "FinObj":
        return cls("unit", (elem,))

    @classmethod
    def atom(cls, elems: Iterable[str]) -> "FinObj":
        return cls("atom", tuple(elems))

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elems)

    def __contains__(self, elem: object) -> bool:
        return elem in self._index

    def index(self, elem: str) -> int:
        try:
            return self._index[elem]
        except KeyError:
            raise KeyError(f"{elem!r} is not an element of {self}") from None

    @property
    def is_sum(self) -> bool:
        return self.form == "sum"

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FinObj):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.form == other.form
            and self.elems == other.elems
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.form == "sum":
            return f"({self.left!r} + {self.right!r})"
        if self.form == "empty":
            return "0"
        return "{" + ",".join(self.elems) + "}"

    def to_json(self) -> dict:
        data: dict = {"form": self.form, "elems": list(self.elems)}
        if self.form == "sum":
            data["left"] = self.left.to_json()
            data["right"] = self.right.to_json()
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> "FinObj":
        if not isinstance(data, Mapping):
            raise ShapeError("object encoding must be a JSON object")
        unknown = set(data) - {"form", "elems", "left", "right"}
        if unknown:
            raise ShapeError(f"unknown keys in object encoding: {sorted(unknown)}")
        form = data.get("form")
        elems = data.get("elems", [])
        if not isinstance(elems, list):
            raise ShapeError("'elems' must be a list")
        if form == "sum":
            if "left" not in data or "right" not in data:
                raise ShapeError("sum object encoding needs 'left' and 'right'")
            left = cls.from_json(data["left"])
            right = cls.from_json(data["right"])
            obj = cls("sum", (), left, right)
            if "elems" in data and tuple(elems) != obj.elems:
                raise ShapeError("sum 'elems' disagree with the tagged summands")
            return obj
        if "left" in data or "right" in data:
            raise ShapeError(f"{form} object cannot have summands")
        return cls(form, elems)


class PMap:
    """A partial function ``dom -> cod`` between finite objects.

    ``PMap(dom, cod, {"a": "c"})`` builds a map from its graph; elements of
    ``dom`` missing from the graph are where the map is undefined.  Maps are
    immutable and compare equal only when domain, codomain and graph all
    agree exactly.  ``g @ f`` is the composite "first ``f``, then ``g``".
    """

    __slots__ = ("dom", "cod", "table", "_hash")

    def __init__(self, dom: FinObj, cod: FinObj, graph: Mapping[str, str] = None):
        table: list[Optional[int]] = [None] * len(dom)
        for x, y in (graph or {}).items():
            if x not in dom:
                raise ShapeError(f"{x!r} is not in the domain {dom}")
            if y not in cod:
                raise ShapeError(f"{y!r} is not in the codomain {cod}")
            table[dom.index(x)] = cod.index(y)
        self._init(dom, cod, tuple(table))

    def _init(self, dom: FinObj, cod: FinObj, table: tuple) -> None:
        self.dom = dom
        self.cod = cod
        self.table = table
        self._hash = hash((dom, cod, table))

    @classmethod
    def from_table(cls, dom: FinObj, cod: FinObj, table: Sequence[Optional[int]]) -> "PMap":
        """Build a map from codomain positions (``None`` = undefined)."""
        table = tuple(table)
        if len(table) != len(dom):
            raise ShapeError("table length must match the domain size")
        n = len(cod)
        for t in table:
            if t is not None and not 0 <= t < n:
                raise ShapeError(f"codomain position {t} out of range")
        return cls._raw(dom, cod, table)

    @classmethod
    def _raw(cls, dom: FinObj, cod: FinObj, table: tuple) -> "PMap":
        obj = cls.__new__(cls)
        obj._init(dom, cod, table)
        return obj

    @property
    def graph(self) -> dict[str, str]:
        dom, cod = self.dom.elems, self.cod.elems
        return {dom[i]: cod[t] for i, t in enumerate(self.table) if t is not None}

    def __call__(self, x: str) -> Optional[str]:
        """Image of ``x``, or ``None`` where undefined."""
        t = self.table[self.dom.index(x)]
        return None if t is None else self.cod.elems[t]

    def defined_at(self, x: str) -> bool:
        return self.table[self.dom.index(x)] is not None

    def __matmul__(self, other: "PMap") -> "PMap":
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, PMap):
            return NotImplemented
        return (
            self._hash == other._hash
            and self.table == other.table
            and self.dom == other.dom
            and self.cod == other.cod
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{x}↦{y}" for x, y in self.graph.items())
        return f"PMap({self.dom!r} -> {self.cod!r}: {{{body}}})"

    def to_json(self) -> dict:
        return {"dom": self.dom.to_json(), "cod": self.cod.to_json(), "map": self.graph}

    @classmethod
    def from_json(cls, data: Mapping) -> "PMap":
        if not isinstance(data, Mapping):
            raise ShapeError("map encoding must be a JSON object")
        unknown = set(data) - {"dom", "cod", "map"}
        if unknown:
            raise ShapeError(f"unknown keys in map encoding: {sorted(unknown)}")
        missing = {"dom", "cod", "map"} - set(data)
        if missing:
            raise ShapeError(f"missing keys in map encoding: {sorted(missing)}")
        if not isinstance(data["map"], Mapping):
            raise ShapeError("'map' must be a JSON object")
        return cls(FinObj.from_json(data["dom"]), FinObj.from_json(data["cod"]), data["map"])


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ObjectMismatchError(message)


def identity(X: FinObj) -> PMap:
    return PMap._raw(X, X, tuple(range(len(X))))


def compose(g: PMap, f: PMap) -> PMap:
    """The composite ``g ∘ f``: defined where ``f`` is and ``g`` is at ``f(x)``."""
    _require(f.cod == g.dom, f"cannot compose: {f.cod} != {g.dom}")
    gt = g.table
    table = tuple(None if t is None else gt[t] for t in f.table)
    return PMap._raw(f.dom, g.cod, table)


def restriction(f: PMap) -> PMap:
    """The partial identity on ``f.dom`` defined exactly where ``f`` is."""
    table = tuple(None if t is None else i for i, t in enumerate(f.table))
    return PMap._raw(f.dom, f.dom, table)


def is_total(f: PMap) -> bool:
    return all(t is not None for t in f.table)


def natural_leq(f: PMap, g: PMap) -> bool:
    """``f ≤ g`` iff ``g ∘ restriction(f) == f``."""
    _require(f.dom == g.dom and f.cod == g.cod, "natural order needs parallel maps")
    return compose(g, restriction(f)) == f


def partial_inverse(f: PMap) -> Optional[PMap]:
    """The partial inverse ``f†``, or ``None`` if ``f`` is not injective where defined."""
    table: list[Optional[int]] = [None] * len(f.cod)
    for i, t in enumerate(f.table):
        if t is None:
            continue
        if table[t] is not None:
            return None
        table[t] = i
    inv = PMap._raw(f.cod, f.dom, tuple(table))
    assert compose(inv, f) == restriction(f) and compose(f, inv) == restriction(inv)
    return inv


def is_restriction_idempotent(e: PMap) -> bool:
    if e.dom != e.cod:
        return False
    return all(t is None or t == i for i, t in enumerate(e.table))
