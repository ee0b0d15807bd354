from __future__ import annotations

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from decidua import kleene
from decidua.pfn import FinObj, PMap

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def obj(*elems: str) -> FinObj:
    return FinObj.atom(elems)


def pm(dom: FinObj, cod: FinObj, graph: dict) -> PMap:
    return PMap(dom, cod, graph)


@pytest.fixture
def ab():
    return obj("a", "b")


@pytest.fixture
def c():
    return obj("c")


# strategies: small atoms and maps between them

@st.composite
def objects(draw, max_size=4):
    n = draw(st.integers(0, max_size))
    return obj(*[f"o{i}" for i in range(n)])


@st.composite
def decisions(draw, X):
    values = [draw(st.sampled_from((kleene.T, kleene.F, kleene.U))) for _ in X.elems]
    return kleene.decision_from_valuation(X, dict(zip(X.elems, values)))


@st.composite
def maps(draw, dom=None, cod=None):
    dom = dom if dom is not None else draw(objects())
    cod = cod if cod is not None else draw(objects())
    choices = [None] + list(range(len(cod)))
    table = [draw(st.sampled_from(choices)) for _ in dom.elems]
    return PMap.from_table(dom, cod, table)
