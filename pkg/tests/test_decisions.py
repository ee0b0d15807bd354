import pytest
from hypothesis import given
from hypothesis import strategies as st

from decidua import kleene
from decidua.coproducts import (
    copair,
    inj1,
    inj2,
    kappa_dagger,
    sum_map,
    sum_obj,
    twist,
    zero_map,
)
from decidua.decisions import (
    Decision,
    DecisionError,
    check_decision_laws,
    decide,
    decision_inverse,
    is_tag_only,
    transform,
)
from decidua.harness import enumerate_pmaps
from decidua.logic import top
from decidua.pfn import ObjectMismatchError, ShapeError, compose, identity, partial_inverse, restriction

from conftest import decisions, maps, obj, objects, pm

X3 = obj("x1", "x2", "x3")
Y = obj("y1")
Z = obj("z1")


def test_decide_example():
    f = pm(X3, sum_obj(Y, Z), {"x1": "L·y1", "x2": "R·z1"})
    d = decide(f)
    assert d.underlying.graph == {"x1": "L·x1", "x2": "R·x2"}
    assert kleene.read_pointwise(d, "x2") is kleene.F
    assert kleene.valuation_of(d) == (kleene.T, kleene.F, kleene.U)


def test_decide_of_injection_is_top():
    X = obj("a", "b")
    assert decide(inj1(X, X)) == top(X)
    assert decide(inj1(X, Y)).underlying == inj1(X, X)


def test_decide_of_zero():
    X = obj("a", "b")
    assert decide(zero_map(X, sum_obj(Y, Z))).underlying == zero_map(X, sum_obj(X, X))


def test_decide_requires_sum():
    with pytest.raises(ShapeError):
        decide(identity(obj("a")))


def test_top_is_not_decision_of_second_injection():
    X = obj("a")
    assert not check_decision_laws(top(X), inj2(X, X))
    assert check_decision_laws(decide(inj2(X, X)), inj2(X, X))


def test_constructor_validates():
    X = obj("a", "b")
    # sends a to the tagged copy of b: not tag-only
    bad = pm(X, sum_obj(X, X), {"a": "L·b"})
    assert not is_tag_only(bad)
    with pytest.raises(DecisionError):
        Decision(bad)
    with pytest.raises(DecisionError):
        Decision(identity(X))


def test_unique_decision_by_enumeration():
    X = obj("a", "b")
    f = pm(X, sum_obj(Y, obj("z1", "z2")), {"a": "R·z2"})
    passing = [p for p in enumerate_pmaps(X, sum_obj(X, X)) if check_decision_laws(p, f)]
    assert passing == [decide(f).underlying]


def test_decision_inverse_examples():
    X = obj("a", "b")
    assert decision_inverse(top(X)) == copair(identity(X), zero_map(X, X))
    zero = decide(zero_map(X, sum_obj(X, X)))
    assert decision_inverse(zero) == zero_map(sum_obj(X, X), X)


def test_transform_example():
    X = obj("x1", "x2")
    d = kleene.decision_from_valuation(X, {"x1": kleene.T, "x2": kleene.F})
    f = pm(obj("y1"), X, {"y1": "x2"})
    assert kleene.valuation_of(transform(f, d)) == (kleene.F,)


def test_transform_identity_and_zero():
    X = obj("x1", "x2")
    d = kleene.decision_from_valuation(X, {"x1": kleene.T, "x2": kleene.U})
    assert transform(identity(X), d) == d
    W = obj("w1", "w2", "w3")
    assert transform(zero_map(W, X), d).underlying == zero_map(W, sum_obj(W, W))


def test_transform_mismatch():
    d = top(obj("a"))
    with pytest.raises(ObjectMismatchError):
        transform(identity(obj("b")), d)


@st.composite
def into_sum(draw):
    X, A, B = draw(objects(3)), draw(objects(3)), draw(objects(3))
    return draw(maps(X, sum_obj(A, B)))


@given(into_sum())
def test_decision_laws_hold(f):
    d = decide(f)
    assert check_decision_laws(d, f)
    assert is_tag_only(d.underlying)


@given(into_sum())
def test_inverse_formula(f):
    d = decide(f)
    k1, k2 = kappa_dagger(1, f.cod), kappa_dagger(2, f.cod)
    expected = copair(restriction(compose(k1, f)), restriction(compose(k2, f)))
    assert decision_inverse(d) == expected == partial_inverse(d.underlying)
    assert restriction(expected) == sum_map(
        restriction(compose(k1, f)), restriction(compose(k2, f))
    )


@given(into_sum())
def test_twist_commutes_with_decide(f):
    X = f.dom
    lhs = compose(twist(X, X), decide(f).underlying)
    assert lhs == decide(compose(twist(f.cod.left, f.cod.right), f)).underlying


@given(st.data())
def test_transform_is_contravariant(data):
    X, W, V = data.draw(objects(3)), data.draw(objects(3)), data.draw(objects(3))
    d = data.draw(decisions(X))
    g, h = data.draw(maps(W, X)), data.draw(maps(V, W))
    assert transform(compose(g, h), d) == transform(h, transform(g, d))
