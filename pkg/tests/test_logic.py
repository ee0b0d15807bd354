import pytest
from hypothesis import given
from hypothesis import strategies as st

from decidua import kleene
from decidua.coproducts import UNIT, inj1, sum_obj, zero_map
from decidua.decisions import decide, is_tag_only, transform
from decidua.kleene import F, T, U
from decidua.logic import (
    BOOL,
    bot,
    conj,
    conj_codiagonal,
    conj_leq,
    dec_to_pred,
    decision_of_any,
    disj,
    disj_codiagonal,
    disj_leq,
    entails,
    entails_by_order,
    neg,
    pred_to_dec,
    top,
)
from decidua.pfn import (
    ObjectMismatchError,
    ShapeError,
    compose,
    identity,
    is_total,
    partial_inverse,
    restriction,
)

from conftest import decisions, maps, obj, objects, pm


def val(X, *values):
    return kleene.decision_from_valuation(X, dict(zip(X.elems, values)))


X2 = obj("x1", "x2")
ONE = obj("x")


def test_constants():
    a = obj("a")
    assert top(a).underlying.graph == {"a": "L·a"}
    assert bot(a).underlying.graph == {"a": "R·a"}
    assert is_total(top(X2).underlying) and is_total(bot(X2).underlying)
    assert neg(top(X2)) == bot(X2)


def test_negation_example():
    X = obj("x1", "x2", "x3")
    p = val(X, T, F, U)
    assert kleene.valuation_of(neg(p)) == (F, T, U)
    assert restriction(neg(p).underlying) == restriction(p.underlying)


def test_conjunction_example():
    p, q = val(X2, T, U), val(X2, F, T)
    assert kleene.valuation_of(conj(p, q)) == (F, U)


def test_disjunction_example():
    p, q = val(X2, F, U), val(X2, T, T)
    assert kleene.valuation_of(disj(p, q)) == (T, U)


def test_units_and_idempotence():
    p = val(X2, T, U)
    assert conj(p, top(X2)) == p and conj(p, p) == p
    assert disj(p, bot(X2)) == p and disj(p, p) == p


def test_entailment_examples():
    assert entails(val(ONE, U), val(ONE, T))
    assert not entails(val(ONE, T), val(ONE, U))
    p = val(X2, F, U)
    assert entails(p, top(X2)) and entails(p, p)


def test_orders_differ_on_one_point():
    p, q = val(ONE, U), val(ONE, T)
    assert conj_leq(p, q)
    assert not disj_leq(p, q)


def test_connectives_need_common_carrier():
    with pytest.raises(ObjectMismatchError):
        conj(top(ONE), top(X2))


def test_duality_example():
    p = pm(X2, BOOL, {"x1": "L·•"})
    d = pred_to_dec(p)
    assert kleene.valuation_of(d) == (T, U)
    assert dec_to_pred(d) == p


def test_pred_to_dec_rejects_other_codomains():
    with pytest.raises(ShapeError):
        pred_to_dec(inj1(X2, X2))


def test_decision_of_any_small_cases():
    X, Yo, Zo = X2, obj("y"), obj("z")
    assert decision_of_any(inj1(X, Yo)) == top(X)
    assert decision_of_any(zero_map(X, sum_obj(Yo, Zo))).underlying == zero_map(
        X, sum_obj(X, X)
    )


def test_simplified_connectives_agree():
    p, q = val(X2, T, F), val(X2, F, U)
    assert conj_codiagonal(p, q) == conj(p, q)
    assert disj_codiagonal(p, q) == disj(p, q)


@st.composite
def pair(draw, max_size=3):
    X = draw(objects(max_size))
    return draw(decisions(X)), draw(decisions(X))


@given(pair())
def test_connectives_are_partial_isomorphisms(pq):
    p, q = pq
    for d in (conj(p, q), disj(p, q), neg(p)):
        assert is_tag_only(d.underlying)
        assert partial_inverse(d.underlying) is not None


@given(pair())
def test_de_morgan(pq):
    p, q = pq
    assert neg(conj(p, q)) == disj(neg(p), neg(q))
    assert neg(disj(p, q)) == conj(neg(p), neg(q))
    assert neg(neg(p)) == p


@given(st.data())
def test_associativity_and_distributivity(data):
    X = data.draw(objects(3))
    p, q, r = (data.draw(decisions(X)) for _ in range(3))
    assert conj(p, conj(q, r)) == conj(conj(p, q), r)
    assert disj(p, disj(q, r)) == disj(disj(p, q), r)
    assert conj(p, disj(q, r)) == disj(conj(p, q), conj(p, r))
    assert disj(p, conj(q, r)) == conj(disj(p, q), disj(p, r))


@given(pair())
def test_entailment_characterization(pq):
    p, q = pq
    assert entails(p, q) == entails_by_order(p, q)
    assert conj_leq(p, q) == disj_leq(neg(q), neg(p))


@given(pair())
def test_restriction_facts(pq):
    p, q = pq
    both = compose(restriction(p.underlying), restriction(q.underlying))
    assert restriction(conj(p, q).underlying) == both
    assert restriction(disj(p, q).underlying) == both


@given(st.data())
def test_transform_is_homomorphism(data):
    X, W = data.draw(objects(3)), data.draw(objects(3))
    p, q = data.draw(decisions(X)), data.draw(decisions(X))
    f = data.draw(maps(W, X))
    assert transform(f, conj(p, q)) == conj(transform(f, p), transform(f, q))
    assert transform(f, disj(p, q)) == disj(transform(f, p), transform(f, q))
    assert transform(f, neg(p)) == neg(transform(f, p))
    keeps_units = transform(f, top(X)) == top(W) and transform(f, bot(X)) == bot(W)
    assert keeps_units == is_total(f)
    assert transform(f, top(X)).underlying == compose(inj1(W, W), restriction(f))


@given(st.data())
def test_boolean_laws_for_total_decisions(data):
    X = data.draw(objects(3))
    values = st.sampled_from((T, F))
    p = kleene.decision_from_valuation(X, {x: data.draw(values) for x in X})
    q = kleene.decision_from_valuation(X, {x: data.draw(values) for x in X})
    assert conj(p, disj(p, q)) == p and disj(p, conj(p, q)) == p
    assert conj(p, neg(p)) == bot(X)
    assert disj(p, neg(p)) == top(X)


def test_absorption_fails_without_totality():
    p, q = val(ONE, T), val(ONE, U)
    assert conj(p, disj(p, q)) != p
    assert disj(val(ONE, U), neg(val(ONE, U))) != top(ONE)


@given(st.data())
def test_duality_roundtrips_and_naturality(data):
    X, W = data.draw(objects(3)), data.draw(objects(3))
    p = data.draw(maps(X, BOOL))
    d = data.draw(decisions(X))
    g = data.draw(maps(W, X))
    assert dec_to_pred(pred_to_dec(p)) == p
    assert pred_to_dec(dec_to_pred(d)) == d
    assert dec_to_pred(transform(g, d)) == compose(dec_to_pred(d), g)
    assert pred_to_dec(compose(p, g)) == transform(g, pred_to_dec(p))


@given(st.data())
def test_decision_of_any_agrees(data):
    X, A, B = data.draw(objects(3)), data.draw(objects(2)), data.draw(objects(2))
    f = data.draw(maps(X, sum_obj(A, B)))
    assert decision_of_any(f) == decide(f)


def test_unit_carrier_predicates():
    assert pred_to_dec(identity(BOOL)).carrier == BOOL
    assert dec_to_pred(top(UNIT)) == inj1(UNIT, UNIT)
