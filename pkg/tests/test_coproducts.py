import pytest
from hypothesis import given
from hypothesis import strategies as st

from decidua.coproducts import (
    EMPTY,
    UNIT,
    after,
    assoc_left,
    assoc_right,
    bang,
    codiagonal,
    copair,
    inj1,
    inj2,
    kappa_dagger,
    proj1_dagger,
    proj2_dagger,
    sum_map,
    sum_obj,
    twist,
    zero_map,
)
from decidua.pfn import (
    ObjectMismatchError,
    ShapeError,
    compose,
    identity,
    is_total,
    natural_leq,
    partial_inverse,
    restriction,
)

from conftest import maps, obj, objects, pm


def test_sum_examples():
    a, b = obj("a"), obj("b")
    assert sum_obj(a, b).elems == ("L·a", "R·b")
    X = obj("x", "y")
    assert sum_obj(EMPTY, X).elems == ("R·x", "R·y")
    assert len(sum_obj(X, X)) == 4


def test_nested_sums_are_distinct():
    X = obj("x")
    assert sum_obj(sum_obj(X, X), X) != sum_obj(X, sum_obj(X, X))


def test_injections():
    a, b = obj("a"), obj("b")
    assert inj1(a, b).graph == {"a": "L·a"}
    assert inj2(a, b).graph == {"b": "R·b"}
    assert is_total(inj1(a, b)) and is_total(inj2(a, b))
    assert partial_inverse(inj1(a, b)) == copair(identity(a), zero_map(b, a))


def test_copair_examples():
    X, Y = obj("a", "b"), obj("c")
    assert copair(identity(X), identity(X)) == codiagonal(X)
    assert copair(identity(X), zero_map(Y, X)) == proj1_dagger(X, Y)
    assert copair(inj2(Y, X), inj1(Y, X)) == twist(X, Y)


def test_copair_needs_common_codomain():
    with pytest.raises(ObjectMismatchError):
        copair(identity(obj("a")), identity(obj("b")))


def test_structural_identities():
    X, Y, Z = obj("a", "b"), obj("c"), UNIT
    assert compose(twist(Y, X), twist(X, Y)) == identity(sum_obj(X, Y))
    assert compose(assoc_left(X, Y, Z), assoc_right(X, Y, Z)) == identity(
        sum_obj(sum_obj(X, Y), Z)
    )
    assert compose(codiagonal(X), inj1(X, X)) == identity(X)
    assert compose(proj1_dagger(X, Y), inj1(X, Y)) == identity(X)
    assert compose(proj1_dagger(X, Y), inj2(X, Y)) == zero_map(Y, X)
    assert compose(proj2_dagger(X, Y), inj2(X, Y)) == identity(Y)
    assert bang(UNIT) == identity(UNIT)
    assert restriction(zero_map(X, X)) == zero_map(X, X)


def test_sum_map_example():
    X, Y = obj("a", "b"), obj("c")
    f = pm(X, Y, {"a": "c"})
    g = pm(Y, X, {"c": "b"})
    fg = sum_map(f, g)
    assert fg.graph == {"L·a": "L·c", "R·c": "R·b"}
    assert sum_map(identity(X), identity(Y)) == identity(sum_obj(X, Y))


def test_kappa_dagger_needs_sum():
    with pytest.raises(ShapeError):
        kappa_dagger(1, obj("a"))


def test_after_composes_right_to_left():
    X = obj("a", "b")
    f = pm(X, X, {"a": "b"})
    g = pm(X, X, {"b": "a", "a": "a"})
    assert after(g, f) == compose(g, f)
    assert after(f, g, f) == compose(f, compose(g, f))


def test_degenerate_objects():
    assert copair(zero_map(EMPTY, UNIT), zero_map(EMPTY, UNIT)).dom == sum_obj(EMPTY, EMPTY)
    assert codiagonal(EMPTY) == zero_map(sum_obj(EMPTY, EMPTY), EMPTY)
    assert twist(EMPTY, UNIT).graph == {"R·•": "L·•"}


@given(st.data())
def test_copair_equations(data):
    X, Y, Z = data.draw(objects(3)), data.draw(objects(3)), data.draw(objects(3))
    f, g = data.draw(maps(X, Z)), data.draw(maps(Y, Z))
    h = copair(f, g)
    assert compose(h, inj1(X, Y)) == f
    assert compose(h, inj2(X, Y)) == g


@given(st.data())
def test_naturality(data):
    X, Y, Z, W = (data.draw(objects(3)) for _ in range(4))
    f, g = data.draw(maps(X, Y)), data.draw(maps(Z, W))
    assert compose(codiagonal(Y), sum_map(f, f)) == compose(f, codiagonal(X))
    assert compose(twist(Y, W), sum_map(f, g)) == compose(sum_map(g, f), twist(X, Z))
    assert restriction(sum_map(f, g)) == sum_map(restriction(f), restriction(g))


@given(maps())
def test_zero_is_least(f):
    assert natural_leq(zero_map(f.dom, f.cod), f)
