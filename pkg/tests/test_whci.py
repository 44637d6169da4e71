from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hodge_vfilt.whci import (
    LengthMismatch,
    NotHomogeneous,
    Polynomial,
    PolynomialSyntaxError,
    UnknownVariable,
    WHCIInput,
    check_weighted_homogeneous,
    classify,
    element_order_bound,
    hodge_containment,
    parse,
)
from oracles import FROZEN

F = Fraction
XY = ("x", "y")
XYZ = ("x", "y", "z")


def test_parse_examples():
    assert parse("x^2 + y^3", XY).as_dict() == {(2, 0): 1, (0, 3): 1}
    assert parse("2*x*y - y", XY).as_dict() == {(1, 1): 2, (0, 1): -1}
    assert parse("x^2 + x^2", XY).as_dict() == {(2, 0): 2}


def test_parse_rational_and_cancellation():
    assert parse("-3/4*x*x + 1", XY).as_dict() == {(2, 0): F(-3, 4), (0, 0): 1}
    assert parse("x - x", XY).as_dict() == {}


def test_syntax_error_position():
    with pytest.raises(PolynomialSyntaxError) as err:
        parse("x^2 + * y", XY)
    assert err.value.position == 6
    with pytest.raises(PolynomialSyntaxError):
        parse("x^", XY)


def test_unknown_variable():
    with pytest.raises(UnknownVariable) as err:
        parse("x + w", XY)
    assert err.value.name == "w" and err.value.position == 4


monomials = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)),
    st.fractions(-5, 5, max_denominator=4),
    max_size=5,
)


@settings(max_examples=80, deadline=None)
@given(monomials)
def test_print_round_trip(terms):
    p = Polynomial.from_terms(XYZ, terms)
    assert parse(str(p), XYZ) == p


def test_homogeneity_examples():
    assert check_weighted_homogeneous(parse("x^2 + y^3", XY), (3, 2)) == 6
    assert check_weighted_homogeneous(parse("x^2 + y^2 + z^2", XYZ), (1, 1, 1)) == 2
    with pytest.raises(NotHomogeneous) as err:
        check_weighted_homogeneous(parse("x^2 + y^3", XY), (1, 1))
    assert sorted(err.value.degrees.values()) == [2, 3]


def test_order_bound_examples():
    w = (1, 1, 1)
    assert element_order_bound((0, 0, 0), (0,), w, (2,)) == 2
    assert element_order_bound((0, 0, 0), (2,), w, (2,)) == -1
    assert element_order_bound((1, 0, 0), (1,), w, (2,)) == 2
    with pytest.raises(LengthMismatch):
        element_order_bound((0, 0), (0,), w, (2,))


def test_containment_examples():
    assert hodge_containment(0, (1, 1, 1), (2,))
    assert not hodge_containment(1, (1, 1, 1), (2,))
    assert not hodge_containment(0, (3, 2), (6,))


def test_classify_examples():
    cone = classify(WHCIInput.make(3, 1, (1, 1, 1), (2,)))
    assert (cone.du_bois, cone.k, cone.verdict) == (True, 0, "kRational(0)")
    assert (cone.lower_bound, cone.upper_bound) == (1, FROZEN["quadric_cone_minexp"])
    assert cone.exact_minexp is None

    assert classify(WHCIInput.make(2, 1, (3, 2), (6,))).verdict == "NotDuBois"

    pencil = classify(WHCIInput.make(
        4, 2, (1, 1, 1, 1), (2, 2),
        ["x1^2 + x2^2 + x3^2 + x4^2", "x1^2 + 2*x2^2 + 3*x3^2 + 4*x4^2"],
    ))
    assert (pencil.verdict, pencil.exact_minexp) == ("kLiminal(0)", 2)

    e8 = classify(WHCIInput.make(3, 1, (15, 10, 6), (30,), ["x^2 + y^3 + z^5"], XYZ))
    assert (e8.verdict, e8.lower_bound, e8.upper_bound) == ("kRational(0)", 1, FROZEN["e8_minexp"])


def test_classify_rejects_wrong_degree():
    with pytest.raises(NotHomogeneous):
        classify(WHCIInput.make(2, 1, (3, 2), (5,), ["x^2 + y^3"], XY))


def test_degrees_sorted_with_polynomials():
    inp = WHCIInput.make(3, 2, (1, 1, 1), (3, 2), ["x^3 + y^3", "x*z + y^2"], XYZ)
    assert inp.degrees == (2, 3)
    assert str(inp.polynomials[0]) == "x*z + y^2"


whci = st.integers(1, 4).flatmap(
    lambda r: st.tuples(
        st.lists(st.integers(1, 8), min_size=r, max_size=r + 3),
        st.lists(st.integers(1, 12), min_size=r, max_size=r),
    )
)


@settings(max_examples=150, deadline=None)
@given(whci, st.integers(1, 5))
def test_scaling_invariance(wd, c):
    w, d = wd
    base = classify(WHCIInput.make(len(w), len(d), w, d))
    scaled = classify(WHCIInput.make(len(w), len(d), [c * x for x in w], [c * x for x in d]))
    assert base.verdict == scaled.verdict
    excess = sum(w) - sum(d)
    assert (excess % max(d) == 0) == ((c * excess) % (c * max(d)) == 0)


@settings(max_examples=150, deadline=None)
@given(whci)
def test_bounds_and_containment(wd):
    w, d = wd
    rep = classify(WHCIInput.make(len(w), len(d), w, d))
    if not rep.du_bois:
        assert rep.lower_bound is None
        return
    assert rep.lower_bound <= rep.upper_bound
    assert (rep.lower_bound == rep.upper_bound) == (rep.exact_minexp is not None)
    for k in range(0, rep.k + 4):
        assert hodge_containment(k, w, d) == (k <= rep.k)


@settings(max_examples=150, deadline=None)
@given(whci, st.data())
def test_order_bound_top_iff(wd, data):
    w, d = wd
    beta = data.draw(st.lists(st.integers(0, 3), min_size=len(d), max_size=len(d)))
    top = sum(d)
    l_beta = sum(x * y for x, y in zip(d, beta))
    got = element_order_bound((0,) * len(w), beta, w, d)
    assert got >= top - l_beta or sum(w) < top
    assert (got == top) == (sum(w) - l_beta >= top)
