from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hodge_vfilt.bfunction import EmptyInput, RootMultiset, min_root, rescale, shift, thom_sebastiani
from oracles import FROZEN, ts_enumerate

F = Fraction
multisets = st.dictionaries(st.fractions(0, 4, max_denominator=6), st.integers(1, 3), min_size=1, max_size=5).map(RootMultiset)


def test_rescale_examples():
    cusp = RootMultiset(FROZEN["cusp_roots"])
    assert rescale(cusp, 1) == cusp
    assert rescale(RootMultiset({1: 1}), 3).as_dict() == {3: 1}
    assert rescale(cusp, 2).as_dict() == FROZEN["cusp_rescaled_2"]


def test_rescale_rejects_zero():
    with pytest.raises(ValueError):
        rescale(RootMultiset({1: 1}), 0)


def test_ts_examples():
    assert thom_sebastiani(RootMultiset({1: 1}), RootMultiset({1: 1})).as_dict() == {2: 1}
    assert thom_sebastiani(RootMultiset({1: 2}), RootMultiset({1: 1})).as_dict() == {2: 2}
    got = thom_sebastiani(RootMultiset({F(1, 2): 1, 1: 1}), RootMultiset({F(1, 2): 1}))
    assert got.as_dict() == FROZEN["ts_half_one_half"]


def test_min_root_examples():
    assert min_root(RootMultiset({1: 1})) == 1
    assert min_root(RootMultiset(FROZEN["cusp_roots"])) == F(5, 6)
    assert min_root(thom_sebastiani(RootMultiset({F(1, 2): 1}), RootMultiset({F(1, 3): 1}))) == F(5, 6)


def test_empty_inputs():
    with pytest.raises(EmptyInput):
        thom_sebastiani(RootMultiset(), RootMultiset({1: 1}))
    with pytest.raises(EmptyInput):
        min_root(RootMultiset())


def test_bad_multiplicity():
    with pytest.raises(ValueError):
        RootMultiset({1: 0})


def test_shift_moves_roots_down():
    assert shift(RootMultiset({F(5, 6): 1, 1: 2}), 1).as_dict() == {F(-1, 6): 1, 0: 2}


@settings(max_examples=100, deadline=None)
@given(multisets, multisets)
def test_ts_matches_pair_enumeration(b, c):
    assert thom_sebastiani(b, c).as_dict() == ts_enumerate(b.as_dict(), c.as_dict())


@settings(max_examples=100, deadline=None)
@given(multisets, multisets, multisets)
def test_ts_commutative_associative(b, c, d):
    assert thom_sebastiani(b, c) == thom_sebastiani(c, b)
    assert thom_sebastiani(thom_sebastiani(b, c), d) == thom_sebastiani(b, thom_sebastiani(c, d))


@settings(max_examples=100, deadline=None)
@given(multisets, multisets)
def test_min_root_adds_and_degree_grows(b, c):
    ts = thom_sebastiani(b, c)
    assert min_root(ts) == min_root(b) + min_root(c)
    assert ts.degree >= max(b.degree, c.degree)


@settings(max_examples=60, deadline=None)
@given(multisets, st.integers(1, 6))
def test_rescale_keeps_degree(b, a):
    assert rescale(b, a).degree == b.degree
    assert min_root(rescale(b, a)) == a * min_root(b)
