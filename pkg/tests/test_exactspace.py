from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glp.errors import DimensionMismatch, GLPError, IsotropicVector
from glp.exactspace import AmbientSpace, Vec, as_rational, extend_with_markers, fmt, gram_table, inner, norm2, pairing

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def test_as_rational_accepts_strings_ints_fractions():
    assert as_rational("3/4") == F(3, 4)
    assert as_rational(-2) == F(-2)
    assert as_rational(F(1, 3)) == F(1, 3)
    with pytest.raises(GLPError):
        as_rational(0.5)
    with pytest.raises(GLPError):
        as_rational("1/0")


def test_fmt_round_trip():
    assert fmt(F(-3, 6)) == "-1/2"
    assert fmt(F(4)) == "4"


def test_vec_arithmetic_is_exact():
    v = Vec([1, "1/2"])
    w = Vec([F(1, 3), 0])
    assert v + w == Vec([F(4, 3), F(1, 2)])
    assert v - v == Vec.zero(2)
    assert (v * 2) == Vec([2, 1])
    assert -v == Vec([-1, F(-1, 2)])
    with pytest.raises(DimensionMismatch):
        v + Vec([1])


def test_space_validation():
    with pytest.raises(GLPError):
        AmbientSpace(1, ((2,),))
    with pytest.raises(GLPError):
        AmbientSpace(1, ((1, 1), (1, 1)))
    with pytest.raises(GLPError):
        AmbientSpace(0, ((1, 2), (3, 1)))


def test_marker_form():
    sp = extend_with_markers(AmbientSpace.euclidean(2), 1, [["1/4"]])
    eps = sp.marker(0)
    assert norm2(sp, eps) == F(1, 4)
    assert inner(sp, eps, Vec([1, 0, 0])) == 0
    assert norm2(sp, Vec([1, 1, 2])) == 3


def test_pairing_rejects_isotropic():
    sp = extend_with_markers(AmbientSpace.euclidean(1), 1, [[-1]])
    with pytest.raises(IsotropicVector):
        pairing(sp, Vec([1, 0]), Vec([1, 1]))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=1, max_size=4), rationals)
def test_gram_table_matches_inner(vectors, b):
    sp = extend_with_markers(AmbientSpace.euclidean(2), 1, [[b]])
    vs = [Vec(v) for v in vectors]
    table = gram_table(sp, vs, vs)
    assert table == [[inner(sp, u, v) for v in vs] for u in vs]


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3))
def test_inner_is_symmetric_bilinear(u, v):
    sp = extend_with_markers(AmbientSpace.euclidean(1), 2, [[1, "1/3"], ["1/3", 2]])
    u, v = Vec(u), Vec(v)
    assert inner(sp, u, v) == inner(sp, v, u)
    assert inner(sp, u * 3, v) == 3 * inner(sp, u, v)
