from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from glp import linalg
from glp.errors import DimensionMismatch, NotASubalgebra
from glp.gla import decomposable_envelope, jordan_chevalley, lie_closure
from glp.gla.jordan import squarefree_part

entry = st.integers(-3, 3)


@st.composite
def square(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    return [[F(draw(entry)) for _ in range(n)] for _ in range(n)]


@st.composite
def conjugated_jordan(draw, max_n=6):
    """P J P^-1 with J in Jordan form; the semisimple part P D P^-1 is known."""
    n = draw(st.integers(1, max_n))
    eig = draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))
    eig.sort()
    chain = [bool(draw(st.booleans())) and eig[i] == eig[i + 1] for i in range(n - 1)]
    d = [[F(eig[i]) if i == j else F(0) for j in range(n)] for i in range(n)]
    nil = [[F(1) if j == i + 1 and chain[i] else F(0) for j in range(n)] for i in range(n)]
    p = [[F(draw(entry)) for _ in range(n)] for _ in range(n)]
    assume(linalg.det(p) != 0)
    pi = linalg.inverse(p)
    conj = lambda m: linalg.matmul(p, linalg.matmul(m, pi))
    return conj(linalg.add(d, nil)), conj(d)


def _power_span(a):
    n = len(a)
    powers, m = [], a
    for _ in range(n):
        powers.append(linalg.flatten(m))
        m = linalg.matmul(m, a)
    return linalg.Echelon(n * n, powers)


def _postconditions(a, s, nil):
    n = len(a)
    assert linalg.add(s, nil) == a
    assert linalg.commutator(s, nil) == linalg.zeros(n, n)
    assert linalg.is_nilpotent(nil)
    sq = squarefree_part(linalg.charpoly(s))
    assert linalg.is_zero(linalg.peval_matrix(sq, s))
    span = _power_span(a)
    assert span.contains(linalg.flatten(s))
    assert span.contains(linalg.flatten(nil))


@settings(max_examples=250, deadline=None)
@given(square())
def test_random_matrices(a):
    s, nil = jordan_chevalley(a)
    _postconditions(a, s, nil)


@settings(max_examples=250, deadline=None)
@given(conjugated_jordan())
def test_conjugated_jordan_blocks(case):
    a, s_expected = case
    s, nil = jordan_chevalley(a)
    assert s == s_expected
    _postconditions(a, s, nil)


def test_small_examples():
    s, nil = jordan_chevalley([[1, 1], [0, 1]])
    assert s == linalg.identity(2) and nil == [[0, 1], [0, 0]]
    assert jordan_chevalley([]) == ([], [])
    with pytest.raises(DimensionMismatch):
        jordan_chevalley([[1, 2]])


def test_envelope_of_jordan_block():
    env = decomposable_envelope([[[1, 1], [0, 1]]])
    assert len(env) == 2
    span = linalg.Echelon(4, (linalg.flatten(m) for m in env))
    assert span.contains(linalg.flatten(linalg.identity(2)))
    assert span.contains(linalg.flatten([[0, 1], [0, 0]]))


def test_envelope_contains_input_as_ideal():
    a = [[1, 1, 0], [0, 1, 0], [0, 0, 2]]
    b = [[0, 0, 1], [0, 0, 0], [0, 0, 0]]
    base = lie_closure([a, b])
    env = decomposable_envelope(base)
    span = linalg.Echelon(9, (linalg.flatten(m) for m in env))
    inner = linalg.Echelon(9, (linalg.flatten(m) for m in base))
    assert all(span.contains(linalg.flatten(m)) for m in base)
    for x in env:
        for y in base:
            assert inner.contains(linalg.flatten(linalg.commutator(x, y)))


def test_envelope_of_decomposable_is_itself():
    mats = [[[1, 0], [0, -1]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]]
    assert len(decomposable_envelope(mats)) == 3


def test_envelope_rejects_non_subalgebra():
    with pytest.raises(NotASubalgebra):
        decomposable_envelope([[[0, 1], [0, 0]], [[0, 0], [1, 0]]])
