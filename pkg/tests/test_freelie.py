from __future__ import annotations

import itertools

import pytest

from glp.errors import GLPError
from glp.gla import free_lie_dims, hall_basis, witt_dims


def _lyndon_words(alphabet: int, max_len: int):
    """Duval's generator of Lyndon words over {0..alphabet-1}."""
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == alphabet - 1:
            w.pop()


def lyndon_oracle(generator_dims: dict[int, int], depth: int) -> dict[int, int]:
    letters = [-q for q, n in sorted(generator_dims.items(), reverse=True) for _ in range(n)]
    out = {-m: 0 for m in range(1, depth + 1)}
    if not letters:
        return out
    for word in _lyndon_words(len(letters), depth):
        w = sum(letters[c] for c in word)
        if w <= depth:
            out[-w] += 1
    return out


@pytest.mark.parametrize("n", range(1, 7))
def test_degree_two_of_single_generator_layer(n):
    assert free_lie_dims({-1: n}, 2)[-2] == n * (n - 1) // 2


@pytest.mark.parametrize("n", range(1, 7))
def test_degree_three(n):
    assert free_lie_dims({-1: n}, 3)[-3] == (n**3 - n) // 3


def test_two_generators():
    assert free_lie_dims({-1: 2}, 3) == {-1: 2, -2: 1, -3: 2}


def test_six_generators_depth_five():
    assert free_lie_dims({-1: 6}, 5)[-5] == 1554


def _profiles(total: int, depth: int):
    for counts in itertools.product(range(total + 1), repeat=depth):
        if 0 < sum(counts) <= total:
            yield {-(q + 1): c for q, c in enumerate(counts) if c}


def test_exhaustive_against_lyndon_count():
    seen = 0
    for depth in range(1, 6):
        for prof in _profiles(6, min(depth, 3)):
            got = free_lie_dims(prof, depth)
            assert got == lyndon_oracle(prof, depth), (prof, depth)
            assert got == witt_dims(prof, depth)
            seen += 1
    assert seen > 100


def test_hall_trees_are_well_formed():
    for tree, w in hall_basis({-1: 2, -2: 1}, 4):
        assert w <= 4
        if isinstance(tree, tuple):
            assert len(tree) == 2


def test_bad_input():
    with pytest.raises(GLPError):
        free_lie_dims({0: 1}, 3)
    with pytest.raises(GLPError):
        free_lie_dims({-1: 1}, 0)
