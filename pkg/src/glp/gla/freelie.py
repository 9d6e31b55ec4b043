"""Graded dimensions of free Lie algebras: Hall basis and Witt formula."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

import sympy

from ..errors import GLPError

Tree = object  # int for a letter, (left, right) for a bracket


def _letters(generator_dims: Mapping[int, int]) -> list[int]:
    """Weights (positive) of the letters, one per generator."""
    out = []
    for deg, n in sorted(generator_dims.items(), reverse=True):
        if deg >= 0:
            raise GLPError("generators must sit in negative degrees")
        if n < 0:
            raise GLPError("generator counts must be nonnegative")
        out += [-deg] * n
    return out


def hall_basis(generator_dims: Mapping[int, int], depth: int) -> list[tuple[Tree, int]]:
    """Hall trees of weight at most ``depth``, with their weights.

    Trees are ordered by decreasing length, then creation; a bracket
    (t1, t2) is a Hall tree when t1 < t2 and either t1 is a letter or the
    right factor of t1 is at least t2.
    """
    if depth < 1:
        raise GLPError("depth cutoff must be at least 1")
    weights = _letters(generator_dims)
    key: dict[Tree, tuple[int, int]] = {}
    length: dict[Tree, int] = {}
    weight: dict[Tree, int] = {}
    by_length: dict[int, list[Tree]] = {1: []}
    for i, w in enumerate(weights):
        if w <= depth:
            key[i] = (-1, len(key))
            length[i], weight[i] = 1, w
            by_length[1].append(i)
    for L in range(2, depth + 1):
        new = []
        for l1 in range(1, L):
            for t1 in by_length.get(l1, []):
                for t2 in by_length.get(L - l1, []):
                    if key[t1] >= key[t2] or weight[t1] + weight[t2] > depth:
                        continue
                    if isinstance(t1, tuple) and key[t1[1]] < key[t2]:
                        continue
                    new.append((t1, t2))
        by_length[L] = []
        for t in new:
            key[t] = (-L, len(key))
            length[t] = L
            weight[t] = weight[t[0]] + weight[t[1]]
            by_length[L].append(t)
    return [(t, weight[t]) for L in sorted(by_length) for t in by_length[L]]


def witt_dims(generator_dims: Mapping[int, int], depth: int) -> dict[int, int]:
    """dim f_{-m} from  m L_m = sum_{d | m} mu(d) c_{m/d},  c_k = k [t^k] -log(1 - p(t))."""
    weights = _letters(generator_dims)
    p = [Fraction(0)] * (depth + 1)
    for w in weights:
        if w <= depth:
            p[w] += 1
    log = [Fraction(0)] * (depth + 1)
    power = [Fraction(1)] + [Fraction(0)] * depth
    for k in range(1, depth + 1):
        power = [sum((power[i] * p[m - i] for i in range(m + 1)), Fraction(0)) for m in range(depth + 1)]
        for m in range(depth + 1):
            log[m] += power[m] / k
    c = [m * log[m] for m in range(depth + 1)]
    out = {}
    for m in range(1, depth + 1):
        total = sum((sympy.mobius(d) * c[m // d] for d in sympy.divisors(m)), Fraction(0))
        val = Fraction(total) / m
        if val.denominator != 1:  # pragma: no cover - integrality of necklace counts
            raise GLPError("Witt formula produced a non-integer")
        out[-m] = int(val)
    return out


def free_lie_dims(generator_dims: Mapping[int, int], depth_cutoff: int) -> dict[int, int]:
    """{q: dim f_q} for q = -1 .. -depth_cutoff, Hall count checked against Witt."""
    hall = hall_basis(generator_dims, depth_cutoff)
    counts = {-m: 0 for m in range(1, depth_cutoff + 1)}
    for _, w in hall:
        counts[-w] += 1
    if counts != witt_dims(generator_dims, depth_cutoff):  # pragma: no cover
        raise GLPError("Hall basis count disagrees with the Witt formula")
    return counts
