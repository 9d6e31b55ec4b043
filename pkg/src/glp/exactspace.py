"""Rational vectors in a space with a symmetric bilinear form.

The first ``base_dim`` coordinates form an orthonormal block; any further
coordinates are formal marker directions, orthogonal to the base and carrying
a prescribed rational Gram block.  Irrational marker coordinates therefore
never arise: only the values of the form matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, GLPError, IsotropicVector

Rational = Fraction


def as_rational(x: object) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise GLPError(f"not a rational: {x!r}")
    if isinstance(x, (int, str)):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise GLPError(f"not a rational: {x!r}") from exc
    if isinstance(x, np.integer):
        return Fraction(int(x))
    raise GLPError(f"not a rational: {x!r}")


def fmt(q: Fraction) -> str:
    """Render a rational as ``"p/q"``, or ``"p"`` for integers."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Vec(tuple):
    """Immutable rational coordinate vector with elementwise arithmetic."""

    __slots__ = ()

    def __new__(cls, coords: Iterable[object]) -> "Vec":
        return tuple.__new__(cls, (as_rational(c) for c in coords))

    @classmethod
    def _raw(cls, coords: Iterable[Fraction]) -> "Vec":
        return tuple.__new__(cls, coords)

    @classmethod
    def zero(cls, dim: int) -> "Vec":
        return cls._raw((Fraction(0),) * dim)

    @classmethod
    def unit(cls, dim: int, i: int, scale: object = 1) -> "Vec":
        out = [Fraction(0)] * dim
        out[i] = as_rational(scale)
        return cls._raw(out)

    def _check(self, other: Sequence[Fraction]) -> None:
        if len(other) != len(self):
            raise DimensionMismatch(f"length {len(self)} vs {len(other)}")

    def __add__(self, other: Sequence[Fraction]) -> "Vec":  # type: ignore[override]
        self._check(other)
        return Vec._raw(a + b for a, b in zip(self, other))

    def __sub__(self, other: Sequence[Fraction]) -> "Vec":
        self._check(other)
        return Vec._raw(a - b for a, b in zip(self, other))

    def __neg__(self) -> "Vec":
        return Vec._raw(-a for a in self)

    def __mul__(self, k: object) -> "Vec":  # type: ignore[override]
        k = as_rational(k)
        return Vec._raw(a * k for a in self)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self)

    def padded(self, dim: int) -> "Vec":
        """Append zero marker coordinates up to ``dim``."""
        if dim < len(self):
            raise DimensionMismatch(f"cannot pad length {len(self)} to {dim}")
        return Vec._raw(tuple(self) + (Fraction(0),) * (dim - len(self)))

    def __repr__(self) -> str:
        return "Vec(" + ", ".join(fmt(c) for c in self) + ")"


@dataclass(frozen=True)
class AmbientSpace:
    """Rational space whose Gram form is identity on the base block.

    ``gram`` is the full symmetric matrix; the constructor checks the block
    structure.
    """

    base_dim: int
    gram: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        g = tuple(tuple(as_rational(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if any(len(row) != n for row in g):
            raise DimensionMismatch("Gram matrix must be square")
        if not 0 <= self.base_dim <= n:
            raise DimensionMismatch("base_dim exceeds dimension")
        for i in range(n):
            for j in range(n):
                if g[i][j] != g[j][i]:
                    raise GLPError("Gram matrix must be symmetric")
                if i < self.base_dim and j < self.base_dim:
                    if g[i][j] != (1 if i == j else 0):
                        raise GLPError("base block of the Gram matrix must be the identity")
                elif (i < self.base_dim) != (j < self.base_dim) and g[i][j] != 0:
                    raise GLPError("markers must be orthogonal to the base block")

    @classmethod
    def euclidean(cls, dim: int) -> "AmbientSpace":
        return cls(dim, tuple(tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.gram)

    @cached_property
    def _marker_terms(self) -> tuple[tuple[int, int, Fraction], ...]:
        m = self.base_dim
        return tuple(
            (i, j, self.gram[i][j])
            for i in range(m, self.dim)
            for j in range(m, self.dim)
            if self.gram[i][j]
        )

    @cached_property
    def int_gram(self) -> tuple[np.ndarray, int]:
        """The Gram matrix scaled to integers, with its scale factor."""
        den = 1
        for row in self.gram:
            for x in row:
                den = den * x.denominator // gcd(den, x.denominator)
        arr = np.array([[int(x * den) for x in row] for row in self.gram], dtype=object)
        return arr, den

    def vec(self, coords: Iterable[object]) -> Vec:
        v = Vec(coords)
        if len(v) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(v)}")
        return v

    def marker(self, i: int, scale: object = 1) -> Vec:
        """The ``i``-th marker direction (0-based), optionally scaled."""
        return Vec.unit(self.dim, self.base_dim + i, scale)


def inner(space: AmbientSpace, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    """Evaluate the form b(u, v)."""
    n = space.dim
    if len(u) != n or len(v) != n:
        raise DimensionMismatch(f"vectors of length {len(u)}, {len(v)} in a space of dimension {n}")
    s = Fraction(0)
    for i in range(space.base_dim):
        if u[i] and v[i]:
            s += u[i] * v[i]
    for i, j, g in space._marker_terms:
        if u[i] and v[j]:
            s += u[i] * g * v[j]
    return s


def norm2(space: AmbientSpace, u: Sequence[Fraction]) -> Fraction:
    return inner(space, u, u)


def pairing(space: AmbientSpace, alpha: Sequence[Fraction], beta: Sequence[Fraction]) -> Fraction:
    """Return 2 b(alpha, beta) / b(beta, beta)."""
    bb = inner(space, beta, beta)
    if bb == 0:
        raise IsotropicVector(f"b(beta, beta) = 0 for beta = {beta!r}")
    return 2 * inner(space, alpha, beta) / bb


def extend_with_markers(space: AmbientSpace, k: int, marker_gram: Sequence[Sequence[object]]) -> AmbientSpace:
    """Append ``k`` marker directions with the given Gram block."""
    if k < 1:
        raise GLPError("at least one marker is required")
    mg = [[as_rational(x) for x in row] for row in marker_gram]
    if len(mg) != k or any(len(row) != k for row in mg):
        raise DimensionMismatch(f"marker Gram must be {k}x{k}")
    n = space.dim
    rows = [list(row) + [Fraction(0)] * k for row in space.gram]
    rows += [[Fraction(0)] * n + mg[i] for i in range(k)]
    return AmbientSpace(space.base_dim, tuple(tuple(r) for r in rows))


def direct_sum(a: AmbientSpace, b: AmbientSpace) -> AmbientSpace:
    """Orthogonal sum of two marker-free spaces."""
    if a.base_dim != a.dim or b.base_dim != b.dim:
        raise GLPError("direct sums are only formed before markers are added")
    return AmbientSpace.euclidean(a.dim + b.dim)


def int_matrix(vectors: Sequence[Sequence[Fraction]]) -> tuple[np.ndarray, int]:
    """Stack rational vectors into an integer object array and a common denominator."""
    den = 1
    for v in vectors:
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
    arr = np.array([[int(x * den) for x in v] for v in vectors], dtype=object)
    if arr.ndim == 1:
        arr = arr.reshape(len(vectors), 0)
    return arr, den


def gram_table(space: AmbientSpace, left: Sequence[Vec], right: Sequence[Vec]) -> list[list[Fraction]]:
    """All inner products b(left[i], right[j]) computed with exact integer arrays."""
    if not left or not right:
        return [[Fraction(0)] * len(right) for _ in left]
    L, dl = int_matrix(left)
    R, dr = int_matrix(right)
    G, dg = space.int_gram
    prod = L.dot(G).dot(R.T)
    scale = dl * dr * dg
    return [[Fraction(int(x), scale) for x in row] for row in prod]
