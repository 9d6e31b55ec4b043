"""Markers, extended generalized Cartan matrices and their finiteness class.

A lowest weight ``w`` of a base module is turned into a new simple root
``w + eps`` by adding a marker direction ``eps`` orthogonal to the base.  The
only free data are the values of the form on the markers.

Entries follow the root-system convention ``A[i][j] = 2 b(a_i, a_j) / b(a_j, a_j)``
so the base Cartan matrix is literally the top-left block.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from . import linalg
from .dynkin import cartan_type, component_types, components
from .errors import NotGCM
from .exactspace import AmbientSpace, Vec, extend_with_markers, inner, norm2
from .rootsys import RootSystem, lowest_conjugate

DEFAULT_MAX_DENOM = 24


@dataclass(frozen=True)
class GeneralizedCartanMatrix:
    entries: tuple[tuple[int, ...], ...]
    sym_gram: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class GCMClass:
    kind: str  # "Finite", "Affine" or "Indefinite"
    type_label: str | None = None

    def __str__(self) -> str:
        return f"Finite({self.type_label})" if self.kind == "Finite" else self.kind


@dataclass(frozen=True)
class MarkerProblem:
    base: RootSystem
    lowest_weights: tuple[Vec, ...]

    @property
    def k(self) -> int:
        return len(self.lowest_weights)


@dataclass(frozen=True)
class MarkerSolution:
    b_eps: Fraction
    norm: Fraction  # |w + eps|^2
    gcm: GeneralizedCartanMatrix
    classification: GCMClass
    simple_roots: tuple[Vec, ...] = field(compare=False)
    space: AmbientSpace = field(compare=False)


@dataclass(frozen=True)
class MarkerCheck:
    ok: bool
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def gcm_from_simple(space: AmbientSpace, simple: Sequence[Vec]) -> GeneralizedCartanMatrix:
    """Cartan matrix of an arbitrary list of candidate simple roots.

    ``space`` must host every vector (base roots padded with zero marker
    coordinates).
    """
    vecs = [space.vec(v) for v in simple]
    g = [[inner(space, u, v) for v in vecs] for u in vecs]
    bad = []
    n = len(vecs)
    entries = []
    for i in range(n):
        if g[i][i] == 0:
            raise NotGCM(f"simple root {i} is isotropic")
    for i in range(n):
        row = []
        for j in range(n):
            x = 2 * g[i][j] / g[j][j]
            if x.denominator != 1 or (i != j and x > 0):
                bad.append(f"a[{i}][{j}] = {x}")
            row.append(int(x) if x.denominator == 1 else 0)
        entries.append(tuple(row))
    for i in range(n):
        for j in range(n):
            if i != j and (g[i][j] == 0) != (g[j][i] == 0):
                bad.append(f"a[{i}][{j}] and a[{j}][{i}] disagree on vanishing")
    if bad:
        raise NotGCM("not a generalized Cartan matrix: " + ", ".join(bad))
    return GeneralizedCartanMatrix(tuple(entries), tuple(tuple(r) for r in g))


def build_gcm(base: RootSystem, new_simple_roots: Sequence[Vec], space: AmbientSpace) -> GeneralizedCartanMatrix:
    """Extend the base Cartan matrix by new simple roots living in ``space``."""
    lifted = [a.padded(space.dim) for a in base.simple_roots]
    return gcm_from_simple(space, lifted + list(new_simple_roots))


def classify_gcm(g: GeneralizedCartanMatrix) -> GCMClass:
    """Finite / Affine / Indefinite from exact elimination of the symmetrization."""
    kinds = []
    for comp in components(g.entries):
        sub = [[g.sym_gram[i][j] for j in comp] for i in comp]
        kind, corank = linalg.definiteness(sub)
        if kind == "positive":
            kinds.append("Finite")
        elif kind == "semidefinite" and corank == 1:
            kinds.append("Affine")
        else:
            return GCMClass("Indefinite")
    if all(k == "Finite" for k in kinds):
        label = cartan_type(g.entries)
        if label is None:  # positive definite forces a finite diagram
            raise NotGCM("positive definite matrix with an unrecognised diagram")
        return GCMClass("Finite", label)
    return GCMClass("Affine")


def _rational_gcd(values: Sequence[Fraction]) -> Fraction:
    num = 0
    den = 1
    for v in values:
        num = gcd(num, v.numerator)
        den = den * v.denominator // gcd(den, v.denominator)
    return Fraction(num, den)


def max_denominator() -> int:
    raw = os.environ.get("GLP_MAX_MARKER_DENOM")
    if raw is None:
        return DEFAULT_MAX_DENOM
    value = int(raw)
    if value < 1:
        raise ValueError("GLP_MAX_MARKER_DENOM must be a positive integer")
    return value


_CLASS_RANK = {"Finite": 0, "Affine": 1, "Indefinite": 2}


def solve_single_marker(base: RootSystem, extremal: Sequence[Fraction], max_denom: int | None = None) -> list[MarkerSolution]:
    """All admissible values of b(eps, eps) for one irreducible module.

    The length ``d = |w|^2 + b(eps, eps)`` of the new root must divide every
    nonzero ``2 (a|w)``; the candidates are ``g / t`` for ``t = 1..T`` with
    ``g`` the positive rational gcd of those values.  Finite solutions come
    first, then decreasing ``d``.
    """
    T = max_denominator() if max_denom is None else max_denom
    w = lowest_conjugate(base, Vec(extremal))
    values = [2 * inner(base.space, a, w) for a in base.roots]
    values = [abs(v) for v in values if v]
    if not values:
        return []
    g = _rational_gcd(values)
    w2 = norm2(base.space, w)
    out = []
    for t in range(1, T + 1):
        d = g / t
        b = d - w2
        space = extend_with_markers(base.space, 1, [[b]])
        alpha = w.padded(space.dim) + space.marker(0)
        gcm = build_gcm(base, [alpha], space)
        lifted = tuple(a.padded(space.dim) for a in base.simple_roots) + (alpha,)
        out.append(MarkerSolution(b, d, gcm, classify_gcm(gcm), lifted, space))
    out.sort(key=lambda s: (_CLASS_RANK[s.classification.kind], -s.norm))
    return out


def check_multi_marker(problem: MarkerProblem, marker_gram: Sequence[Sequence[object]], euclidean_markers: bool = True) -> MarkerCheck:
    """Check the marker conditions for ``k`` irreducible summands.

    With ``euclidean_markers`` the markers must also be realizable as linearly
    independent vectors of a Euclidean marker space, which for pairs is the
    strict Cauchy-Schwarz inequality.
    """
    base = problem.base
    k = problem.k
    space = extend_with_markers(base.space, k, marker_gram)
    ws = [lowest_conjugate(base, Vec(w)) for w in problem.lowest_weights]
    news = [w.padded(space.dim) + space.marker(i) for i, w in enumerate(ws)]
    norms = [norm2(space, a) for a in news]
    mg = [[space.gram[space.base_dim + i][space.base_dim + j] for j in range(k)] for i in range(k)]
    bad = []
    for i in range(k):
        if norms[i] <= 0:
            bad.append(f"positivity: |alpha_{i}|^2 = {norms[i]}")
    for i in range(k):
        if norms[i] <= 0:
            continue
        for j, a in enumerate(base.simple_roots):
            x = 2 * inner(base.space, ws[i], a) / norms[i]
            if x.denominator != 1:
                bad.append(f"integrality: 2(w_{i}|a_{j})/|alpha_{i}|^2 = {x}")
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            cross = inner(space, news[i], news[j])
            if norms[i] > 0:
                x = 2 * cross / norms[i]
                if x.denominator != 1:
                    bad.append(f"cross integrality ({i},{j}): {x}")
            if cross > 0:
                bad.append(f"cross sign ({i},{j}): {cross} > 0")
    if euclidean_markers:
        for i in range(k):
            for j in range(i + 1, k):
                if mg[i][i] > 0 and mg[j][j] > 0 and mg[i][j] ** 2 >= mg[i][i] * mg[j][j]:
                    bad.append(f"cauchy ({i},{j}): b(e_i,e_j)^2 = {mg[i][j] ** 2} >= {mg[i][i] * mg[j][j]}")
    return MarkerCheck(not bad, tuple(bad))


def gcm_component_types(g: GeneralizedCartanMatrix) -> list[tuple[list[int], str | None]]:
    return component_types(g.entries)
