"""Degree slices of root systems and the real-form spin table."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exactspace import Vec
from .rootsys import RootSystem


@dataclass(frozen=True, eq=False)
class GradedRootSystem:
    rs: RootSystem
    degree: Mapping[Vec, int]
    cartan_dim: int
    slices: Mapping[int, tuple[Vec, ...]]

    def dims(self) -> dict[int, int]:
        """dim g_q: slice size plus the Cartan subalgebra in degree 0."""
        lo, hi = min(self.slices, default=0), max(self.slices, default=0)
        out = {q: len(self.slices.get(q, ())) for q in range(min(lo, 0), max(hi, 0) + 1)}
        out[0] = out.get(0, 0) + self.cartan_dim
        return out

    def sizes(self) -> dict[int, int]:
        return {q: len(v) for q, v in sorted(self.slices.items())}


def _degree_map(rs: RootSystem, degree_on_simple: Sequence[int] | Mapping[int, int]) -> dict[Vec, int]:
    if isinstance(degree_on_simple, Mapping):
        degs = [int(degree_on_simple.get(i, 0)) for i in range(rs.rank)]
    else:
        degs = [int(d) for d in degree_on_simple]
    if len(degs) != rs.rank:
        raise ValueError(f"need {rs.rank} simple-root degrees, got {len(degs)}")
    out = {}
    for r in rs.roots:
        d = sum(c * k for c, k in zip(rs.coefficients(r), degs))
        if Fraction(d).denominator != 1:
            raise ValueError(f"root {r!r} has non-integral degree {d}")
        out[r] = int(d)
    return out


def graded_from_degrees(rs: RootSystem, degree: Mapping[Vec, int], cartan_dim: int | None = None) -> GradedRootSystem:
    buckets: dict[int, list[Vec]] = {}
    for r, q in degree.items():
        buckets.setdefault(q, []).append(r)
    slices = {q: tuple(sorted(v)) for q, v in sorted(buckets.items())}
    return GradedRootSystem(rs, dict(degree), rs.rank if cartan_dim is None else cartan_dim, slices)


def slice(rs: RootSystem, degree_on_simple: Sequence[int] | Mapping[int, int], cartan_dim: int | None = None) -> GradedRootSystem:
    """Split roots by the degree functional fixed on the simple roots."""
    return graded_from_degrees(rs, _degree_map(rs, degree_on_simple), cartan_dim)


def check_fundamental(g: GradedRootSystem) -> bool:
    """Is every root of degree -q-1 a sum of roots of degrees -1 and -q?"""
    mu, _ = depth_height(g)
    minus_one = g.slices.get(-1, ())
    for q in range(1, mu):
        target = set(g.slices.get(-q, ()))
        for gamma in g.slices.get(-q - 1, ()):
            if not any((gamma - beta) in target for beta in minus_one):
                return False
    return True


def depth_height(g: GradedRootSystem) -> tuple[int, int]:
    qs = [q for q, v in g.slices.items() if v]
    mu = max([-q for q in qs if q < 0], default=0)
    nu = max([q for q in qs if q > 0], default=0)
    return mu, nu


def check_symmetry(g: GradedRootSystem) -> bool:
    return all(len(g.slices.get(q, ())) == len(g.slices.get(-q, ())) for q in g.slices)


def check_additivity(g: GradedRootSystem) -> bool:
    """deg(a + b) = deg a + deg b whenever a, b and a + b are roots; deg(-a) = -deg a."""
    deg = g.degree
    roots = sorted(deg)
    for a in roots:
        if deg[-a] != -deg[a]:
            return False
        for b in roots:
            s = a + b
            if s in deg and deg[s] != deg[a] + deg[b]:
                return False
    return True


def spin_reality(p: int, q: int) -> str:
    """Reality type of the spin module of o(p, q), from q - p mod 8."""
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError("need nonnegative p, q with p + q >= 1")
    r = (q - p) % 8
    if r in (0, 1, 7):
        return "Real"
    if r in (2, 6):
        return "Complex"
    return "Quaternionic"
