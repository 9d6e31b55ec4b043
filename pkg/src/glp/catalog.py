"""Catalog of semisimple graded algebras built from markers.

Each entry lists its degree slices as ``marker coefficients + Pi(lambda)``,
with ``lambda`` given on the fundamental weights of the base.  Building an
entry checks the listed slices two ways: directly with ``classify`` and
against the root system generated by the extended simple roots
``base simple roots + (lowest weight + marker)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .dynkin import algebra_dim
from .errors import UnknownConstruction
from .exactspace import AmbientSpace, Vec, extend_with_markers
from .gcm import GCMClass, GeneralizedCartanMatrix, build_gcm, classify_gcm
from .report import Check, check
from .rootsys import (
    RootSystem,
    build_root_system,
    classify,
    direct_sum,
    generate_roots,
    lowest_conjugate,
    weight_set,
)
from .slicer import GradedRootSystem, check_fundamental, check_symmetry, depth_height, graded_from_degrees, slice

F = Fraction


@dataclass(frozen=True)
class SliceSpec:
    q: int
    markers: tuple[int, ...]
    weight: tuple[int, ...]  # coefficients on the base fundamental weights


@dataclass(frozen=True)
class Construction:
    name: str
    family: str
    base: tuple[tuple[str, int], ...]
    marker_gram: tuple[tuple[Fraction, ...], ...]
    slices: tuple[SliceSpec, ...]
    expected_type: str
    expected_slice_sizes: dict[int, int] = field(hash=False)
    expected_depth: int
    completion: tuple[SliceSpec, ...] = ()
    note: str = ""

    @property
    def k(self) -> int:
        return len(self.marker_gram)

    @property
    def base_rank(self) -> int:
        return sum(r for _, r in self.base)

    @property
    def alias(self) -> str:
        return self.name.replace("Λ", "L").replace("ω", "w")

    def modules(self) -> list[tuple[int, ...]]:
        """Dominant weight of the degree -1 module attached to each marker."""
        out = []
        for i in range(self.k):
            unit = tuple(int(j == i) for j in range(self.k))
            spec = next(s for s in self.slices if s.q == -1 and s.markers == unit)
            out.append(spec.weight)
        return out


def _w(rank: int, *idx: int) -> tuple[int, ...]:
    """Coefficient vector for a sum of fundamental weights (1-based indices)."""
    out = [0] * rank
    for i in idx:
        if 1 <= i <= rank:
            out[i - 1] += 1
    return tuple(out)


def _scaled(rank: int, c: int, i: int) -> tuple[int, ...]:
    out = [0] * rank
    out[i - 1] = c
    return tuple(out)


def _entries() -> list[Construction]:
    out: list[Construction] = []
    S = SliceSpec
    for n in range(3, 9):
        r = n - 1
        out.append(Construction(
            f"B{n}-from-A{n - 1}", "Bn-from-An-1", (("A", r),), ((F(1, n),),),
            (S(-2, (2,), _w(r, 2)), S(-1, (1,), _w(r, 1)), S(1, (-1,), _w(r, n - 1)), S(2, (-2,), _w(r, n - 2))),
            f"B{n}", {-2: comb(n, 2), -1: n, 0: n * (n - 1), 1: n, 2: comb(n, 2)}, 2,
        ))
    out.append(Construction(
        "G2-from-A1-kind3", "G2-from-A1-kind3", (("A", 1),), ((F(1, 6),),),
        (S(-3, (3,), (1,)), S(-2, (2,), (0,)), S(-1, (1,), (1,)), S(1, (-1,), (1,)), S(2, (-2,), (0,)), S(3, (-3,), (1,))),
        "G2", {-3: 2, -2: 1, -1: 2, 0: 2, 1: 2, 2: 1, 3: 2}, 3,
    ))
    for n in range(3, 9):
        r = n - 1
        out.append(Construction(
            f"C{n}-from-Sym2", "Cn-from-Sym2", (("A", r),), ((F(4, n),),),
            (S(-1, (1,), _scaled(r, 2, 1)), S(1, (-1,), _scaled(r, 2, n - 1))),
            f"C{n}", {-1: comb(n + 1, 2), 0: n * (n - 1), 1: comb(n + 1, 2)}, 1,
        ))
    out.append(Construction(
        "G2-from-Sym3", "G2-from-Sym3", (("A", 1),), ((F(3, 2),),),
        (S(-2, (2,), (0,)), S(-1, (1,), (3,)), S(1, (-1,), (3,)), S(2, (-2,), (0,))),
        "G2", {-2: 1, -1: 4, 0: 2, 1: 4, 2: 1}, 2,
    ))
    for n in range(4, 9):
        r = n - 1
        out.append(Construction(
            f"D{n}-from-Λ2", "Dn-from-Λ2", (("A", r),), ((F(4, n),),),
            (S(-1, (1,), _w(r, 2)), S(1, (-1,), _w(r, n - 2))),
            f"D{n}", {-1: comb(n, 2), 0: n * (n - 1), 1: comb(n, 2)}, 1,
        ))
    for n in (6, 7, 8):
        r = n - 1
        sizes = {-2: comb(n, 6), -1: comb(n, 3), 0: n * (n - 1), 1: comb(n, 3), 2: comb(n, 6)}
        completion: tuple[SliceSpec, ...] = ()
        note = ""
        depth = 2
        if n == 8:
            completion = (S(-3, (3,), _w(r, 1)), S(3, (-3,), _w(r, 7)))
            sizes.update({-3: 8, 3: 8})
            depth = 3
            note = "listed slices q=-2..2 hold 224 roots; degree +-3 slices (8 each) completed to reach 240"
        out.append(Construction(
            f"E{n}-from-Λ3", "E6/E7/E8-from-Λ3", (("A", r),), ((F(9, n) - 1,),),
            (S(-2, (2,), _w(r, 6)), S(-1, (1,), _w(r, 3)), S(1, (-1,), _w(r, n - 3)), S(2, (-2,), _w(r, n - 6))),
            f"E{n}", dict(sorted(sizes.items())), depth, completion, note,
        ))
    out.append(Construction(
        "F4-from-spin7", "F4-from-spin7", (("B", 3),), ((F(1, 4),),),
        (S(-2, (2,), _w(3, 1)), S(-1, (1,), _w(3, 3)), S(1, (-1,), _w(3, 3)), S(2, (-2,), _w(3, 1))),
        "F4", {-2: 7, -1: 8, 0: 18, 1: 8, 2: 7}, 2,
    ))
    out.append(Construction(
        "F4-from-C3ω3", "F4-from-C3ω3", (("C", 3),), ((F(1),),),
        (S(-2, (2,), (0, 0, 0)), S(-1, (1,), _w(3, 3)), S(1, (-1,), _w(3, 3)), S(2, (-2,), (0, 0, 0))),
        "F4", {-2: 1, -1: 14, 0: 18, 1: 14, 2: 1}, 2,
    ))
    out.append(Construction(
        "E6-from-D5-spin", "E6/E7/E8-from-D-spin", (("D", 5),), ((F(3, 4),),),
        (S(-1, (1,), _w(5, 4)), S(1, (-1,), _w(5, 5))),
        "E6", {-1: 16, 0: 40, 1: 16}, 1,
    ))
    out.append(Construction(
        "E7-from-D6-spin", "E6/E7/E8-from-D-spin", (("D", 6),), ((F(1, 2),),),
        (S(-2, (2,), _w(6)), S(-1, (1,), _w(6, 6)), S(1, (-1,), _w(6, 6)), S(2, (-2,), _w(6))),
        "E7", {-2: 1, -1: 32, 0: 60, 1: 32, 2: 1}, 2,
    ))
    out.append(Construction(
        "E8-from-D7-spin", "E6/E7/E8-from-D-spin", (("D", 7),), ((F(1, 4),),),
        (S(-2, (2,), _w(7, 1)), S(-1, (1,), _w(7, 6)), S(1, (-1,), _w(7, 7)), S(2, (-2,), _w(7, 1))),
        "E8", {-2: 14, -1: 64, 0: 84, 1: 64, 2: 14}, 2,
    ))
    out.append(Construction(
        "E6-double-spin-D4", "E6-double-spin-D4", (("D", 4),), ((F(1), F(-1, 2)), (F(-1, 2), F(1))),
        (
            S(-2, (1, 1), _w(4, 1)),
            S(-1, (1, 0), _w(4, 3)),
            S(-1, (0, 1), _w(4, 4)),
            S(1, (-1, 0), _w(4, 3)),
            S(1, (0, -1), _w(4, 4)),
            S(2, (-1, -1), _w(4, 1)),
        ),
        "E6", {-2: 8, -1: 16, 0: 24, 1: 16, 2: 8}, 2,
    ))
    out.append(Construction(
        "D6-quaternionic-spin", "D6/E7-quaternionic-spin", (("A", 1), ("D", 4)), ((F(1, 2),),),
        (S(-2, (2,), _w(5)), S(-1, (1,), _w(5, 1, 5)), S(1, (-1,), _w(5, 1, 5)), S(2, (-2,), _w(5))),
        "D6", {-2: 1, -1: 16, 0: 26, 1: 16, 2: 1}, 2,
    ))
    out.append(Construction(
        "E7-quaternionic-spin", "D6/E7-quaternionic-spin", (("A", 1), ("D", 5)), ((F(1, 4),),),
        (S(-2, (2,), _w(6, 2)), S(-1, (1,), _w(6, 1, 6)), S(1, (-1,), _w(6, 1, 5)), S(2, (-2,), _w(6, 2))),
        "E7", {-2: 10, -1: 32, 0: 42, 1: 32, 2: 10}, 2,
    ))
    return out


_CATALOG = _entries()


def catalog() -> list[Construction]:
    return list(_CATALOG)


def lookup(name: str) -> Construction:
    for c in _CATALOG:
        if name in (c.name, c.alias):
            return c
    folded = name.casefold()
    for c in _CATALOG:
        if folded in (c.name.casefold(), c.alias.casefold()):
            return c
    raise UnknownConstruction(f"no catalog entry named {name!r}")


@dataclass(frozen=True, eq=False)
class BuildResult:
    construction: Construction
    base: RootSystem
    space: AmbientSpace
    listed: dict[int, tuple[Vec, ...]]
    graded: GradedRootSystem
    generated: RootSystem
    gcm: GeneralizedCartanMatrix
    gcm_class: GCMClass
    type_label: str
    checks: tuple[Check, ...]
    degree_on_simple: tuple[int, ...]
    flags: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def listed_total(self, include_completion: bool = True) -> int:
        qs = set(self.listed)
        if not include_completion:
            qs -= {s.q for s in self.construction.completion}
        return sum(len(self.listed[q]) for q in qs)


def base_root_system(c: Construction) -> RootSystem:
    parts = [build_root_system(f, r) for f, r in c.base]
    return parts[0] if len(parts) == 1 else direct_sum(*parts)


def _slice_vectors(base: RootSystem, space: AmbientSpace, spec: SliceSpec) -> tuple[list[Vec], bool]:
    lam = base.weight(spec.weight)
    ws = weight_set(base, lam)
    shift = Vec.zero(space.dim)
    for i, c in enumerate(spec.markers):
        shift = shift + space.marker(i, c)
    vecs = sorted(w.padded(space.dim) + shift for w in ws.weights)
    return [v for v in vecs if not v.is_zero()], all(m == 1 for m in ws.multiplicities.values())


def build_construction(name: str) -> BuildResult:
    c = lookup(name)
    base = base_root_system(c)
    space = extend_with_markers(base.space, c.k, c.marker_gram)
    m0 = space.base_dim

    listed: dict[int, list[Vec]] = {0: sorted(r.padded(space.dim) for r in base.roots)}
    multiplicity_free = True
    for spec in c.slices + c.completion:
        vecs, mf = _slice_vectors(base, space, spec)
        multiplicity_free &= mf
        listed.setdefault(spec.q, []).extend(vecs)
    listed_t = {q: tuple(sorted(set(v))) for q, v in sorted(listed.items())}
    union = {v for vs in listed_t.values() for v in vs}

    # degree read off the marker coefficients
    eps_degree = {v: -int(sum(v[m0:])) for v in union}
    eps_ok = all(eps_degree[v] == q for q, vs in listed_t.items() for v in vs)

    type_label = classify(union, space)

    lowest = [lowest_conjugate(base, base.weight(w)) for w in c.modules()]
    new_simple = [w.padded(space.dim) + space.marker(i) for i, w in enumerate(lowest)]
    gcm = build_gcm(base, new_simple, space)
    gcm_class = classify_gcm(gcm)
    simple = tuple(a.padded(space.dim) for a in base.simple_roots) + tuple(new_simple)
    generated = RootSystem(space, generate_roots(space, simple), simple, gcm_class.type_label)
    degree_on_simple = (0,) * base.rank + (-1,) * c.k
    graded = slice(generated, degree_on_simple, cartan_dim=base.rank + c.k)
    gen_slices = {q: v for q, v in graded.slices.items()}

    checks = [
        check("listed slices are multiplicity free", True, multiplicity_free),
        check("type of union of listed slices", c.expected_type, type_label),
        check("slice sizes", c.expected_slice_sizes, {q: len(v) for q, v in listed_t.items()}),
        check("root count", algebra_dim(c.expected_type) - base.rank - c.k, len(union)),
        check("marker-coefficient degree matches slice index", True, eps_ok),
        check("extended Cartan matrix class", f"Finite({c.expected_type})", str(gcm_class)),
        check("reflection closure of extended simple roots equals listed union", True, generated.roots == frozenset(union)),
        check("simple-root degrees reproduce the listed slices", True, gen_slices == listed_t),
        check("depth", c.expected_depth, depth_height(graded)[0]),
        check("dim g_q = dim g_-q", True, check_symmetry(graded)),
        check("negative part generated by degree -1", True, check_fundamental(graded)),
        check("total dimension", algebra_dim(c.expected_type), sum(graded.dims().values())),
    ]
    flags = []
    if c.completion:
        listed_only = sum(len(v) for q, v in listed_t.items() if q not in {s.q for s in c.completion})
        flags.append(f"discrepancy: {c.note} (listed {listed_only}, completed {len(union)})")
    return BuildResult(
        c, base, space, listed_t, graded_from_degrees(generated, graded.degree, base.rank + c.k), generated,
        gcm, gcm_class, type_label, tuple(checks), degree_on_simple, tuple(flags),
    )
