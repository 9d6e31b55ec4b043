"""Root systems, Weyl orbits, weight sets and classification by type."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .dynkin import cartan_type
from .errors import GLPError, InvalidRank, NonIntegralWeight, NotARootSystem, NotDominant
from .exactspace import AmbientSpace, Vec, gram_table, inner, int_matrix, pairing

HALF = Fraction(1, 2)
MAX_ROOTS = 20000


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A finite root set together with an ordered simple system."""

    space: AmbientSpace
    roots: frozenset[Vec]
    simple_roots: tuple[Vec, ...]
    type_label: str | None = None

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @cached_property
    def _dual_gram(self) -> linalg.Matrix:
        g = gram_table(self.space, self.simple_roots, self.simple_roots)
        return linalg.inverse(g)

    def coefficients(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Coordinates of ``v`` (assumed in the span) on the simple roots."""
        hit = self._root_coefficients.get(v) if isinstance(v, Vec) else None
        if hit is not None:
            return hit
        b = [inner(self.space, a, v) for a in self.simple_roots]
        return tuple(linalg.matvec(self._dual_gram, b))

    @cached_property
    def _root_coefficients(self) -> dict[Vec, tuple[Fraction, ...]]:
        rl = sorted(self.roots)
        table = gram_table(self.space, rl, list(self.simple_roots))
        return {r: tuple(linalg.matvec(self._dual_gram, row)) for r, row in zip(rl, table)}

    @cached_property
    def positive_roots(self) -> tuple[Vec, ...]:
        """Positive roots ordered by height, then by coefficient vector."""
        co = self._root_coefficients
        pos = [r for r in self.roots if all(c >= 0 for c in co[r])]
        return tuple(sorted(pos, key=lambda r: (sum(co[r]), co[r])))

    @cached_property
    def rho(self) -> Vec:
        s = Vec.zero(self.space.dim)
        for r in self.positive_roots:
            s = s + r
        return s * HALF

    def coroot_pairings(self, w: Sequence[Fraction]) -> list[Fraction]:
        return [pairing(self.space, w, a) for a in self.simple_roots]

    def reflect(self, v: Vec, i: int) -> Vec:
        a = self.simple_roots[i]
        return v - a * pairing(self.space, v, a)

    @cached_property
    def fundamental_weights(self) -> tuple[Vec, ...]:
        """Weights dual to the simple coroots, inside the span of the roots."""
        dim = self.space.dim
        out = []
        for i in range(self.rank):
            half = inner(self.space, self.simple_roots[i], self.simple_roots[i]) / 2
            coeffs = [half * self._dual_gram[i][k] for k in range(self.rank)]
            w = Vec.zero(dim)
            for c, a in zip(coeffs, self.simple_roots):
                w = w + a * c
            out.append(w)
        return tuple(out)

    def weight(self, coeffs: Sequence[object]) -> Vec:
        """Combination of fundamental weights with the given coefficients."""
        w = Vec.zero(self.space.dim)
        for c, om in zip(coeffs, self.fundamental_weights):
            w = w + om * c
        return w


# construction ---------------------------------------------------------------


def _e(n: int, *pairs: tuple[int, object]) -> Vec:
    out = [Fraction(0)] * n
    for i, c in pairs:
        out[i] += Fraction(c)
    return Vec._raw(out)


def _standard_simple(family: str, rank: int) -> tuple[int, list[Vec]]:
    if family == "A":
        n = rank + 1
        return n, [_e(n, (i, 1), (i + 1, -1)) for i in range(rank)]
    if family in "BCD":
        n = rank
        chain = [_e(n, (i, 1), (i + 1, -1)) for i in range(rank - 1)]
        last = {
            "B": _e(n, (n - 1, 1)),
            "C": _e(n, (n - 1, 2)),
            "D": _e(n, (n - 2, 1), (n - 1, 1)),
        }[family]
        return n, chain + [last]
    if family == "E":
        n = 8
        h = HALF
        a1 = _e(8, (0, h), (7, h), *[(i, -h) for i in range(1, 7)])
        simple = [a1, _e(8, (0, 1), (1, 1)), _e(8, (1, 1), (0, -1))]
        simple += [_e(8, (i, 1), (i - 1, -1)) for i in range(2, 7)]
        return n, simple[:rank]
    if family == "F":
        h = HALF
        return 4, [_e(4, (1, 1), (2, -1)), _e(4, (2, 1), (3, -1)), _e(4, (3, 1)), _e(4, (0, h), (1, -h), (2, -h), (3, -h))]
    if family == "G":
        return 3, [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]
    raise InvalidRank(f"unknown family {family!r}")


_VALID = {"A": range(1, 1000), "B": range(2, 1000), "C": range(2, 1000), "D": range(4, 1000), "E": range(6, 9), "F": (4,), "G": (2,)}


def build_root_system(family: str, rank: int) -> RootSystem:
    """Standard realization in an orthonormal basis."""
    family = family.upper()
    if family not in _VALID or rank not in _VALID[family]:
        raise InvalidRank(f"no root system of type {family}{rank}")
    n, simple = _standard_simple(family, rank)
    space = AmbientSpace.euclidean(n)
    roots = generate_roots(space, simple)
    label = f"{family}{rank}"
    return RootSystem(space, roots, tuple(simple), label)


def generate_roots(space: AmbientSpace, simple: Sequence[Vec], limit: int = MAX_ROOTS) -> frozenset[Vec]:
    """Closure of the simple roots under the simple reflections, with negatives."""
    simple = [space.vec(a) for a in simple]
    norms = [inner(space, a, a) for a in simple]
    if any(n == 0 for n in norms):
        raise NotARootSystem("isotropic simple root")
    seen = set(simple)
    queue = deque(simple)
    while queue:
        v = queue.popleft()
        for a, na in zip(simple, norms):
            p = 2 * inner(space, v, a) / na
            if p:
                w = v - a * p
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
                    if len(seen) > limit:
                        raise NotARootSystem("reflection closure does not terminate (not of finite type)")
    seen |= {-v for v in seen}
    return frozenset(seen)


def root_system_from_simple(space: AmbientSpace, simple: Sequence[Vec], label: str | None = None) -> RootSystem:
    simple = tuple(space.vec(a) for a in simple)
    roots = generate_roots(space, simple)
    if label is None:
        label = cartan_type(cartan_matrix_of(space, simple))
    return RootSystem(space, roots, simple, label)


def direct_sum(*parts: RootSystem) -> RootSystem:
    """Orthogonal sum of marker-free root systems, coordinates concatenated."""
    dims = [p.space.dim for p in parts]
    total = sum(dims)
    offsets = [sum(dims[:i]) for i in range(len(parts))]

    def shift(v: Vec, off: int) -> Vec:
        return Vec._raw((Fraction(0),) * off + tuple(v) + (Fraction(0),) * (total - off - len(v)))

    roots = frozenset(shift(r, o) for p, o in zip(parts, offsets) for r in p.roots)
    simple = tuple(shift(a, o) for p, o in zip(parts, offsets) for a in p.simple_roots)
    labels = [p.type_label for p in parts]
    label = "+".join(labels) if all(labels) else None
    return RootSystem(AmbientSpace.euclidean(total), roots, simple, label)


def cartan_matrix_of(space: AmbientSpace, simple: Sequence[Vec]) -> tuple[tuple[int, ...], ...]:
    g = gram_table(space, list(simple), list(simple))
    out = []
    for i in range(len(simple)):
        row = []
        for j in range(len(simple)):
            x = 2 * g[i][j] / g[j][j]
            if x.denominator != 1:
                raise NotARootSystem(f"non-integral pairing between simple roots {i} and {j}")
            row.append(int(x))
        out.append(tuple(row))
    return tuple(out)


def cartan_matrix(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """``A[i][j] = pairing(alpha_i, alpha_j)``."""
    if not rs.simple_roots:
        raise GLPError("root system has no simple roots")
    return cartan_matrix_of(rs.space, rs.simple_roots)


# orbits and weights ------------------------------------------------------------


def _check_integral(rs: RootSystem, w: Vec) -> list[Fraction]:
    ps = rs.coroot_pairings(w)
    if any(p.denominator != 1 for p in ps):
        raise NonIntegralWeight(f"weight {w!r} has non-integral coroot pairings {ps}")
    return ps


def weyl_orbit(rs: RootSystem, w: Sequence[Fraction]) -> frozenset[Vec]:
    w = rs.space.vec(w)
    _check_integral(rs, w)
    seen = {w}
    queue = deque([w])
    while queue:
        v = queue.popleft()
        for i in range(rs.rank):
            u = rs.reflect(v, i)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return frozenset(seen)


def dominant_conjugate(rs: RootSystem, w: Vec) -> Vec:
    w = rs.space.vec(w)
    _check_integral(rs, w)
    while True:
        ps = rs.coroot_pairings(w)
        i = next((k for k, p in enumerate(ps) if p < 0), None)
        if i is None:
            return w
        w = w - rs.simple_roots[i] * ps[i]


def lowest_conjugate(rs: RootSystem, w: Vec) -> Vec:
    """The antidominant element of the Weyl orbit of ``w``."""
    return -dominant_conjugate(rs, -rs.space.vec(w))


def is_dominant(rs: RootSystem, w: Vec) -> bool:
    return all(p >= 0 for p in _check_integral(rs, rs.space.vec(w)))


@dataclass(frozen=True)
class WeightSet:
    dominant: Vec
    weights: frozenset[Vec]
    multiplicities: dict[Vec, int] = field(hash=False)

    @property
    def dim(self) -> int:
        return sum(self.multiplicities.values())


def _require_dominant(rs: RootSystem, dominant: Sequence[Fraction]) -> Vec:
    lam = rs.space.vec(dominant)
    if not is_dominant(rs, lam):
        raise NotDominant(f"{lam!r} is not dominant")
    return lam


def weight_set(rs: RootSystem, dominant: Sequence[Fraction]) -> WeightSet:
    """All weights of the irreducible module, with Freudenthal multiplicities."""
    lam = _require_dominant(rs, dominant)
    pos = rs.positive_roots
    space = rs.space
    # saturation: mu, <mu|a> = p > 0  =>  mu - j a for 0 < j <= p
    weights = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for a in pos:
            p = pairing(space, mu, a)
            for j in range(1, int(p) + 1):
                nu = mu - a * j
                if nu not in weights:
                    weights.add(nu)
                    queue.append(nu)
    dominants = sorted(
        (w for w in weights if all(p >= 0 for p in rs.coroot_pairings(w))),
        key=lambda w: sum(rs.coefficients(lam - w)),
    )
    lr = lam + rs.rho
    c_lam = inner(space, lr, lr)
    mult: dict[Vec, int] = {}

    def m(v: Vec) -> int:
        if v not in weights:
            return 0
        return mult[dominant_conjugate(rs, v)]

    norms = {a: inner(space, a, a) for a in pos}
    for mu in dominants:
        if mu == lam:
            mult[mu] = 1
            continue
        total = Fraction(0)
        for a in pos:
            k = 1
            while True:
                nu = mu + a * k
                if nu not in weights:
                    break
                total += m(nu) * inner(space, nu, a)
                k += 1
        mr = mu + rs.rho
        value = 2 * total / (c_lam - inner(space, mr, mr))
        if value.denominator != 1:
            raise GLPError("Freudenthal recursion produced a non-integer multiplicity")
        mult[mu] = int(value)
    full = {w: m(w) for w in weights}
    return WeightSet(lam, frozenset(weights), full)


def weyl_dim(rs: RootSystem, dominant: Sequence[Fraction]) -> int:
    lam = _require_dominant(rs, dominant)
    lr = lam + rs.rho
    num = Fraction(1)
    for a in rs.positive_roots:
        num *= inner(rs.space, lr, a) / inner(rs.space, rs.rho, a)
    assert num.denominator == 1
    return int(num)


def is_minuscule(rs: RootSystem, dominant: Sequence[Fraction]) -> bool:
    """Dominant weight pairing to 0 or 1 with every positive coroot, and nonzero."""
    lam = _require_dominant(rs, dominant)
    return not lam.is_zero() and all(pairing(rs.space, lam, a) in (0, 1) for a in rs.positive_roots)


# classification -------------------------------------------------------------------


def _generic_functional(vecs: list[Vec]) -> list[int]:
    arr, _ = int_matrix(vecs)
    bound = max((abs(int(x)) for x in arr.flat), default=1)
    dim = arr.shape[1]
    t = 2 * bound + 1
    while True:
        weights = [t**i for i in range(dim)]
        values = [sum(int(x) * w for x, w in zip(row, weights)) for row in arr]
        if all(values):
            return values
        t += 1  # cannot happen for nonzero integer vectors, kept as a guard


def _small_int_array(vecs: list[Vec]) -> tuple[np.ndarray, int]:
    arr, den = int_matrix(vecs)
    return np.array(arr.tolist(), dtype=np.int64), den


def check_axioms(roots: Iterable[Sequence[Fraction]], space: AmbientSpace) -> list[Vec]:
    """Validate the root system axioms; return the roots in a fixed order."""
    rlist = sorted({space.vec(r) for r in roots})
    rset = set(rlist)
    if not rlist:
        raise NotARootSystem("empty root set")
    if any(r.is_zero() for r in rlist):
        raise NotARootSystem("zero vector in root set")
    for r in rlist:
        if -r not in rset:
            raise NotARootSystem(f"not closed under negation: {r!r}")
    R, _ = _small_int_array(rlist)
    G_obj, _ = space.int_gram
    M = np.array((R.astype(object).dot(G_obj).dot(R.T.astype(object))).tolist(), dtype=object)
    diag = [M[j, j] for j in range(len(rlist))]
    if any(d == 0 for d in diag):
        raise NotARootSystem("isotropic root")
    keys = {row.tobytes() for row in R}
    for j, b in enumerate(rlist):
        col = M[:, j] * 2
        if any(x % diag[j] for x in col):
            i = next(i for i, x in enumerate(col) if x % diag[j])
            raise NotARootSystem(f"non-integral pairing <{rlist[i]!r}|{b!r}>")
        p = np.array([x // diag[j] for x in col], dtype=np.int64)
        images = R - p[:, None] * R[j][None, :]
        for row in images:
            if row.tobytes() not in keys:
                raise NotARootSystem(f"not closed under the reflection in {b!r}")
    return rlist


def simple_system(roots: Sequence[Vec]) -> list[Vec]:
    """Indecomposable positive roots for a deterministic generic functional."""
    values = _generic_functional(list(roots))
    pos = [r for r, v in zip(roots, values) if v > 0]
    pos_set = set(pos)
    sums = {a + b for i, a in enumerate(pos) for b in pos[i + 1 :]}
    simple = [r for r in pos if r not in sums]
    order = dict(zip(roots, values))
    return sorted(simple, key=lambda r: order[r])


def classify(roots: Iterable[Sequence[Fraction]], space: AmbientSpace) -> str:
    """Type label of a finite root set, e.g. ``"F4"`` or ``"A1+A1"``."""
    rlist = check_axioms(roots, space)
    simple = simple_system(rlist)
    a = cartan_matrix_of(space, simple)
    label = cartan_type(a)
    if label is None:
        raise NotARootSystem("simple system does not match any Dynkin diagram")
    return label


def classify_system(roots: Iterable[Sequence[Fraction]], space: AmbientSpace) -> RootSystem:
    rlist = check_axioms(roots, space)
    simple = simple_system(rlist)
    label = cartan_type(cartan_matrix_of(space, simple))
    if label is None:
        raise NotARootSystem("simple system does not match any Dynkin diagram")
    return RootSystem(space, frozenset(rlist), tuple(simple), label)
