"""Building graded Lie algebras from matrices or from root systems."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import sympy

from .. import linalg
from ..errors import DimensionMismatch, GLPError, NonHomogeneousClosure
from ..exactspace import fmt, inner
from ..linalg import Matrix, Sparse
from ..rootsys import RootSystem
from .algebra import GradedLieAlgebra, from_brackets

ONE = Fraction(1)


def lie_closure(mats: Sequence[Matrix], limit: int = 4096) -> list[Matrix]:
    """Echelon basis of the Lie algebra generated by square matrices."""
    if not mats:
        return []
    mats = [linalg.to_matrix(m) for m in mats]
    n = len(mats[0])
    if any(len(m) != n or any(len(r) != n for r in m) for m in mats):
        raise DimensionMismatch("generators must be square matrices of one size")
    ech = linalg.Echelon(n * n)
    found: list[Matrix] = []
    for m in mats:
        if ech.add(linalg.flatten(m)):
            found.append(m)
    i = 0
    while i < len(found):
        for j in range(i):
            c = linalg.commutator(found[i], found[j])
            if ech.add(linalg.flatten(c)):
                found.append(c)
                if len(found) > limit:
                    raise GLPError("Lie closure exceeded the size limit")
        i += 1
    return [linalg.unflatten(v, n) for v in ech.basis()]


def _rational_roots(poly: Sequence[Fraction]) -> tuple[list[Fraction], bool]:
    """Rational roots of a polynomial and whether it splits over Q."""
    t = sympy.Symbol("t")
    p = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(poly)], t, domain="QQ")
    roots: list[Fraction] = []
    splits = True
    for fac, _ in p.factor_list()[1]:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            r = -sympy.Rational(b) / sympy.Rational(a)
            roots.append(Fraction(int(r.p), int(r.q)))
        else:
            splits = False
    return sorted(set(roots)), splits


def from_matrices(generators: Sequence[Sequence[Sequence[object]]], grading_element: Sequence[Sequence[object]]) -> GradedLieAlgebra:
    """Lie closure of the generators, graded by the eigenvalues of ad(E)."""
    gens = [linalg.to_matrix(m) for m in generators]
    e = linalg.to_matrix(grading_element)
    closure = lie_closure(gens)
    if not closure:
        return GradedLieAlgebra((), (), {}, (), e)
    n = len(closure[0])
    if len(e) != n:
        raise DimensionMismatch("grading element and generators differ in size")
    frame = linalg.Frame(n * n, [linalg.flatten(m) for m in closure])
    dim = len(closure)
    ad_e = linalg.zeros(dim, dim)
    for k, m in enumerate(closure):
        c = frame.coords(linalg.flatten(linalg.commutator(e, m)))
        if c is None:
            raise NonHomogeneousClosure("[E, X] leaves the closure")
        for i, x in c.items():
            ad_e[i][k] = x
    diagonal = all(e[i][j] == 0 for i in range(n) for j in range(n) if i != j)
    if diagonal:
        candidates = sorted({e[i][i] - e[j][j] for i in range(n) for j in range(n)})
    else:
        candidates, _ = _rational_roots(linalg.charpoly(ad_e))
    pieces: list[tuple[int, Matrix]] = []
    for q in candidates:
        shifted = [[ad_e[i][j] - (q if i == j else 0) for j in range(dim)] for i in range(dim)]
        kernel = linalg.nullspace((linalg.sparse(r) for r in shifted), dim)
        if kernel and q.denominator != 1:
            raise NonHomogeneousClosure(f"ad(E) has non-integral eigenvalue {fmt(q)}")
        for v in kernel:
            mat = linalg.zeros(n, n)
            for i, x in v.items():
                mat = linalg.add(mat, closure[i], x)
            pieces.append((int(q), mat))
    if len(pieces) != dim:
        raise NonHomogeneousClosure("ad(E) is not diagonalizable with integer spectrum on the closure")
    pieces.sort(key=lambda t: t[0])
    basis = [m for _, m in pieces]
    degrees = [q for q, _ in pieces]
    names = _matrix_names(basis, degrees)
    frame = linalg.Frame(n * n, [linalg.flatten(m) for m in basis])
    table: dict[tuple[int, int], Sparse] = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            c = frame.coords(linalg.flatten(linalg.commutator(basis[i], basis[j])))
            if c:
                table[(i, j)] = c
    return from_brackets(names, degrees, table, basis, e)


def _matrix_names(basis: Sequence[Matrix], degrees: Sequence[int]) -> list[str]:
    """``x{i}{j}`` (1-based) for elements with one leading unit entry, else ``b{k}``."""
    names = []
    seen: set[str] = set()
    for k, m in enumerate(basis):
        nz = [(i, j) for i, row in enumerate(m) for j, x in enumerate(row) if x]
        name = f"b{k}"
        if nz:
            i, j = nz[0]
            cand = f"x{i + 1}{j + 1}" if len(m) < 10 else f"x{i + 1}_{j + 1}"
            if cand not in seen:
                name = cand
        seen.add(name)
        names.append(name)
    return names


# Chevalley bases -----------------------------------------------------------------


class _RootData:
    """Integer coefficient vectors of the roots with the symmetrised form."""

    def __init__(self, rs: RootSystem) -> None:
        self.rank = rs.rank
        sp = rs.space
        self.gram = [[inner(sp, a, b) for b in rs.simple_roots] for a in rs.simple_roots]
        pos = []
        for r in rs.positive_roots:
            c = rs.coefficients(r)
            pos.append(tuple(int(x) for x in c))
        pos.sort(key=lambda c: (sum(c), tuple(-x for x in c)))
        self.positive = pos
        self.order = {c: i for i, c in enumerate(pos)}
        self.roots = set(pos) | {tuple(-x for x in c) for c in pos}

    def ip(self, a: tuple[int, ...], b: tuple[int, ...]) -> Fraction:
        g = self.gram
        return sum((a[i] * b[j] * g[i][j] for i in range(self.rank) if a[i] for j in range(self.rank) if b[j]), Fraction(0))

    def is_root(self, a: tuple[int, ...]) -> bool:
        return a in self.roots


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def _positive(a) -> bool:
    return any(x > 0 for x in a)


def structure_constants(rs: RootSystem) -> tuple[_RootData, dict]:
    """N_{r,s} for all roots with r + s a root, by the extraspecial-pair rule."""
    rd = _RootData(rs)
    memo: dict[tuple, Fraction] = {}
    extraspecial: dict[tuple, tuple] = {}
    for xi in rd.positive:
        if sum(xi) == 1:
            continue
        for a in rd.positive:
            b = _sub(xi, a)
            if rd.is_root(b) and _positive(b) and rd.order[a] < rd.order[b]:
                extraspecial[xi] = (a, b)
                break

    def p_value(a, b) -> int:
        p = 0
        while rd.is_root(_sub(b, tuple((p + 1) * x for x in a))):
            p += 1
        return p

    def N(r, s) -> Fraction:
        key = (r, s)
        if key in memo:
            return memo[key]
        val = _n(r, s)
        memo[key] = val
        return val

    def _n(r, s) -> Fraction:
        rp, sp = _positive(r), _positive(s)
        if rp and sp:
            if rd.order[r] > rd.order[s]:
                return -N(s, r)
            xi = _add(r, s)
            a, b = extraspecial[xi]
            if (r, s) == (a, b):
                return Fraction(p_value(a, b) + 1)
            zeta, eta = r, s
            nab = N(a, b)
            total = Fraction(0)
            bz = _sub(b, zeta)
            if rd.is_root(bz):
                total += N(b, _neg(zeta)) * N(a, _neg(eta)) / rd.ip(bz, bz)
            az = _sub(a, zeta)
            if rd.is_root(az):
                total += N(_neg(zeta), a) * N(b, _neg(eta)) / rd.ip(az, az)
            return rd.ip(xi, xi) / nab * total
        if not rp and not sp:
            return -N(_neg(r), _neg(s))
        t = _neg(_add(r, s))
        tt = rd.ip(t, t)
        if rp:
            if _positive(_add(r, s)):
                return tt / rd.ip(r, r) * N(s, t)
            return tt / rd.ip(s, s) * N(t, r)
        if _positive(_add(r, s)):
            return tt / rd.ip(s, s) * N(t, r)
        return tt / rd.ip(r, r) * N(s, t)

    table = {}
    allroots = rd.positive + [_neg(c) for c in rd.positive]
    for r in allroots:
        for s in allroots:
            if rd.is_root(_add(r, s)):
                table[(r, s)] = N(r, s)
    return rd, table


def _root_name(c: tuple[int, ...]) -> str:
    return "x(" + ",".join(str(x) for x in c) + ")"


def chevalley_basis(rs: RootSystem, degree_on_simple: Sequence[int] | Mapping[int, int] | None = None) -> GradedLieAlgebra:
    """Chevalley basis ``h_1..h_l, x_r`` graded by a functional on simple roots.

    Basis order: Cartan elements, positive roots by height, then negative
    roots in the same order.
    """
    if degree_on_simple is None:
        degs = [0] * rs.rank
    elif isinstance(degree_on_simple, Mapping):
        degs = [int(degree_on_simple.get(i, 0)) for i in range(rs.rank)]
    else:
        degs = [int(d) for d in degree_on_simple]
    if len(degs) != rs.rank:
        raise DimensionMismatch(f"need {rs.rank} simple-root degrees")
    rd, N = structure_constants(rs)
    l = rd.rank
    roots = rd.positive + [_neg(c) for c in rd.positive]
    index = {c: l + k for k, c in enumerate(roots)}
    names = [f"h{i + 1}" for i in range(l)] + [_root_name(c) for c in roots]
    degrees = [0] * l + [sum(c * d for c, d in zip(r, degs)) for r in roots]
    simple_norms = [rd.gram[i][i] for i in range(l)]
    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i in range(l):
        for r in roots:
            # <r, alpha_i^vee> = 2 (r | a_i) / (a_i | a_i)
            val = sum((r[j] * rd.gram[j][i] for j in range(l)), Fraction(0)) * 2 / simple_norms[i]
            if val:
                table[(i, index[r])] = {index[r]: val}
    for r in roots:
        for s in roots:
            a, b = index[r], index[s]
            if a >= b:
                continue
            rs_sum = _add(r, s)
            if not any(rs_sum):
                rr = rd.ip(r, r)
                table[(a, b)] = {i: r[i] * simple_norms[i] / rr for i in range(l) if r[i]}
            elif rd.is_root(rs_sum):
                table[(a, b)] = {index[rs_sum]: N[(r, s)]}
    return from_brackets(names, degrees, table)


def cartan_coweight(rs: RootSystem, degree_on_simple: Sequence[int]) -> dict[int, Fraction]:
    """Element of the Chevalley Cartan subalgebra acting by ``deg`` on every x_r."""
    l = rs.rank
    rd = _RootData(rs)
    # [sum c_i h_i, x_{a_j}] = sum_i c_i A[j][i]... solve for c with value deg(a_j)
    a = [[rd.gram[j][i] * 2 / rd.gram[i][i] for i in range(l)] for j in range(l)]
    sol = linalg.solve(a, [Fraction(d) for d in degree_on_simple])
    if sol is None:  # pragma: no cover - Cartan matrices are invertible
        raise GLPError("Cartan matrix is singular")
    return {i: x for i, x in enumerate(sol) if x}
