"""Structure analyses of graded Lie algebras: radical, effectiveness, n_0, Levi."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .. import linalg
from ..errors import DimensionMismatch, GLPError, NotAlmostEffective
from ..linalg import Matrix, Sparse, axpy
from .algebra import GradedLieAlgebra, from_brackets, homogeneous_basis, is_graded_span
from .jordan import decomposable_envelope
from .kernels import killing_form

ONE = Fraction(1)


class Effectiveness(str, Enum):
    EFFECTIVE = "Effective"
    QUASI = "QuasiEffective"
    ALMOST = "AlmostEffective"
    NONE = "None"

    def __str__(self) -> str:
        return self.value


# subspaces --------------------------------------------------------------------


def derived_algebra(g: GradedLieAlgebra) -> list[Sparse]:
    """Basis of [g, g]."""
    return linalg.Echelon(g.dim, g.brackets.values()).basis()


def radical(g: GradedLieAlgebra) -> list[Sparse]:
    """Homogeneous basis of the Killing-orthogonal of [g, g]."""
    if "radical" in g._cache:
        return g._cache["radical"]
    k = killing_form(g)
    rows = []
    for y in derived_algebra(g):
        row: Sparse = {}
        for i, c in y.items():
            axpy(row, c, linalg.sparse(k[i]))
        rows.append(row)
    r = homogeneous_basis(g, linalg.nullspace(rows, g.dim))
    g._cache["radical"] = r
    return r


def is_ideal(g: GradedLieAlgebra, basis: Sequence[Mapping[int, Fraction]]) -> bool:
    ech = linalg.Echelon(g.dim, basis)
    return all(ech.contains(g.bracket({i: ONE}, v)) for v in basis for i in range(g.dim))


def is_subalgebra(g: GradedLieAlgebra, basis: Sequence[Mapping[int, Fraction]]) -> bool:
    ech = linalg.Echelon(g.dim, basis)
    return all(ech.contains(g.bracket(u, v)) for a, u in enumerate(basis) for v in basis[a + 1 :])


def is_solvable(g: GradedLieAlgebra, basis: Sequence[Mapping[int, Fraction]]) -> bool:
    """Derived series of the subalgebra spanned by ``basis`` reaches zero."""
    cur = linalg.Echelon(g.dim, basis).basis()
    while cur:
        nxt = linalg.Echelon(g.dim, (g.bracket(u, v) for a, u in enumerate(cur) for v in cur[a + 1 :])).basis()
        if len(nxt) == len(cur):
            return False
        cur = nxt
    return True


def subalgebra(g: GradedLieAlgebra, basis: Sequence[Mapping[int, Fraction]]) -> GradedLieAlgebra:
    """The subalgebra spanned by ``basis`` (homogeneous vectors) as its own algebra."""
    frame = linalg.Frame(g.dim, basis)
    degrees = []
    for v in basis:
        d = g.element_degree(v)
        if d is None:
            raise GLPError("subalgebra basis vectors must be homogeneous")
        degrees.append(d)
    table = {}
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            c = frame.coords(g.bracket(basis[a], basis[b]))
            if c is None:
                raise GLPError("span is not closed under the bracket")
            if c:
                table[(a, b)] = c
    names = [f"s{a}" for a in range(len(basis))]
    return from_brackets(names, degrees, table)


def quotient(g: GradedLieAlgebra, ideal: Sequence[Mapping[int, Fraction]]) -> GradedLieAlgebra:
    """g / ideal on the basis elements outside the ideal's pivot columns."""
    ech = linalg.Echelon(g.dim, ideal)
    keep = [i for i in range(g.dim) if i not in ech.rows]
    pos = {i: a for a, i in enumerate(keep)}
    table = {}
    for a, i in enumerate(keep):
        for j in keep[a + 1 :]:
            red = ech.reduce(g.bracket_basis(i, j))
            if red:
                table[(a, pos[j])] = {pos[k]: c for k, c in red.items()}
    return from_brackets([g.basis_names[i] for i in keep], [g.degrees[i] for i in keep], table)


def is_semisimple(g: GradedLieAlgebra) -> bool:
    if g.dim == 0:
        return True
    return linalg.rank((linalg.sparse(r) for r in killing_form(g)), g.dim) == g.dim


# effectiveness ------------------------------------------------------------------


def _annihilator_in_degree(g: GradedLieAlgebra, p: int, targets: Iterable[int]) -> list[Sparse]:
    """{X in g_p : [X, x_t] = 0 for every target t}, in global coordinates."""
    src = g.degree_indices(p)
    if not src:
        return []
    pos = {i: a for a, i in enumerate(src)}
    rows: dict[tuple[int, int], Sparse] = {}
    for t in targets:
        for i in src:
            for k, c in g.bracket_basis(i, t).items():
                rows.setdefault((t, k), {})[pos[i]] = c
    kernel = linalg.nullspace(rows.values(), len(src))
    return [{src[a]: c for a, c in v.items()} for v in kernel]


def effectiveness_kernels(g: GradedLieAlgebra) -> dict[str, dict[int, int]]:
    """Dimensions of the obstruction kernel in each degree p >= 0, per condition."""
    minus_one = g.degree_indices(-1)
    m = g.negative_indices()
    out: dict[str, dict[int, int]] = {"effective": {}, "quasi": {}, "almost": {}}
    for p in sorted({d for d in g.degrees if d >= 0}):
        out["effective"][p] = len(_annihilator_in_degree(g, p, minus_one))
        if p == 0:
            quasi_targets = m
        else:
            quasi_targets = [i for i in m if -p <= g.degrees[i] <= -1]
        out["quasi"][p] = len(_annihilator_in_degree(g, p, quasi_targets))
        out["almost"][p] = len(_annihilator_in_degree(g, p, m))
    return out


def effectiveness_class(g: GradedLieAlgebra) -> Effectiveness:
    """Strongest of the effective, quasi-effective and almost effective conditions."""
    if "effectiveness" in g._cache:
        return g._cache["effectiveness"]
    kern = effectiveness_kernels(g)
    ok = {name: not any(v.values()) for name, v in kern.items()}
    if ok["effective"] and not (ok["quasi"] and ok["almost"]):  # pragma: no cover - implication chain
        raise GLPError("effective algebra failed a weaker condition")
    if ok["quasi"] and not ok["almost"]:  # pragma: no cover
        raise GLPError("quasi-effective algebra is not almost effective")
    if ok["effective"]:
        res = Effectiveness.EFFECTIVE
    elif ok["quasi"]:
        res = Effectiveness.QUASI
    elif ok["almost"]:
        res = Effectiveness.ALMOST
    else:
        res = Effectiveness.NONE
    g._cache["effectiveness"] = res
    return res


def _require_almost_effective(g: GradedLieAlgebra) -> None:
    if effectiveness_class(g) is Effectiveness.NONE:
        raise NotAlmostEffective("algebra is not almost effective")


# characteristic element -----------------------------------------------------------


def characteristic_element(g: GradedLieAlgebra) -> Sparse | None:
    """E in g_0 with [E, X] = deg(X) X on every basis element, or None.

    Components of E outside g_0 would have to be central, so g_0 suffices.
    """
    src = g.degree_indices(0)
    pos = {i: a for a, i in enumerate(src)}
    nvar = len(src)
    rows: dict[tuple[int, int], Sparse] = {}
    for k in range(g.dim):
        if g.degrees[k]:
            rows.setdefault((k, k), {})[nvar] = Fraction(g.degrees[k])
        for i in src:
            for l, c in g.bracket_basis(i, k).items():
                rows.setdefault((k, l), {})[pos[i]] = c
    sol = linalg.solve_sparse(rows.values(), nvar)
    if sol is None:
        return None
    return {src[a]: c for a, c in sol.items()}


def characteristic_prolongation(g: GradedLieAlgebra) -> GradedLieAlgebra:
    """g itself when characteristic, else g with the grading derivation adjoined in degree 0."""
    if characteristic_element(g) is not None:
        return g
    n = g.dim
    table = {k: dict(v) for k, v in g.brackets.items()}
    for i in range(n):
        if g.degrees[i]:
            table[(i, n)] = {i: Fraction(-g.degrees[i])}
    name = "E"
    while name in g.basis_names:
        name += "'"
    mats = None
    if g.matrices is not None and g.grading_matrix is not None:
        mats = tuple(g.matrices) + (g.grading_matrix,)
    return from_brackets(list(g.basis_names) + [name], list(g.degrees) + [0], table, mats, g.grading_matrix)


# actions on m ----------------------------------------------------------------------


def action_on_m(g: GradedLieAlgebra, x: Mapping[int, Fraction]) -> Matrix:
    """Matrix of ad(x) on m = sum of negative degrees, in the basis of m's basis elements."""
    m = g.negative_indices()
    pos = {i: a for a, i in enumerate(m)}
    out = linalg.zeros(len(m), len(m))
    for b, j in enumerate(m):
        for k, c in g.bracket(x, {j: ONE}).items():
            if k not in pos:
                raise GLPError("element does not preserve m")
            out[pos[k]][b] = c
    return out


def centralizer_in_degree0(g: GradedLieAlgebra) -> list[Sparse]:
    return _annihilator_in_degree(g, 0, range(g.dim))


def commutant(action: Sequence[Matrix]) -> list[Matrix]:
    """Basis of {T : T A = A T for every A in ``action``}."""
    action = [linalg.to_matrix(a) for a in action]
    if not action:
        raise DimensionMismatch("commutant needs at least one matrix to fix the size")
    n = len(action[0])
    rows = []
    for a in action:
        # (T A - A T)_{ij} = sum_k T_ik A_kj - A_ik T_kj
        for i in range(n):
            for j in range(n):
                row: Sparse = {}
                for k in range(n):
                    if a[k][j]:
                        axpy(row, a[k][j], {i * n + k: ONE})
                    if a[i][k]:
                        axpy(row, -a[i][k], {k * n + j: ONE})
                if row:
                    rows.append(row)
    return [linalg.unflatten(v, n) for v in linalg.nullspace(rows, n * n)]


def nilradical_degree0(g: GradedLieAlgebra) -> list[Sparse]:
    """Basis of n_0 = {X in r_0 : ad(X) nilpotent on m}.

    ad(r_0) on m is a solvable matrix algebra, hence triangularizable over
    the algebraic closure; X acts nilpotently iff tr(ad(X) P) = 0 for every P
    in the unital associative algebra generated by ad(r_0).  That condition
    is linear, and the result is cross-checked with an Engel test.
    """
    _require_almost_effective(g)
    r0 = [v for v in radical(g) if g.element_degree(v) == 0]
    if not r0:
        return []
    reps = [action_on_m(g, v) for v in r0]
    if not reps[0]:
        return list(r0)  # m = 0: every element acts nilpotently on the zero space
    algebra = linalg.assoc_closure(reps, unital=True)
    rows = [[linalg.trace(linalg.matmul(r, p)) for r in reps] for p in algebra]
    coeffs = linalg.nullspace((linalg.sparse(row) for row in rows), len(r0))
    out = []
    for c in coeffs:
        v: Sparse = {}
        for a, x in c.items():
            axpy(v, x, r0[a])
        out.append(v)
    out = linalg.Echelon(g.dim, out).basis()
    if not linalg.is_nilpotent_algebra([action_on_m(g, v) for v in out]):  # pragma: no cover
        raise GLPError("Engel check failed on the candidate n_0")
    return out


def reductive_type(g: GradedLieAlgebra) -> bool:
    return not nilradical_degree0(g)


def decomposability_check(g: GradedLieAlgebra) -> bool:
    """Is ad(g_0) on m equal to its own decomposable envelope?"""
    _require_almost_effective(g)
    reps = [action_on_m(g, {i: ONE}) for i in g.degree_indices(0)]
    reps = [r for r in reps if r and not linalg.is_zero(r)]
    if not reps:
        return True
    span = linalg.rank((linalg.flatten(r) for r in reps), len(reps[0]) ** 2)
    return len(decomposable_envelope(reps)) == span


def verify_levi(g: GradedLieAlgebra, s_basis: Sequence[Mapping[int, Fraction]]) -> bool:
    """Graded subalgebra, nondegenerate Killing form, complement to the radical."""
    s = linalg.Echelon(g.dim, s_basis).basis()
    if not s:
        return len(radical(g)) == g.dim
    if not is_graded_span(g, s) or not is_subalgebra(g, s):
        return False
    sub = subalgebra(g, homogeneous_basis(g, s))
    if not is_semisimple(sub):
        return False
    r = radical(g)
    return len(s) + len(r) == g.dim and linalg.rank(list(s) + list(r), g.dim) == g.dim
