"""Graded Lie algebras given by exact structure constants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .. import linalg
from ..errors import DimensionMismatch, GLPError
from ..linalg import Matrix, Sparse, axpy

ZERO = Fraction(0)


@dataclass(frozen=True, eq=False)
class GradedLieAlgebra:
    """Basis ``x_0..x_{n-1}`` with ``[x_i, x_j] = sum_k c_ij^k x_k`` for ``i < j``.

    ``brackets`` holds only pairs ``i < j``; antisymmetry is structural.  An
    optional matrix realization gives each basis element as a square matrix,
    and ``grading_matrix`` records the element inducing the grading when the
    algebra came from matrices.
    """

    basis_names: tuple[str, ...]
    degrees: tuple[int, ...]
    brackets: Mapping[tuple[int, int], Mapping[int, Fraction]]
    matrices: tuple[Matrix, ...] | None = None
    grading_matrix: Matrix | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.basis_names)
        if len(self.degrees) != n:
            raise DimensionMismatch("one degree per basis element is required")
        if self.matrices is not None and len(self.matrices) != n:
            raise DimensionMismatch("one matrix per basis element is required")
        for (i, j), v in self.brackets.items():
            if not (0 <= i < j < n) or any(not (0 <= k < n) for k in v):
                raise GLPError(f"bracket index out of range or unordered: ({i}, {j})")

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def __len__(self) -> int:
        return self.dim

    def bracket_basis(self, i: int, j: int) -> Mapping[int, Fraction]:
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -c for k, c in self.brackets.get((j, i), {}).items()}

    def bracket(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Sparse:
        out: Sparse = {}
        for i, a in x.items():
            for j, b in y.items():
                axpy(out, a * b, self.bracket_basis(i, j))
        return out

    def table(self) -> dict[tuple[int, int], Mapping[int, Fraction]]:
        """Structure constants for every ordered pair with a nonzero bracket."""
        if "table" not in self._cache:
            t = {}
            for (i, j), v in self.brackets.items():
                if v:
                    t[(i, j)] = dict(v)
                    t[(j, i)] = {k: -c for k, c in v.items()}
            self._cache["table"] = t
        return self._cache["table"]

    def ad(self, x: Mapping[int, Fraction]) -> Matrix:
        """Matrix of ad(x); column k is [x, x_k]."""
        n = self.dim
        m = linalg.zeros(n, n)
        for k in range(n):
            for l, c in self.bracket(x, {k: Fraction(1)}).items():
                m[l][k] = c
        return m

    def ad_basis(self, i: int) -> Matrix:
        key = ("ad", i)
        if key not in self._cache:
            n = self.dim
            m = linalg.zeros(n, n)
            for k in range(n):
                for l, c in self.bracket_basis(i, k).items():
                    m[l][k] = c
            self._cache[key] = m
        return self._cache[key]

    def degree_indices(self, q: int) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == q]

    def graded_dims(self) -> dict[int, int]:
        if not self.degrees:
            return {}
        lo, hi = min(self.degrees), max(self.degrees)
        return {q: len(self.degree_indices(q)) for q in range(lo, hi + 1)}

    def depth(self) -> int:
        return max([-d for d in self.degrees if d < 0], default=0)

    def height(self) -> int:
        return max([d for d in self.degrees if d > 0], default=0)

    def negative_indices(self) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d < 0]

    def element_degree(self, x: Mapping[int, Fraction]) -> int | None:
        """Degree of a nonzero homogeneous element, else None."""
        ds = {self.degrees[i] for i, c in x.items() if c}
        return ds.pop() if len(ds) == 1 else None

    def project(self, x: Mapping[int, Fraction], q: int) -> Sparse:
        return {i: c for i, c in x.items() if c and self.degrees[i] == q}

    def matrix_of(self, x: Mapping[int, Fraction]) -> Matrix:
        if self.matrices is None:
            raise GLPError("algebra has no matrix realization")
        n = len(self.matrices[0]) if self.matrices else 0
        out = linalg.zeros(n, n)
        for i, c in x.items():
            out = linalg.add(out, self.matrices[i], c)
        return out


def from_brackets(
    names: Sequence[str],
    degrees: Sequence[int],
    table: Mapping[tuple[int, int], Mapping[int, object]],
    matrices: Sequence[Matrix] | None = None,
    grading_matrix: Matrix | None = None,
) -> GradedLieAlgebra:
    """Normalise a bracket table given on arbitrary ordered pairs.

    Both ``(i, j)`` and ``(j, i)`` may appear as long as they agree up to sign.
    """
    from ..exactspace import as_rational

    out: dict[tuple[int, int], Sparse] = {}
    for (i, j), v in table.items():
        v = {int(k): as_rational(c) for k, c in v.items() if as_rational(c)}
        if i == j:
            if v:
                raise GLPError(f"[x_{i}, x_{i}] must vanish")
            continue
        key, sign = ((i, j), 1) if i < j else ((j, i), -1)
        signed = {k: sign * c for k, c in v.items()}
        if key in out and out[key] != signed:
            raise GLPError(f"bracket table is not antisymmetric at {key}")
        out[key] = signed
    return GradedLieAlgebra(
        tuple(names),
        tuple(int(d) for d in degrees),
        {k: v for k, v in out.items() if v},
        tuple(matrices) if matrices is not None else None,
        grading_matrix,
    )


def subspace_basis(g: GradedLieAlgebra, vectors: Iterable[Mapping[int, Fraction]]) -> list[Sparse]:
    return linalg.Echelon(g.dim, vectors).basis()


def homogeneous_basis(g: GradedLieAlgebra, vectors: Iterable[Mapping[int, Fraction]]) -> list[Sparse]:
    """Basis of the span made of homogeneous pieces; assumes the span is graded."""
    vectors = list(vectors)
    out: list[Sparse] = []
    for q in sorted(set(g.degrees)):
        out += linalg.Echelon(g.dim, (g.project(v, q) for v in vectors)).basis()
    return out


def is_graded_span(g: GradedLieAlgebra, vectors: Sequence[Mapping[int, Fraction]]) -> bool:
    ech = linalg.Echelon(g.dim, vectors)
    return all(ech.contains(g.project(v, q)) for v in vectors for q in set(g.degrees))


def structural_checks(g: GradedLieAlgebra) -> dict[str, bool]:
    """Antisymmetry, grading compatibility, Jacobi and matrix consistency."""
    from .kernels import jacobi_violations

    out = {"antisymmetry": True, "grading": True}
    for (i, j), v in g.brackets.items():
        for k in v:
            if g.degrees[k] != g.degrees[i] + g.degrees[j]:
                out["grading"] = False
    out["jacobi"] = jacobi_violations(g) == 0
    if g.matrices is not None:
        out["matrix consistency"] = matrix_consistent(g)
    return out


def matrix_consistent(g: GradedLieAlgebra) -> bool:
    if g.matrices is None:
        return True
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = linalg.commutator(g.matrices[i], g.matrices[j])
            rhs = g.matrix_of(g.bracket_basis(i, j))
            if lhs != rhs:
                return False
    return True
