"""Grading a representation by the spectrum of a characteristic element."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .. import linalg
from ..errors import DimensionMismatch, GLPError, IrrationalSpectrum, NonIntegralSpacing
from ..linalg import Matrix
from .algebra import GradedLieAlgebra
from .analysis import characteristic_element
from .construct import _rational_roots


@dataclass(frozen=True)
class GradedModule:
    dim: int
    degrees: tuple[int, ...]
    action: tuple[Matrix, ...]  # one matrix per algebra basis element, in the graded basis
    basis: Matrix | None = None  # columns: graded basis in the original coordinates

    def graded_dims(self) -> dict[int, int]:
        if not self.degrees:
            return {}
        return {q: self.degrees.count(q) for q in range(min(self.degrees), max(self.degrees) + 1)}


def is_representation(g: GradedLieAlgebra, action: Sequence[Matrix]) -> bool:
    """rho([x_i, x_j]) = [rho(x_i), rho(x_j)] for all basis pairs."""
    n = len(action[0]) if action else 0
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            rhs = linalg.zeros(n, n)
            for k, c in g.bracket_basis(i, j).items():
                rhs = linalg.add(rhs, action[k], c)
            if linalg.commutator(action[i], action[j]) != rhs:
                return False
    return True


def grading_violations(g: GradedLieAlgebra, module: GradedModule) -> list[tuple[int, int, int]]:
    """Triples (i, v, w) where rho(x_i) sends basis vector v outside degree deg(x_i) + deg(v)."""
    bad = []
    for i, a in enumerate(module.action):
        p = g.degrees[i]
        for v in range(module.dim):
            target = p + module.degrees[v]
            for w in range(module.dim):
                if a[w][v] and module.degrees[w] != target:
                    bad.append((i, v, w))
    return bad


def _normal_shift(values: Sequence[tuple[Fraction, int]]) -> Fraction:
    """Shift s with every value - s integral and |sum (value - s) * dim| minimal."""
    base = min(v for v, _ in values)
    total = sum((v - base) * d for v, d in values)
    n = sum(d for _, d in values)
    # choose integer j minimising |total - j n|, ties to the smaller j
    lo = (total / n).__floor__()
    best = min((lo, lo + 1), key=lambda j: (abs(total - j * n), j))
    return base + best


def regrade_module(g: GradedLieAlgebra, action: Sequence[Sequence[Sequence[object]]], allow_multiple_classes: bool = False) -> GradedModule:
    """Grade V by generalized eigenspaces of rho(E) so rho(g_p) V_q lies in V_{p+q}.

    Eigenvalues congruent mod Z form a class whose degrees are the
    eigenvalues minus a common shift; the shift makes sum q dim V_q as close
    to zero as integrality allows.
    """
    mats = [linalg.to_matrix(a) for a in action]
    if len(mats) != g.dim:
        raise DimensionMismatch("one action matrix per algebra basis element is required")
    if not mats:
        return GradedModule(0, (), ())
    e = characteristic_element(g)
    if e is None:
        raise GLPError("algebra has no characteristic element; regrade its characteristic prolongation")
    n = len(mats[0])
    rho_e = linalg.zeros(n, n)
    for i, c in e.items():
        rho_e = linalg.add(rho_e, mats[i], c)
    eigen, splits = _rational_roots(linalg.charpoly(rho_e))
    if not splits:
        raise IrrationalSpectrum("rho(E) has eigenvalues outside the rationals")
    classes: dict[Fraction, list[Fraction]] = {}
    for lam in eigen:
        classes.setdefault(lam - lam.__floor__(), []).append(lam)
    if len(classes) > 1 and not allow_multiple_classes:
        raise NonIntegralSpacing("eigenvalues of rho(E) differ by non-integers")
    spaces: dict[Fraction, list[dict]] = {}
    for lam in eigen:
        shifted = [[rho_e[i][j] - (lam if i == j else 0) for j in range(n)] for i in range(n)]
        power = linalg.identity(n)
        for _ in range(n):
            power = linalg.matmul(power, shifted)
        spaces[lam] = linalg.nullspace((linalg.sparse(r) for r in power), n)
    cols: list[list[Fraction]] = []
    degrees: list[int] = []
    for members in classes.values():
        shift = _normal_shift([(lam, len(spaces[lam])) for lam in members])
        for lam in members:
            for v in spaces[lam]:
                cols.append(linalg.dense(v, n))
                degrees.append(int(lam - shift))
    order = sorted(range(n), key=lambda k: degrees[k])
    cols = [cols[k] for k in order]
    degrees = [degrees[k] for k in order]
    p = linalg.transpose(cols)
    p_inv = linalg.inverse(p)
    new_action = tuple(linalg.matmul(p_inv, linalg.matmul(a, p)) for a in mats)
    return GradedModule(n, tuple(degrees), new_action, p)
