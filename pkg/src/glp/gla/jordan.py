"""Exact Jordan-Chevalley decomposition and decomposable envelopes."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .. import linalg
from ..errors import DimensionMismatch, NotASubalgebra
from ..linalg import Matrix
from .construct import lie_closure


def squarefree_part(p: Sequence[Fraction]) -> list[Fraction]:
    g = linalg.pgcd(p, linalg.pderiv(p))
    q, r = linalg.pdivmod(p, g)
    assert not r
    return q


def jordan_chevalley(a: Sequence[Sequence[object]]) -> tuple[Matrix, Matrix]:
    """(S, N) with A = S + N, S semisimple, N nilpotent, both polynomials in A.

    Newton iteration ``S <- S - s(S) s'(S)^{-1}`` on the squarefree part s
    of the characteristic polynomial; it terminates after about log2(n)
    steps and never leaves the rationals.
    """
    a = linalg.to_matrix(a)
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionMismatch("matrix must be square")
    if n == 0:
        return [], []
    s = squarefree_part(linalg.charpoly(a))
    ds = linalg.pderiv(s)
    S = [list(r) for r in a]
    while True:
        val = linalg.peval_matrix(s, S)
        if linalg.is_zero(val):
            break
        S = linalg.add(S, linalg.matmul(val, linalg.inverse(linalg.peval_matrix(ds, S))), Fraction(-1))
    return S, linalg.add(a, S, Fraction(-1))


def decomposable_envelope(elems: Sequence[Sequence[Sequence[object]]]) -> list[Matrix]:
    """Smallest matrix Lie algebra containing ``elems`` and the S, N parts of its basis."""
    mats = [linalg.to_matrix(m) for m in elems]
    if not mats:
        return []
    n = len(mats[0])
    span = linalg.Echelon(n * n, (linalg.flatten(m) for m in mats))
    closure = lie_closure(mats)
    if len(closure) != len(span):
        raise NotASubalgebra("input span is not closed under commutators")
    basis = closure
    while True:
        parts = []
        for b in basis:
            S, N = jordan_chevalley(b)
            parts += [S, N]
        grown = lie_closure(basis + parts)
        if len(grown) == len(basis):
            return basis
        basis = grown
