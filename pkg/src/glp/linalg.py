"""Exact linear algebra over the rationals.

Sparse vectors are ``dict[int, Fraction]`` with no zero entries; dense
vectors and matrices are lists of Fractions.  The workhorse is
:class:`Echelon`, an incrementally maintained reduced row-echelon basis that
also serves for span membership and coordinate extraction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, GLPError

Sparse = dict[int, Fraction]
Matrix = list[list[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def sparse(v: Iterable[Fraction]) -> Sparse:
    return {i: Fraction(x) for i, x in enumerate(v) if x}


def dense(v: Mapping[int, Fraction], n: int) -> list[Fraction]:
    out = [ZERO] * n
    for i, x in v.items():
        out[i] = x
    return out


def axpy(y: Sparse, a: Fraction, x: Mapping[int, Fraction]) -> None:
    """In place ``y += a * x``."""
    if not a:
        return
    for k, v in x.items():
        s = y.get(k, ZERO) + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)


class Echelon:
    """Reduced row-echelon basis of a growing subspace of Q^n."""

    def __init__(self, n: int, vectors: Iterable[Mapping[int, Fraction]] = ()) -> None:
        self.n = n
        self.rows: dict[int, Sparse] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Mapping[int, Fraction]) -> Sparse:
        r = dict(v)
        for p in [k for k in r if k in self.rows]:
            c = r.get(p)
            if c:
                axpy(r, -c, self.rows[p])
        return r

    def contains(self, v: Mapping[int, Fraction]) -> bool:
        return not self.reduce(v)

    def add(self, v: Mapping[int, Fraction]) -> bool:
        """Insert ``v``; return whether the span grew."""
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = 1 / r[p]
        r = {k: x * inv for k, x in r.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                axpy(row, -c, r)
        self.rows[p] = r
        return True

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def basis(self) -> list[Sparse]:
        return [self.rows[p] for p in self.pivots()]

    def coords(self, v: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Coefficients of ``v`` on the basis rows, keyed by pivot column."""
        if not self.contains(v):
            raise GLPError("vector is not in the span")
        return {p: v[p] for p in self.rows if v.get(p)}


def row_space(rows: Iterable[Mapping[int, Fraction]], n: int) -> Echelon:
    return Echelon(n, rows)


def nullspace(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> list[Sparse]:
    """Basis of {x : r . x = 0 for every row r}."""
    ech = Echelon(ncols, rows)
    out: list[Sparse] = []
    pivots = set(ech.rows)
    for f in range(ncols):
        if f in pivots:
            continue
        x: Sparse = {f: ONE}
        for p, row in ech.rows.items():
            c = row.get(f)
            if c:
                x[p] = -c
        out.append(x)
    return out


def rank(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> int:
    return len(Echelon(ncols, rows))


# dense matrices -----------------------------------------------------------


def to_matrix(data: Sequence[Sequence[object]]) -> Matrix:
    from .exactspace import as_rational

    m = [[as_rational(x) for x in row] for row in data]
    if m and any(len(r) != len(m[0]) for r in m):
        raise DimensionMismatch("ragged matrix")
    return m


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[ZERO] * c for _ in range(r)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and len(a[0]) != len(b):
        raise DimensionMismatch("inner dimensions differ")
    bt = list(zip(*b)) if b else []
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([sum((x * col[k] for k, x in nz), ZERO) for col in bt])
    return out


def matvec(a: Matrix, v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((x * v[k] for k, x in enumerate(row) if x), ZERO) for row in a]


def add(a: Matrix, b: Matrix, s: Fraction = ONE) -> Matrix:
    return [[x + s * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(a: Matrix, s: Fraction) -> Matrix:
    return [[s * x for x in row] for row in a]


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return add(matmul(a, b), matmul(b, a), -ONE)


def is_zero(a: Matrix) -> bool:
    return not any(any(row) for row in a)


def transpose(a: Matrix) -> Matrix:
    return [list(r) for r in zip(*a)]


def flatten(a: Matrix) -> Sparse:
    n = len(a[0]) if a else 0
    return {i * n + j: x for i, row in enumerate(a) for j, x in enumerate(row) if x}


def unflatten(v: Mapping[int, Fraction], n: int) -> Matrix:
    out = zeros(n, n)
    for k, x in v.items():
        out[k // n][k % n] = x
    return out


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), ZERO)


def inverse(a: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises GLPError when singular."""
    n = len(a)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c]), None)
        if p is None:
            raise GLPError("matrix is singular")
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def solve(a: Matrix, b: Sequence[Fraction]) -> list[Fraction] | None:
    """One solution of ``a x = b``, or None when inconsistent."""
    rows = len(a)
    ncols = len(a[0]) if rows else 0
    ech = Echelon(ncols + 1, (sparse(list(r) + [b[i]]) for i, r in enumerate(a)))
    if ncols in ech.rows:
        return None
    x = [ZERO] * ncols
    for p, row in ech.rows.items():
        x[p] = row.get(ncols, ZERO)
    return x


def det(a: Matrix) -> Fraction:
    n = len(a)
    m = [list(r) for r in a]
    d = ONE
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return d


def definiteness(sym: Matrix) -> tuple[str, int]:
    """Classify a symmetric matrix by exact symmetric elimination.

    Returns ``("positive", 0)``, ``("semidefinite", corank)`` or
    ``("indefinite", -1)``.
    """
    n = len(sym)
    m = [list(r) for r in sym]
    active = list(range(n))
    corank = 0
    for c in range(n):
        piv = m[c][c]
        if piv < 0:
            return "indefinite", -1
        if piv == 0:
            if any(m[c][j] for j in active if j != c):
                return "indefinite", -1
            corank += 1
            active.remove(c)
            continue
        active.remove(c)
        for r in active:
            if m[r][c]:
                f = m[r][c] / piv
                for j in active:
                    m[r][j] -= f * m[c][j]
    return ("positive", 0) if corank == 0 else ("semidefinite", corank)


# polynomials, coefficient lists from the constant term upward -----------------


def ptrim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def pderiv(p: Sequence[Fraction]) -> list[Fraction]:
    return ptrim([k * p[k] for k in range(1, len(p))])


def pdivmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = ptrim(list(a))
    b = ptrim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [ZERO] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        f = a[-1] / b[-1]
        q[k] = f
        for i, c in enumerate(b):
            a[i + k] -= f * c
        ptrim(a)
    return ptrim(q), a


def pgcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a, b = ptrim(list(a)), ptrim(list(b))
    while b:
        a, b = b, pdivmod(a, b)[1]
    return [c / a[-1] for c in a] if a else a


def charpoly(a: Matrix) -> list[Fraction]:
    """Characteristic polynomial det(tI - a) by Faddeev-LeVerrier."""
    n = len(a)
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    m = zeros(n, n)
    for k in range(1, n + 1):
        m = matmul(a, m)
        for i in range(n):
            m[i][i] += coeffs[n - k + 1]
        coeffs[n - k] = -trace(matmul(a, m)) / k
    return coeffs


def peval_matrix(p: Sequence[Fraction], a: Matrix) -> Matrix:
    """Horner evaluation of a polynomial at a square matrix."""
    n = len(a)
    out = zeros(n, n)
    for c in reversed(p):
        out = matmul(out, a)
        for i in range(n):
            out[i][i] += c
    return out


def is_nilpotent(a: Matrix) -> bool:
    n = len(a)
    p = a
    k = 1
    while k < n:
        p = matmul(p, p)
        k *= 2
    return is_zero(p) if n else True


class Frame:
    """A fixed basis of a subspace with exact coordinate extraction."""

    def __init__(self, n: int, basis: Sequence[Mapping[int, Fraction]]) -> None:
        self.n = n
        self.vectors = [dict(v) for v in basis]
        self._rows: dict[int, tuple[Sparse, Sparse]] = {}
        for i, v in enumerate(self.vectors):
            r, comb = self._reduce(v, {i: ONE})
            if not r:
                raise GLPError("frame vectors are linearly dependent")
            p = min(r)
            inv = 1 / r[p]
            self._rows[p] = ({k: x * inv for k, x in r.items()}, {k: x * inv for k, x in comb.items()})

    def __len__(self) -> int:
        return len(self.vectors)

    def _reduce(self, v: Mapping[int, Fraction], comb: Sparse) -> tuple[Sparse, Sparse]:
        r = dict(v)
        # pivots are processed in increasing order so later eliminations never revive earlier ones
        for p in sorted(self._rows):
            c = r.get(p)
            if c:
                row, rc = self._rows[p]
                axpy(r, -c, row)
                axpy(comb, -c, rc)
        return r, comb

    def coords(self, v: Mapping[int, Fraction]) -> Sparse | None:
        """Coefficients of ``v`` on the frame, or None when outside the span."""
        r, comb = self._reduce(v, {})
        if r:
            return None
        return {i: -x for i, x in comb.items() if x}

    def contains(self, v: Mapping[int, Fraction]) -> bool:
        return self._reduce(v, {})[0] == {}


def solve_sparse(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> Sparse | None:
    """Solve a sparse system whose right-hand side sits in column ``ncols``.

    Returns one solution (free variables zero) or None when inconsistent.
    """
    ech = Echelon(ncols + 1, rows)
    if ncols in ech.rows:
        return None
    return {p: row[ncols] for p, row in ech.rows.items() if row.get(ncols)}


def is_nilpotent_algebra(gens: Sequence[Matrix], limit: int = 10_000) -> bool:
    """Whether the non-unital associative algebra generated by ``gens`` is nilpotent."""
    gens = [g for g in gens if not is_zero(g)]
    if not gens:
        return True
    n = len(gens[0])
    span = assoc_closure(gens, unital=False)
    power = span
    # in a nilpotent matrix algebra B^{n+1} = 0
    for _ in range(n + 1):
        ech = Echelon(n * n)
        nxt = []
        for a in power:
            for b in span:
                c = matmul(a, b)
                if ech.add(flatten(c)):
                    nxt.append(c)
        if not nxt:
            return True
        power = nxt
    return False


def assoc_closure(gens: Sequence[Matrix], unital: bool = True) -> list[Matrix]:
    """Basis of the associative algebra generated by square matrices."""
    if not gens:
        return []
    n = len(gens[0])
    ech = Echelon(n * n)
    found: list[Matrix] = []
    for m in ([identity(n)] if unital else []) + list(gens):
        if ech.add(flatten(m)):
            found.append(m)
    i = 0
    while i < len(found):
        for g in gens:
            c = matmul(found[i], g)
            if ech.add(flatten(c)):
                found.append(c)
        i += 1
    return found
