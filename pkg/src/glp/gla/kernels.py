"""Integer kernels for Jacobi checking and the Killing form.

Structure constants are scaled by a common denominator ``D`` to ``int64``
and stored in CSR form over ordered pairs ``p = i * n + j``.  The numba
kernels walk the CSR rows directly; the numpy fallback (selected with
``GLP_DISABLE_NUMBA=1`` or when numba is missing) does the same sums as
vectorised sparse joins.  When the scaled products could overflow ``int64``
both paths switch to exact Python integers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .algebra import GradedLieAlgebra

try:  # pragma: no cover - exercised implicitly
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

INT64_SAFE = 2**62


def use_numba() -> bool:
    return HAVE_NUMBA and os.environ.get("GLP_DISABLE_NUMBA", "") not in ("1", "true", "yes")


@dataclass(frozen=True)
class StructureCSR:
    n: int
    denom: int
    indptr: np.ndarray
    idx: np.ndarray
    val: np.ndarray  # int64 when safe, else object
    # COO view of the same entries: c_{ij}^k = val / denom
    rows_i: np.ndarray
    rows_j: np.ndarray

    @property
    def exact_int64(self) -> bool:
        return self.val.dtype == np.int64


def structure_csr(g: GradedLieAlgebra) -> StructureCSR:
    if "csr" in g._cache:
        return g._cache["csr"]
    n = g.dim
    table = g.table()
    denom = 1
    for v in table.values():
        for c in v.values():
            denom = lcm(denom, c.denominator)
    keys = sorted(table)
    counts = np.zeros(n * n + 1, dtype=np.int64)
    idx, val, ri, rj = [], [], [], []
    for i, j in keys:
        for k, c in sorted(table[(i, j)].items()):
            counts[i * n + j + 1] += 1
            idx.append(k)
            val.append(int(c * denom))
            ri.append(i)
            rj.append(j)
    indptr = np.cumsum(counts)
    peak = max((abs(v) for v in val), default=0)
    # Jacobi sums 3 * n products; Killing sums n * n products
    safe = peak * peak * 3 * max(n, 1) * max(n, 1) < INT64_SAFE
    arr = np.array(val, dtype=np.int64 if safe else object)
    if not val:
        arr = np.zeros(0, dtype=np.int64)
    csr = StructureCSR(n, denom, indptr, np.array(idx, dtype=np.int64), arr, np.array(ri, dtype=np.int64), np.array(rj, dtype=np.int64))
    g._cache["csr"] = csr
    return csr


# numba kernels -----------------------------------------------------------------

if HAVE_NUMBA:

    @njit(cache=True)
    def _jacobi_nb(n, indptr, idx, val):  # pragma: no cover - compiled
        acc = np.zeros(n, dtype=np.int64)
        touched = np.zeros(n, dtype=np.int64)
        bad = 0
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    nt = 0
                    for (x, y, z) in ((a, b, c), (b, c, a), (c, a, b)):
                        p = x * n + y
                        for e in range(indptr[p], indptr[p + 1]):
                            m = idx[e]
                            v1 = val[e]
                            q = m * n + z
                            for f in range(indptr[q], indptr[q + 1]):
                                l = idx[f]
                                if acc[l] == 0:
                                    touched[nt] = l
                                    nt += 1
                                acc[l] += v1 * val[f]
                    violated = False
                    for t in range(nt):
                        l = touched[t]
                        if acc[l] != 0:
                            violated = True
                        acc[l] = 0
                    if violated:
                        bad += 1
        return bad

    @njit(cache=True)
    def _killing_nb(n, ri, rj, rk, val, bucket_ptr, bucket_row):  # pragma: no cover - compiled
        # entry e is c_{ik}^l; bucket (l, k) lists the entries c_{jl}^k
        out = np.zeros((n, n), dtype=np.int64)
        for e in range(ri.shape[0]):
            key = rk[e] * n + rj[e]
            for t in range(bucket_ptr[key], bucket_ptr[key + 1]):
                f = bucket_row[t]
                out[ri[e], ri[f]] += val[e] * val[f]
        return out


# numpy fallback ------------------------------------------------------------------


def _join(key1: np.ndarray, key2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """All index pairs (a, b) with key1[a] == key2[b]."""
    o1 = np.argsort(key1, kind="stable")
    o2 = np.argsort(key2, kind="stable")
    k1, k2 = key1[o1], key2[o2]
    common = np.intersect1d(k1, k2)
    if common.size == 0:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    s1 = np.searchsorted(k1, common, "left")
    c1 = np.searchsorted(k1, common, "right") - s1
    s2 = np.searchsorted(k2, common, "left")
    c2 = np.searchsorted(k2, common, "right") - s2
    sizes = c1 * c2
    total = int(sizes.sum())
    grp = np.repeat(np.arange(common.size), sizes)
    starts = np.repeat(np.cumsum(sizes) - sizes, sizes)
    t = np.arange(total) - starts
    a = s1[grp] + t // c2[grp]
    b = s2[grp] + t % c2[grp]
    return o1[a], o2[b]


def _jacobi_np(csr: StructureCSR) -> int:
    n = csr.n
    ri, rj, rk, v = csr.rows_i, csr.rows_j, csr.idx, csr.val
    if v.size == 0:
        return 0
    # [[a, b], c]_l: join (a, b -> m) with (m, c -> l)
    e1, e2 = _join(rk, ri)
    a, b, c, l = ri[e1], rj[e1], rj[e2], rk[e2]
    prod = v[e1] * v[e2]
    keep = (a != b) & (b != c) & (a != c)
    a, b, c, l, prod = a[keep], b[keep], c[keep], l[keep], prod[keep]
    # rotate each triple so its smallest index comes first; keep the increasing orientation
    x = np.stack([a, b, c])
    shift = np.argmin(x, axis=0)
    cols = np.arange(x.shape[1])
    r0 = x[shift, cols]
    r1 = x[(shift + 1) % 3, cols]
    r2 = x[(shift + 2) % 3, cols]
    sel = r1 < r2
    key = ((r0[sel] * n + r1[sel]) * n + r2[sel]) * n + l[sel]
    prod = prod[sel]
    if key.size == 0:
        return 0
    order = np.argsort(key, kind="stable")
    key, prod = key[order], prod[order]
    starts = np.flatnonzero(np.r_[True, key[1:] != key[:-1]])
    sums = np.add.reduceat(prod, starts)
    bad_keys = key[starts][sums != 0] // n
    return int(np.unique(bad_keys).size)


def _killing_np(csr: StructureCSR) -> np.ndarray:
    n = csr.n
    ri, rj, rk, v = csr.rows_i, csr.rows_j, csr.idx, csr.val
    out = np.zeros((n, n), dtype=v.dtype if v.size else np.int64)
    if v.size == 0:
        return out
    # K_ij = sum c_ik^l c_jl^k: join (i, k -> l) with (j, l -> k) on the (k, l) pair
    e1, e2 = _join(rj * n + rk, rk * n + rj)
    np.add.at(out, (ri[e1], ri[e2]), v[e1] * v[e2])
    return out


# dispatch ----------------------------------------------------------------------


def jacobi_violations(g: GradedLieAlgebra, backend: str | None = None) -> int:
    """Number of triples i < j < k whose Jacobi sum is nonzero."""
    csr = structure_csr(g)
    backend = backend or ("numba" if use_numba() and csr.exact_int64 else "numpy")
    if backend == "numba" and csr.exact_int64:
        return int(_jacobi_nb(csr.n, csr.indptr, csr.idx, csr.val))
    return _jacobi_np(csr)


def killing_form(g: GradedLieAlgebra, backend: str | None = None) -> list[list[Fraction]]:
    """Exact ``K[i][j] = tr(ad x_i ad x_j)``."""
    if "killing" in g._cache and backend is None:
        return g._cache["killing"]
    csr = structure_csr(g)
    backend = backend or ("numba" if use_numba() and csr.exact_int64 else "numpy")
    if backend == "numba" and csr.exact_int64:
        n = csr.n
        key2 = csr.rows_j * n + csr.idx
        order = np.argsort(key2, kind="stable").astype(np.int64)
        ptr = np.zeros(n * n + 1, dtype=np.int64)
        np.add.at(ptr, key2 + 1, 1)
        raw = _killing_nb(n, csr.rows_i, csr.rows_j, csr.idx, csr.val, np.cumsum(ptr), order)
    else:
        raw = _killing_np(csr)
    d2 = csr.denom * csr.denom
    k = [[Fraction(int(x), d2) for x in row] for row in raw.tolist()] if csr.n else []
    g._cache.setdefault("killing", k)
    return k
