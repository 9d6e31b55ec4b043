"""Time the Jacobi and Killing kernels on both backends.

    python3 benchmarks/bench_kernels.py [--repeat N] [--types F4 E7 E8]
"""

from __future__ import annotations

import argparse
import time

from glp.gla import chevalley_basis
from glp.gla.kernels import HAVE_NUMBA, jacobi_violations, killing_form, structure_csr
from glp.rootsys import build_root_system


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--types", nargs="+", default=["F4", "E7", "E8"])
    args = ap.parse_args()
    backends = ["numba", "numpy"] if HAVE_NUMBA else ["numpy"]
    if HAVE_NUMBA:  # compile outside the timed region
        g = chevalley_basis(build_root_system("A", 2))
        jacobi_violations(g, "numba")
        killing_form(g, "numba")
    print(f"{'type':6s}{'dim':>5s}{'nnz':>8s}  {'backend':8s}{'jacobi s':>10s}{'killing s':>11s}")
    for label in args.types:
        g = chevalley_basis(build_root_system(label[0], int(label[1:])))
        nnz = structure_csr(g).val.size
        results = {}
        for b in backends:
            tj = best_of(lambda: jacobi_violations(g, b), args.repeat)
            tk = best_of(lambda: killing_form(g, b), args.repeat)
            results[b] = (jacobi_violations(g, b), killing_form(g, b))
            print(f"{label:6s}{g.dim:5d}{nnz:8d}  {b:8s}{tj:10.3f}{tk:11.3f}")
        first = next(iter(results.values()))
        assert all(r == first for r in results.values()), "backends disagree"


if __name__ == "__main__":
    main()
