"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]

Each workload is run through both backends, results are compared for
equality, and the best-of-``repeat`` wall time is reported.
"""
from __future__ import annotations

import argparse
import random
import sys
import time

from chowbso import kernels
from chowbso.repweights import dplus_sign_vectors
from chowbso.weylflag import _group_tables, eg_class_input


def _best(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def workloads(quick: bool):
    fold_n = (6, 8, 10) if quick else (8, 10, 12)
    for n in fold_n:
        factors = dplus_sign_vectors(n)
        yield f"fold d_n, n={n}", "linear_fold_multilinear", (factors, n)

    for n in (3, 4) if quick else (4, 5):
        factors = dplus_sign_vectors(n)
        yield f"full dplus product, n={n}", "linear_product", (factors, n, -1)

    rng = random.Random(0)
    for n in (6, 7) if quick else (7, 8):
        tables = _group_tables(n)
        # all-even or all-odd exponents, so the sign sum does not cancel
        terms = dict(eg_class_input(n).terms)
        for k in range(20):
            terms[tuple(2 * rng.randint(0, n) + k % 2 for _ in range(n))] = rng.randint(1, 9)
        yield f"W(D_n) symmetrize, n={n}", "symmetrize_dn", (terms, n, *tables)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller sizes")
    args = ap.parse_args(argv)

    if kernels.compiled_backend is None:
        print("compiled extension not available; build it with `pip install -e . --no-build-isolation`")
        return 1

    print(f"{'workload':<28} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for label, name, call_args in workloads(args.quick):
        t_py, r_py = _best(lambda: getattr(kernels.python_backend, name)(*call_args), args.repeat)
        t_c, r_c = _best(lambda: getattr(kernels.compiled_backend, name)(*call_args), args.repeat)
        if r_py != r_c:
            print(f"{label}: backends disagree", file=sys.stderr)
            return 2
        print(f"{label:<28} {t_py:>10.4f} {t_c:>11.4f} {t_py / t_c:>7.1f}x", flush=True)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
