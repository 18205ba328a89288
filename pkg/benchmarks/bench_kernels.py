"""Compare the numba kernels against the Python/numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends are called explicitly, so STRONGCOAL_NUMBA has no effect here.
The first numba call per kernel is timed separately as compile/cache load.
"""

import argparse
import time

from strongcoal import config
from strongcoal.coalition import solve
from strongcoal.domination import STRONG, closed_dominators, domatic
from strongcoal.graph import complete_bipartite, cycle, path
from strongcoal import kernels

CASES = [
    ("solve P13 strong", lambda b: solve(path(13), STRONG, backend=b).value),
    ("solve C12 plain", lambda b: solve(cycle(12), "plain", backend=b).value),
    ("solve K_{5,3} strong", lambda b: solve(complete_bipartite(5, 3), STRONG, backend=b).value),
    ("domatic C18 strong", lambda b: domatic(cycle(18), STRONG, backend=b)[0]),
    ("subset scan n=18", lambda b: int(kernels.dominating_table(closed_dominators(path(18)), backend=b).sum())),
]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not config.HAVE_NUMBA:
        raise SystemExit("numba is not installed")

    t0 = time.perf_counter()
    for _, fn in CASES:
        fn("numba")
    print(f"numba warm-up (compile or cache load): {time.perf_counter() - t0:.2f}s\n")

    print(f"{'case':<24} {'numba s':>9} {'python s':>9} {'speedup':>8}  result")
    for name, fn in CASES:
        t_nb, r_nb = best_of(lambda: fn("numba"), args.repeat)
        t_py, r_py = best_of(lambda: fn("python"), 1)
        assert r_nb == r_py, (name, r_nb, r_py)
        print(f"{name:<24} {t_nb:>9.4f} {t_py:>9.3f} {t_py / t_nb:>7.0f}x  {r_nb}")


if __name__ == "__main__":
    main()
