"""Compare the compiled and pure-Python kernels on inputs where they matter.

    python benchmarks/bench_kernels.py [--repeat 3]

Each workload is run through both backends; results must agree exactly.
"""

import argparse
import time

from slplethysm import _kernels_py
from slplethysm.glcube import _weight_space_codes

try:
    from slplethysm import _kernels
except ImportError:
    _kernels = None


def lr_workload(impl):
    # large skew shapes: products of staircases
    from slplethysm.lr import _supersets
    from slplethysm.partitions import Partition

    inner = Partition([6, 5, 4, 3, 2, 1])
    content = Partition([5, 4, 3, 2, 1])
    total = 0
    for nu in _supersets(inner, content.size(), 11):
        total += impl.lr_count(tuple(nu), tuple(inner), tuple(content))
    return total


def hwv_workload(impl, n=16):
    mu = (0,) * n
    basis = _weight_space_codes(n, mu)
    index = {}
    rows = [dict() for _ in basis]
    for a in range(n - 1):
        for r, images in enumerate(impl.ad_images(basis, n, a, a + 1)):
            for img, c in images:
                key = index.setdefault((a, img), len(index))
                rows[r][key] = rows[r].get(key, 0) + c
    return len(basis) - impl.sparse_rank(rows)


WORKLOADS = {
    "lr_count   staircase(6) x staircase(5)": lr_workload,
    "hwv kernel weight 0, n=16": hwv_workload,
}


def best_of(fn, repeat):
    best, value = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t)
    return best, value


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'workload':45s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, work in WORKLOADS.items():
        tp, vp = best_of(lambda: work(_kernels_py), args.repeat)
        if _kernels is None:
            print(f"{name:45s} {tp:10.3f} {'n/a':>10s} {'n/a':>8s}")
            continue
        tc, vc = best_of(lambda: work(_kernels), args.repeat)
        if vp != vc:
            raise SystemExit(f"backends disagree on {name}: {vp} != {vc}")
        print(f"{name:45s} {tp:10.3f} {tc:10.3f} {tp / tc:7.1f}x   result={vc}")


if __name__ == "__main__":
    main()
