"""Compare the compiled and numpy mod-p RREF kernels.

Usage: python3 benchmarks/bench_rref.py [--sizes 50,100,200] [--primes 2,3,65521] [--repeat 3]
"""

import argparse
import timeit

import numpy as np

from gorlab import _kernels_py

try:
    from gorlab import _kernels
except ImportError:  # extension not built
    _kernels = None


def bench(fn, a, p, repeat):
    return min(timeit.repeat(lambda: fn(a.copy(), p), number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="50,100,200,400")
    ap.add_argument("--primes", default="2,3,65521")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = np.random.default_rng(args.seed)
    rows = []
    print(f"{'p':>6} {'n':>5} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for p in (int(x) for x in args.primes.split(",")):
        for n in (int(x) for x in args.sizes.split(",")):
            a = rng.integers(0, p, size=(n, n + n // 2), dtype=np.int64)
            t_py = bench(_kernels_py.rref_modp, a, p, args.repeat)
            if _kernels is not None:
                b, c = a.copy(), a.copy()
                assert list(_kernels.rref_modp(b, p)) == list(_kernels_py.rref_modp(c, p))
                assert np.array_equal(b, c)
                t_cy = bench(_kernels.rref_modp, a, p, args.repeat)
                speed = f"{t_py / t_cy:8.1f}"
                t_cy_s = f"{t_cy:10.4f}"
            else:
                t_cy_s, speed = f"{'n/a':>10}", f"{'n/a':>8}"
            print(f"{p:>6} {n:>5} {t_py:10.4f} {t_cy_s} {speed}")
            rows.append((p, n, t_py))
    return rows


if __name__ == "__main__":
    main()
