#!/usr/bin/env python3
"""Compare the compiled line-grouping kernel against the pure-Python one.

Run after installing the package (the extension builds during install):

    python benchmarks/bench_kernels.py
"""
import time

from pointline import _kern, grid, random_points


def bench(label, ps, repeats=3):
    # both kernels get plain ints: this measures the loops, not coercion
    xs = [int(p.x) for p in ps.points]
    ys = [int(p.y) for p in ps.points]

    def time_kernel(fn):
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            result = fn(xs, ys)
            best = min(best, time.perf_counter() - t0)
        return best, result

    t_pure, r_pure = time_kernel(_kern.group_collinear_py)
    if _kern.compiled_kernel_available():
        t_fast, r_fast = time_kernel(_kern._fastkern.group_collinear)
        assert r_fast == r_pure, "kernels disagree"
        speedup = t_pure / t_fast
        print(
            f"{label:>22}  n={ps.n:>5}  pure {t_pure * 1e3:9.2f} ms"
            f"  compiled {t_fast * 1e3:9.2f} ms  speedup {speedup:5.1f}x"
        )
    else:
        print(f"{label:>22}  n={ps.n:>5}  pure {t_pure * 1e3:9.2f} ms  (no compiled kernel)")


def main():
    bench("grid 12x12", grid(12, 12))
    bench("grid 30x30", grid(30, 30))
    bench("random n=300", random_points(300, seed=7, bound=250))
    bench("random n=800", random_points(800, seed=7, bound=2000))


if __name__ == "__main__":
    main()
