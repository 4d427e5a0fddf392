"""
Timing the routes
=================

Symbolic F_n grows slowly in term count but quickly in coefficient
size; at a numeric point the fast routes win by a wide margin.
"""

import time

from bivfib import engine

ROUTES = {
    "naive": engine.fib_naive,
    "matrix_pow": engine.fib_matrix,
    "doubling": lambda n, x, y: engine.fib_doubling(n, x, y)[0],
}


def best_of(fn, *args, repeats=3):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


for n in (64, 256):
    row = {name: best_of(fn, n, engine.X, engine.Y) for name, fn in ROUTES.items()}
    print(f"symbolic n={n:<6}", "  ".join(f"{k}={v * 1e3:.1f}ms" for k, v in row.items()),
          f"terms={len(engine.fib(n))}")

for n in (2 ** 10, 2 ** 14):
    row = {name: best_of(fn, n, 1, 1) for name, fn in ROUTES.items()}
    print(f"at (1,1) n={n:<6}", "  ".join(f"{k}={v * 1e3:.2f}ms" for k, v in row.items()))
