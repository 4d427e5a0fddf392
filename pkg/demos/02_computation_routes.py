"""
Four ways to compute F_n
========================

The recurrence, a 2x2 matrix power, index doubling and the binomial
closed form all land on the same canonical polynomial.
"""

from bivfib import engine
from bivfib.engine import FIB, LUCAS, h_range

n = 12
routes = {
    "naive": engine.fib_naive(n),
    "matrix_pow": engine.fib_matrix(n),
    "doubling": engine.fib_doubling(n)[0],
    "closed_form": engine.fib_closed_form(n),
}
for name, value in routes.items():
    print(f"{name:<12} {value}")
print("all equal:", len(set(routes.values())) == 1)

# the same routes run over plain integers: Fibonacci and Pell numbers
print([engine.fib_doubling(k, 1, 1)[0] for k in range(12)])
print([engine.fib_doubling(k, 2, 1)[0] for k in range(8)])

# A^n carries F_{n+1}, F_n, y F_n, y F_{n-1}
for row in engine.a_matrix_power(4).to_lists():
    print(row)

# negative indices live in the Laurent ring
table = h_range(LUCAS, -3, 3)
for k in sorted(table):
    print(k, table[k])

# generating-function coefficients match the recurrence
print([str(c) for c in engine.series_coeffs(FIB, 6)])
