"""
Exact polynomials over the Gaussian integers
============================================

Build Laurent polynomials in x and y, multiply them, substitute and
evaluate without rounding.
"""

from fractions import Fraction

from bivfib import parse, render
from bivfib.gaussian import GaussianInt
from bivfib.poly import S, X, Y

# text in, canonical text out
p = parse("y + x^2 + 2*x*y")
print(render(p))                       # x^2 + 2*x*y + y

# negative exponents are allowed
q = X * Y ** -1
print(p * q)

# Gaussian coefficients appear only when needed
i = GaussianInt(0, 1)
print((X + 2 * i) ** 2)                # x^2 + (0+4i)*x - 4

# substitution is a ring map; y -> s^2 stands for sqrt(y) -> s
print(p.substitute({"y": S ** 2}))

# exact evaluation gives fractions, float evaluation gives complex
point = {"x": Fraction(1, 2), "y": Fraction(-3)}
print(p.evaluate_exact(point), p.evaluate_float({"x": 0.5, "y": -3.0}))

# quasi-homogeneity: weighted degree with wt(x)=1, wt(y)=2
print((X ** 4 + 3 * X ** 2 * Y + Y ** 2).weighted_degree_profile({"x": 1, "y": 2}))
