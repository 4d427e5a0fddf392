"""Generalized bivariate Fibonacci polynomials and the routes that compute them.

``H_n = x*H_{n-1} + y*H_{n-2}`` with ``H_0 = a0``, ``H_1 = a1``; Fibonacci
polynomials are ``(a0, a1) = (0, 1)`` and Lucas polynomials ``(2, x)``.

The scalar routes (``fib_naive``, ``fib_matrix``, ``fib_doubling``,
``fib_closed_form``) are ring-generic: pass ``x`` and ``y`` as polynomials
(the default) or as plain integers/fractions to compute values at a point.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Tuple

from .errors import DomainError
from .gaussian import GaussianInt
from .poly import ONE, X, Y, ZERO, MultiPoly, S


@dataclass(frozen=True)
class SeqParams:
    a0: MultiPoly
    a1: MultiPoly
    name: str = ""

    @classmethod
    def of(cls, a0, a1, name: str = "") -> SeqParams:
        return cls(MultiPoly.coerce(a0), MultiPoly.coerce(a1), name)

    def label(self) -> str:
        return self.name or f"({self.a0}, {self.a1})"


FIB = SeqParams(ZERO, ONE, "F")
LUCAS = SeqParams(MultiPoly.const(2), X, "L")

# initial-condition presets swept by the parametrized identity checks
PRESETS: Tuple[SeqParams, ...] = (
    FIB,
    LUCAS,
    SeqParams(ONE, X, "(1, x)"),
    SeqParams(X, Y, "(x, y)"),
    SeqParams(Y, ONE, "(y, 1)"),
)


@dataclass(frozen=True)
class Matrix2:
    m11: object
    m12: object
    m21: object
    m22: object

    @classmethod
    def identity(cls) -> Matrix2:
        return cls(ONE, ZERO, ZERO, ONE)

    def __matmul__(self, o: Matrix2) -> Matrix2:
        return Matrix2(
            self.m11 * o.m11 + self.m12 * o.m21,
            self.m11 * o.m12 + self.m12 * o.m22,
            self.m21 * o.m11 + self.m22 * o.m21,
            self.m21 * o.m12 + self.m22 * o.m22,
        )

    def __add__(self, o: Matrix2) -> Matrix2:
        return Matrix2(self.m11 + o.m11, self.m12 + o.m12, self.m21 + o.m21, self.m22 + o.m22)

    def scale(self, c) -> Matrix2:
        return Matrix2(c * self.m11, c * self.m12, c * self.m21, c * self.m22)

    def __pow__(self, n: int) -> Matrix2:
        if n < 0:
            raise DomainError("negative matrix power; use the inverse matrix")
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result @ base
            n >>= 1
            if n:
                base = base @ base
        return Matrix2.identity() if result is None else result

    def det(self):
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self):
        return self.m11 + self.m22

    def entries(self) -> tuple:
        return (self.m11, self.m12, self.m21, self.m22)

    def map(self, fn) -> Matrix2:
        return Matrix2(*(fn(e) for e in self.entries()))

    def to_lists(self) -> List[list]:
        return [[self.m11, self.m12], [self.m21, self.m22]]


def a_matrix(x=X, y=Y) -> Matrix2:
    poly = isinstance(x, MultiPoly) or isinstance(y, MultiPoly)
    return Matrix2(x, ONE if poly else 1, y, ZERO if poly else 0)


def a_inverse() -> Matrix2:
    """Inverse of ``A`` over the Laurent ring: ``[[0, 1/y], [1, -x/y]]``."""
    yinv = Y ** -1
    return Matrix2(ZERO, yinv, ONE, -X * yinv)


def a_matrix_power(n: int, x=X, y=Y) -> Matrix2:
    """``A^n = [[F_{n+1}, F_n], [y F_n, y F_{n-1}]]`` by binary exponentiation."""
    if n < 1:
        raise DomainError(f"a_matrix_power needs n >= 1, got {n}")
    return a_matrix(x, y) ** n


def c_matrix(params: SeqParams) -> Matrix2:
    """``C = a0*y*I + a1*A``; for the Lucas preset this is the matrix ``B``."""
    a0y = params.a0 * Y
    return Matrix2(a0y, ZERO, ZERO, a0y) + a_matrix().scale(params.a1)


def b_matrix() -> Matrix2:
    return c_matrix(LUCAS)


def ca_matrix_power(params: SeqParams, n: int) -> Matrix2:
    """``C A^n = [[H_{n+2}, H_{n+1}], [y H_{n+1}, y H_n]]``."""
    if n < 0:
        raise DomainError(f"ca_matrix_power needs n >= 0, got {n}")
    c = c_matrix(params)
    return c if n == 0 else c @ a_matrix_power(n)


# ---- sequence values --------------------------------------------------

def h_range(params: SeqParams, lo: int, hi: int) -> Dict[int, MultiPoly]:
    """All ``H_k`` for ``lo <= k <= hi`` from one walk of each recurrence."""
    out: Dict[int, MultiPoly] = {0: params.a0, 1: params.a1}
    for k in range(2, hi + 1):
        out[k] = X * out[k - 1] + Y * out[k - 2]
    if lo < 0:
        yinv = Y ** -1
        # H_{-k} = -(x/y) H_{-(k-1)} + (1/y) H_{-(k-2)}
        for k in range(1, -lo + 1):
            out[-k] = (out[-k + 2] - X * out[-k + 1]) * yinv
    return {k: v for k, v in out.items() if lo <= k <= hi}


def h_n(params: SeqParams, n: int) -> MultiPoly:
    if n == 0:
        return params.a0
    if n == 1:
        return params.a1
    return h_range(params, min(n, 0), max(n, 1))[n]


def fib(n: int) -> MultiPoly:
    return h_n(FIB, n)


def lucas(n: int) -> MultiPoly:
    return h_n(LUCAS, n)


def _lift(value, x) -> object:
    return MultiPoly.coerce(value) if isinstance(x, MultiPoly) else value


def fib_naive(n: int, x=X, y=Y):
    """``F_n`` by walking the recurrence; ring-generic."""
    if n < 0:
        raise DomainError(f"fib_naive needs n >= 0, got {n}")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, x * b + y * a
    return _lift(a, x)


def fib_matrix(n: int, x=X, y=Y):
    """``F_n`` read off the upper-right entry of ``A^n``; ring-generic."""
    if n < 0:
        raise DomainError(f"fib_matrix needs n >= 0, got {n}")
    if n == 0:
        return _lift(0, x)
    return _lift(a_matrix_power(n, x, y).m12, x)


def fib_doubling(n: int, x=X, y=Y) -> Tuple[object, object]:
    """``(F_n, F_{n+1})`` by index doubling; ring-generic.

    From ``F_{n+1} + y F_{n-1} = L_n`` and the recurrence,
    ``L_n = 2 F_{n+1} - x F_n``, so ``F_{2n} = F_n L_n = F_n (2 F_{n+1} - x F_n)``;
    the odd step is ``F_{2n+1} = F_{n+1}^2 + y F_n^2``.
    """
    if n < 0:
        raise DomainError(f"fib_doubling needs n >= 0, got {n}")
    a, b = 0, 1
    for bit in bin(n)[2:]:
        a, b = a * (2 * b - x * a), b * b + y * a * a
        if bit == "1":
            a, b = b, x * b + y * a
    return _lift(a, x), _lift(b, x)


def fib_closed_form(n: int, x=X, y=Y):
    """``F_n`` as ``sum_k C(n-1-k, k) y^k x^(n-1-2k)``; ring-generic."""
    if n < 0:
        raise DomainError(f"fib_closed_form needs n >= 0, got {n}")
    if n == 0:
        return _lift(0, x)
    m = n - 1
    top = m // 2
    # x^(m-2k) for k = top..0, built upward in steps of x^2
    x_pows = [x ** (m - 2 * top)]
    x2 = x * x
    for _ in range(top):
        x_pows.append(x_pows[-1] * x2)
    total, coeff, y_pow = 0, 1, 1
    for k in range(top + 1):
        total = total + coeff * y_pow * x_pows[top - k]
        # C(m-k-1, k+1) from C(m-k, k)
        coeff = coeff * (m - 2 * k) * (m - 2 * k - 1) // ((k + 1) * (m - k)) if k < top else coeff
        y_pow = y_pow * y
    return _lift(total, x)


def closed_form_fib(n: int) -> MultiPoly:
    """``F_{n+1} = sum_{k <= n/2} C(n-k, k) y^k x^(n-2k)``."""
    if n < 0:
        raise DomainError(f"closed_form_fib needs n >= 0, got {n}")
    return fib_closed_form(n + 1)


def h_from_fib(params: SeqParams, n: int) -> MultiPoly:
    """``H_{n+1} = a0*y*F_n + a1*F_{n+1}``."""
    if n < 0:
        raise DomainError(f"h_from_fib needs n >= 0, got {n}")
    f = h_range(FIB, 0, n + 1)
    return params.a0 * Y * f[n] + params.a1 * f[n + 1]


def h_negative_closed(params: SeqParams, n: int) -> MultiPoly:
    """``H_{-n} = (-1)^n y^(-n) (a0*F_{n+1} - a1*F_n)``.

    Reading ``H_{-n}`` off ``C A^{-n}`` with ``A^{-n} = (-y)^{-n} adj(A^n)``
    gives the factor ``y^(-n)``; a bare ``1/y`` only agrees at ``n = 1`` or
    ``y = 1``.
    """
    if n < 1:
        raise DomainError(f"h_negative_closed needs n >= 1, got {n}")
    f = h_range(FIB, 0, n + 1)
    return (-1) ** n * Y ** -n * (params.a0 * f[n + 1] - params.a1 * f[n])


def series_coeffs(params: SeqParams, count: int) -> List[MultiPoly]:
    """First ``count`` coefficients of ``(a0 + (a1 - a0 x) t) / (1 - x t - y t^2)``.

    Comparing coefficients of ``t^k`` in ``(1 - x t - y t^2) g(t) = numerator``
    gives ``g_k = num_k + x g_{k-1} + y g_{k-2}``.
    """
    if count < 1:
        raise DomainError(f"series_coeffs needs count >= 1, got {count}")
    num = [params.a0, params.a1 - params.a0 * X]
    out: List[MultiPoly] = []
    for k in range(count):
        c = num[k] if k < len(num) else ZERO
        if k >= 1:
            c = c + X * out[k - 1]
        if k >= 2:
            c = c + Y * out[k - 2]
        out.append(c)
    return out


# ---- Gaussian-integer representations ----------------------------------

def complex_rep_fib_y1(n: int) -> MultiPoly:
    """``F_n(x, 1) = sum_{r<n} C(2n-1-r, r) (x+2i)^(n-r-1) (-i)^r``."""
    if n < 1:
        raise DomainError(f"complex_rep_fib_y1 needs n >= 1, got {n}")
    base = X + GaussianInt(0, 2)
    minus_i = GaussianInt(0, -1)
    total = ZERO
    for r in range(n):
        total = total + comb(2 * n - 1 - r, r) * base ** (n - r - 1) * minus_i**r
    return total


def complex_rep_fib(n: int) -> MultiPoly:
    """Same sum with ``sqrt(y)`` written as ``s``: ``(x+2si)^(n-r-1) (-si)^r``."""
    if n < 1:
        raise DomainError(f"complex_rep_fib needs n >= 1, got {n}")
    base = X + GaussianInt(0, 2) * S
    step = GaussianInt(0, -1) * S
    total = ZERO
    for r in range(n):
        total = total + comb(2 * n - 1 - r, r) * base ** (n - r - 1) * step**r
    return total


def sqrt_matrix_y1() -> Matrix2:
    """``[[x+i, 1], [1, i]]``; its square is ``(x+2i) A`` at ``y = 1``."""
    i = GaussianInt(0, 1)
    return Matrix2(X + i, ONE, ONE, MultiPoly.const(i))


# ---- numeric Binet path ------------------------------------------------

@dataclass(frozen=True)
class BinetRoots:
    alpha: complex
    beta: complex


def binet_roots(x: complex, y: complex) -> BinetRoots:
    """Roots of ``t^2 - x t - y``; complex when ``x^2 + 4y < 0``."""
    if y == 0:
        raise DomainError("Binet form needs y != 0")
    disc = x * x + 4 * y
    if disc == 0:
        raise DomainError("Binet form needs x^2 + 4y != 0")
    r = cmath.sqrt(disc)
    return BinetRoots((x + r) / 2, (x - r) / 2)


def binet_numeric(params: SeqParams, n: int, x: complex, y: complex) -> complex:
    roots = binet_roots(x, y)
    al, be = roots.alpha, roots.beta
    pt = {"x": x, "y": y}
    a0 = params.a0.evaluate_float(pt)
    a1 = params.a1.evaluate_float(pt)
    return ((a1 - be * a0) * al**n - (a1 - al * a0) * be**n) / (al - be)
