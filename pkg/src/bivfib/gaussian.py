"""Exact Gaussian integers and Gaussian rationals.

Polynomials keep purely real coefficients as plain ``int`` for speed; a
``GaussianInt`` is only stored when the imaginary part is nonzero.  The two
representations interoperate through the usual numeric dunder methods.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

IntLike = Union[int, "GaussianInt"]


class GaussianInt:
    """The number ``re + im*i`` with arbitrary-precision integer parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0) -> None:
        if not isinstance(re, int) or not isinstance(im, int):
            raise TypeError("GaussianInt parts must be int")
        self.re = re
        self.im = im

    @classmethod
    def coerce(cls, value: IntLike) -> GaussianInt:
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianInt")

    def normalized(self) -> IntLike:
        """Collapse to ``int`` when the imaginary part vanishes."""
        return self.re if self.im == 0 else self

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __add__(self, other):
        if isinstance(other, GaussianInt):
            return GaussianInt(self.re + other.re, self.im + other.im).normalized()
        if isinstance(other, int):
            return GaussianInt(self.re + other, self.im).normalized()
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, (GaussianInt, int)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianInt):
            return GaussianInt(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            ).normalized()
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other).normalized()
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise ZeroDivisionError("only units of Z[i] have integer inverses")
            return self.conjugate() ** (-k)
        result: IntLike = 1
        base: IntLike = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"

    def __str__(self) -> str:
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


I = GaussianInt(0, 1)


def unit_power(unit: IntLike, k: int) -> IntLike:
    """Power of a unit of Z[i] (1, -1, i or -i) for any integer ``k``."""
    if isinstance(unit, int):
        if unit not in (1, -1):
            raise ZeroDivisionError(f"{unit} is not a unit")
        return unit ** (k % 2) if k < 0 else unit**k
    return unit**k


class GaussianRational:
    """Exact ``re + im*i`` with ``Fraction`` parts; the value type of exact evaluation."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0) -> None:
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, GaussianInt):
            return cls(value.re, value.im)
        if isinstance(value, (int, Rational)):
            return cls(value, 0)
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianRational")

    def is_real(self) -> bool:
        return self.im == 0

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussianRational.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> GaussianRational:
        if k < 0:
            return self.inverse() ** (-k)
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"
