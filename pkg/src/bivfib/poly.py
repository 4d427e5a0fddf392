"""Sparse Laurent polynomials over the Gaussian integers.

The variable universe is fixed: ``x, y, s, g, a, z1, z2``.  ``s`` stands for a
square root of ``y`` (identities involving it are checked after ``y -> s^2``),
``g`` is a complex scaling parameter, ``a`` a real scaling parameter and
``z1, z2`` are the variables of a binary quadratic form.

Internally an exponent vector is packed into one integer: each variable owns a
fixed-width bit field holding ``exponent + BIAS``, with ``x`` in the most
significant field.  Multiplying monomials is then a single integer addition,
and comparing packed keys is the lexicographic order on exponent vectors.
Real coefficients are stored as ``int``; ``GaussianInt`` only appears when the
imaginary part is nonzero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from .errors import DivisionByZero, NonInvertibleSubstitution, UnboundVariable
from .gaussian import GaussianInt, GaussianRational, unit_power

VARIABLES: Tuple[str, ...] = ("x", "y", "s", "g", "a", "z1", "z2")
_INDEX = {name: i for i, name in enumerate(VARIABLES)}

_FIELD = 24
_MASK = (1 << _FIELD) - 1
_BIAS = 1 << (_FIELD - 1)
_SHIFT = tuple(_FIELD * (len(VARIABLES) - 1 - i) for i in range(len(VARIABLES)))
# packed key of the constant monomial (all exponents zero)
_ONE_KEY = sum(_BIAS << sh for sh in _SHIFT)
MAX_EXPONENT = _BIAS - 1

Coeff = Union[int, GaussianInt]
ExponentVector = Dict[str, int]


def pack(exponents: Mapping[str, int]) -> int:
    key = _ONE_KEY
    for name, e in exponents.items():
        if name not in _INDEX:
            raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}")
        if abs(e) > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} out of range")
        key += e << _SHIFT[_INDEX[name]]
    return key


def unpack(key: int) -> ExponentVector:
    """Exponent map of a packed key; zero exponents are omitted."""
    out = {}
    for name, sh in zip(VARIABLES, _SHIFT):
        e = ((key >> sh) & _MASK) - _BIAS
        if e:
            out[name] = e
    return out


def _exponent(key: int, index: int) -> int:
    return ((key >> _SHIFT[index]) & _MASK) - _BIAS


def _coeff(value) -> Coeff:
    if isinstance(value, bool):
        raise TypeError("bool is not a polynomial coefficient")
    if isinstance(value, int):
        return value
    if isinstance(value, GaussianInt):
        return value.normalized()
    raise TypeError(f"unsupported coefficient type {type(value).__name__}")


class MultiPoly:
    """Immutable sparse Laurent polynomial with Gaussian-integer coefficients.

    Supports ``+ - *`` and ``**`` (nonnegative exponents, or any exponent for
    an invertible monomial) with other polynomials, ``int`` and ``GaussianInt``.
    Equal polynomials have identical term maps, so ``==`` and ``hash`` are
    structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Coeff] | None = None) -> None:
        # callers inside this module pass already-canonical dicts
        self._terms: Dict[int, Coeff] = dict(terms) if terms else {}
        self._hash = None

    # ---- construction -------------------------------------------------
    @classmethod
    def _raw(cls, terms: Dict[int, Coeff]) -> MultiPoly:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> MultiPoly:
        c = _coeff(c)
        return cls._raw({_ONE_KEY: c} if c else {})

    @classmethod
    def var(cls, name: str) -> MultiPoly:
        return cls._raw({pack({name: 1}): 1})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coeff=1) -> MultiPoly:
        coeff = _coeff(coeff)
        return cls._raw({pack(exponents): coeff} if coeff else {})

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[Mapping[str, int], object]]) -> MultiPoly:
        """Build from ``(exponent map, coefficient)`` pairs, collecting like terms."""
        out: Dict[int, Coeff] = {}
        for exps, c in terms:
            k = pack(exps)
            out[k] = out.get(k, 0) + _coeff(c)
        return cls._raw({k: c for k, c in out.items() if c})

    @classmethod
    def coerce(cls, value) -> MultiPoly:
        if isinstance(value, MultiPoly):
            return value
        return cls.const(value)

    # ---- inspection ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> Iterator[Tuple[ExponentVector, GaussianInt]]:
        """Terms in canonical (descending lexicographic) order."""
        for k in sorted(self._terms, reverse=True):
            yield unpack(k), GaussianInt.coerce(self._terms[k])

    def coefficient(self, exponents: Mapping[str, int]) -> GaussianInt:
        return GaussianInt.coerce(self._terms.get(pack(exponents), 0))

    def variables(self) -> set:
        used = set()
        for k in self._terms:
            used.update(unpack(k))
        return used

    def degree(self, name: str) -> int:
        i = _INDEX[name]
        return max(_exponent(k, i) for k in self._terms)

    def min_degree(self, name: str) -> int:
        i = _INDEX[name]
        return min(_exponent(k, i) for k in self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _ONE_KEY in self._terms)

    def constant_value(self) -> GaussianInt:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return GaussianInt.coerce(self._terms.get(_ONE_KEY, 0))

    def is_real(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def real_part(self) -> MultiPoly:
        out = {k: (c if isinstance(c, int) else c.re) for k, c in self._terms.items()}
        return MultiPoly._raw({k: c for k, c in out.items() if c})

    def imag_part(self) -> MultiPoly:
        """Imaginary parts of the coefficients, as a real polynomial."""
        return MultiPoly._raw(
            {k: c.im for k, c in self._terms.items() if isinstance(c, GaussianInt)}
        )

    # ---- ring operations ----------------------------------------------
    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.const(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        get = out.get
        for k, c in other._terms.items():
            v = get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                other = MultiPoly.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            try:
                c = _coeff(other)
            except TypeError:
                return NotImplemented
            if not c:
                return MultiPoly._raw({})
            if c == 1:
                return self
            return MultiPoly._raw({k: v * c for k, v in self._terms.items()})
        a, b = self._terms, other._terms
        if not a or not b:
            return MultiPoly._raw({})
        if len(a) < len(b):
            a, b = b, a
        out: Dict[int, Coeff] = {}
        get = out.get
        for kb, cb in b.items():
            shift = kb - _ONE_KEY
            for ka, ca in a.items():
                k = ka + shift
                out[k] = get(k, 0) + ca * cb
        return MultiPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            return self.inverse_monomial() ** (-k)
        result = MultiPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def is_invertible_monomial(self) -> bool:
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c in (1, -1) or (isinstance(c, GaussianInt) and c.is_unit())

    def inverse_monomial(self) -> MultiPoly:
        """Inverse of a monomial whose coefficient is a unit of Z[i]."""
        if not self.is_invertible_monomial():
            raise NonInvertibleSubstitution(f"{self} is not an invertible monomial")
        ((k, c),) = self._terms.items()
        return MultiPoly._raw({2 * _ONE_KEY - k: unit_power(c, -1)})

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        try:
            return self._terms == MultiPoly.const(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ---- substitution and evaluation ----------------------------------
    def substitute(self, bindings: Mapping[str, object]) -> MultiPoly:
        """Ring homomorphism sending each bound variable to its image.

        A variable that occurs with a negative exponent must be bound to an
        invertible monomial, otherwise ``NonInvertibleSubstitution`` is raised.
        """
        images = {}
        for name, img in bindings.items():
            if name not in _INDEX:
                raise ValueError(f"unknown variable {name!r}")
            images[_INDEX[name]] = MultiPoly.coerce(img)
        if not images:
            return self
        cache: Dict[Tuple[int, int], MultiPoly] = {}

        def image_power(i: int, e: int) -> MultiPoly:
            got = cache.get((i, e))
            if got is None:
                img = images[i]
                if e < 0 and not img.is_invertible_monomial():
                    raise NonInvertibleSubstitution(
                        f"{VARIABLES[i]} occurs with exponent {e} but is bound to {img}"
                    )
                got = img**e
                cache[(i, e)] = got
            return got

        out = MultiPoly._raw({})
        for key, c in self._terms.items():
            rest = key
            term = None
            for i, img in images.items():
                e = _exponent(key, i)
                if e:
                    rest -= e << _SHIFT[i]
                    p = image_power(i, e)
                    term = p if term is None else term * p
            piece = MultiPoly._raw({rest: c})
            out = out + (piece if term is None else piece * term)
        return out

    def _point_values(self, point: Mapping[str, object], convert):
        used = self.variables()
        missing = used - set(point)
        if missing:
            raise UnboundVariable(f"no value for {sorted(missing)}")
        return {_INDEX[n]: convert(point[n]) for n in used}

    def evaluate_exact(self, point: Mapping[str, object]) -> GaussianRational:
        """Exact value at a rational (or Gaussian rational) point."""
        vals = self._point_values(point, _exact_value)
        real = all(not isinstance(v, GaussianRational) for v in vals.values())
        real = real and self.is_real()
        total = Fraction(0) if real else GaussianRational(0)
        cache: Dict[Tuple[int, int], object] = {}
        for key, c in self._terms.items():
            term = c if real else GaussianRational.coerce(c)
            for i, v in vals.items():
                e = _exponent(key, i)
                if not e:
                    continue
                pw = cache.get((i, e))
                if pw is None:
                    if e < 0 and not v:
                        raise DivisionByZero(f"{VARIABLES[i]}^{e} at {VARIABLES[i]}=0")
                    pw = v**e
                    cache[(i, e)] = pw
                term = term * pw
            total = total + term
        return GaussianRational.coerce(total) if real else total

    def evaluate_float(self, point: Mapping[str, object]) -> complex:
        vals = self._point_values(point, complex)
        total = 0j
        for key, c in self._terms.items():
            term = complex(c)
            for i, v in vals.items():
                e = _exponent(key, i)
                if e:
                    if e < 0 and v == 0:
                        raise DivisionByZero(f"{VARIABLES[i]}^{e} at {VARIABLES[i]}=0")
                    term *= v**e
            total += term
        return total

    def weighted_degree_profile(self, weights: Mapping[str, int]) -> set:
        """Set of weighted degrees of the terms; a singleton means quasi-homogeneous."""
        idx = [(_INDEX[n], w) for n, w in weights.items()]
        return {sum(w * _exponent(k, i) for i, w in idx) for k in self._terms}

    # ---- text ---------------------------------------------------------
    def __str__(self) -> str:
        from .parsing import render

        return render(self)

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"


def _exact_value(v):
    if isinstance(v, GaussianRational):
        return v if v.im else v.re
    if isinstance(v, GaussianInt):
        return GaussianRational.coerce(v) if v.im else Fraction(v.re)
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"exact evaluation needs rational values, got {type(v).__name__}")


X = MultiPoly.var("x")
Y = MultiPoly.var("y")
S = MultiPoly.var("s")
G = MultiPoly.var("g")
A = MultiPoly.var("a")
Z1 = MultiPoly.var("z1")
Z2 = MultiPoly.var("z2")
ONE = MultiPoly.const(1)
ZERO = MultiPoly.const(0)
IMAG = MultiPoly.const(GaussianInt(0, 1))


# functional spellings of the ring API
def add(p, q) -> MultiPoly:
    return MultiPoly.coerce(p) + q


def mul(p, q) -> MultiPoly:
    return MultiPoly.coerce(p) * q


def power(p, k: int) -> MultiPoly:
    return MultiPoly.coerce(p) ** k


def substitute(p: MultiPoly, bindings: Mapping[str, object]) -> MultiPoly:
    return p.substitute(bindings)


def evaluate_exact(p: MultiPoly, point: Mapping[str, object]) -> GaussianRational:
    return MultiPoly.coerce(p).evaluate_exact(point)


def evaluate_float(p: MultiPoly, point: Mapping[str, object]) -> complex:
    return MultiPoly.coerce(p).evaluate_float(point)


def weighted_degree_profile(p: MultiPoly, weights: Mapping[str, int]) -> set:
    return p.weighted_degree_profile(weights)


def lift(value) -> MultiPoly:
    return MultiPoly.coerce(value)
