from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from bivfib import parse, render
from bivfib.errors import DivisionByZero, NonInvertibleSubstitution, PolySyntaxError, UnboundVariable
from bivfib.gaussian import GaussianInt, GaussianRational
from bivfib.poly import A, ONE, S, X, Y, MultiPoly, evaluate_exact, evaluate_float, power

from conftest import int_fib, nonzero_rationals, polys, real_polys

I = GaussianInt(0, 1)


def to_sympy(p: MultiPoly):
    syms = {n: sympy.Symbol(n) for n in ("x", "y", "s", "g", "a", "z1", "z2")}
    expr = sympy.Integer(0)
    for exps, c in p.terms():
        term = sympy.Integer(c.re) + sympy.I * c.im
        for n, e in exps.items():
            term *= syms[n] ** e
        expr += term
    return sympy.expand(expr)


# ---- add / mul / pow --------------------------------------------------

def test_add_collects_like_terms():
    assert X + X == 2 * X
    assert (X ** 2 + Y) + (-Y) == X ** 2


@given(polys)
def test_additive_identity_and_inverse(p):
    assert p + 0 == p
    assert (p + (-p)).is_zero()
    assert len(p - p) == 0


def test_mul_examples():
    assert (X + Y) * (X - Y) == X ** 2 - Y ** 2
    assert MultiPoly.const(I) * MultiPoly.const(I) == -1
    assert Y * Y ** -1 == ONE


def test_pow_examples():
    assert power(X + 1, 2) == X ** 2 + 2 * X + 1
    assert (X + 2 * I) ** 2 == parse("x^2 + (0+4i)*x - 4")
    # repeated multiplication as an oracle
    acc = ONE
    for _ in range(5):
        acc = acc * (X + 2 * I)
    assert (X + 2 * I) ** 5 == acc


@given(polys)
def test_pow_zero_is_one(p):
    assert p ** 0 == ONE


@settings(max_examples=60)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p


@settings(max_examples=60)
@given(polys, polys)
def test_mul_agrees_with_sympy(p, q):
    assert to_sympy(p * q) == sympy.expand(to_sympy(p) * to_sympy(q))


def test_canonical_equality_is_structural():
    a = parse("y + x^2")
    b = parse("x^2 + y")
    assert a == b and hash(a) == hash(b)
    assert list(a.terms()) == list(b.terms())


# ---- substitution -----------------------------------------------------

def test_substitute_examples():
    assert (X ** 2 + Y).substitute({"y": S ** 2}) == X ** 2 + S ** 2
    assert (X * Y ** -1).substitute({"y": S ** 2}) == X * S ** -2
    f4 = X ** 3 + 2 * X * Y
    assert f4.substitute({"x": A * X, "y": A ** 2 * Y}) == A ** 3 * f4


def test_substitute_rejects_non_invertible_image():
    with pytest.raises(NonInvertibleSubstitution):
        (X * Y ** -1).substitute({"y": Y + 1})
    with pytest.raises(NonInvertibleSubstitution):
        (Y ** -1).substitute({"y": 2 * Y})
    # Gaussian units are invertible
    assert (Y ** -1).substitute({"y": I * Y}) == -I * Y ** -1


@settings(max_examples=60)
@given(polys, polys)
def test_substitution_is_a_homomorphism(p, q):
    binding = {"x": I * X * Y, "g": -S ** 2, "y": Y ** -1}
    assert (p * q).substitute(binding) == p.substitute(binding) * q.substitute(binding)
    assert (p + q).substitute(binding) == p.substitute(binding) + q.substitute(binding)


# ---- evaluation -------------------------------------------------------

def test_evaluate_exact_examples():
    assert evaluate_exact(X ** 2 + Y, {"x": 1, "y": 1}) == 2
    assert evaluate_exact(Y ** -1, {"y": 2}) == Fraction(1, 2)
    f10 = parse("x^9 + 8*x^7*y + 21*x^5*y^2 + 20*x^3*y^3 + 5*x*y^4")
    assert evaluate_exact(f10, {"x": 1, "y": 1}) == int_fib(10) == 55


def test_evaluate_exact_gaussian():
    value = evaluate_exact(I * X + 1, {"x": Fraction(1, 2)})
    assert value == GaussianRational(1, Fraction(1, 2))


def test_evaluate_errors():
    with pytest.raises(UnboundVariable):
        evaluate_exact(X + Y, {"x": 1})
    with pytest.raises(DivisionByZero):
        evaluate_exact(Y ** -2, {"y": 0})
    with pytest.raises(DivisionByZero):
        evaluate_float(Y ** -1, {"y": 0.0})


def test_evaluate_float_examples():
    assert evaluate_float(X ** 2 + Y, {"x": 2.0, "y": 1.0}) == 5.0
    assert evaluate_float(X ** 2 + 2 * Y, {"x": 1.0, "y": 1.0}) == 3.0  # L_2
    assert evaluate_float(X, {"x": 0.5}) == 0.5


@given(real_polys, nonzero_rationals, nonzero_rationals)
def test_float_agrees_with_exact(p, x, y):
    pt = {"x": x, "y": y}
    exact = complex(evaluate_exact(p, pt))
    approx = evaluate_float(p, {"x": float(x), "y": float(y)})
    assert abs(approx - exact) <= 1e-12 * max(1.0, abs(exact)) * max(1, len(p))


@given(polys, polys, nonzero_rationals, nonzero_rationals)
def test_evaluation_is_a_homomorphism(p, q, x, y):
    pt = {"x": x, "y": y, "s": Fraction(2), "g": Fraction(-1, 3)}
    assert evaluate_exact(p * q, pt) == evaluate_exact(p, pt) * evaluate_exact(q, pt)


# ---- text -------------------------------------------------------------

def test_parse_render_examples():
    p = parse("x^2 + 2*x*y")
    assert p == X ** 2 + 2 * X * Y
    assert render(p) == "x^2 + 2*x*y"
    assert parse("(0+1i)*y^-1") == I * Y ** -1
    with pytest.raises(PolySyntaxError) as err:
        parse("x + + y")
    assert err.value.position == 4


@pytest.mark.parametrize("text", ["", "x +", "x * 2", "q", "x^", "(1+2)", "(1+2i", "x + -y", "z3"])
def test_parse_rejects(text):
    with pytest.raises(PolySyntaxError):
        parse(text)


@pytest.mark.parametrize("text,expected", [
    ("x - -3", "x + 3"),
    ("3 - x", "-x + 3"),
    ("  z1 * z2 ^ 2 ", "z1*z2^2"),
    ("(2-3i)*x + (0-1i)", "(2-3i)*x + (0-1i)"),
    ("x*x*y^0", "x^2"),
    ("0", "0"),
    ("-1*x", "-x"),
])
def test_render_canonical(text, expected):
    assert render(parse(text)) == expected


@given(polys)
def test_parse_render_round_trip(p):
    assert parse(render(p)) == p


# ---- weighted degrees -------------------------------------------------

def test_weighted_degree_profile():
    w = {"x": 1, "y": 2}
    assert (X ** 4 + 3 * X ** 2 * Y + Y ** 2).weighted_degree_profile(w) == {4}
    assert (X ** 3 + 3 * X * Y).weighted_degree_profile(w) == {3}
    assert (X + Y).weighted_degree_profile(w) == {1, 2}


def test_values_are_immutable_and_shareable():
    p = X + 1
    q = p * p
    assert p == X + 1
    assert q is not p


def test_unknown_variable_rejected():
    with pytest.raises(ValueError):
        MultiPoly.var("w")
    with pytest.raises(ValueError):
        X.substitute({"w": ONE})


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_laurent_monomial_inverse(e1, e2):
    m = X ** 1 * Y ** 0
    mono = MultiPoly.monomial({"x": e1, "y": e2}, -1)
    assert mono * mono.inverse_monomial() == ONE
    assert m * 1 == X
