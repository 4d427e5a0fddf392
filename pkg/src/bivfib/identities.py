"""Catalog of identities and inequalities for bivariate Fibonacci/Lucas polynomials.

Symbolic entries build both sides as ``MultiPoly`` (or ``Matrix2``) values and
compare them exactly, one index ``n`` at a time.  Most entries carry extra
"facets": side statements that the main identity is derived from or implies
(a matrix form, a determinant, a specialization).  A check passes only when
every facet holds.

Numeric entries sweep a rational grid of ``(x, y)`` points and compare
floating-point values against a tolerance.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .engine import (
    FIB,
    LUCAS,
    PRESETS,
    Matrix2,
    SeqParams,
    a_inverse,
    a_matrix,
    a_matrix_power,
    b_matrix,
    binet_roots,
    c_matrix,
    ca_matrix_power,
    closed_form_fib,
    complex_rep_fib,
    complex_rep_fib_y1,
    h_negative_closed,
    sqrt_matrix_y1,
)
from .errors import DomainError, EmptyGrid
from .gaussian import GaussianInt
from .poly import A, G, ONE, S, X, Y, Z1, Z2, ZERO, MultiPoly

I = GaussianInt(0, 1)


class IdentityId(str, Enum):
    SIMPSON_F = "SIMPSON_F"
    DOUBLE_STEP = "DOUBLE_STEP"
    TRACE_LUCAS = "TRACE_LUCAS"
    FL_PRODUCT = "FL_PRODUCT"
    H_CONVERT = "H_CONVERT"
    H_NEG = "H_NEG"
    SIMPSON_H = "SIMPSON_H"
    GOULD_SUM = "GOULD_SUM"
    INVERSION_GAMMA = "INVERSION_GAMMA"
    SIGN_FLIP = "SIGN_FLIP"
    NORMALIZE_SQRT_F = "NORMALIZE_SQRT_F"
    INVERSION_GAMMA_L = "INVERSION_GAMMA_L"
    NORMALIZE_SQRT_L = "NORMALIZE_SQRT_L"
    PARITY_F = "PARITY_F"
    PARITY_L = "PARITY_L"
    SCALE_F = "SCALE_F"
    SCALE_L = "SCALE_L"
    NORMALIZE_X = "NORMALIZE_X"
    COMPLEX_REP_Y1 = "COMPLEX_REP_Y1"
    COMPLEX_REP = "COMPLEX_REP"
    SUM_H = "SUM_H"
    SUM_F = "SUM_F"
    SUM_L = "SUM_L"
    SUM_F_EVEN = "SUM_F_EVEN"
    SUM_L_EVEN = "SUM_L_EVEN"
    LUCAS_POWER = "LUCAS_POWER"
    BINOM_F = "BINOM_F"
    BINOM_L = "BINOM_L"
    LUCAS_SQ = "LUCAS_SQ"
    L2N_SPLIT = "L2N_SPLIT"
    DET_B2AN = "DET_B2AN"
    LUCAS_4GAP = "LUCAS_4GAP"
    QFORM_BOUNDS = "QFORM_BOUNDS"
    SCHUR_F = "SCHUR_F"
    SCHUR_L = "SCHUR_L"
    EIGVEC_A = "EIGVEC_A"
    EIGVAL_BAN = "EIGVAL_BAN"

    def __str__(self) -> str:
        return self.value


# ---- shared sequence tables -------------------------------------------

class SequenceTable:
    """Lazily extended ``H_k`` values for several initial conditions.

    One table is shared by all checks of a single suite run; it is never
    global, so separate runs (and threads) do not share state.
    """

    def __init__(self) -> None:
        self._pos: Dict[Tuple[MultiPoly, MultiPoly], List[MultiPoly]] = {}
        self._neg: Dict[Tuple[MultiPoly, MultiPoly], List[MultiPoly]] = {}

    def h(self, params: SeqParams, k: int) -> MultiPoly:
        key = (params.a0, params.a1)
        if k >= 0:
            seq = self._pos.setdefault(key, [params.a0, params.a1])
            while len(seq) <= k:
                seq.append(X * seq[-1] + Y * seq[-2])
            return seq[k]
        # neg[j] holds H_{-j}; neg[0] = H_0 and neg[-1] is seeded from H_1
        seq = self._neg.setdefault(key, [params.a0])
        yinv = Y ** -1
        while len(seq) <= -k:
            j = len(seq)
            after = params.a1 if j == 1 else seq[j - 2]
            seq.append((after - X * seq[j - 1]) * yinv)
        return seq[-k]

    def F(self, k: int) -> MultiPoly:
        return self.h(FIB, k)

    def L(self, k: int) -> MultiPoly:
        return self.h(LUCAS, k)


@dataclass
class Facet:
    label: str
    lhs: object
    rhs: object

    def holds(self) -> bool:
        return self.lhs == self.rhs


def _render(value) -> str:
    if isinstance(value, Matrix2):
        return "[[{}, {}], [{}, {}]]".format(*(str(e) for e in value.entries()))
    if isinstance(value, (set, frozenset)):
        return "{" + ", ".join(str(v) for v in sorted(value)) + "}"
    return str(value)


@dataclass
class CatalogEntry:
    id: IdentityId
    statement: str
    n_min: int
    build: Optional[Callable] = None
    parametrized: bool = False
    uses_m: bool = False
    numeric: bool = False
    note: str = ""


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _subs(p: MultiPoly, **bindings) -> MultiPoly:
    return p.substitute(bindings)


# ---- symbolic builders ------------------------------------------------
# each returns the facets for one index n; the first facet is the headline.

def _simpson_f(t: SequenceTable, n, params, m):
    F = t.F
    return [
        Facet("F_{n-1} F_{n+1} - F_n^2 = (-1)^n y^(n-1)",
              F(n - 1) * F(n + 1) - F(n) ** 2, _sign(n) * Y ** (n - 1)),
        Facet("det(A^n) = (-y)^n", a_matrix_power(n).det(), (-Y) ** n),
    ]


def _double_step(t, n, params, m):
    F = t.F
    facets = [Facet("F_{n+1}^2 + y F_n^2 = F_{2n+1}", F(n + 1) ** 2 + Y * F(n) ** 2, F(2 * n + 1))]
    if n >= 1:
        an = a_matrix_power(n)
        facets.append(Facet("A^n A^n = A^{2n}", an @ an, a_matrix_power(2 * n)))
    return facets


def _trace_lucas(t, n, params, m):
    F, L = t.F, t.L
    return [
        Facet("tr(A^n) = L_n", a_matrix_power(n).trace(), L(n)),
        Facet("F_{n+1} + y F_{n-1} = L_n", F(n + 1) + Y * F(n - 1), L(n)),
    ]


def _fl_product(t, n, params, m):
    return [Facet("F_n L_n = F_{2n}", t.F(n) * t.L(n), t.F(2 * n))]


def _h_convert(t, n, params, m):
    H = lambda k: t.h(params, k)  # noqa: E731
    pattern = Matrix2(H(n + 2), H(n + 1), Y * H(n + 1), Y * H(n))
    return [
        Facet("H_{n+1} = a0 y F_n + a1 F_{n+1}", H(n + 1),
              params.a0 * Y * t.F(n) + params.a1 * t.F(n + 1)),
        Facet("C A^n = [[H_{n+2}, H_{n+1}], [y H_{n+1}, y H_n]]",
              ca_matrix_power(params, n), pattern),
        Facet("C = a0 y I + a1 A", c_matrix(params),
              Matrix2(params.a0 * Y, ZERO, ZERO, params.a0 * Y) + a_matrix().scale(params.a1)),
    ]


def _h_neg(t, n, params, m):
    F = t.F
    adj = Matrix2(Y * F(n - 1), -F(n), -Y * F(n), F(n + 1))
    inv_power = a_inverse() ** n
    bracket = params.a0 * F(n + 1) - params.a1 * F(n)
    lhs = t.h(params, -n)
    return [
        Facet("H_{-n} = (-1)^n y^(-n) (a0 F_{n+1} - a1 F_n)", lhs, h_negative_closed(params, n)),
        # the single 1/y factor is exact on the univariate line y = 1
        Facet("y = 1: H_{-n} = (-1)^n (a0 F_{n+1} - a1 F_n)", _subs(lhs, y=ONE),
              _subs(_sign(n) * Y ** -1 * bracket, y=ONE)),
        Facet("A^{-n} = (-y)^{-n} adj(A^n)", inv_power, adj.scale((-Y) ** -n)),
        Facet("A^{-n} A^n = I", inv_power @ a_matrix_power(n), Matrix2.identity()),
    ]


def _det_c(params: SeqParams) -> MultiPoly:
    a0, a1 = params.a0, params.a1
    return a0 * a1 * X * Y + a0 ** 2 * Y ** 2 - a1 ** 2 * Y


def _simpson_h(t, n, params, m):
    H = lambda k: t.h(params, k)  # noqa: E731
    rhs = _sign(n) * Y ** (n - 1) * _det_c(params)
    facets = [
        Facet("H_n H_{n+2} - H_{n+1}^2 = (-1)^n y^(n-1) (a0 a1 x y + a0^2 y^2 - a1^2 y)",
              H(n) * H(n + 2) - H(n + 1) ** 2, rhs),
        Facet("det(C) = a0 a1 x y + a0^2 y^2 - a1^2 y", c_matrix(params).det(), _det_c(params)),
    ]
    if params.a0 == FIB.a0 and params.a1 == FIB.a1:
        # with (0, 1) the formula is the Fibonacci determinant identity at index n+1
        facets.append(Facet("FIB case = SIMPSON_F at n+1", rhs, _sign(n + 1) * Y ** n))
    return facets


def _gould_sum(t, n, params, m):
    # Gould's sum in two free variables u=x, v=y:
    # (u - v) * sum (-1)^k C(n-k, k) (u v)^k (u + v)^(n-2k) = u^(n+1) - v^(n+1)
    gould = ZERO
    for k in range(n // 2 + 1):
        gould = gould + _sign(k) * comb(n - k, k) * (X * Y) ** k * (X + Y) ** (n - 2 * k)
    return [
        Facet("sum C(n-k, k) y^k x^(n-2k) = F_{n+1}", closed_form_fib(n), t.F(n + 1)),
        Facet("(u - v) sum (-1)^k C(n-k, k) (uv)^k (u+v)^(n-2k) = u^(n+1) - v^(n+1)",
              (X - Y) * gould, X ** (n + 1) - Y ** (n + 1)),
    ]


def _ig_power(k: int) -> MultiPoly:
    return (I * G) ** k


def _inversion_gamma(t, n, params, m):
    F = t.F(n)
    return [
        Facet("F_n(x, -y) = (ig)^{-(n-1)} F_n(igx, g^2 y)",
              _subs(F, y=-Y), _ig_power(-(n - 1)) * _subs(F, x=I * G * X, y=G ** 2 * Y)),
    ]


def _sign_flip(t, n, params, m):
    F = t.F(n)
    general = _ig_power(-(n - 1)) * _subs(F, x=I * G * X, y=G ** 2 * Y)
    flipped = _sign(n - 1) * _subs(F, x=-X, y=-Y)
    return [
        Facet("F_n(x, -y) = (-1)^{n-1} F_n(-x, -y)", _subs(F, y=-Y), flipped),
        Facet("g -> i in the inversion formula", _subs(general, g=I * ONE), flipped),
    ]


def _normalize_sqrt_f(t, n, params, m):
    F = t.F(n)
    lhs = _subs(F, y=S ** 2)
    rhs = S ** (n - 1) * _subs(F, x=X * S ** -1, y=ONE)
    # the intermediate generic form F_n(x, y) = (ig)^{-(n-1)} F_n(igx, -g^2 y),
    # then g -> 1/(i s) and y -> s^2
    generic = _ig_power(-(n - 1)) * _subs(F, x=I * G * X, y=-(G ** 2) * Y)
    g_choice = -I * S ** -1
    return [
        Facet("F_n(x, s^2) = s^(n-1) F_n(x/s, 1)", lhs, rhs),
        Facet("F_n(x, y) = (ig)^{-(n-1)} F_n(igx, -g^2 y)", F, generic),
        Facet("g -> 1/(is), y -> s^2", _subs(generic, g=g_choice, y=S ** 2), rhs),
    ]


def _inversion_gamma_l(t, n, params, m):
    L = t.L(n)
    return [
        Facet("L_n(x, -y) = (ig)^{-n} L_n(igx, g^2 y)",
              _subs(L, y=-Y), _ig_power(-n) * _subs(L, x=I * G * X, y=G ** 2 * Y)),
    ]


def _normalize_sqrt_l(t, n, params, m):
    L = t.L(n)
    return [
        Facet("L_n(x, s^2) = s^n L_n(x/s, 1)", _subs(L, y=S ** 2),
              S ** n * _subs(L, x=X * S ** -1, y=ONE)),
    ]


def _parity_f(t, n, params, m):
    F = t.F(n)
    label = ("F_{2k+1}(-x, y) = F_{2k+1}(x, y)" if n % 2
             else "F_{2k}(-x, y) = -F_{2k}(x, y)")
    return [Facet(label, _subs(F, x=-X), _sign(n - 1) * F)]


def _parity_l(t, n, params, m):
    L = t.L(n)
    label = ("L_{2k+1}(-x, y) = -L_{2k+1}(x, y)" if n % 2
             else "L_{2k}(-x, y) = L_{2k}(x, y)")
    return [Facet(label, _subs(L, x=-X), _sign(n) * L)]


_QH_WEIGHTS = {"x": 1, "y": 2}


def _scale_f(t, n, params, m):
    F = t.F(n)
    return [
        Facet("F_n(ax, a^2 y) = a^(n-1) F_n(x, y)", _subs(F, x=A * X, y=A ** 2 * Y), A ** (n - 1) * F),
        Facet("weighted degrees of F_n under wt(x)=1, wt(y)=2",
              F.weighted_degree_profile(_QH_WEIGHTS), {n - 1} if F else set()),
    ]


def _scale_l(t, n, params, m):
    L = t.L(n)
    return [
        Facet("L_n(ax, a^2 y) = a^n L_n(x, y)", _subs(L, x=A * X, y=A ** 2 * Y), A ** n * L),
        Facet("weighted degrees of L_n under wt(x)=1, wt(y)=2",
              L.weighted_degree_profile(_QH_WEIGHTS), {n}),
    ]


def _normalize_x(t, n, params, m):
    F, L = t.F(n), t.L(n)
    to_unit_x = {"x": ONE, "y": Y * X ** -2}
    return [
        Facet("F_n(x, y) = x^(n-1) F_n(1, y/x^2)", F, X ** (n - 1) * F.substitute(to_unit_x)),
        Facet("L_n(x, y) = x^n L_n(1, y/x^2)", L, X ** n * L.substitute(to_unit_x)),
    ]


def _complex_rep_y1(t, n, params, m):
    total = complex_rep_fib_y1(n)
    facets = [
        Facet("sum C(2n-1-r, r) (x+2i)^(n-r-1) (-i)^r = F_n(x, 1)", total, _subs(t.F(n), y=ONE)),
        Facet("imaginary residue", total.imag_part(), ZERO),
    ]
    if n == 1:
        # the square-root matrix behind the sum: M^2 = (x + 2i) A at y = 1
        sq = sqrt_matrix_y1()
        facets.append(Facet("[[x+i, 1], [1, i]]^2 = (x+2i) A(x, 1)", sq @ sq,
                            a_matrix(X, ONE).scale(X + 2 * I)))
    return facets


def _complex_rep(t, n, params, m):
    total = complex_rep_fib(n)
    return [
        Facet("sum C(2n-1-r, r) (x+2si)^(n-r-1) (-si)^r = F_n(x, s^2)", total,
              _subs(t.F(n), y=S ** 2)),
        Facet("imaginary residue", total.imag_part(), ZERO),
    ]


def _partial_sum(seq, n, step=1):
    total = ZERO
    for k in range(n + 1):
        total = total + seq(step * k)
    return total


def _sum_h(t, n, params, m):
    H = lambda k: t.h(params, k)  # noqa: E731
    return [
        Facet("(1-x-y) sum_{k<=n} H_k = a0(1-x) + a1 - y H_n - H_{n+1}",
              (1 - X - Y) * _partial_sum(H, n),
              params.a0 * (1 - X) + params.a1 - Y * H(n) - H(n + 1)),
    ]


def _sum_f(t, n, params, m):
    F = t.F
    return [Facet("(1-x-y) sum F_k = 1 - y F_n - F_{n+1}",
                  (1 - X - Y) * _partial_sum(F, n), 1 - Y * F(n) - F(n + 1))]


def _sum_l(t, n, params, m):
    L = t.L
    return [Facet("(1-x-y) sum L_k = 2 - x - y L_n - L_{n+1}",
                  (1 - X - Y) * _partial_sum(L, n), 2 - X - Y * L(n) - L(n + 1))]


_EVEN_DEN = 1 - 2 * Y - X ** 2 + Y ** 2


def _sum_f_even(t, n, params, m):
    F = t.F
    return [Facet("(1-2y-x^2+y^2) sum F_{2k} = x + y^2 F_{2n} - F_{2n+2}",
                  _EVEN_DEN * _partial_sum(F, n, 2), X + Y ** 2 * F(2 * n) - F(2 * n + 2))]


def _sum_l_even(t, n, params, m):
    L = t.L
    return [Facet("(1-2y-x^2+y^2) sum L_{2k} = 2 - x^2 - 2y + y^2 L_{2n} - L_{2n+2}",
                  _EVEN_DEN * _partial_sum(L, n, 2),
                  2 - X ** 2 - 2 * Y + Y ** 2 * L(2 * n) - L(2 * n + 2))]


def lucas_power_epsilons(m: int) -> Tuple[int, int]:
    """``(eps1, eps2)`` selecting the summation bound and the middle term."""
    # (-1)^(m+1) - 1 and (-1)^m + 1 are both even, so integer halving is exact
    eps1 = m // 2 + (-1 + (-1) ** (m + 1)) // 2
    eps2 = ((-1) ** m + 1) // 2
    return eps1, eps2


def _lucas_power(t, n, params, m):
    L = t.L
    eps1, eps2 = lucas_power_epsilons(m)
    unified = ZERO
    for k in range(eps1 + 1):
        unified = unified + comb(m, k) * (-Y) ** (k * n) * L(n * (m - 2 * k))
    middle = comb(m, m // 2) * (-Y) ** (m * n // 2) if m % 2 == 0 else ZERO
    unified = unified + eps2 * middle
    branch = ZERO
    top = m // 2 if m % 2 else m // 2 - 1
    for k in range(top + 1):
        branch = branch + comb(m, k) * (-Y) ** (k * n) * L(n * (m - 2 * k))
    if m % 2 == 0:
        branch = branch + comb(m, m // 2) * (-Y) ** (m * n // 2)
    return [
        Facet("L_n^m = sum_{k<=eps1} C(m,k) (-y)^(kn) L_{n(m-2k)} + eps2 C(m, m/2) (-y)^(mn/2)",
              L(n) ** m, unified),
        Facet("odd-m branch" if m % 2 else "even-m branch", L(n) ** m, branch),
        Facet("(eps1, eps2)", (eps1, eps2), (m // 2, 0) if m % 2 else (m // 2 - 1, 1)),
    ]


def _binom(seq, n):
    total = ZERO
    for k in range(n + 1):
        total = total + comb(n, k) * X ** k * Y ** (n - k) * seq(k)
    return total


def _binom_f(t, n, params, m):
    return [Facet("sum C(n,k) x^k y^(n-k) F_k = F_{2n}", _binom(t.F, n), t.F(2 * n))]


def _binom_l(t, n, params, m):
    return [Facet("sum C(n,k) x^k y^(n-k) L_k = L_{2n}", _binom(t.L, n), t.L(2 * n))]


def _ba_power(n: int) -> Matrix2:
    return ca_matrix_power(LUCAS, n)


def _lucas_sq(t, n, params, m):
    L = t.L
    ban = _ba_power(n)
    b = b_matrix()
    a = a_matrix()
    return [
        Facet("L_{n+2}^2 + y L_{n+1}^2 = L_{2n+4} + y L_{2n+2}",
              L(n + 2) ** 2 + Y * L(n + 1) ** 2, L(2 * n + 4) + Y * L(2 * n + 2)),
        Facet("(B A^n)^2 = B (B A^{2n})", ban @ ban, b @ _ba_power(2 * n)),
        Facet("A (B A^n) = (B A^n) A", a @ ban, ban @ a),
        Facet("B = y I + A^2", b, Matrix2(Y, ZERO, ZERO, Y) + a @ a),
    ]


def _l2n_split(t, n, params, m):
    F, L = t.F, t.L
    return [
        Facet("L_{2n} = F_n L_{n+1} + y F_{n-1} L_n", L(2 * n), F(n) * L(n + 1) + Y * F(n - 1) * L(n)),
        Facet("A^n (B A^n) = B A^{2n}", a_matrix_power(n) @ _ba_power(n), _ba_power(2 * n)),
    ]


def _det_b2an(t, n, params, m):
    L = t.L
    b = b_matrix()
    b2an = (b @ b) @ (a_matrix_power(n) if n else Matrix2.identity())
    expected = _sign(n) * Y ** n * (X ** 2 * Y + 4 * Y ** 2) ** 2
    seven = (Y ** 3 * L(n) * L(n + 2) + Y ** 2 * L(n + 2) ** 2 + Y ** 2 * L(n) * L(n + 4)
             + Y * L(n + 2) * L(n + 4) - Y ** 3 * L(n + 1) ** 2 - Y * L(n + 3) ** 2
             - 2 * Y ** 2 * L(n + 1) * L(n + 3))
    entries = Matrix2(Y * L(n + 2) + L(n + 4), Y * L(n + 1) + L(n + 3),
                      Y ** 2 * L(n + 1) + Y * L(n + 3), Y ** 2 * L(n) + Y * L(n + 2))
    return [
        Facet("det(B^2 A^n) = (-1)^n y^n (x^2 y + 4y^2)^2", b2an.det(), expected),
        Facet("B^2 A^n = y B A^n + B A^{n+2}", b2an, _ba_power(n).scale(Y) + _ba_power(n + 2)),
        Facet("B^2 A^n entries in Lucas polynomials", b2an, entries),
        Facet("seven-term determinant expansion", seven, expected),
    ]


def _lucas_4gap(t, n, params, m):
    L = t.L
    return [Facet("L_n L_{n+4} - L_{n+1} L_{n+3} = (-1)^n (x^4 y^n + 5x^2 y^(n+1) + 4y^(n+2))",
                  L(n) * L(n + 4) - L(n + 1) * L(n + 3),
                  _sign(n) * (X ** 4 * Y ** n + 5 * X ** 2 * Y ** (n + 1) + 4 * Y ** (n + 2)))]


_ID = IdentityId
CATALOG: Dict[IdentityId, CatalogEntry] = {e.id: e for e in [
    CatalogEntry(_ID.SIMPSON_F, "F_{n-1}F_{n+1} - F_n^2 = (-1)^n y^(n-1)", 1, _simpson_f),
    CatalogEntry(_ID.DOUBLE_STEP, "F_{n+1}^2 + y F_n^2 = F_{2n+1}", 0, _double_step),
    CatalogEntry(_ID.TRACE_LUCAS, "tr(A^n) = F_{n+1} + y F_{n-1} = L_n", 1, _trace_lucas),
    CatalogEntry(_ID.FL_PRODUCT, "F_n L_n = F_{2n}", 0, _fl_product),
    CatalogEntry(_ID.H_CONVERT, "H_{n+1} = a0 y F_n + a1 F_{n+1}", 0, _h_convert, parametrized=True),
    CatalogEntry(_ID.H_NEG, "H_{-n} = (-1)^n y^(-n) (a0 F_{n+1} - a1 F_n)", 1, _h_neg, parametrized=True,
                 note="the factor is y^(-n); a single 1/y is exact only at n = 1 or y = 1"),
    CatalogEntry(_ID.SIMPSON_H, "H_n H_{n+2} - H_{n+1}^2 = (-1)^n y^(n-1) det(C)", 0, _simpson_h,
                 parametrized=True),
    CatalogEntry(_ID.GOULD_SUM, "sum C(n-k,k) y^k x^(n-2k) = F_{n+1}", 0, _gould_sum),
    CatalogEntry(_ID.INVERSION_GAMMA, "F_n(x,-y) = (ig)^{-(n-1)} F_n(igx, g^2 y)", 0, _inversion_gamma),
    CatalogEntry(_ID.SIGN_FLIP, "F_n(x,-y) = (-1)^{n-1} F_n(-x,-y)", 0, _sign_flip),
    CatalogEntry(_ID.NORMALIZE_SQRT_F, "F_n(x,y) = (sqrt y)^(n-1) F_n(x/sqrt y, 1)", 0,
                 _normalize_sqrt_f, note="checked in the s-ring with y = s^2"),
    CatalogEntry(_ID.INVERSION_GAMMA_L, "L_n(x,-y) = (ig)^{-n} L_n(igx, g^2 y)", 0, _inversion_gamma_l),
    CatalogEntry(_ID.NORMALIZE_SQRT_L, "L_n(x,y) = (sqrt y)^n L_n(x/sqrt y, 1)", 0, _normalize_sqrt_l,
                 note="checked in the s-ring with y = s^2"),
    CatalogEntry(_ID.PARITY_F, "F_n(-x,y) = (-1)^(n-1) F_n(x,y)", 0, _parity_f),
    CatalogEntry(_ID.PARITY_L, "L_n(-x,y) = (-1)^n L_n(x,y)", 0, _parity_l),
    CatalogEntry(_ID.SCALE_F, "F_n(ax, a^2 y) = a^(n-1) F_n(x,y)", 0, _scale_f),
    CatalogEntry(_ID.SCALE_L, "L_n(ax, a^2 y) = a^n L_n(x,y)", 0, _scale_l),
    CatalogEntry(_ID.NORMALIZE_X, "F_n(x,y) = x^(n-1) F_n(1, y/x^2)", 0, _normalize_x,
                 note="y -> y*x^-2 taken in the Laurent ring; the x^(n-1) factor clears "
                      "negative x-exponents, so both sides are compared as polynomials"),
    CatalogEntry(_ID.COMPLEX_REP_Y1, "F_n(x,1) = sum C(2n-1-r,r)(x+2i)^(n-r-1)(-i)^r", 1,
                 _complex_rep_y1),
    CatalogEntry(_ID.COMPLEX_REP, "F_n(x,y) = sum C(2n-1-r,r)(x+2 sqrt(y) i)^(n-r-1)(-sqrt(y) i)^r", 1,
                 _complex_rep, note="checked in the s-ring with y = s^2"),
    CatalogEntry(_ID.SUM_H, "(1-x-y) sum H_k = a0(1-x) + a1 - y H_n - H_{n+1}", 0, _sum_h,
                 parametrized=True),
    CatalogEntry(_ID.SUM_F, "(1-x-y) sum F_k = 1 - y F_n - F_{n+1}", 0, _sum_f),
    CatalogEntry(_ID.SUM_L, "(1-x-y) sum L_k = 2 - x - y L_n - L_{n+1}", 0, _sum_l),
    CatalogEntry(_ID.SUM_F_EVEN, "(1-2y-x^2+y^2) sum F_{2k} = x + y^2 F_{2n} - F_{2n+2}", 0, _sum_f_even),
    CatalogEntry(_ID.SUM_L_EVEN, "(1-2y-x^2+y^2) sum L_{2k} = 2-x^2-2y + y^2 L_{2n} - L_{2n+2}", 0,
                 _sum_l_even),
    CatalogEntry(_ID.LUCAS_POWER, "L_n^m = sum_{k<=eps1} C(m,k)(-y)^(kn) L_{n(m-2k)} + eps2 C(m,m/2)(-y)^(mn/2)",
                 0, _lucas_power, uses_m=True),
    CatalogEntry(_ID.BINOM_F, "sum C(n,k) x^k y^(n-k) F_k = F_{2n}", 0, _binom_f),
    CatalogEntry(_ID.BINOM_L, "sum C(n,k) x^k y^(n-k) L_k = L_{2n}", 0, _binom_l),
    CatalogEntry(_ID.LUCAS_SQ, "L_{n+2}^2 + y L_{n+1}^2 = L_{2n+4} + y L_{2n+2}", 0, _lucas_sq),
    CatalogEntry(_ID.L2N_SPLIT, "L_{2n} = F_n L_{n+1} + y F_{n-1} L_n", 1, _l2n_split),
    CatalogEntry(_ID.DET_B2AN, "det(B^2 A^n) = (-1)^n y^n (x^2 y + 4y^2)^2", 0, _det_b2an),
    CatalogEntry(_ID.LUCAS_4GAP, "L_n L_{n+4} - L_{n+1} L_{n+3} = (-1)^n(x^4 y^n + 5x^2 y^(n+1) + 4y^(n+2))",
                 0, _lucas_4gap),
    CatalogEntry(_ID.QFORM_BOUNDS, "beta^n |z|^2 <= z^T A^n z <= alpha^n |z|^2", 1, numeric=True,
                 note="survey mode: only the y = 1 slice is a hard gate"),
    CatalogEntry(_ID.SCHUR_F, "F_{n+1}^2 + (1+y^2) F_n^2 + y^2 F_{n-1}^2 >= L_{2n}", 1, numeric=True),
    CatalogEntry(_ID.SCHUR_L, "y^2 L_n^2 + (1+y^2) L_{n+1}^2 + L_{n+2}^2 >= y^2 L_{2n} + 2y L_{2n+2} + L_{2n+4}",
                 0, numeric=True),
    CatalogEntry(_ID.EIGVEC_A, "[alpha/y, 1] and [beta/y, 1] are eigenvectors of A^k and B A^n", 0,
                 numeric=True),
    CatalogEntry(_ID.EIGVAL_BAN, "eig(B A^n) = {y alpha^n + alpha^(n+2), y beta^n + beta^(n+2)}", 0,
                 numeric=True),
]}

SYMBOLIC_IDS: Tuple[IdentityId, ...] = tuple(i for i, e in CATALOG.items() if not e.numeric)
NUMERIC_IDS: Tuple[IdentityId, ...] = tuple(i for i, e in CATALOG.items() if e.numeric)


def parse_ids(text: str) -> List[IdentityId]:
    """``all``, ``symbolic``, ``numeric`` or a comma list of identity names."""
    text = text.strip()
    if text == "all":
        return list(CATALOG)
    if text == "symbolic":
        return list(SYMBOLIC_IDS)
    if text == "numeric":
        return list(NUMERIC_IDS)
    out = []
    for name in filter(None, (p.strip() for p in text.split(","))):
        try:
            out.append(IdentityId(name.upper()))
        except ValueError:
            raise KeyError(f"unknown identity {name!r}") from None
    return out


# ---- reports ----------------------------------------------------------

@dataclass
class IdentityReport:
    id: IdentityId
    status: str
    n: Optional[int] = None
    m: Optional[int] = None
    params: Optional[str] = None
    n_range: Optional[Tuple[int, int]] = None
    lhs: str = ""
    rhs: str = ""
    facet: str = ""
    point: Optional[Dict[str, str]] = None
    failures: List[dict] = field(default_factory=list)
    findings: List[dict] = field(default_factory=list)
    checked: int = 0
    elapsed: float = 0.0
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def first_failure(self) -> Optional[dict]:
        return self.failures[0] if self.failures else None

    def to_json(self) -> dict:
        out = {"id": self.id.value, "n": self.n, "status": self.status,
               "lhs": self.lhs, "rhs": self.rhs}
        if self.point is not None:
            out["point"] = self.point
        for name in ("m", "params", "n_range"):
            value = getattr(self, name)
            if value is not None:
                out[name] = list(value) if name == "n_range" else value
        if self.facet:
            out["facet"] = self.facet
        if self.failures:
            out["failures"] = self.failures
        if self.findings:
            out["findings"] = self.findings
        if self.note:
            out["note"] = self.note
        out["checked"] = self.checked
        out["elapsed"] = round(self.elapsed, 6)
        return out

    def summary(self) -> str:
        where = [f"n={self.n}" if self.n is not None else ""]
        if self.m is not None:
            where.append(f"m={self.m}")
        if self.params:
            where.append(f"params={self.params}")
        if self.n_range is not None:
            where.append(f"n={self.n_range[0]}..{self.n_range[1]}")
        text = f"{self.status.upper():4} {self.id.value} {' '.join(w for w in where if w)}".rstrip()
        if self.findings:
            text += f" ({len(self.findings)} survey findings)"
        if not self.passed and self.failures:
            f = self.failures[0]
            text += f" -- {f.get('facet', '')}: lhs={f.get('lhs')} rhs={f.get('rhs')}"
        return text


def check_symbolic(identity, n: int, params: Optional[SeqParams] = None, m: Optional[int] = None,
                   table: Optional[SequenceTable] = None) -> IdentityReport:
    """Exact check of one catalog identity at index ``n``."""
    ident = IdentityId(identity)
    entry = CATALOG[ident]
    if entry.numeric:
        raise DomainError(f"{ident} is a numeric check; use check_numeric")
    if n < entry.n_min:
        raise DomainError(f"{ident} needs n >= {entry.n_min}, got {n}")
    if entry.uses_m:
        if m is None or m < 1:
            raise DomainError(f"{ident} needs m >= 1")
    else:
        m = None
    if entry.parametrized:
        params = params or FIB
    else:
        params = None
    t0 = time.perf_counter()
    facets = entry.build(table or SequenceTable(), n, params, m)
    report = IdentityReport(ident, "pass", n=n, m=m, params=params.label() if params else None,
                            note=entry.note, checked=len(facets))
    for facet in facets:
        if not facet.holds():
            report.status = "fail"
            report.failures.append({"facet": facet.label, "n": n,
                                    "lhs": _render(facet.lhs), "rhs": _render(facet.rhs)})
    shown = facets[0] if report.passed else next(f for f in facets if not f.holds())
    report.facet = shown.label
    report.lhs, report.rhs = _render(shown.lhs), _render(shown.rhs)
    report.elapsed = time.perf_counter() - t0
    return report


# ---- numeric sweeps ---------------------------------------------------

def _fractions(values: Iterable) -> Tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class SweepConfig:
    x_values: Tuple[Fraction, ...] = _fractions(["-3", "-1", "-1/2", "1/2", "1", "3"])
    y_values: Tuple[Fraction, ...] = _fractions(["-1/2", "1/2", "1", "2", "3"])
    z_values: Tuple[Tuple[int, int], ...] = tuple(
        (a, b) for a in (-1, 0, 1) for b in (-1, 0, 1) if (a, b) != (0, 0))
    n_max: int = 12
    rel_tol: float = 1e-9
    abs_tol: float = 1e-12

    def points(self, real_roots: bool = False) -> List[Tuple[Fraction, Fraction]]:
        """Grid points with ``y != 0`` and ``x^2 + 4y != 0`` (``> 0`` if ``real_roots``)."""
        out = []
        for x in self.x_values:
            for y in self.y_values:
                disc = x * x + 4 * y
                if y == 0 or disc == 0 or (real_roots and disc < 0):
                    continue
                out.append((x, y))
        return out

    def with_y(self, *ys) -> SweepConfig:
        return SweepConfig(self.x_values, _fractions(ys), self.z_values, self.n_max,
                           self.rel_tol, self.abs_tol)

    def close(self, a: complex, b: complex, scale: float = 0.0) -> bool:
        return abs(a - b) <= self.rel_tol * max(abs(a), abs(b), scale) + self.abs_tol


DEFAULT_SWEEP = SweepConfig()


def _pt(x, y) -> Dict[str, str]:
    return {"x": str(x), "y": str(y)}


def _exact_float(p: MultiPoly, point) -> float:
    v = p.evaluate_exact(point)
    return float(v.re)


def _numeric_qform(cfg: SweepConfig, report: IdentityReport, table: SequenceTable) -> None:
    # z^T A^n z, as a polynomial in x, y, z1, z2
    def qform(n):
        F = table.F
        return Z1 ** 2 * F(n + 1) + Z1 * Z2 * (1 + Y) * F(n) + Z2 ** 2 * Y * F(n - 1)

    forms = {n: qform(n) for n in range(1, cfg.n_max + 1)}
    for x, y in cfg.points(real_roots=True):
        roots = binet_roots(float(x), float(y))
        al, be = roots.alpha.real, roots.beta.real
        for n, q in forms.items():
            lo_lit, hi_lit = be ** n, al ** n
            lo_ext, hi_ext = min(lo_lit, hi_lit), max(lo_lit, hi_lit)
            for z1, z2 in cfg.z_values:
                val = _exact_float(q, {"x": x, "y": y, "z1": z1, "z2": z2})
                r = z1 * z1 + z2 * z2
                slack = cfg.rel_tol * max(abs(val), abs(hi_ext * r), abs(lo_ext * r)) + cfg.abs_tol
                literal_ok = lo_lit * r - slack <= val <= hi_lit * r + slack
                extremal_ok = lo_ext * r - slack <= val <= hi_ext * r + slack
                report.checked += 1
                if literal_ok:
                    continue
                record = {"point": _pt(x, y), "n": n, "z": [z1, z2], "value": val,
                          "lower": lo_lit * r, "upper": hi_lit * r,
                          "within_eigenvalue_extremes": extremal_ok}
                report.findings.append(record)
                # y = 1 makes A^n symmetric: the Rayleigh quotient must lie
                # between the extreme eigenvalues there
                if y == 1 and not extremal_ok:
                    report.failures.append(record)


def _schur_f_parts(t: SequenceTable, n: int):
    F, L = t.F, t.L
    lhs = F(n + 1) ** 2 + (1 + Y ** 2) * F(n) ** 2 + Y ** 2 * F(n - 1) ** 2
    return lhs, L(2 * n)


def _schur_l_parts(t: SequenceTable, n: int):
    L = t.L
    lhs = Y ** 2 * L(n) ** 2 + (1 + Y ** 2) * L(n + 1) ** 2 + L(n + 2) ** 2
    return lhs, Y ** 2 * L(2 * n) + 2 * Y * L(2 * n + 2) + L(2 * n + 4)


def schur_difference(identity, n: int, table: Optional[SequenceTable] = None) -> MultiPoly:
    """Squared-entry sum minus squared-eigenvalue sum, as a polynomial."""
    t = table or SequenceTable()
    parts = _schur_f_parts if IdentityId(identity) == IdentityId.SCHUR_F else _schur_l_parts
    lhs, rhs = parts(t, n)
    return lhs - rhs


def _numeric_schur(ident: IdentityId, cfg: SweepConfig, report: IdentityReport,
                   table: SequenceTable) -> None:
    n_min = CATALOG[ident].n_min
    diffs = {n: schur_difference(ident, n, table) for n in range(n_min, cfg.n_max + 1)}
    for n, d in diffs.items():
        at_one = d.substitute({"y": ONE})
        report.checked += 1
        if at_one:
            report.failures.append({"facet": "difference vanishes at y = 1", "n": n,
                                    "lhs": str(at_one), "rhs": "0"})
    worst = None
    parts = _schur_f_parts if ident == IdentityId.SCHUR_F else _schur_l_parts
    for x, y in cfg.points(real_roots=True):
        pt = {"x": x, "y": y}
        for n, d in diffs.items():
            rhs = _exact_float(parts(table, n)[1], pt)
            val = _exact_float(d, pt)
            report.checked += 1
            if worst is None or val < worst[0]:
                worst = (val, n, _pt(x, y))
            if val < -(cfg.rel_tol * abs(rhs) + cfg.abs_tol):
                report.failures.append({"point": _pt(x, y), "n": n, "lhs": val, "rhs": 0.0})
    if worst is not None:
        report.note = f"minimum difference {worst[0]:.6g} at n={worst[1]}, point={worst[2]}"


def _float_matrix(mat: Matrix2, pt) -> np.ndarray:
    return np.array([[_exact_float(e, pt) for e in row] for row in mat.to_lists()])


def _numeric_eigvec(cfg: SweepConfig, report: IdentityReport) -> None:
    mats = {("A", k): a_matrix_power(k) for k in range(1, cfg.n_max + 1)}
    mats.update({("BA", n): _ba_power(n) for n in range(0, cfg.n_max + 1)})
    for x, y in cfg.points(real_roots=True):
        pt = {"x": x, "y": y}
        roots = binet_roots(float(x), float(y))
        fy = float(y)
        for root in (roots.alpha.real, roots.beta.real):
            v = np.array([root / fy, 1.0])
            for (kind, k), mat in mats.items():
                M = _float_matrix(mat, pt)
                lam = root ** k if kind == "A" else fy * root ** k + root ** (k + 2)
                resid = np.linalg.norm(M @ v - lam * v)
                scale = np.linalg.norm(M) * np.linalg.norm(v)
                report.checked += 1
                if resid > cfg.rel_tol * scale + cfg.abs_tol:
                    report.failures.append({"point": _pt(x, y), "n": k, "matrix": kind,
                                            "lhs": float(resid), "rhs": 0.0})


def _numeric_eigval(cfg: SweepConfig, report: IdentityReport) -> None:
    mats = {n: _ba_power(n) for n in range(0, cfg.n_max + 1)}
    for x, y in cfg.points(real_roots=True):
        pt = {"x": x, "y": y}
        roots = binet_roots(float(x), float(y))
        al, be, fy = roots.alpha.real, roots.beta.real, float(y)
        for n, mat in mats.items():
            M = _float_matrix(mat, pt)
            got = np.sort(np.linalg.eigvals(M).real)
            want = np.sort([fy * al ** n + al ** (n + 2), fy * be ** n + be ** (n + 2)])
            scale = float(np.linalg.norm(M))
            report.checked += 1
            if not all(cfg.close(g, w, scale) for g, w in zip(got, want)):
                report.failures.append({"point": _pt(x, y), "n": n,
                                        "lhs": got.tolist(), "rhs": want.tolist()})


def check_numeric(identity, cfg: SweepConfig = DEFAULT_SWEEP,
                  table: Optional[SequenceTable] = None) -> IdentityReport:
    """Floating-point sweep of one inequality or eigen-structure claim over ``cfg``."""
    ident = IdentityId(identity)
    entry = CATALOG[ident]
    if not entry.numeric:
        raise DomainError(f"{ident} is a symbolic identity; use check_symbolic")
    if not cfg.points(real_roots=True):
        raise EmptyGrid(f"no grid point with y != 0 and x^2 + 4y > 0 for {ident}")
    table = table or SequenceTable()
    t0 = time.perf_counter()
    report = IdentityReport(ident, "pass", n_range=(entry.n_min, cfg.n_max), note=entry.note)
    if ident == IdentityId.QFORM_BOUNDS:
        _numeric_qform(cfg, report, table)
    elif ident in (IdentityId.SCHUR_F, IdentityId.SCHUR_L):
        _numeric_schur(ident, cfg, report, table)
    elif ident == IdentityId.EIGVEC_A:
        _numeric_eigvec(cfg, report)
    else:
        _numeric_eigval(cfg, report)
    if report.failures:
        report.status = "fail"
        f = report.failures[0]
        report.point = f.get("point")
        report.lhs, report.rhs = str(f.get("lhs")), str(f.get("rhs"))
    report.elapsed = time.perf_counter() - t0
    return report


# ---- suite ------------------------------------------------------------

def symbolic_cells(ids: Iterable, n_max: int, presets: Sequence[SeqParams] = PRESETS,
                   m_max: int = 6) -> List[tuple]:
    """``(id, n, params, m)`` cells in deterministic catalog order."""
    wanted = {IdentityId(i) for i in ids}
    cells = []
    for ident, entry in CATALOG.items():
        if ident not in wanted or entry.numeric:
            continue
        param_list = presets if entry.parametrized else (None,)
        for params in param_list:
            for n in range(entry.n_min, n_max + 1):
                for m in (range(1, m_max + 1) if entry.uses_m else (None,)):
                    cells.append((ident, n, params, m))
    return cells


def _run_cells(cells: List[tuple]) -> List[IdentityReport]:
    table = SequenceTable()
    return [check_symbolic(ident, n, params, m, table) for ident, n, params, m in cells]


def run_suite(ids: Iterable, n_max: int, cfg: SweepConfig = DEFAULT_SWEEP,
              presets: Sequence[SeqParams] = PRESETS, m_max: int = 6,
              workers: Optional[int] = None) -> List[IdentityReport]:
    """Every selected identity for all valid ``n <= n_max``; failures are data, not errors."""
    ids = [IdentityId(i) for i in ids]
    if not ids:
        return []
    if n_max < 2:
        raise DomainError(f"run_suite needs n_max >= 2, got {n_max}")
    cells = symbolic_cells(ids, n_max, presets, m_max)
    if workers and workers > 1 and len(cells) > 1:
        # contiguous chunks keep each worker's sequence table useful
        size = -(-len(cells) // workers)
        chunks = [cells[i:i + size] for i in range(0, len(cells), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = [r for part in pool.map(_run_cells, chunks) for r in part]
    else:
        reports = _run_cells(cells)
    wanted = set(ids)
    table = SequenceTable()
    for ident in NUMERIC_IDS:
        if ident in wanted:
            reports.append(check_numeric(ident, cfg, table))
    # numeric entries sit after the symbolic ones in the catalog already
    return reports


def hard_failures(reports: Iterable[IdentityReport]) -> List[IdentityReport]:
    return [r for r in reports if not r.passed]
