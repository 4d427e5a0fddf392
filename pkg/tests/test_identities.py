import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bivfib import parse
from bivfib.engine import FIB, PRESETS, SeqParams, fib, lucas
from bivfib.errors import DomainError, EmptyGrid
from bivfib.identities import (
    CATALOG, DEFAULT_SWEEP, NUMERIC_IDS, SYMBOLIC_IDS, IdentityId, SequenceTable, SweepConfig,
    check_numeric, check_symbolic, hard_failures, lucas_power_epsilons, parse_ids, run_suite,
    schur_difference, symbolic_cells,
)
from bivfib.poly import ONE, X, Y, evaluate_exact

from conftest import int_fib, int_lucas


def test_catalog_has_every_identity():
    assert len(CATALOG) == 37
    assert set(SYMBOLIC_IDS) | set(NUMERIC_IDS) == set(IdentityId)
    assert len(NUMERIC_IDS) == 5


# ---- single checks ----------------------------------------------------

def test_simpson_at_two():
    r = check_symbolic("SIMPSON_F", 2)
    assert r.passed
    assert parse(r.lhs) == Y and parse(r.rhs) == Y


def test_lucas_four_gap_at_zero():
    r = check_symbolic("LUCAS_4GAP", 0)
    assert r.passed
    assert parse(r.rhs) == X ** 4 + 5 * X ** 2 * Y + 4 * Y ** 2


def test_binomial_transform_at_one():
    r = check_symbolic("BINOM_F", 1)
    assert r.passed and parse(r.lhs) == X


def test_lucas_power_small_case():
    r = check_symbolic("LUCAS_POWER", 1, m=2)
    assert r.passed and r.m == 2
    assert parse(r.lhs) == X ** 2


def test_general_simpson_with_one_x_start():
    r = check_symbolic("SIMPSON_H", 1, params=SeqParams.of(1, X))
    assert r.passed
    assert parse(r.rhs) == -Y ** 2


@pytest.mark.parametrize("ident", SYMBOLIC_IDS, ids=lambda i: i.value)
def test_every_symbolic_identity_holds_for_small_n(ident):
    entry = CATALOG[ident]
    table = SequenceTable()
    presets = PRESETS if entry.parametrized else (None,)
    for params in presets:
        for n in range(entry.n_min, 13):
            for m in ((1, 2, 3, 4) if entry.uses_m else (None,)):
                r = check_symbolic(ident, n, params, m, table)
                assert r.passed, r.summary()


def test_check_symbolic_domain_errors():
    with pytest.raises(DomainError):
        check_symbolic("TRACE_LUCAS", 0)
    with pytest.raises(DomainError):
        check_symbolic("LUCAS_POWER", 2)
    with pytest.raises(DomainError):
        check_symbolic("QFORM_BOUNDS", 2)
    with pytest.raises(DomainError):
        check_numeric("SIMPSON_F")


@pytest.mark.parametrize("m,eps", [(1, (0, 0)), (2, (0, 1)), (3, (1, 0)), (4, (1, 1)), (7, (3, 0)),
                                   (8, (3, 1))])
def test_lucas_power_epsilons(m, eps):
    assert lucas_power_epsilons(m) == eps


# ---- corrected forms --------------------------------------------------

def test_single_reciprocal_y_negative_form_breaks_at_n_two():
    n = 2
    wrong = Y ** -1 * (FIB.a0 * fib(n + 1) - FIB.a1 * fib(n))
    assert wrong != fib(-n)
    assert check_symbolic("H_NEG", n).passed


def test_sum_uses_next_index_not_previous():
    # closing term y H_n + H_{n+1}; an H_{n-1} in its place does not telescope
    n = 5
    total = sum((fib(k) for k in range(n + 1)), 0 * X)
    assert (1 - X - Y) * total == 1 - Y * fib(n) - fib(n + 1)
    assert (1 - X - Y) * total != 1 - Y * fib(n) - fib(n - 1)


def test_even_lucas_parity_is_lucas_not_fibonacci():
    for n in range(1, 8):
        assert lucas(2 * n).substitute({"x": -X}) == lucas(2 * n)
        assert lucas(2 * n) != fib(2 * n)


@settings(max_examples=30)
@given(st.integers(0, 40))
def test_parity_property(n):
    assert fib(n).substitute({"x": -X}) == (1 if n % 2 else -1) * fib(n)
    assert lucas(n).substitute({"x": -X}) == (-1) ** n * lucas(n)


# ---- schur differences ------------------------------------------------

@pytest.mark.parametrize("ident,n_min", [("SCHUR_F", 1), ("SCHUR_L", 0)])
def test_schur_difference_vanishes_at_y_one(ident, n_min):
    for n in range(n_min, 20):
        d = schur_difference(ident, n)
        assert d.substitute({"y": ONE}).is_zero()


def test_schur_difference_nonnegative_on_integer_grid():
    for x, y in [(1, 2), (2, 3), (3, 1), (-1, 2)]:
        for n in range(1, 12):
            assert evaluate_exact(schur_difference("SCHUR_F", n), {"x": x, "y": y}).re >= 0
            assert evaluate_exact(schur_difference("SCHUR_L", n), {"x": x, "y": y}).re >= 0


# ---- numeric sweeps ---------------------------------------------------

@pytest.mark.parametrize("ident", NUMERIC_IDS, ids=lambda i: i.value)
def test_numeric_checks_pass(ident):
    r = check_numeric(ident)
    assert r.passed, r.summary()
    assert r.checked > 0


def test_quadratic_form_survey_records_literal_violations():
    r = check_numeric("QFORM_BOUNDS")
    assert r.passed
    # literal beta^n lower bound fails for x < 0, even n; the extremes still hold at y = 1
    at_one = [f for f in r.findings if f["point"]["y"] == "1"]
    assert at_one and all(f["within_eigenvalue_extremes"] for f in at_one)
    sample = next(f for f in at_one if f["point"]["x"] == "-1" and f["n"] == 2)
    assert sample["value"] < sample["lower"]


def test_quadratic_form_y_one_slice():
    r = check_numeric("QFORM_BOUNDS", DEFAULT_SWEEP.with_y(1))
    assert r.passed and not r.failures


def test_empty_grid_is_rejected():
    cfg = SweepConfig(x_values=(Fraction(0),), y_values=(Fraction(-1),))
    with pytest.raises(EmptyGrid):
        check_numeric("EIGVAL_BAN", cfg)


# ---- suite ------------------------------------------------------------

def test_empty_suite():
    assert run_suite([], 10) == []


def test_small_suite():
    reports = run_suite(["SIMPSON_F"], 4)
    assert [r.n for r in reports] == [1, 2, 3, 4]
    assert all(r.passed for r in reports)


def test_suite_rejects_tiny_n_max():
    with pytest.raises(DomainError):
        run_suite(["SIMPSON_F"], 1)


def test_suite_order_is_deterministic():
    ids = ["SUM_H", "SIMPSON_F"]
    cells = symbolic_cells(ids, 3)
    assert cells[0][0] == IdentityId.SIMPSON_F
    assert cells == symbolic_cells(list(reversed(ids)), 3)
    assert len([c for c in cells if c[0] == IdentityId.SUM_H]) == 4 * len(PRESETS)


def test_parallel_suite_matches_serial():
    ids = ["DOUBLE_STEP", "H_CONVERT", "LUCAS_POWER"]
    serial = run_suite(ids, 8)
    parallel = run_suite(ids, 8, workers=2)
    assert [(r.id, r.n, r.m, r.params, r.status) for r in serial] == \
           [(r.id, r.n, r.m, r.params, r.status) for r in parallel]


def test_reports_serialize_to_json():
    reports = run_suite(["SIMPSON_F", "SCHUR_F"], 3)
    docs = json.loads(json.dumps([r.to_json() for r in reports]))
    for d in docs:
        assert {"id", "n", "status", "lhs", "rhs"} <= d.keys()
    assert docs[-1]["id"] == "SCHUR_F" and "n_range" in docs[-1]
    assert not hard_failures(reports)


def test_parse_ids():
    assert parse_ids("all") == list(CATALOG)
    assert parse_ids("numeric") == list(NUMERIC_IDS)
    assert parse_ids("simpson_f, fl_product") == [IdentityId.SIMPSON_F, IdentityId.FL_PRODUCT]
    with pytest.raises(KeyError):
        parse_ids("NOT_AN_IDENTITY")


def test_identities_match_integer_oracle():
    # a few statements re-derived with plain integers at several points
    for x, y in [(1, 1), (2, 1), (3, -2)]:
        for n in range(1, 20):
            F = lambda k: int_fib(k, x, y)
            L = lambda k: int_lucas(k, x, y)
            assert F(n - 1) * F(n + 1) - F(n) ** 2 == (-1) ** n * y ** (n - 1)
            assert F(n) * L(n) == F(2 * n)
            assert L(n) * L(n + 4) - L(n + 1) * L(n + 3) == \
                (-1) ** n * (x ** 4 * y ** n + 5 * x ** 2 * y ** (n + 1) + 4 * y ** (n + 2))
