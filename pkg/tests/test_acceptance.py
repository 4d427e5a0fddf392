"""Acceptance criteria; each test prints one PASS/FAIL line.

    pytest tests/test_acceptance.py -v -s
"""

import time
from fractions import Fraction

import pytest

from bivfib import engine
from bivfib.engine import FIB, LUCAS, PRESETS, binet_numeric, h_range
from bivfib.identities import (
    CATALOG, DEFAULT_SWEEP, SYMBOLIC_IDS, IdentityId, SequenceTable, check_numeric,
    check_symbolic, run_suite, schur_difference,
)
from bivfib.poly import ONE, S, evaluate_exact

N_MAX = 64
SUITE_BUDGET = 120.0


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\nACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'}  {title}"
                  + (f"  [{detail}]" if detail else ""))
        assert ok, detail
    return emit


@pytest.fixture(scope="module")
def suite():
    t0 = time.perf_counter()
    reports = run_suite(SYMBOLIC_IDS, N_MAX)
    return reports, time.perf_counter() - t0


def _by_id(reports, *ids):
    wanted = {IdentityId(i) for i in ids}
    return [r for r in reports if r.id in wanted]


def _coverage_ok(reports, ident):
    entry = CATALOG[ident]
    cells = {(r.n, r.params, r.m) for r in reports if r.id == ident}
    presets = len(PRESETS) if entry.parametrized else 1
    ms = 6 if entry.uses_m else 1
    return len(cells) == (N_MAX - entry.n_min + 1) * presets * ms


def test_1_symbolic_suite(report, suite):
    reports, elapsed = suite
    failed = [r.summary() for r in reports if not r.passed]
    covered = all(_coverage_ok(reports, i) for i in SYMBOLIC_IDS)
    report(1, "symbolic identity suite, n <= 64", not failed and covered and elapsed < SUITE_BUDGET,
           f"{len(reports)} checks, {len(failed)} failures, {elapsed:.1f}s"
           + ("" if not failed else f"; first: {failed[0]}"))


def test_2_route_equivalence(report):
    n_top = 512
    rec = h_range(FIB, 0, n_top)
    series = engine.series_coeffs(FIB, n_top + 1)
    bad = []
    for n in range(0, n_top + 1):
        ref = rec[n]
        if not (series[n] == ref and engine.fib_matrix(n) == ref
                and engine.fib_doubling(n)[0] == ref and engine.fib_closed_form(n) == ref):
            bad.append(n)
        if n >= 1 and engine.a_matrix_power(n).m21 != engine.Y * ref:
            bad.append(n)
    # big-integer check at (1, 1)
    a, b = 0, 1
    int_bad = []
    for n in range(0, 10_001):
        if engine.fib_doubling(n, 1, 1)[0] != a:
            int_bad.append(n)
        a, b = b, a + b
    report(2, "recurrence, matrix power, doubling, closed form and series agree",
           not bad and not int_bad,
           f"n <= {n_top} symbolic, bad={bad[:5]}; n <= 10000 at (1,1), bad={int_bad[:5]}")


def test_3_gaussian_representation(report):
    bad = []
    for n in range(1, 33):
        rep = engine.complex_rep_fib_y1(n)
        if not rep.imag_part().is_zero() or rep != engine.fib(n).substitute({"y": ONE}):
            bad.append(("y=1", n))
    for n in range(1, 25):
        if engine.complex_rep_fib(n) != engine.fib(n).substitute({"y": S ** 2}):
            bad.append(("s-ring", n))
    report(3, "Gaussian sums: y = 1 for n <= 32, s-ring for n <= 24", not bad, f"bad={bad[:5]}")


def test_4_inversion_and_parity(report):
    table = SequenceTable()
    bad = [n for n in range(0, 33) if not check_symbolic("INVERSION_GAMMA", n, table=table).passed]
    parity_labels = set()
    for ident in ("PARITY_F", "PARITY_L"):
        for n in range(0, N_MAX + 1):
            r = check_symbolic(ident, n, table=table)
            parity_labels.add((ident, r.facet))
            if not r.passed:
                bad.append((ident, n))
    report(4, "gamma inversion n <= 32; four parity corollaries n <= 64",
           not bad and len(parity_labels) == 4, f"bad={bad[:5]}, corollaries={len(parity_labels)}")


def test_5_simpson(report, suite):
    reports, _ = suite
    rs = _by_id(reports, "SIMPSON_F", "SIMPSON_H")
    failed = [r.summary() for r in rs if not r.passed]
    table = SequenceTable()
    det_c = engine.c_matrix(FIB).det()
    # general formula at FIB parameters is the one-step-shifted Fibonacci formula
    shift_bad = []
    for n in range(0, N_MAX):
        sign = 1 if n % 2 == 0 else -1
        general_rhs = sign * engine.Y ** (n - 1) * det_c
        fib_rhs = -sign * engine.Y ** n  # (-1)^m y^(m-1) at m = n + 1
        h_rep = check_symbolic("SIMPSON_H", n, FIB, table=table)
        f_rep = check_symbolic("SIMPSON_F", n + 1, table=table)
        if not (general_rhs == fib_rhs and h_rep.lhs == f_rep.lhs and h_rep.rhs == f_rep.rhs
                and h_rep.passed and f_rep.passed):
            shift_bad.append(n)
    report(5, "Simpson formulas n <= 64 with FIB consistency", not failed and not shift_bad,
           f"{len(rs)} checks, failed={failed[:2]}, shift_bad={shift_bad[:5]}")


def test_6_summations(report, suite):
    reports, _ = suite
    ids = ("SUM_H", "SUM_F", "SUM_L", "SUM_F_EVEN", "SUM_L_EVEN", "BINOM_F", "BINOM_L")
    rs = _by_id(reports, *ids)
    failed = [r.summary() for r in rs if not r.passed]
    report(6, "partial sums and binomial transforms n <= 64",
           not failed and {r.id.value for r in rs} == set(ids), f"{len(rs)} checks, failed={failed[:2]}")


def test_7_matrix_identities_and_schur(report, suite):
    reports, _ = suite
    rs = _by_id(reports, "LUCAS_SQ", "L2N_SPLIT", "DET_B2AN", "LUCAS_4GAP")
    failed = [r.summary() for r in rs if not r.passed]
    schur = [check_numeric(i) for i in ("SCHUR_F", "SCHUR_L")]
    failed += [r.summary() for r in schur if not r.passed]
    zero_bad = [(i, n) for i, lo in (("SCHUR_F", 1), ("SCHUR_L", 0)) for n in range(lo, 13)
                if not schur_difference(i, n).substitute({"y": ONE}).is_zero()]
    report(7, "B-matrix identities n <= 64; Schur differences >= -1e-9 and zero at y = 1",
           not failed and not zero_bad,
           f"{len(rs)} exact checks; {'; '.join(r.note for r in schur)}; zero_bad={zero_bad}")


def test_8_binet_and_eigen(report):
    worst, bad = 0.0, []
    for params in (FIB, LUCAS):
        table = h_range(params, -40, 40)
        for x, y in DEFAULT_SWEEP.points():
            for n in range(-40, 41):
                exact = complex(evaluate_exact(table[n], {"x": x, "y": y}))
                approx = binet_numeric(params, n, float(x), float(y))
                err = abs(approx - exact)
                if exact:
                    worst = max(worst, err / abs(exact))
                # relative 1e-9, with a 1e-12 absolute floor where the exact value is 0
                if err > 1e-9 * abs(exact) + 1e-12:
                    bad.append((params.name, str(x), str(y), n))
    eig = [check_numeric(i) for i in ("EIGVEC_A", "EIGVAL_BAN")]
    eig_failed = [r.summary() for r in eig if not r.passed]
    report(8, "Binet relative error < 1e-9 for |n| <= 40; eigen residuals < 1e-9",
           not bad and not eig_failed, f"worst relative error {worst:.2e}, bad={bad[:3]}, {eig_failed[:1]}")


def test_9_quadratic_form_survey(report):
    slice_ = check_numeric("QFORM_BOUNDS", DEFAULT_SWEEP.with_y(1))
    full = check_numeric("QFORM_BOUNDS")
    off_bounds = sum(1 for f in full.findings if not f["within_eigenvalue_extremes"])
    report(9, "quadratic-form bounds: y = 1 slice passes, full survey reported",
           slice_.passed and full.checked > 0 and full.passed,
           f"slice {slice_.checked} checks; survey {full.checked} checks, {len(full.findings)} "
           f"literal-order findings, {off_bounds} outside eigenvalue extremes (all with y != 1)")


def test_10_benchmark_ordering(report):
    n = 2 ** 14

    def best(fn, repeats=3):
        times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            fn(n, 1, 1)
            times.append(time.perf_counter() - t0)
        return min(times)

    t_naive = best(engine.fib_naive)
    t_matrix = best(engine.fib_matrix)
    t_doubling = best(lambda k, x, y: engine.fib_doubling(k, x, y)[0])
    report(10, "doubling and matrix power beat naive at n = 2^14, (1, 1)",
           t_doubling < t_naive and t_matrix < t_naive,
           f"naive {t_naive * 1e3:.2f}ms, matrix {t_matrix * 1e3:.2f}ms, doubling {t_doubling * 1e3:.2f}ms")
