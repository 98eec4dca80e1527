"""Exit criteria, each at its stated tolerance.  One summary line per criterion
is printed at the end of the pytest run."""

import json
import time
from fractions import Fraction

import pytest

from qeulerlab.analytic import SeriesConfig, euler_series, generating_function_check
from qeulerlab.cli import main
from qeulerlab.exactfield import qrat_eval_complex
from qeulerlab.padic import PrimeContext, convergence_certificate, fermionic_target, riemann_sum_mu_minus_q
from qeulerlab.qeuler import (
    denominator_bound,
    euler_q_closed_form,
    euler_q_limit,
    euler_q_recurrence,
)
from qeulerlab.qnumbers import classical_euler
from qeulerlab.verify import check_eq16, check_eq16_1, check_eq19, check_eq21

from conftest import record_acceptance
from test_qnumbers import euler_by_series_division

pytestmark = pytest.mark.acceptance


@pytest.fixture(scope="module")
def table30():
    return euler_q_recurrence(30)


def test_1_dual_construction(table30):
    mismatches = [n for n in range(31) if table30[n] != euler_q_closed_form(n)]
    ok = not mismatches
    record_acceptance(1, "recurrence == closed form in Q(q), n <= 30, exact", ok, f"mismatches={mismatches}")
    assert ok


def test_2_classical_limit(table30):
    limits = euler_q_limit(euler_q_recurrence(12))
    classical = list(classical_euler(12).values)
    series = euler_by_series_division(12)
    spot = (limits[1], limits[2], limits[3]) == (Fraction(-1, 2), 0, Fraction(1, 4))
    ok = limits == classical == series and spot
    record_acceptance(2, "E_{n,q} at q=1 equals classical E_n, n <= 12, exact", ok)
    assert ok


def test_3_identity_suites(capsys):
    start = time.perf_counter()
    eq16 = check_eq16(30)
    eq19 = check_eq19(15, (1, 3, 5, 7))
    eq21 = check_eq21(15, (2, 4, 6))
    general = {(r.params["n"], r.params["m"]): r for r in check_eq16_1(range(1, 8), 15)}
    cross = all(
        (general[(r.params["n"], r.params["m"])].rhs, general[(r.params["n"], r.params["m"])].lhs)
        == (r.lhs, r.rhs)
        for r in eq19
    ) and all(
        (general[(r.params["n"], r.params["m"])].lhs, general[(r.params["n"], r.params["m"])].rhs)
        == (r.lhs, r.rhs)
        for r in eq21
    )
    exact_ok = all(r.passed for r in eq16 + eq19 + eq21 + list(general.values()))
    code = main(["verify", "--suite", "all"])
    summary = json.loads(capsys.readouterr().out)["summary"]
    elapsed = time.perf_counter() - start
    ok = exact_ok and cross and code == 0 and summary["passed"] == summary["total"]
    record_acceptance(
        3,
        "EQ16/EQ19/EQ21/EQ16-1 suites 100% exact, exit 0",
        ok,
        f"{summary['passed']}/{summary['total']} via CLI, {elapsed:.1f}s",
    )
    assert ok


def test_4_fermionic_certificates():
    start = time.perf_counter()
    failures = []
    for p, q in ((5, 6), (3, 4)):
        ctx = PrimeContext(p, q, 4)
        for m in range(4):
            for x0 in (0, 1):
                cert = convergence_certificate(ctx, m, x0, measure="fermionic")
                if not cert.passed:
                    failures.append((p, q, m, x0, cert.gaps))
    ctx = PrimeContext(5, 6, 4)
    s1 = riemann_sum_mu_minus_q(ctx, 1, 1)
    e1 = fermionic_target(ctx, 1)
    res = lambda x: x.numerator * pow(x.denominator, -1, 5) % 5
    residue_ok = s1 == 1143177 and e1 == Fraction(-6, 37) and res(Fraction(s1)) == res(e1) == 2
    elapsed = time.perf_counter() - start
    ok = not failures and residue_ok and elapsed < 10
    record_acceptance(4, "fermionic certificates pass at N_max=4, S_1 = E_1 = 2 mod 5, < 10 s", ok, f"{elapsed:.2f}s")
    assert ok, failures


def test_5_bosonic_certificates():
    failures = []
    for p, q in ((5, 6), (3, 4)):
        ctx = PrimeContext(p, q, 4)
        for m in range(3):
            for x0 in (0, 1):
                cert = convergence_certificate(ctx, m, x0, measure="bosonic")
                if not cert.passed:
                    failures.append((p, q, m, x0, cert.gaps))
    ok = not failures
    record_acceptance(5, "bosonic certificates for Carlitz beta_{m,q}(x0) pass", ok)
    assert ok, failures


def test_6_analytic_oracle():
    table = euler_q_recurrence(10)
    worst = 0.0
    for z in (0.3, 0.5, 0.3 + 0.2j):
        for n in range(11):
            cfg = SeriesConfig.for_degree(z, n, 1e-11)
            value, _ = euler_series(n, cfg)
            worst = max(worst, abs(value - qrat_eval_complex(table[n], z)))
    gf1 = generating_function_check(SeriesConfig(0.3, 300), [0.5, -0.5, 0.25j, -0.25j], 20).max_abs_dev
    gf2 = generating_function_check(SeriesConfig(0.5, 300), [1], 25).max_abs_dev
    ok = worst <= 1e-9 and gf1 <= 1e-8 and gf2 <= 1e-8
    record_acceptance(
        6, "series oracle within 1e-9, generating function within 1e-8", ok,
        f"series {worst:.1e}, gf {max(gf1, gf2):.1e}",
    )
    assert ok


def test_7_denominator_structure(table30):
    bad = [n for n in range(31) if not table30[n].den.divides(denominator_bound(n))]
    ok = not bad
    record_acceptance(7, "reduced den of E_{n,q} divides prod_{k=2}^{n+1}(1+q^k), n <= 30", ok)
    assert ok, bad
