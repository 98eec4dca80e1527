import math
from fractions import Fraction

import pytest

from qeulerlab.errors import DomainError
from qeulerlab.padic import (
    PrimeContext,
    bosonic_target,
    convergence_certificate,
    fermionic_target,
    gap_sequence_passes,
    riemann_sum_exponential,
    riemann_sum_mu_minus_q,
    riemann_sum_mu_q,
    vp,
)
from qeulerlab.verify import check_eq9_padic


def bracket(x, q):
    return (q**x - 1) / (q - 1)


def residue(x, p):
    x = Fraction(x)
    return x.numerator * pow(x.denominator, -1, p) % p


def test_vp_examples():
    assert vp(50, 5) == 2
    assert vp(Fraction(1, 5), 5) == -1
    assert vp(0, 7) == math.inf
    assert vp(Fraction(-18, 25), 3) == 2


@pytest.mark.parametrize("p, q", [(2, 3), (9, 10), (5, 7), (3, 5), (1, 2)])
def test_context_rejects_bad_inputs(p, q):
    with pytest.raises(DomainError):
        PrimeContext(p, q)


def test_context_accepts_rational_q():
    ctx = PrimeContext(5, Fraction(11, 6), 2)  # 11/6 - 1 = 5/6
    assert ctx.q_value == Fraction(11, 6)
    with pytest.raises(DomainError):
        riemann_sum_mu_q(ctx, 3, 1)


def test_bosonic_zero_moment_is_one():
    ctx = PrimeContext(5, 6, 3)
    for n in range(4):
        assert riemann_sum_mu_q(ctx, n, 0) == 1


def test_bosonic_level_one_example():
    ctx = PrimeContext(3, 4, 2)
    q = Fraction(4)
    brute = sum(bracket(x, q) ** 2 * q**x for x in range(3)) / bracket(3, q)
    assert brute == Fraction(404, 21)
    assert riemann_sum_mu_q(ctx, 1, 2) == Fraction(404, 21)


def test_fermionic_level_one_example():
    ctx = PrimeContext(5, 6, 4)
    q = Fraction(6)
    brute = (1 + q) / 2 * sum((-1) ** x * q**x * bracket(x, q) for x in range(5))
    assert brute == 1143177
    s1 = riemann_sum_mu_minus_q(ctx, 1, 1)
    assert s1 == 1143177
    e1 = fermionic_target(ctx, 1)
    assert e1 == Fraction(-6, 37)
    assert residue(s1, 5) == residue(e1, 5) == 2


def test_fermionic_zero_moment_is_the_geometric_sum():
    ctx = PrimeContext(3, 4, 4)
    q = ctx.q_value
    for n in range(1, 5):
        P = 3**n
        assert riemann_sum_mu_minus_q(ctx, n, 0) == (1 + q) / 2 * (1 + q**P) / (1 + q)
    cert = convergence_certificate(ctx, 0, target=1)
    assert cert.passed


def test_shifted_sums_use_shifted_bracket():
    ctx = PrimeContext(3, 4, 2)
    q = ctx.q_value
    brute = (1 + q) / 2 * sum((-1) ** x * q**x * bracket(x + 2, q) ** 3 for x in range(9))
    assert riemann_sum_mu_minus_q(ctx, 2, 3, 2) == brute


def test_fermionic_certificate_example():
    ctx = PrimeContext(5, 6, 5)
    cert = convergence_certificate(ctx, 1)
    gaps = cert.gaps
    assert gaps[0] >= 1
    assert all(b >= a for a, b in zip(gaps, gaps[1:]))
    assert cert.passed


def test_shifted_certificate_targets_polynomial_value():
    ctx = PrimeContext(5, 6, 4)
    cert = convergence_certificate(ctx, 1, shift=2)
    assert cert.estimates[0].reference == fermionic_target(ctx, 1, 2)
    assert cert.passed


def test_bosonic_certificate_converges_to_carlitz_beta():
    ctx = PrimeContext(5, 6, 4)
    assert bosonic_target(ctx, 1) == Fraction(-1, 7)
    cert = convergence_certificate(ctx, 1, measure="bosonic")
    assert cert.passed
    assert cert.gaps[-1] >= 3


def test_larger_q_minus_one_valuation_is_recorded():
    slow = convergence_certificate(PrimeContext(3, 4, 4), 2)
    fast = convergence_certificate(PrimeContext(3, 10, 4), 2)
    assert slow.passed and fast.passed
    print("q=4", slow.gaps, "q=10", fast.gaps)


def test_failed_certificate_is_a_report():
    ctx = PrimeContext(5, 6, 3)
    cert = convergence_certificate(ctx, 1, target=Fraction(1, 2))
    assert not cert.passed
    assert "gap" in cert.failure_reason()
    assert cert.to_json()["pass"] is False


def test_gap_rule():
    assert gap_sequence_passes([1, 2, 3, 4], 4)
    assert gap_sequence_passes([math.inf] * 4, 4)
    assert not gap_sequence_passes([1, 3, 2, 4], 4)
    assert not gap_sequence_passes([1, 1, 1, 2], 4)
    assert not gap_sequence_passes([], 4)


def test_certificate_json_schema():
    cert = convergence_certificate(PrimeContext(5, 6, 2), 1)
    data = cert.to_json()
    assert data["p"] == 5 and data["q"] == "6" and data["moment"] == 1 and data["shift"] == 0
    assert data["levels"] == [{"N": 1, "gap": 1}, {"N": 2, "gap": 2}]
    assert data["pass"] is True
    exact = convergence_certificate(PrimeContext(3, 4, 2), 0, measure="bosonic").to_json()
    assert exact["levels"][0]["gap"] == "exact"


@pytest.mark.parametrize("p, q", [(3, 4), (5, 6)])
@pytest.mark.parametrize("m", range(5))
def test_translation_identity_at_finite_level(p, q, m):
    ctx = PrimeContext(p, q, 4)
    eq9 = check_eq9_padic(ctx, m)[-1].certificate
    cert = convergence_certificate(ctx, m)
    for n in range(4):
        assert eq9.gaps[n] >= cert.gaps[n]


@pytest.mark.parametrize("l", range(6))
def test_exponential_integrand_matches_kernel(l):
    ctx = PrimeContext(3, 4, 4)
    q = ctx.q_value
    kernel = (1 + q) / (1 + q ** (l + 1))
    gaps = []
    for n in range(1, 5):
        s = riemann_sum_exponential(ctx, n, l)
        direct = (1 + q) / 2 * sum((-1) ** x * q ** ((l + 1) * x) for x in range(3**n))
        assert s == direct
        gaps.append(vp(s - kernel, 3))
    assert gap_sequence_passes(gaps, 4)
