"""Exact checks of the q-Euler identities, one :class:`IdentityReport` each.

Every exact check builds its two sides along different code paths: the
closed-form table against the recurrence, or a symbolic polynomial
substitution against a direct finite sum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import comb

from .errors import ParameterError
from .exactfield import QPoly, QRat
from .padic import (
    Certificate,
    PadicEstimate,
    convergence_certificate,
    riemann_sum_mu_minus_q,
    vp,
)
from .qeuler import euler_q_closed_form_table, euler_q_polynomial, euler_q_recurrence
from .qnumbers import bracket_shift, q_bracket

__all__ = [
    "IdentityId",
    "IdentityReport",
    "check_eq6_padic",
    "check_eq9_padic",
    "check_eq12_padic",
    "check_eq13_padic",
    "check_eq14",
    "check_eq16",
    "check_eq16_1",
    "check_eq19",
    "check_eq21",
    "compare_eq19_eq21",
    "default_suite",
    "run_suite",
    "summarize",
]

_Q = QRat.q()
_TWO_Q = 1 + _Q

DEFAULT_EQ16_N_MAX = 30
DEFAULT_EQ19_N = (1, 3, 5, 7)
DEFAULT_EQ21_N = (2, 4, 6)
DEFAULT_EQ16_1_N = (1, 2, 3, 4, 5, 6, 7)
DEFAULT_M_MAX = 15
DEFAULT_EQ14_N_MAX = 50


class IdentityId(str, Enum):
    EQ9 = "EQ9"
    EQ14 = "EQ14"
    EQ16 = "EQ16"
    EQ16_1 = "EQ16_1"
    EQ19 = "EQ19"
    EQ21 = "EQ21"
    EQ6_PADIC = "EQ6_PADIC"
    EQ12_PADIC = "EQ12_PADIC"
    EQ13_PADIC = "EQ13_PADIC"


@dataclass
class IdentityReport:
    identity_id: IdentityId
    params: dict
    lhs: QRat = None
    rhs: QRat = None
    passed: bool = False
    certificate: Certificate = field(default=None, repr=False)

    @classmethod
    def exact(cls, identity_id, params, lhs, rhs):
        return cls(identity_id, params, lhs, rhs, lhs == rhs)

    @classmethod
    def padic(cls, identity_id, params, certificate):
        return cls(identity_id, params, passed=certificate.passed, certificate=certificate)

    @property
    def is_exact(self):
        return self.certificate is None

    def to_json(self):
        out = {
            "identity_id": self.identity_id.value,
            "params": dict(self.params),
            "lhs": self.lhs.to_json() if self.lhs is not None else None,
            "rhs": self.rhs.to_json() if self.rhs is not None else None,
            "pass": self.passed,
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def summarize(reports):
    reports = list(reports)
    return {"total": len(reports), "passed": sum(r.passed for r in reports)}


@lru_cache(maxsize=8)
def _recurrence_table(n_max):
    return euler_q_recurrence(n_max)


@lru_cache(maxsize=8)
def _closed_form_table(n_max):
    return euler_q_closed_form_table(n_max)


@lru_cache(maxsize=None)
def _q_power(k):
    return QRat(QPoly.monomial(k))


# ---------------------------------------------------------------------------
# exact identities


def check_eq14(n_max=DEFAULT_EQ14_N_MAX):
    """``[n+1]_q = 1 + q [n]_q``."""
    out = []
    for n in range(n_max + 1):
        lhs, rhs = bracket_shift(n)
        out.append(IdentityReport.exact(IdentityId.EQ14, {"n": n}, QRat(lhs), QRat(rhs)))
    return out


def check_eq16(n_max=DEFAULT_EQ16_N_MAX):
    """The defining recurrence, evaluated on the closed-form table."""
    table = _closed_form_table(n_max)
    out = []
    for n in range(n_max + 1):
        acc = QRat(0)
        for l in range(n + 1):
            acc = acc + comb(n, l) * _q_power(l) * table[l]
        lhs = _Q * acc + table[n]
        rhs = _TWO_Q if n == 0 else QRat(0)
        out.append(IdentityReport.exact(IdentityId.EQ16, {"n": n}, lhs, rhs))
    return out


def _integral_side(n, m):
    # q^n E_{m,q}(n) + (-1)^(n-1) E_{m,q}, the integrals read off symbolically
    table = _recurrence_table(max(m, DEFAULT_M_MAX))
    shifted = euler_q_polynomial(m, table).substitute(n)
    sign = 1 if n % 2 else -1
    return _q_power(n) * shifted + sign * table[m]


def _sum_side(n, m):
    # [2]_q sum_{l<n} (-1)^(n-1-l) q^l [l]_q^m
    acc = QPoly()
    for l in range(n):
        term = QPoly.monomial(l) * q_bracket(l) ** m
        acc = acc + term if (n - 1 - l) % 2 == 0 else acc - term
    return _TWO_Q * QRat(acc)


def _check_positive(ns):
    for n in ns:
        if not isinstance(n, int) or n < 1:
            raise ParameterError(f"n must be a positive integer, got {n!r}")


def check_eq16_1(n_list=DEFAULT_EQ16_1_N, m_max=DEFAULT_M_MAX):
    """``q^n I(f_n) + (-1)^(n-1) I(f) = [2]_q sum_{l<n} (-1)^(n-1-l) q^l f(l)``, ``f = [x]_q^m``."""
    _check_positive(n_list)
    return [
        IdentityReport.exact(
            IdentityId.EQ16_1, {"n": n, "m": m}, _integral_side(n, m), _sum_side(n, m)
        )
        for n in n_list
        for m in range(m_max + 1)
    ]


def check_eq19(m_max=DEFAULT_M_MAX, n_odd_list=DEFAULT_EQ19_N):
    """Odd ``n``: ``[2]_q sum_{l<n} (-1)^l q^l [l]_q^m = q^n E_{m,q}(n) + E_{m,q}``."""
    _check_positive(n_odd_list)
    if any(n % 2 == 0 for n in n_odd_list):
        raise ParameterError(f"EQ19 takes odd n only, got {list(n_odd_list)}")
    return [
        IdentityReport.exact(
            IdentityId.EQ19, {"n": n, "m": m}, _sum_side(n, m), _integral_side(n, m)
        )
        for n in n_odd_list
        for m in range(m_max + 1)
    ]


def check_eq21(m_max=DEFAULT_M_MAX, n_even_list=DEFAULT_EQ21_N):
    """Even ``n``: ``q^n E_{m,q}(n) - E_{m,q} = [2]_q sum_{l<n} (-1)^(l-1) q^l [l]_q^m``."""
    _check_positive(n_even_list)
    if any(n % 2 for n in n_even_list):
        raise ParameterError(f"EQ21 takes positive even n only, got {list(n_even_list)}")
    return [
        IdentityReport.exact(
            IdentityId.EQ21, {"n": n, "m": m}, _integral_side(n, m), _sum_side(n, m)
        )
        for n in n_even_list
        for m in range(m_max + 1)
    ]


def compare_eq19_eq21(m_max=DEFAULT_M_MAX, pairs=((1, 2), (3, 4), (5, 6))):
    """Rows ``(m, n_odd, odd-case sum, n_even, even-case sum)`` for side-by-side reading."""
    rows = []
    for n_odd, n_even in pairs:
        for m in range(m_max + 1):
            rows.append((m, n_odd, _sum_side(n_odd, m), n_even, _sum_side(n_even, m)))
    return rows


# ---------------------------------------------------------------------------
# p-adic checks


def _ctx_params(ctx, **extra):
    q = ctx.q_value
    return {"p": ctx.p, "q_num": q.numerator, "q_den": q.denominator, "N_max": ctx.n_max, **extra}


def check_eq9_padic(ctx, m_max):
    """``q I(f_1) + I(f) = [2]_q f(0)`` at finite level, ``f = [x]_q^m``."""
    q = ctx.q_value
    out = []
    for m in range(m_max + 1):
        target = (1 + q) * (1 if m == 0 else 0)
        estimates = []
        for n in range(1, ctx.n_max + 1):
            s = q * riemann_sum_mu_minus_q(ctx, n, m, 1) + riemann_sum_mu_minus_q(ctx, n, m, 0)
            estimates.append(PadicEstimate(n, s, target, vp(s - target, ctx.p)))
        cert = Certificate(ctx.p, q, m, 0, "fermionic", tuple(estimates))
        out.append(IdentityReport.padic(IdentityId.EQ9, _ctx_params(ctx, m=m), cert))
    return out


def check_eq6_padic(ctx, m_max, x0_max):
    """Bosonic sums converge to Carlitz's ``beta_{m,q}(x0)``."""
    return [
        IdentityReport.padic(
            IdentityId.EQ6_PADIC,
            _ctx_params(ctx, m=m, x0=x0),
            convergence_certificate(ctx, m, x0, measure="bosonic"),
        )
        for m in range(m_max + 1)
        for x0 in range(x0_max + 1)
    ]


def check_eq12_padic(ctx, m_max):
    """Fermionic sums of ``[x]_q^m`` converge to ``E_{m,q}``."""
    return [
        IdentityReport.padic(
            IdentityId.EQ12_PADIC,
            _ctx_params(ctx, m=m, x0=0),
            convergence_certificate(ctx, m, 0, measure="fermionic"),
        )
        for m in range(m_max + 1)
    ]


def check_eq13_padic(ctx, m_max, shifts=(1,)):
    """Fermionic sums of ``[x + x0]_q^m`` converge to ``E_{m,q}(x0)``."""
    return [
        IdentityReport.padic(
            IdentityId.EQ13_PADIC,
            _ctx_params(ctx, m=m, x0=x0),
            convergence_certificate(ctx, m, x0, measure="fermionic"),
        )
        for m in range(m_max + 1)
        for x0 in shifts
    ]


# ---------------------------------------------------------------------------
# suites

SUITES = ("eq14", "eq16", "eq19", "eq21", "eq16-1", "all")


def run_suite(name, n_max=None, m_max=None, n_list=None):
    """Run a named exact suite; ``n_max`` / ``n_list`` select the ``n`` values."""
    if name not in SUITES:
        raise ParameterError(f"unknown suite {name!r}")
    m = DEFAULT_M_MAX if m_max is None else m_max
    if name == "all":
        if n_max is not None or m_max is not None or n_list is not None:
            return [
                r
                for s in SUITES[:-1]
                for r in run_suite(s, n_max=n_max, m_max=m_max, n_list=n_list)
            ]
        return default_suite()
    if name == "eq14":
        return check_eq14(DEFAULT_EQ14_N_MAX if n_max is None else n_max)
    if name == "eq16":
        return check_eq16(DEFAULT_EQ16_N_MAX if n_max is None else n_max)
    if name == "eq19":
        ns = n_list or (DEFAULT_EQ19_N if n_max is None else tuple(range(1, n_max + 1, 2)))
        return check_eq19(m, ns)
    if name == "eq21":
        ns = n_list or (DEFAULT_EQ21_N if n_max is None else tuple(range(2, n_max + 1, 2)))
        return check_eq21(m, ns)
    ns = n_list or (DEFAULT_EQ16_1_N if n_max is None else tuple(range(1, n_max + 1)))
    return check_eq16_1(ns, m)


def default_suite():
    return (
        check_eq14()
        + check_eq16()
        + check_eq19()
        + check_eq21()
        + check_eq16_1()
    )
