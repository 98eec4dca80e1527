"""Finite Riemann sums for the bosonic and fermionic p-adic q-integrals.

Sums are exact rationals at a rational ``q`` with ``q = 1 (mod p)``.  How
close a level-``N`` sum is to the exact integral is measured by the p-adic
valuation of the difference; a :class:`Certificate` records those gaps for
``N = 1..N_max``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError
from .exactfield import qrat_eval
from .qeuler import (
    carlitz_beta,
    carlitz_beta_polynomial,
    euler_q_polynomial,
    euler_q_recurrence,
)

__all__ = [
    "Certificate",
    "PadicEstimate",
    "PrimeContext",
    "bosonic_target",
    "convergence_certificate",
    "fermionic_target",
    "gap_sequence_passes",
    "is_odd_prime",
    "riemann_sum_exponential",
    "riemann_sum_mu_minus_q",
    "riemann_sum_mu_q",
    "vp",
]

MEASURES = ("fermionic", "bosonic")


def is_odd_prime(p):
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def _vp_int(n, p):
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def vp(x, p):
    """p-adic valuation of a rational; ``math.inf`` for zero."""
    x = Fraction(x)
    if x == 0:
        return math.inf
    return _vp_int(x.numerator, p) - _vp_int(x.denominator, p)


@dataclass(frozen=True)
class PrimeContext:
    """A prime ``p`` and a rational ``q`` close enough to 1 p-adically.

    For odd ``p`` the condition ``|q - 1|_p < p^(-1/(p-1))`` is the same as
    ``v_p(q - 1) >= 1``.
    """

    p: int
    q_value: Fraction
    n_max: int = 4

    def __post_init__(self):
        object.__setattr__(self, "q_value", Fraction(self.q_value))
        if not is_odd_prime(self.p):
            raise DomainError(f"p = {self.p} is not an odd prime")
        if vp(self.q_value - 1, self.p) < 1:
            raise DomainError(f"need v_{self.p}(q - 1) >= 1, q = {self.q_value}")
        if self.n_max < 1:
            raise DomainError("n_max must be at least 1")

    def _check_level(self, n):
        if not 0 <= n <= self.n_max:
            raise DomainError(f"level {n} outside 0..{self.n_max}")


def _terms(q, count, shift):
    """Yield ``(x, q^x, [x + shift]_q)`` for ``x < count``."""
    bracket = Fraction(0)
    for _ in range(shift):
        bracket = 1 + q * bracket
    qx = Fraction(1)
    for x in range(count):
        yield x, qx, bracket
        qx *= q
        bracket = 1 + q * bracket


def riemann_sum_mu_q(ctx, n, moment, shift=0):
    """``(1/[p^N]_q) sum_{x < p^N} [x + shift]_q^m q^x`` at ``q = ctx.q_value``."""
    ctx._check_level(n)
    q = ctx.q_value
    count = ctx.p**n
    total = sum(qx * b**moment for _, qx, b in _terms(q, count, shift))
    return total * (q - 1) / (q**count - 1)


def riemann_sum_mu_minus_q(ctx, n, moment, shift=0):
    """``([2]_q / 2) sum_{x < p^N} (-1)^x q^x [x + shift]_q^m`` at ``q = ctx.q_value``."""
    ctx._check_level(n)
    q = ctx.q_value
    total = Fraction(0)
    for x, qx, b in _terms(q, ctx.p**n, shift):
        t = qx * b**moment
        total += -t if x & 1 else t
    return (1 + q) / 2 * total


def riemann_sum_exponential(ctx, n, l, measure="fermionic"):
    """Level-``N`` sum for the integrand ``q^(l x)``.

    Uses ``q^(l x) = sum_j C(l, j) (q - 1)^j [x]_q^j`` so only moment sums are
    needed.
    """
    rsum = riemann_sum_mu_minus_q if measure == "fermionic" else riemann_sum_mu_q
    q = ctx.q_value
    return sum(comb(l, j) * (q - 1) ** j * rsum(ctx, n, j) for j in range(l + 1))


def fermionic_target(ctx, moment, shift=0):
    """Exact ``E_{m,q}(shift)`` at ``q = ctx.q_value``."""
    table = euler_q_recurrence(moment)
    return qrat_eval(euler_q_polynomial(moment, table).substitute(shift), ctx.q_value)


def bosonic_target(ctx, moment, shift=0):
    """Exact ``beta_{m,q}(shift)`` at ``q = ctx.q_value``."""
    table = carlitz_beta(moment)
    return qrat_eval(carlitz_beta_polynomial(moment, table).substitute(shift), ctx.q_value)


@dataclass(frozen=True)
class PadicEstimate:
    level: int
    sum_value: Fraction
    reference: Fraction
    valuation_gap: float  # int, or math.inf when the sum is exact

    @property
    def exact(self):
        return self.valuation_gap == math.inf

    def gap_json(self):
        return "exact" if self.exact else int(self.valuation_gap)


def gap_sequence_passes(gaps, n_max):
    """Gaps must never decrease and must end at ``n_max - 1`` or more."""
    gaps = list(gaps)
    if not gaps:
        return False
    if any(b < a for a, b in zip(gaps, gaps[1:])):
        return False
    return gaps[-1] >= n_max - 1


@dataclass(frozen=True)
class Certificate:
    p: int
    q_value: Fraction
    moment: int
    shift: int
    measure: str
    estimates: tuple

    @property
    def gaps(self):
        return [e.valuation_gap for e in self.estimates]

    @property
    def passed(self):
        return gap_sequence_passes(self.gaps, len(self.estimates))

    def failure_reason(self):
        if self.passed:
            return None
        gaps = self.gaps
        for a, b in zip(gaps, gaps[1:]):
            if b < a:
                return f"valuation gap decreased from {a} to {b}"
        return f"final gap {gaps[-1]} below {len(gaps) - 1}"

    def to_json(self):
        return {
            "p": self.p,
            "q": str(self.q_value),
            "moment": self.moment,
            "shift": self.shift,
            "measure": self.measure,
            "levels": [{"N": e.level, "gap": e.gap_json()} for e in self.estimates],
            "pass": self.passed,
        }


def convergence_certificate(ctx, moment, shift=0, target=None, measure="fermionic"):
    """Valuation gaps of the level ``1..ctx.n_max`` sums against ``target``.

    ``target`` defaults to the exact integral (``E_{m,q}(shift)`` or
    ``beta_{m,q}(shift)`` at ``q``).  A failed certificate is returned, not
    raised.
    """
    if measure not in MEASURES:
        raise DomainError(f"unknown measure {measure!r}")
    if target is None:
        target = (fermionic_target if measure == "fermionic" else bosonic_target)(
            ctx, moment, shift
        )
    target = Fraction(target)
    rsum = riemann_sum_mu_minus_q if measure == "fermionic" else riemann_sum_mu_q
    estimates = []
    for n in range(1, ctx.n_max + 1):
        s = rsum(ctx, n, moment, shift)
        estimates.append(PadicEstimate(n, s, target, vp(s - target, ctx.p)))
    return Certificate(ctx.p, ctx.q_value, moment, shift, measure, tuple(estimates))
