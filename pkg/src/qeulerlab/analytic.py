"""Complex-``q`` series oracle for ``E_{n,q}`` (``|q| < 1``).

``E_{n,q}(x) = [2]_q sum_{m >= 0} (-1)^m q^m [m + x]_q^n`` is summed in double
precision up to a truncation ``M`` chosen from an explicit tail bound.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import ConfigurationError, DomainError
from .exactfield import qrat_eval_complex
from .qeuler import euler_q_recurrence

__all__ = [
    "GeneratingFunctionReport",
    "SeriesConfig",
    "euler_series",
    "generating_function_check",
    "minimal_terms",
    "tail_bound",
]


def tail_bound(q_abs, n, terms):
    """Upper bound on ``|sum_{m > terms} ...|`` using ``|[m]_q| <= 1/(1 - |q|)``."""
    r = 1.0 / (1.0 - q_abs)
    return (1.0 + q_abs) * r**n * q_abs ** (terms + 1) * r


def minimal_terms(q_abs, n, tolerance):
    """Smallest truncation whose tail bound is within ``tolerance``."""
    if q_abs == 0:
        return 0
    r = 1.0 / (1.0 - q_abs)
    # (1+|q|) r^(n+1) |q|^(M+1) <= tol
    need = math.log(tolerance / ((1.0 + q_abs) * r ** (n + 1))) / math.log(q_abs) - 1
    m = max(0, math.ceil(need))
    while m > 0 and tail_bound(q_abs, n, m - 1) <= tolerance:
        m -= 1
    while tail_bound(q_abs, n, m) > tolerance:
        m += 1
    return m


@dataclass(frozen=True)
class SeriesConfig:
    q: complex
    terms: int
    tolerance: float = math.inf

    def __post_init__(self):
        object.__setattr__(self, "q", complex(self.q))
        if not abs(self.q) < 1:
            raise DomainError(f"|q| must be below 1, got |q| = {abs(self.q)}")
        if self.terms < 1:
            raise DomainError("truncation must be a positive integer")
        if not self.tolerance > 0:
            raise DomainError("tolerance must be positive")

    @classmethod
    def for_degree(cls, q, n, tolerance):
        """Config whose truncation meets ``tolerance`` for every degree up to ``n``."""
        return cls(q, max(1, minimal_terms(abs(complex(q)), n, tolerance)), tolerance)

    def tail(self, n):
        return tail_bound(abs(self.q), n, self.terms)


def euler_series(n, cfg, x=0):
    """Truncated series value of ``E_{n,q}(x)``; returns ``(value, tail_bound)``.

    Raises :class:`ConfigurationError` when the tail bound for ``cfg.terms``
    exceeds ``cfg.tolerance``.
    """
    tail = cfg.tail(n)
    if tail > cfg.tolerance:
        need = minimal_terms(abs(cfg.q), n, cfg.tolerance)
        raise ConfigurationError(
            f"tail bound {tail:.3e} exceeds tolerance {cfg.tolerance:.3e}; use at least {need} terms",
            minimal_terms=need,
        )
    q = cfg.q
    # [m + x]_q for m = 0, then [k + 1] = 1 + q [k]
    bracket = 0j
    for _ in range(x):
        bracket = 1 + q * bracket
    total = 0j
    weight = 1 + 0j
    for _ in range(cfg.terms + 1):
        total += weight * bracket**n
        weight *= -q
        bracket = 1 + q * bracket
    return (1 + q) * total, tail


@dataclass
class GeneratingFunctionReport:
    q: complex
    n_max: int
    terms: int
    deviations: list = field(default_factory=list)

    @property
    def max_abs_dev(self):
        return max(self.deviations, default=0.0)

    def to_json(self):
        return {
            "q": [self.q.real, self.q.imag],
            "n_max": self.n_max,
            "M": self.terms,
            "max_abs_dev": self.max_abs_dev,
        }


def generating_function_check(cfg, t_points, n_max):
    """Compare both sides of the exponential generating function at each ``t``.

    Left: ``[2]_q sum_{m <= M} (-1)^m q^m exp([m]_q t)``.  Right: the Taylor
    polynomial ``sum_{n <= n_max} E_{n,q} t^n / n!`` with ``E_{n,q}`` exact
    and evaluated at ``q``.
    """
    q = cfg.q
    table = euler_q_recurrence(n_max)
    coeffs = [qrat_eval_complex(v, q) / math.factorial(n) for n, v in enumerate(table)]
    report = GeneratingFunctionReport(q, n_max, cfg.terms)
    for t in t_points:
        t = complex(t)
        lhs = 0j
        weight = 1 + 0j
        bracket = 0j
        for _ in range(cfg.terms + 1):
            lhs += weight * cmath.exp(bracket * t)
            weight *= -q
            bracket = 1 + q * bracket
        lhs *= 1 + q
        rhs = 0j
        for c in reversed(coeffs):
            rhs = rhs * t + c
        report.deviations.append(abs(lhs - rhs))
    return report
