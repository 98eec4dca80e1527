"""q-integers and the classical Euler numbers they deform into."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exactfield import QPoly, QRat

__all__ = [
    "ClassicalEulerTable",
    "bracket_shift",
    "classical_euler",
    "q_bracket",
    "q_bracket_neg",
]


@lru_cache(maxsize=None)
def q_bracket(n):
    """``[n]_q = 1 + q + ... + q^(n-1)`` as a polynomial; ``[0]_q = 0``."""
    if n < 0:
        raise ValueError("q_bracket takes a nonnegative integer")
    return QPoly([1] * n)


@lru_cache(maxsize=None)
def q_bracket_neg(n):
    """``[n]_{-q} = 1 - q + q^2 - ... + (-1)^(n-1) q^(n-1)``."""
    if n < 0:
        raise ValueError("q_bracket_neg takes a nonnegative integer")
    return QRat(QPoly([(-1) ** i for i in range(n)]))


def bracket_shift(n):
    """Both sides of ``[n+1]_q = 1 + q [n]_q``, for the caller to compare."""
    return q_bracket(n + 1), QPoly((1,)) + QPoly((0, 1)) * q_bracket(n)


@dataclass(frozen=True)
class ClassicalEulerTable:
    """Euler numbers ``E_n = E_n(0)``, the coefficients of ``2/(e^t + 1)``."""

    values: tuple

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    @property
    def n_max(self):
        return len(self.values) - 1


def classical_euler(n_max):
    """Solve ``(E + 1)^n + E_n = 0`` for ``n >= 1`` with ``E_0 = 1``."""
    vals = [Fraction(1)]
    for n in range(1, n_max + 1):
        s = sum(comb(n, l) * vals[l] for l in range(n))
        vals.append(-s / 2)
    return ClassicalEulerTable(tuple(vals))
