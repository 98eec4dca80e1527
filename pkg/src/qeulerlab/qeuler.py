"""q-Euler numbers and polynomials, with Carlitz's objects for comparison.

The numbers ``E_{n,q}`` are the moments of the fermionic q-measure against
``[x]_q^n``.  They are built two independent ways:

* :func:`euler_q_recurrence` solves the umbral recurrence
  ``q (q E + 1)^n + E_n = [2]_q`` if ``n == 0`` else ``0``;
* :func:`euler_q_closed_form` sums the moment kernel
  ``[2]_q / (1 + q^(l+1))`` against the binomial expansion of ``[x]_q^n``.

Polynomials in ``x`` are kept symbolically in the basis ``X^i Q^j`` where
``X`` stands for ``[x]_q`` and ``Q`` for ``q^x`` (see :class:`QXPoly`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError, InvariantError, ParameterError, PoleError
from .exactfield import QPoly, QRat, qrat_eval
from .qnumbers import q_bracket

__all__ = [
    "CarlitzBernoulliTable",
    "CarlitzQEulerTable",
    "QEulerTable",
    "QXPoly",
    "carlitz_beta",
    "carlitz_beta_polynomial",
    "carlitz_q_euler",
    "denominator_bound",
    "euler_q_at",
    "euler_q_closed_form",
    "euler_q_closed_form_table",
    "euler_q_limit",
    "euler_q_polynomial",
    "euler_q_recurrence",
]

_Q = QRat.q()
_ONE = QRat(1)


def _q_power(k):
    return QRat(QPoly.monomial(k))


class _Table:
    """Immutable indexed sequence; asking past the end is an error."""

    name = "table"

    def __getitem__(self, n):
        if not isinstance(n, int) or n < 0 or n >= len(self.values):
            raise ParameterError(
                f"{self.name} covers indices 0..{len(self.values) - 1}, got {n!r}"
            )
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def n_max(self):
        return len(self.values) - 1


@dataclass(frozen=True, eq=False)
class QEulerTable(_Table):
    values: tuple
    construction_tag: str

    name = "QEulerTable"

    def __post_init__(self):
        if self.construction_tag not in ("recurrence", "closed_form"):
            raise ParameterError(f"unknown construction {self.construction_tag!r}")


@dataclass(frozen=True, eq=False)
class CarlitzBernoulliTable(_Table):
    values: tuple

    name = "CarlitzBernoulliTable"


@dataclass(frozen=True, eq=False)
class CarlitzQEulerTable(_Table):
    u: Fraction
    values: tuple

    name = "CarlitzQEulerTable"


class QXPoly:
    """Polynomial in ``X = [x]_q`` and ``Q = q^x`` with coefficients in Q(q).

    ``terms`` maps ``(i, j)`` to the coefficient of ``X^i Q^j``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = c if isinstance(c, QRat) else QRat(c)
            if c:
                clean[(int(i), int(j))] = c
        self.terms = clean

    def coefficient(self, i, j):
        return self.terms.get((i, j), QRat(0))

    def substitute(self, x):
        """Value at a nonnegative integer ``x`` (``X -> [x]_q``, ``Q -> q^x``)."""
        if not isinstance(x, int) or x < 0:
            raise DomainError("substitution needs a nonnegative integer x")
        bx = QRat(q_bracket(x))
        out = QRat(0)
        for (i, j), c in sorted(self.terms.items()):
            out = out + c * bx**i * _q_power(x * j)
        return out

    def __eq__(self, other):
        if not isinstance(other, QXPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def human(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("X" if i == 1 else f"X^{i}"),
                    "" if j == 0 else ("Q" if j == 1 else f"Q^{j}"),
                ) if s
            )
            coeff = c.human()
            if not mono:
                parts.append(f"({coeff})")
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({coeff})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"QXPoly({self.human()!r})"


# ---------------------------------------------------------------------------
# q-Euler numbers


def euler_q_recurrence(n_max):
    """``E_{0,q}, ..., E_{n_max,q}`` from the umbral recurrence.

    For ``n >= 1`` the ``l = n`` term is moved to the left:
    ``E_n (1 + q^(n+1)) = -q sum_{l<n} C(n,l) q^l E_l``.  The divisor is never
    the zero polynomial.
    """
    if n_max < 0:
        raise ParameterError("n_max must be nonnegative")
    vals = [_ONE]
    for n in range(1, n_max + 1):
        acc = QRat(0)
        for l in range(n):
            acc = acc + comb(n, l) * _q_power(l) * vals[l]
        vals.append(-_Q * acc / (1 + _q_power(n + 1)))
    return QEulerTable(tuple(vals), "recurrence")


def _kernel_sum(n, x=0):
    # sum_l C(n,l) (-1)^l q^(l x) / (1 + q^(l+1))
    acc = QRat(0)
    for l in range(n + 1):
        term = QRat(QPoly.monomial(l * x, (-1) ** l * comb(n, l)), QPoly.monomial(l + 1) + 1)
        acc = acc + term
    return acc


def euler_q_at(n, x=0):
    """``E_{n,q}(x)`` at an integer ``x`` straight from the moment kernel.

    ``[2]_q (1 - q)^(-n) sum_l C(n,l) (-1)^l q^(lx) / (1 + q^(l+1))``.
    The factor ``(1 - q)^n`` must cancel completely; if it does not,
    :class:`InvariantError` is raised.
    """
    if n < 0 or x < 0:
        raise ParameterError("n and x must be nonnegative")
    value = (1 + _Q) * _kernel_sum(n, x) / (1 - _Q) ** n
    if value.denominator_vanishes_at(1):
        raise InvariantError(f"(1 - q)^{n} did not cancel in the closed form at n = {n}")
    return value


def euler_q_closed_form(n):
    return euler_q_at(n, 0)


def euler_q_closed_form_table(n_max):
    return QEulerTable(tuple(euler_q_closed_form(n) for n in range(n_max + 1)), "closed_form")


def euler_q_polynomial(n, table):
    """``E_{n,q}(x) = sum_l C(n,l) Q^l X^(n-l) E_{l,q}``.

    Comes from ``[x + y]_q = [x]_q + q^x [y]_q`` under the integral in ``y``.
    """
    if n > table.n_max:
        raise ParameterError(f"table covers 0..{table.n_max}, need {n}")
    return QXPoly({(n - l, l): comb(n, l) * table[l] for l in range(n + 1)})


def euler_q_limit(table):
    """Entrywise value at ``q = 1``; these are the classical Euler numbers."""
    out = []
    for n, v in enumerate(table.values):
        try:
            out.append(qrat_eval(v, 1))
        except PoleError as exc:
            raise InvariantError(f"E_{n},q has a pole at q = 1") from exc
    return out


def denominator_bound(n):
    """``prod_{k=2}^{n+1} (1 + q^k)``, a multiple of every reduced denominator of ``E_{n,q}``."""
    out = QPoly((1,))
    for k in range(2, n + 2):
        out = out * (QPoly.monomial(k) + 1)
    return out


# ---------------------------------------------------------------------------
# Carlitz comparison objects


def carlitz_beta(k_max):
    """Carlitz q-Bernoulli numbers from ``q (q b + 1)^k - b_k = [k == 1]``.

    ``b_1 = -1/(1 + q)``; for ``k > 1``
    ``b_k (q^(k+1) - 1) = -q sum_{l<k} C(k,l) q^l b_l``.
    """
    if k_max < 0:
        raise ParameterError("k_max must be nonnegative")
    vals = [_ONE]
    for k in range(1, k_max + 1):
        acc = QRat(0)
        for l in range(k):
            acc = acc + comb(k, l) * _q_power(l) * vals[l]
        rhs = 1 - _Q * acc if k == 1 else -_Q * acc
        vals.append(rhs / (_q_power(k + 1) - 1))
    return CarlitzBernoulliTable(tuple(vals))


def carlitz_beta_polynomial(m, table):
    if m > table.n_max:
        raise ParameterError(f"table covers 0..{table.n_max}, need {m}")
    return QXPoly({(m - l, l): comb(m, l) * table[l] for l in range(m + 1)})


def carlitz_q_euler(u, k_max):
    """Carlitz's ``H_k(u; q)`` from ``(q H + 1)^k = u H_k`` for ``k >= 1``."""
    u = Fraction(u)
    vals = [_ONE]
    for k in range(1, k_max + 1):
        divisor = u - _q_power(k)
        if divisor.is_zero():
            raise DomainError(f"u - q^{k} vanishes identically")
        acc = QRat(0)
        for l in range(k):
            acc = acc + comb(k, l) * _q_power(l) * vals[l]
        vals.append(acc / divisor)
    return CarlitzQEulerTable(u, tuple(vals))
