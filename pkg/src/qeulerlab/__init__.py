"""Exact q-Euler numbers and polynomials over Q(q)."""

from .exactfield import QPoly, QRat, qrat_eval
from .qeuler import (
    carlitz_beta,
    carlitz_q_euler,
    euler_q_closed_form,
    euler_q_polynomial,
    euler_q_recurrence,
)

__version__ = "0.1.0"

__all__ = [
    "QPoly",
    "QRat",
    "carlitz_beta",
    "carlitz_q_euler",
    "euler_q_closed_form",
    "euler_q_polynomial",
    "euler_q_recurrence",
    "qrat_eval",
]
