from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qeulerlab.exactfield import QPoly, QRat

Q = QRat.q()

small_coeff = st.integers(min_value=-9, max_value=9)
small_poly = st.lists(small_coeff, min_size=0, max_size=6).map(QPoly)
nonzero_poly = small_poly.filter(lambda p: not p.is_zero())
small_qrat = st.builds(QRat, small_poly, nonzero_poly)
nonzero_qrat = small_qrat.filter(lambda r: not r.is_zero())
small_rational = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@pytest.fixture(scope="session")
def q():
    return Q


def frac(s):
    return Fraction(s)


ACCEPTANCE_LINES = []


def record_acceptance(number, title, ok, detail=""):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
