import cmath

import pytest

from qeulerlab.analytic import (
    SeriesConfig,
    euler_series,
    generating_function_check,
    minimal_terms,
    tail_bound,
)
from qeulerlab.errors import ConfigurationError, DomainError
from qeulerlab.exactfield import qrat_eval_complex
from qeulerlab.qeuler import euler_q_polynomial, euler_q_recurrence

TABLE = euler_q_recurrence(15)

Q_GRID = [
    0.3, 0.5, -0.45, 0.6j, -0.6, 0.3 + 0.2j, 0.3 - 0.2j,
    0.4 * cmath.exp(1j), 0.55 * cmath.exp(2.5j), 0.2 * cmath.exp(-2j),
]


def test_zero_moment():
    value, tail = euler_series(0, SeriesConfig(0.5, 100))
    assert abs(value - 1.0) < 1e-15
    assert tail < 1e-25


def test_first_moment_real():
    value, _ = euler_series(1, SeriesConfig.for_degree(0.3, 1, 1e-12))
    assert abs(value - (-0.3 / 1.09)) <= 1e-10


@pytest.mark.parametrize("z", [0.3 + 0.2j, 0.3 - 0.2j])
def test_complex_point(z):
    for n in range(11):
        value, _ = euler_series(n, SeriesConfig.for_degree(z, n, 1e-11))
        assert abs(value - qrat_eval_complex(TABLE[n], z)) <= 1e-9


@pytest.mark.parametrize("z", Q_GRID)
def test_oracle_agreement_grid(z):
    assert abs(z) <= 0.6 + 1e-12
    for n in range(16):
        value, tail = euler_series(n, SeriesConfig.for_degree(z, n, 1e-11))
        assert tail <= 1e-11
        assert abs(value - qrat_eval_complex(TABLE[n], z)) <= 1e-9


@pytest.mark.parametrize("z", [0.5, -0.3 + 0.4j])
@pytest.mark.parametrize("n", [0, 3, 8])
def test_tail_bound_is_sound(z, n):
    for m in (10, 25, 60):
        cfg = SeriesConfig(z, m)
        v1, tail = euler_series(n, cfg)
        v2, _ = euler_series(n, SeriesConfig(z, 2 * m))
        assert abs(v1 - v2) <= tail + 1e-13


def test_shifted_series_matches_polynomial():
    z = 0.25 - 0.3j
    poly = euler_q_polynomial(4, TABLE).substitute(2)
    value, _ = euler_series(4, SeriesConfig.for_degree(z, 4, 1e-12), x=2)
    assert abs(value - qrat_eval_complex(poly, z)) <= 1e-9


def test_configuration_error_reports_minimal_terms():
    with pytest.raises(ConfigurationError) as info:
        euler_series(5, SeriesConfig(0.5, 10, 1e-9))
    need = info.value.minimal_terms
    assert tail_bound(0.5, 5, need) <= 1e-9 < tail_bound(0.5, 5, need - 1)
    euler_series(5, SeriesConfig(0.5, need, 1e-9))
    assert minimal_terms(0.5, 5, 1e-9) == need


@pytest.mark.parametrize("z", [1.0, 1.2j, -1.5])
def test_unit_circle_rejected(z):
    with pytest.raises(DomainError):
        SeriesConfig(z, 10)


def test_generating_function_at_zero():
    report = generating_function_check(SeriesConfig(0.4, 200), [0], 10)
    assert report.deviations[0] <= 1e-15


def test_generating_function_grid():
    report = generating_function_check(SeriesConfig(0.3, 300), [0.5, -0.5, 0.25j, -0.25j], 20)
    assert report.max_abs_dev <= 1e-9


def test_generating_function_larger_t():
    report = generating_function_check(SeriesConfig(0.5, 300), [1], 25)
    assert report.max_abs_dev <= 1e-8
    data = report.to_json()
    assert data == {"q": [0.5, 0.0], "n_max": 25, "M": 300, "max_abs_dev": report.max_abs_dev}
