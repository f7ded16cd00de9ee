from fractions import Fraction
from math import factorial

import pytest

from multicover.hodge import (
    HodgeValue,
    alpha,
    alpha_via_log,
    faber_expected,
    faber_ratio_check,
    kappa_integral,
    psi_lambda_integral,
    psi_lambda_table,
)
from multicover.series import EvenSeries, int_pow, sine_ratio


@pytest.mark.parametrize("q, expected", [(1, Fraction(1, 24)), (2, Fraction(1, 2880)),
                                         (3, Fraction(1, 181440))])
def test_alpha_values(q, expected):
    assert alpha(q) == expected


def test_alpha_rejects_zero():
    with pytest.raises(ValueError):
        alpha(0)


def test_alpha_via_log_small():
    assert alpha_via_log(0) == EvenSeries([0])
    assert alpha_via_log(1) == EvenSeries([0, Fraction(1, 24)])
    assert alpha_via_log(2)[2] == alpha(2)


def test_alpha_routes_agree_to_20():
    q_series = alpha_via_log(20)
    for q in range(1, 21):
        assert alpha(q) == q_series[q]


@pytest.mark.parametrize("q, expected", [
    (2, Fraction(1, 30) / 4 / (8 * 3)),
    (3, Fraction(1, 120960)),
    (4, Fraction(1, 30) / (8 * 128 * 105)),
])
def test_kappa_integral(q, expected):
    assert kappa_integral(q) == expected


def test_kappa_rejects_small_q():
    with pytest.raises(ValueError):
        kappa_integral(1)


@pytest.mark.parametrize("q, expected", [(2, Fraction(1)), (3, Fraction(2, 3)),
                                         (10, Fraction(2**9, factorial(10)))])
def test_faber_ratio(q, expected):
    assert faber_ratio_check(q) == expected == faber_expected(q)


def test_faber_identity_to_20():
    for q in range(2, 21):
        assert alpha(q) == faber_expected(q) * kappa_integral(q)


def test_psi_lambda_spot_values():
    assert psi_lambda_integral(1, 0) == Fraction(1, 24)
    assert psi_lambda_integral(1, 1) == Fraction(1, 24)
    assert psi_lambda_integral(2, 0) == int_pow(sine_ratio(2), -1)[2]
    # i = h: the pure psi integral over M_{h,1} is 1/(24^h h!)
    for h in range(1, 6):
        assert psi_lambda_integral(h, h) == Fraction(1, 24**h * factorial(h))


def test_psi_lambda_bounds():
    for bad in [(0, 0), (2, 3), (2, -1)]:
        with pytest.raises(ValueError):
            psi_lambda_integral(*bad)


def test_psi_lambda_generating_identity():
    table = psi_lambda_table(8)
    for k in range(4):
        target = int_pow(sine_ratio(8), -k - 1)
        for h in range(1, 9):
            assert sum(k**i * table[(h, i)] for i in range(h + 1)) == target[h]


def test_hodge_value_reproducible():
    v = HodgeValue.compute("psi_lambda", 2, 1)
    assert v.value == psi_lambda_integral(2, 1)
    assert HodgeValue.compute("alpha", 3).value == alpha(3)
