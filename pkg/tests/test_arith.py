from fractions import Fraction
from math import comb

import pytest

from multicover.arith import (
    bernoulli,
    divisor_sum,
    double_factorial,
    format_rational,
    parse_rational,
    to_decimal,
)


def akiyama_tanigawa(n):
    # second-convention Bernoulli numbers (B_1 = +1/2); even indices agree
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return out


@pytest.mark.parametrize("n, expected", [(0, Fraction(1)), (1, Fraction(-1, 2)),
                                         (2, Fraction(1, 6)), (4, Fraction(-1, 30))])
def test_bernoulli_values(n, expected):
    assert bernoulli(n) == expected


def test_bernoulli_recurrence_up_to_40():
    for n in range(1, 41):
        assert sum(comb(n + 1, k) * bernoulli(k) for k in range(n + 1)) == 0


def test_bernoulli_matches_akiyama_tanigawa():
    ref = akiyama_tanigawa(40)
    for n in range(0, 41, 2):
        assert bernoulli(n) == ref[n]


def test_bernoulli_rejects_negative():
    with pytest.raises(ValueError):
        bernoulli(-1)


def _brute_sigma(d):
    return sum(i for i in range(1, d + 1) if d % i == 0)


@pytest.mark.parametrize("d, expected", [(1, 1), (6, 12), (12, 28)])
def test_divisor_sum_values(d, expected):
    assert divisor_sum(d) == expected
    assert divisor_sum(d).denominator == 1


def test_divisor_sum_primes_and_multiplicativity():
    from math import gcd

    for p in (2, 3, 5, 7, 11, 13, 97):
        assert divisor_sum(p) == p + 1
    for a in range(1, 101):
        assert divisor_sum(a) == _brute_sigma(a)
        for b in range(1, 101, 7):
            if gcd(a, b) == 1:
                assert divisor_sum(a * b) == divisor_sum(a) * divisor_sum(b)


def test_divisor_sum_rejects_zero():
    with pytest.raises(ValueError):
        divisor_sum(0)


@pytest.mark.parametrize("n, expected", [(1, 1), (3, 3), (7, 105)])
def test_double_factorial(n, expected):
    assert double_factorial(n) == expected


@pytest.mark.parametrize("n", [0, 2, 8, -1])
def test_double_factorial_rejects_even(n):
    with pytest.raises(ValueError):
        double_factorial(n)


def test_rational_round_trips():
    for s, canon in [("-11/720", "-11/720"), ("6/4", "3/2"), ("5", "5"), ("0/7", "0"),
                     ("3/-1", None), ("4/1", "4"), ("−1/2", "-1/2")]:
        if canon is None:
            with pytest.raises(ValueError):
                parse_rational(s)
            continue
        x = parse_rational(s)
        assert format_rational(x) == canon
        assert parse_rational(format_rational(x)) == x
    a = Fraction(7, 13)
    assert a * (1 / a) == 1


@pytest.mark.parametrize("bad", ["1/0", "1.5", "", "a/b", "1//2"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_to_decimal():
    assert to_decimal(Fraction(1, 3), 5) == "0.33333"


def test_bernoulli_memo_is_thread_safe():
    from concurrent.futures import ThreadPoolExecutor

    from multicover import arith

    with arith._BERNOULLI_LOCK:
        del arith._BERNOULLI[1:]
    with ThreadPoolExecutor(8) as pool:
        got = list(pool.map(bernoulli, [30, 12, 44, 2, 60, 31] * 4))
    ref = akiyama_tanigawa(60)
    for n, v in zip([30, 12, 44, 2, 60, 31] * 4, got):
        assert v == (ref[n] if n != 1 else -ref[n])
