"""Closed-form and series-extracted Hodge integral values.

Only the integral values are modelled; the tautological classes themselves
are not. Two routes to the alpha integrals are kept apart on purpose:
:func:`alpha` reads Bernoulli numbers, :func:`alpha_via_log` takes the
formal logarithm of ``(t/2)/sin(t/2)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .arith import bernoulli, double_factorial
from .series import EvenSeries, inverse, log, mul, sine_ratio

__all__ = [
    "HodgeValue",
    "alpha",
    "alpha_via_log",
    "kappa_integral",
    "faber_ratio_check",
    "faber_expected",
    "psi_lambda_integral",
    "psi_lambda_table",
]


@dataclass(frozen=True)
class HodgeValue:
    kind: str  # "alpha", "kappa_integral" or "psi_lambda"
    indices: tuple[int, ...]
    value: Fraction

    @classmethod
    def compute(cls, kind: str, *indices: int) -> "HodgeValue":
        fn = {
            "alpha": alpha,
            "kappa_integral": kappa_integral,
            "psi_lambda": psi_lambda_integral,
        }[kind]
        return cls(kind, tuple(indices), fn(*indices))


def alpha(q: int) -> Fraction:
    """alpha_q = |B_2q| / ((2q) (2q)!), the t^(2q) coefficient of log((t/2)/sin(t/2))."""
    if q < 1:
        raise ValueError(f"alpha needs q >= 1, got {q}")
    return abs(bernoulli(2 * q)) / (2 * q * factorial(2 * q))


def alpha_via_log(order: int) -> EvenSeries:
    """Q(t) = log(1 / S(t)), computed purely with series operations."""
    return log(inverse(sine_ratio(order)))


def kappa_integral(q: int) -> Fraction:
    """Faber's closed form for the lambda_q lambda_{q-1} kappa_{q-2} integral over M_q.

    Equals |B_2q| / (2q) / (2^(2q-1) (2q-1)!!).
    """
    if q < 2:
        raise ValueError(f"kappa_integral needs q >= 2, got {q}")
    return abs(bernoulli(2 * q)) / (2 * q) / (2 ** (2 * q - 1) * double_factorial(2 * q - 1))


def faber_ratio_check(q: int) -> Fraction:
    """alpha(q) / kappa_integral(q); should equal :func:`faber_expected` (q)."""
    return alpha(q) / kappa_integral(q)


def faber_expected(q: int) -> Fraction:
    """2^(q-1) / q!."""
    return Fraction(2 ** (q - 1), factorial(q))


def psi_lambda_table(max_h: int) -> dict[tuple[int, int], Fraction]:
    """All psi-lambda integrals for 1 <= h <= max_h, 0 <= i <= h.

    Uses S^(-k-1) = S^(-1) exp(k Q): the k^i part of the t^(2h) coefficient is
    the t^(2h) coefficient of S^(-1) Q^i / i!.
    """
    if max_h < 1:
        return {}
    s_inv = inverse(sine_ratio(max_h))
    q = log(s_inv)
    out: dict[tuple[int, int], Fraction] = {}
    term = s_inv  # S^(-1) Q^i / i!
    for i in range(max_h + 1):
        if i > 0:
            term = mul(term, q) * Fraction(1, i)
        for h in range(max(i, 1), max_h + 1):
            out[(h, i)] = term[h]
    return out


def psi_lambda_integral(h: int, i: int) -> Fraction:
    """Integral of psi_1^(2h-2+i) lambda_(h-i) over M_{h,1}."""
    if h < 1 or not 0 <= i <= h:
        raise ValueError(f"psi_lambda_integral needs h >= 1 and 0 <= i <= h, got ({h}, {i})")
    return psi_lambda_table(h)[(h, i)]
