"""Exact rational scalars and the number-theoretic helpers the formulas use.

Rationals are plain :class:`fractions.Fraction` values. They are always kept
in lowest terms with a positive denominator, so no wrapper type is needed.
"""
from __future__ import annotations

import re
import threading
from fractions import Fraction
from math import comb

__all__ = [
    "Rational",
    "bernoulli",
    "divisor_sum",
    "double_factorial",
    "format_rational",
    "parse_rational",
    "to_decimal",
]

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")

# B_0, B_1, ... with B_1 = -1/2; grown on demand under the lock.
_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Return the Bernoulli number B_n (convention B_1 = -1/2).

    Computed from ``sum_{k=0}^{n} binom(n+1, k) B_k = 0`` with a shared
    memo table.
    """
    if n < 0:
        raise ValueError(f"bernoulli index must be >= 0, got {n}")
    if n < len(_BERNOULLI):
        return _BERNOULLI[n]
    with _BERNOULLI_LOCK:
        table = _BERNOULLI
        for m in range(len(table), n + 1):
            if m > 1 and m % 2 == 1:
                table.append(Fraction(0))
                continue
            s = sum((comb(m + 1, k) * table[k] for k in range(m)), Fraction(0))
            table.append(-s / (m + 1))
        return table[n]


def divisor_sum(d: int) -> Fraction:
    """sigma(d), the sum of the positive divisors of ``d``."""
    if d < 1:
        raise ValueError(f"divisor_sum needs d >= 1, got {d}")
    total = 0
    i = 1
    while i * i <= d:
        if d % i == 0:
            total += i
            j = d // i
            if j != i:
                total += j
        i += 1
    return Fraction(total)


def double_factorial(n: int) -> int:
    """n!! for odd positive n."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"double_factorial needs an odd n >= 1, got {n}")
    out = 1
    for k in range(n, 0, -2):
        out *= k
    return out


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; non-reduced input is normalized.

    Raises ValueError on anything else, including a zero denominator.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational string: {text!r}")
    m = _RATIONAL_RE.match(text.replace("−", "-"))
    if m is None:
        raise ValueError(f"not a rational string: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction | int) -> str:
    """Canonical ``"p/q"`` form, or ``"p"`` when q == 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def to_decimal(x: Fraction, digits: int) -> str:
    """Approximate decimal rendering with ``digits`` significant digits."""
    from decimal import Decimal, localcontext

    with localcontext() as ctx:
        ctx.prec = max(1, digits)
        return str(Decimal(x.numerator) / Decimal(x.denominator))
