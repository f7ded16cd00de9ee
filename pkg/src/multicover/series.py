"""Truncated even power series over the rationals.

An :class:`EvenSeries` of order ``T`` stores the coefficients of
``t^0, t^2, ..., t^(2T)``. Everything above ``t^(2T)`` is unknown, so every
binary operation truncates to the smaller of the two operand orders.
Internally all recurrences run in the variable ``u = t^2``.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

__all__ = [
    "EvenSeries",
    "NonUnitSeries",
    "sine_ratio",
    "mul",
    "inverse",
    "int_pow",
    "exp",
    "log",
    "scale_variable",
]


class NonUnitSeries(ValueError):
    """Raised when a series without an invertible constant term is inverted."""


class EvenSeries:
    """Immutable series ``sum_h coeffs[h] t^(2h)`` known up to ``h = order``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int | str]):
        c = tuple(Fraction(x) for x in coeffs)
        if not c:
            raise ValueError("an EvenSeries needs at least the constant term")
        self._coeffs = c

    @classmethod
    def constant(cls, value: Fraction | int, order: int) -> "EvenSeries":
        return cls([value] + [0] * order)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, h: int) -> Fraction:
        if h < 0 or h > self.order:
            raise IndexError(f"coefficient t^{2 * h} outside order {self.order}")
        return self._coeffs[h]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EvenSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self._coeffs)
        return f"EvenSeries([{body}])"

    def truncate(self, order: int) -> "EvenSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return EvenSeries(self._coeffs[: order + 1])

    def __neg__(self) -> "EvenSeries":
        return EvenSeries(-c for c in self._coeffs)

    def __add__(self, other: "EvenSeries | Fraction | int") -> "EvenSeries":
        if isinstance(other, EvenSeries):
            n = min(self.order, other.order) + 1
            return EvenSeries(a + b for a, b in zip(self._coeffs[:n], other._coeffs[:n]))
        if isinstance(other, (int, Fraction)):
            return EvenSeries((self._coeffs[0] + other,) + self._coeffs[1:])
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: "EvenSeries | Fraction | int") -> "EvenSeries":
        return self + (-other)

    def __rsub__(self, other: "Fraction | int") -> "EvenSeries":
        return (-self) + other

    def __mul__(self, other: "EvenSeries | Fraction | int") -> "EvenSeries":
        if isinstance(other, EvenSeries):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return EvenSeries(c * other for c in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "EvenSeries":
        return int_pow(self, m)


def sine_ratio(order: int) -> EvenSeries:
    """S(t) = sin(t/2) / (t/2); the t^(2h) coefficient is (-1)^h / (4^h (2h+1)!)."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    return EvenSeries(
        Fraction((-1) ** h, 4**h * factorial(2 * h + 1)) for h in range(order + 1)
    )


def _convolve(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * n
    for i in range(n):
        ai = a[i]
        if not ai:
            continue
        for j in range(n - i):
            if b[j]:
                out[i + j] += ai * b[j]
    return out


def mul(a: EvenSeries, b: EvenSeries) -> EvenSeries:
    """Cauchy product truncated at ``min(a.order, b.order)``."""
    n = min(a.order, b.order) + 1
    return EvenSeries(_convolve(a.coeffs, b.coeffs, n))


def inverse(a: EvenSeries) -> EvenSeries:
    """Multiplicative inverse; the constant term must be nonzero."""
    c = a.coeffs
    if c[0] == 0:
        raise NonUnitSeries("non-unit series: constant term is 0")
    inv0 = 1 / c[0]
    out = [inv0]
    for m in range(1, len(c)):
        s = sum((c[k] * out[m - k] for k in range(1, m + 1) if c[k]), Fraction(0))
        out.append(-s * inv0)
    return EvenSeries(out)


def int_pow(a: EvenSeries, m: int) -> EvenSeries:
    """a**m by binary powering; negative m goes through :func:`inverse`."""
    if m < 0:
        a = inverse(a)
        m = -m
    result = EvenSeries.constant(1, a.order)
    base = a
    while m:
        if m & 1:
            result = mul(result, base)
        m >>= 1
        if m:
            base = mul(base, base)
    return result


def exp(a: EvenSeries) -> EvenSeries:
    """Formal exponential of a series with zero constant term.

    With ``b = exp(a)`` in ``u = t^2``, ``u b' = (u a') b`` gives
    ``n b_n = sum_{k=1}^{n} k a_k b_{n-k}``.
    """
    c = a.coeffs
    if c[0] != 0:
        raise ValueError("exp needs a series with zero constant term (nonzero constant term)")
    out = [Fraction(1)]
    for n in range(1, len(c)):
        s = sum((k * c[k] * out[n - k] for k in range(1, n + 1) if c[k]), Fraction(0))
        out.append(s / n)
    return EvenSeries(out)


def log(a: EvenSeries) -> EvenSeries:
    """Formal logarithm of a series with constant term 1.

    Inverts the exp recurrence:
    ``n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}``.
    """
    c = a.coeffs
    if c[0] != 1:
        raise ValueError("log needs a series whose constant term is 1 (constant term not 1)")
    out = [Fraction(0)]
    for n in range(1, len(c)):
        s = sum((k * out[k] * c[n - k] for k in range(1, n) if out[k]), Fraction(0))
        out.append(c[n] - s / n)
    return EvenSeries(out)


def scale_variable(a: EvenSeries, d: int) -> EvenSeries:
    """Substitute t -> d t, i.e. multiply the t^(2h) coefficient by d^(2h)."""
    if d < 1:
        raise ValueError(f"scale factor must be >= 1, got {d}")
    d2 = d * d
    return EvenSeries(c * d2**h for h, c in enumerate(a.coeffs))
