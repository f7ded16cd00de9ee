"""Degenerate contributions of a fixed curve to higher-genus invariants.

A curve of genus ``g`` with anticanonical degree ``k = -K_X . beta``
contributes ``C_g(h, X, beta)`` to the genus ``g + h`` invariant. Two
independent evaluations are provided:

* :func:`contribution_series` -- the t^(2h) coefficient of
  ``S(t)^(2g - 2 + k)`` with ``S(t) = sin(t/2)/(t/2)``;
* :func:`contribution_partition_sum` -- a sum over partitions of ``h``
  weighted by powers of the normal-bundle degree ``2 - 2g - k``.

They share nothing except rational arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .arith import divisor_sum
from .hodge import alpha
from .partitions import aut_order, enumerate_partitions
from .series import EvenSeries, int_pow, sine_ratio

__all__ = [
    "GeometrySignature",
    "ContributionValue",
    "MODELS",
    "contribution_series",
    "contribution_partition_sum",
    "contribution_degree",
]

MODELS = ("geometric", "mtheory")


@dataclass(frozen=True)
class GeometrySignature:
    """Curve genus and anticanonical degree of its class (0 for Calabi-Yau)."""

    curve_genus: int
    anti_k: int = 0

    def __post_init__(self):
        if self.curve_genus < 0:
            raise ValueError(f"curve genus must be >= 0, got {self.curve_genus}")
        if self.anti_k < 0:
            raise ValueError(f"anti_k = -K_X.beta must be >= 0, got {self.anti_k}")

    @property
    def exponent(self) -> int:
        """Power of S(t) in the generating series: 2g - 2 + anti_k."""
        return 2 * self.curve_genus - 2 + self.anti_k

    @property
    def normal_degree(self) -> int:
        """Degree of the conormal bundle on the curve: 2 - 2g - anti_k."""
        return 2 - 2 * self.curve_genus - self.anti_k


@dataclass(frozen=True)
class ContributionValue:
    value: Optional[Fraction]
    defined: bool = True

    def __post_init__(self):
        if self.defined != (self.value is not None):
            raise ValueError("value must be present exactly when defined")

    @classmethod
    def undefined(cls) -> "ContributionValue":
        return cls(None, False)


@lru_cache(maxsize=256)
def _sine_power(exponent: int, order: int) -> EvenSeries:
    return int_pow(sine_ratio(order), exponent)


def contribution_series(sig: GeometrySignature, order: int) -> EvenSeries:
    """Generating series sum_h C_g(h, X, beta) t^(2h), truncated at ``order``."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    return _sine_power(sig.exponent, order)


def contribution_partition_sum(sig: GeometrySignature, h: int) -> Fraction:
    """C_g(h, X, beta) as a sum over partitions tau of h.

    Each tau = (h_1, ..., h_l) contributes
    ``(2 - 2g - k)^l / |Aut_tau| * prod_i alpha(h_i)``.
    """
    if h < 0:
        raise ValueError(f"h must be >= 0, got {h}")
    c1 = sig.normal_degree
    total = Fraction(0)
    for tau in enumerate_partitions(h):
        term = Fraction(c1) ** tau.length / aut_order(tau)
        for part in tau:
            term *= alpha(part)
        total += term
    return total


def contribution_degree(g: int, h: int, d: int, model: str = "geometric") -> ContributionValue:
    """Contribution C_g(h, d) of d-fold covers of a genus g curve in a Calabi-Yau.

    ``model="mtheory"`` uses d^(2g+2h-3) C_g(h, 1) for every g. The geometric
    model is only defined where the contribution is known: g = 0 (all h, d),
    g = 1 (sigma(d)/d at h = 0 and 0 above), and d = 1 (all g). Elsewhere the
    result carries ``defined=False``.
    """
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if g < 0 or h < 0:
        raise ValueError(f"genus and h must be >= 0, got g={g}, h={h}")
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; expected one of {MODELS}")

    if model == "mtheory":
        c = contribution_series(GeometrySignature(g), h)[h]
        return ContributionValue(Fraction(d) ** (2 * g + 2 * h - 3) * c)

    if g == 0:
        c = contribution_series(GeometrySignature(0), h)[h]
        return ContributionValue(Fraction(d) ** (2 * h - 3) * c)
    if g == 1:
        if h == 0:
            return ContributionValue(divisor_sum(d) / d)
        return ContributionValue(Fraction(0))
    if d == 1:
        return ContributionValue(contribution_series(GeometrySignature(g), h)[h])
    return ContributionValue.undefined()
