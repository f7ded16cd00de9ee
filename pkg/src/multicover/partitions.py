"""Integer partitions and their automorphism orders."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator

__all__ = ["Partition", "enumerate_partitions", "aut_order"]


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive parts; ``()`` partitions 0."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def _decreasing(h: int, largest: int) -> Iterator[tuple[int, ...]]:
    if h == 0:
        yield ()
        return
    for first in range(min(h, largest), 0, -1):
        for rest in _decreasing(h - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions(h: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _decreasing(h, h))


def enumerate_partitions(h: int) -> list[Partition]:
    """All partitions of ``h`` in lexicographically decreasing order.

    ``enumerate_partitions(0)`` is ``[Partition(())]``.
    """
    if h < 0:
        raise ValueError(f"cannot partition a negative integer: {h}")
    return list(_partitions(h))


def aut_order(tau: Partition) -> int:
    """|Aut_tau| = prod over part values v of (multiplicity of v)!."""
    return prod(factorial(m) for m in Counter(tau.parts).values())
