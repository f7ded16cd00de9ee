"""Finitely supported invariant tables keyed by (genus, curve class).

Curve classes are tuples of nonnegative integers of a fixed rank, never all
zero. A table declares a genus cutoff and per-coordinate degree cutoffs;
entries outside them are rejected and missing entries mean zero.

JSON layout::

    {"rank": r, "canonical": [c_1, ..., c_r], "max_genus": G,
     "degree_cutoffs": [D_1, ..., D_r],
     "entries": [{"genus": g, "class": [b_1, ..., b_r], "value": "p/q"}, ...]}

``canonical`` is optional; when present, ``anti_k(beta) = canonical . beta``.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator, Mapping, Optional, Sequence

from .arith import format_rational, parse_rational, to_decimal

__all__ = [
    "CurveClass",
    "TableError",
    "GWTable",
    "BPSTable",
    "ETable",
    "classes_in_box",
    "divisors_of_class",
    "table_from_json",
    "table_to_json",
    "table_to_csv",
    "load_table",
    "dumps_json",
]

CurveClass = tuple[int, ...]


class TableError(ValueError):
    """Malformed, inconsistent or mismatched invariant table."""


def _check_class(beta: Sequence[int], rank: int, where: str = "") -> CurveClass:
    beta = tuple(beta)
    if len(beta) != rank:
        raise TableError(f"{where}class {list(beta)} has rank {len(beta)}, expected {rank}")
    if any(not isinstance(b, int) or isinstance(b, bool) or b < 0 for b in beta):
        raise TableError(f"{where}class {list(beta)} must have nonnegative integer degrees")
    if not any(beta):
        raise TableError(f"{where}the zero class is excluded")
    return beta


def classes_in_box(cutoffs: Sequence[int]) -> list[CurveClass]:
    """Nonzero classes with 0 <= b_i <= cutoffs[i], by total degree then lexicographically."""
    box = itertools.product(*(range(c + 1) for c in cutoffs))
    return sorted((b for b in box if any(b)), key=lambda b: (sum(b), b))


def divisors_of_class(beta: CurveClass) -> Iterator[tuple[int, CurveClass]]:
    """Pairs (d, beta / d) for every d >= 1 dividing all coordinates of beta."""
    top = max(beta)
    for d in range(1, top + 1):
        if all(b % d == 0 for b in beta):
            yield d, tuple(b // d for b in beta)


@dataclass
class _Table:
    rank: int
    max_genus: int
    degree_cutoffs: tuple[int, ...]
    entries: dict[tuple[int, CurveClass], Fraction] = field(default_factory=dict)
    canonical: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.rank < 1:
            raise TableError(f"rank must be >= 1, got {self.rank}")
        if self.max_genus < 0:
            raise TableError(f"max_genus must be >= 0, got {self.max_genus}")
        self.degree_cutoffs = tuple(self.degree_cutoffs)
        if len(self.degree_cutoffs) != self.rank:
            raise TableError(
                f"degree_cutoffs {list(self.degree_cutoffs)} do not match rank {self.rank}"
            )
        if any(c < 0 for c in self.degree_cutoffs) or not any(self.degree_cutoffs):
            raise TableError(f"degree_cutoffs {list(self.degree_cutoffs)} must be positive")
        if self.canonical is not None:
            self.canonical = tuple(self.canonical)
            if len(self.canonical) != self.rank:
                raise TableError(
                    f"canonical vector {list(self.canonical)} does not match rank {self.rank}"
                )
        clean: dict[tuple[int, CurveClass], Fraction] = {}
        for (g, beta), value in self.entries.items():
            beta = _check_class(beta, self.rank, f"entry (genus {g}): ")
            self._check_in_range(g, beta)
            clean[(g, beta)] = Fraction(value)
        self.entries = clean

    def _check_in_range(self, g: int, beta: CurveClass) -> None:
        if not 0 <= g <= self.max_genus:
            raise TableError(f"entry genus {g}, class {list(beta)}: genus outside 0..{self.max_genus}")
        if any(b > c for b, c in zip(beta, self.degree_cutoffs)):
            raise TableError(
                f"entry genus {g}, class {list(beta)}: outside degree cutoffs "
                f"{list(self.degree_cutoffs)}"
            )
        if self.canonical is not None and self.anti_k(beta) < 0:
            raise TableError(
                f"entry genus {g}, class {list(beta)}: canonical pairing {self.anti_k(beta)} < 0"
            )

    def anti_k(self, beta: CurveClass) -> int:
        if self.canonical is None:
            raise TableError("table has no canonical vector")
        return sum(c * b for c, b in zip(self.canonical, beta))

    def get(self, g: int, beta: Sequence[int]) -> Fraction:
        return self.entries.get((g, tuple(beta)), Fraction(0))

    def __getitem__(self, key: tuple[int, Sequence[int]]) -> Fraction:
        g, beta = key
        return self.get(g, beta)

    def classes(self) -> list[CurveClass]:
        return classes_in_box(self.degree_cutoffs)

    def sorted_items(self) -> list[tuple[tuple[int, CurveClass], Fraction]]:
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1]))

    def nonzero(self) -> "dict[tuple[int, CurveClass], Fraction]":
        return {k: v for k, v in self.entries.items() if v != 0}

    def same_support(self, other: "_Table") -> bool:
        """Equal as finitely supported maps (explicit zeros ignored)."""
        return self.nonzero() == other.nonzero()


class GWTable(_Table):
    """Gromov-Witten invariants N_beta^g."""


class ETable(_Table):
    """Enumerative invariants E_beta^g (one table per insertion choice)."""


class BPSTable(_Table):
    """BPS invariants n_beta^g with the list of non-integral entries."""

    @property
    def integrality_report(self) -> list[tuple[int, CurveClass]]:
        return [k for k, v in self.sorted_items() if v.denominator != 1]


def table_from_json(obj: Mapping[str, Any], cls: type = GWTable) -> _Table:
    """Build a table from the parsed JSON layout; raises TableError on bad input."""
    if not isinstance(obj, Mapping):
        raise TableError("table JSON must be an object")
    for key in ("rank", "max_genus", "degree_cutoffs", "entries"):
        if key not in obj:
            raise TableError(f"table JSON is missing {key!r}")
    rank = obj["rank"]
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise TableError(f"rank must be an integer, got {rank!r}")
    entries: dict[tuple[int, CurveClass], Fraction] = {}
    if not isinstance(obj["entries"], list):
        raise TableError("'entries' must be a list")
    for i, e in enumerate(obj["entries"]):
        where = f"entry {i}: "
        if not isinstance(e, Mapping) or not {"genus", "class", "value"} <= set(e):
            raise TableError(f"{where}needs 'genus', 'class' and 'value'")
        g = e["genus"]
        if not isinstance(g, int) or isinstance(g, bool):
            raise TableError(f"{where}genus must be an integer, got {g!r}")
        if not isinstance(e["class"], list):
            raise TableError(f"{where}class must be a list")
        beta = _check_class(e["class"], rank, where)
        try:
            value = parse_rational(e["value"])
        except ValueError as exc:
            raise TableError(f"{where}{exc}") from None
        if (g, beta) in entries:
            raise TableError(f"{where}duplicate entry for genus {g}, class {list(beta)}")
        entries[(g, beta)] = value
    return cls(
        rank=rank,
        max_genus=obj["max_genus"],
        degree_cutoffs=tuple(obj["degree_cutoffs"]),
        entries=entries,
        canonical=tuple(obj["canonical"]) if obj.get("canonical") is not None else None,
    )


def load_table(path: str, cls: type = GWTable) -> _Table:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise TableError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise TableError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None
    return table_from_json(obj, cls)


def _render(value: Fraction, decimal: Optional[int]) -> Any:
    if decimal is None:
        return format_rational(value)
    return {"exact": format_rational(value), "approx": to_decimal(value, decimal)}


def table_to_json(
    table: _Table, *, include_zeros: bool = False, decimal: Optional[int] = None
) -> dict[str, Any]:
    out: dict[str, Any] = {"rank": table.rank}
    if table.canonical is not None:
        out["canonical"] = list(table.canonical)
    out["max_genus"] = table.max_genus
    out["degree_cutoffs"] = list(table.degree_cutoffs)
    out["entries"] = [
        {"genus": g, "class": list(beta), "value": _render(v, decimal)}
        for (g, beta), v in table.sorted_items()
        if include_zeros or v != 0
    ]
    if isinstance(table, BPSTable):
        out["integrality_report"] = [
            {"genus": g, "class": list(beta), "value": format_rational(table.get(g, beta))}
            for g, beta in table.integrality_report
        ]
    return out


def table_to_csv(table: _Table, *, include_zeros: bool = False) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["genus", "class", "value"])
    for (g, beta), v in table.sorted_items():
        if include_zeros or v != 0:
            w.writerow([g, ";".join(map(str, beta)), format_rational(v)])
    return buf.getvalue()


def dumps_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
