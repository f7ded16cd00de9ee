"""The two triangular systems relating invariant tables.

Gopakumar-Vafa::

    N_beta^gD = sum_{d | beta} sum_{g <= gD} C_g(gD - g, d) n_{beta/d}^g

with ``C_g(h, d) = d^(2g+2h-3) C_g(h, 1)`` in the M-theory model. The
geometric model (genus <= 1 multiple-cover corrections, e.g. sigma(d)/d for
elliptic curves) can be selected instead wherever its coefficients exist.

Enumerative corrections, per class and with ``k = c . beta``::

    N_beta^gD = sum_{g <= gD} C_g(gD - g, X, beta) E_beta^g

Both systems are unitriangular, so the inverses are exact.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .contributions import GeometrySignature, contribution_degree, contribution_series
from .tables import BPSTable, CurveClass, ETable, GWTable, TableError, divisors_of_class

__all__ = [
    "gv_coefficient",
    "gv_forward",
    "gv_invert",
    "enumerative_coefficient",
    "enumerative_forward",
    "enumerative_solve",
]


def gv_coefficient(g: int, genus: int, d: int, model: str = "mtheory") -> Optional[Fraction]:
    """Weight of n_{beta'}^g in N_{d beta'}^genus, or None where the model has no value."""
    cv = contribution_degree(g, genus - g, d, model)
    return cv.value


def _gv_terms(beta: CurveClass, genus: int, model: str):
    for d, sub in divisors_of_class(beta):
        for g in range(genus + 1):
            yield d, sub, g, gv_coefficient(g, genus, d, model)


def _missing(model: str, g: int, genus: int, d: int) -> TableError:
    return TableError(
        f"{model} model has no coefficient C_{g}({genus - g}, {d}) "
        f"needed for genus {genus}, cover degree {d}"
    )


def gv_forward(
    bps: BPSTable,
    genus_cutoff: Optional[int] = None,
    degree_cutoffs: Optional[Sequence[int]] = None,
    model: str = "mtheory",
) -> GWTable:
    """Assemble Gromov-Witten invariants from BPS invariants.

    Cutoffs default to those of ``bps``. BPS entries outside the requested
    cutoffs are an error rather than being silently dropped.
    """
    G = bps.max_genus if genus_cutoff is None else genus_cutoff
    cutoffs = bps.degree_cutoffs if degree_cutoffs is None else tuple(degree_cutoffs)
    if len(cutoffs) != bps.rank:
        raise TableError(f"degree cutoffs {list(cutoffs)} do not match rank {bps.rank}")
    out = GWTable(bps.rank, G, cutoffs, canonical=bps.canonical)
    for (g, beta), v in bps.entries.items():
        if v != 0:
            out._check_in_range(g, beta)

    for beta in out.classes():
        for genus in range(G + 1):
            total = Fraction(0)
            for d, sub, g, coeff in _gv_terms(beta, genus, model):
                n = bps.get(g, sub)
                if n == 0:
                    continue
                if coeff is None:
                    raise _missing(model, g, genus, d)
                total += coeff * n
            if total:
                out.entries[(genus, beta)] = total
    return out


def gv_invert(gw: GWTable, model: str = "mtheory") -> BPSTable:
    """Solve for the BPS invariants of ``gw``; non-integral values are reported, not rounded."""
    bps = BPSTable(gw.rank, gw.max_genus, gw.degree_cutoffs, canonical=gw.canonical)
    for beta in gw.classes():
        for genus in range(gw.max_genus + 1):
            rest = Fraction(0)
            for d, sub, g, coeff in _gv_terms(beta, genus, model):
                if d == 1 and g == genus:
                    continue  # diagonal, coefficient C_g(0, 1) = 1
                n = bps.get(g, sub)
                if n == 0:
                    continue
                if coeff is None:
                    raise _missing(model, g, genus, d)
                rest += coeff * n
            value = gw.get(genus, beta) - rest
            if value:
                bps.entries[(genus, beta)] = value
    return bps


def enumerative_coefficient(g: int, genus: int, anti_k: int) -> Fraction:
    """C_g(genus - g, X, beta) for a class with -K_X . beta = anti_k."""
    h = genus - g
    return contribution_series(GeometrySignature(g, anti_k), h)[h]


def _canonical_of(table, canonical) -> tuple[int, ...]:
    c = table.canonical if canonical is None else tuple(canonical)
    if c is None:
        raise TableError("enumerative correction needs a canonical vector (missing canonical)")
    if len(c) != table.rank:
        raise TableError(f"canonical vector {list(c)} does not match rank {table.rank}")
    return c


def _anti_k(c: Sequence[int], beta: CurveClass) -> int:
    k = sum(ci * bi for ci, bi in zip(c, beta))
    if k < 0:
        raise TableError(f"class {list(beta)} has negative anticanonical degree {k}")
    return k


def enumerative_forward(e: ETable, canonical: Optional[Sequence[int]] = None) -> GWTable:
    """Gromov-Witten invariants from enumerative counts and degree-1 corrections."""
    c = _canonical_of(e, canonical)
    out = GWTable(e.rank, e.max_genus, e.degree_cutoffs, canonical=c)
    for beta in out.classes():
        k = _anti_k(c, beta)
        for genus in range(e.max_genus + 1):
            total = Fraction(0)
            for g in range(genus + 1):
                v = e.get(g, beta)
                if v:
                    total += enumerative_coefficient(g, genus, k) * v
            if total:
                out.entries[(genus, beta)] = total
    return out


def enumerative_solve(gw: GWTable, canonical: Optional[Sequence[int]] = None) -> ETable:
    """Invert :func:`enumerative_forward` down each genus column."""
    c = _canonical_of(gw, canonical)
    out = ETable(gw.rank, gw.max_genus, gw.degree_cutoffs, canonical=c)
    for beta in out.classes():
        k = _anti_k(c, beta)
        for genus in range(gw.max_genus + 1):
            value = gw.get(genus, beta)
            for g in range(genus):
                v = out.get(g, beta)
                if v:
                    value -= enumerative_coefficient(g, genus, k) * v
            if value:
                out.entries[(genus, beta)] = value
    return out
