"""Cross-route identity suites.

Each suite recomputes one identity by two independent routes and records
every mismatching cell. :func:`run_all` drives the ``verify`` subcommand.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .arith import divisor_sum
from .contributions import (
    GeometrySignature,
    contribution_degree,
    contribution_partition_sum,
    contribution_series,
)
from .hodge import (
    alpha,
    alpha_via_log,
    faber_expected,
    kappa_integral,
    psi_lambda_table,
)
from .series import exp, int_pow, sine_ratio
from .tables import BPSTable, ETable, classes_in_box
from .transforms import enumerative_forward, enumerative_solve, gv_forward, gv_invert

__all__ = ["SuiteResult", "SUITES", "run_all", "random_bps_table", "random_e_table"]


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, label: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(label)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "failures": self.failures[:20],
        }


def series_vs_partition(max_g: int = 10, max_k: int = 12, max_h: int = 12) -> SuiteResult:
    res = SuiteResult("series_vs_partition_sum")
    for g in range(max_g + 1):
        for k in range(max_k + 1):
            sig = GeometrySignature(g, k)
            ser = contribution_series(sig, max_h)
            for h in range(max_h + 1):
                res.check(contribution_partition_sum(sig, h) == ser[h], f"g={g} k={k} h={h}")
    return res


def bernoulli_vs_log(max_q: int = 20) -> SuiteResult:
    res = SuiteResult("bernoulli_vs_formal_log")
    q_series = alpha_via_log(max_q)
    res.check(q_series[0] == 0, "constant term")
    for q in range(1, max_q + 1):
        res.check(alpha(q) == q_series[q], f"q={q}")
    return res


def exp_two_q(order: int = 20) -> SuiteResult:
    res = SuiteResult("exp_2Q_equals_S_minus_2")
    lhs = exp(alpha_via_log(order) * 2)
    rhs = int_pow(sine_ratio(order), -2)
    for h in range(order + 1):
        res.check(lhs[h] == rhs[h], f"h={h}")
    return res


def faber_ratio(max_q: int = 20) -> SuiteResult:
    res = SuiteResult("faber_ratio")
    for q in range(2, max_q + 1):
        res.check(alpha(q) == faber_expected(q) * kappa_integral(q), f"q={q}")
    return res


def psi_lambda(max_k: int = 3, max_h: int = 8) -> SuiteResult:
    res = SuiteResult("psi_lambda_generating_identity")
    table = psi_lambda_table(max_h)
    for k in range(max_k + 1):
        target = int_pow(sine_ratio(max_h), -k - 1)
        res.check(target[0] == 1, f"k={k} h=0")
        for h in range(1, max_h + 1):
            poly = sum((Fraction(k) ** i * table[(h, i)] for i in range(h + 1)), Fraction(0))
            res.check(poly == target[h], f"k={k} h={h}")
    return res


def p3_coefficients(max_d: int = 10) -> SuiteResult:
    res = SuiteResult("P3_correction_coefficients")
    for d in range(1, max_d + 1):
        s0 = contribution_series(GeometrySignature(0, 4 * d), 2)
        s1 = contribution_series(GeometrySignature(1, 4 * d), 1)
        res.check(s0[1] == Fraction(1 - 2 * d, 12), f"C_0(1,P3,{d})")
        res.check(s0[2] == Fraction(3 - 11 * d + 10 * d * d, 720), f"C_0(2,P3,{d})")
        res.check(s1[1] == Fraction(-4 * d, 24), f"C_1(1,P3,{d})")
    return res


def degree_values(max_d: int = 20, max_h: int = 5) -> SuiteResult:
    res = SuiteResult("aspinwall_morrison_and_elliptic")
    for d in range(1, max_d + 1):
        res.check(contribution_degree(0, 0, d).value == Fraction(1, d**3), f"C_0(0,{d})")
        res.check(contribution_degree(1, 0, d).value == divisor_sum(d) / d, f"C_1(0,{d})")
        res.check(contribution_degree(1, 0, d, "mtheory").value == Fraction(1, d), f"C^M_1(0,{d})")
        for h in range(1, max_h + 1):
            res.check(contribution_degree(1, h, d).value == 0, f"C_1({h},{d})")
    return res


def _random_shape(rng: random.Random, max_rank: int, max_genus: int, max_degree: int):
    rank = rng.randint(1, max_rank)
    cutoffs = tuple(rng.randint(1, max_degree) for _ in range(rank))
    return rank, rng.randint(0, max_genus), cutoffs


def random_bps_table(
    rng: random.Random, max_rank: int = 2, max_genus: int = 4, max_degree: int = 8,
    density: float = 0.3,
) -> BPSTable:
    """Random integer BPS table with the given size limits."""
    rank, G, cutoffs = _random_shape(rng, max_rank, max_genus, max_degree)
    entries = {}
    for beta in classes_in_box(cutoffs):
        for g in range(G + 1):
            if rng.random() < density:
                entries[(g, beta)] = Fraction(rng.randint(-50, 50))
    return BPSTable(rank, G, cutoffs, entries)


def random_e_table(
    rng: random.Random, max_rank: int = 2, max_genus: int = 4, max_degree: int = 8,
    density: float = 0.3,
) -> ETable:
    """Random rational enumerative table with a canonical vector making c . beta >= 0."""
    rank, G, cutoffs = _random_shape(rng, max_rank, max_genus, max_degree)
    canonical = tuple(rng.randint(0, 4) for _ in range(rank))
    entries = {}
    for beta in classes_in_box(cutoffs):
        for g in range(G + 1):
            if rng.random() < density:
                entries[(g, beta)] = Fraction(rng.randint(-99, 99), rng.randint(1, 9))
    return ETable(rank, G, cutoffs, entries, canonical=canonical)


def gv_round_trip(trials: int = 100, seed: int = 0) -> SuiteResult:
    res = SuiteResult("gv_round_trip")
    rng = random.Random(seed)
    for t in range(trials):
        bps = random_bps_table(rng)
        back = gv_invert(gv_forward(bps))
        res.check(back.same_support(bps) and not back.integrality_report, f"trial {t}")
    return res


def enumerative_round_trip(trials: int = 100, seed: int = 0) -> SuiteResult:
    res = SuiteResult("enumerative_round_trip")
    rng = random.Random(seed)
    for t in range(trials):
        e = random_e_table(rng)
        res.check(enumerative_solve(enumerative_forward(e)).same_support(e), f"trial {t}")
    return res


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "series_vs_partition_sum": series_vs_partition,
    "bernoulli_vs_formal_log": bernoulli_vs_log,
    "exp_2Q_equals_S_minus_2": exp_two_q,
    "faber_ratio": faber_ratio,
    "psi_lambda_generating_identity": psi_lambda,
    "P3_correction_coefficients": p3_coefficients,
    "aspinwall_morrison_and_elliptic": degree_values,
    "gv_round_trip": gv_round_trip,
    "enumerative_round_trip": enumerative_round_trip,
}


def run_all(names: Optional[list[str]] = None) -> list[SuiteResult]:
    return [SUITES[n]() for n in (names or list(SUITES))]
