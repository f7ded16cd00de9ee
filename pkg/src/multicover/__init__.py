"""Exact computation of degenerate multiple-cover contributions in Gromov-Witten theory.

All arithmetic is over the rationals (:class:`fractions.Fraction`); there is
no floating-point path.
"""
from .arith import bernoulli, divisor_sum, double_factorial, format_rational, parse_rational
from .contributions import (
    ContributionValue,
    GeometrySignature,
    contribution_degree,
    contribution_partition_sum,
    contribution_series,
)
from .hodge import (
    alpha,
    alpha_via_log,
    faber_ratio_check,
    kappa_integral,
    psi_lambda_integral,
)
from .partitions import Partition, aut_order, enumerate_partitions
from .series import EvenSeries, NonUnitSeries, exp, int_pow, inverse, log, mul, scale_variable, sine_ratio
from .tables import BPSTable, ETable, GWTable, TableError, load_table, table_from_json, table_to_json
from .transforms import enumerative_forward, enumerative_solve, gv_forward, gv_invert

__version__ = "0.1.0"
