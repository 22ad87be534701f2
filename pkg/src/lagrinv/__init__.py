"""Exact truncated power series and Lagrange inversion."""

from .enumeration import CountTable, TreeFamily, closed_form, count_forests, count_trees
from .exactnum import Rational, format_rational, parse_rational, rat_add, rat_inv, rat_mul
from .lagrange import (
    FixpointError,
    FunctionalEquation,
    LifReport,
    compositional_inverse,
    lif_coefficient,
    lif_verify,
    power_coefficient,
    solve_functional_equation,
)
from .parsing import NegativePowerError, SeriesExpr, SeriesSyntaxError, parse_series, render_series
from .series import (
    CompositionError,
    NotInvertibleError,
    PrecisionError,
    Series,
    add,
    coeff,
    compose,
    derivative,
    mul,
    mul_by_x,
    pow,
    recip,
)

__version__ = "0.1.0"
