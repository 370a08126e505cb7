"""Ulrich ideals of numerical semigroup rings and rational surface singularities."""

from .free_resolution import BettiParams, betti, betti_recursive
from .catalog import ADEType, build_ade, curve_ideals, mckay_ranks, surface_ideals
from .cycles import (
    UlrichCycleReport,
    enumerate_bruteforce as enumerate_cycles_bruteforce,
    enumerate_chain,
    enumerate_cycles,
    enumerate_rdp,
    fund_linear_solutions,
    is_ulrich_cycle,
    kato_length,
    module_marks,
)
from .errors import ResourceLimitError, UnitColonError
from .graph import DualGraph, GraphError, parse_cycle
from .monomial import (
    MonomialIdeal,
    UlrichIdealRecord,
    enumerate_ulrich,
    ideal,
    is_ulrich,
    maximal_ideal,
)
from .semigroup import NumericalSemigroup, semigroup

__all__ = [
    "ADEType",
    "BettiParams",
    "DualGraph",
    "GraphError",
    "MonomialIdeal",
    "NumericalSemigroup",
    "ResourceLimitError",
    "UlrichCycleReport",
    "UlrichIdealRecord",
    "UnitColonError",
    "betti",
    "betti_recursive",
    "build_ade",
    "curve_ideals",
    "enumerate_chain",
    "enumerate_cycles",
    "enumerate_cycles_bruteforce",
    "enumerate_rdp",
    "enumerate_ulrich",
    "fund_linear_solutions",
    "ideal",
    "is_ulrich",
    "is_ulrich_cycle",
    "kato_length",
    "maximal_ideal",
    "mckay_ranks",
    "module_marks",
    "parse_cycle",
    "semigroup",
    "surface_ideals",
]
