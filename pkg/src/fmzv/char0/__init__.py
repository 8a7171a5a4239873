"""Characteristic-zero side: Stirling numbers, alternating multiple
poly-Bernoulli numbers and per-prime finite multiple zeta values."""
from .stirling import StirlingTable, stirling, stirling_table
from .bernoulli import ampbn_closed, ampbn_series, genfun_dual_check, GenfunReport
from .finite import (
    FmzvComponent,
    ZeroResultReport,
    finite_mpl_component,
    fmzv_component,
    verify_0result,
)

__all__ = [
    "StirlingTable", "stirling", "stirling_table",
    "ampbn_closed", "ampbn_series", "genfun_dual_check", "GenfunReport",
    "FmzvComponent", "ZeroResultReport", "finite_mpl_component", "fmzv_component",
    "verify_0result",
]
