"""Characteristic-p side over A = F_q[theta]: finite fields, Carlitz
constants, Anderson-Thakur polynomials, poly-Bernoulli-Carlitz numbers,
per-P finite (alternating) multiple zeta values and index reduction."""
from .fields import GF, FieldCtx, ctx_for_q, field_ctx
from .poly import Poly, RatFunc, enumerate_monic, monic_irreducibles
from .carlitz import CarlitzConstants, QuotCtx, carlitz_constants, power_sum_exact, power_sum_mod, quot_ctx
from .special import (
    ATPoly,
    AmpbcnValue,
    StirlingCarlitzTable,
    ampbcn_closed,
    ampbcn_series,
    anderson_thakur,
    at_identity_check,
    at_poly,
    carlitz_exp,
    recursion_check,
    selectors,
    stirling_carlitz,
)
from .finite import (
    PrimeReport,
    fcmpl_component,
    fmzv_p_brute,
    fmzv_p_component,
    gamma_root,
    gamma_roots,
    verify_famzv_mcpl,
    verify_famzv_mpbcn,
)
from .reduce import ReductionReport, VanishingBound, ZetaCombination, reduce_index, vanishing_bound, verify_reduction

__all__ = [
    "GF", "FieldCtx", "ctx_for_q", "field_ctx",
    "Poly", "RatFunc", "enumerate_monic", "monic_irreducibles",
    "CarlitzConstants", "QuotCtx", "carlitz_constants", "power_sum_exact", "power_sum_mod", "quot_ctx",
    "ATPoly", "AmpbcnValue", "StirlingCarlitzTable", "ampbcn_closed", "ampbcn_series",
    "anderson_thakur", "at_identity_check", "at_poly", "carlitz_exp", "recursion_check",
    "selectors", "stirling_carlitz",
    "PrimeReport", "fcmpl_component", "fmzv_p_brute", "fmzv_p_component", "gamma_root",
    "gamma_roots", "verify_famzv_mcpl", "verify_famzv_mpbcn",
    "ReductionReport", "VanishingBound", "ZetaCombination", "reduce_index", "vanishing_bound",
    "verify_reduction",
]
