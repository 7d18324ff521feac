"""Exact counts and polynomials for halved monotone triangles and ASMs."""

from ._core import (
    alpha_poly,
    alpha_value,
    asm_constant_term,
    asm_count,
    beta,
    beta_poly,
    count_hmt,
    count_mt,
    count_vsasm,
    count_weak_hmt,
    enumerate_asm,
    extended_sum,
    gamma_bar,
    gamma_poly,
    gamma_recursive,
    gamma_star,
    gamma_value,
    hmt_gf_coeff,
    leading_constant,
    mt_gf_coeff,
    run_cli,
    verify,
    vsasm_count,
)

__all__ = [
    "alpha_poly",
    "alpha_value",
    "asm_constant_term",
    "asm_count",
    "beta",
    "beta_poly",
    "count_hmt",
    "count_mt",
    "count_vsasm",
    "count_weak_hmt",
    "enumerate_asm",
    "extended_sum",
    "gamma_bar",
    "gamma_poly",
    "gamma_recursive",
    "gamma_star",
    "gamma_value",
    "hmt_gf_coeff",
    "leading_constant",
    "mt_gf_coeff",
    "run_cli",
    "verify",
    "vsasm_count",
]
