"""Quartic Hecke L-functions over the Gaussian integers."""

from ._core import (
    Gaussian,
    L_half,
    constant_A,
    factor,
    first_moment,
    gauss_sum,
    incomplete_gamma_half,
    moebius,
    primary_associate,
    quartic_symbol,
    root_number,
    run_suite,
    suite_names,
    zeta_K,
)

__all__ = [
    "Gaussian",
    "L_half",
    "constant_A",
    "factor",
    "first_moment",
    "gauss_sum",
    "incomplete_gamma_half",
    "moebius",
    "primary_associate",
    "quartic_symbol",
    "root_number",
    "run_suite",
    "suite_names",
    "zeta_K",
]
