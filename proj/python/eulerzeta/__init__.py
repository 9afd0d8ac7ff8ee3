"""Exact Euler zeta values zeta_E(2s) = c_s * pi^(2s) from rational recurrences."""

from ._ezeta import (
    METHODS,
    DecimalApprox,
    DegenerateSystem,
    QuadratureDidNotConverge,
    bernoulli,
    euler_zeta,
    euler_zeta_closed_form,
    euler_zeta_decimal,
    euler_zeta_series,
    euler_zeta_table,
    eval_pi_polynomial,
    fourier_coefficient,
    fourier_coefficient_numeric,
    leeryoo_constant,
    partial_sum,
    perm_diff,
    pi_decimal,
    relation_at,
    relations_at,
    run_verification,
    solve_triangular,
    sum_identity_x0_lhs,
    sum_identity_x1_lhs,
    sum_identity_x1_rhs,
    zeta_even_closed_form,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
