"""Replica-symmetric saddle point solver for the half-space Ising perceptron."""

from rscap._core import (
    CapacityResult,
    LemmaReport,
    QuadratureRule,
    SaddlePoint,
    SweepRecord,
    TruncMoments,
    alpha_c,
    b_prime,
    big_B,
    big_H,
    c_kappa,
    c_kappa_quadrature,
    cap_A,
    cap_A_via_I,
    capacity,
    erfcx,
    f_xy,
    g_critical_value,
    g_fun,
    g_fun_from_derivatives,
    gaussian_expect,
    hermite_rule,
    inv_mills,
    inv_mills_prime,
    lemma_ids,
    log_tail,
    mills_gap,
    one_dim_f,
    overlap_P,
    r_map,
    rs_free_energy,
    sech2_integral,
    sech2_mean,
    solve_saddle,
    std_normal,
    sweep,
    trunc_moments,
    verify,
    verify_all,
)

__all__ = [
    "CapacityResult",
    "LemmaReport",
    "QuadratureRule",
    "SaddlePoint",
    "SweepRecord",
    "TruncMoments",
    "alpha_c",
    "b_prime",
    "big_B",
    "big_H",
    "c_kappa",
    "c_kappa_quadrature",
    "cap_A",
    "cap_A_via_I",
    "capacity",
    "erfcx",
    "f_xy",
    "g_critical_value",
    "g_fun",
    "g_fun_from_derivatives",
    "gaussian_expect",
    "hermite_rule",
    "inv_mills",
    "inv_mills_prime",
    "lemma_ids",
    "log_tail",
    "mills_gap",
    "one_dim_f",
    "overlap_P",
    "r_map",
    "rs_free_energy",
    "sech2_integral",
    "sech2_mean",
    "solve_saddle",
    "std_normal",
    "sweep",
    "trunc_moments",
    "verify",
    "verify_all",
]

__version__ = "0.1.0"
