#pragma once

#include "rscap/gauss.hpp"
#include "rscap/types.hpp"

// Scalar maps of the replica-symmetric saddle point system for the
// half-space (Ising perceptron) model:
//
//   P(r)   = E[tanh^2(sqrt(r) Z)]            overlap map
//   S(r)   = E[sech^2(sqrt(r) Z)] = 1 - P(r)
//   A(r)   = r S(r)^2, increasing onto [0, 2/pi)
//   B(q)   = (1-q) E[E((kappa - sqrt(q) Z)/sqrt(1-q))^2], decreasing
//   C_k    = E[(kappa - Z)_+^2],  alpha_c = 2 / (pi C_k)
//   f(r)   = A(r) - alpha B(P(r)), the one-dimensional reduction
//
// plus the monotonicity machinery for B: g, H, F, truncated-normal moments
// and the critical-point value.
//
// Quadrature policy: expectations over Z use the supplied Gauss-Hermite rule
// while the integrand varies on scales the rule resolves (r <= 1, q <= 1/2).
// Beyond that the same quantities are computed through equivalent integral
// representations with fixed composite Gauss-Legendre panels, so every map
// stays accurate to ~1e-13 over the whole parameter range (r up to 1e12,
// q up to 1 - 1e-14). All routes are deterministic.

namespace rscap {

/// P(r) = E[tanh^2(sqrt(r) Z)], in [0, 1), strictly increasing, P(0) = 0.
double overlap_P(VarianceParam r, const gauss::QuadratureRule& rule);

/// S(r) = E[sech^2(sqrt(r) Z)] = 1 - P(r), in (0, 1].
double sech2_mean(VarianceParam r, const gauss::QuadratureRule& rule);

/// I(r) = integral of sech^2(y) e^{-y^2/(2r)} dy over the real line,
/// truncated to |y| <= min(max(25, 6 sqrt(r)), 60); the sech^2 factor makes
/// the truncation error < 1e-20. Satisfies A(r) = I(r)^2 / (2 pi).
double sech2_integral(VarianceParam r);

/// A(r) = r S(r)^2; zero at 0, strictly increasing onto [0, 2/pi).
double cap_A(VarianceParam r, const gauss::QuadratureRule& rule);

/// A through the I(r) representation; cross-check route for cap_A.
double cap_A_via_I(VarianceParam r);

/// B(q) = (1-q) E[E(U_q)^2] with U_q = (kappa - sqrt(q) Z)/sqrt(1-q).
/// Arguments of the inverse Mills ratio are capped at +-40; beyond the cap
/// E(u) ~ u + 1/u (error O(1/u^3)) on the right and E(u)^2 is below double
/// range on the left.
double big_B(Overlap q, Margin kappa, const gauss::QuadratureRule& rule);

/// C_kappa = (kappa^2 + 1) Phi(kappa) + kappa phi(kappa), closed form.
double c_kappa(Margin kappa);

/// C_kappa as a direct quadrature of E[(kappa - Z)_+^2]; cross-check route.
double c_kappa_quadrature(Margin kappa);

/// alpha_c(kappa) = 2 / (pi C_kappa).
double alpha_c(Margin kappa);

/// R_kappa(q, alpha) = alpha B(q) / (1-q)^2.
double r_map(Overlap q, double alpha, Margin kappa, const gauss::QuadratureRule& rule);

/// Replica-symmetric functional
///   -r(1-q)/2 + E[log 2cosh(sqrt(r) Z)] + alpha E[log tail(U_q)].
/// Both expectations switch to stable large-parameter representations when
/// needed; the log-tail path never evaluates log of an underflowed tail.
double rs_free_energy(double alpha, Margin kappa, Overlap q, VarianceParam r,
                      const gauss::QuadratureRule& rule);

/// One-dimensional reduction f(r) = A(r) - alpha B(P(r)); strictly
/// increasing with f(0) = -alpha E(kappa)^2 < 0.
double one_dim_f(VarianceParam r, double alpha, Margin kappa, const gauss::QuadratureRule& rule);

/// g(u) = E'(u)^2 - 2 (1 - E'(u)) E(u)^2, evaluated through the equivalent
/// quartic form E(u)^2 (3E(u)^2 - 4u E(u) + u^2 - 2).
double g_fun(double u);

/// g from its defining combination of E and E'; cross-check route for g_fun.
double g_fun_from_derivatives(double u);

/// H(u) = u^2 d + 6u d^2 + 6 d^3 - u - 4d with d = mills_gap(u);
/// g'(u) = 2 E(u)^2 H(u).
double big_H(double u);

/// F(x, y) = x^2 + 6xy + 6y^2 - x - 4y; d(u) H(u) = F(u d, d^2).
double f_xy(double x, double y);

/// Moments of Y_u = X - u conditioned on X >= u, X ~ N(0,1), with the
/// shifted-Hankel determinants and Var(Y_u) in polynomial form.
struct TruncMoments {
    double mu0, mu1, mu2, mu3, mu4;
    double det_m1;  ///< mu1 mu3 - mu2^2 = u d + 2 d^2 - 1        (>= 0)
    double det_m2;  ///< u^2 d^2 + u d^3 - 3 d^2 - 3 u d + 2      (>= 0)
    double var_y;   ///< mu2 - mu1^2 = 1 - u d - d^2              (> 0)
};
TruncMoments trunc_moments(double u);

/// Value of g at a critical point with ratio rho = -u/d in (0, 1):
/// rho (4 - rho) (1 - rho)^2 / (rho^2 - 6 rho + 6)^2, bounded by 1/18.
double g_critical_value(double rho);

/// B'(t) = E[g(U_t)] for t in (0, 1); strictly negative for kappa >= 0.
double b_prime(Overlap t, Margin kappa, const gauss::QuadratureRule& rule);

}  // namespace rscap
