#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "rscap/types.hpp"

// Standard-normal primitives and Gaussian quadrature.
//
// The scalar primitives are evaluated in extended (long double) precision so
// that density and tail values stay representable over the whole contract
// range |u| <= 40; phi(40) ~ 1.5e-348 underflows a plain double. Inputs
// outside [-40, 40] are clamped to that range (a one-time warning goes to
// stderr).

namespace rscap::gauss {

inline constexpr long double kSqrt2 = 1.41421356237309504880168872420969808L;
inline constexpr long double kSqrtPi = 1.77245385090551602729816748334114518L;
inline constexpr long double kInvSqrt2Pi = 0.39894228040143267793994605993438187L;
inline constexpr long double kSqrt2OverPi = 0.79788456080286535587989211986876373L;
inline constexpr long double kLogSqrt2Pi = 0.91893853320467274178032973640561764L;

/// Scaled complementary error function e^{x^2} erfc(x), valid for all x.
long double erfcx(long double x);

struct NormalEval {
    long double pdf;   ///< phi(u)
    long double cdf;   ///< Phi(u)
    long double tail;  ///< 1 - Phi(u), computed directly (accurate for large u)
};

/// Density, CDF and upper tail of the standard normal at u.
NormalEval std_normal(long double u);

/// Inverse Mills ratio E(u) = phi(u) / tail(u).
///
/// For u > 0 this is sqrt(2/pi) / erfcx(u/sqrt(2)): the e^{-u^2/2} factors
/// cancel symbolically, so there is no underflowing quotient. For u <= 0 the
/// direct quotient is stable because tail(u) >= 1/2.
long double inv_mills(long double u);

/// E'(u) = E(u)^2 - u E(u) = E(u) (E(u) - u); always in (0, 1).
long double inv_mills_prime(long double u);

/// Mills gap d(u) = E(u) - u; positive and strictly decreasing.
long double mills_gap(long double u);

/// log(1 - Phi(u)), stable in both tails and for arbitrarily large |u|
/// (not clamped: every value is representable on the log scale).
long double log_tail(long double u);

/// Nodes and probability weights representing expectations against N(0,1).
/// Weights are kept in extended precision: the extreme weights of a large
/// rule (n >= ~420) drop below double range while still being meaningful.
struct QuadratureRule {
    std::vector<double> nodes;         ///< strictly increasing abscissae
    std::vector<long double> weights;  ///< positive, sum to 1
    std::size_t size() const { return nodes.size(); }
};

/// n-point probabilists' Gauss-Hermite rule, exact for polynomial degree
/// <= 2n-1 against the standard normal. Throws std::invalid_argument for
/// n < 2 or when n is so large that an extreme weight underflows.
QuadratureRule hermite_rule(int n);

/// n-point Gauss-Legendre rule on [-1, 1]; weights sum to 2.
QuadratureRule legendre_rule(int n);

/// Sum of w_i f(node_i) with compensated (Neumaier) accumulation in fixed
/// node order; deterministic for a given rule.
template <class F>
double gaussian_expect(F&& f, const QuadratureRule& rule) {
    long double s = 0.0L, c = 0.0L;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double fv = static_cast<double>(f(rule.nodes[i]));
        if (!std::isfinite(fv))
            throw evaluation_error("gaussian_expect: integrand non-finite at node z = " +
                                   std::to_string(rule.nodes[i]));
        const long double term = rule.weights[i] * static_cast<long double>(fv);
        const long double t = s + term;
        if (fabsl(s) >= fabsl(term))
            c += (s - t) + term;
        else
            c += (term - t) + s;
        s = t;
    }
    return static_cast<double>(s + c);
}

const QuadratureRule& detail_panel_rule();

/// Integral of f over [a, b] by composite Gauss-Legendre panels of width at
/// most max_panel, with a fixed 16-point rule per panel.
template <class F>
double integrate(F&& f, double a, double b, double max_panel) {
    const QuadratureRule& gl = detail_panel_rule();
    int panels = static_cast<int>(std::ceil((b - a) / max_panel));
    if (panels < 1) panels = 1;
    const double w = (b - a) / panels;
    long double s = 0.0L, c = 0.0L;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * w;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const long double term = 0.5L * w * gl.weights[i] *
                                     static_cast<long double>(f(lo + 0.5 * w * (gl.nodes[i] + 1.0)));
            const long double t = s + term;
            if (fabsl(s) >= fabsl(term))
                c += (s - t) + term;
            else
                c += (term - t) + s;
            s = t;
        }
    }
    return static_cast<double>(s + c);
}

}  // namespace rscap::gauss
