#include "rscap/rs_model.hpp"

#include <algorithm>
#include <cmath>

namespace rscap {

namespace {

using gauss::QuadratureRule;

// Direct Gauss-Hermite is accurate while the integrand varies on scales the
// node spacing resolves; calibrated switch points for the default 201-node
// rule (both routes agree to ~1e-13 at the seam).
constexpr double kRSwitch = 1.0;  // tanh^2 / sech^2 / log 2cosh integrands
constexpr double kQSwitch = 0.5;  // U_q-composed integrands

double sech2(double y) {
    const double ch = std::cosh(y);
    if (std::isinf(ch)) return 0.0;
    const double v = 1.0 / ch;
    return v * v;
}

double log2cosh(double x) {
    const double a = std::abs(x);
    return a + std::log1p(std::exp(-2.0 * a));
}

// E(u)^2 with the +-40 cap used inside B.
double inv_mills_sq_capped(double u) {
    if (u > 40.0) {
        const double v = u + 1.0 / u;
        return v * v;
    }
    if (u < -40.0) return 0.0;  // E(u)^2 < 1e-600, below double range
    const long double e = gauss::inv_mills(static_cast<long double>(u));
    return static_cast<double>(e * e);
}

// psi(v) = log tail(v) + (v_+)^2 / 2; bounded by log-growth on the right,
// decays like -tail(v) on the left, psi'' jumps by 1 at v = 0.
double psi(double v) {
    if (v > 0.0)
        return static_cast<double>(logl(0.5L * gauss::erfcx(static_cast<long double>(v) / gauss::kSqrt2)));
    return static_cast<double>(gauss::log_tail(static_cast<long double>(v)));
}

// E[(kappa - sqrt(q) Z)_+^2] in closed form (see c_kappa for q = 1).
double plus_part_second_moment(double q, double kappa) {
    const double sq = std::sqrt(q);
    if (sq == 0.0) return kappa * kappa;  // kappa >= 0
    const long double c = static_cast<long double>(kappa) / sq;
    const gauss::NormalEval n = gauss::std_normal(c);
    return static_cast<double>((kappa * kappa + q) * n.cdf + kappa * sq * n.pdf);
}

// E[log tail(U_q)] for q > kQSwitch: split off the exactly-integrable
// -(U_+)^2/2 part and integrate psi against the Gaussian law of
// U_q ~ N(mu, sig^2) with panels split at the psi'' jump.
double log_tail_term_split(double q, double kappa) {
    const double s1 = std::sqrt(1.0 - q);
    const double mu = kappa / s1;
    const double sig = std::sqrt(q) / s1;
    const double first = -plus_part_second_moment(q, kappa) / (2.0 * (1.0 - q));

    const auto dens = [mu, sig](double v) {
        const long double t = static_cast<long double>((v - mu) / sig);
        return static_cast<double>(gauss::kInvSqrt2Pi * expl(-0.5L * t * t)) / sig;
    };
    const double left = gauss::integrate([&](double v) { return psi(v) * dens(v); }, -40.0, 0.0, 2.0);
    double right = 0.0;
    const double vmax = mu + 40.0 * sig;
    double a = 0.0, b = 1.0;
    while (a < vmax) {
        const double ub = std::min(b, vmax);
        right += gauss::integrate([&](double v) { return psi(v) * dens(v); }, a, ub, (ub - a) / 4.0);
        a = b;
        b *= 2.0;
    }
    return first + left + right;
}

double log_tail_term(double q, double kappa, const QuadratureRule& rule) {
    if (q == 0.0) return static_cast<double>(gauss::log_tail(static_cast<long double>(kappa)));
    const double sq = std::sqrt(q), s1 = std::sqrt(1.0 - q);
    if (q <= kQSwitch) {
        return gauss::gaussian_expect(
            [=](double z) {
                return static_cast<double>(gauss::log_tail(static_cast<long double>((kappa - sq * z) / s1)));
            },
            rule);
    }
    return log_tail_term_split(q, kappa);
}

double log2cosh_term(double r, const QuadratureRule& rule) {
    if (r == 0.0) return M_LN2;
    const double sr = std::sqrt(r);
    if (r <= kRSwitch)
        return gauss::gaussian_expect([sr](double z) { return log2cosh(sr * z); }, rule);
    // E[log 2cosh] = sqrt(r) E|Z| + E[log1p(e^{-2 sqrt(r)|Z|})]; the first
    // term is sqrt(2r/pi) exactly, the rest reduces to a fixed y-integral.
    const double J = gauss::integrate(
        [r](double y) { return std::log1p(std::exp(-2.0 * y)) * std::exp(-y * y / (2.0 * r)); }, 0.0,
        35.0, std::min(1.0, sr / 2.0));
    return std::sqrt(2.0 * r / M_PI) + 2.0 / std::sqrt(2.0 * M_PI * r) * J;
}

}  // namespace

double sech2_mean(VarianceParam rp, const gauss::QuadratureRule& rule) {
    const double r = rp.r;
    if (r == 0.0) return 1.0;
    if (r <= kRSwitch) {
        const double sr = std::sqrt(r);
        return gauss::gaussian_expect([sr](double z) { return sech2(sr * z); }, rule);
    }
    return sech2_integral(rp) / std::sqrt(2.0 * M_PI * r);
}

double overlap_P(VarianceParam rp, const gauss::QuadratureRule& rule) {
    const double r = rp.r;
    if (r == 0.0) return 0.0;
    if (r <= kRSwitch) {
        const double sr = std::sqrt(r);
        return gauss::gaussian_expect(
            [sr](double z) {
                const double t = std::tanh(sr * z);
                return t * t;
            },
            rule);
    }
    return 1.0 - sech2_mean(rp, rule);
}

double sech2_integral(VarianceParam rp) {
    const double r = rp.r;
    if (r == 0.0) return 0.0;
    const double Y = std::min(std::max(25.0, 6.0 * std::sqrt(r)), 60.0);
    const double h = std::min(0.5, std::sqrt(r) / 2.0);
    return gauss::integrate([r](double y) { return sech2(y) * std::exp(-y * y / (2.0 * r)); }, -Y, Y, h);
}

double cap_A(VarianceParam rp, const gauss::QuadratureRule& rule) {
    const double s = sech2_mean(rp, rule);
    return rp.r * s * s;
}

double cap_A_via_I(VarianceParam rp) {
    const double i = sech2_integral(rp);
    return i * i / (2.0 * M_PI);
}

double big_B(Overlap qp, Margin k, const gauss::QuadratureRule& rule) {
    const double q = qp.q, kappa = k.kappa;
    if (q == 0.0) return inv_mills_sq_capped(kappa);
    const double sq = std::sqrt(q), s1 = std::sqrt(1.0 - q);
    return (1.0 - q) *
           gauss::gaussian_expect(
               [=](double z) { return inv_mills_sq_capped((kappa - sq * z) / s1); }, rule);
}

double c_kappa(Margin k) {
    const double kappa = k.kappa;
    const gauss::NormalEval n = gauss::std_normal(static_cast<long double>(kappa));
    return static_cast<double>((static_cast<long double>(kappa) * kappa + 1.0L) * n.cdf +
                               static_cast<long double>(kappa) * n.pdf);
}

double c_kappa_quadrature(Margin k) {
    // (kappa - z)_+^2 has a kink at z = kappa, so integrate over (-inf, kappa]
    // where the integrand is smooth; the lower truncation error is < 1e-340.
    const double kappa = k.kappa;
    return gauss::integrate(
        [kappa](double z) {
            const double t = kappa - z;
            return t * t * static_cast<double>(gauss::kInvSqrt2Pi *
                                               expl(-0.5L * static_cast<long double>(z) *
                                                    static_cast<long double>(z)));
        },
        kappa - 45.0, kappa, 1.0);
}

double alpha_c(Margin k) { return 2.0 / (M_PI * c_kappa(k)); }

double r_map(Overlap q, double alpha, Margin kappa, const gauss::QuadratureRule& rule) {
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw std::domain_error("r_map: alpha must be finite and > 0");
    const double om = 1.0 - q.q;
    return alpha * big_B(q, kappa, rule) / (om * om);
}

double rs_free_energy(double alpha, Margin kappa, Overlap q, VarianceParam r,
                      const gauss::QuadratureRule& rule) {
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw std::domain_error("rs_free_energy: alpha must be finite and > 0");
    return -r.r * (1.0 - q.q) / 2.0 + log2cosh_term(r.r, rule) +
           alpha * log_tail_term(q.q, kappa.kappa, rule);
}

double one_dim_f(VarianceParam r, double alpha, Margin kappa, const gauss::QuadratureRule& rule) {
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw std::domain_error("one_dim_f: alpha must be finite and > 0");
    const double q = overlap_P(r, rule);
    return cap_A(r, rule) - alpha * big_B(Overlap(std::min(q, 1.0 - 1e-14)), kappa, rule);
}

double g_fun(double u) {
    if (!std::isfinite(u)) throw std::domain_error("g_fun: non-finite input");
    const long double e = gauss::inv_mills(static_cast<long double>(u));
    const long double uu = static_cast<long double>(u);
    return static_cast<double>(e * e * (3.0L * e * e - 4.0L * uu * e + uu * uu - 2.0L));
}

double g_fun_from_derivatives(double u) {
    if (!std::isfinite(u)) throw std::domain_error("g_fun_from_derivatives: non-finite input");
    const long double e = gauss::inv_mills(static_cast<long double>(u));
    const long double ep = e * (e - static_cast<long double>(u));
    return static_cast<double>(ep * ep - 2.0L * (1.0L - ep) * e * e);
}

double big_H(double u) {
    if (!std::isfinite(u)) throw std::domain_error("big_H: non-finite input");
    const long double uu = static_cast<long double>(u);
    const long double d = gauss::mills_gap(uu);
    return static_cast<double>(uu * uu * d + 6.0L * uu * d * d + 6.0L * d * d * d - uu - 4.0L * d);
}

double f_xy(double x, double y) {
    const long double xl = x, yl = y;
    return static_cast<double>(xl * xl + 6.0L * xl * yl + 6.0L * yl * yl - xl - 4.0L * yl);
}

TruncMoments trunc_moments(double u) {
    if (!std::isfinite(u)) throw std::domain_error("trunc_moments: non-finite input");
    const long double uu = static_cast<long double>(u);
    const long double d = gauss::mills_gap(uu);
    TruncMoments m;
    m.mu0 = 1.0;
    m.mu1 = static_cast<double>(d);
    m.mu2 = static_cast<double>(1.0L - uu * d);
    m.mu3 = static_cast<double>((uu * uu + 2.0L) * d - uu);
    m.mu4 = static_cast<double>(uu * uu + 3.0L - uu * (uu * uu + 5.0L) * d);
    m.det_m1 = static_cast<double>(uu * d + 2.0L * d * d - 1.0L);
    m.det_m2 = static_cast<double>(uu * uu * d * d + uu * d * d * d - 3.0L * d * d - 3.0L * uu * d + 2.0L);
    m.var_y = static_cast<double>(1.0L - uu * d - d * d);
    return m;
}

double g_critical_value(double rho) {
    if (!std::isfinite(rho) || rho <= 0.0 || rho >= 1.0)
        throw std::domain_error("g_critical_value: rho must lie in (0, 1)");
    const long double r = rho;
    const long double den = r * r - 6.0L * r + 6.0L;
    return static_cast<double>(r * (4.0L - r) * (1.0L - r) * (1.0L - r) / (den * den));
}

double b_prime(Overlap tp, Margin k, const gauss::QuadratureRule& rule) {
    const double t = tp.q, kappa = k.kappa;
    if (t <= 0.0) throw std::domain_error("b_prime: t must lie in (0, 1)");
    const double st = std::sqrt(t), s1 = std::sqrt(1.0 - t);
    return gauss::gaussian_expect(
        [=](double z) {
            const double u = (kappa - st * z) / s1;
            // Outside the primitive contract range, use the tail expansions:
            // g(u) = -1 + 6/u^2 - 57/u^4 + O(u^-6) on the right (the quartic
            // form cancels catastrophically there), and g(u) = O(e^{-u^2})
            // on the left.
            if (u > 40.0) {
                const double iu2 = 1.0 / (u * u);
                return -1.0 + iu2 * (6.0 - 57.0 * iu2);
            }
            if (u < -40.0) return 0.0;
            return g_fun(u);
        },
        rule);
}

}  // namespace rscap
