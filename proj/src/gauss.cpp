#include "rscap/gauss.hpp"

#include <atomic>
#include <cstdio>
#include <stdexcept>

namespace rscap::gauss {

namespace {

std::atomic<bool> g_clamp_warned{false};

// Accuracy contract range for the scalar primitives.
constexpr long double kClampRange = 40.0L;

long double checked_clamp(long double u, const char* who) {
    if (!std::isfinite(u)) throw std::domain_error(std::string(who) + ": non-finite input");
    if (u > kClampRange || u < -kClampRange) {
        if (!g_clamp_warned.exchange(true))
            std::fprintf(stderr, "rscap: argument outside [-40, 40] clamped (accuracy contract range)\n");
        return u > 0 ? kClampRange : -kClampRange;
    }
    return u;
}

}  // namespace

long double erfcx(long double x) {
    if (std::isnan(x)) throw std::domain_error("erfcx: non-finite input");
    if (x >= 0.0L) {
        if (x >= 26.0L) {
            // asymptotic series in t = 1/(2x^2); the first omitted term is
            // below 2e-19 relative at x = 26, and no huge intermediates are
            // formed (e^{x^2} would overflow a 64-bit long double here)
            const long double t = 1.0L / (2.0L * x * x);
            const long double s =
                1.0L +
                t * (-1.0L +
                     t * (3.0L +
                          t * (-15.0L +
                               t * (105.0L + t * (-945.0L + t * (10395.0L - t * 135135.0L))))));
            return s / (x * kSqrtPi);
        }
        return expl(x * x) * erfcl(x);
    }
    // erfcx(-x) = 2 e^{x^2} - erfcx(x); e^{x^2} stays in long-double range
    // for |x| <= 106, far beyond the clamped domain.
    return 2.0L * expl(x * x) - erfcx(-x);
}

NormalEval std_normal(long double u) {
    u = checked_clamp(u, "std_normal");
    NormalEval out;
    out.pdf = kInvSqrt2Pi * expl(-0.5L * u * u);
    out.cdf = 0.5L * erfcl(-u / kSqrt2);
    out.tail = 0.5L * erfcl(u / kSqrt2);
    return out;
}

long double inv_mills(long double u) {
    u = checked_clamp(u, "inv_mills");
    if (u > 0.0L) return kSqrt2OverPi / erfcx(u / kSqrt2);
    return (kInvSqrt2Pi * expl(-0.5L * u * u)) / (0.5L * erfcl(u / kSqrt2));
}

long double inv_mills_prime(long double u) {
    u = checked_clamp(u, "inv_mills_prime");
    const long double e = inv_mills(u);
    return e * (e - u);
}

long double mills_gap(long double u) {
    u = checked_clamp(u, "mills_gap");
    return inv_mills(u) - u;
}

long double log_tail(long double u) {
    if (!std::isfinite(u)) throw std::domain_error("log_tail: non-finite input");
    if (u > 0.0L) return logl(0.5L * erfcx(u / kSqrt2)) - 0.5L * u * u;
    return log1pl(-0.5L * erfcl(-u / kSqrt2));
}

namespace {

// Eigenvalues of the symmetric tridiagonal matrix with zero diagonal and
// squared off-diagonals b2[1..n-1], by Sturm-count bisection. The sign-change
// count of the leading-minor recurrence at x equals the number of
// eigenvalues below x, which gives bracketed, bit-deterministic bisection.
int sturm_count(const std::vector<long double>& b2, long double x, int n) {
    int count = 0;
    long double q = -x;
    if (q < 0) ++count;
    for (int k = 1; k < n; ++k) {
        const long double denom = (q == 0.0L) ? 1e-4930L : q;
        q = -x - b2[k] / denom;
        if (q < 0) ++count;
    }
    return count;
}

std::vector<double> tridiag_eigs(const std::vector<long double>& b2, int n, long double bound) {
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) {
        long double lo = -bound, up = bound;
        for (int it = 0; it < 90; ++it) {
            const long double mid = 0.5L * (lo + up);
            if (sturm_count(b2, mid, n) <= i)
                lo = mid;
            else
                up = mid;
        }
        x[i] = static_cast<double>(0.5L * (lo + up));
    }
    return x;
}

// Golub-Welsch weights from the orthonormal three-term recurrence
// b_{k+1} p_{k+1} = x p_k - b_k p_{k-1}: w_i = mass / sum_k p_k(x_i)^2.
std::vector<long double> recurrence_weights(const std::vector<double>& x,
                                            const std::vector<long double>& b2) {
    const int n = static_cast<int>(x.size());
    std::vector<long double> w(n);
    for (int i = 0; i < n; ++i) {
        long double pm = 0.0L, p = 1.0L, s = 1.0L;
        const long double xi = x[i];
        for (int k = 0; k < n - 1; ++k) {
            const long double bk = sqrtl(b2[k + 1]);
            const long double bkm = k > 0 ? sqrtl(b2[k]) : 0.0L;
            const long double pn = (xi * p - bkm * pm) / bk;
            pm = p;
            p = pn;
            s += p * p;
        }
        w[i] = 1.0L / s;
    }
    return w;
}

}  // namespace

QuadratureRule hermite_rule(int n) {
    if (n < 2) throw std::invalid_argument("hermite_rule: need at least 2 nodes, got " + std::to_string(n));
    std::vector<long double> b2(n);
    for (int k = 1; k < n; ++k) b2[k] = static_cast<long double>(k);

    QuadratureRule rule;
    rule.nodes = tridiag_eigs(b2, n, 2.0L * sqrtl(static_cast<long double>(n)) + 1.0L);
    // the spectrum is symmetric; enforce it exactly
    for (int i = 0; i < n / 2; ++i) {
        const double m = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
        rule.nodes[i] = -m;
        rule.nodes[n - 1 - i] = m;
    }
    if (n % 2) rule.nodes[n / 2] = 0.0;

    std::vector<long double> wl = recurrence_weights(rule.nodes, b2);
    long double wsum = 0.0L;
    for (const long double w : wl) wsum += w;
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.weights[i] = wl[i] / wsum;
        if (!(rule.weights[i] > 0.0L))
            throw std::invalid_argument("hermite_rule: extreme weight underflows for n = " +
                                        std::to_string(n) + "; use fewer nodes");
    }
    return rule;
}

QuadratureRule legendre_rule(int n) {
    if (n < 2) throw std::invalid_argument("legendre_rule: need at least 2 nodes");
    std::vector<long double> b2(n);
    for (int k = 1; k < n; ++k) {
        const long double kk = static_cast<long double>(k);
        b2[k] = kk * kk / (4.0L * kk * kk - 1.0L);
    }
    QuadratureRule rule;
    rule.nodes = tridiag_eigs(b2, n, 1.0L);
    for (int i = 0; i < n / 2; ++i) {
        const double m = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
        rule.nodes[i] = -m;
        rule.nodes[n - 1 - i] = m;
    }
    if (n % 2) rule.nodes[n / 2] = 0.0;

    std::vector<long double> wl = recurrence_weights(rule.nodes, b2);
    long double wsum = 0.0L;
    for (const long double w : wl) wsum += w;
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) rule.weights[i] = 2.0L * wl[i] / wsum;
    return rule;
}

const QuadratureRule& detail_panel_rule() {
    static const QuadratureRule rule = legendre_rule(16);
    return rule;
}

}  // namespace rscap::gauss
