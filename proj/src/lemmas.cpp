#include "rscap/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <limits>
#include <map>
#include <sstream>

namespace rscap::lemmas {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kOne18 = 1.0 / 18.0;

struct MarginTracker {
    double worst = kInf;
    std::vector<double> point;
    void update(double margin, std::initializer_list<double> pt) {
        if (margin < worst) {
            worst = margin;
            point.assign(pt);
        }
    }
};

LemmaReport make_report(const std::string& id, const std::string& grid, const MarginTracker& t,
                        double tolerance) {
    LemmaReport rep;
    rep.lemma_id = id;
    rep.grid_spec = grid;
    rep.worst_margin = t.worst;
    rep.worst_point = t.point;
    rep.tolerance = tolerance;
    rep.passed = t.worst > -tolerance;
    return rep;
}

// Geometric grid r = 1e-3 * 2^k, k = 0..40.
std::vector<double> geometric_r_grid() {
    std::vector<double> g(41);
    double r = 1e-3;
    for (int k = 0; k <= 40; ++k, r *= 2.0) g[k] = r;
    return g;
}

double halton(int index, int base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * (index % base);
        index /= base;
    }
    return r;
}

double rel_diff(double a, double b) {
    const double den = std::max(std::abs(a), std::abs(b));
    if (den < 1e-300) return 0.0;
    return std::abs(a - b) / den;
}

// --- registered checks ------------------------------------------------------

LemmaReport check_mills_bounds(int res, const SolverConfig&) {
    // Explicit constant from the bound's proof: C = max{1/tail(1), 1}.
    const double C = static_cast<double>(1.0L / gauss::std_normal(1.0L).tail);
    MarginTracker t;
    for (int i = 1; i <= res; ++i) {
        const double u = 40.0 * i / res;
        const long double e = gauss::inv_mills(u);
        t.update(static_cast<double>(e - (long double)u), {u});
        t.update(static_cast<double>((long double)u + 1.0L / (long double)u - e), {u});
    }
    for (int i = 0; i <= res; ++i) {
        const double u = -40.0 + 80.0 * i / res;
        const long double e = gauss::inv_mills(u);
        const double up = u > 0.0 ? u : 0.0;
        t.update(static_cast<double>((long double)up + (long double)C - e), {u});
    }
    std::ostringstream g;
    g << "u < E(u) <= u + 1/u on " << res << " points of (0, 40]; E(u) <= u_+ + " << C << " on "
      << (res + 1) << " points of [-40, 40]";
    return make_report("mills_bounds", g.str(), t, 1e-12);
}

LemmaReport check_P_monotone(int, const SolverConfig& cfg) {
    const gauss::QuadratureRule rule = gauss::hermite_rule(cfg.quad_nodes);
    const std::vector<double> grid = geometric_r_grid();
    MarginTracker t;
    double prev = overlap_P(VarianceParam(0.0), rule);
    t.update(prev == 0.0 ? kInf : -1.0, {0.0});
    for (const double r : grid) {
        const double p = overlap_P(VarianceParam(r), rule);
        t.update(p - prev, {r});
        prev = p;
    }
    t.update(1e-2 - (1.0 - overlap_P(VarianceParam(1e6), rule)), {1e6});
    return make_report("P_monotone",
                       "strict increase over r = 0 and 1e-3*2^k, k=0..40; 1-P(1e6) < 1e-2", t, 1e-8);
}

LemmaReport check_A_monotone_range(int, const SolverConfig& cfg) {
    const gauss::QuadratureRule rule = gauss::hermite_rule(cfg.quad_nodes);
    const std::vector<double> grid = geometric_r_grid();
    constexpr double kTwoOverPi = 0.63661977236758134307553505349006;
    MarginTracker t;
    double prev = cap_A(VarianceParam(0.0), rule);
    t.update(prev == 0.0 ? kInf : -1.0, {0.0});
    for (const double r : grid) {
        const double a = cap_A(VarianceParam(r), rule);
        t.update(a - prev, {r});
        t.update(kTwoOverPi - a, {r});
        prev = a;
    }
    return make_report("A_monotone_range",
                       "strict increase and A < 2/pi over r = 0 and 1e-3*2^k, k=0..40", t, 1e-8);
}

LemmaReport check_B_continuity_endpoints(int res, const SolverConfig& cfg) {
    const gauss::QuadratureRule rule = gauss::hermite_rule(cfg.quad_nodes);
    MarginTracker t;
    for (const double kappa : {0.0, 1.0, 2.0}) {
        const Margin k(kappa);
        // endpoint values
        const long double e = gauss::inv_mills((long double)kappa);
        t.update(1e-12 - std::abs(big_B(Overlap(0.0), k, rule) - static_cast<double>(e * e)),
                 {0.0, kappa});
        t.update(1e-3 - std::abs(big_B(Overlap(1.0 - 1e-6), k, rule) - c_kappa(k)), {1.0 - 1e-6, kappa});
        // finiteness plus a bounded-increment continuity witness: |B'| < 1
        // because g takes values in (-1, 1/18], so |dB| <= dq with headroom 2.
        double prev = big_B(Overlap(0.0), k, rule);
        for (int i = 1; i <= res; ++i) {
            const double q = 0.99 * i / res;
            const double b = big_B(Overlap(q), k, rule);
            if (!std::isfinite(b)) {
                t.update(-kInf, {q, kappa});
                continue;
            }
            t.update(2.0 * (0.99 / res) - std::abs(b - prev), {q, kappa});
            prev = b;
        }
        for (const double q : {1.0 - 1e-4, 1.0 - 1e-5}) {
            if (!std::isfinite(big_B(Overlap(q), k, rule))) t.update(-kInf, {q, kappa});
        }
    }
    std::ostringstream g;
    g << "kappa in {0,1,2}: |B(0)-E(kappa)^2| <= 1e-12; |B(1-1e-6)-C_kappa| <= 1e-3; "
      << "finite with |dB| <= 2 dq on " << res << " points of [0, 0.99]";
    return make_report("B_continuity_endpoints", g.str(), t, 1e-8);
}

LemmaReport check_B_monotone(int res, const SolverConfig& cfg) {
    const gauss::QuadratureRule rule = gauss::hermite_rule(cfg.quad_nodes);
    MarginTracker t;
    std::vector<double> qs;
    for (double q = 0.0; q < 0.951; q += 0.05) qs.push_back(q);
    qs.push_back(0.99);
    qs.push_back(0.999);
    for (const double kappa : {0.0, 0.5, 1.0, 2.0, 5.0}) {
        const Margin k(kappa);
        double prev = big_B(Overlap(qs[0]), k, rule);
        for (std::size_t i = 1; i < qs.size(); ++i) {
            const double b = big_B(Overlap(qs[i]), k, rule);
            t.update(prev - b, {qs[i], kappa});
            prev = b;
        }
        for (int i = 1; i <= res; ++i) {
            const double tt = static_cast<double>(i) / (res + 1);
            t.update(-b_prime(Overlap(tt), k, rule), {tt, kappa});
        }
    }
    std::ostringstream g;
    g << "kappa in {0,0.5,1,2,5}: pairwise decrease on q in {0,0.05,..,0.95,0.99,0.999}; "
      << "b_prime < 0 on " << res << " points of (0, 1)";
    return make_report("B_monotone", g.str(), t, 1e-8);
}

LemmaReport check_Bprime_matches_fd(int, const SolverConfig& cfg) {
    const gauss::QuadratureRule rule = gauss::hermite_rule(cfg.quad_nodes);
    const double h = 1e-5;
    MarginTracker t;
    for (const double kappa : {0.0, 1.0}) {
        const Margin k(kappa);
        for (const double tt : {0.1, 0.5, 0.9}) {
            const double fd =
                (big_B(Overlap(tt + h), k, rule) - big_B(Overlap(tt - h), k, rule)) / (2.0 * h);
            const double an = b_prime(Overlap(tt), k, rule);
            t.update(1e-5 - std::abs(fd - an) / std::abs(an), {tt, kappa});
        }
    }
    return make_report("Bprime_matches_fd",
                       "relative FD match (step 1e-5) <= 1e-5 at t in {0.1,0.5,0.9}, kappa in {0,1}",
                       t, 0.0);
}

LemmaReport check_g_two_forms(int res, const SolverConfig&) {
    MarginTracker t;
    for (int i = 0; i <= res; ++i) {
        const double u = -20.0 + 40.0 * i / res;
        t.update(1e-11 - rel_diff(g_fun(u), g_fun_from_derivatives(u)), {u});
    }
    std::ostringstream g;
    g << "quartic vs derivative form of g agree to rel 1e-11 on " << (res + 1)
      << " points of [-20, 20]";
    return make_report("g_two_forms", g.str(), t, 0.0);
}

LemmaReport check_g_decreasing_pos(int res, const SolverConfig&) {
    MarginTracker t;
    double prev = g_fun(0.0);
    for (int i = 1; i <= res; ++i) {
        const double u = 20.0 * i / res;
        const double v = g_fun(u);
        t.update(prev - v, {u});
        prev = v;
    }
    std::ostringstream g;
    g << "strict decrease of g on " << (res + 1) << " points of [0, 20]";
    return make_report("g_decreasing_pos", g.str(), t, 1e-12);
}

LemmaReport check_g_neg_bound(int res, const SolverConfig&) {
    MarginTracker t;
    for (int i = 0; i <= res; ++i) {
        const double u = -20.0 + 20.0 * i / res;
        t.update(kOne18 - g_fun(u), {u});
    }
    std::ostringstream g;
    g << "g <= 1/18 on " << (res + 1) << " points of [-20, 0]";
    return make_report("g_neg_bound", g.str(), t, 1e-12);
}

LemmaReport check_hankel_feasible(int res, const SolverConfig&) {
    MarginTracker t;
    for (int i = 0; i <= res; ++i) {
        const double u = -10.0 + 20.0 * i / res;
        const TruncMoments m = trunc_moments(u);
        t.update(m.det_m1, {u});
        t.update(m.det_m2, {u});
        t.update(m.var_y, {u});
        if (u >= 0.0) {
            const double d = static_cast<double>(gauss::mills_gap(u));
            const double x = u * d, y = d * d;
            t.update(y, {u});
            t.update(2.0 / 3.0 - y, {u});
            t.update(-f_xy(x, y), {u});
        }
    }
    std::ostringstream g;
    g << "det M1 >= 0, det M2~ >= 0, Var(Y) > 0 on " << (res + 1)
      << " points of [-10, 10]; 0 < d^2 < 2/3 and F(ud, d^2) < 0 for u >= 0";
    return make_report("hankel_feasible", g.str(), t, 1e-10);
}

LemmaReport check_F_region_negative(int res, const SolverConfig&) {
    MarginTracker t;
    const auto r_minus = [](double y) { return 0.5 * (3.0 - y - std::sqrt(y * y + 6.0 * y + 1.0)); };
    // deterministic low-discrepancy interior samples of the constraint region
    int accepted = 0;
    for (int i = 1; accepted < res && i <= 50 * res; ++i) {
        const double x = halton(i, 2);
        const double y = (2.0 / 3.0) * halton(i, 3);
        if (y <= 0.0) continue;
        if (x + 2.0 * y < 1.0) continue;
        if (x * x + x * y - 3.0 * x - 3.0 * y + 2.0 < 0.0) continue;
        if (x + y >= 1.0) continue;
        ++accepted;
        t.update(-f_xy(x, y), {x, y});
    }
    // boundary families from the region's description
    for (int i = 1; i <= res; ++i) {
        const double y1 = 0.5 * i / (res + 1);
        t.update(-f_xy(1.0 - 2.0 * y1, y1), {1.0 - 2.0 * y1, y1});
        const double y2 = (2.0 / 3.0) * i / (res + 1);
        t.update(-f_xy(r_minus(y2), y2), {r_minus(y2), y2});
        const double y3 = 0.5 + (2.0 / 3.0 - 0.5) * i / (res + 1);
        if (y3 < 2.0 / 3.0) t.update(-f_xy(0.0, y3), {0.0, y3});
    }
    std::ostringstream g;
    g << "F < 0 on " << accepted << " Halton samples of {x>=0, 0<y<2/3, x+2y>=1, "
      << "x^2+xy-3x-3y+2>=0, x+y<1} plus boundaries x=1-2y, x=r_-(y), x=0";
    return make_report("F_region_negative", g.str(), t, 1e-12);
}

LemmaReport check_critical_value_bound(int res, const SolverConfig&) {
    MarginTracker t;
    for (int i = 1; i <= res; ++i) {
        const double rho = static_cast<double>(i) / (res + 1);
        t.update(kOne18 - g_critical_value(rho), {rho});
        const long double r = rho;
        const long double quartic =
            36.0L + r * (-144.0L + r * (210.0L + r * (-120.0L + r * 19.0L)));
        t.update(static_cast<double>(quartic - 1.0L), {rho});
    }
    std::ostringstream g;
    g << "rational <= 1/18 and 19r^4-120r^3+210r^2-144r+36 >= 1 on " << res
      << " points of (0, 1)";
    return make_report("critical_value_bound", g.str(), t, 1e-12);
}

LemmaReport check_pi_estimate(int, const SolverConfig&) {
    MarginTracker t;
    const long double pi = 3.14159265358979323846264338327950288L;
    t.update(static_cast<double>(4.0L * (pi - 3.0L) / (pi * pi) - (long double)kOne18),
             {static_cast<double>(pi)});
    return make_report("pi_estimate", "single evaluation: 4(pi-3)/pi^2 > 1/18", t, 1e-12);
}

LemmaReport check_logtail_chernoff(int res, const SolverConfig&) {
    MarginTracker t;
    for (int i = 1; i <= res; ++i) {
        const double u = 40.0 * i / res;
        const double lt = static_cast<double>(gauss::log_tail(u));
        t.update(-0.5 * u * u - lt, {u});
        t.update(-0.5 * u * u - std::log(u) - lt, {u});
    }
    std::ostringstream g;
    g << "log tail(u) <= -u^2/2 and <= -u^2/2 - log u on " << res << " points of (0, 40]";
    return make_report("logtail_chernoff", g.str(), t, 1e-12);
}

LemmaReport check_mills_sq_gap(int res, const SolverConfig&) {
    MarginTracker t;
    for (int i = 0; i <= res; ++i) {
        const double u = -40.0 + 80.0 * i / res;
        const long double e = gauss::inv_mills(u);
        const long double up = u > 0.0 ? (long double)u : 0.0L;
        const long double gap = e * e - up * up;
        t.update(static_cast<double>(gap), {u});
        t.update(static_cast<double>(3.0L - gap), {u});
    }
    std::ostringstream g;
    g << "0 <= E(u)^2 - (u_+)^2 <= 3 on " << (res + 1) << " points of [-40, 40]";
    return make_report("mills_sq_gap", g.str(), t, 1e-12);
}

LemmaReport check_theorem2_approach(int, const SolverConfig& cfg) {
    MarginTracker t;
    std::ostringstream extra;
    for (const double kappa : {0.0, 1.0}) {
        const Margin k(kappa);
        const double ac = alpha_c(k);
        std::vector<SaddlePoint> pts;
        for (int kk = 1; kk <= 12; ++kk) {
            const double a = ac * (1.0 - std::pow(2.0, -kk));
            const auto s = solve_saddle(a, k, cfg);
            if (!s) {
                t.update(-kInf, {kappa, static_cast<double>(kk)});
                continue;
            }
            pts.push_back(*s);
        }
        if (pts.size() < 12) continue;
        int first_decreasing = 12;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            t.update(pts[i].q - pts[i - 1].q, {kappa, static_cast<double>(i + 1)});
            t.update(pts[i].r - pts[i - 1].r, {kappa, static_cast<double>(i + 1)});
            if (pts[i].rs_value < pts[i - 1].rs_value)
                first_decreasing = std::min<int>(first_decreasing, static_cast<int>(i + 1));
        }
        // divergence evidence: the tail of the rs sequence decreases and the
        // endpoint clears the pre-confirmed thresholds
        t.update(pts[10].rs_value - pts[11].rs_value, {kappa, 12.0});
        t.update(pts[11].q - 0.99, {kappa, 12.0});
        t.update(-1.0 - pts[11].rs_value, {kappa, 12.0});
        extra << " kappa=" << kappa << ": rs decreasing from k=" << first_decreasing << ";";
    }
    std::ostringstream g;
    g << "alpha_k = alpha_c (1 - 2^-k), k=1..12, kappa in {0,1}: q,r strictly increasing, "
      << "q_12 > 0.99, rs_12 < -1, rs tail decreasing;" << extra.str();
    return make_report("theorem2_approach", g.str(), t, 1e-8);
}

using CheckFn = LemmaReport (*)(int, const SolverConfig&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> reg = {
        {"mills_bounds", check_mills_bounds},
        {"P_monotone", check_P_monotone},
        {"A_monotone_range", check_A_monotone_range},
        {"B_continuity_endpoints", check_B_continuity_endpoints},
        {"B_monotone", check_B_monotone},
        {"Bprime_matches_fd", check_Bprime_matches_fd},
        {"g_two_forms", check_g_two_forms},
        {"g_decreasing_pos", check_g_decreasing_pos},
        {"g_neg_bound", check_g_neg_bound},
        {"hankel_feasible", check_hankel_feasible},
        {"F_region_negative", check_F_region_negative},
        {"critical_value_bound", check_critical_value_bound},
        {"pi_estimate", check_pi_estimate},
        {"logtail_chernoff", check_logtail_chernoff},
        {"mills_sq_gap", check_mills_sq_gap},
        {"theorem2_approach", check_theorem2_approach},
    };
    return reg;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

LemmaReport verify(const std::string& lemma_id, int resolution, const SolverConfig& cfg) {
    if (resolution < 100)
        throw std::invalid_argument("verify: resolution must be >= 100, got " +
                                    std::to_string(resolution));
    cfg.validate();
    for (const auto& [id, fn] : registry()) {
        if (id != lemma_id) continue;
        try {
            return fn(resolution, cfg);
        } catch (const std::exception& e) {
            LemmaReport rep;
            rep.lemma_id = lemma_id;
            rep.grid_spec = std::string("check aborted: ") + e.what();
            rep.worst_margin = -kInf;
            rep.passed = false;
            rep.tolerance = 0.0;
            return rep;
        }
    }
    throw std::invalid_argument("verify: unknown lemma id '" + lemma_id + "'");
}

std::vector<LemmaReport> verify_all(int resolution, const SolverConfig& cfg) {
    std::vector<LemmaReport> reports;
    reports.reserve(lemma_ids().size());
    for (const std::string& id : lemma_ids()) reports.push_back(verify(id, resolution, cfg));
    return reports;
}

}  // namespace rscap::lemmas
