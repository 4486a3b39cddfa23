#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rscap/rs_model.hpp"

// Fixed point solver for { q = P(r), r = alpha B(q)/(1-q)^2 } through the
// strictly increasing one-dimensional reduction f(r) = A(r) - alpha B(P(r)),
// plus capacity location and sweep tabulation.

namespace rscap {

struct SolverConfig {
    double rel_tol_r = 1e-10;   ///< relative bisection tolerance on r
    double max_bracket = 1e12;  ///< cap for bracket expansion
    int quad_nodes = 201;       ///< Gauss-Hermite node count
    int max_iter = 500;         ///< bisection iteration cap

    void validate() const;
};

struct SaddlePoint {
    double q = 0.0;
    double r = 0.0;
    double residual_q = 0.0;  ///< |q - P(r)|
    double residual_r = 0.0;  ///< |r - R_kappa(q, alpha)| / max(1, r)
    double rs_value = 0.0;    ///< RS functional at (q, r)
};

/// Unique solution for alpha < alpha_c(kappa); nullopt when alpha >=
/// alpha_c(kappa), decided by the tail criterion 2/pi - alpha C_kappa <= 0
/// and confirmed by f(max_bracket) < 0. Throws resolution_error if the tail
/// criterion predicts a root but bracket expansion exhausts max_bracket.
std::optional<SaddlePoint> solve_saddle(double alpha, Margin kappa, const SolverConfig& cfg);

struct CapacityResult {
    double alpha_c = 0.0;
    std::optional<double> alpha_star;      ///< RS_* sign change, when found
    std::optional<double> bracket_width;   ///< final bisection bracket width
    std::string alpha_star_reason;         ///< why alpha_star is absent, else empty
};

/// alpha_c from the closed form; alpha_star located as the sign change of
/// alpha -> rs_value along the unique solution path, scanned on 64 points of
/// (0.01 alpha_c, 0.999 alpha_c) and bisected to width <= 1e-6.
CapacityResult capacity(Margin kappa, const SolverConfig& cfg);

struct SweepRecord {
    double alpha = 0.0;
    bool solved = false;
    double q = 0.0, r = 0.0, rs_value = 0.0;
    double residual_q = 0.0, residual_r = 0.0;
    std::string error;  ///< per-record failure, never aborts the sweep
};

/// Records at steps equally spaced alpha values on [alpha_min, alpha_max],
/// in ascending alpha order. threads = 1 forces serial evaluation, 0 picks
/// hardware concurrency; results are identical either way.
std::vector<SweepRecord> sweep(Margin kappa, double alpha_min, double alpha_max, int steps,
                               const SolverConfig& cfg, unsigned threads = 0);

}  // namespace rscap
