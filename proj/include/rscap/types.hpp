#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace rscap {

/// Margin parameter kappa >= 0.
struct Margin {
    double kappa;
    explicit Margin(double k) : kappa(k) {
        if (!std::isfinite(k) || k < 0.0)
            throw std::domain_error("Margin: kappa must be finite and >= 0, got " + std::to_string(k));
    }
};

/// Overlap order parameter q in [0, 1).
struct Overlap {
    double q;
    explicit Overlap(double value) : q(value) {
        if (!std::isfinite(value) || value < 0.0 || value >= 1.0)
            throw std::domain_error("Overlap: q must lie in [0, 1), got " + std::to_string(value));
    }
};

/// Conjugate variance parameter r >= 0.
struct VarianceParam {
    double r;
    explicit VarianceParam(double value) : r(value) {
        if (!std::isfinite(value) || value < 0.0)
            throw std::domain_error("VarianceParam: r must be finite and >= 0, got " + std::to_string(value));
    }
};

/// An integrand evaluated to a non-finite value at a quadrature node.
class evaluation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The requested quantity exists mathematically but cannot be resolved
/// within the configured numeric range (e.g. a root beyond max_bracket).
class resolution_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace rscap
