#pragma once

#include <string>
#include <vector>

#include "rscap/saddle.hpp"

// Numerical certification of the lemma-level identities and inequalities
// behind the saddle point analysis. Each registered check samples its
// documented grid deterministically and reports the most adverse signed
// slack observed (positive = satisfied). Grid sampling is evidence, not
// proof; every report says so.

namespace rscap::lemmas {

struct LemmaReport {
    std::string lemma_id;
    std::string grid_spec;             ///< description of the sampled domain
    double worst_margin = 0.0;         ///< most adverse signed slack (positive = satisfied)
    std::vector<double> worst_point;   ///< sample where it occurred
    bool passed = false;               ///< worst_margin > -tolerance
    double tolerance = 0.0;            ///< allowed negative slack for this lemma
    std::string note = "numerical evidence, not proof";
};

/// Registered check identifiers, in registry order.
const std::vector<std::string>& lemma_ids();

/// Run one registered check. Throws std::invalid_argument for an unknown id
/// or resolution < 100. A check that aborts internally yields a failed
/// report rather than propagating.
LemmaReport verify(const std::string& lemma_id, int resolution, const SolverConfig& cfg);

/// All checks in registry order.
std::vector<LemmaReport> verify_all(int resolution, const SolverConfig& cfg);

}  // namespace rscap::lemmas
