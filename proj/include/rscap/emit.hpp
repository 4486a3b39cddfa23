#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rscap/lemmas.hpp"
#include "rscap/saddle.hpp"

// Canonical serialization of solver and verification results. JSON payloads
// keep insertion key order and shortest round-trip reals; CSV uses the fixed
// header alpha,q,r,rs_value,solved,residual_q,residual_r with LF endings.

namespace rscap::emit {

/// Shortest decimal string that parses back to exactly x (nan/inf spelled out).
std::string format_double(double x);

std::string solve_json(double kappa, double alpha, const std::optional<SaddlePoint>& s);
std::string capacity_json(double kappa, const CapacityResult& c);
std::string verify_json(const lemmas::LemmaReport& rep);
std::string verify_all_json(const std::vector<lemmas::LemmaReport>& reps);
std::string sweep_json(const std::vector<SweepRecord>& records);
std::string sweep_csv(const std::vector<SweepRecord>& records);

std::string solve_human(double kappa, double alpha, const std::optional<SaddlePoint>& s);
std::string capacity_human(double kappa, const CapacityResult& c);
std::string verify_human(const std::vector<lemmas::LemmaReport>& reps);

}  // namespace rscap::emit
