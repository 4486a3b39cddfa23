#include "rscap/emit.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace rscap::emit {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

ordered_json num_or_null(double x) {
    if (!std::isfinite(x)) return nullptr;
    return x;
}

ordered_json solve_payload(double kappa, double alpha, const std::optional<SaddlePoint>& s) {
    ordered_json j;
    j["kappa"] = kappa;
    j["alpha"] = alpha;
    j["solved"] = s.has_value();
    if (s) {
        j["q"] = s->q;
        j["r"] = s->r;
        j["rs_value"] = s->rs_value;
        j["residual_q"] = s->residual_q;
        j["residual_r"] = s->residual_r;
    } else {
        j["q"] = nullptr;
        j["r"] = nullptr;
        j["rs_value"] = nullptr;
        j["residual_q"] = nullptr;
        j["residual_r"] = nullptr;
    }
    return j;
}

ordered_json verify_payload(const lemmas::LemmaReport& rep) {
    ordered_json j;
    j["lemma"] = rep.lemma_id;
    j["passed"] = rep.passed;
    j["worst_margin"] = num_or_null(rep.worst_margin);
    j["worst_point"] = rep.worst_point;
    j["grid_spec"] = rep.grid_spec;
    j["tolerance"] = rep.tolerance;
    j["note"] = rep.note;
    return j;
}

ordered_json sweep_payload(const SweepRecord& rec) {
    ordered_json j;
    j["alpha"] = rec.alpha;
    j["q"] = num_or_null(rec.q);
    j["r"] = num_or_null(rec.r);
    j["rs_value"] = num_or_null(rec.rs_value);
    j["solved"] = rec.solved;
    j["residual_q"] = num_or_null(rec.residual_q);
    j["residual_r"] = num_or_null(rec.residual_r);
    if (!rec.error.empty()) j["error"] = rec.error;
    return j;
}

}  // namespace

std::string solve_json(double kappa, double alpha, const std::optional<SaddlePoint>& s) {
    return solve_payload(kappa, alpha, s).dump();
}

std::string capacity_json(double kappa, const CapacityResult& c) {
    ordered_json j;
    j["kappa"] = kappa;
    j["alpha_c"] = c.alpha_c;
    j["alpha_star"] = c.alpha_star ? ordered_json(*c.alpha_star) : ordered_json(nullptr);
    j["alpha_star_reason"] =
        c.alpha_star ? ordered_json(nullptr) : ordered_json(c.alpha_star_reason);
    j["bracket_width"] = c.bracket_width ? ordered_json(*c.bracket_width) : ordered_json(nullptr);
    return j.dump();
}

std::string verify_json(const lemmas::LemmaReport& rep) { return verify_payload(rep).dump(); }

std::string verify_all_json(const std::vector<lemmas::LemmaReport>& reps) {
    ordered_json arr = ordered_json::array();
    for (const auto& rep : reps) arr.push_back(verify_payload(rep));
    return arr.dump();
}

std::string sweep_json(const std::vector<SweepRecord>& records) {
    ordered_json arr = ordered_json::array();
    for (const auto& rec : records) arr.push_back(sweep_payload(rec));
    return arr.dump();
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::string out = "alpha,q,r,rs_value,solved,residual_q,residual_r\n";
    for (const auto& rec : records) {
        out += format_double(rec.alpha);
        out += ',';
        out += format_double(rec.q);
        out += ',';
        out += format_double(rec.r);
        out += ',';
        out += format_double(rec.rs_value);
        out += ',';
        out += rec.solved ? "true" : "false";
        out += ',';
        out += format_double(rec.residual_q);
        out += ',';
        out += format_double(rec.residual_r);
        out += '\n';
    }
    return out;
}

std::string solve_human(double kappa, double alpha, const std::optional<SaddlePoint>& s) {
    std::ostringstream os;
    os << "kappa = " << format_double(kappa) << ", alpha = " << format_double(alpha) << "\n";
    if (!s) {
        os << "no solution: alpha >= alpha_c(kappa) = " << format_double(alpha_c(Margin(kappa)))
           << "\n";
        return os.str();
    }
    os << "q          = " << format_double(s->q) << "\n"
       << "r          = " << format_double(s->r) << "\n"
       << "rs_value   = " << format_double(s->rs_value) << "\n"
       << "residual_q = " << format_double(s->residual_q) << "\n"
       << "residual_r = " << format_double(s->residual_r) << "\n";
    return os.str();
}

std::string capacity_human(double kappa, const CapacityResult& c) {
    std::ostringstream os;
    os << "kappa      = " << format_double(kappa) << "\n"
       << "alpha_c    = " << format_double(c.alpha_c) << "\n";
    if (c.alpha_star) {
        os << "alpha_star = " << format_double(*c.alpha_star)
           << " (bracket width " << format_double(*c.bracket_width) << ")\n";
    } else {
        os << "alpha_star = absent: " << c.alpha_star_reason << "\n";
    }
    return os.str();
}

std::string verify_human(const std::vector<lemmas::LemmaReport>& reps) {
    std::ostringstream os;
    for (const auto& rep : reps) {
        os << (rep.passed ? "PASS" : "FAIL") << "  " << rep.lemma_id
           << "  worst_margin = " << format_double(rep.worst_margin) << "\n";
    }
    os << "note: numerical evidence, not proof\n";
    return os.str();
}

}  // namespace rscap::emit
