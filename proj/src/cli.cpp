#include "rscap/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "rscap/emit.hpp"

namespace rscap::cli {

namespace {

double parse_env_double(const char* name, double fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    const double x = std::strtod(v, &end);
    if (end == v || *end != '\0')
        throw std::invalid_argument(std::string(name) + ": cannot parse '" + v + "' as a real");
    return x;
}

int parse_env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    const long x = std::strtol(v, &end, 10);
    if (end == v || *end != '\0')
        throw std::invalid_argument(std::string(name) + ": cannot parse '" + v + "' as an integer");
    return static_cast<int>(x);
}

SolverConfig config_from_env() {
    SolverConfig cfg;
    cfg.quad_nodes = parse_env_int("RSCAP_QUAD_NODES", cfg.quad_nodes);
    cfg.rel_tol_r = parse_env_double("RSCAP_REL_TOL_R", cfg.rel_tol_r);
    cfg.max_bracket = parse_env_double("RSCAP_MAX_BRACKET", cfg.max_bracket);
    return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"replica-symmetric saddle point solver for the half-space Ising perceptron"};
    app.name("rscap");
    app.require_subcommand(1);

    double kappa = 0.0, alpha = 0.0, alpha_min = 0.0, alpha_max = 0.0;
    int steps = 0, quad_nodes = 0, resolution = 10000;
    double rel_tol = 0.0;
    std::string solve_fmt = "human", capacity_fmt = "human", sweep_fmt = "csv", verify_fmt = "human";
    std::string lemma, out_path;

    CLI::App* solve = app.add_subcommand("solve", "solve the saddle point system at (alpha, kappa)");
    solve->add_option("--kappa", kappa, "margin, >= 0")->required();
    solve->add_option("--alpha", alpha, "constraint density, > 0")->required();
    solve->add_option("--format", solve_fmt, "human|json");
    solve->add_option("--quad-nodes", quad_nodes, "Gauss-Hermite node count");
    solve->add_option("--rel-tol", rel_tol, "relative tolerance on r");

    CLI::App* capacity_cmd = app.add_subcommand("capacity", "alpha_c and the RS sign change alpha_star");
    capacity_cmd->add_option("--kappa", kappa, "margin, >= 0")->required();
    capacity_cmd->add_option("--format", capacity_fmt, "human|json");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "tabulate solutions over an alpha grid");
    sweep_cmd->add_option("--kappa", kappa, "margin, >= 0")->required();
    sweep_cmd->add_option("--alpha-min", alpha_min)->required();
    sweep_cmd->add_option("--alpha-max", alpha_max)->required();
    sweep_cmd->add_option("--steps", steps, ">= 2")->required();
    sweep_cmd->add_option("--format", sweep_fmt, "csv|json");
    sweep_cmd->add_option("--out", out_path, "write to a file instead of stdout");

    CLI::App* verify_cmd = app.add_subcommand("verify", "numerically certify the registered lemmas");
    verify_cmd->add_option("--lemma", lemma, "lemma id or 'all'")->required();
    verify_cmd->add_option("--resolution", resolution, "grid resolution, >= 100");
    verify_cmd->add_option("--format", verify_fmt, "human|json");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        SolverConfig cfg = config_from_env();

        if (*solve) {
            if (solve_fmt != "human" && solve_fmt != "json")
                throw std::invalid_argument("solve: --format must be human or json");
            if (solve->count("--quad-nodes")) cfg.quad_nodes = quad_nodes;
            if (solve->count("--rel-tol")) cfg.rel_tol_r = rel_tol;
            const auto s = solve_saddle(alpha, Margin(kappa), cfg);
            out << (solve_fmt == "json" ? emit::solve_json(kappa, alpha, s) + "\n"
                                        : emit::solve_human(kappa, alpha, s));
            return 0;
        }

        if (*capacity_cmd) {
            if (capacity_fmt != "human" && capacity_fmt != "json")
                throw std::invalid_argument("capacity: --format must be human or json");
            const CapacityResult c = capacity(Margin(kappa), cfg);
            out << (capacity_fmt == "json" ? emit::capacity_json(kappa, c) + "\n"
                                           : emit::capacity_human(kappa, c));
            return 0;
        }

        if (*sweep_cmd) {
            if (sweep_fmt != "csv" && sweep_fmt != "json")
                throw std::invalid_argument("sweep: --format must be csv or json");
            const auto records = sweep(Margin(kappa), alpha_min, alpha_max, steps, cfg);
            const std::string text =
                sweep_fmt == "json" ? emit::sweep_json(records) + "\n" : emit::sweep_csv(records);
            if (!out_path.empty()) {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw std::invalid_argument("sweep: cannot open output file " + out_path);
                f << text;
            } else {
                out << text;
            }
            return 0;
        }

        if (*verify_cmd) {
            if (verify_fmt != "human" && verify_fmt != "json")
                throw std::invalid_argument("verify: --format must be human or json");
            std::vector<lemmas::LemmaReport> reports;
            if (lemma == "all") {
                reports = lemmas::verify_all(resolution, cfg);
            } else {
                reports.push_back(lemmas::verify(lemma, resolution, cfg));
            }
            if (verify_fmt == "json") {
                out << (lemma == "all" ? emit::verify_all_json(reports)
                                       : emit::verify_json(reports.front()))
                    << "\n";
            } else {
                out << emit::verify_human(reports);
            }
            for (const auto& rep : reports)
                if (!rep.passed) return 3;
            return 0;
        }
    } catch (const resolution_error& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace rscap::cli
