#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rscap/lemmas.hpp"

namespace py = pybind11;
using namespace rscap;

namespace {

const gauss::QuadratureRule& default_rule() {
    static const gauss::QuadratureRule rule = gauss::hermite_rule(201);
    return rule;
}

const gauss::QuadratureRule& pick(const gauss::QuadratureRule* rule) {
    return rule ? *rule : default_rule();
}

SolverConfig make_config(double rel_tol_r, double max_bracket, int quad_nodes, int max_iter) {
    SolverConfig cfg;
    cfg.rel_tol_r = rel_tol_r;
    cfg.max_bracket = max_bracket;
    cfg.quad_nodes = quad_nodes;
    cfg.max_iter = max_iter;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "replica-symmetric saddle point solver for the half-space Ising perceptron";

    py::register_exception<resolution_error>(m, "ResolutionError", PyExc_ArithmeticError);
    py::register_exception<evaluation_error>(m, "EvaluationError", PyExc_ArithmeticError);

    py::class_<gauss::QuadratureRule>(m, "QuadratureRule")
        .def_readonly("nodes", &gauss::QuadratureRule::nodes)
        .def_readonly("weights", &gauss::QuadratureRule::weights)
        .def("__len__", &gauss::QuadratureRule::size);

    m.def("hermite_rule", &gauss::hermite_rule, py::arg("n"));
    m.def(
        "gaussian_expect",
        [](const std::function<double(double)>& f, const gauss::QuadratureRule* rule) {
            return gauss::gaussian_expect(f, pick(rule));
        },
        py::arg("f"), py::arg("rule") = nullptr);

    m.def("std_normal", [](double u) {
        const gauss::NormalEval n = gauss::std_normal(u);
        return py::make_tuple(static_cast<double>(n.pdf), static_cast<double>(n.cdf),
                              static_cast<double>(n.tail));
    }, py::arg("u"));
    m.def("erfcx", [](double x) { return static_cast<double>(gauss::erfcx(x)); }, py::arg("x"));
    m.def("inv_mills", [](double u) { return static_cast<double>(gauss::inv_mills(u)); }, py::arg("u"));
    m.def("inv_mills_prime",
          [](double u) { return static_cast<double>(gauss::inv_mills_prime(u)); }, py::arg("u"));
    m.def("mills_gap", [](double u) { return static_cast<double>(gauss::mills_gap(u)); }, py::arg("u"));
    m.def("log_tail", [](double u) { return static_cast<double>(gauss::log_tail(u)); }, py::arg("u"));

    m.def(
        "overlap_P",
        [](double r, const gauss::QuadratureRule* rule) {
            return overlap_P(VarianceParam(r), pick(rule));
        },
        py::arg("r"), py::arg("rule") = nullptr);
    m.def(
        "sech2_mean",
        [](double r, const gauss::QuadratureRule* rule) {
            return sech2_mean(VarianceParam(r), pick(rule));
        },
        py::arg("r"), py::arg("rule") = nullptr);
    m.def("sech2_integral", [](double r) { return sech2_integral(VarianceParam(r)); }, py::arg("r"));
    m.def(
        "cap_A",
        [](double r, const gauss::QuadratureRule* rule) { return cap_A(VarianceParam(r), pick(rule)); },
        py::arg("r"), py::arg("rule") = nullptr);
    m.def("cap_A_via_I", [](double r) { return cap_A_via_I(VarianceParam(r)); }, py::arg("r"));
    m.def(
        "big_B",
        [](double q, double kappa, const gauss::QuadratureRule* rule) {
            return big_B(Overlap(q), Margin(kappa), pick(rule));
        },
        py::arg("q"), py::arg("kappa"), py::arg("rule") = nullptr);
    m.def("c_kappa", [](double kappa) { return c_kappa(Margin(kappa)); }, py::arg("kappa"));
    m.def("c_kappa_quadrature", [](double kappa) { return c_kappa_quadrature(Margin(kappa)); },
          py::arg("kappa"));
    m.def("alpha_c", [](double kappa) { return alpha_c(Margin(kappa)); }, py::arg("kappa"));
    m.def(
        "r_map",
        [](double q, double alpha, double kappa, const gauss::QuadratureRule* rule) {
            return r_map(Overlap(q), alpha, Margin(kappa), pick(rule));
        },
        py::arg("q"), py::arg("alpha"), py::arg("kappa"), py::arg("rule") = nullptr);
    m.def(
        "rs_free_energy",
        [](double alpha, double kappa, double q, double r, const gauss::QuadratureRule* rule) {
            return rs_free_energy(alpha, Margin(kappa), Overlap(q), VarianceParam(r), pick(rule));
        },
        py::arg("alpha"), py::arg("kappa"), py::arg("q"), py::arg("r"), py::arg("rule") = nullptr);
    m.def(
        "one_dim_f",
        [](double r, double alpha, double kappa, const gauss::QuadratureRule* rule) {
            return one_dim_f(VarianceParam(r), alpha, Margin(kappa), pick(rule));
        },
        py::arg("r"), py::arg("alpha"), py::arg("kappa"), py::arg("rule") = nullptr);
    m.def("g_fun", &g_fun, py::arg("u"));
    m.def("g_fun_from_derivatives", &g_fun_from_derivatives, py::arg("u"));
    m.def("big_H", &big_H, py::arg("u"));
    m.def("f_xy", &f_xy, py::arg("x"), py::arg("y"));
    m.def("g_critical_value", &g_critical_value, py::arg("rho"));
    m.def(
        "b_prime",
        [](double t, double kappa, const gauss::QuadratureRule* rule) {
            return b_prime(Overlap(t), Margin(kappa), pick(rule));
        },
        py::arg("t"), py::arg("kappa"), py::arg("rule") = nullptr);

    py::class_<TruncMoments>(m, "TruncMoments")
        .def_readonly("mu0", &TruncMoments::mu0)
        .def_readonly("mu1", &TruncMoments::mu1)
        .def_readonly("mu2", &TruncMoments::mu2)
        .def_readonly("mu3", &TruncMoments::mu3)
        .def_readonly("mu4", &TruncMoments::mu4)
        .def_readonly("det_m1", &TruncMoments::det_m1)
        .def_readonly("det_m2", &TruncMoments::det_m2)
        .def_readonly("var_y", &TruncMoments::var_y);
    m.def("trunc_moments", &trunc_moments, py::arg("u"));

    py::class_<SaddlePoint>(m, "SaddlePoint")
        .def_readonly("q", &SaddlePoint::q)
        .def_readonly("r", &SaddlePoint::r)
        .def_readonly("residual_q", &SaddlePoint::residual_q)
        .def_readonly("residual_r", &SaddlePoint::residual_r)
        .def_readonly("rs_value", &SaddlePoint::rs_value);

    py::class_<CapacityResult>(m, "CapacityResult")
        .def_readonly("alpha_c", &CapacityResult::alpha_c)
        .def_property_readonly("alpha_star",
                               [](const CapacityResult& c) -> py::object {
                                   if (c.alpha_star) return py::float_(*c.alpha_star);
                                   return py::none();
                               })
        .def_property_readonly("bracket_width",
                               [](const CapacityResult& c) -> py::object {
                                   if (c.bracket_width) return py::float_(*c.bracket_width);
                                   return py::none();
                               })
        .def_readonly("alpha_star_reason", &CapacityResult::alpha_star_reason);

    py::class_<SweepRecord>(m, "SweepRecord")
        .def_readonly("alpha", &SweepRecord::alpha)
        .def_readonly("solved", &SweepRecord::solved)
        .def_readonly("q", &SweepRecord::q)
        .def_readonly("r", &SweepRecord::r)
        .def_readonly("rs_value", &SweepRecord::rs_value)
        .def_readonly("residual_q", &SweepRecord::residual_q)
        .def_readonly("residual_r", &SweepRecord::residual_r)
        .def_readonly("error", &SweepRecord::error);

    py::class_<lemmas::LemmaReport>(m, "LemmaReport")
        .def_readonly("lemma_id", &lemmas::LemmaReport::lemma_id)
        .def_readonly("grid_spec", &lemmas::LemmaReport::grid_spec)
        .def_readonly("worst_margin", &lemmas::LemmaReport::worst_margin)
        .def_readonly("worst_point", &lemmas::LemmaReport::worst_point)
        .def_readonly("passed", &lemmas::LemmaReport::passed)
        .def_readonly("tolerance", &lemmas::LemmaReport::tolerance)
        .def_readonly("note", &lemmas::LemmaReport::note);

    m.def(
        "solve_saddle",
        [](double alpha, double kappa, double rel_tol_r, double max_bracket, int quad_nodes,
           int max_iter) -> py::object {
            const auto s =
                solve_saddle(alpha, Margin(kappa), make_config(rel_tol_r, max_bracket, quad_nodes, max_iter));
            if (!s) return py::none();
            return py::cast(*s);
        },
        py::arg("alpha"), py::arg("kappa"), py::arg("rel_tol_r") = 1e-10,
        py::arg("max_bracket") = 1e12, py::arg("quad_nodes") = 201, py::arg("max_iter") = 500);
    m.def(
        "capacity",
        [](double kappa, double rel_tol_r, double max_bracket, int quad_nodes, int max_iter) {
            return capacity(Margin(kappa), make_config(rel_tol_r, max_bracket, quad_nodes, max_iter));
        },
        py::arg("kappa"), py::arg("rel_tol_r") = 1e-10, py::arg("max_bracket") = 1e12,
        py::arg("quad_nodes") = 201, py::arg("max_iter") = 500);
    m.def(
        "sweep",
        [](double kappa, double alpha_min, double alpha_max, int steps, unsigned threads,
           double rel_tol_r, double max_bracket, int quad_nodes, int max_iter) {
            return sweep(Margin(kappa), alpha_min, alpha_max, steps,
                         make_config(rel_tol_r, max_bracket, quad_nodes, max_iter), threads);
        },
        py::arg("kappa"), py::arg("alpha_min"), py::arg("alpha_max"), py::arg("steps"),
        py::arg("threads") = 0, py::arg("rel_tol_r") = 1e-10, py::arg("max_bracket") = 1e12,
        py::arg("quad_nodes") = 201, py::arg("max_iter") = 500);

    m.def("lemma_ids", [] { return lemmas::lemma_ids(); });
    m.def(
        "verify",
        [](const std::string& lemma_id, int resolution, int quad_nodes) {
            SolverConfig cfg;
            cfg.quad_nodes = quad_nodes;
            return lemmas::verify(lemma_id, resolution, cfg);
        },
        py::arg("lemma_id"), py::arg("resolution") = 10000, py::arg("quad_nodes") = 201);
    m.def(
        "verify_all",
        [](int resolution, int quad_nodes) {
            SolverConfig cfg;
            cfg.quad_nodes = quad_nodes;
            return lemmas::verify_all(resolution, cfg);
        },
        py::arg("resolution") = 10000, py::arg("quad_nodes") = 201);
}
