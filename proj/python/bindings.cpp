#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

#include "garma/distributions.hpp"
#include "garma/engine.hpp"
#include "garma/harness.hpp"
#include "garma/imputation.hpp"
#include "garma/link.hpp"
#include "garma/missing.hpp"
#include "garma/pmle.hpp"
#include "garma/seeding.hpp"
#include "garma/types.hpp"

namespace py = pybind11;
using namespace garma;

namespace {

ModelSpec make_spec(const std::string& family, int p, int q, double rho) {
    ModelSpec spec;
    spec.family = family_from_name(family);
    spec.p = p;
    spec.q = q;
    spec.rho = rho;
    return spec;
}

ParamVector make_gamma(double alpha, const std::vector<double>& phi,
                       const std::vector<double>& theta, double nu, const ModelSpec& spec) {
    ParamVector g;
    g.alpha = alpha;
    g.phi = phi;
    g.theta = theta;
    g.nu = nu;
    const auto violations = validate_params(g, spec);
    if (!violations.empty())
        throw std::invalid_argument(violations.front());
    return g;
}

py::dict estimate_dict(const EstimationResult& est, const ModelSpec& spec) {
    py::dict d;
    d["alpha"] = est.gamma_hat.alpha;
    d["phi"] = est.gamma_hat.phi;
    d["theta"] = est.gamma_hat.theta;
    d["nu"] = est.gamma_hat.nu;
    d["loglik"] = est.loglik;
    d["converged"] = est.converged;
    d["n_evals"] = est.n_evals;
    d["param_names"] = param_names(spec.p, spec.q);
    return d;
}

} // namespace

PYBIND11_MODULE(_garma, m) {
    m.doc() = "C++ core for GARMA-family time series on (0,1): simulation, partial "
              "maximum likelihood, and multiple-imputation estimation";

    m.def(
        "simulate",
        [](const std::string& family, int p, int q, double alpha, std::vector<double> phi,
           std::vector<double> theta, double nu, int n, int burn_in, std::uint64_t seed,
           double rho) {
            const ModelSpec spec = make_spec(family, p, q, rho);
            const ParamVector g = make_gamma(alpha, phi, theta, nu, spec);
            std::mt19937_64 rng(mix_seed(seed, 1));
            return simulate(g, spec, n, burn_in, rng);
        },
        py::arg("family"), py::arg("p"), py::arg("q"), py::arg("alpha"), py::arg("phi"),
        py::arg("theta"), py::arg("nu"), py::arg("n"), py::arg("burn_in") = 100,
        py::arg("seed") = 1234, py::arg("rho") = 0.5,
        "Simulate a GARMA series; returns a list of values in (0,1).");

    m.def(
        "partial_loglik",
        [](const std::vector<double>& y, const std::string& family, int p, int q, double alpha,
           std::vector<double> phi, std::vector<double> theta, double nu, double rho) {
            const ModelSpec spec = make_spec(family, p, q, rho);
            return partial_loglik(y, make_gamma(alpha, phi, theta, nu, spec), spec);
        },
        py::arg("y"), py::arg("family"), py::arg("p"), py::arg("q"), py::arg("alpha"),
        py::arg("phi"), py::arg("theta"), py::arg("nu"), py::arg("rho") = 0.5);

    m.def(
        "filter_path",
        [](const std::vector<double>& y, const std::string& family, int p, int q, double alpha,
           std::vector<double> phi, std::vector<double> theta, double nu, double rho) {
            const ModelSpec spec = make_spec(family, p, q, rho);
            const MuPath path = filter_mu(y, make_gamma(alpha, phi, theta, nu, spec), spec);
            py::dict d;
            d["mu"] = path.mu;
            d["eta"] = path.eta;
            d["r"] = path.r;
            d["m"] = path.m;
            return d;
        },
        py::arg("y"), py::arg("family"), py::arg("p"), py::arg("q"), py::arg("alpha"),
        py::arg("phi"), py::arg("theta"), py::arg("nu"), py::arg("rho") = 0.5);

    m.def(
        "estimate",
        [](const std::vector<double>& y, const std::string& family, int p, int q, double rho) {
            const ModelSpec spec = make_spec(family, p, q, rho);
            return estimate_dict(estimate_pmle(y, spec), spec);
        },
        py::arg("y"), py::arg("family"), py::arg("p") = 1, py::arg("q") = 1,
        py::arg("rho") = 0.5, "Partial-ML estimate on a complete series.");

    m.def(
        "mcar_mask",
        [](int n, double r, std::uint64_t seed) {
            std::mt19937_64 rng(mix_seed(seed, 2));
            return make_mcar_mask(n, r, rng);
        },
        py::arg("n"), py::arg("r"), py::arg("seed") = 1234,
        "Observed flags with round(r*n) interior positions marked missing.");

    m.def(
        "impute",
        [](const std::vector<double>& values, const std::vector<bool>& observed,
           const std::string& family, int p, int q, int K, int H, double tau,
           const std::string& criterion, int L, std::uint64_t seed, int jobs, double rho) {
            const ModelSpec spec = make_spec(family, p, q, rho);
            ObservedSeries series;
            series.values = values;
            series.observed = observed;
            ImputationConfig cfg;
            cfg.K = K;
            cfg.H = H;
            cfg.tau = tau;
            cfg.criterion = criterion_from_name(criterion);
            cfg.L = L;
            cfg.seed = mix_seed(seed, 3);
            cfg.jobs = jobs;
            const ImputationResult res = run_algorithm1(series, spec, cfg);
            py::dict d;
            d["alpha"] = res.gamma_hat.alpha;
            d["phi"] = res.gamma_hat.phi;
            d["theta"] = res.gamma_hat.theta;
            d["nu"] = res.gamma_hat.nu;
            d["iterations"] = res.iterations;
            d["converged"] = res.converged;
            d["uncertainty_sd"] = res.uncertainty_sd;
            d["completed"] = res.representative_series;
            std::vector<std::vector<double>> traj;
            traj.reserve(res.trajectory.size());
            for (const auto& g : res.trajectory) traj.push_back(g.flat());
            d["trajectory"] = traj;
            d["param_names"] = param_names(spec.p, spec.q);
            return d;
        },
        py::arg("values"), py::arg("observed"), py::arg("family"), py::arg("p") = 1,
        py::arg("q") = 1, py::arg("K") = 25, py::arg("H") = 30, py::arg("tau") = 0.01,
        py::arg("criterion") = "vrsc", py::arg("L") = 0, py::arg("seed") = 1234,
        py::arg("jobs") = 1, py::arg("rho") = 0.5,
        "Iterated multiple-imputation estimation on a partially observed series.");

    m.def(
        "log_density",
        [](const std::string& family, double y, double mu, double nu, double rho) {
            return log_density(family_from_name(family), y, CondDistParams{mu, nu, rho});
        },
        py::arg("family"), py::arg("y"), py::arg("mu"), py::arg("nu"), py::arg("rho") = 0.5);

    m.def(
        "cdf",
        [](const std::string& family, double y, double mu, double nu, double rho) {
            return cdf(family_from_name(family), y, CondDistParams{mu, nu, rho});
        },
        py::arg("family"), py::arg("y"), py::arg("mu"), py::arg("nu"), py::arg("rho") = 0.5);

    m.def(
        "quantile",
        [](const std::string& family, double u, double mu, double nu, double rho) {
            return quantile(family_from_name(family), u, CondDistParams{mu, nu, rho});
        },
        py::arg("family"), py::arg("u"), py::arg("mu"), py::arg("nu"), py::arg("rho") = 0.5);

    m.def("link_eval", [](double y) { return link_eval(y); }, py::arg("y"));
    m.def("link_inv", [](double eta) { return link_inv(eta); }, py::arg("eta"));

#ifdef GARMA_VERSION
    m.attr("__version__") = GARMA_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
