#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "garma/distributions.hpp"
#include "garma/engine.hpp"
#include "garma/link.hpp"

using namespace garma;

namespace {

ModelSpec barma11() {
    ModelSpec spec;
    spec.family = Family::Beta;
    spec.p = 1;
    spec.q = 1;
    return spec;
}

ParamVector scenario1() {
    ParamVector g;
    g.alpha = 0.5;
    g.phi = {-0.4};
    g.theta = {-0.6};
    g.nu = 20.0;
    return g;
}

// Straight-loop reimplementation of the recursion, kept independent of
// filter_mu on purpose.
std::vector<double> reference_eta(const std::vector<double>& y, const ParamVector& g, int p,
                                  int q) {
    const int n = static_cast<int>(y.size());
    const int m = std::max(p, q);
    std::vector<double> eta(n, 0.0), r(n, 0.0);
    for (int t = m; t < n; ++t) {
        double e = g.alpha;
        for (int j = 1; j <= p; ++j) e += g.phi[j - 1] * (link_eval(y[t - j]) - g.alpha);
        for (int i = 1; i <= q; ++i) e += g.theta[i - 1] * r[t - i];
        eta[t] = e;
        r[t] = link_eval(y[t]) - e;
    }
    return eta;
}

double lag1_autocorr_logit(const std::vector<double>& y) {
    const int n = static_cast<int>(y.size());
    std::vector<double> g(n);
    for (int t = 0; t < n; ++t) g[t] = link_eval(y[t]);
    double mean = 0.0;
    for (double v : g) mean += v;
    mean /= n;
    double num = 0.0, den = 0.0;
    for (int t = 0; t < n; ++t) {
        den += (g[t] - mean) * (g[t] - mean);
        if (t > 0) num += (g[t] - mean) * (g[t - 1] - mean);
    }
    return num / den;
}

} // namespace

TEST_CASE("recursion collapses to the intercept when phi = theta = 0") {
    ModelSpec spec = barma11();
    ParamVector g;
    g.alpha = 0.0;
    g.phi = {0.0};
    g.theta = {0.0};
    g.nu = 5.0;
    const CompleteSeries y{0.2, 0.9, 0.4, 0.6, 0.3};
    const MuPath path = filter_mu(y, g, spec);
    for (int t = path.m; t < 5; ++t) {
        CHECK(path.eta[t] == 0.0);
        CHECK(path.mu[t] == doctest::Approx(0.5).epsilon(1e-15));
    }
}

TEST_CASE("pure AR carry-forward on the link scale") {
    ModelSpec spec = barma11();
    spec.q = 0;
    ParamVector g;
    g.alpha = 0.0;
    g.phi = {1.0};
    g.theta = {};
    g.nu = 5.0;
    const CompleteSeries y{0.2, 0.9, 0.4, 0.6, 0.3};
    const MuPath path = filter_mu(y, g, spec);
    for (int t = 1; t < 5; ++t)
        CHECK(path.eta[t] == doctest::Approx(link_eval(y[t - 1])).epsilon(1e-15));
}

TEST_CASE("filter matches an independent straight-loop recursion") {
    ModelSpec spec = barma11();
    const ParamVector g = scenario1();
    std::mt19937_64 rng(42);
    const CompleteSeries y = simulate(g, spec, 300, 100, rng);
    const MuPath path = filter_mu(y, g, spec);
    const auto eta_ref = reference_eta(y, g, spec.p, spec.q);
    for (int t = path.m; t < 300; ++t)
        CHECK(path.eta[t] == doctest::Approx(eta_ref[t]).epsilon(1e-12));
}

TEST_CASE("mu-path invariants hold on filter output") {
    ModelSpec spec = barma11();
    const ParamVector g = scenario1();
    std::mt19937_64 rng(123);
    for (int rep = 0; rep < 5; ++rep) {
        const CompleteSeries y = simulate(g, spec, 80, 50, rng);
        const MuPath path = filter_mu(y, g, spec);
        for (int t = path.m; t < 80; ++t) {
            CHECK(path.mu[t] == link_inv(path.eta[t]));
            CHECK(path.r[t] == doctest::Approx(link_eval(y[t]) - path.eta[t]).epsilon(1e-15));
        }
        for (int t = 0; t < path.m; ++t) CHECK(path.r[t] == 0.0);
    }
}

TEST_CASE("simulation output stays strictly inside the unit interval") {
    ModelSpec spec = barma11();
    const ParamVector g = scenario1();
    std::mt19937_64 rng(7);
    const CompleteSeries y = simulate(g, spec, 2000, 100, rng);
    for (double v : y) {
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("iid case recovers the marginal mean") {
    ModelSpec spec = barma11();
    ParamVector g;
    g.alpha = 0.0;
    g.phi = {0.0};
    g.theta = {0.0};
    g.nu = 20.0; // Beta(10, 10), mean 1/2
    std::mt19937_64 rng(2024);
    const CompleteSeries y = simulate(g, spec, 5000, 0, rng);
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= y.size();
    CHECK(std::abs(mean - 0.5) < 0.01);
}

TEST_CASE("scenario-1 dynamics produce nonzero lag-1 dependence") {
    ModelSpec spec = barma11();
    std::mt19937_64 rng(5150);
    const CompleteSeries y = simulate(scenario1(), spec, 2000, 100, rng);
    const double rho1 = lag1_autocorr_logit(y);
    // null standard error of an autocorrelation is about 1/sqrt(n)
    CHECK(std::abs(rho1) > 5.0 / std::sqrt(2000.0));
}

TEST_CASE("filtering a simulated series reproduces the recorded path") {
    ModelSpec spec = barma11();
    const ParamVector g = scenario1();
    std::mt19937_64 rng(99);
    MuPath recorded;
    const CompleteSeries y = simulate(g, spec, 400, 0, rng, &recorded);
    const MuPath filtered = filter_mu(y, g, spec);
    for (int t = filtered.m; t < 400; ++t) {
        CHECK(filtered.eta[t] == doctest::Approx(recorded.eta[t]).epsilon(1e-12));
        CHECK(filtered.mu[t] == doctest::Approx(recorded.mu[t]).epsilon(1e-12));
        CHECK(filtered.r[t] == doctest::Approx(recorded.r[t]).epsilon(1e-12));
    }
}

TEST_CASE("uniform cases give exactly zero log-likelihood") {
    ModelSpec spec = barma11();
    ParamVector g;
    g.alpha = 0.0;
    g.phi = {0.0};
    g.theta = {0.0};

    const CompleteSeries y{0.2, 0.9, 0.4, 0.6, 0.3, 0.55, 0.71};
    g.nu = 2.0;
    CHECK(partial_loglik(y, g, spec) == doctest::Approx(0.0).epsilon(1e-13));

    spec.family = Family::Kumaraswamy;
    g.nu = 1.0;
    CHECK(partial_loglik(y, g, spec) == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("log-likelihood equals the sum of densities along the filter path") {
    for (Family family : {Family::Beta, Family::Kumaraswamy, Family::UnitWeibull}) {
        ModelSpec spec = barma11();
        spec.family = family;
        const ParamVector g = scenario1();
        std::mt19937_64 rng(31 + static_cast<int>(family));
        const CompleteSeries y = simulate(g, spec, 250, 100, rng);

        const MuPath path = filter_mu(y, g, spec);
        CondDistParams cd;
        cd.nu = g.nu;
        cd.rho = spec.rho;
        double expected = 0.0;
        for (int t = path.m; t < 250; ++t) {
            cd.mu = path.mu[t];
            expected += log_density(family, y[t], cd);
        }
        CHECK(partial_loglik(y, g, spec) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("likelihood discriminates the true parameter from the zeroed one") {
    ModelSpec spec = barma11();
    const ParamVector truth = scenario1();
    ParamVector zeroed = truth;
    zeroed.phi = {0.0};
    zeroed.theta = {0.0};
    double margin = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        std::mt19937_64 rng(1000 + rep);
        const CompleteSeries y = simulate(truth, spec, 500, 100, rng);
        margin += partial_loglik(y, truth, spec) - partial_loglik(y, zeroed, spec);
    }
    CHECK(margin / 20.0 > 0.0);
}

TEST_CASE("degenerate parameters return the likelihood floor instead of raising") {
    ModelSpec spec = barma11();
    ParamVector g = scenario1();
    g.nu = -1.0;
    const CompleteSeries y{0.2, 0.9, 0.4, 0.6, 0.3};
    CHECK(partial_loglik(y, g, spec) == kLoglikFloor);

    g = scenario1();
    g.theta = {40.0}; // explosive MA recursion overflows eta
    std::mt19937_64 rng(8);
    const CompleteSeries longer = simulate(scenario1(), spec, 400, 0, rng);
    CHECK(partial_loglik(longer, g, spec) < -1e6);
}
