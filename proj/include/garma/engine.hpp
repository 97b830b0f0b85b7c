#pragma once

#include <random>
#include <vector>

#include "garma/types.hpp"

namespace garma {

// Large negative stand-in for -infinity. partial_loglik returns it whenever a
// parameter point degenerates, so derivative-free search can step back.
inline constexpr double kLoglikFloor = -1e10;

// Link-scale path of the systematic component. The first m = max(p, q)
// entries are conditioned upon: eta/mu carry the identity-mapped observations
// there and r is fixed at zero.
struct MuPath {
    std::vector<double> mu;
    std::vector<double> eta;
    std::vector<double> r; // predictive-scale errors r_t = g(y_t) - eta_t
    int m = 0;
};

// Runs the GARMA recursion over a complete series:
//   eta_t = alpha + sum_j phi_j (g(y_{t-j}) - alpha) + sum_i theta_i r_{t-i}
// for t > m, with r_s = 0 for s <= m. Throws std::domain_error if any eta_t
// is non-finite.
MuPath filter_mu(const CompleteSeries& y, const ParamVector& gamma, const ModelSpec& spec);

// Generates burn_in + n values by iterating the recursion, drawing
// y_t ~ f(.|mu_t, nu) at each step, then discards the first burn_in. The
// recursion starts from eta_1 = alpha (pre-sample link values are pinned to
// alpha) and uses the same r_s = 0, s <= m convention as filter_mu, so with
// burn_in = 0 the recorded path is exactly what filter_mu reproduces. When
// path is non-null it receives the mu/eta/r path of the retained values.
CompleteSeries simulate(const ParamVector& gamma, const ModelSpec& spec, int n, int burn_in,
                        std::mt19937_64& rng, MuPath* path = nullptr);

// Sum of conditional log-densities for t > m, with mu_t from the recursion.
// Returns kLoglikFloor instead of raising when any term degenerates.
double partial_loglik(const CompleteSeries& y, const ParamVector& gamma, const ModelSpec& spec);

// Per-series caches for the likelihood hot path: clamped values and their
// logs. Building one of these once per series and calling the prepared
// overload avoids recomputing logs on every optimizer step.
struct PreparedSeries {
    std::vector<double> y;       // clamped into [eps, 1-eps]
    std::vector<double> ly;      // g(y_t)
    std::vector<double> log_y;   // log(y_t)
    std::vector<double> log_1my; // log(1 - y_t)

    explicit PreparedSeries(const CompleteSeries& values);
    std::size_t size() const { return y.size(); }
};

double partial_loglik(const PreparedSeries& series, const ParamVector& gamma,
                      const ModelSpec& spec);

} // namespace garma
