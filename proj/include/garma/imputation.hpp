#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "garma/missing.hpp"
#include "garma/pmle.hpp"
#include "garma/types.hpp"

namespace garma {

enum class Criterion { CVSC, VRSC };

const char* criterion_name(Criterion c);
Criterion criterion_from_name(const std::string& name);

struct ImputationConfig {
    int K = 25;        // inner imputations per outer iteration
    int H = 30;        // maximum outer iterations
    double tau = 0.01; // stopping tolerance
    Criterion criterion = Criterion::VRSC;
    int L = 0; // gap bridge for the starting value
    std::uint64_t seed = 0;
    int jobs = 1; // worker threads for the K inner tasks
    bool restart_on_nonconvergence = false;
    // CVSC variants. The default coefficient of variation uses the standard
    // sample variance over the cumulative distance set; see CvscState.
    bool cvsc_unnormalized = false;
    bool cvsc_window2 = false;
    SimplexOptions optimizer;
};

struct ImputationResult {
    ParamVector gamma_hat;
    int iterations = 0;
    bool converged = false;
    std::vector<double> uncertainty_sd;    // per flat component, final iteration's inner spread
    std::vector<ParamVector> trajectory;   // pooled estimates gamma_0..gamma_h
    CompleteSeries representative_series;  // final iteration's first (k = 0) imputed series
    bool restarted = false;
};

// Coefficient-of-variation stopping rule. Tracks Euclidean distances between
// consecutive pooled estimates and the coefficient of variation C = S/m of
// the distance set; fires once |C_h / C_{h-1} - 1| < tau. By default the set
// is cumulative and S is the sample standard deviation (divisor count-1);
// `unnormalized` switches S^2 to the plain sum of squared deviations and
// `window2` restricts the set to the trailing pair of distances. Note the
// two S^2 forms coincide on the first (two-element) set.
struct CvscState {
    std::vector<double> last;      // most recent pooled estimate (flat)
    std::vector<double> distances; // d_1..d_h
    std::vector<double> coeffs;    // C values in computation order
    bool unnormalized = false;
    bool window2 = false;

    explicit CvscState(std::vector<double> gamma0) : last(std::move(gamma0)) {}
};

// Appends the distance to gamma_new and re-evaluates the rule. Degenerate
// guards: all-zero distances (m = 0) and a zero previous coefficient both
// signal perfect convergence and return true.
bool cvsc_update(CvscState& state, const std::vector<double>& gamma_new, double tau);

// Variance-reduction stopping rule. Tracks the component-wise sample
// variance vector of all pooled estimates so far (gamma_0 included) and the
// Euclidean distance between consecutive variance vectors; fires once
// |d_h - d_{h-1}| < tau.
struct VrscState {
    std::vector<std::vector<double>> history;   // pooled estimates, flat
    std::vector<std::vector<double>> variances; // S_1^2, S_2^2, ...
    std::vector<double> distances;              // d_1, d_2, ...

    explicit VrscState(std::vector<double> gamma0) { history.push_back(std::move(gamma0)); }
};

bool vrsc_update(VrscState& state, const std::vector<double>& gamma_new, double tau);

// One sweep over the series: observed values pass through; each missing
// value is drawn from f(.|mu_t, nu) with mu_t reconstructed from the hybrid
// (observed or already-imputed) history. Missing values among the first
// m = max(p, q) positions are drawn from the stationary intercept
// distribution f(.|g^{-1}(alpha), nu).
CompleteSeries impute_pass(const ObservedSeries& series, const ParamVector& gamma_ref,
                           const ModelSpec& spec, std::mt19937_64& rng);

struct MultiImputeResult {
    std::vector<double> pooled;              // flat component-wise mean of the successes
    std::vector<std::vector<double>> inner;  // flat inner estimates, index order
    CompleteSeries first_pass;               // the k = 0 imputed series
};

// K independent impute_pass + estimate_pmle tasks, each on substream
// mix(seed, h, k). Inner estimates that fail outright are dropped (an inner
// fit that merely fails to converge still contributes its point); throws
// std::runtime_error if fewer than half succeed. Pooling is ordered by k, so
// the result does not depend on scheduling.
MultiImputeResult multi_impute_step(const ObservedSeries& series, const ParamVector& gamma_ref,
                                    const ModelSpec& spec, int K, std::uint64_t seed, int h,
                                    int jobs, const SimplexOptions& options);

// The full iterated multiple-imputation estimator: starting value from the
// longest contiguous run, then outer iterations of K-fold imputation and
// re-estimation pooled by component-wise mean, stopped by the configured
// criterion (which can fire from the third outer iteration onward) or capped
// at H. Throws RunTooShortError when no usable starting run exists at
// config.L.
ImputationResult run_algorithm1(const ObservedSeries& series, const ModelSpec& spec,
                                const ImputationConfig& config);

// Component-wise mean and sample standard deviation over flat vectors.
std::vector<double> pooled_mean(const std::vector<std::vector<double>>& estimates);
std::vector<double> pooled_sd(const std::vector<std::vector<double>>& estimates);

} // namespace garma
