#pragma once

#include "garma/engine.hpp"
#include "garma/nelder_mead.hpp"
#include "garma/types.hpp"

namespace garma {

struct EstimationResult {
    ParamVector gamma_hat;
    double loglik = 0.0;
    bool converged = false;
    int n_evals = 0;
    bool degenerate_series = false; // constant input values
};

// Optimizer starting point: alpha = logit(sample mean), phi = theta = 0,
// nu = 1. The zero MA start mirrors the reference software, whose flat
// likelihood surfaces near theta = 0 are behavior worth reproducing.
ParamVector default_start(const CompleteSeries& y, const ModelSpec& spec);

// Maximizes the partial log-likelihood over gamma by Nelder-Mead. nu is
// searched on the log scale so positivity is structural; alpha, phi, theta
// are unconstrained. Throws std::invalid_argument when the series is shorter
// than m + dim(gamma) + 1.
EstimationResult estimate_pmle(const CompleteSeries& y, const ModelSpec& spec,
                               const ParamVector& start, const SimplexOptions& options = {});
EstimationResult estimate_pmle(const CompleteSeries& y, const ModelSpec& spec);

} // namespace garma
