#pragma once

#include <functional>
#include <vector>

namespace garma {

struct SimplexOptions {
    double ftol = 1e-8; // stop when the simplex function spread falls below
    double xtol = 0.0;  // stop when the simplex diameter falls below (0 = off)
    int max_evals = 0;  // 0 = 5000 * dimension
    double step = 0.0;  // initial vertex displacement; 0 = 0.1 * max|x0| (0.1 when x0 = 0)
};

struct SimplexResult {
    std::vector<double> x;
    double value = 0.0;
    bool converged = false;
    int n_evals = 0;
};

// Nelder-Mead simplex minimization with the standard coefficients
// (reflection 1, expansion 2, contraction 0.5, shrink 0.5). The objective
// must be total on the search space; sentinel values for infeasible points
// are fine. Deterministic: identical inputs give identical outputs.
SimplexResult simplex_minimize(const std::function<double(const std::vector<double>&)>& objective,
                               const std::vector<double>& start,
                               const SimplexOptions& options = {});

} // namespace garma
