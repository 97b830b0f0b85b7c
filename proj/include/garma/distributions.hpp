#pragma once

#include <random>

#include "garma/types.hpp"

namespace garma {

// Conditional distribution location/shape: mu is the conditional mean for
// Beta, the conditional median for Kumaraswamy and the rho-th quantile for
// Unit-Weibull; nu is the shape parameter shared by all three families.
struct CondDistParams {
    double mu = 0.5;
    double nu = 1.0;
    double rho = 0.5; // Unit-Weibull only
};

// Natural log of the conditional density. Throws std::domain_error when the
// result is not finite (parameter/value degeneracy).
double log_density(Family family, double y, const CondDistParams& params);

// Distribution function on (0,1). Kumaraswamy and Unit-Weibull in closed
// form; Beta via the regularized incomplete beta function.
double cdf(Family family, double y, const CondDistParams& params);

// Inverse distribution function for u in [0,1]; result clamped to
// [kUnitEps, 1 - kUnitEps].
double quantile(Family family, double u, const CondDistParams& params);

// One draw from the family. Kumaraswamy and Unit-Weibull invert their
// closed-form CDFs; Beta uses the two-gamma ratio. Output clamped to
// [kUnitEps, 1 - kUnitEps].
double sample(Family family, const CondDistParams& params, std::mt19937_64& rng);

} // namespace garma
