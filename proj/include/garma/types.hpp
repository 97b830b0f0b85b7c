#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace garma {

enum class Family { Beta, Kumaraswamy, UnitWeibull };
enum class Link { Logit };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// Full parameter of a GARMA(p, q) model: intercept alpha on the link scale,
// AR coefficients phi, MA coefficients theta, positive shape parameter nu.
struct ParamVector {
    double alpha = 0.0;
    std::vector<double> phi;
    std::vector<double> theta;
    double nu = 1.0;

    std::size_t dim() const { return 2 + phi.size() + theta.size(); }

    // Flat layout [alpha, phi_1..phi_p, theta_1..theta_q, nu], used by the
    // optimizer and by all pooling arithmetic.
    std::vector<double> flat() const;
    static ParamVector from_flat(const std::vector<double>& x, int p, int q);
};

struct ModelSpec {
    Family family = Family::Beta;
    int p = 0;
    int q = 0;
    double rho = 0.5; // quantile level, Unit-Weibull only
    Link link = Link::Logit;

    // Conditioning offset m = max(p, q): the first m observations are
    // conditioned upon and contribute no likelihood terms.
    int cond_offset() const { return std::max(p, q); }
};

// Series on (0,1) with explicit observed/missing mask. values[i] is
// meaningful only where observed[i] is true.
struct ObservedSeries {
    std::vector<double> values;
    std::vector<bool> observed;

    std::size_t size() const { return values.size(); }
    std::size_t n_missing() const;
    bool complete() const;
};

using CompleteSeries = std::vector<double>;

// Returns the list of violated invariants; empty means valid.
std::vector<std::string> validate_params(const ParamVector& gamma, const ModelSpec& spec);

// Parameter names in flat order: alpha, phi (phi1, phi2, ... if p > 1),
// theta likewise, nu. Shared by the CSV schemas and report printers.
std::vector<std::string> param_names(int p, int q);

} // namespace garma
