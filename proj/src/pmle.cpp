#include "garma/pmle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "garma/link.hpp"

namespace garma {

ParamVector default_start(const CompleteSeries& y, const ModelSpec& spec) {
    if (y.empty())
        throw std::invalid_argument("default_start: empty series");
    const double mean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
    ParamVector g;
    g.alpha = link_eval(mean);
    g.phi.assign(spec.p, 0.0);
    g.theta.assign(spec.q, 0.0);
    g.nu = 1.0;
    return g;
}

EstimationResult estimate_pmle(const CompleteSeries& y, const ModelSpec& spec,
                               const ParamVector& start, const SimplexOptions& options) {
    const int k = static_cast<int>(start.dim());
    if (static_cast<int>(y.size()) <= spec.cond_offset() + k)
        throw std::invalid_argument("estimate_pmle: series shorter than m + dim(gamma)");
    if (static_cast<int>(start.phi.size()) != spec.p ||
        static_cast<int>(start.theta.size()) != spec.q || !(start.nu > 0.0))
        throw std::invalid_argument("estimate_pmle: start incompatible with model spec");

    const PreparedSeries prepared(y);

    std::vector<double> x0 = start.flat();
    x0.back() = std::log(start.nu);

    const auto unpack = [&spec](const std::vector<double>& x) {
        ParamVector g = ParamVector::from_flat(x, spec.p, spec.q);
        g.nu = std::exp(x.back());
        return g;
    };
    const auto objective = [&](const std::vector<double>& x) {
        if (std::abs(x.back()) > 500.0) return -kLoglikFloor; // exp(nu) out of range
        return -partial_loglik(prepared, unpack(x), spec);
    };

    const SimplexResult sr = simplex_minimize(objective, x0, options);

    EstimationResult res;
    res.gamma_hat = unpack(sr.x);
    res.loglik = -sr.value;
    res.converged = sr.converged;
    res.n_evals = sr.n_evals;
    const auto [mn, mx] = std::minmax_element(y.begin(), y.end());
    res.degenerate_series = (*mn == *mx);
    return res;
}

EstimationResult estimate_pmle(const CompleteSeries& y, const ModelSpec& spec) {
    return estimate_pmle(y, spec, default_start(y, spec));
}

} // namespace garma
