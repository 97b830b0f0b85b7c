#include "garma/types.hpp"

#include <cmath>
#include <stdexcept>

namespace garma {

const char* family_name(Family f) {
    switch (f) {
    case Family::Beta: return "barma";
    case Family::Kumaraswamy: return "karma";
    case Family::UnitWeibull: return "uwarma";
    }
    return "barma";
}

Family family_from_name(const std::string& name) {
    if (name == "barma" || name == "beta") return Family::Beta;
    if (name == "karma" || name == "kumaraswamy") return Family::Kumaraswamy;
    if (name == "uwarma" || name == "unit-weibull" || name == "uw") return Family::UnitWeibull;
    throw std::invalid_argument("unknown model family: " + name);
}

std::vector<double> ParamVector::flat() const {
    std::vector<double> x;
    x.reserve(dim());
    x.push_back(alpha);
    x.insert(x.end(), phi.begin(), phi.end());
    x.insert(x.end(), theta.begin(), theta.end());
    x.push_back(nu);
    return x;
}

ParamVector ParamVector::from_flat(const std::vector<double>& x, int p, int q) {
    if (static_cast<int>(x.size()) != 2 + p + q)
        throw std::invalid_argument("ParamVector::from_flat: size mismatch");
    ParamVector g;
    g.alpha = x.front();
    g.phi.assign(x.begin() + 1, x.begin() + 1 + p);
    g.theta.assign(x.begin() + 1 + p, x.begin() + 1 + p + q);
    g.nu = x.back();
    return g;
}

std::size_t ObservedSeries::n_missing() const {
    std::size_t k = 0;
    for (bool o : observed)
        if (!o) ++k;
    return k;
}

bool ObservedSeries::complete() const { return n_missing() == 0; }

std::vector<std::string> validate_params(const ParamVector& gamma, const ModelSpec& spec) {
    std::vector<std::string> violations;
    if (!(gamma.nu > 0.0) || !std::isfinite(gamma.nu))
        violations.push_back("nu must be positive");
    if (static_cast<int>(gamma.phi.size()) != spec.p)
        violations.push_back("phi length mismatch");
    if (static_cast<int>(gamma.theta.size()) != spec.q)
        violations.push_back("theta length mismatch");
    if (!std::isfinite(gamma.alpha))
        violations.push_back("alpha must be finite");
    for (double v : gamma.phi)
        if (!std::isfinite(v)) violations.push_back("phi must be finite");
    for (double v : gamma.theta)
        if (!std::isfinite(v)) violations.push_back("theta must be finite");
    if (spec.p < 0 || spec.q < 0)
        violations.push_back("orders p, q must be non-negative");
    if (!(spec.rho > 0.0 && spec.rho < 1.0))
        violations.push_back("rho must lie in (0,1)");
    return violations;
}

std::vector<std::string> param_names(int p, int q) {
    std::vector<std::string> names;
    names.emplace_back("alpha");
    for (int j = 1; j <= p; ++j)
        names.push_back(p == 1 ? "phi" : "phi" + std::to_string(j));
    for (int i = 1; i <= q; ++i)
        names.push_back(q == 1 ? "theta" : "theta" + std::to_string(i));
    names.emplace_back("nu");
    return names;
}

} // namespace garma
