#include "garma/distributions.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

#include "garma/link.hpp"

namespace garma {

namespace {

// Kumaraswamy exponent pair implied by the median parameterization:
// a = nu, b = log(0.5) / log(1 - mu^nu), so that F(mu) = 0.5 exactly.
struct KumaPair {
    double a;
    double b;
};

KumaPair kuma_exponents(double mu, double nu) {
    const double t = std::pow(mu, nu);
    return {nu, std::log(0.5) / std::log1p(-t)};
}

} // namespace

double log_density(Family family, double y, const CondDistParams& params) {
    const double yc = clamp_unit(y);
    const double mu = clamp_unit(params.mu);
    const double nu = params.nu;
    double out = 0.0;
    switch (family) {
    case Family::Beta: {
        const double a = nu * mu;
        const double b = nu * (1.0 - mu);
        out = std::lgamma(nu) - std::lgamma(a) - std::lgamma(b) + (a - 1.0) * std::log(yc) +
              (b - 1.0) * std::log1p(-yc);
        break;
    }
    case Family::Kumaraswamy: {
        const auto [a, b] = kuma_exponents(mu, nu);
        const double ya = std::exp(a * std::log(yc));
        out = std::log(a) + std::log(b) + (a - 1.0) * std::log(yc) + (b - 1.0) * std::log1p(-ya);
        break;
    }
    case Family::UnitWeibull: {
        const double log_rho = std::log(params.rho);
        const double log_mu = std::log(mu);
        const double z = std::log(yc) / log_mu; // > 0, both logs negative
        out = std::log(nu) - std::log(yc) + std::log(log_rho / log_mu) +
              (nu - 1.0) * std::log(z) + std::pow(z, nu) * log_rho;
        break;
    }
    }
    if (!std::isfinite(out))
        throw std::domain_error("log_density: non-finite result");
    return out;
}

double cdf(Family family, double y, const CondDistParams& params) {
    if (!(y > 0.0 && y < 1.0))
        throw std::domain_error("cdf: y outside (0,1)");
    const double mu = clamp_unit(params.mu);
    const double nu = params.nu;
    switch (family) {
    case Family::Beta:
        return boost::math::ibeta(nu * mu, nu * (1.0 - mu), y);
    case Family::Kumaraswamy: {
        const auto [a, b] = kuma_exponents(mu, nu);
        // 1 - (1 - y^a)^b, arranged so that y = mu yields exactly 0.5
        return 1.0 - std::exp(b * std::log1p(-std::pow(y, a)));
    }
    case Family::UnitWeibull: {
        const double z = std::log(y) / std::log(mu);
        return std::pow(params.rho, std::pow(z, nu));
    }
    }
    return 0.0;
}

double quantile(Family family, double u, const CondDistParams& params) {
    if (!(u >= 0.0 && u <= 1.0))
        throw std::domain_error("quantile: u outside [0,1]");
    const double mu = clamp_unit(params.mu);
    const double nu = params.nu;
    double y = 0.5;
    switch (family) {
    case Family::Beta:
        y = boost::math::ibeta_inv(nu * mu, nu * (1.0 - mu), u);
        break;
    case Family::Kumaraswamy: {
        const auto [a, b] = kuma_exponents(mu, nu);
        y = std::pow(-std::expm1(std::log1p(-u) / b), 1.0 / a);
        break;
    }
    case Family::UnitWeibull:
        // u = rho^{(log y / log mu)^nu}  =>  y = mu^{(log u / log rho)^{1/nu}}
        y = std::pow(mu, std::pow(std::log(u) / std::log(params.rho), 1.0 / nu));
        break;
    }
    return clamp_unit(y);
}

double sample(Family family, const CondDistParams& params, std::mt19937_64& rng) {
    const double mu = clamp_unit(params.mu);
    double y;
    if (family == Family::Beta) {
        std::gamma_distribution<double> ga(params.nu * mu, 1.0);
        std::gamma_distribution<double> gb(params.nu * (1.0 - mu), 1.0);
        const double g1 = ga(rng);
        const double g2 = gb(rng);
        y = (g1 + g2 > 0.0) ? g1 / (g1 + g2) : mu;
    } else {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double u = unif(rng);
        if (u <= 0.0) u = kUnitEps;
        y = quantile(family, u, params);
    }
    if (!std::isfinite(y)) y = mu;
    return clamp_unit(y);
}

} // namespace garma
