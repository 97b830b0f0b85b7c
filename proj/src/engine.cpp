#include "garma/engine.hpp"

#include <cmath>
#include <stdexcept>

#include "garma/distributions.hpp"
#include "garma/link.hpp"

namespace garma {

MuPath filter_mu(const CompleteSeries& y, const ParamVector& gamma, const ModelSpec& spec) {
    const int n = static_cast<int>(y.size());
    const int p = spec.p;
    const int q = spec.q;
    const int m = spec.cond_offset();

    MuPath path;
    path.m = m;
    path.mu.resize(n);
    path.eta.resize(n);
    path.r.assign(n, 0.0);

    std::vector<double> ly(n);
    for (int t = 0; t < n; ++t) ly[t] = link_eval(y[t]);

    for (int t = 0; t < std::min(m, n); ++t) {
        path.eta[t] = ly[t];
        path.mu[t] = clamp_unit(y[t]);
    }
    for (int t = m; t < n; ++t) {
        double eta = gamma.alpha;
        for (int j = 0; j < p; ++j) eta += gamma.phi[j] * (ly[t - 1 - j] - gamma.alpha);
        for (int i = 0; i < q; ++i) eta += gamma.theta[i] * path.r[t - 1 - i];
        if (!std::isfinite(eta))
            throw std::domain_error("filter_mu: non-finite eta");
        path.eta[t] = eta;
        path.mu[t] = link_inv(eta);
        path.r[t] = ly[t] - eta;
    }
    return path;
}

CompleteSeries simulate(const ParamVector& gamma, const ModelSpec& spec, int n, int burn_in,
                        std::mt19937_64& rng, MuPath* path) {
    if (n < 1 || burn_in < 0)
        throw std::invalid_argument("simulate: need n >= 1 and burn_in >= 0");
    const int p = spec.p;
    const int q = spec.q;
    const int m = spec.cond_offset();
    const int total = n + burn_in;

    std::vector<double> y(total), ly(total), eta(total), mu(total);
    std::vector<double> r(total, 0.0);
    CondDistParams cd;
    cd.nu = gamma.nu;
    cd.rho = spec.rho;

    for (int t = 0; t < total; ++t) {
        double e = gamma.alpha;
        for (int j = 0; j < p; ++j) {
            const int s = t - 1 - j;
            if (s >= 0) e += gamma.phi[j] * (ly[s] - gamma.alpha);
        }
        for (int i = 0; i < q; ++i) {
            const int s = t - 1 - i;
            if (s >= 0) e += gamma.theta[i] * r[s];
        }
        if (!std::isfinite(e))
            throw std::domain_error("simulate: non-finite eta");
        eta[t] = e;
        mu[t] = link_inv(e);
        cd.mu = mu[t];
        y[t] = sample(spec.family, cd, rng);
        ly[t] = link_eval(y[t]);
        r[t] = (t < m) ? 0.0 : ly[t] - e;
    }

    CompleteSeries out(y.begin() + burn_in, y.end());
    if (path) {
        path->m = m;
        path->mu.assign(mu.begin() + burn_in, mu.end());
        path->eta.assign(eta.begin() + burn_in, eta.end());
        path->r.assign(r.begin() + burn_in, r.end());
    }
    return out;
}

PreparedSeries::PreparedSeries(const CompleteSeries& values) {
    const std::size_t n = values.size();
    y.resize(n);
    ly.resize(n);
    log_y.resize(n);
    log_1my.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        y[t] = clamp_unit(values[t]);
        ly[t] = link_eval(values[t]);
        log_y[t] = std::log(y[t]);
        log_1my[t] = std::log1p(-y[t]);
    }
}

double partial_loglik(const PreparedSeries& series, const ParamVector& gamma,
                      const ModelSpec& spec) {
    const int n = static_cast<int>(series.size());
    const int p = spec.p;
    const int q = spec.q;
    const int m = spec.cond_offset();
    if (n <= m) return kLoglikFloor;
    if (!std::isfinite(gamma.nu) || gamma.nu <= 0.0) return kLoglikFloor;
    for (double v : gamma.phi)
        if (!std::isfinite(v)) return kLoglikFloor;
    for (double v : gamma.theta)
        if (!std::isfinite(v)) return kLoglikFloor;
    if (!std::isfinite(gamma.alpha)) return kLoglikFloor;

    const double nu = gamma.nu;
    const double log_half = std::log(0.5);
    double lg_nu = 0.0, log_nu = 0.0, log_rho = 0.0;
    switch (spec.family) {
    case Family::Beta: lg_nu = std::lgamma(nu); break;
    case Family::Kumaraswamy: log_nu = std::log(nu); break;
    case Family::UnitWeibull:
        log_nu = std::log(nu);
        log_rho = std::log(spec.rho);
        break;
    }

    std::vector<double> r(n, 0.0);
    double sum = 0.0;
    for (int t = m; t < n; ++t) {
        double eta = gamma.alpha;
        for (int j = 0; j < p; ++j) eta += gamma.phi[j] * (series.ly[t - 1 - j] - gamma.alpha);
        for (int i = 0; i < q; ++i) eta += gamma.theta[i] * r[t - 1 - i];
        if (!std::isfinite(eta)) return kLoglikFloor;
        r[t] = series.ly[t] - eta;
        const double mu = clamp_unit(1.0 / (1.0 + std::exp(-eta)));

        double term;
        switch (spec.family) {
        case Family::Beta: {
            const double a = nu * mu;
            const double b = nu * (1.0 - mu);
            term = lg_nu - std::lgamma(a) - std::lgamma(b) + (a - 1.0) * series.log_y[t] +
                   (b - 1.0) * series.log_1my[t];
            break;
        }
        case Family::Kumaraswamy: {
            const double b = log_half / std::log1p(-std::pow(mu, nu));
            const double ya = std::exp(nu * series.log_y[t]);
            term = log_nu + std::log(b) + (nu - 1.0) * series.log_y[t] +
                   (b - 1.0) * std::log1p(-ya);
            break;
        }
        case Family::UnitWeibull:
        default: {
            const double log_mu = std::log(mu);
            const double z = series.log_y[t] / log_mu;
            term = log_nu - series.log_y[t] + std::log(log_rho / log_mu) +
                   (nu - 1.0) * std::log(z) + std::pow(z, nu) * log_rho;
            break;
        }
        }
        sum += term;
    }
    return std::isfinite(sum) ? sum : kLoglikFloor;
}

double partial_loglik(const CompleteSeries& y, const ParamVector& gamma, const ModelSpec& spec) {
    return partial_loglik(PreparedSeries(y), gamma, spec);
}

} // namespace garma
