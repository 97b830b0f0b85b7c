#include "garma/imputation.hpp"

#include <cmath>
#include <stdexcept>

#include "garma/distributions.hpp"
#include "garma/link.hpp"
#include "garma/parallel.hpp"
#include "garma/seeding.hpp"

namespace garma {

const char* criterion_name(Criterion c) {
    return c == Criterion::CVSC ? "cvsc" : "vrsc";
}

Criterion criterion_from_name(const std::string& name) {
    if (name == "cvsc") return Criterion::CVSC;
    if (name == "vrsc") return Criterion::VRSC;
    throw std::invalid_argument("unknown stopping criterion: " + name);
}

namespace {

double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace

std::vector<double> pooled_mean(const std::vector<std::vector<double>>& estimates) {
    if (estimates.empty())
        throw std::invalid_argument("pooled_mean: empty estimate set");
    std::vector<double> mean(estimates.front().size(), 0.0);
    for (const auto& e : estimates)
        for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += e[i];
    for (double& v : mean) v /= static_cast<double>(estimates.size());
    return mean;
}

std::vector<double> pooled_sd(const std::vector<std::vector<double>>& estimates) {
    if (estimates.empty())
        throw std::invalid_argument("pooled_sd: empty estimate set");
    const std::vector<double> mean = pooled_mean(estimates);
    std::vector<double> sd(mean.size(), 0.0);
    if (estimates.size() < 2) return sd;
    for (const auto& e : estimates)
        for (std::size_t i = 0; i < mean.size(); ++i) {
            const double d = e[i] - mean[i];
            sd[i] += d * d;
        }
    for (double& v : sd) v = std::sqrt(v / static_cast<double>(estimates.size() - 1));
    return sd;
}

bool cvsc_update(CvscState& state, const std::vector<double>& gamma_new, double tau) {
    state.distances.push_back(euclidean(state.last, gamma_new));
    state.last = gamma_new;
    if (state.distances.size() < 2) return false;

    const auto& d = state.distances;
    const std::size_t first = state.window2 ? d.size() - 2 : 0;
    const std::size_t count = d.size() - first;
    double m = 0.0;
    for (std::size_t i = first; i < d.size(); ++i) m += d[i];
    m /= static_cast<double>(count);
    if (m == 0.0) {
        // every distance is zero: the pooled estimates stopped moving
        state.coeffs.push_back(0.0);
        return true;
    }
    double s2 = 0.0;
    for (std::size_t i = first; i < d.size(); ++i) {
        const double dev = d[i] - m;
        s2 += dev * dev;
    }
    if (!state.unnormalized && count > 1) s2 /= static_cast<double>(count - 1);
    state.coeffs.push_back(std::sqrt(s2) / m);

    if (state.coeffs.size() < 2) return false;
    const double c_prev = state.coeffs[state.coeffs.size() - 2];
    const double c_new = state.coeffs.back();
    if (c_prev == 0.0) return true; // ratio undefined at zero variation
    return std::abs(c_new / c_prev - 1.0) < tau;
}

bool vrsc_update(VrscState& state, const std::vector<double>& gamma_new, double tau) {
    state.history.push_back(gamma_new);
    const std::size_t dim = gamma_new.size();
    const std::size_t count = state.history.size();

    std::vector<double> mean(dim, 0.0);
    for (const auto& g : state.history)
        for (std::size_t i = 0; i < dim; ++i) mean[i] += g[i];
    for (double& v : mean) v /= static_cast<double>(count);

    std::vector<double> var(dim, 0.0);
    for (const auto& g : state.history)
        for (std::size_t i = 0; i < dim; ++i) {
            const double dev = g[i] - mean[i];
            var[i] += dev * dev;
        }
    for (double& v : var) v /= static_cast<double>(count - 1);
    state.variances.push_back(std::move(var));

    if (state.variances.size() < 2) return false;
    state.distances.push_back(
        euclidean(state.variances[state.variances.size() - 2], state.variances.back()));
    if (state.distances.size() < 2) return false;
    const double d_prev = state.distances[state.distances.size() - 2];
    return std::abs(state.distances.back() - d_prev) < tau;
}

CompleteSeries impute_pass(const ObservedSeries& series, const ParamVector& gamma_ref,
                           const ModelSpec& spec, std::mt19937_64& rng) {
    const int n = static_cast<int>(series.size());
    const int p = spec.p;
    const int q = spec.q;
    const int m = spec.cond_offset();

    // The inverse link saturates at [eps, 1-eps] for |eta| >= ~14, so capping
    // the link-scale state loses nothing; it keeps the hybrid recursion
    // bounded when the reference parameters are unstable (|theta| > 1 can
    // happen for starting values fitted on very short runs).
    constexpr double kEtaBound = 35.0;

    CompleteSeries y(n);
    std::vector<double> ly(n);
    std::vector<double> r(n, 0.0);
    CondDistParams cd;
    cd.nu = gamma_ref.nu;
    cd.rho = spec.rho;

    for (int t = 0; t < n; ++t) {
        double eta = gamma_ref.alpha;
        if (t >= m) {
            for (int j = 0; j < p; ++j) eta += gamma_ref.phi[j] * (ly[t - 1 - j] - gamma_ref.alpha);
            for (int i = 0; i < q; ++i) eta += gamma_ref.theta[i] * r[t - 1 - i];
        }
        if (!std::isfinite(eta))
            throw std::domain_error("impute_pass: non-finite eta");
        eta = std::clamp(eta, -kEtaBound, kEtaBound);
        if (series.observed[t]) {
            y[t] = series.values[t];
        } else {
            cd.mu = link_inv(eta);
            y[t] = sample(spec.family, cd, rng);
        }
        ly[t] = link_eval(y[t]);
        r[t] = (t < m) ? 0.0 : ly[t] - eta;
    }
    return y;
}

MultiImputeResult multi_impute_step(const ObservedSeries& series, const ParamVector& gamma_ref,
                                    const ModelSpec& spec, int K, std::uint64_t seed, int h,
                                    int jobs, const SimplexOptions& options) {
    if (K < 2)
        throw std::invalid_argument("multi_impute_step: need K >= 2");

    MultiImputeResult out;
    std::vector<std::vector<double>> slots(K);
    std::vector<char> success(K, 0);

    parallel_for(K, jobs, [&](int k) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(h),
                                     static_cast<std::uint64_t>(k)));
        try {
            const CompleteSeries pass = impute_pass(series, gamma_ref, spec, rng);
            if (k == 0) out.first_pass = pass;
            // A reference fitted on a very short starting run can be so far
            // outside the stable region that its likelihood is floored on
            // the completed series; a simplex started there sees a flat
            // sentinel plateau and cannot move. Fall back to the default
            // start so the inner fit is a real estimate.
            ParamVector start = gamma_ref;
            if (partial_loglik(pass, gamma_ref, spec) <= kLoglikFloor)
                start = default_start(pass, spec);
            const EstimationResult est = estimate_pmle(pass, spec, start, options);
            bool finite = std::isfinite(est.loglik);
            for (double v : est.gamma_hat.flat())
                if (!std::isfinite(v)) finite = false;
            if (finite) {
                slots[k] = est.gamma_hat.flat();
                success[k] = 1;
            }
        } catch (const std::exception&) {
            // hard failure: this inner estimate is dropped
        }
    });

    for (int k = 0; k < K; ++k)
        if (success[k]) out.inner.push_back(std::move(slots[k]));
    if (static_cast<int>(out.inner.size()) * 2 < K)
        throw std::runtime_error("multi_impute_step: fewer than K/2 inner estimates succeeded");
    out.pooled = pooled_mean(out.inner);
    return out;
}

namespace {

// Outer loop shared by the first run and the optional restart. Returns true
// if the criterion fired. h_offset keeps the substream indices distinct
// across a restart.
bool outer_loop(const ObservedSeries& series, const ModelSpec& spec, const ImputationConfig& cfg,
                const ParamVector& gamma0, int h_offset, ImputationResult& res) {
    CvscState cvsc(gamma0.flat());
    cvsc.unnormalized = cfg.cvsc_unnormalized;
    cvsc.window2 = cfg.cvsc_window2;
    VrscState vrsc(gamma0.flat());

    ParamVector ref = gamma0;
    for (int h = 1; h <= cfg.H; ++h) {
        MultiImputeResult step = multi_impute_step(series, ref, spec, cfg.K, cfg.seed,
                                                   h_offset + h, cfg.jobs, cfg.optimizer);
        ParamVector pooled = ParamVector::from_flat(step.pooled, spec.p, spec.q);
        res.trajectory.push_back(pooled);
        res.uncertainty_sd = pooled_sd(step.inner);
        res.representative_series = std::move(step.first_pass);

        const bool fired = cfg.criterion == Criterion::CVSC
                               ? cvsc_update(cvsc, step.pooled, cfg.tau)
                               : vrsc_update(vrsc, step.pooled, cfg.tau);
        ref = pooled;
        // neither criterion is meaningful before the third outer iterate
        if (h >= 3 && fired) {
            res.iterations += h;
            return true;
        }
    }
    res.iterations += cfg.H;
    return false;
}

} // namespace

ImputationResult run_algorithm1(const ObservedSeries& series, const ModelSpec& spec,
                                const ImputationConfig& config) {
    if (config.K < 2 || config.H < 3 || !(config.tau > 0.0))
        throw std::invalid_argument("run_algorithm1: need K >= 2, H >= 3, tau > 0");
    if (series.values.size() != series.observed.size())
        throw std::invalid_argument("run_algorithm1: values/mask size mismatch");

    const ParamVector gamma0 = initial_estimate(series, spec, config.L, config.optimizer);

    ImputationResult res;
    res.trajectory.push_back(gamma0);
    res.uncertainty_sd.assign(gamma0.dim(), 0.0);

    if (series.complete()) {
        // Identity imputation: every inner estimate coincides with the
        // complete-series PMLE, all distances vanish, and both criteria fire
        // at the three-iteration structural minimum.
        res.gamma_hat = gamma0;
        res.iterations = 3;
        res.converged = true;
        res.trajectory.insert(res.trajectory.end(), 3, gamma0);
        res.representative_series = series.values;
        return res;
    }

    bool fired = outer_loop(series, spec, config, gamma0, 0, res);
    if (!fired && config.restart_on_nonconvergence) {
        res.restarted = true;
        fired = outer_loop(series, spec, config, res.trajectory.back(), config.H, res);
    }
    res.converged = fired;
    res.gamma_hat = res.trajectory.back();
    return res;
}

} // namespace garma
