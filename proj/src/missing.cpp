#include "garma/missing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "garma/pmle.hpp"

namespace garma {

std::vector<bool> make_mcar_mask(int n, double r, std::mt19937_64& rng) {
    if (n < 3)
        throw std::invalid_argument("make_mcar_mask: need n >= 3");
    if (!(r >= 0.0 && r < 1.0))
        throw std::invalid_argument("make_mcar_mask: r outside [0,1)");
    const long n_missing = std::lround(r * n);
    if (n_missing > n - 2)
        throw std::invalid_argument("make_mcar_mask: round(r*n) = " + std::to_string(n_missing) +
                                    " exceeds the " + std::to_string(n - 2) + " interior slots");

    std::vector<int> interior(n - 2);
    std::iota(interior.begin(), interior.end(), 1); // 0-based interior indices 1..n-2
    for (long i = 0; i < n_missing; ++i) {
        std::uniform_int_distribution<long> pick(i, static_cast<long>(interior.size()) - 1);
        std::swap(interior[i], interior[pick(rng)]);
    }
    std::vector<bool> observed(n, true);
    for (long i = 0; i < n_missing; ++i) observed[interior[i]] = false;
    return observed;
}

RunPartition partition_runs(const std::vector<bool>& observed) {
    RunPartition part;
    const int n = static_cast<int>(observed.size());
    int t = 0;
    while (t < n) {
        if (!observed[t]) {
            ++t;
            continue;
        }
        const int first = t;
        while (t < n && observed[t]) ++t;
        part.runs.emplace_back(first, t - 1);
        part.lengths.push_back(t - first);
    }
    return part;
}

std::vector<FilledRun> longest_run(const ObservedSeries& series, int L) {
    if (L < 0)
        throw std::invalid_argument("longest_run: L must be non-negative");
    const RunPartition part = partition_runs(series.observed);
    if (part.runs.empty())
        throw std::invalid_argument("longest_run: no observed values");

    // Merge observed runs whenever the gap separating them has length <= L.
    std::vector<std::pair<int, int>> blocks;
    for (const auto& [first, last] : part.runs) {
        if (!blocks.empty() && first - blocks.back().second - 1 <= L)
            blocks.back().second = last;
        else
            blocks.emplace_back(first, last);
    }

    int best = 0;
    for (const auto& [first, last] : blocks) best = std::max(best, last - first + 1);

    std::vector<FilledRun> out;
    for (const auto& [first, last] : blocks) {
        if (last - first + 1 != best) continue;
        FilledRun run;
        run.first = first;
        run.last = last;
        run.values.assign(series.values.begin() + first, series.values.begin() + last + 1);
        int prev = first;
        for (int t = first + 1; t <= last; ++t) {
            if (!series.observed[t]) continue;
            if (t > prev + 1) {
                const double va = series.values[prev];
                const double vb = series.values[t];
                for (int s = prev + 1; s < t; ++s)
                    run.values[s - first] =
                        va + (vb - va) * static_cast<double>(s - prev) / static_cast<double>(t - prev);
            }
            prev = t;
        }
        out.push_back(std::move(run));
    }
    return out;
}

ParamVector initial_estimate(const ObservedSeries& series, const ModelSpec& spec, int L,
                             const SimplexOptions& options) {
    const std::vector<FilledRun> runs = longest_run(series, L);
    const int dim = 2 + spec.p + spec.q;
    const int length = static_cast<int>(runs.front().values.size());
    if (length <= spec.cond_offset() + dim)
        throw RunTooShortError("initial estimate infeasible: longest run has " +
                               std::to_string(length) + " points but more than " +
                               std::to_string(spec.cond_offset() + dim) +
                               " are needed; rerun with a larger gap bridge L");

    std::vector<double> acc(dim, 0.0);
    for (const FilledRun& run : runs) {
        const EstimationResult est =
            estimate_pmle(run.values, spec, default_start(run.values, spec), options);
        const std::vector<double> f = est.gamma_hat.flat();
        for (int i = 0; i < dim; ++i) acc[i] += f[i];
    }
    for (double& v : acc) v /= static_cast<double>(runs.size());
    return ParamVector::from_flat(acc, spec.p, spec.q);
}

} // namespace garma
