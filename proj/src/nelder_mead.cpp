#include "garma/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace garma {

SimplexResult simplex_minimize(const std::function<double(const std::vector<double>&)>& objective,
                               const std::vector<double>& start, const SimplexOptions& options) {
    const int k = static_cast<int>(start.size());
    if (k < 1)
        throw std::invalid_argument("simplex_minimize: empty start point");
    const int max_evals = options.max_evals > 0 ? options.max_evals : 5000 * k;

    double step = options.step;
    if (step <= 0.0) {
        for (double v : start) step = std::max(step, 0.1 * std::abs(v));
        if (step == 0.0) step = 0.1;
    }

    std::vector<std::vector<double>> pts(k + 1, start);
    for (int i = 0; i < k; ++i) pts[i + 1][i] += step;

    SimplexResult res;
    std::vector<double> fv(k + 1);
    for (int i = 0; i <= k; ++i) fv[i] = objective(pts[i]);
    res.n_evals = k + 1;

    constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
    std::vector<int> order(k + 1);
    std::vector<double> centroid(k), trial(k);

    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fv[a] < fv[b]; });
        const int best = order[0];
        const int second = order[k - 1];
        const int worst = order[k];

        bool stop = (fv[worst] - fv[best]) <= options.ftol;
        if (!stop && options.xtol > 0.0) {
            double diam = 0.0;
            for (int i = 1; i <= k; ++i)
                for (int d = 0; d < k; ++d)
                    diam = std::max(diam, std::abs(pts[order[i]][d] - pts[best][d]));
            stop = diam <= options.xtol;
        }
        if (stop) {
            res.converged = true;
            break;
        }
        if (res.n_evals >= max_evals) break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (int i = 0; i < k; ++i) // all vertices except the worst
            for (int d = 0; d < k; ++d) centroid[d] += pts[order[i]][d];
        for (double& c : centroid) c /= k;

        auto along = [&](double coef) {
            for (int d = 0; d < k; ++d)
                trial[d] = centroid[d] + coef * (centroid[d] - pts[worst][d]);
            return objective(trial);
        };

        const double fr = along(kReflect);
        ++res.n_evals;
        if (fr < fv[best]) {
            std::vector<double> xr = trial;
            const double fe = along(kReflect * kExpand);
            ++res.n_evals;
            if (fe < fr) {
                pts[worst] = trial;
                fv[worst] = fe;
            } else {
                pts[worst] = std::move(xr);
                fv[worst] = fr;
            }
        } else if (fr < fv[second]) {
            pts[worst] = trial;
            fv[worst] = fr;
        } else {
            bool shrink = false;
            if (fr < fv[worst]) {
                const double fc = along(kReflect * kContract); // outside contraction
                ++res.n_evals;
                if (fc <= fr) {
                    pts[worst] = trial;
                    fv[worst] = fc;
                } else {
                    shrink = true;
                }
            } else {
                const double fc = along(-kContract); // inside contraction
                ++res.n_evals;
                if (fc < fv[worst]) {
                    pts[worst] = trial;
                    fv[worst] = fc;
                } else {
                    shrink = true;
                }
            }
            if (shrink) {
                for (int i = 1; i <= k; ++i) {
                    const int idx = order[i];
                    for (int d = 0; d < k; ++d)
                        pts[idx][d] = pts[best][d] + kShrink * (pts[idx][d] - pts[best][d]);
                    fv[idx] = objective(pts[idx]);
                    ++res.n_evals;
                }
            }
        }
    }

    int best = 0;
    for (int i = 1; i <= k; ++i)
        if (fv[i] < fv[best]) best = i;
    res.x = pts[best];
    res.value = fv[best];
    return res;
}

} // namespace garma
