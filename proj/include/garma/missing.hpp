#pragma once

#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "garma/nelder_mead.hpp"
#include "garma/types.hpp"

namespace garma {

// Raised when the longest contiguous run is too short for an initial
// estimate. The remedy is to rerun with a larger gap bridge L.
struct RunTooShortError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// MCAR mask: marks round(r * n) indices, drawn uniformly without replacement
// from {2, ..., n-1} (1-based), as missing. First and last stay observed.
// Returns the observed flags (true = observed).
std::vector<bool> make_mcar_mask(int n, double r, std::mt19937_64& rng);

// Maximal blocks of consecutive observed indices, in order.
struct RunPartition {
    std::vector<std::pair<int, int>> runs; // [first, last], 0-based inclusive
    std::vector<int> lengths;
};

RunPartition partition_runs(const std::vector<bool>& observed);

// A contiguous stretch after bridging interior gaps of length <= L; bridged
// positions carry values linearly interpolated between the flanking
// observations.
struct FilledRun {
    int first = 0; // 0-based, inclusive
    int last = 0;
    CompleteSeries values;
};

// All maximal-length stretches obtainable by bridging gaps of length <= L
// (ties are returned in index order; L = 0 reduces to the plain longest
// observed run).
std::vector<FilledRun> longest_run(const ObservedSeries& series, int L);

// PMLE on each maximal stretch, averaged component-wise across ties. Throws
// RunTooShortError when the stretches are shorter than m + dim(gamma) + 1.
ParamVector initial_estimate(const ObservedSeries& series, const ModelSpec& spec, int L,
                             const SimplexOptions& options = {});

} // namespace garma
