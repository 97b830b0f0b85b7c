#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "garma/types.hpp"

namespace garma {

struct ReplicationRecord {
    int rep = 0; // 1-based
    std::uint64_t seed = 0;
    bool converged = false;
    int iterations = 0;
    std::vector<double> full_estimate;    // flat; NaN-filled when the replication failed
    std::vector<double> imputed_estimate; // flat
    std::vector<double> uncertainty_sd;   // flat
    bool failed = false;
};

namespace csv {

// 17 significant digits: doubles survive a write/read round trip exactly.
std::string format_double(double v);

// Series files: header "t,y", one row per time index (1-based), empty y
// field for missing values.
void write_series(std::ostream& os, const std::vector<double>& values,
                  const std::vector<bool>& observed);
void write_series(const std::string& path, const std::vector<double>& values,
                  const std::vector<bool>& observed);
void write_series(const std::string& path, const CompleteSeries& values);

// Errors name the offending row number.
ObservedSeries read_series(const std::string& path);

struct RecordMeta {
    std::string scenario;
    Family family = Family::Beta;
    double missing_r = 0.0;
    std::string criterion;
    int p = 0;
    int q = 0;
};

// Records schema: scenario,model,r,criterion,rep,seed,converged,iterations,
// then <param>_full, <param>_imp and sd_<param> triples in flat parameter
// order (alpha, phi, theta, nu when p = q = 1).
void write_records_header(std::ostream& os, int p, int q);
void append_records(std::ostream& os, const RecordMeta& meta,
                    const std::vector<ReplicationRecord>& records);
void write_records(const std::string& path, const RecordMeta& meta,
                   const std::vector<ReplicationRecord>& records);

struct RecordRow {
    RecordMeta meta;
    ReplicationRecord record;
};

std::vector<RecordRow> read_records(const std::string& path);

struct SummaryCell {
    RecordMeta meta;
    std::vector<std::string> params;
    std::vector<double> true_values;
    std::vector<double> medians;
    std::vector<double> biases;
    std::vector<double> sds;
    double mean_iterations = 0.0;
    double pct_nonconverged = 0.0;
};

// Summary schema: scenario,model,r,criterion,param,true,median,bias,sd,
// mean_iters,pct_nonconv (one row per parameter).
void write_summary_header(std::ostream& os);
void append_summary(std::ostream& os, const SummaryCell& cell);
void write_summary(const std::string& path, const std::vector<SummaryCell>& cells);

} // namespace csv

} // namespace garma
