#include "garma/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace garma::csv {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("malformed number '" + s + "' in " + context);
    }
}

long parse_long(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("malformed integer '" + s + "' in " + context);
    }
}

std::uint64_t parse_u64(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("malformed integer '" + s + "' in " + context);
    }
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_series(std::ostream& os, const std::vector<double>& values,
                  const std::vector<bool>& observed) {
    os << "t,y\n";
    for (std::size_t t = 0; t < values.size(); ++t) {
        os << (t + 1) << ',';
        if (observed.empty() || observed[t]) os << format_double(values[t]);
        os << '\n';
    }
}

void write_series(const std::string& path, const std::vector<double>& values,
                  const std::vector<bool>& observed) {
    auto os = open_out(path);
    write_series(os, values, observed);
}

void write_series(const std::string& path, const CompleteSeries& values) {
    write_series(path, values, {});
}

ObservedSeries read_series(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("cannot open series file: " + path);
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error(path + ": empty file");
    {
        const auto header = split_line(line);
        if (header.size() != 2 || header[0] != "t" || header[1] != "y")
            throw std::runtime_error(path + ": expected header 't,y'");
    }
    ObservedSeries series;
    int row = 1;
    while (std::getline(is, line)) {
        ++row;
        if (line.empty()) continue;
        const auto fields = split_line(line);
        const std::string context = path + " row " + std::to_string(row);
        if (fields.size() != 2)
            throw std::runtime_error(context + ": expected 2 fields, got " +
                                     std::to_string(fields.size()));
        parse_long(fields[0], context); // t column is positional; value unused
        if (fields[1].empty()) {
            series.values.push_back(0.0);
            series.observed.push_back(false);
        } else {
            const double y = parse_double(fields[1], context);
            if (!(y > 0.0 && y < 1.0))
                throw std::runtime_error(context + ": y = " + fields[1] +
                                         " outside the open unit interval");
            series.values.push_back(y);
            series.observed.push_back(true);
        }
    }
    if (series.values.empty())
        throw std::runtime_error(path + ": no data rows");
    return series;
}

void write_records_header(std::ostream& os, int p, int q) {
    os << "scenario,model,r,criterion,rep,seed,converged,iterations";
    const auto names = param_names(p, q);
    for (const auto& n : names) os << ',' << n << "_full";
    for (const auto& n : names) os << ',' << n << "_imp";
    for (const auto& n : names) os << ",sd_" << n;
    os << '\n';
}

void append_records(std::ostream& os, const RecordMeta& meta,
                    const std::vector<ReplicationRecord>& records) {
    for (const auto& rec : records) {
        os << meta.scenario << ',' << family_name(meta.family) << ','
           << format_double(meta.missing_r) << ',' << meta.criterion << ',' << rec.rep << ','
           << rec.seed << ',' << (rec.converged ? 1 : 0) << ',' << rec.iterations;
        for (double v : rec.full_estimate) os << ',' << format_double(v);
        for (double v : rec.imputed_estimate) os << ',' << format_double(v);
        for (double v : rec.uncertainty_sd) os << ',' << format_double(v);
        os << '\n';
    }
}

void write_records(const std::string& path, const RecordMeta& meta,
                   const std::vector<ReplicationRecord>& records) {
    auto os = open_out(path);
    write_records_header(os, meta.p, meta.q);
    append_records(os, meta, records);
}

std::vector<RecordRow> read_records(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("cannot open records file: " + path);
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error(path + ": empty file");
    const auto header = split_line(line);
    if (header.size() < 8 || header[0] != "scenario")
        throw std::runtime_error(path + ": unexpected records header");
    const int n_params = static_cast<int>(header.size() - 8) / 3;
    // infer p and q from the parameter block (alpha..nu with phi/theta between)
    int p = 0, q = 0;
    for (int i = 0; i < n_params; ++i) {
        const std::string& name = header[8 + i];
        if (name.rfind("phi", 0) == 0) ++p;
        if (name.rfind("theta", 0) == 0) ++q;
    }

    std::vector<RecordRow> rows;
    int row = 1;
    while (std::getline(is, line)) {
        ++row;
        if (line.empty()) continue;
        const auto fields = split_line(line);
        const std::string context = path + " row " + std::to_string(row);
        if (static_cast<int>(fields.size()) != 8 + 3 * n_params)
            throw std::runtime_error(context + ": wrong field count");
        RecordRow rr;
        rr.meta.scenario = fields[0];
        rr.meta.family = family_from_name(fields[1]);
        rr.meta.missing_r = parse_double(fields[2], context);
        rr.meta.criterion = fields[3];
        rr.meta.p = p;
        rr.meta.q = q;
        rr.record.rep = static_cast<int>(parse_long(fields[4], context));
        rr.record.seed = parse_u64(fields[5], context);
        rr.record.converged = parse_long(fields[6], context) != 0;
        rr.record.iterations = static_cast<int>(parse_long(fields[7], context));
        auto block = [&](int offset) {
            std::vector<double> out(n_params);
            for (int i = 0; i < n_params; ++i) out[i] = parse_double(fields[offset + i], context);
            return out;
        };
        rr.record.full_estimate = block(8);
        rr.record.imputed_estimate = block(8 + n_params);
        rr.record.uncertainty_sd = block(8 + 2 * n_params);
        rr.record.failed = std::isnan(rr.record.imputed_estimate.front());
        rows.push_back(std::move(rr));
    }
    return rows;
}

void write_summary_header(std::ostream& os) {
    os << "scenario,model,r,criterion,param,true,median,bias,sd,mean_iters,pct_nonconv\n";
}

void append_summary(std::ostream& os, const SummaryCell& cell) {
    for (std::size_t i = 0; i < cell.params.size(); ++i) {
        os << cell.meta.scenario << ',' << family_name(cell.meta.family) << ','
           << format_double(cell.meta.missing_r) << ',' << cell.meta.criterion << ','
           << cell.params[i] << ',' << format_double(cell.true_values[i]) << ','
           << format_double(cell.medians[i]) << ',' << format_double(cell.biases[i]) << ','
           << format_double(cell.sds[i]) << ',' << format_double(cell.mean_iterations) << ','
           << format_double(cell.pct_nonconverged) << '\n';
    }
}

void write_summary(const std::string& path, const std::vector<SummaryCell>& cells) {
    auto os = open_out(path);
    write_summary_header(os);
    for (const auto& cell : cells) append_summary(os, cell);
}

} // namespace garma::csv
