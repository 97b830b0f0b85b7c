#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "garma/csv.hpp"
#include "garma/engine.hpp"
#include "garma/harness.hpp"
#include "garma/imputation.hpp"
#include "garma/link.hpp"
#include "garma/log.hpp"
#include "garma/missing.hpp"
#include "garma/pmle.hpp"
#include "garma/seeding.hpp"

namespace {

using namespace garma;

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

std::vector<std::string> parse_string_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

struct ModelArgs {
    std::string model = "barma";
    int p = 1;
    int q = 1;
    double rho = 0.5;

    ModelSpec spec() const {
        ModelSpec s;
        s.family = family_from_name(model);
        s.p = p;
        s.q = q;
        s.rho = rho;
        return s;
    }
};

struct GammaArgs {
    double alpha = 0.0;
    std::string phi = "0";
    std::string theta = "0";
    double nu = 1.0;

    ParamVector params(const ModelSpec& spec) const {
        ParamVector g;
        g.alpha = alpha;
        g.phi = parse_double_list(phi);
        g.theta = parse_double_list(theta);
        g.nu = nu;
        if (spec.p == 0) g.phi.clear();
        if (spec.q == 0) g.theta.clear();
        const auto violations = validate_params(g, spec);
        if (!violations.empty())
            throw CLI::ValidationError("--alpha/--phi/--theta/--nu", violations.front());
        return g;
    }
};

void add_model_options(CLI::App* cmd, ModelArgs& args) {
    cmd->add_option("--model", args.model, "Model family: barma, karma or uwarma")
        ->check(CLI::IsMember({"barma", "karma", "uwarma"}));
    cmd->add_option("--p", args.p, "AR order")->check(CLI::NonNegativeNumber);
    cmd->add_option("--q", args.q, "MA order")->check(CLI::NonNegativeNumber);
    cmd->add_option("--rho", args.rho, "Quantile level for uwarma (in (0,1))");
}

void print_estimate(std::ostream& os, const EstimationResult& est, const ModelSpec& spec) {
    const auto names = param_names(spec.p, spec.q);
    const auto values = est.gamma_hat.flat();
    for (std::size_t i = 0; i < names.size(); ++i)
        os << names[i] << '=' << csv::format_double(values[i]) << '\n';
    os << "loglik=" << csv::format_double(est.loglik) << '\n';
    os << "converged=" << (est.converged ? 1 : 0) << '\n';
    os << "n_evals=" << est.n_evals << '\n';
    if (est.degenerate_series) os << "degenerate_series=1\n";
}

void write_estimate_csv(const std::string& path, const EstimationResult& est,
                        const ModelSpec& spec) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    const auto names = param_names(spec.p, spec.q);
    for (std::size_t i = 0; i < names.size(); ++i) os << names[i] << ',';
    os << "loglik,converged,n_evals\n";
    for (double v : est.gamma_hat.flat()) os << csv::format_double(v) << ',';
    os << csv::format_double(est.loglik) << ',' << (est.converged ? 1 : 0) << ','
       << est.n_evals << '\n';
}

int cmd_simulate(const ModelArgs& model, const GammaArgs& gamma, int n, int burn_in,
                 std::uint64_t seed, const std::string& out) {
    const ModelSpec spec = model.spec();
    const ParamVector g = gamma.params(spec);
    std::mt19937_64 rng(mix_seed(seed, 1));
    const CompleteSeries y = simulate(g, spec, n, burn_in, rng);
    csv::write_series(out, y);
    log::info("wrote " + std::to_string(y.size()) + " values to " + out);
    return 0;
}

int cmd_estimate(const std::string& in, const ModelArgs& model, const std::string& out) {
    const ModelSpec spec = model.spec();
    const ObservedSeries series = csv::read_series(in);
    if (!series.complete())
        throw std::runtime_error(in + " contains " + std::to_string(series.n_missing()) +
                                 " missing values; use 'garma impute' instead");
    const EstimationResult est = estimate_pmle(series.values, spec);
    print_estimate(std::cout, est, spec);
    if (!out.empty()) write_estimate_csv(out, est, spec);
    if (!est.converged)
        std::cerr << "warning: optimizer did not converge within the evaluation budget\n";
    return 0;
}

int cmd_impute(const std::string& in, const ModelArgs& model, ImputationConfig cfg,
               const std::string& out, const std::string& report) {
    const ModelSpec spec = model.spec();
    const ObservedSeries series = csv::read_series(in);
    const ImputationResult res = run_algorithm1(series, spec, cfg);

    std::ostringstream text;
    const auto names = param_names(spec.p, spec.q);
    const auto values = res.gamma_hat.flat();
    for (std::size_t i = 0; i < names.size(); ++i)
        text << names[i] << '=' << csv::format_double(values[i]) << '\n';
    for (std::size_t i = 0; i < names.size(); ++i)
        text << "sd_" << names[i] << '=' << csv::format_double(res.uncertainty_sd[i]) << '\n';
    text << "iterations=" << res.iterations << '\n';
    text << "converged=" << (res.converged ? 1 : 0) << '\n';
    if (res.restarted) text << "restarted=1\n";

    std::cout << text.str();
    if (!report.empty()) {
        std::ofstream os(report);
        if (!os) throw std::runtime_error("cannot open for writing: " + report);
        os << text.str();
    }
    if (!out.empty()) csv::write_series(out, res.representative_series);
    if (!res.converged)
        std::cerr << "warning: stopping criterion did not fire within H=" << cfg.H
                  << " iterations\n";
    return 0;
}

int cmd_mc(const ModelArgs& model, const std::string& scenarios, const std::string& r_list,
           const std::string& criterion, int reps, int n, int burn_in, ImputationConfig cfg,
           int jobs, std::uint64_t seed, const std::string& out) {
    const ModelSpec spec = model.spec();
    if (spec.p != 1 || spec.q != 1)
        throw std::runtime_error("mc scenario presets use p = q = 1");

    std::vector<Criterion> criteria;
    if (criterion == "both")
        criteria = {Criterion::CVSC, Criterion::VRSC};
    else
        criteria = {criterion_from_name(criterion)};

    const auto scenario_names = parse_string_list(scenarios);
    const auto rs = parse_double_list(r_list);
    if (scenario_names.empty() || rs.empty())
        throw std::runtime_error("mc needs at least one scenario and one missing proportion");

    const std::string records_path = out + "_records.csv";
    const std::string summary_path = out + "_summary.csv";
    std::ofstream records_os(records_path);
    if (!records_os) throw std::runtime_error("cannot open for writing: " + records_path);
    csv::write_records_header(records_os, spec.p, spec.q);
    std::vector<csv::SummaryCell> cells;

    for (const auto& name : scenario_names) {
        for (double r : rs) {
            for (Criterion crit : criteria) {
                ScenarioSpec sc;
                sc.name = name;
                sc.gamma_true = preset_gamma(name);
                sc.model = spec;
                sc.n = n;
                sc.burn_in = burn_in;
                sc.missing_r = r;
                sc.criterion = crit;
                sc.replications = reps;
                sc.impute = cfg;
                sc.master_seed = seed;
                sc.jobs = jobs;
                log::info("running scenario " + name + " r=" + std::to_string(r) +
                          " criterion=" + criterion_name(crit));
                const auto records = run_scenario(sc);
                csv::RecordMeta meta;
                meta.scenario = sc.name;
                meta.family = spec.family;
                meta.missing_r = r;
                meta.criterion = criterion_name(crit);
                meta.p = spec.p;
                meta.q = spec.q;
                csv::append_records(records_os, meta, records);
                records_os.flush();
                cells.push_back(summary_cell(summarize(records, sc), sc));
            }
        }
    }
    csv::write_summary(summary_path, cells);
    std::cout << "records: " << records_path << '\n';
    std::cout << "summary: " << summary_path << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"GARMA-family time series on (0,1): simulation, partial maximum likelihood, "
                 "and multiple-imputation estimation under missing data"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Key-value config file with [subcommand] sections");

    ModelArgs model;
    GammaArgs gamma;
    int n = 500;
    int burn_in = 100;
    std::uint64_t seed = 1234;
    int jobs = 1;
    std::string in_path, out_path, report_path;
    ImputationConfig impute_cfg;
    std::string criterion = "vrsc";
    std::string scenarios = "1";
    std::string r_list = "0.1";
    int reps = 100;
    bool restart = false;

    auto* sim = app.add_subcommand("simulate", "Generate a series and write a t,y CSV");
    add_model_options(sim, model);
    sim->add_option("--alpha", gamma.alpha, "Intercept (link scale)");
    sim->add_option("--phi", gamma.phi, "AR coefficients, comma separated");
    sim->add_option("--theta", gamma.theta, "MA coefficients, comma separated");
    sim->add_option("--nu", gamma.nu, "Shape parameter (positive)");
    sim->add_option("--n", n, "Series length");
    sim->add_option("--burn-in", burn_in, "Burn-in length discarded before recording");
    sim->add_option("--seed", seed, "RNG seed");
    sim->add_option("--out", out_path, "Output CSV path")->required();

    auto* est = app.add_subcommand("estimate", "Partial-ML estimation on a complete series");
    est->add_option("series", in_path, "Input t,y CSV (no missing values)")->required();
    add_model_options(est, model);
    est->add_option("--out", out_path, "Also write the estimate as a one-row CSV");

    auto* imp = app.add_subcommand("impute", "Multiple-imputation estimation on a series "
                                             "with missing values (empty y fields)");
    imp->add_option("series", in_path, "Input t,y CSV; empty y fields mark missing values")
        ->required();
    add_model_options(imp, model);
    imp->add_option("--criterion", criterion, "Stopping criterion: cvsc or vrsc")
        ->check(CLI::IsMember({"cvsc", "vrsc"}));
    imp->add_option("--K", impute_cfg.K, "Inner imputations per outer iteration");
    imp->add_option("--H", impute_cfg.H, "Maximum outer iterations");
    imp->add_option("--tau", impute_cfg.tau, "Stopping tolerance");
    imp->add_option("--gap-bridge", impute_cfg.L,
                    "Bridge gaps up to this length when picking the starting run");
    imp->add_option("--seed", seed, "RNG seed");
    imp->add_option("--jobs", jobs, "Worker threads for the inner imputations");
    imp->add_flag("--restart", restart, "One automatic restart from the last estimate "
                                        "if the criterion does not fire");
    imp->add_option("--out", out_path, "Write a representative completed series here");
    imp->add_option("--report", report_path, "Also write the key-value report here");

    auto* mc = app.add_subcommand("mc", "Monte Carlo grid: simulate, mask, impute, summarize");
    add_model_options(mc, model);
    mc->add_option("--scenarios", scenarios, "Scenario presets, comma separated (1,2,3)");
    mc->add_option("--r", r_list, "Missing proportions, comma separated");
    mc->add_option("--criterion", criterion, "cvsc, vrsc or both")
        ->check(CLI::IsMember({"cvsc", "vrsc", "both"}));
    mc->add_option("--reps", reps, "Replications per grid cell");
    mc->add_option("--n", n, "Series length");
    mc->add_option("--burn-in", burn_in, "Burn-in length");
    mc->add_option("--K", impute_cfg.K, "Inner imputations per outer iteration");
    mc->add_option("--H", impute_cfg.H, "Maximum outer iterations");
    mc->add_option("--tau", impute_cfg.tau, "Stopping tolerance");
    mc->add_option("--gap-bridge", impute_cfg.L, "Starting-run gap bridge");
    mc->add_option("--seed", seed, "Master seed");
    mc->add_option("--jobs", jobs, "Replication worker threads");
    mc->add_option("--out", out_path, "Output prefix for records/summary CSVs")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed())
            return cmd_simulate(model, gamma, n, burn_in, seed, out_path);
        if (est->parsed())
            return cmd_estimate(in_path, model, out_path);
        if (imp->parsed()) {
            impute_cfg.criterion = criterion_from_name(criterion);
            impute_cfg.seed = mix_seed(seed, 3);
            impute_cfg.jobs = jobs;
            impute_cfg.restart_on_nonconvergence = restart;
            return cmd_impute(in_path, model, impute_cfg, out_path, report_path);
        }
        if (mc->parsed())
            return cmd_mc(model, scenarios, r_list, criterion, reps, n, burn_in, impute_cfg,
                          jobs, seed, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
