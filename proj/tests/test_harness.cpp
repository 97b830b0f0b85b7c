#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>

#include "garma/csv.hpp"
#include "garma/harness.hpp"

using namespace garma;

namespace {

ScenarioSpec small_scenario() {
    ScenarioSpec sc;
    sc.name = "1";
    sc.gamma_true = preset_gamma("1");
    sc.model.family = Family::Beta;
    sc.model.p = 1;
    sc.model.q = 1;
    sc.n = 120;
    sc.burn_in = 100;
    sc.missing_r = 0.1;
    sc.criterion = Criterion::VRSC;
    sc.replications = 2;
    sc.impute.K = 4;
    sc.impute.H = 6;
    sc.master_seed = 555;
    return sc;
}

struct TempPath {
    std::string path;
    explicit TempPath(const std::string& name) : path("garma_test_" + name) {}
    ~TempPath() { std::remove(path.c_str()); }
};

bool same_value(double a, double b) {
    return (std::isnan(a) && std::isnan(b)) || a == b;
}

ReplicationRecord make_record(int rep, bool converged, std::vector<double> imp) {
    ReplicationRecord rec;
    rec.rep = rep;
    rec.seed = 10 + rep;
    rec.converged = converged;
    rec.iterations = 4 + rep % 5;
    rec.full_estimate = {0.5, -0.4, -0.6, 20.0};
    rec.imputed_estimate = std::move(imp);
    rec.uncertainty_sd = {0.01, 0.02, 0.03, 0.4};
    return rec;
}

} // namespace

TEST_CASE("scenario presets carry the reference parameter vectors") {
    CHECK(preset_gamma("1").flat() == std::vector<double>{0.5, -0.4, -0.6, 20.0});
    CHECK(preset_gamma("2").flat() == std::vector<double>{0.5, -0.5, -0.3, 30.0});
    CHECK(preset_gamma("3").flat() == std::vector<double>{0.5, -0.4, -0.2, 20.0});
    CHECK_THROWS_AS(preset_gamma("9"), std::invalid_argument);
}

TEST_CASE("summarize on hand-built records") {
    ScenarioSpec sc = small_scenario();
    sc.gamma_true = ParamVector::from_flat({0.5, 0.5, 0.5, 20.0}, 1, 1);

    SUBCASE("single record") {
        const auto recs = std::vector<ReplicationRecord>{
            make_record(1, true, {0.4, -0.3, -0.5, 18.0})};
        const SummaryTable t = summarize(recs, sc);
        CHECK(t.pct_nonconverged == 0.0);
        CHECK(t.medians == std::vector<double>{0.4, -0.3, -0.5, 18.0});
        CHECK(t.mean_iterations == recs[0].iterations);
    }
    SUBCASE("symmetric pair has zero bias and midpoint median") {
        const auto recs = std::vector<ReplicationRecord>{
            make_record(1, true, {0.0, 0.0, 0.0, 10.0}),
            make_record(2, true, {1.0, 1.0, 1.0, 30.0})};
        const SummaryTable t = summarize(recs, sc);
        for (double b : t.biases) CHECK(b == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(t.medians == std::vector<double>{0.5, 0.5, 0.5, 20.0});
    }
    SUBCASE("non-convergence percentage counts all records") {
        std::vector<ReplicationRecord> recs;
        for (int i = 1; i <= 100; ++i)
            recs.push_back(make_record(i, i > 3, {0.5, 0.5, 0.5, 20.0}));
        const SummaryTable t = summarize(recs, sc);
        CHECK(t.pct_nonconverged == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(t.n_converged == 97);
    }
}

TEST_CASE("summary statistics match an independent reference computation") {
    ScenarioSpec sc = small_scenario();
    std::vector<ReplicationRecord> recs;
    for (int i = 1; i <= 17; ++i) {
        const double x = 0.1 * i;
        recs.push_back(make_record(i, i % 5 != 0, {0.4 + x, -0.5 + 0.02 * x, -0.7, 15.0 + x}));
    }
    const SummaryTable t = summarize(recs, sc);

    std::vector<double> alphas;
    for (const auto& r : recs)
        if (r.converged) alphas.push_back(r.imputed_estimate[0]);
    std::sort(alphas.begin(), alphas.end());
    const double median = alphas.size() % 2 == 1
                              ? alphas[alphas.size() / 2]
                              : 0.5 * (alphas[alphas.size() / 2 - 1] + alphas[alphas.size() / 2]);
    double mean = 0.0;
    for (double a : alphas) mean += a;
    mean /= alphas.size();
    CHECK(t.medians[0] == doctest::Approx(median).epsilon(1e-12));
    CHECK(t.biases[0] == doctest::Approx(mean - 0.5).epsilon(1e-12));
}

TEST_CASE("records CSV round trip is exact") {
    TempPath tmp("records.csv");
    csv::RecordMeta meta;
    meta.scenario = "1";
    meta.family = Family::Kumaraswamy;
    meta.missing_r = 0.4;
    meta.criterion = "cvsc";
    meta.p = 1;
    meta.q = 1;

    std::vector<ReplicationRecord> recs;
    for (int i = 1; i <= 20; ++i)
        recs.push_back(make_record(i, i % 4 != 0, {0.123456789012345 * i, -0.4, -0.6, 19.5}));
    // one failed replication with NaN estimates
    ReplicationRecord bad = make_record(21, false, {});
    const double nan = std::numeric_limits<double>::quiet_NaN();
    bad.imputed_estimate.assign(4, nan);
    bad.uncertainty_sd.assign(4, nan);
    bad.failed = true;
    recs.push_back(bad);

    csv::write_records(tmp.path, meta, recs);
    const auto rows = csv::read_records(tmp.path);
    REQUIRE(rows.size() == recs.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].meta.scenario == meta.scenario);
        CHECK(rows[i].meta.family == meta.family);
        CHECK(rows[i].meta.missing_r == meta.missing_r);
        CHECK(rows[i].meta.criterion == meta.criterion);
        CHECK(rows[i].record.rep == recs[i].rep);
        CHECK(rows[i].record.seed == recs[i].seed);
        CHECK(rows[i].record.converged == recs[i].converged);
        CHECK(rows[i].record.iterations == recs[i].iterations);
        for (int j = 0; j < 4; ++j) {
            CHECK(same_value(rows[i].record.full_estimate[j], recs[i].full_estimate[j]));
            CHECK(same_value(rows[i].record.imputed_estimate[j], recs[i].imputed_estimate[j]));
            CHECK(same_value(rows[i].record.uncertainty_sd[j], recs[i].uncertainty_sd[j]));
        }
        CHECK(rows[i].record.failed == recs[i].failed);
    }
}

TEST_CASE("empty record list writes a header-only file") {
    TempPath tmp("empty_records.csv");
    csv::RecordMeta meta;
    meta.p = 1;
    meta.q = 1;
    csv::write_records(tmp.path, meta, {});
    std::ifstream is(tmp.path);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line ==
          "scenario,model,r,criterion,rep,seed,converged,iterations,"
          "alpha_full,phi_full,theta_full,nu_full,"
          "alpha_imp,phi_imp,theta_imp,nu_imp,"
          "sd_alpha,sd_phi,sd_theta,sd_nu");
    CHECK_FALSE(std::getline(is, line));
    CHECK(csv::read_records(tmp.path).empty());
}

TEST_CASE("series CSV round trip and error reporting") {
    TempPath tmp("series.csv");
    SUBCASE("round trip with missing values") {
        const std::vector<double> values{0.25, 0.5, 0.0, 0.75};
        const std::vector<bool> observed{true, true, false, true};
        csv::write_series(tmp.path, values, observed);
        const ObservedSeries back = csv::read_series(tmp.path);
        REQUIRE(back.size() == 4);
        CHECK(back.observed == observed);
        for (int t = 0; t < 4; ++t)
            if (observed[t]) CHECK(back.values[t] == values[t]);
    }
    SUBCASE("malformed rows name the row number") {
        std::ofstream os(tmp.path);
        os << "t,y\n1,0.5\n2,not-a-number\n";
        os.close();
        try {
            csv::read_series(tmp.path);
            FAIL("expected an exception");
        } catch (const std::exception& e) {
            CHECK(std::string(e.what()).find("row 3") != std::string::npos);
        }
    }
    SUBCASE("values outside the unit interval are rejected") {
        std::ofstream os(tmp.path);
        os << "t,y\n1,0.5\n2,1.5\n";
        os.close();
        CHECK_THROWS(csv::read_series(tmp.path));
    }
}

TEST_CASE("run_scenario: no-missing identity and determinism") {
    ScenarioSpec sc = small_scenario();
    SUBCASE("r = 0 makes the imputed estimate equal the complete one") {
        sc.missing_r = 0.0;
        sc.replications = 1;
        const auto recs = run_scenario(sc);
        REQUIRE(recs.size() == 1);
        CHECK_FALSE(recs[0].failed);
        CHECK(recs[0].imputed_estimate == recs[0].full_estimate);
        CHECK(recs[0].converged);
    }
    SUBCASE("identical master seeds give bit-identical records") {
        const auto a = run_scenario(sc);
        const auto b = run_scenario(sc);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].seed == b[i].seed);
            CHECK(a[i].iterations == b[i].iterations);
            CHECK(a[i].imputed_estimate == b[i].imputed_estimate);
            CHECK(a[i].full_estimate == b[i].full_estimate);
            CHECK(a[i].uncertainty_sd == b[i].uncertainty_sd);
        }
    }
    SUBCASE("worker count does not change the records") {
        ScenarioSpec par = sc;
        par.jobs = 2;
        const auto a = run_scenario(sc);
        const auto b = run_scenario(par);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(a[i].imputed_estimate == b[i].imputed_estimate);
    }
}

TEST_CASE("every replication appears exactly once, converged or not") {
    ScenarioSpec sc = small_scenario();
    sc.replications = 5;
    const auto recs = run_scenario(sc);
    REQUIRE(recs.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(recs[i].rep == i + 1);
}
