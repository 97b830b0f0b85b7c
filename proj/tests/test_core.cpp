#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "garma/link.hpp"
#include "garma/types.hpp"

using namespace garma;

TEST_CASE("logit link point values") {
    CHECK(link_eval(0.5) == doctest::Approx(0.0).epsilon(1e-15));
    // closed-form sigmoid: link_inv(1) = 1/(1+exp(-1)), round trip recovers 1
    const double s1 = 1.0 / (1.0 + std::exp(-1.0));
    CHECK(s1 == doctest::Approx(0.7310585786).epsilon(1e-9));
    CHECK(link_eval(s1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(link_eval(0.9) == doctest::Approx(std::log(9.0)).epsilon(1e-12));
    CHECK(std::log(9.0) == doctest::Approx(2.1972245773).epsilon(1e-9));
}

TEST_CASE("inverse link point values and clamping") {
    CHECK(link_inv(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(link_inv(1.0) == doctest::Approx(0.7310585786).epsilon(1e-9));
    CHECK(link_inv(800.0) == 1.0 - kUnitEps); // clamping contract
    CHECK(link_inv(-800.0) == kUnitEps);
}

TEST_CASE("link_eval clamps by default and raises in strict mode") {
    CHECK(link_eval(1e-9) == link_eval(kUnitEps));
    CHECK(link_eval(1.5) == link_eval(1.0 - kUnitEps));
    CHECK_THROWS_AS(link_eval(1e-9, false), std::domain_error);
    CHECK_THROWS_AS(link_eval(1.0 - 1e-9, false), std::domain_error);
    CHECK_NOTHROW(link_eval(0.5, false));
}

TEST_CASE("link round trip and monotonicity over a grid") {
    const int n = 10000;
    double prev = -1e300;
    for (int i = 0; i < n; ++i) {
        const double y = kUnitEps + (1.0 - 2.0 * kUnitEps) * i / (n - 1.0);
        const double eta = link_eval(y);
        CHECK(link_inv(eta) == doctest::Approx(y).epsilon(1e-12));
        REQUIRE(eta > prev); // strictly increasing
        prev = eta;
    }
}

TEST_CASE("validate_params accepts the three reference scenarios") {
    ModelSpec spec;
    spec.p = 1;
    spec.q = 1;
    const double scenarios[3][4] = {
        {0.5, -0.4, -0.6, 20.0}, {0.5, -0.5, -0.3, 30.0}, {0.5, -0.4, -0.2, 20.0}};
    for (const auto& s : scenarios) {
        ParamVector g;
        g.alpha = s[0];
        g.phi = {s[1]};
        g.theta = {s[2]};
        g.nu = s[3];
        CHECK(validate_params(g, spec).empty());
    }
}

TEST_CASE("validate_params reports violations as data") {
    ModelSpec spec;
    spec.p = 1;
    spec.q = 1;
    ParamVector g;
    g.phi = {-0.4};
    g.theta = {-0.6};

    g.nu = 0.0;
    auto v = validate_params(g, spec);
    REQUIRE(v.size() == 1);
    CHECK(v.front() == "nu must be positive");

    g.nu = 20.0;
    g.phi = {0.1, 0.2}; // length 2 with p = 1
    v = validate_params(g, spec);
    REQUIRE(v.size() == 1);
    CHECK(v.front() == "phi length mismatch");
}

TEST_CASE("flat layout round trips") {
    ParamVector g;
    g.alpha = 0.5;
    g.phi = {-0.4, 0.1};
    g.theta = {-0.6};
    g.nu = 20.0;
    const auto x = g.flat();
    REQUIRE(x.size() == g.dim());
    const ParamVector back = ParamVector::from_flat(x, 2, 1);
    CHECK(back.alpha == g.alpha);
    CHECK(back.phi == g.phi);
    CHECK(back.theta == g.theta);
    CHECK(back.nu == g.nu);
}

TEST_CASE("param_names matches the flat layout") {
    const auto names = param_names(1, 1);
    REQUIRE(names == std::vector<std::string>{"alpha", "phi", "theta", "nu"});
    const auto wide = param_names(2, 2);
    REQUIRE(wide == std::vector<std::string>{"alpha", "phi1", "phi2", "theta1", "theta2", "nu"});
}
