#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "advpos/io.hpp"
#include "advpos/util.hpp"

TEST_CASE("17-digit round trip is bit exact") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
    std::uniform_int_distribution<int> exponent(-30, 30);
    for (int t = 0; t < 2000; ++t) {
        const double v = std::ldexp(mantissa(rng), exponent(rng));
        CHECK(advpos::parse_double17(advpos::format_double17(v)) == v);
    }
    CHECK(advpos::format_double17(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(std::isinf(advpos::parse_double17("inf")));
    CHECK(advpos::parse_double17("-inf") == -std::numeric_limits<double>::infinity());
    CHECK(advpos::parse_double17("0.1") == 0.1);
    CHECK_THROWS_AS(advpos::parse_double17("abc"), std::invalid_argument);
    CHECK_THROWS_AS(advpos::parse_double17("1.5x"), std::invalid_argument);
}

TEST_CASE("region CSV round trip") {
    std::mt19937_64 rng(405);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<advpos::RegionSample> samples;
    for (int i = 0; i < 64; ++i) {
        advpos::RegionSample s;
        s.kind = (i % 2) ? advpos::SchemeKind::Spectral : advpos::SchemeKind::Centered2;
        s.m = 3 + i % 9;
        s.theta = dist(rng) * 0.25 + 0.5;
        s.nu = std::exp(dist(rng));
        s.min_entry = dist(rng);
        s.nonneg = s.min_entry >= 0.0;
        samples.push_back(s);
    }
    const std::string text = advpos::region_csv(samples);
    const auto parsed = advpos::parse_region_csv(text);
    REQUIRE(parsed.size() == samples.size());
    for (size_t i = 0; i < samples.size(); ++i) {
        CHECK(parsed[i].kind == samples[i].kind);
        CHECK(parsed[i].m == samples[i].m);
        CHECK(parsed[i].theta == samples[i].theta);  // bit exact
        CHECK(parsed[i].nu == samples[i].nu);
        CHECK(parsed[i].min_entry == samples[i].min_entry);
        CHECK(parsed[i].nonneg == samples[i].nonneg);
    }
    CHECK(advpos::region_csv(samples) == text);  // deterministic
    CHECK_THROWS_AS(advpos::parse_region_csv("bogus\n1,2\n"), std::invalid_argument);
}

TEST_CASE("boundary CSV keeps the infinity marker") {
    advpos::BoundaryCurve curve;
    curve.k = 1;
    curve.theta_critical = 0.5;
    curve.samples = {{0.5, 4.0, 4.0},
                     {0.6, 10.0 / 3.0, 5.7735026918962577},
                     {0.9, 20.0 / 9.0, std::numeric_limits<double>::infinity()}};
    const std::string text = advpos::boundary_csv({curve});
    CHECK(text.find(",inf") != std::string::npos);
    const auto parsed = advpos::parse_boundary_csv(text);
    REQUIRE(parsed.size() == 1);
    REQUIRE(parsed[0].samples.size() == 3);
    CHECK(parsed[0].k == 1);
    CHECK(parsed[0].samples[1].nu_l == curve.samples[1].nu_l);
    CHECK(std::isinf(parsed[0].samples[2].nu_l));
}

TEST_CASE("grid flags") {
    const auto lin = advpos::parse_grid("0:1:5");
    REQUIRE(lin.size() == 5);
    CHECK(lin.front() == 0.0);
    CHECK(lin.back() == 1.0);
    CHECK(lin[2] == doctest::Approx(0.5));

    const auto lg = advpos::parse_grid("1:100:3:log");
    REQUIRE(lg.size() == 3);
    CHECK(lg[0] == doctest::Approx(1.0));
    CHECK(lg[1] == doctest::Approx(10.0));
    CHECK(lg[2] == doctest::Approx(100.0));

    CHECK(advpos::parse_grid("2.5:9:1").size() == 1);
    CHECK_THROWS_AS(advpos::parse_grid("1:2"), std::invalid_argument);
    CHECK_THROWS_AS(advpos::parse_grid("1:2:3:geo"), std::invalid_argument);
    CHECK_THROWS_AS(advpos::parse_grid("1:2:0"), std::invalid_argument);
}
