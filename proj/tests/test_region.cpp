#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "advpos/closed_form.hpp"
#include "advpos/region.hpp"
#include "advpos/theta_method.hpp"
#include "advpos/util.hpp"

using advpos::SchemeKind;
using advpos::nu_L;
using advpos::nu_R;
using advpos::root_yL;
using advpos::root_yR;
using advpos::theta_crit;
using advpos::theta_fn;

namespace {
const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

double nu_L1_closed(double theta) { return 2.0 / std::sqrt(theta * (2.0 - 3.0 * theta)); }
}  // namespace

TEST_CASE("Theta(y,k)") {
    CHECK(theta_fn(kGolden, 1) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(theta_fn(1e-8, 3) == doctest::Approx(0.0).epsilon(1e-12));
    for (int k : {1, 2, 7})
        CHECK(theta_fn(1.0 - 1e-8, k) ==
              doctest::Approx(2.0 * k / (2.0 * k + 1.0)).epsilon(1e-6));
    CHECK_THROWS_AS(theta_fn(0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(theta_fn(1.0, 1), std::invalid_argument);
}

TEST_CASE("root of P_{R,k}") {
    CHECK(root_yR(1, 1e-13) == doctest::Approx(kGolden).epsilon(1e-12));

    const double r = std::sqrt(2.0) - 1.0;
    double prev = 0.0;
    for (int k = 1; k <= 50; ++k) {
        const double y = root_yR(k);
        CHECK(y > prev);
        CHECK(y > std::pow(r, 1.0 / (2.0 * k - 1.0)));
        CHECK(y < std::pow(r, 1.0 / (2.0 * k + 1.0)));
        prev = y;
    }
}

TEST_CASE("root of P_{L,k,theta}") {
    CHECK(root_yL(1, 0.5, 1e-13) == doctest::Approx(kGolden).epsilon(1e-10));
    CHECK(root_yL(1, 1e-6) < 1e-2);
    for (int k = 1; k <= 6; ++k) CHECK(root_yL(k + 1, 0.3) < root_yL(k, 0.3));
    CHECK_THROWS_AS(root_yL(1, 0.7), std::invalid_argument);  // >= 2/3
    CHECK_THROWS_AS(root_yL(1, 0.0), std::invalid_argument);
}

TEST_CASE("nu_R") {
    for (int i = 1; i <= 20; ++i) {
        const double theta = i / 20.0;
        CHECK(advpos::rel_err(nu_R(1, theta), 2.0 / theta) < 1e-10);
    }
    CHECK(nu_R(2, 1.0) == doctest::Approx(4.4111).epsilon(5e-4 / 4.4111));
    CHECK(nu_R(2, 1.0) > 3.9173);  // supersedes the quoted circulant-spectrum bound

    const double r = std::sqrt(2.0) - 1.0, s = std::sqrt(2.0) + 1.0;
    for (int k = 1; k <= 50; ++k) {
        for (double theta : {0.5, 0.75, 1.0}) {
            const double v = std::pow(s, 1.0 / (2.0 * k - 1.0));
            const double u = std::pow(r, 1.0 / (2.0 * k + 1.0));
            CHECK(nu_R(k, theta) > 2.0 * v / ((v * v - 1.0) * theta));
            CHECK(nu_R(k, theta) < 2.0 * u / ((1.0 - u * u) * theta));
        }
    }
    CHECK_THROWS_AS(nu_R(1, 0.0), std::invalid_argument);
}

TEST_CASE("nu_L") {
    for (int i = 1; i < 33; ++i) {
        const double theta = i / 50.0;  // stays below 2/3
        CHECK(advpos::rel_err(nu_L(1, theta), nu_L1_closed(theta)) < 1e-9);
    }
    CHECK(std::isinf(nu_L(1, 0.7)));
    CHECK(std::isinf(nu_L(1, 2.0 / 3.0)));
    CHECK(std::isinf(nu_L(3, 1.0)));

    // Finite for k >= 5 at theta = 0.9, decreasing toward the k -> inf limit.
    const double theta = 0.9;
    const double limit = std::sqrt((2.0 - theta) / theta) / (1.0 - theta);
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 5; k <= 12; ++k) {
        const double v = nu_L(k, theta);
        CHECK(std::isfinite(v));
        CHECK(v < prev);
        CHECK(v > limit);
        prev = v;
    }
    CHECK(nu_L(60, theta) == doctest::Approx(limit).epsilon(1e-2));
}

TEST_CASE("critical theta") {
    CHECK(theta_crit(1) == doctest::Approx(0.5).epsilon(1e-10));
    double prev = 0.4;
    for (int k = 1; k <= 20; ++k) {
        const double tk = theta_crit(k);
        CHECK(tk > prev);
        CHECK(tk >= 0.5);
        CHECK(tk < 2.0 * k / (2.0 * k + 1.0));
        prev = tk;
    }
    for (int k : {1, 2, 5}) {
        const double tk = theta_crit(k);
        CHECK(advpos::rel_err(nu_R(k, tk), nu_L(k, tk)) < 1e-6);
    }
}

TEST_CASE("power-sum thresholds (spot values)") {
    CHECK(advpos::jll_nu_star(5, 1.0, 1, 2, 100.0) == doctest::Approx(3.0074).epsilon(2e-3 / 3.0));
    CHECK(advpos::jll_nu_star(5, 1.0, 4, 2, 100.0) == doctest::Approx(0.7219).epsilon(2e-3 / 0.72));
    CHECK(advpos::jll_nu_star(5, 1.0, 9, 3, 100.0) == doctest::Approx(0.2119).epsilon(2e-3 / 0.21));
    CHECK_THROWS_AS(advpos::jll_nu_star(5, 1.0, 1, 2, 0.0), std::invalid_argument);
}

TEST_CASE("numeric nu interval") {
    const auto backward = advpos::nu_interval_numeric(SchemeKind::Centered2, 3, 1.0, 100.0, 1e-6);
    REQUIRE(backward.has_value());
    CHECK(backward->lo == doctest::Approx(2.0).epsilon(1e-4 / 2.0));
    CHECK(std::isinf(backward->hi));
    CHECK(backward->runs == 1);

    CHECK_FALSE(advpos::nu_interval_numeric(SchemeKind::Centered2, 3, 0.4, 100.0, 1e-6).has_value());

    const auto c4 = advpos::nu_interval_numeric(SchemeKind::Centered4, 5, 0.9, 1000.0, 1e-5);
    CHECK(c4.has_value());

    // Bounded above when theta < (m-1)/m: closed-form check against nu_L.
    const auto window = advpos::nu_interval_numeric(SchemeKind::Centered2, 3, 0.6, 100.0, 0.0);
    REQUIRE(window.has_value());
    CHECK(window->lo == doctest::Approx(nu_R(1, 0.6)).epsilon(1e-6));
    CHECK(window->hi == doctest::Approx(nu_L1_closed(0.6)).epsilon(1e-6));

    CHECK_THROWS_AS(advpos::nu_interval_numeric(SchemeKind::Centered2, 4, 0.5, 10.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("numeric corner agrees with the closed form for centered2") {
    CHECK(advpos::corner_theta(SchemeKind::Centered2, 3, 1e-6) ==
          doctest::Approx(0.5).epsilon(2e-6));
}

TEST_CASE("region scans") {
    const auto even = advpos::region_scan(SchemeKind::Centered2, 4, {0.2, 0.5, 1.0},
                                          {0.5, 1.0, 4.0, 20.0}, 1e-12);
    CHECK(even.size() == 12);
    for (const auto& s : even) {
        CHECK_FALSE(s.nonneg);
        CHECK(s.min_entry < 0.0);
    }

    // theta = 0.75 >= 2/3: no upper bound, so everything from nu_R(1,.) on is inside.
    std::vector<double> nus;
    for (int v = 2; v <= 10; ++v) nus.push_back(v);
    const auto odd = advpos::region_scan(SchemeKind::Centered2, 3, {0.75}, nus, 1e-9);
    const double lower = nu_R(1, 0.75);
    for (const auto& s : odd) CHECK(s.nonneg == (s.nu >= lower));

    const auto spectral = advpos::region_scan(SchemeKind::Spectral, 5, advpos::linspace(0.9, 1.0, 5),
                                              advpos::logspace(5.0, 50.0, 12), 1e-9);
    int hits = 0;
    for (const auto& s : spectral) hits += s.nonneg ? 1 : 0;
    CHECK(hits > 0);

    CHECK_THROWS_AS(advpos::region_scan(SchemeKind::Centered2, 3, {}, {1.0}, 1e-9),
                    std::invalid_argument);
}

TEST_CASE("even-m witness stays negative") {
    CHECK(advpos::even_m_negativity_witness(SchemeKind::Centered2, 6, 1.0, 1.0) < 0.0);
    CHECK(advpos::even_m_negativity_witness(SchemeKind::Centered4, 8, 0.5, 50.0) < 0.0);
    CHECK_THROWS_AS(advpos::even_m_negativity_witness(SchemeKind::Centered2, 5, 1.0, 1.0),
                    std::invalid_argument);

    std::mt19937 rng(13);
    std::uniform_real_distribution<double> theta_dist(0.05, 1.0);
    std::uniform_real_distribution<double> log_nu(std::log(0.01), std::log(100.0));
    for (int t = 0; t < 20; ++t) {
        const double theta = theta_dist(rng);
        const double nu = std::exp(log_nu(rng));
        const double witness = advpos::even_m_negativity_witness(SchemeKind::Spectral, 8, theta, nu);
        const double poly = advpos::eval_p8(std::numbers::pi * theta * nu);
        CHECK(witness * poly > 0.0);  // same (negative) sign
    }
}

TEST_CASE("p_8 certificate") {
    const double s2 = std::sqrt(2.0);
    CHECK(advpos::eval_p8(0.0) == doctest::Approx(-256.0 * (2.0 + s2)).epsilon(1e-15));
    CHECK(advpos::eval_p8(0.0) == doctest::Approx(-873.9587).epsilon(1e-6));
    for (int i = 0; i <= 1000; ++i) CHECK(advpos::eval_p8(0.1 * i) < 0.0);
    CHECK_THROWS_AS(advpos::eval_p8(-0.5), std::invalid_argument);
}

TEST_CASE("corollary 4: sign of the matrix vs the boundary curves") {
    std::mt19937 rng(14);
    std::uniform_real_distribution<double> theta_dist(0.05, 1.0);
    std::uniform_real_distribution<double> log_nu(std::log(0.1), std::log(100.0));
    std::uniform_int_distribution<int> k_dist(1, 8);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        const int k = k_dist(rng);
        const double theta = theta_dist(rng);
        const double nu = std::exp(log_nu(rng));
        const double lo = nu_R(k, theta);
        const double hi = nu_L(k, theta);
        if (std::abs(nu - lo) < 1e-8 * lo) continue;  // guard band at the boundary
        if (std::isfinite(hi) && std::abs(nu - hi) < 1e-8 * hi) continue;
        const bool inside = (nu >= lo) && (nu <= hi);
        const auto check =
            advpos::is_positivity_preserving({SchemeKind::Centered2, 2 * k + 1, theta, nu}, 1e-12);
        CHECK(check.nonneg == inside);
        ++checked;
    }
    CHECK(checked > 150);
}

TEST_CASE("corollaries 2/3: entry signs follow the polynomial signs") {
    std::mt19937 rng(15);
    std::uniform_real_distribution<double> theta_dist(0.05, 1.0);
    std::uniform_real_distribution<double> log_nu(std::log(0.1), std::log(50.0));
    std::uniform_int_distribution<int> k_dist(1, 6);
    for (int t = 0; t < 100; ++t) {
        const int k = k_dist(rng);
        const int m = 2 * k + 1;
        const double theta = theta_dist(rng);
        const double nu = std::exp(log_nu(rng));
        const double y = advpos::y_from(theta, nu).value();
        const auto row = advpos::build_M_direct({SchemeKind::Centered2, m, theta, nu}).M.first_row();

        const double pl = advpos::poly_PL(k, theta)(y);
        if (std::abs(pl) > 1e-9) CHECK((row[0] >= 0.0) == (pl >= 0.0));

        bool tail_nonneg = true;
        for (int j = 2; j <= m; ++j) tail_nonneg = tail_nonneg && row[static_cast<size_t>(j - 1)] >= -1e-12;
        const double pr = advpos::poly_PR(k)(y);
        if (std::abs(pr) > 1e-9) CHECK(tail_nonneg == (pr >= 0.0));
    }
}

TEST_CASE("theorem 2 at theta = 1/2: the region is the single point (k, nu) = (1, 4)") {
    for (int k = 1; k <= 4; ++k) {
        const int m = 2 * k + 1;
        for (int i = 0; i <= 200; ++i) {
            const double nu = 3.5 + i / 200.0;  // covers 4.0 exactly at i = 100
            const auto check = advpos::is_positivity_preserving({SchemeKind::Centered2, m, 0.5, nu}, 1e-9);
            const bool expected_hit = (k == 1) && (std::abs(nu - 4.0) < 1e-9);
            CHECK(check.nonneg == expected_hit);
        }
    }
}

TEST_CASE("boundary curve assembly") {
    const auto curve = advpos::boundary_curve(1, advpos::linspace(0.05, 1.0, 96));
    CHECK(curve.k == 1);
    CHECK(curve.theta_critical == doctest::Approx(0.5).epsilon(1e-10));
    for (const auto& s : curve.samples) {
        if (s.theta >= 2.0 / 3.0) {
            CHECK(std::isinf(s.nu_l));
        } else {
            CHECK(std::isfinite(s.nu_l));
        }
        if (s.theta > curve.theta_critical) CHECK(s.nu_r <= s.nu_l);
    }
    CHECK_THROWS_AS(advpos::boundary_curve(1, {}), std::invalid_argument);
}
