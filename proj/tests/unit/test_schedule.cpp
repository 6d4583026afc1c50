#include <doctest.h>

#include <cmath>
#include <numbers>

#include "adiabatic/evolution.hpp"
#include "adiabatic/schedule.hpp"
#include "adiabatic/spectrum.hpp"
#include "oracles.hpp"

using namespace adiabatic;

TEST_CASE("linear schedule") {
    CHECK(linear_schedule(10).s_at(5) == 0.5);
    const auto lin = linear_schedule(640);
    CHECK(lin.s_at(0) == 0.0);
    CHECK(lin.s_at(640) == 1.0);
    CHECK(rate(linear_schedule(10), 3.0) == doctest::Approx(0.1));
    CHECK_THROWS_AS(linear_schedule(0.0), std::invalid_argument);
    CHECK_THROWS_AS(lin.s_at(641), std::out_of_range);
}

TEST_CASE("global adiabatic time") {
    CHECK(global_adiabatic_time(64, 0.1) == doctest::Approx(640).epsilon(1e-15));
    CHECK(global_adiabatic_time(1024, 0.05) == doctest::Approx(20480).epsilon(1e-15));
    CHECK_THROWS_AS(global_adiabatic_time(2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(global_adiabatic_time(1, 0.1), std::invalid_argument);
}

TEST_CASE("closed-form local time") {
    CHECK(local_time_of_s(0.0, 64, 0.1) == 0.0);
    CHECK(local_time_of_s(0.5, 64, 0.1) == doctest::Approx(0.5 * local_total_time(64, 0.1)).epsilon(1e-15));

    // 116.55162414955429 from 40-digit quadrature of 1/(eps g^2)
    const double total = local_time_of_s(1.0, 64, 0.1);
    CHECK(std::abs(total - 116.55162414955429) < 1e-9);
    CHECK(std::abs(total - oracle::local_time_by_quadrature(64, 0.1)) < 1e-9);

    for (double s : {0.1, 0.3, 0.45, 0.5, 0.62, 0.9}) {
        const double q = oracle::local_time_by_quadrature(256, 0.05, s);
        CHECK(std::abs(local_time_of_s(s, 256, 0.05) - q) < 1e-9 * q);
    }

    CHECK(local_total_time(2, 0.1) == doctest::Approx(5.0 * std::numbers::pi).epsilon(1e-15));
    CHECK(local_total_time(64, 0.1) < std::numbers::pi * 8 / 0.2);

    const double big = 1 << 20;
    const double ratio = local_total_time(1 << 20, 0.1) / (std::numbers::pi * std::sqrt(big) / 0.2);
    CHECK(std::abs(ratio - 1.0) < 2e-3);

    CHECK_THROWS_AS(local_time_of_s(1.2, 64, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(local_total_time(64, 0.0), std::invalid_argument);
}

TEST_CASE("closed-form inverse") {
    const double total = local_total_time(64, 0.1);
    CHECK(local_s_of_time(0.0, 64, 0.1) == 0.0);
    CHECK(std::abs(local_s_of_time(0.5 * total, 64, 0.1) - 0.5) < 1e-15);
    CHECK(local_s_of_time(total, 64, 0.1) == 1.0);
    CHECK_THROWS_AS(local_s_of_time(total * 1.01, 64, 0.1), std::out_of_range);

    for (std::uint64_t n : {2ull, 64ull, 1ull << 20}) {
        double worst = 0.0;
        double worst_t = 0.0;
        const double tt = local_total_time(n, 0.1);
        for (int i = 0; i <= 1000; ++i) {
            const double s = i / 1000.0;
            worst = std::max(worst, std::abs(local_s_of_time(local_time_of_s(s, n, 0.1), n, 0.1) - s));
            const double t = tt * i / 1000.0;
            worst_t = std::max(worst_t, std::abs(local_time_of_s(local_s_of_time(t, n, 0.1), n, 0.1) - t));
        }
        CHECK(worst < 1e-10);
        CHECK(worst_t < 1e-10 * std::max(1.0, tt));
    }
}

TEST_CASE("local schedule rates") {
    const auto sch = local_adiabatic_schedule(64, 0.1);
    CHECK(sch.rate(0.0) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(std::abs(sch.rate(0.5 * sch.total_time()) - 0.0015625) < 1e-15);

    // Derivative of the closed form by central differences.
    for (double frac : {0.1, 0.3, 0.5, 0.8}) {
        const double t = frac * sch.total_time();
        const double h = 1e-4;
        const double fd = (sch.s_at(t + h) - sch.s_at(t - h)) / (2 * h);
        CHECK(sch.rate(t) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("schedule invariants") {
    const std::vector<Schedule> schedules{
        linear_schedule(37.5),
        local_adiabatic_schedule(64, 0.1),
        local_adiabatic_schedule(2, 0.3),
        local_adiabatic_schedule_for_duration(1024, 12.0),
        schedule_from_gap(grover_gap_model(32), 0.2, 1e-9),
    };
    for (const auto& sch : schedules) {
        CAPTURE(sch.describe());
        CHECK(sch.s_at(0.0) == 0.0);
        CHECK(sch.s_at(sch.total_time()) == 1.0);
        double prev = 0.0;
        for (int i = 1; i <= 1000; ++i) {
            const double s = sch.s_at(sch.total_time() * i / 1000.0);
            CHECK(s >= 0.0);
            CHECK(s <= 1.0);
            if (sch.kind() == ScheduleKind::Tabulated) {
                CHECK(s >= prev);
            } else {
                CHECK(s > prev);
            }
            prev = s;
        }
    }
}

TEST_CASE("local condition holds along the closed-form schedule") {
    for (std::uint64_t n : {4ull, 64ull, 4096ull}) {
        const auto sch = local_adiabatic_schedule(n, 0.1);
        for (int i = 0; i <= 1000; ++i) {
            const double t = sch.total_time() * i / 1000.0;
            const double s = sch.s_at(t);
            const double ratio = sch.rate(t) * coupling_matrix_element(s, n) / std::pow(gap(s, n), 2);
            CHECK(ratio <= 0.1 * (1 + 1e-12));
            CHECK(adiabaticity_ratio(s, sch.rate(t), n) == doctest::Approx(ratio));
        }
    }
}

TEST_CASE("time symmetry about the midpoint") {
    for (std::uint64_t n : {2ull, 64ull, 1024ull}) {
        const double total = local_total_time(n, 0.1);
        for (int i = 0; i <= 100; ++i) {
            const double s = i / 100.0;
            CHECK(std::abs(total - local_time_of_s(1.0 - s, n, 0.1) - local_time_of_s(s, n, 0.1)) < 1e-10);
        }
    }
}

TEST_CASE("total time approaches the asymptote monotonically") {
    double prev = 0.0;
    for (int k = 2; k <= 20; ++k) {
        const double n = std::ldexp(1.0, k);
        const double ratio = local_total_time(std::uint64_t(1) << k, 0.1) * 0.2 / (std::numbers::pi * std::sqrt(n));
        CHECK(ratio > prev);
        CHECK(ratio < 1.0);
        prev = ratio;
    }
    CHECK(prev > 0.999);
}

TEST_CASE("synthesis from a gap model") {
    SUBCASE("constant gap gives a straight line") {
        const double tol = 1e-9;
        const auto sch = schedule_from_gap(constant_gap_model(1.0), 0.1, tol);
        CHECK(sch.kind() == ScheduleKind::Tabulated);
        CHECK(std::abs(sch.total_time() - 10.0) < 10 * tol * 10.0);
        for (const auto& k : sch.knots()) CHECK(std::abs(k.s - 0.1 * k.t) < 10 * tol);
    }
    SUBCASE("Grover gap reproduces the closed-form total time") {
        const double tol = 1e-8;
        const auto sch = schedule_from_gap(grover_gap_model(64), 0.1, tol);
        const double exact = local_total_time(64, 0.1);
        CHECK(std::abs(sch.total_time() - exact) < 10 * tol * exact);
    }
    SUBCASE("Grover gap reproduces the closed-form inverse on every knot") {
        const double tol = 1e-8;
        const auto sch = schedule_from_gap(grover_gap_model(16), 0.1, tol);
        const double total = local_total_time(16, 0.1);
        for (const auto& k : sch.knots()) {
            CHECK(std::abs(k.s - local_s_of_time(std::min(k.t, total), 16, 0.1)) < 10 * tol);
            CHECK(k.rate == doctest::Approx(0.1 * std::pow(gap(k.s, 16), 2)).epsilon(1e-12));
        }
        CHECK(sch.knots().size() > 10);
    }
    SUBCASE("exact coupling is never slower than the bound") {
        const auto bound = schedule_from_gap(grover_gap_model(64), 0.1, 1e-8);
        const auto exact = schedule_from_gap(grover_gap_model(64, CouplingMode::Exact), 0.1, 1e-8);
        CHECK(exact.total_time() < bound.total_time());
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(schedule_from_gap(constant_gap_model(0.0), 0.1, 1e-8), std::domain_error);
        GapModel closing{[](double s) { return std::abs(s - 0.5); }, 1.0, {}};
        CHECK_THROWS(schedule_from_gap(closing, 0.1, 1e-8));
        SynthesisOptions few;
        few.max_steps = 5;
        CHECK_THROWS_AS(schedule_from_gap(grover_gap_model(4096), 0.1, 1e-10, few), std::runtime_error);
        CHECK_THROWS_AS(schedule_from_gap(constant_gap_model(1.0), 0.0, 1e-8), std::invalid_argument);
    }
}

TEST_CASE("rescaling and integral of s") {
    const auto local = local_adiabatic_schedule(64, 0.1);
    const auto stretched = local.rescaled(2 * local.total_time());
    CHECK(stretched.epsilon() == doctest::Approx(0.05));
    CHECK(stretched.s_at(stretched.total_time() * 0.3) == doctest::Approx(local.s_at(local.total_time() * 0.3)));

    // s(T - t) = 1 - s(t) for both analytic kinds, so the integral is T/2.
    CHECK(local.integral_of_s() == doctest::Approx(0.5 * local.total_time()).epsilon(1e-10));
    CHECK(linear_schedule(8.0).integral_of_s() == doctest::Approx(4.0).epsilon(1e-12));

    const auto tab = schedule_from_gap(grover_gap_model(16), 0.1, 1e-9);
    const auto tab2 = tab.rescaled(3.0);
    CHECK(tab2.total_time() == 3.0);
    CHECK(tab2.s_at(1.5) == doctest::Approx(tab.s_at(0.5 * tab.total_time())));
}
