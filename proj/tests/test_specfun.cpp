#include "thzmodes/specfun.hpp"

#include "thzmodes/coupling.hpp"
#include "thzmodes/oracle.hpp"
#include "test_oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using thzmodes::specfun::scaled_infeld;
using thzmodes::specfun::scaled_infeld_row;

TEST_CASE("tau = 0 row is the Kronecker delta") {
    const auto row = scaled_infeld_row(0.0, 3);
    REQUIRE(row.values.size() == 4);
    CHECK(row.values[0] == 1.0);
    CHECK(row.values[1] == 0.0);
    CHECK(row.values[2] == 0.0);
    CHECK(row.values[3] == 0.0);
}

TEST_CASE("small-argument values match the series oracle") {
    const auto row = scaled_infeld_row(1.0, 1);
    CHECK(row.values[0] == doctest::Approx(test_oracles::series_scaled_infeld(0, 1.0)).epsilon(1e-14));
    CHECK(row.values[1] == doctest::Approx(test_oracles::series_scaled_infeld(1, 1.0)).epsilon(1e-14));

    CHECK(scaled_infeld(2, 3.5)
          == doctest::Approx(test_oracles::series_scaled_infeld(2, 3.5)).epsilon(1e-13));
}

TEST_CASE("single-value convenience equals the row entry exactly") {
    for (double tau : {1e-4, 0.04, 2.7, 41.0}) {
        for (int n : {0, 1, 7, 12})
            CHECK(scaled_infeld(n, tau)
                  == scaled_infeld_row(tau, n).values[static_cast<std::size_t>(n)]);
        // rows of different lengths agree to roundoff on shared entries
        const auto row = scaled_infeld_row(tau, 12);
        for (int n : {0, 1, 7, 12})
            CHECK(scaled_infeld(n, tau)
                  == doctest::Approx(row.values[static_cast<std::size_t>(n)]).epsilon(1e-13));
    }
    CHECK(scaled_infeld(0, 0.0) == 1.0);
    CHECK(scaled_infeld(5, 0.0) == 0.0);
}

TEST_CASE("large argument agrees with the quadrature oracle") {
    const double v = scaled_infeld(0, 1600.0);
    const double q = thzmodes::oracle::infeld_quadrature(0, 1600.0);
    CHECK(std::abs(v - q) <= 1e-10 * std::abs(q));
    // large-tau asymptote as a sanity bound only
    CHECK(v == doctest::Approx(1.0 / std::sqrt(2.0 * 3.14159265358979 * 1600.0)).epsilon(5e-4));
}

TEST_CASE("row invariants: range, monotonicity, sum rule") {
    for (double tau : {0.04, 0.9, 4.0, 400.0, 1600.0}) {
        const int n_max = thzmodes::coupling::truncation_order(tau, 1e-16);
        const auto row = scaled_infeld_row(tau, n_max);
        CHECK(row.values[0] <= 1.0);
        CHECK(row.values[0] > 0.0);
        for (std::size_t n = 1; n < row.values.size(); ++n) {
            CHECK(row.values[n] < row.values[0]);
            if (n >= 2)
                CHECK(row.values[n] < row.values[n - 1]);
        }
        double sum = row.values[0];
        for (std::size_t n = 1; n < row.values.size(); ++n)
            sum += 2.0 * row.values[n];
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("three-term recurrence residual stays small") {
    for (double tau : {0.04, 4.0, 400.0, 1600.0}) {
        const auto row = scaled_infeld_row(tau, 60);
        for (int n = 1; n < 60; ++n) {
            const double r = row.values[static_cast<std::size_t>(n - 1)]
                             - row.values[static_cast<std::size_t>(n + 1)]
                             - (2.0 * n / tau) * row.values[static_cast<std::size_t>(n)];
            CHECK(std::abs(r) <= 1e-10 * row.values[0]);
        }
    }
}

TEST_CASE("quadrature agreement across the working range") {
    for (double tau : {0.5, 4.0, 40.0, 400.0}) {
        const auto row = scaled_infeld_row(tau, 50);
        for (int n = 0; n <= 50; ++n) {
            const double q = thzmodes::oracle::infeld_quadrature(n, tau);
            CHECK(std::abs(row.values[static_cast<std::size_t>(n)] - q)
                  <= 1e-10 * std::abs(q) + 1e-13);
        }
    }
}

TEST_CASE("no overflow or underflow up to tau = 5000") {
    const auto row = scaled_infeld_row(5000.0, 400);
    for (double v : row.values) {
        CHECK(std::isfinite(v));
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
    CHECK(row.values[0] > 1e-3); // ~ 1/sqrt(2 pi tau)
}

TEST_CASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(scaled_infeld_row(-0.5, 3), std::invalid_argument);
    CHECK_THROWS_AS(scaled_infeld_row(std::numeric_limits<double>::quiet_NaN(), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(scaled_infeld_row(std::numeric_limits<double>::infinity(), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(scaled_infeld_row(1.0, -1), std::invalid_argument);
    CHECK_THROWS_AS(scaled_infeld(-2, 1.0), std::invalid_argument);
}

TEST_CASE("series triangle: library vs series oracle over a tau sweep") {
    // deterministic pseudo-random sample of tau values
    unsigned state = 12345;
    auto next_tau = [&]() {
        state = state * 1664525u + 1013904223u;
        return std::exp(std::log(1e-3) + (state % 10000) / 10000.0 * std::log(5e5));
    };
    for (int trial = 0; trial < 40; ++trial) {
        const double tau = next_tau(); // log-uniform in [1e-3, 500]
        const double rel = tau <= 50.0 ? 1e-12 : 1e-10;
        const auto row = scaled_infeld_row(tau, 30);
        for (int n = 0; n <= 30; n += 5) {
            const double ref = test_oracles::series_scaled_infeld(n, tau);
            CHECK(std::abs(row.values[static_cast<std::size_t>(n)] - ref)
                  <= rel * ref + 1e-300);
        }
    }
}
