#include "thzmodes/decomp.hpp"

#include "thzmodes/coupling.hpp"
#include "thzmodes/oracle.hpp"
#include "thzmodes/physics.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <sstream>

using namespace thzmodes;
using namespace thzmodes::decomp;

namespace {

double reconstruction_residual(const coupling::CouplingMatrix& h, const ModeDecomposition& dec) {
    Eigen::MatrixXd rebuilt = Eigen::MatrixXd::Zero(h.dim(), h.dim());
    for (int j = 0; j < dec.mode_count(); ++j)
        rebuilt.noalias() += dec.values[static_cast<std::size_t>(j)]
                             * dec.left_vectors.row(j).transpose() * dec.right_vectors.row(j);
    return (rebuilt - h.entries).cwiseAbs().maxCoeff();
}

double gram_residual(const Eigen::MatrixXd& rows) {
    return (rows * rows.transpose() - Eigen::MatrixXd::Identity(rows.rows(), rows.rows()))
        .cwiseAbs()
        .maxCoeff();
}

bool parity_pure(const ModeDecomposition& dec) {
    for (int j = 0; j < dec.mode_count(); ++j) {
        const bool even = dec.parity[static_cast<std::size_t>(j)] == Parity::even;
        for (int n = -dec.n_max; n <= dec.n_max; ++n) {
            const bool n_even = n % 2 == 0;
            if (n_even != even) {
                if (dec.left_vectors(j, n + dec.n_max) != 0.0)
                    return false;
                if (dec.right_vectors(j, n + dec.n_max) != 0.0)
                    return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("chi1 tau = 0: single negative eigenvalue with the cos mode") {
    const auto dec = decompose(coupling::build_h1(0.0, 8));
    CHECK(dec.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    for (int j = 1; j < dec.mode_count(); ++j)
        CHECK(std::abs(dec.values[static_cast<std::size_t>(j)]) <= 1e-14);
    CHECK(dec.parity[0] == Parity::odd);

    // leading coefficients (e_{-1} + e_{+1})/sqrt(2) after the sign fix
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(dec.left_vectors(0, -1 + dec.n_max) == doctest::Approx(inv_sqrt2).epsilon(1e-13));
    CHECK(dec.left_vectors(0, 1 + dec.n_max) == doctest::Approx(inv_sqrt2).epsilon(1e-13));
    // symmetric matrix: V = W entrywise
    CHECK((dec.left_vectors - dec.right_vectors).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("chi2 tau = 0: signed single value with closed-form vectors") {
    const auto dec = decompose(coupling::build_h2(0.0, 8));
    CHECK(dec.values[0] == doctest::Approx(std::sqrt(19.0 / 18.0)).epsilon(1e-14));
    for (int j = 1; j < dec.mode_count(); ++j)
        CHECK(std::abs(dec.values[static_cast<std::size_t>(j)]) <= 1e-14);
    CHECK(dec.parity[0] == Parity::even);

    const double norm = std::sqrt(19.0 / 18.0);
    CHECK(dec.left_vectors(0, dec.n_max) == doctest::Approx(1.0 / norm).epsilon(1e-13));
    CHECK(dec.left_vectors(0, 2 + dec.n_max) == doctest::Approx(1.0 / 6.0 / norm).epsilon(1e-13));
    CHECK(dec.left_vectors(0, -2 + dec.n_max) == doctest::Approx(1.0 / 6.0 / norm).epsilon(1e-13));
    CHECK(dec.right_vectors(0, dec.n_max) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("reconstruction, orthonormality and parity purity across tau") {
    for (double tau : {0.0, 0.04, 4.0, 400.0, 1600.0}) {
        for (auto chi : {coupling::ChiVariant::chi1, coupling::ChiVariant::chi2}) {
            const auto h = coupling::build(chi, tau, coupling::truncation_order(tau, 1e-12));
            const auto dec = decompose(h);
            CAPTURE(tau);
            CAPTURE(static_cast<int>(chi));
            CHECK(reconstruction_residual(h, dec) <= 1e-10);
            CHECK(gram_residual(dec.left_vectors) <= 1e-10);
            CHECK(gram_residual(dec.right_vectors) <= 1e-10);
            CHECK(parity_pure(dec));
            for (int j = 1; j < dec.mode_count(); ++j)
                CHECK(std::abs(dec.values[static_cast<std::size_t>(j)])
                      <= std::abs(dec.values[static_cast<std::size_t>(j - 1)]));
            if (chi == coupling::ChiVariant::chi1)
                CHECK((dec.left_vectors - dec.right_vectors).cwiseAbs().maxCoeff() == 0.0);
        }
    }
}

TEST_CASE("analytic |R_j| agree with the grid-kernel SVD oracle") {
    const double tau = 4.0;
    const int n_max = coupling::truncation_order(tau, 1e-12);
    for (auto chi : {coupling::ChiVariant::chi1, coupling::ChiVariant::chi2}) {
        const auto dec = decompose(coupling::build(chi, tau, n_max));
        const auto grid = oracle::kernel_svd(chi, tau, 256);
        const double top = std::abs(dec.values[0]);
        for (int j = 0; j < std::min(20, dec.mode_count()); ++j) {
            const double a = std::abs(dec.values[static_cast<std::size_t>(j)]);
            CHECK(std::abs(grid.singular_values[static_cast<std::size_t>(j)] - a)
                  <= 1e-8 * a + 1e-12 * top);
        }
    }
}

TEST_CASE("mode functions: closed form, norms, bandwidth guard") {
    const auto dec = decompose(coupling::build_h1(0.0, 8));
    const auto u0 = mode_function(dec, 0, Side::idler, 128);
    for (int k = 0; k < 128; ++k) {
        const double phi = u0.phi[static_cast<std::size_t>(k)];
        CHECK(std::norm(u0.samples[static_cast<std::size_t>(k)])
              == doctest::Approx(std::cos(phi) * std::cos(phi) / physics::kPi).epsilon(1e-12));
    }

    for (int j : {0, 1, 5}) {
        for (auto side : {Side::idler, Side::signal}) {
            const auto f = mode_function(dec, j, side, 64);
            double norm = 0.0;
            for (const auto& s : f.samples)
                norm += std::norm(s);
            norm *= 2.0 * physics::kPi / static_cast<double>(f.samples.size());
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
        }
    }

    CHECK_THROWS_AS(mode_function(dec, 0, Side::idler, 4 * dec.n_max - 1), std::invalid_argument);
    CHECK_THROWS_AS(mode_function(dec, 99, Side::idler, 128), std::invalid_argument);
}

TEST_CASE("leading mode shape matches the grid oracle mode") {
    const double tau = 4.0;
    const auto dec = decompose(coupling::build_h1(tau, coupling::truncation_order(tau, 1e-12)));
    const int grid_n = 256;
    const auto grid = oracle::kernel_svd(coupling::ChiVariant::chi1, tau, grid_n);
    const auto u0 = mode_function(dec, 0, Side::idler, grid_n);
    const double h = 2.0 * physics::kPi / grid_n;
    double worst = 0.0;
    for (int k = 0; k < grid_n; ++k) {
        const double grid_density = grid.left_modes(k, 0) * grid.left_modes(k, 0) / h;
        worst = std::max(worst,
                         std::abs(grid_density - std::norm(u0.samples[static_cast<std::size_t>(k)])));
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("schmidt number: closed cases and the 2 THz regime") {
    const auto dec0 = decompose(coupling::build_h1(0.0, 8));
    CHECK(schmidt_number(dec0) == doctest::Approx(1.0).epsilon(1e-10));

    ModeDecomposition two;
    two.values = {0.7, 0.7};
    CHECK(schmidt_number(two) == doctest::Approx(2.0).epsilon(1e-14));
    two.values = {-0.3, 0.3};
    CHECK(schmidt_number(two) == doctest::Approx(2.0).epsilon(1e-14));

    ModeDecomposition empty;
    empty.values = {0.0, 0.0};
    CHECK_THROWS_AS(schmidt_number(empty), std::invalid_argument);

    physics::ExperimentConfig cfg;
    const double tau = physics::tau_of_frequency(2e12, cfg);
    const auto dec = decompose(coupling::build_h1(tau, coupling::truncation_order(tau, 1e-12)));
    const double k = schmidt_number(dec);
    CHECK(k >= 20.0);
    CHECK(k <= 100.0);
}

TEST_CASE("two-fold near-degeneracy of even and odd blocks near tau = 4") {
    physics::ExperimentConfig cfg;
    const double tau = physics::tau_of_frequency(0.1e12, cfg);
    const auto dec = decompose(coupling::build_h1(tau, coupling::truncation_order(tau, 1e-12)));
    std::vector<double> even, odd;
    for (int j = 0; j < dec.mode_count(); ++j)
        (dec.parity[static_cast<std::size_t>(j)] == Parity::even ? even : odd)
            .push_back(std::abs(dec.values[static_cast<std::size_t>(j)]));
    const double top = std::abs(dec.values[0]);
    for (int p = 0; p < 5; ++p)
        CHECK(std::abs(even[static_cast<std::size_t>(p)] - odd[static_cast<std::size_t>(p)])
              <= 0.05 * top);
    // the two dominant pairs are close even in pairwise relative terms
    for (int p = 0; p < 2; ++p) {
        const double a = even[static_cast<std::size_t>(p)], b = odd[static_cast<std::size_t>(p)];
        CHECK(std::abs(a - b) <= 0.05 * std::max(a, b));
    }
}

TEST_CASE("sign-invariant observables survive flipping a (R_j, v_j) pair") {
    const auto h = coupling::build_h2(2.0, coupling::truncation_order(2.0, 1e-12));
    const auto dec = decompose(h);
    ModeDecomposition flipped = dec;
    flipped.values[0] = -flipped.values[0];
    flipped.right_vectors.row(0) = -flipped.right_vectors.row(0);

    CHECK(reconstruction_residual(h, flipped)
          == doctest::Approx(reconstruction_residual(h, dec)).epsilon(1e-12));
    CHECK(schmidt_number(flipped) == doctest::Approx(schmidt_number(dec)).epsilon(1e-14));
    const auto a = mode_function(dec, 0, Side::signal, 128);
    const auto b = mode_function(flipped, 0, Side::signal, 128);
    for (int k = 0; k < 128; ++k)
        CHECK(std::norm(a.samples[static_cast<std::size_t>(k)])
              == doctest::Approx(std::norm(b.samples[static_cast<std::size_t>(k)])).epsilon(1e-12));
}

TEST_CASE("csv exports") {
    const auto dec = decompose(coupling::build_h1(0.5, 8));
    std::ostringstream values;
    write_values_csv(dec, values);
    std::istringstream in(values.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "j,R_j,parity");
    int rows = 0;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == dec.mode_count());

    std::ostringstream vectors;
    write_vectors_csv(dec, Side::idler, vectors);
    CHECK(vectors.str().substr(0, 5) == "j,n-8");
}

TEST_CASE("non-finite matrices are rejected") {
    auto h = coupling::build_h1(1.0, 8);
    h.entries(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(decompose(h), std::invalid_argument);
}
