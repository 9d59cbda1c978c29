#include "thzmodes/coupling.hpp"

#include "thzmodes/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace thzmodes::coupling {

namespace {

double parity_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// e^{-tau} I_{|k|}(tau) lookup from a precomputed row.
double infeld_at(const specfun::ScaledInfeldRow& row, int k) {
    return row.values[static_cast<std::size_t>(std::abs(k))];
}

// Row for matrix assembly.  The length is set by tau alone, deep in the
// underflow tail, so the same entry values come back for every n_max and
// enlarging a matrix never perturbs the entries already built.
specfun::ScaledInfeldRow assembly_row(double tau, int min_len) {
    const int canonical =
        static_cast<int>(std::ceil(std::sqrt(1500.0 * std::max(tau, 1.0)))) + 8;
    return specfun::scaled_infeld_row(tau, std::max(min_len, canonical));
}

} // namespace

int truncation_order(double tau, double eps) {
    if (!(tau >= 0.0) || !std::isfinite(tau))
        throw std::invalid_argument("truncation_order: tau must be finite and >= 0");
    if (!(eps > 0.0) || !(eps < 1.0))
        throw std::invalid_argument("truncation_order: eps must be in (0, 1)");

    // Scaled rows decay like exp(-n^2 / 2 tau), so the crossing sits near
    // sqrt(2 tau ln(1/eps)); scan a row that extends safely past it.
    int hi = 8 + static_cast<int>(std::ceil(
                 std::sqrt(2.0 * std::max(tau, 1.0) * std::log(1.0 / eps)))) + 32;
    for (;;) {
        const auto row = specfun::scaled_infeld_row(tau, hi);
        for (int n = 8; n <= hi; ++n) {
            if (row.values[static_cast<std::size_t>(n)] < eps)
                return n;
        }
        hi *= 2;
    }
}

CouplingMatrix build_h1(double tau, int n_max) {
    if (!(tau >= 0.0) || !std::isfinite(tau))
        throw std::invalid_argument("build_h1: tau must be finite and >= 0");
    if (n_max < 1)
        throw std::invalid_argument("build_h1: n_max must be >= 1");

    const auto row = assembly_row(tau, n_max + 2);
    CouplingMatrix h;
    h.chi = ChiVariant::chi1;
    h.tau = tau;
    h.n_max = n_max;
    h.entries = Eigen::MatrixXd::Zero(h.dim(), h.dim());

    for (int n = -n_max; n <= n_max; ++n) {
        const double s = 0.5 * parity_sign(n);
        const double up = infeld_at(row, n + 1);
        const double down = infeld_at(row, n - 1);
        h.entries(n + n_max, n + n_max) = s * (up + down);
        if (n + 2 <= n_max)
            h.entries(n + n_max, n + 2 + n_max) = s * up;
        if (n - 2 >= -n_max)
            h.entries(n + n_max, n - 2 + n_max) = s * down;
    }
    return h;
}

CouplingMatrix build_h2(double tau, int n_max) {
    if (!(tau >= 0.0) || !std::isfinite(tau))
        throw std::invalid_argument("build_h2: tau must be finite and >= 0");
    if (n_max < 1)
        throw std::invalid_argument("build_h2: n_max must be >= 1");

    const auto row = assembly_row(tau, n_max);
    CouplingMatrix h;
    h.chi = ChiVariant::chi2;
    h.tau = tau;
    h.n_max = n_max;
    h.entries = Eigen::MatrixXd::Zero(h.dim(), h.dim());

    for (int n = -n_max; n <= n_max; ++n) {
        const double s = parity_sign(n);
        h.entries(n + n_max, n + n_max) = s * infeld_at(row, n);
        if (n + 2 <= n_max)
            h.entries(n + n_max, n + 2 + n_max) = s / 6.0 * infeld_at(row, n + 2);
        if (n - 2 >= -n_max)
            h.entries(n + n_max, n - 2 + n_max) = s / 6.0 * infeld_at(row, n - 2);
    }
    return h;
}

CouplingMatrix build(ChiVariant chi, double tau, int n_max) {
    return chi == ChiVariant::chi1 ? build_h1(tau, n_max) : build_h2(tau, n_max);
}

void write_csv(const CouplingMatrix& h, std::ostream& out) {
    out << "n_m";
    for (int m = -h.n_max; m <= h.n_max; ++m)
        out << "," << m;
    out << "\n";
    char buf[40];
    for (int n = -h.n_max; n <= h.n_max; ++n) {
        out << n;
        for (int m = -h.n_max; m <= h.n_max; ++m) {
            std::snprintf(buf, sizeof(buf), "%.16e", h(n, m));
            out << "," << buf;
        }
        out << "\n";
    }
}

std::string to_string(ChiVariant chi) {
    return chi == ChiVariant::chi1 ? "chi1" : "chi2";
}

ChiVariant chi_from_int(int v) {
    if (v == 1)
        return ChiVariant::chi1;
    if (v == 2)
        return ChiVariant::chi2;
    throw std::invalid_argument("chi variant must be 1 or 2");
}

} // namespace thzmodes::coupling
