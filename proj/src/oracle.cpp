#include "thzmodes/oracle.hpp"

#include "thzmodes/decomp.hpp"
#include "thzmodes/physics.hpp"
#include "thzmodes/scatter.hpp"
#include "thzmodes/specfun.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace thzmodes::oracle {

namespace {

using physics::kPi;

double chi_value(coupling::ChiVariant chi, double phi_s, double phi_i) {
    if (chi == coupling::ChiVariant::chi1)
        return std::cos(phi_s) * std::cos(phi_i);
    const double c = std::cos(phi_i);
    return 0.5 * (1.0 + c * c);
}

// Normalization that puts the continuous kernel in the same convention as
// the coupling matrices: fixed by the tau = 0 closed forms (unit leading
// singular value for chi1, sqrt(19/18) for chi2).
double kernel_scale(coupling::ChiVariant chi) {
    return chi == coupling::ChiVariant::chi1 ? -1.0 / kPi : 2.0 / (3.0 * kPi);
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
    // Scaling and squaring with a Taylor evaluation of the scaled block;
    // 24 terms at norm <= 0.5 leave truncation far below double roundoff.
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    double scaled = norm;
    while (scaled > 0.5 && squarings < 64) {
        scaled *= 0.5;
        ++squarings;
    }
    const Eigen::MatrixXcd x = a / std::exp2(static_cast<double>(squarings));
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
    Eigen::MatrixXcd term = result;
    for (int k = 1; k <= 24; ++k) {
        term = (term * x) / static_cast<double>(k);
        result += term;
    }
    for (int i = 0; i < squarings; ++i)
        result = result * result;
    return result;
}

} // namespace

GridKernel grid_kernel(coupling::ChiVariant chi, double tau, int grid_size) {
    if (!(tau >= 0.0) || !std::isfinite(tau))
        throw std::invalid_argument("grid_kernel: tau must be finite and >= 0");
    if (grid_size < 8)
        throw std::invalid_argument("grid_kernel: grid too small");

    GridKernel gk;
    gk.chi = chi;
    gk.tau = tau;
    gk.grid_size = grid_size;
    gk.matrix.resize(grid_size, grid_size);
    const double h = 2.0 * kPi / grid_size;
    const double scale = kernel_scale(chi);
    for (int k = 0; k < grid_size; ++k) {
        const double phi_i = -kPi + h * k;
        for (int l = 0; l < grid_size; ++l) {
            const double phi_s = -kPi + h * l;
            gk.matrix(k, l) = scale * chi_value(chi, phi_s, phi_i)
                              * std::exp(-tau * (1.0 + std::cos(phi_i - phi_s))) * h;
        }
    }
    return gk;
}

KernelSvd kernel_svd(coupling::ChiVariant chi, double tau, int grid_size) {
    const int bw = coupling::truncation_order(tau, 1e-12);
    if (grid_size < 4 * bw)
        throw std::invalid_argument("kernel_svd: grid must resolve the kernel bandwidth (need N >= 4 * truncation_order)");
    const GridKernel gk = grid_kernel(chi, tau, grid_size);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(gk.matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
    KernelSvd out;
    out.grid_size = grid_size;
    out.singular_values.assign(svd.singularValues().data(),
                               svd.singularValues().data() + svd.singularValues().size());
    out.left_modes = svd.matrixU();
    out.right_modes = svd.matrixV();
    return out;
}

SecondMoments propagate_moments(const coupling::CouplingMatrix& h, double gainLG) {
    if (!h.entries.allFinite() || !std::isfinite(gainLG))
        throw std::invalid_argument("propagate_moments: non-finite input");
    if (h.n_max > 64)
        throw std::invalid_argument("propagate_moments: n_max capped at 64 for the oracle");

    const int d = h.dim();
    const std::complex<double> i_unit(0.0, 1.0);

    // State vector [idler creation ops; sign-flipped signal annihilation
    // ops]; the quadratic coupling gives the linear generator below.
    Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
    gen.topRightCorner(d, d) = -i_unit * h.entries;
    gen.bottomLeftCorner(d, d) = i_unit * h.entries.transpose();

    const Eigen::MatrixXcd s = expm(gainLG * gen);
    SecondMoments out;
    out.idler_occupation.resize(d);
    out.signal_occupation.resize(d);
    for (int r = 0; r < d; ++r) {
        out.idler_occupation(r) = s.block(r, d, 1, d).squaredNorm();
        out.signal_occupation(r) = s.block(d + r, 0, 1, d).squaredNorm();
    }
    return out;
}

double infeld_quadrature(int n, double tau) {
    if (n < 0)
        throw std::invalid_argument("infeld_quadrature: order must be >= 0");
    if (!(tau >= 0.0) || !std::isfinite(tau))
        throw std::invalid_argument("infeld_quadrature: tau must be finite and >= 0");

    auto integrand = [&](double psi) {
        return std::exp(tau * (std::cos(psi) - 1.0)) * std::cos(n * psi);
    };

    // Composite trapezoid over [0, pi] with compensated summation, doubled
    // until two refinements agree.
    auto trapezoid = [&](int cells) {
        const double step = kPi / cells;
        double sum = 0.5 * (integrand(0.0) + integrand(kPi));
        double comp = 0.0;
        for (int k = 1; k < cells; ++k) {
            const double y = integrand(step * k) - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        return sum * step / kPi;
    };

    int cells = 64;
    while (cells < 4 * (n + 1) || cells * cells < 64.0 * tau)
        cells *= 2;
    double prev = trapezoid(cells);
    for (int iter = 0; iter < 16; ++iter) {
        cells *= 2;
        const double next = trapezoid(cells);
        if (std::abs(next - prev) <= 1e-15 + 1e-14 * std::abs(next))
            return next;
        prev = next;
    }
    return prev;
}

} // namespace thzmodes::oracle
