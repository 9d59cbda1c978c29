#include "thzmodes/oracle.hpp"

#include "thzmodes/decomp.hpp"
#include "thzmodes/scatter.hpp"
#include "thzmodes/specfun.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace thzmodes::oracle {

namespace {

using coupling::ChiVariant;

void add(std::vector<CheckResult>& out, const std::string& name, double residual, double tol) {
    out.push_back(CheckResult{name, residual, tol, residual <= tol});
}

std::string tag(double v) {
    std::string s = std::to_string(v);
    while (!s.empty() && s.back() == '0')
        s.pop_back();
    if (!s.empty() && s.back() == '.')
        s.pop_back();
    return s;
}

double reconstruction_residual(const coupling::CouplingMatrix& h, const decomp::ModeDecomposition& dec) {
    Eigen::MatrixXd rebuilt = Eigen::MatrixXd::Zero(h.dim(), h.dim());
    for (int j = 0; j < dec.mode_count(); ++j)
        rebuilt.noalias() += dec.values[static_cast<std::size_t>(j)]
                             * dec.left_vectors.row(j).transpose() * dec.right_vectors.row(j);
    return (rebuilt - h.entries).cwiseAbs().maxCoeff();
}

double orthonormality_residual(const Eigen::MatrixXd& rows) {
    const Eigen::MatrixXd gram = rows * rows.transpose();
    return (gram - Eigen::MatrixXd::Identity(rows.rows(), rows.cols())).cwiseAbs().maxCoeff();
}

void check_infeld(std::vector<CheckResult>& out, VerifyLevel level) {
    add(out, "infeld_quadrature_tau0_n0", std::abs(infeld_quadrature(0, 0.0) - 1.0), 1e-14);
    add(out, "infeld_quadrature_tau0_n1", std::abs(infeld_quadrature(1, 0.0)), 1e-14);

    std::vector<double> taus = {0.5, 4.0, 40.0};
    if (level == VerifyLevel::full)
        taus.push_back(400.0);
    for (double tau : taus) {
        const auto row = specfun::scaled_infeld_row(tau, 50);
        double worst = 0.0;
        for (int n = 0; n <= 50; ++n) {
            const double q = infeld_quadrature(n, tau);
            // |d| <= 1e-10 |q| + 1e-13 (the quadrature's absolute floor),
            // written as one normalized residual against tolerance 1e-10.
            const double d = std::abs(row.values[static_cast<std::size_t>(n)] - q)
                             / (std::abs(q) + 1e-3);
            worst = std::max(worst, d);
        }
        add(out, "infeld_vs_quadrature_tau" + tag(tau), worst, 1e-10);
    }

    for (double tau : {0.04, 4.0, 400.0, 1600.0}) {
        if (level == VerifyLevel::quick && tau > 40.0)
            continue;
        const int n_max = coupling::truncation_order(tau, 1e-16);
        const auto row = specfun::scaled_infeld_row(tau, n_max);
        double sum = row.values[0];
        for (int n = 1; n <= n_max; ++n)
            sum += 2.0 * row.values[static_cast<std::size_t>(n)];
        add(out, "infeld_sum_rule_tau" + tag(tau), std::abs(sum - 1.0), 1e-12);

        double worst = 0.0;
        for (int n = 1; n + 1 <= n_max; ++n) {
            const double lhs = row.values[static_cast<std::size_t>(n - 1)]
                               - row.values[static_cast<std::size_t>(n + 1)]
                               - (2.0 * n / tau) * row.values[static_cast<std::size_t>(n)];
            worst = std::max(worst, std::abs(lhs));
        }
        add(out, "infeld_recurrence_tau" + tag(tau), worst / row.values[0], 1e-10);
    }
}

void check_kernel_svd(std::vector<CheckResult>& out, VerifyLevel level) {
    struct Point {
        double tau;
        int grid;
    };
    std::vector<Point> points = {{0.0, 256}, {0.5, 256}, {4.0, 256},
                                 {40.0, level == VerifyLevel::quick ? 512 : 1024}};
    for (const auto& p : points) {
        for (ChiVariant chi : {ChiVariant::chi1, ChiVariant::chi2}) {
            const int n_max = coupling::truncation_order(p.tau, 1e-12);
            const auto dec = decomp::decompose(coupling::build(chi, p.tau, n_max));
            const auto svd = kernel_svd(chi, p.tau, p.grid);
            const double top = std::abs(dec.values[0]);
            const int compared = std::min(20, dec.mode_count());
            double worst = 0.0;
            for (int j = 0; j < compared; ++j) {
                const double analytic = std::abs(dec.values[static_cast<std::size_t>(j)]);
                const double grid = svd.singular_values[static_cast<std::size_t>(j)];
                // |d| <= 1e-8 |R_j| + 1e-12 |R_0| (dense-SVD roundoff floor)
                worst = std::max(worst, std::abs(grid - analytic) / (analytic + 1e-4 * top));
            }
            add(out, "kernel_svd_" + coupling::to_string(chi) + "_tau" + tag(p.tau), worst, 1e-8);
        }
    }
}

void check_decomposition(std::vector<CheckResult>& out, double inject) {
    for (ChiVariant chi : {ChiVariant::chi1, ChiVariant::chi2}) {
        const double tau = 4.0;
        auto h = coupling::build(chi, tau, coupling::truncation_order(tau, 1e-12));
        const auto dec = decomp::decompose(h);
        if (inject != 0.0 && chi == ChiVariant::chi1)
            h.entries(h.n_max, h.n_max) += inject; // fault-injection hook
        add(out, "reconstruction_" + coupling::to_string(chi) + "_tau4",
            reconstruction_residual(h, dec), 1e-10);
        add(out, "orthonormality_W_" + coupling::to_string(chi) + "_tau4",
            orthonormality_residual(dec.left_vectors), 1e-10);
        add(out, "orthonormality_V_" + coupling::to_string(chi) + "_tau4",
            orthonormality_residual(dec.right_vectors), 1e-10);
    }
}

void check_moments(std::vector<CheckResult>& out, VerifyLevel level) {
    const double tau = 4.0;
    const auto h = coupling::build_h1(tau, coupling::truncation_order(tau, 1e-12));
    const auto dec = decomp::decompose(h);
    std::vector<double> gains = {0.1, 1.0};
    if (level == VerifyLevel::full)
        gains.push_back(2.0);
    for (double gainLG : gains) {
        const auto gs = scatter::bogolyubov_gains(dec, gainLG);
        const auto moments = propagate_moments(h, gainLG);
        double worst = 0.0;
        for (int n = 0; n < h.dim(); ++n) {
            double idler = 0.0, signal = 0.0;
            for (int j = 0; j < dec.mode_count(); ++j) {
                const double w = std::sinh(gs.g[static_cast<std::size_t>(j)]);
                idler += w * w * dec.left_vectors(j, n) * dec.left_vectors(j, n);
                signal += w * w * dec.right_vectors(j, n) * dec.right_vectors(j, n);
            }
            worst = std::max(worst, std::abs(idler - moments.idler_occupation(n)));
            worst = std::max(worst, std::abs(signal - moments.signal_occupation(n)));
        }
        add(out, "moments_vs_expm_tau4_g" + tag(gainLG), worst, 1e-10);
    }
}

void check_kernels(std::vector<CheckResult>& out) {
    const double tau = 4.0;
    const int grid = 512;
    const auto dec = decomp::decompose(coupling::build_h1(tau, coupling::truncation_order(tau, 1e-12)));
    const auto gs = scatter::bogolyubov_gains(dec, 1.0);
    const auto kernels = scatter::scattering_kernels(dec, gs, grid);
    const Eigen::MatrixXcd residual =
        kernels.k_ii * kernels.k_ii.adjoint() - kernels.k_is * kernels.k_is.adjoint()
        - Eigen::MatrixXcd::Identity(grid, grid);
    add(out, "quasi_unitarity_tau4_g1", residual.cwiseAbs().maxCoeff(), 1e-8);

    const auto profile = scatter::intensity(dec, gs, decomp::Side::idler, 4 * dec.n_max + 4);
    double integral = 0.0;
    for (double v : profile.total)
        integral += v;
    integral *= 2.0 * 3.14159265358979323846 / static_cast<double>(profile.total.size());
    double expected = 0.0;
    for (double g : gs.g)
        expected += std::sinh(g) * std::sinh(g);
    add(out, "intensity_integral_tau4_g1", std::abs(integral - expected) / expected, 1e-8);
}

} // namespace

std::vector<CheckResult> run_verify(VerifyLevel level, double inject) {
    std::vector<CheckResult> out;
    check_infeld(out, level);
    check_kernel_svd(out, level);
    check_decomposition(out, inject);
    check_moments(out, level);
    check_kernels(out);
    return out;
}

} // namespace thzmodes::oracle
