#ifndef THZMODES_ORACLE_HPP
#define THZMODES_ORACLE_HPP

#include "thzmodes/coupling.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace thzmodes::oracle {

/// Dense sampling of the azimuthal kernel chi_a(phi_s, phi_i)
/// exp(-tau (1 + cos(phi_i - phi_s))) on an N x N uniform grid, quadrature
/// weight folded in symmetrically and scaled to the coupling-matrix
/// normalization, so its singular values approximate {|R_j|} directly.
struct GridKernel {
    coupling::ChiVariant chi = coupling::ChiVariant::chi1;
    double tau = 0.0;
    int grid_size = 0;
    Eigen::MatrixXd matrix; // (idler row, signal column)
};

/// SVD of the grid kernel: singular values plus grid-sampled mode vectors
/// (columns, approximately sqrt(2 pi / N)-scaled samples of U_j / U~_j).
struct KernelSvd {
    int grid_size = 0;
    std::vector<double> singular_values;
    Eigen::MatrixXd left_modes;
    Eigen::MatrixXd right_modes;
};

/// Vacuum-input second moments <a^dag a> after propagating the coupled
/// Fourier-mode system to arc length gainLG by matrix exponential.
struct SecondMoments {
    Eigen::VectorXd idler_occupation;  // per idler Fourier index n
    Eigen::VectorXd signal_occupation; // per (sign-flipped) signal index m
};

GridKernel grid_kernel(coupling::ChiVariant chi, double tau, int grid_size);

/// Requires grid_size >= 4 * truncation_order(tau, 1e-12).
KernelSvd kernel_svd(coupling::ChiVariant chi, double tau, int grid_size);

/// Brute-force propagation of the coupled evolution generated by H, via
/// scaling-and-squaring matrix exponential.  H.n_max is capped at 64.
SecondMoments propagate_moments(const coupling::CouplingMatrix& h, double gainLG);

/// e^{-tau} (1/pi) Int_0^pi e^{tau cos(psi)} cos(n psi) dpsi by trapezoid
/// refinement (spectrally accurate for this periodic integrand); the
/// integrand is pre-scaled as e^{tau(cos(psi)-1)} so nothing overflows.
/// Absolute accuracy ~1e-14.
double infeld_quadrature(int n, double tau);

/// One verification check: a measured residual against its tolerance.
struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

enum class VerifyLevel { quick, full };

/// Run the oracle cross-check suite.  `inject` perturbs one coupling entry
/// between decomposition and the reconstruction residual (test hook for the
/// failure path); 0 disables it.
std::vector<CheckResult> run_verify(VerifyLevel level, double inject = 0.0);

} // namespace thzmodes::oracle

#endif
