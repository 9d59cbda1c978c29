#ifndef THZMODES_COUPLING_HPP
#define THZMODES_COUPLING_HPP

#include <Eigen/Core>

#include <iosfwd>
#include <string>

namespace thzmodes::coupling {

/// Angular dependence of the effective quadratic susceptibility.
/// chi1: cos(phi_s) cos(phi_i); chi2: (1 + cos^2(phi_i)) / 2.
enum class ChiVariant { chi1, chi2 };

/// Real coupling matrix {H_nm} over Fourier indices n, m in [-n_max, n_max].
/// Row index n is the idler Fourier index; column index m is the
/// sign-flipped signal index.  Entries vanish unless |n - m| is 0 or 2, so
/// even and odd Fourier indices decouple into two tridiagonal-like blocks.
struct CouplingMatrix {
    ChiVariant chi = ChiVariant::chi1;
    double tau = 0.0;
    int n_max = 0;
    Eigen::MatrixXd entries; // (2 n_max + 1) x (2 n_max + 1)

    int dim() const { return 2 * n_max + 1; }

    /// Access by Fourier index, n, m in [-n_max, n_max].
    double operator()(int n, int m) const {
        return entries(n + n_max, m + n_max);
    }
};

/// Smallest n_max >= 8 such that e^{-tau} I_{n_max}(tau) < eps.  This bounds
/// the Fourier bandwidth of the coupling at truncation accuracy eps.
int truncation_order(double tau, double eps);

/// Coupling matrix for chi1 (symmetric):
///   H_nm = ((-1)^n / 2) e^{-tau} [ (I_{n+1} + I_{n-1}) d_{n,m}
///           + I_{n+1} d_{n+2,m} + I_{n-1} d_{n-2,m} ],  I_{-k} = I_k.
CouplingMatrix build_h1(double tau, int n_max);

/// Coupling matrix for chi2 (generally non-symmetric):
///   H_nm = (-1)^n e^{-tau} I_m(tau) [ d_{n,m} + (1/6) d_{n+2,m}
///           + (1/6) d_{n-2,m} ],  I_{-k} = I_k.
CouplingMatrix build_h2(double tau, int n_max);

CouplingMatrix build(ChiVariant chi, double tau, int n_max);

/// Debug export: header row of m indices, one row per n.
void write_csv(const CouplingMatrix& h, std::ostream& out);

std::string to_string(ChiVariant chi);
ChiVariant chi_from_int(int v);

} // namespace thzmodes::coupling

#endif
