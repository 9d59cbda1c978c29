#ifndef THZMODES_DECOMP_HPP
#define THZMODES_DECOMP_HPP

#include "thzmodes/coupling.hpp"

#include <Eigen/Core>

#include <complex>
#include <iosfwd>
#include <vector>

namespace thzmodes::decomp {

enum class Parity { even, odd };
enum class Side { idler, signal };

/// Signed orthogonal decomposition H = W^T R V: one row of W (idler Fourier
/// coefficients) and one row of V (signal, sign-flipped index) per mode,
/// with signed values R_j sorted by decreasing |R_j|.  Every mode is
/// supported entirely on even or entirely on odd Fourier indices.
struct ModeDecomposition {
    std::vector<double> values;   // signed R_j, |R_j| descending
    Eigen::MatrixXd left_vectors; // rows W_j over indices -n_max..n_max
    Eigen::MatrixXd right_vectors;
    std::vector<Parity> parity;
    coupling::ChiVariant chi = coupling::ChiVariant::chi1;
    double tau = 0.0;
    int n_max = 0;
    /// Set when a mode with a nonnegligible value had |w_j . v_j| < 1e-12,
    /// leaving its sign undefined; such modes get +1 by convention.
    /// (Null-space modes have arbitrary vectors and do not trip this.)
    bool sign_warning = false;

    int mode_count() const { return static_cast<int>(values.size()); }
};

/// Azimuthal mode function sampled on a uniform grid over [-pi, pi).
struct ModeFunction {
    int mode = 0;
    Side side = Side::idler;
    std::vector<double> phi;
    std::vector<std::complex<double>> samples;
};

/// Decompose a coupling matrix.  chi1 matrices go through a symmetric
/// eigendecomposition per parity block (signed eigenvalues); chi2 through a
/// per-block SVD with the value sign taken from sign(w_j . v_j).  Mode
/// vector signs are fixed deterministically: the largest-|coefficient|
/// entry of w_j is made positive, ties at the lowest Fourier index.
ModeDecomposition decompose(const coupling::CouplingMatrix& h);

/// Synthesize U_j(phi) = (2 pi)^{-1/2} sum_n W_jn e^{i n phi} (idler) or the
/// signal-side analogue from V with the sign-flipped Fourier index.  The
/// result has unit quadrature norm.  N must be >= 4 n_max.
ModeFunction mode_function(const ModeDecomposition& dec, int j, Side side, int grid_size);

/// (sum R_j^2)^2 / sum R_j^4.
double schmidt_number(const ModeDecomposition& dec);

/// CSV export: one row per mode (j, R_j, parity).
void write_values_csv(const ModeDecomposition& dec, std::ostream& out);

/// CSV export of the coefficient matrix for one side.
void write_vectors_csv(const ModeDecomposition& dec, Side side, std::ostream& out);

std::string to_string(Parity p);

} // namespace thzmodes::decomp

#endif
