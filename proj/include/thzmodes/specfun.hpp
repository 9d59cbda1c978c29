#ifndef THZMODES_SPECFUN_HPP
#define THZMODES_SPECFUN_HPP

#include <vector>

namespace thzmodes::specfun {

/// One row of exponentially scaled modified Bessel functions of the first
/// kind, e^{-tau} I_n(tau) for n = 0..n_max.  All entries lie in [0, 1],
/// the n = 0 entry is the largest, and the whole row sums to 1 via
/// e^{-tau} (I_0 + 2 sum_{n>=1} I_n) = 1.
struct ScaledInfeldRow {
    double tau = 0.0;
    std::vector<double> values;
};

/// Evaluate e^{-tau} I_n(tau) for n = 0..n_max.
///
/// Works in the scaled form throughout, so arguments up to tau ~ 5000 are
/// handled without overflow.  Uses the power series for tiny tau and a
/// normalized backward (Miller) recurrence otherwise.  Relative accuracy
/// is ~1e-13 for tau <= 50 and ~1e-11 beyond.
///
/// Throws std::invalid_argument for negative or non-finite tau, or
/// negative n_max.
ScaledInfeldRow scaled_infeld_row(double tau, int n_max);

/// Single-value convenience: e^{-tau} I_n(tau).
double scaled_infeld(int n, double tau);

} // namespace thzmodes::specfun

#endif
