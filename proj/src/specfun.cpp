#include "thzmodes/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace thzmodes::specfun {

namespace {

// Series evaluation of e^{-tau} I_n(tau).  The leading term carries the
// e^{-tau} factor so every partial term stays within double range even for
// large tau; usable whenever the series converges quickly (tiny tau here).
double scaled_series_term(int n, double tau) {
    if (tau == 0.0)
        return n == 0 ? 1.0 : 0.0;
    const double half = 0.5 * tau;
    double term = std::exp(static_cast<double>(n) * std::log(half)
                           - std::lgamma(static_cast<double>(n) + 1.0) - tau);
    double sum = term;
    const double x2 = half * half;
    for (int k = 0; k < 64; ++k) {
        term *= x2 / ((k + 1.0) * (k + n + 1.0));
        sum += term;
        if (term < sum * 1e-18)
            break;
    }
    return sum;
}

// Starting order for the backward recurrence.  The first part is the usual
// margin above n_max; the second guards the small-n entries when tau is much
// larger than n_max^2 (the row decays like a Gaussian of width ~sqrt(tau),
// so the recurrence must start well into the decayed tail).
int miller_start(int n_max, double tau) {
    const double t = std::max(tau, 1.0);
    const int pad = std::max(20, static_cast<int>(std::ceil(2.0 * std::sqrt(n_max * t))));
    const int guard = static_cast<int>(std::ceil(
                          std::sqrt(static_cast<double>(n_max) * n_max + 40.0 * t))) + 20;
    return std::max(n_max + pad, guard);
}

} // namespace

ScaledInfeldRow scaled_infeld_row(double tau, int n_max) {
    if (!std::isfinite(tau))
        throw std::invalid_argument("scaled_infeld_row: tau must be finite");
    if (tau < 0.0)
        throw std::invalid_argument("scaled_infeld_row: tau must be >= 0, got " + std::to_string(tau));
    if (n_max < 0)
        throw std::invalid_argument("scaled_infeld_row: n_max must be >= 0");

    ScaledInfeldRow row;
    row.tau = tau;
    row.values.assign(static_cast<std::size_t>(n_max) + 1, 0.0);

    if (tau == 0.0) {
        row.values[0] = 1.0;
        return row;
    }

    if (tau <= 1e-3) {
        for (int n = 0; n <= n_max; ++n)
            row.values[static_cast<std::size_t>(n)] = scaled_series_term(n, tau);
        return row;
    }

    // Backward recurrence I_{n-1} = I_{n+1} + (2n/tau) I_n from a seed high
    // above the row, normalized afterwards with the generating-function sum
    // e^{-tau}(I_0 + 2 sum_{n>=1} I_n) = 1.  Unnormalized values grow huge on
    // the way down, so everything is rescaled whenever they approach the
    // overflow threshold.
    const int n_start = miller_start(n_max, tau);
    const double rescale_limit = 1e250;
    const double rescale = 1e-250;

    double upper = 0.0;   // f_{n+1}
    double current = 1.0; // f_n, seeded at n_start
    double tail_sum = 0.0;

    for (int n = n_start; n >= 1; --n) {
        double lower = upper + (2.0 * n / tau) * current;
        tail_sum += current;
        upper = current;
        current = lower;
        if (current > rescale_limit) {
            current *= rescale;
            upper *= rescale;
            tail_sum *= rescale;
            for (double& v : row.values)
                v *= rescale;
        }
        if (n - 1 <= n_max)
            row.values[static_cast<std::size_t>(n - 1)] = current;
    }

    const double norm = current + 2.0 * tail_sum; // f_0 + 2 sum_{n>=1} f_n
    for (double& v : row.values)
        v /= norm;
    return row;
}

double scaled_infeld(int n, double tau) {
    if (n < 0)
        throw std::invalid_argument("scaled_infeld: order must be >= 0");
    return scaled_infeld_row(tau, n).values[static_cast<std::size_t>(n)];
}

} // namespace thzmodes::specfun
