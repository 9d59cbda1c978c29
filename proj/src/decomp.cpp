#include "thzmodes/decomp.hpp"

#include "thzmodes/physics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace thzmodes::decomp {

namespace {

struct RawMode {
    double value = 0.0;
    Eigen::VectorXd w; // full-length coefficient vectors, zero off-parity
    Eigen::VectorXd v;
    Parity parity = Parity::even;
    bool sign_undefined = false;
};

// Index of the largest-|coefficient| entry; ties at the lowest Fourier index.
int dominant_index(const Eigen::VectorXd& w) {
    int best = 0;
    double best_abs = -1.0;
    for (int i = 0; i < w.size(); ++i) {
        const double a = std::abs(w(i));
        if (a > best_abs) {
            best_abs = a;
            best = i;
        }
    }
    return best;
}

void fix_vector_sign(RawMode& m) {
    const int d = dominant_index(m.w);
    if (m.w(d) < 0.0) {
        m.w = -m.w;
        m.v = -m.v; // flip as a pair so the reconstruction is unchanged
    }
}

// Decompose one parity block.  `idx` maps block positions to full-matrix
// positions.  For symmetric blocks an eigendecomposition gives signed values
// directly; otherwise an SVD plus the overlap-sign convention
// R_j = sigma_j sign(w_j . v_j) does.
void decompose_block(const Eigen::MatrixXd& full, const std::vector<int>& idx,
                     bool symmetric, Parity parity, int dim,
                     std::vector<RawMode>& out, bool& sign_warning) {
    const int b = static_cast<int>(idx.size());
    Eigen::MatrixXd block(b, b);
    for (int r = 0; r < b; ++r)
        for (int c = 0; c < b; ++c)
            block(r, c) = full(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);

    auto scatter_to_full = [&](const Eigen::VectorXd& x) {
        Eigen::VectorXd y = Eigen::VectorXd::Zero(dim);
        for (int r = 0; r < b; ++r)
            y(idx[static_cast<std::size_t>(r)]) = x(r);
        return y;
    };

    if (symmetric) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("decompose: eigensolver failed");
        for (int j = 0; j < b; ++j) {
            RawMode m;
            m.value = es.eigenvalues()(j);
            m.w = scatter_to_full(es.eigenvectors().col(j));
            m.v = m.w;
            m.parity = parity;
            out.push_back(std::move(m));
        }
    } else {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(block, Eigen::ComputeFullU | Eigen::ComputeFullV);
        for (int j = 0; j < b; ++j) {
            RawMode m;
            Eigen::VectorXd u = svd.matrixU().col(j);
            Eigen::VectorXd v = svd.matrixV().col(j);
            const double overlap = u.dot(v);
            double s = overlap >= 0.0 ? 1.0 : -1.0;
            if (std::abs(overlap) < 1e-12) {
                s = 1.0;
                if (svd.singularValues()(j) > 1e-12)
                    sign_warning = true;
            }
            m.value = s * svd.singularValues()(j);
            m.w = scatter_to_full(u);
            m.v = scatter_to_full(s * v);
            m.parity = parity;
            out.push_back(std::move(m));
        }
    }
}

} // namespace

ModeDecomposition decompose(const coupling::CouplingMatrix& h) {
    if (!h.entries.allFinite())
        throw std::invalid_argument("decompose: coupling matrix has non-finite entries");
    const int dim = h.dim();
    const int n_max = h.n_max;

    std::vector<int> even_idx, odd_idx;
    for (int n = -n_max; n <= n_max; ++n)
        (n % 2 == 0 ? even_idx : odd_idx).push_back(n + n_max);

    const bool symmetric = h.chi == coupling::ChiVariant::chi1;
    std::vector<RawMode> modes;
    modes.reserve(static_cast<std::size_t>(dim));
    bool sign_warning = false;
    decompose_block(h.entries, even_idx, symmetric, Parity::even, dim, modes, sign_warning);
    decompose_block(h.entries, odd_idx, symmetric, Parity::odd, dim, modes, sign_warning);

    for (auto& m : modes)
        fix_vector_sign(m);

    std::vector<int> order(modes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ma = modes[static_cast<std::size_t>(a)];
        const auto& mb = modes[static_cast<std::size_t>(b)];
        const double aa = std::abs(ma.value), ab = std::abs(mb.value);
        if (aa != ab)
            return aa > ab;
        if (ma.parity != mb.parity)
            return ma.parity == Parity::even;
        return dominant_index(ma.w) < dominant_index(mb.w);
    });

    ModeDecomposition dec;
    dec.chi = h.chi;
    dec.tau = h.tau;
    dec.n_max = n_max;
    dec.sign_warning = sign_warning;
    dec.values.reserve(modes.size());
    dec.left_vectors.resize(dim, dim);
    dec.right_vectors.resize(dim, dim);
    dec.parity.reserve(modes.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        const auto& m = modes[static_cast<std::size_t>(order[r])];
        dec.values.push_back(m.value);
        dec.left_vectors.row(static_cast<int>(r)) = m.w.transpose();
        dec.right_vectors.row(static_cast<int>(r)) = m.v.transpose();
        dec.parity.push_back(m.parity);
    }
    return dec;
}

ModeFunction mode_function(const ModeDecomposition& dec, int j, Side side, int grid_size) {
    if (j < 0 || j >= dec.mode_count())
        throw std::invalid_argument("mode_function: mode index out of range");
    if (grid_size < 4 * dec.n_max || grid_size < 4)
        throw std::invalid_argument("mode_function: grid too small for the Fourier bandwidth (need N >= 4 n_max)");

    const auto& coeffs = side == Side::idler ? dec.left_vectors : dec.right_vectors;
    // The signal synthesis flips the Fourier index: V_jm multiplies the m-th
    // sign-flipped signal operator, so its angular profile uses e^{-i m phi}.
    const double freq_sign = side == Side::idler ? 1.0 : -1.0;

    ModeFunction f;
    f.mode = j;
    f.side = side;
    f.phi.resize(static_cast<std::size_t>(grid_size));
    f.samples.resize(static_cast<std::size_t>(grid_size));
    const double norm = 1.0 / std::sqrt(2.0 * physics::kPi);
    for (int k = 0; k < grid_size; ++k) {
        const double phi = -physics::kPi + 2.0 * physics::kPi * k / grid_size;
        std::complex<double> acc = 0.0;
        for (int n = -dec.n_max; n <= dec.n_max; ++n) {
            const double c = coeffs(j, n + dec.n_max);
            if (c == 0.0)
                continue;
            acc += c * std::polar(1.0, freq_sign * n * phi);
        }
        f.phi[static_cast<std::size_t>(k)] = phi;
        f.samples[static_cast<std::size_t>(k)] = norm * acc;
    }
    return f;
}

double schmidt_number(const ModeDecomposition& dec) {
    double s2 = 0.0, s4 = 0.0;
    for (double r : dec.values) {
        const double r2 = r * r;
        s2 += r2;
        s4 += r2 * r2;
    }
    if (s4 == 0.0)
        throw std::invalid_argument("schmidt_number: all-zero spectrum");
    return s2 * s2 / s4;
}

void write_values_csv(const ModeDecomposition& dec, std::ostream& out) {
    out << "j,R_j,parity\n";
    char buf[40];
    for (int j = 0; j < dec.mode_count(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.16e", dec.values[static_cast<std::size_t>(j)]);
        out << j << "," << buf << "," << to_string(dec.parity[static_cast<std::size_t>(j)]) << "\n";
    }
}

void write_vectors_csv(const ModeDecomposition& dec, Side side, std::ostream& out) {
    const auto& m = side == Side::idler ? dec.left_vectors : dec.right_vectors;
    out << "j";
    for (int n = -dec.n_max; n <= dec.n_max; ++n)
        out << ",n" << n;
    out << "\n";
    char buf[40];
    for (int j = 0; j < dec.mode_count(); ++j) {
        out << j;
        for (int c = 0; c < m.cols(); ++c) {
            std::snprintf(buf, sizeof(buf), "%.16e", m(j, c));
            out << "," << buf;
        }
        out << "\n";
    }
}

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

} // namespace thzmodes::decomp
