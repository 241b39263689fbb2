#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's basis helpers: bases, symmetrizers and reductions are
// rebuilt from their definitions.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline const double kR2 = std::sqrt(2.0);

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
    return out;
}

inline Vec kron(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

inline Vec unit(int d, int i) {
    Vec v = Vec::Zero(d);
    v(i) = 1.0;
    return v;
}

inline Mat swap_matrix(int d) {
    Mat s = Mat::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) s(j * d + i, i * d + j) = 1.0;
    }
    return s;
}

/// (1 + SWAP) / 2
inline Mat symmetrizer(int d) { return (Mat::Identity(d * d, d * d) + swap_matrix(d)) / 2.0; }

/// Symmetric basis vectors in the product space, listed by hand.
inline std::vector<Vec> sym3_basis() {
    const Vec e0 = unit(2, 0), e1 = unit(2, 1);
    return {kron(e0, e0), kron(e1, e1), (kron(e0, e1) + kron(e1, e0)) / kR2};
}

inline std::vector<Vec> sym10_basis() {
    std::vector<Vec> out;
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            if (i == j) {
                out.push_back(kron(unit(4, i), unit(4, i)));
            } else {
                out.push_back((kron(unit(4, i), unit(4, j)) + kron(unit(4, j), unit(4, i))) / kR2);
            }
        }
    }
    return out;
}

inline Mat columns(const std::vector<Vec>& vs) {
    Mat m(vs.front().size(), static_cast<Eigen::Index>(vs.size()));
    for (std::size_t k = 0; k < vs.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = vs[k];
    return m;
}

/// Product-space vector for symmetric amplitudes.
inline Vec to_product(const Vec& amps) {
    return columns(amps.size() == 3 ? sym3_basis() : sym10_basis()) * amps;
}

/// rho_ik = sum_j psi_ij conj(psi_kj), normalized.
inline Mat partial_trace(const Vec& prod, int d) {
    Mat rho = Mat::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            for (int j = 0; j < d; ++j) rho(i, k) += prod(i * d + j) * std::conj(prod(k * d + j));
        }
    }
    return rho / rho.trace().real();
}

/// 2 (<psi| (x) 1) applied to a symmetric product vector.
inline Vec pi_reduce(const Vec& psi, const Vec& prod) {
    const int d = static_cast<int>(psi.size());
    Vec out = Vec::Zero(d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) out(j) += 2.0 * std::conj(psi(i)) * prod(i * d + j);
    }
    return out;
}

/// Operator on the symmetric amplitudes from a product-space operator.
inline Mat compress(const Mat& product_op, int levels) {
    const Mat v = columns(levels == 2 ? sym3_basis() : sym10_basis());
    return v.adjoint() * product_op * v;
}

}  // namespace oracle
