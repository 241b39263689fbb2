#include "entloc/types.hpp"

#include <cmath>
#include <string>

namespace entloc {

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::Single2: return "single2";
        case Basis::Single4: return "single4";
        case Basis::Sym3: return "sym3";
        case Basis::Sym10: return "sym10";
        case Basis::Product4: return "product4";
        case Basis::Product16: return "product16";
        case Basis::Fock: return "fock";
    }
    return "unknown";
}

int basis_dim(Basis b) {
    switch (b) {
        case Basis::Single2: return 2;
        case Basis::Single4: return 4;
        case Basis::Sym3: return 3;
        case Basis::Sym10: return 10;
        case Basis::Product4: return 4;
        case Basis::Product16: return 16;
        case Basis::Fock: return -1;
    }
    return -1;
}

void Tolerances::validate() const {
    if (!(classify > 0.0) || !(rank > 0.0) || !(witness > 0.0)) {
        throw InputError("tolerances must be strictly positive");
    }
}

namespace {

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const cplx v = m.derived().data()[i];
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw InputError(std::string(what) + " has a non-finite entry");
        }
    }
}

}  // namespace

State::State(Basis basis, Vec amplitudes) : basis_(basis), amps_(std::move(amplitudes)) {
    const int d = basis_dim(basis_);
    if (d > 0 && amps_.size() != d) {
        throw DimensionError(std::string("state on ") + basis_name(basis_) + " needs " +
                             std::to_string(d) + " amplitudes, got " +
                             std::to_string(amps_.size()));
    }
    require_finite(amps_, "state");
}

void State::require_nonzero() const {
    if (norm() <= kStateEps) throw ZeroNormError("state norm is below 1e-12");
}

State State::normalized() const {
    require_nonzero();
    return State(basis_, amps_ / norm());
}

Operator::Operator(Basis basis, Mat matrix) : basis_(basis), m_(std::move(matrix)) {
    if (m_.rows() != m_.cols()) throw DimensionError("operator matrix must be square");
    const int d = basis_dim(basis_);
    if (d > 0 && m_.rows() != d) {
        throw DimensionError(std::string("operator on ") + basis_name(basis_) + " must be " +
                             std::to_string(d) + "x" + std::to_string(d));
    }
    require_finite(m_, "operator");
}

Operator Operator::identity(Basis basis, Eigen::Index dim) {
    const Eigen::Index d = basis_dim(basis) > 0 ? basis_dim(basis) : dim;
    if (d <= 0) throw DimensionError("identity on a Fock basis needs an explicit dimension");
    return Operator(basis, Mat::Identity(d, d));
}

State Operator::apply(const State& s) const {
    require_compatible(*this, s);
    return State(basis_, m_ * s.amplitudes());
}

Operator Operator::operator*(const Operator& rhs) const {
    if (basis_ != rhs.basis_ || dim() != rhs.dim()) throw DimensionError("operator basis mismatch");
    return Operator(basis_, m_ * rhs.m_);
}

Operator Operator::operator+(const Operator& rhs) const {
    if (basis_ != rhs.basis_ || dim() != rhs.dim()) throw DimensionError("operator basis mismatch");
    return Operator(basis_, m_ + rhs.m_);
}

Operator Operator::operator-(const Operator& rhs) const {
    if (basis_ != rhs.basis_ || dim() != rhs.dim()) throw DimensionError("operator basis mismatch");
    return Operator(basis_, m_ - rhs.m_);
}

void require_compatible(const Operator& op, const State& s) {
    if (op.basis() != s.basis() || op.dim() != s.dim()) {
        throw DimensionError(std::string("operator on ") + basis_name(op.basis()) +
                             " cannot act on a state in " + basis_name(s.basis()));
    }
}

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      0x9e3779b9u};
    return Rng(seq);
}

cplx complex_normal(Rng& rng) {
    std::normal_distribution<double> n(0.0, std::sqrt(0.5));
    const double re = n(rng);
    const double im = n(rng);
    return {re, im};
}

Vec complex_normal_vector(Rng& rng, Eigen::Index n) {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = complex_normal(rng);
    return v;
}

Mat complex_normal_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
    Mat m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex_normal(rng);
    }
    return m;
}

Mat random_unitary(Rng& rng, Eigen::Index n) {
    const Mat g = complex_normal_matrix(rng, n, n);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ() * Mat::Identity(n, n);
    const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix column phases so the distribution is Haar.
    for (Eigen::Index j = 0; j < n; ++j) {
        const cplx d = r(j, j);
        if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
    }
    return q;
}

Mat random_hermitian(Rng& rng, Eigen::Index n) {
    const Mat g = complex_normal_matrix(rng, n, n);
    return (g + g.adjoint()) / 2.0;
}

double spectral_norm(const Mat& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues()(0);
}

}  // namespace entloc
