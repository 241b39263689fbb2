#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace entloc {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using Rng = std::mt19937_64;

/// States with a norm below this are rejected as the zero vector.
inline constexpr double kStateEps = 1e-12;

/// Basis tags carried by every state and operator.
///
/// Sym3 is ordered (|00>, |11>, (|01>+|10>)/sqrt2). Sym10 lists the pairs
/// (i <= j) of the four levels (L0, L1, R0, R1) lexicographically, with
/// |i>|i> for i == j and (|i>|j> + |j>|i>)/sqrt2 otherwise. Product bases
/// use index d*i + j for |i>|j>. Fock states are indexed by a FockSpace.
enum class Basis { Single2, Single4, Sym3, Sym10, Product4, Product16, Fock };

const char* basis_name(Basis b);
/// Fixed dimension of the basis, or -1 for Fock.
int basis_dim(Basis b);

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionError : public InputError {
public:
    using InputError::InputError;
};

class ZeroNormError : public InputError {
public:
    using InputError::InputError;
};

/// Two independent computations of the same quantity disagree.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Tolerances {
    double classify = 1e-9;  ///< relative, on normalized states
    double rank = 1e-8;      ///< singular-value ratio
    double witness = 1e-6;   ///< |residual| counted as a violation

    void validate() const;
};

/// Amplitude vector tagged with its basis.
class State {
public:
    State(Basis basis, Vec amplitudes);

    Basis basis() const { return basis_; }
    const Vec& amplitudes() const { return amps_; }
    Eigen::Index dim() const { return amps_.size(); }
    cplx operator[](Eigen::Index i) const { return amps_(i); }

    double norm() const { return amps_.norm(); }
    /// Throws ZeroNormError when the norm is below kStateEps.
    void require_nonzero() const;
    State normalized() const;
    State scaled(cplx factor) const { return State(basis_, amps_ * factor); }

private:
    Basis basis_;
    Vec amps_;
};

/// Square matrix tagged with the basis it acts on.
class Operator {
public:
    Operator(Basis basis, Mat matrix);

    static Operator identity(Basis basis, Eigen::Index dim = -1);

    Basis basis() const { return basis_; }
    const Mat& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

    State apply(const State& s) const;
    Operator adjoint() const { return Operator(basis_, m_.adjoint()); }
    Operator operator*(const Operator& rhs) const;
    Operator operator+(const Operator& rhs) const;
    Operator operator-(const Operator& rhs) const;
    Operator scaled(cplx factor) const { return Operator(basis_, m_ * factor); }

private:
    Basis basis_;
    Mat m_;
};

/// Throws DimensionError unless the operator can act on the state.
void require_compatible(const Operator& op, const State& s);

/// Independent stream derived from (seed, stream); used for per-sample and
/// per-worker generators so results do not depend on scheduling.
Rng make_rng(std::uint64_t seed, std::uint64_t stream);

/// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
cplx complex_normal(Rng& rng);
Vec complex_normal_vector(Rng& rng, Eigen::Index n);
Mat complex_normal_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);
/// Haar-distributed unitary via QR of a Ginibre matrix.
Mat random_unitary(Rng& rng, Eigen::Index n);
Mat random_hermitian(Rng& rng, Eigen::Index n);

/// Largest singular value.
double spectral_norm(const Mat& m);

}  // namespace entloc
