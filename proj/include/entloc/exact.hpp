#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "entloc/types.hpp"

namespace entloc {

/// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
    mpq_class re{0};
    mpq_class im{0};

    GaussianRational() = default;
    GaussianRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }
    GaussianRational(long r) : re(r), im(0) {}

    static GaussianRational i() { return {0, 1}; }
    /// Parses "p", "p/q" or a finite decimal such as "-1.25".
    static mpq_class parse_rational(const std::string& text);

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussianRational conj() const { return {re, -im}; }
    cplx to_complex() const { return {re.get_d(), im.get_d()}; }
    std::string to_string() const;

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    /// Throws InputError on division by zero.
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// r + s sqrt2 with Gaussian-rational r, s: the field Q(i, sqrt2), which is
/// closed under the products met in normalized symmetric pair states.
struct ExactScalar {
    GaussianRational r;
    GaussianRational s;

    ExactScalar() = default;
    ExactScalar(GaussianRational rational, GaussianRational sqrt2_part = {})
        : r(std::move(rational)), s(std::move(sqrt2_part)) {}
    ExactScalar(long v) : r(v) {}

    static ExactScalar sqrt2() { return {GaussianRational{}, GaussianRational{1}}; }

    bool is_zero() const { return r.is_zero() && s.is_zero(); }
    ExactScalar conj() const { return {r.conj(), s.conj()}; }
    cplx to_complex() const;
    std::string to_string() const;

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) { return {a.r + b.r, a.s + b.s}; }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return {a.r - b.r, a.s - b.s}; }
    friend ExactScalar operator-(const ExactScalar& a) { return {-a.r, -a.s}; }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return {a.r * b.r + GaussianRational{2} * (a.s * b.s), a.r * b.s + a.s * b.r};
    }
    /// Division via the sqrt2 conjugate; throws InputError on zero.
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.r == b.r && a.s == b.s; }
};

/// Dense row-major matrix of exact scalars.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static ExactMatrix identity(int n);
    /// Entries given row by row.
    static ExactMatrix from_rows(const std::vector<std::vector<ExactScalar>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    ExactScalar& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const ExactScalar& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    /// Scalar multiple of the identity (square matrices only).
    bool is_scalar() const;
    bool is_diagonal() const;
    ExactMatrix adjoint() const;
    Mat to_numeric() const;

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactScalar& c, const ExactMatrix& a);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<ExactScalar> data_;
};

/// Exact counterparts of the numeric constructions.
ExactMatrix exact_pauli(int k);
/// (1/2) H O H with H = [[1, 1], [1, -1]]: O written in the Hadamard basis.
ExactMatrix hadamard_rotate(const ExactMatrix& o2);
ExactMatrix exact_sep_I_preserver(const ExactMatrix& o2);
/// S (h (x) 1 + 1 (x) h) S on Sym3/Sym10 for a 2x2 or 4x4 h.
ExactMatrix exact_one_body(const ExactMatrix& h);
/// S (O (x) O) S on Sym3/Sym10 for a 2x2 or 4x4 O.
ExactMatrix exact_tensor_square(const ExactMatrix& o);
/// Projector onto the Sym10 sector with index `sector` (0 LL, 1 LR, 2 RR).
ExactMatrix exact_sector_projector(int sector);

}  // namespace entloc
