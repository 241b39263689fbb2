#include "entloc/exact.hpp"

#include <cmath>

#include "entloc/hilbert.hpp"

namespace entloc {

mpq_class GaussianRational::parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty number");
    const auto dot = text.find('.');
    mpq_class q;
    try {
        if (dot == std::string::npos) {
            q = mpq_class(text, 10);
        } else {
            if (text.find('/') != std::string::npos || text.find_first_of("eE") != std::string::npos) {
                throw InputError("bad number '" + text + "'");
            }
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            if (digits.empty() || digits == "-" || digits == "+") throw InputError("bad number '" + text + "'");
            if (digits[0] == '+') digits.erase(0, 1);
            const std::size_t decimals = text.size() - dot - 1;
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, decimals);
            q = mpq_class(mpz_class(digits, 10), den);
        }
    } catch (const std::invalid_argument&) {
        throw InputError("bad number '" + text + "'");
    }
    q.canonicalize();
    return q;
}

std::string GaussianRational::to_string() const {
    if (sgn(im) == 0) return re.get_str();
    const std::string imag = (im == 1 ? std::string() : im == -1 ? std::string("-") : im.get_str()) + "i";
    if (sgn(re) == 0) return imag;
    return re.get_str() + (sgn(im) > 0 ? "+" : "") + imag;
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    const mpq_class den = b.re * b.re + b.im * b.im;
    if (sgn(den) == 0) throw InputError("division by zero");
    const GaussianRational num = a * b.conj();
    return {num.re / den, num.im / den};
}

cplx ExactScalar::to_complex() const { return r.to_complex() + std::sqrt(2.0) * s.to_complex(); }

std::string ExactScalar::to_string() const {
    if (s.is_zero()) return r.to_string();
    std::string out;
    if (!r.is_zero()) out = "(" + r.to_string() + ")+";
    return out + "(" + s.to_string() + ")*sqrt2";
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    const ExactScalar bc{b.r, -b.s};
    const ExactScalar den = b * bc;  // rational part only
    if (den.r.is_zero()) throw InputError("division by zero");
    const ExactScalar num = a * bc;
    return {num.r / den.r, num.s / den.r};
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<ExactScalar>>& rows) {
    if (rows.empty()) return {};
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols()) throw DimensionError("ragged matrix rows");
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool ExactMatrix::is_diagonal() const {
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (i != j && !(*this)(i, j).is_zero()) return false;
        }
    }
    return true;
}

bool ExactMatrix::is_scalar() const {
    if (rows_ != cols_ || !is_diagonal()) return false;
    for (int i = 1; i < rows_; ++i) {
        if (!((*this)(i, i) == (*this)(0, 0))) return false;
    }
    return true;
}

ExactMatrix ExactMatrix::adjoint() const {
    ExactMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j).conj();
    }
    return m;
}

Mat ExactMatrix::to_numeric() const {
    Mat m(rows_, cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).to_complex();
    }
    return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("exact matrix sum: shape mismatch");
    ExactMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) + b(i, j);
    }
    return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + ExactScalar(-1) * b; }

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("exact matrix product: shape mismatch");
    ExactMatrix m(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (!b(k, j).is_zero()) m(i, j) = m(i, j) + a(i, k) * b(k, j);
            }
        }
    }
    return m;
}

ExactMatrix operator*(const ExactScalar& c, const ExactMatrix& a) {
    ExactMatrix m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m(i, j) = c * a(i, j);
    }
    return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (!(a(i, j) == b(i, j))) return false;
        }
    }
    return true;
}

ExactMatrix exact_pauli(int k) {
    const GaussianRational i = GaussianRational::i();
    switch (k) {
        case 0: return ExactMatrix::from_rows({{1, 0}, {0, 1}});
        case 1: return ExactMatrix::from_rows({{0, 1}, {1, 0}});
        case 2: return ExactMatrix::from_rows({{0, ExactScalar(-i)}, {ExactScalar(i), 0}});
        case 3: return ExactMatrix::from_rows({{1, 0}, {0, -1}});
        default: throw InputError("Pauli index must be 0..3");
    }
}

ExactMatrix hadamard_rotate(const ExactMatrix& o) {
    if (o.rows() != 2 || o.cols() != 2) throw DimensionError("hadamard_rotate expects 2x2");
    const ExactMatrix h = ExactMatrix::from_rows({{1, 1}, {1, -1}});
    return ExactScalar(GaussianRational(mpq_class(1, 2))) * (h * o * h);
}

ExactMatrix exact_sep_I_preserver(const ExactMatrix& o) {
    if (o.rows() != 2 || o.cols() != 2) throw DimensionError("exact_sep_I_preserver expects 2x2");
    const ExactScalar a00 = o(0, 0), a10 = o(0, 1), a01 = o(1, 0), a11 = o(1, 1);
    const ExactScalar r2 = ExactScalar::sqrt2();
    return ExactMatrix::from_rows({{a00 * a00, a10 * a10, r2 * a00 * a10},
                                   {a01 * a01, a11 * a11, r2 * a01 * a11},
                                   {r2 * a00 * a01, r2 * a10 * a11, a00 * a11 + a01 * a10}});
}

namespace {

/// Symmetric isometry with 1/sqrt2 = sqrt2/2 entries.
ExactMatrix exact_isometry(int levels) {
    const int n = sym_dim(levels);
    ExactMatrix v(levels * levels, n);
    const ExactScalar half_r2{GaussianRational{}, GaussianRational(mpq_class(1, 2))};
    for (int k = 0; k < n; ++k) {
        const auto [i, j] = sym_pair(levels, k);
        if (i == j) {
            v(levels * i + i, k) = 1;
        } else {
            v(levels * i + j, k) = half_r2;
            v(levels * j + i, k) = half_r2;
        }
    }
    return v;
}

}  // namespace

ExactMatrix exact_one_body(const ExactMatrix& h) {
    if (h.rows() != h.cols() || (h.rows() != 2 && h.rows() != 4)) {
        throw DimensionError("exact_one_body expects a 2x2 or 4x4 matrix");
    }
    const int d = h.rows();
    ExactMatrix lifted(d * d, d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                // (h (x) 1)_{(i k),(j k)} and (1 (x) h)_{(k i),(k j)}
                lifted(d * i + k, d * j + k) = lifted(d * i + k, d * j + k) + h(i, j);
                lifted(d * k + i, d * k + j) = lifted(d * k + i, d * k + j) + h(i, j);
            }
        }
    }
    const ExactMatrix v = exact_isometry(d);
    return v.adjoint() * lifted * v;
}

ExactMatrix exact_tensor_square(const ExactMatrix& o) {
    if (o.rows() != o.cols() || (o.rows() != 2 && o.rows() != 4)) {
        throw DimensionError("exact_tensor_square expects a 2x2 or 4x4 matrix");
    }
    const int d = o.rows();
    ExactMatrix square(d * d, d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                for (int l = 0; l < d; ++l) square(d * i + k, d * j + l) = o(i, j) * o(k, l);
            }
        }
    }
    const ExactMatrix v = exact_isometry(d);
    return v.adjoint() * square * v;
}

ExactMatrix exact_sector_projector(int sector) {
    if (sector < 0 || sector > 2) throw InputError("sector index must be 0..2");
    ExactMatrix p(10, 10);
    for (int k = 0; k < 10; ++k) {
        const auto [i, j] = sym_pair(4, k);
        const int rights = (i >= 2) + (j >= 2);
        if (rights == sector) p(k, k) = 1;
    }
    return p;
}

}  // namespace entloc
