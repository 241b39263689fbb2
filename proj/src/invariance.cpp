#include "entloc/invariance.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace entloc {

namespace {

const double kSqrt2 = std::sqrt(2.0);

void require_2x2(const Mat& o, const char* what) {
    if (o.rows() != 2 || o.cols() != 2) throw DimensionError(std::string(what) + " expects a 2x2 matrix");
}

/// Entries in the a_ij convention: a(i, j) = <j|O|i>.
struct Coeffs {
    cplx a00, a01, a10, a11;
};

Mat from_coeffs(const Coeffs& c) {
    Mat o(2, 2);
    o << c.a00, c.a10, c.a01, c.a11;
    return o;
}

double max_abs_entry(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

Operator construct_sep_I_preserver(const Mat& o) {
    require_2x2(o, "construct_sep_I_preserver");
    const cplx a00 = o(0, 0), a10 = o(0, 1), a01 = o(1, 0), a11 = o(1, 1);
    Mat a(3, 3);
    a << a00 * a00, a10 * a10, kSqrt2 * a00 * a10,
         a01 * a01, a11 * a11, kSqrt2 * a01 * a11,
         kSqrt2 * a00 * a01, kSqrt2 * a10 * a11, a00 * a11 + a01 * a10;
    return Operator(Basis::Sym3, std::move(a));
}

SepIPreserverFit fit_sep_I_preserver(const Mat& a, const Tolerances& tol) {
    if (a.rows() != 3 || a.cols() != 3) throw DimensionError("fit_sep_I_preserver expects a 3x3 matrix");
    std::vector<Coeffs> candidates{Coeffs{}};
    // Each anchor fixes one entry by a principal square root and the rest
    // from the sqrt2 cross terms and the (2,2) entry.
    auto push = [&](Coeffs c) {
        const cplx vals[4] = {c.a00, c.a01, c.a10, c.a11};
        for (const cplx& v : vals) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return;
        }
        candidates.push_back(c);
    };
    const cplx A00 = a(0, 0), A01 = a(0, 1), A02 = a(0, 2), A10 = a(1, 0), A11 = a(1, 1), A12 = a(1, 2),
               A20 = a(2, 0), A21 = a(2, 1), A22 = a(2, 2);
    if (const cplx r = std::sqrt(A00); r != cplx{}) {
        Coeffs c;
        c.a00 = r;
        c.a10 = A02 / (kSqrt2 * r);
        c.a01 = A20 / (kSqrt2 * r);
        c.a11 = (A22 - c.a01 * c.a10) / r;
        push(c);
    }
    if (const cplx r = std::sqrt(A11); r != cplx{}) {
        Coeffs c;
        c.a11 = r;
        c.a01 = A12 / (kSqrt2 * r);
        c.a10 = A21 / (kSqrt2 * r);
        c.a00 = (A22 - c.a01 * c.a10) / r;
        push(c);
    }
    if (const cplx r = std::sqrt(A01); r != cplx{}) {
        Coeffs c;
        c.a10 = r;
        c.a00 = A02 / (kSqrt2 * r);
        c.a11 = A21 / (kSqrt2 * r);
        c.a01 = (A22 - c.a00 * c.a11) / r;
        push(c);
    }
    if (const cplx r = std::sqrt(A10); r != cplx{}) {
        Coeffs c;
        c.a01 = r;
        c.a00 = A20 / (kSqrt2 * r);
        c.a11 = A12 / (kSqrt2 * r);
        c.a10 = (A22 - c.a00 * c.a11) / r;
        push(c);
    }

    SepIPreserverFit best;
    best.defect = std::numeric_limits<double>::infinity();
    for (const Coeffs& c : candidates) {
        const Mat o = from_coeffs(c);
        const double d = max_abs_entry(construct_sep_I_preserver(o).matrix() - a);
        if (d < best.defect) {
            best.defect = d;
            best.o = o;
        }
    }
    best.fits = best.defect <= tol.classify * spectral_norm(a);
    if (!best.fits) best.o.reset();
    return best;
}

bool is_sep_II_preserver(const Mat& o, const Tolerances& tol) {
    require_2x2(o, "is_sep_II_preserver");
    const Mat g = o.adjoint() * o;
    const cplx half_trace = g.trace() / 2.0;
    const double n2 = o.squaredNorm();
    return (g - half_trace * Mat::Identity(2, 2)).norm() <= tol.classify * n2;
}

CommutativityCondition commutativity_condition(const Mat& o, const Mat& q) {
    require_2x2(o, "commutativity_condition");
    require_2x2(q, "commutativity_condition");
    const PauliComponents x = pauli_decompose(o);
    const PauliComponents y = pauli_decompose(q);
    CommutativityCondition out;
    out.s = x.x0 * y.x0 + x.x[0] * y.x[0] + x.x[1] * y.x[1] + x.x[2] * y.x[2];
    out.z = {x.x[1] * y.x[2] - x.x[2] * y.x[1], x.x[2] * y.x[0] - x.x[0] * y.x[2],
             x.x[0] * y.x[1] - x.x[1] * y.x[0]};
    const Mat oo = embed_tensor_square(o).matrix();
    const Mat qq = embed_tensor_square(q).matrix();
    const double scale = o.squaredNorm() * q.squaredNorm();
    out.commutator_norm = (oo * qq - qq * oo).norm();
    out.commutes = out.commutator_norm <= 1e-12 * scale;
    if (out.commutes && scale > 0.0) {
        // The commutator is quadratic in (s, z), so a 1e-12 commutator only
        // pins one of them to about 1e-6.
        const double tol = 1e-5 * std::sqrt(scale);
        const double zn = std::sqrt(std::norm(out.z[0]) + std::norm(out.z[1]) + std::norm(out.z[2]));
        if (std::abs(out.s) > tol && zn > tol) {
            throw ConsistencyError("commuting pair violates the Pauli necessary condition");
        }
    }
    return out;
}

double normalized_distance_from_scalar(const Mat& o) {
    const double n = o.norm();
    if (n == 0.0) return 0.0;
    const cplx mean = o.trace() / static_cast<double>(o.rows());
    return (o - mean * Mat::Identity(o.rows(), o.cols())).norm() / n;
}

const char* sector_name(Sector x) {
    switch (x) {
        case Sector::LL: return "LL";
        case Sector::LR: return "LR";
        case Sector::RR: return "RR";
    }
    return "?";
}

Sector parse_sector(const std::string& text) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (t == "LL") return Sector::LL;
    if (t == "LR" || t == "RL") return Sector::LR;
    if (t == "RR") return Sector::RR;
    throw InputError("unknown sector '" + text + "' (expected LL, LR, RR)");
}

std::vector<int> sector_indices(Sector x) {
    std::vector<int> out;
    for (int k = 0; k < 10; ++k) {
        const auto [i, j] = sym_pair(4, k);
        const int lefts = (i < 2) + (j < 2);
        if ((x == Sector::LL && lefts == 2) || (x == Sector::LR && lefts == 1) || (x == Sector::RR && lefts == 0)) {
            out.push_back(k);
        }
    }
    return out;
}

Operator sector_projector(Sector x) {
    Mat left = Mat::Zero(4, 4);
    left(0, 0) = 1.0;
    left(1, 1) = 1.0;
    const Mat right = Mat::Identity(4, 4) - left;
    auto kron = [](const Mat& p, const Mat& q) {
        Mat out(16, 16);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) out.block(4 * i, 4 * j, 4, 4) = p(i, j) * q;
        }
        return out;
    };
    Mat prod;
    switch (x) {
        case Sector::LL: prod = kron(left, left); break;
        case Sector::RR: prod = kron(right, right); break;
        case Sector::LR: prod = kron(left, right) + kron(right, left); break;
    }
    return project_symmetric(Operator(Basis::Product16, std::move(prod)));
}

SectorBlocks sector_blocks(const Operator& a) {
    if (a.basis() != Basis::Sym10) throw DimensionError("sector_blocks expects a Sym10 operator");
    SectorBlocks out;
    for (Sector x : kSectors) {
        const Mat px = sector_projector(x).matrix();
        for (Sector y : kSectors) {
            out.emplace(std::make_pair(x, y), Operator(Basis::Sym10, px * a.matrix() * sector_projector(y).matrix()));
        }
    }
    return out;
}

BlockScalar is_block_scalar(const Operator& a, double tol) {
    const SectorBlocks blocks = sector_blocks(a);
    const double scale = std::max(spectral_norm(a.matrix()), std::numeric_limits<double>::min());
    BlockScalar out;
    for (Sector x : kSectors) {
        for (Sector y : kSectors) {
            if (x == y) continue;
            out.offdiagonal_norm = std::max(out.offdiagonal_norm, spectral_norm(blocks.at({x, y}).matrix()));
        }
        const Mat px = sector_projector(x).matrix();
        const Mat& axx = blocks.at({x, x}).matrix();
        const cplx alpha = axx.trace() / static_cast<double>(sector_indices(x).size());
        out.alpha[static_cast<int>(x)] = alpha;
        out.diagonal_defect = std::max(out.diagonal_defect, spectral_norm(axx - alpha * px));
    }
    out.block_scalar = out.offdiagonal_norm <= tol * scale && out.diagonal_defect <= tol * scale;
    out.identity_proportional = out.block_scalar && std::abs(out.alpha[0] - out.alpha[1]) <= tol * scale &&
                                std::abs(out.alpha[1] - out.alpha[2]) <= tol * scale;
    return out;
}

}  // namespace entloc
