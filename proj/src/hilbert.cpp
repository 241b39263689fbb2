#include "entloc/hilbert.hpp"

#include <cmath>
#include <string>

namespace entloc {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_levels(int levels) {
    if (levels != 2 && levels != 4) {
        throw DimensionError("only 2 or 4 single-particle levels are supported, got " +
                             std::to_string(levels));
    }
}

Mat build_isometry(int levels) {
    const int d = levels;
    const int n = sym_dim(levels);
    Mat v = Mat::Zero(d * d, n);
    for (int k = 0; k < n; ++k) {
        const auto [i, j] = sym_pair(levels, k);
        if (i == j) {
            v(d * i + i, k) = 1.0;
        } else {
            v(d * i + j, k) = kInvSqrt2;
            v(d * j + i, k) = kInvSqrt2;
        }
    }
    return v;
}

}  // namespace

Vec basis_vector(Eigen::Index dim, Eigen::Index index) {
    if (index < 0 || index >= dim) throw DimensionError("basis index out of range");
    Vec v = Vec::Zero(dim);
    v(index) = 1.0;
    return v;
}

Vec level_vector(Level4 level) { return basis_vector(4, static_cast<int>(level)); }

int sym_dim(int levels) {
    require_levels(levels);
    return levels * (levels + 1) / 2;
}

Basis sym_basis(int levels) {
    require_levels(levels);
    return levels == 2 ? Basis::Sym3 : Basis::Sym10;
}

Basis product_basis(int levels) {
    require_levels(levels);
    return levels == 2 ? Basis::Product4 : Basis::Product16;
}

Basis single_basis(int levels) {
    require_levels(levels);
    return levels == 2 ? Basis::Single2 : Basis::Single4;
}

int levels_of(Basis sym) {
    switch (sym) {
        case Basis::Sym3:
        case Basis::Product4:
        case Basis::Single2: return 2;
        case Basis::Sym10:
        case Basis::Product16:
        case Basis::Single4: return 4;
        default: throw DimensionError(std::string("basis ") + basis_name(sym) + " has no level count");
    }
}

int sym_index(int levels, int i, int j) {
    require_levels(levels);
    if (i < 0 || j < 0 || i >= levels || j >= levels) throw DimensionError("level out of range");
    if (i > j) std::swap(i, j);
    if (levels == 2) {
        if (i == j) return i;  // |00> -> 0, |11> -> 1
        return 2;
    }
    // lexicographic over i <= j
    int index = 0;
    for (int a = 0; a < i; ++a) index += levels - a;
    return index + (j - i);
}

std::pair<int, int> sym_pair(int levels, int index) {
    require_levels(levels);
    if (index < 0 || index >= sym_dim(levels)) throw DimensionError("symmetric index out of range");
    if (levels == 2) {
        static constexpr std::pair<int, int> kPairs[3] = {{0, 0}, {1, 1}, {0, 1}};
        return kPairs[index];
    }
    int i = 0;
    while (index >= levels - i) {
        index -= levels - i;
        ++i;
    }
    return {i, i + index};
}

const Mat& symmetric_isometry(int levels) {
    require_levels(levels);
    static const Mat v2 = build_isometry(2);
    static const Mat v4 = build_isometry(4);
    return levels == 2 ? v2 : v4;
}

State symmetrize_product(const Vec& phi, const Vec& zeta) {
    if (phi.size() != zeta.size()) throw DimensionError("symmetrize_product: dimension mismatch");
    const int levels = static_cast<int>(phi.size());
    require_levels(levels);
    Vec prod(levels * levels);
    for (int i = 0; i < levels; ++i) {
        for (int j = 0; j < levels; ++j) {
            prod(levels * i + j) = 0.5 * (phi(i) * zeta(j) + zeta(i) * phi(j));
        }
    }
    return State(sym_basis(levels), symmetric_isometry(levels).adjoint() * prod);
}

Operator embed_tensor_square(const Mat& single) {
    if (single.rows() != single.cols()) throw DimensionError("embed_tensor_square: not square");
    const Eigen::Index d = single.rows();
    Mat out(d * d, d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) out.block(i * d, j * d, d, d) = single(i, j) * single;
    }
    return Operator(product_basis(static_cast<int>(d)), std::move(out));
}

Operator project_symmetric(const Operator& product_op) {
    const int levels = levels_of(product_op.basis());
    if (product_op.basis() != product_basis(levels)) {
        throw DimensionError("project_symmetric expects a product-basis operator");
    }
    const Mat& v = symmetric_isometry(levels);
    return Operator(sym_basis(levels), v.adjoint() * product_op.matrix() * v);
}

Vec to_product(const State& sym_state) {
    const int levels = levels_of(sym_state.basis());
    if (sym_state.basis() != sym_basis(levels)) throw DimensionError("to_product expects a symmetric state");
    return symmetric_isometry(levels) * sym_state.amplitudes();
}

Mat partial_trace_second_particle(const State& sym3) {
    if (sym3.basis() != Basis::Sym3) throw DimensionError("partial trace expects a Sym3 state");
    sym3.require_nonzero();
    const Vec prod = to_product(sym3);
    Mat coeffs(2, 2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) coeffs(i, j) = prod(2 * i + j);
    }
    return coeffs * coeffs.adjoint() / sym3.amplitudes().squaredNorm();
}

double reduced_purity(const State& sym3) {
    const Mat rho = partial_trace_second_particle(sym3);
    return (rho * rho).trace().real();
}

Vec pi_reduction(const Vec& psi, const State& sym10) {
    const int levels = levels_of(sym10.basis());
    if (psi.size() != levels || sym10.basis() != sym_basis(levels)) {
        throw DimensionError("pi_reduction: dimension mismatch");
    }
    // On symmetric vectors Pi_psi = 2 (<psi| (x) 1).
    const Vec prod = to_product(sym10);
    Vec out = Vec::Zero(levels);
    for (int i = 0; i < levels; ++i) {
        const cplx bra = std::conj(psi(i));
        if (bra == cplx{}) continue;
        for (int j = 0; j < levels; ++j) out(j) += 2.0 * bra * prod(levels * i + j);
    }
    return out;
}

std::vector<Vec> left_subspace() { return {level_vector(Level4::L0), level_vector(Level4::L1)}; }

std::vector<Vec> right_subspace() { return {level_vector(Level4::R0), level_vector(Level4::R1)}; }

ReducedDm reduced_single_particle_dm(const State& sym10, const std::vector<Vec>& subspace) {
    if (sym10.basis() != Basis::Sym10) throw DimensionError("reduced dm expects a Sym10 state");
    const State psi = sym10.normalized();
    ReducedDm out;
    Mat acc = Mat::Zero(4, 4);
    for (const Vec& k : subspace) {
        if (k.size() != 4) throw DimensionError("subspace vectors must have 4 components");
        const Vec red = pi_reduction(k, psi);
        out.weight += red.squaredNorm();
        acc += red * red.adjoint();
    }
    if (out.weight < kStateEps * kStateEps) {
        out.sector_only = true;
        return out;
    }
    out.rho = acc / out.weight;
    return out;
}

Mat pauli(int k) {
    Mat m = Mat::Zero(2, 2);
    switch (k) {
        case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
        case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 2: m(0, 1) = cplx(0, -1); m(1, 0) = cplx(0, 1); break;
        case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
        default: throw InputError("Pauli index must be 0..3");
    }
    return m;
}

PauliComponents pauli_decompose(const Mat& op2) {
    if (op2.rows() != 2 || op2.cols() != 2) throw DimensionError("pauli_decompose expects 2x2");
    PauliComponents p;
    p.x0 = (pauli(0) * op2).trace() / 2.0;
    for (int k = 1; k <= 3; ++k) p.x[k - 1] = (pauli(k) * op2).trace() / 2.0;
    return p;
}

Mat pauli_reconstruct(const PauliComponents& p) {
    Mat m = p.x0 * pauli(0);
    for (int k = 1; k <= 3; ++k) m += p.x[k - 1] * pauli(k);
    return m;
}

Operator one_body(const Mat& h) {
    if (h.rows() != h.cols()) throw DimensionError("one_body: not square");
    const int levels = static_cast<int>(h.rows());
    require_levels(levels);
    const Mat id = Mat::Identity(levels, levels);
    Mat lifted(levels * levels, levels * levels);
    for (int i = 0; i < levels; ++i) {
        for (int j = 0; j < levels; ++j) {
            lifted.block(i * levels, j * levels, levels, levels) = h(i, j) * id + (i == j ? h : Mat::Zero(levels, levels));
        }
    }
    return project_symmetric(Operator(product_basis(levels), std::move(lifted)));
}

Operator level_number(int levels, int level) {
    require_levels(levels);
    if (level < 0 || level >= levels) throw InputError("level out of range");
    Mat h = Mat::Zero(levels, levels);
    h(level, level) = 1.0;
    return one_body(h);
}

State embed_left_sector(const State& sym3) {
    if (sym3.basis() != Basis::Sym3) throw DimensionError("embed_left_sector expects a Sym3 state");
    Vec out = Vec::Zero(10);
    out(sym_index(4, 0, 0)) = sym3[0];
    out(sym_index(4, 1, 1)) = sym3[1];
    out(sym_index(4, 0, 1)) = sym3[2];
    return State(Basis::Sym10, std::move(out));
}

}  // namespace entloc
