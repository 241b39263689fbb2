#include "entloc/fock.hpp"

#include <cmath>
#include <numeric>

#include "entloc/hilbert.hpp"

namespace entloc {

namespace {

void enumerate(int modes, int budget, Occupation& prefix, std::vector<Occupation>& out) {
    if (static_cast<int>(prefix.size()) == modes) {
        out.push_back(prefix);
        return;
    }
    for (int n = 0; n <= budget; ++n) {
        prefix.push_back(n);
        enumerate(modes, budget - n, prefix, out);
        prefix.pop_back();
    }
}

int total(const Occupation& occ) { return std::accumulate(occ.begin(), occ.end(), 0); }

int levels_for(const FockSpace& space) {
    const int m = space.mode_count();
    if (m != 2 && m != 4) throw DimensionError("two-particle mapping needs 2 or 4 modes");
    if (space.n_max() < 2) throw InputError("Fock cutoff too small for two particles (n_max < 2)");
    return m;
}

}  // namespace

FockSpace::FockSpace(std::vector<std::string> modes, int n_max) : modes_(std::move(modes)), n_max_(n_max) {
    if (modes_.empty()) throw InputError("Fock space needs at least one mode");
    if (n_max_ < 1) throw InputError("Fock cutoff n_max must be >= 1");
    Occupation prefix;
    enumerate(mode_count(), n_max_, prefix, basis_);
    for (int i = 0; i < dim(); ++i) index_.emplace(basis_[i], i);
}

FockSpace FockSpace::two_mode(int n_max) { return FockSpace({"0", "1"}, n_max); }

FockSpace FockSpace::four_mode(int n_max) { return FockSpace({"L0", "L1", "R0", "R1"}, n_max); }

int FockSpace::index_of(const Occupation& occ) const {
    const auto it = index_.find(occ);
    return it == index_.end() ? -1 : it->second;
}

int FockSpace::mode_index(std::string_view label) const {
    for (int i = 0; i < mode_count(); ++i) {
        if (modes_[i] == label) return i;
    }
    throw InputError("unknown mode label '" + std::string(label) + "'");
}

Mat FockSpace::ladder(std::string_view mode, Ladder kind) const {
    const int m = mode_index(mode);
    Mat out = Mat::Zero(dim(), dim());
    for (int col = 0; col < dim(); ++col) {
        Occupation occ = basis_[col];
        if (kind == Ladder::Annihilate) {
            if (occ[m] == 0) continue;
            const double amp = std::sqrt(static_cast<double>(occ[m]));
            --occ[m];
            out(index_of(occ), col) = amp;
        } else {
            const double amp = std::sqrt(static_cast<double>(occ[m] + 1));
            ++occ[m];
            const int row = index_of(occ);
            if (row >= 0) out(row, col) = amp;  // dropped above the cutoff
        }
    }
    return out;
}

Mat FockSpace::number(std::string_view mode) const {
    const int m = mode_index(mode);
    Mat out = Mat::Zero(dim(), dim());
    for (int i = 0; i < dim(); ++i) out(i, i) = basis_[i][m];
    return out;
}

Mat FockSpace::total_number() const {
    Mat out = Mat::Zero(dim(), dim());
    for (int i = 0; i < dim(); ++i) out(i, i) = total(basis_[i]);
    return out;
}

Vec FockSpace::basis_state(const Occupation& occ) const {
    if (static_cast<int>(occ.size()) != mode_count()) throw DimensionError("occupation has wrong mode count");
    const int i = index_of(occ);
    if (i < 0) throw InputError("occupation exceeds the Fock cutoff");
    return basis_vector(dim(), i);
}

Mat pair_isometry(const FockSpace& space) {
    const int levels = levels_for(space);
    const int n = sym_dim(levels);
    Mat w = Mat::Zero(space.dim(), n);
    for (int k = 0; k < n; ++k) {
        const auto [i, j] = sym_pair(levels, k);
        Occupation occ(levels, 0);
        ++occ[i];
        ++occ[j];
        w(space.index_of(occ), k) = 1.0;
    }
    return w;
}

Vec map_first_to_second(const State& sym_state, const FockSpace& space) {
    const int levels = levels_for(space);
    if (sym_state.basis() != sym_basis(levels)) {
        throw DimensionError("state basis does not match the Fock mode count");
    }
    return pair_isometry(space) * sym_state.amplitudes();
}

State map_second_to_first(const Vec& fock_state, const FockSpace& space, double tol) {
    const int levels = levels_for(space);
    if (fock_state.size() != space.dim()) throw DimensionError("Fock vector has wrong dimension");
    const Mat w = pair_isometry(space);
    Vec sym = w.adjoint() * fock_state;
    const double outside = (fock_state - w * sym).norm();
    if (outside > tol * std::max(1.0, fock_state.norm())) {
        throw InputError("Fock vector has weight outside the two-particle sector");
    }
    return State(sym_basis(levels), std::move(sym));
}

Operator restrict_to_pairs(const Mat& fock_op, const FockSpace& space) {
    const int levels = levels_for(space);
    if (fock_op.rows() != space.dim() || fock_op.cols() != space.dim()) {
        throw DimensionError("Fock operator has wrong dimension");
    }
    const Mat w = pair_isometry(space);
    return Operator(sym_basis(levels), w.adjoint() * fock_op * w);
}

}  // namespace entloc
