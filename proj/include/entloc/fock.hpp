#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "entloc/types.hpp"

namespace entloc {

using Occupation = std::vector<int>;

enum class Ladder { Create, Annihilate };

/// Truncated bosonic Fock space: all occupation tuples with total number
/// <= n_max, in lexicographic order. Creation matrix elements leading past the
/// cutoff are dropped, so polynomials of degree k in the ladder operators act
/// exactly on states with total number <= n_max - k.
class FockSpace {
public:
    FockSpace(std::vector<std::string> modes, int n_max);

    /// Modes "0", "1".
    static FockSpace two_mode(int n_max = 4);
    /// Modes "L0", "L1", "R0", "R1".
    static FockSpace four_mode(int n_max = 4);

    int dim() const { return static_cast<int>(basis_.size()); }
    int mode_count() const { return static_cast<int>(modes_.size()); }
    int n_max() const { return n_max_; }
    const std::vector<std::string>& modes() const { return modes_; }
    const std::vector<Occupation>& basis() const { return basis_; }
    const Occupation& occupation(int index) const { return basis_.at(index); }

    /// Index of an occupation tuple, or -1 if it lies above the cutoff.
    int index_of(const Occupation& occ) const;
    /// Throws InputError for unknown labels.
    int mode_index(std::string_view label) const;

    Mat ladder(std::string_view mode, Ladder kind) const;
    Mat number(std::string_view mode) const;
    Mat total_number() const;
    Mat identity() const { return Mat::Identity(dim(), dim()); }
    Vec basis_state(const Occupation& occ) const;

private:
    std::vector<std::string> modes_;
    int n_max_;
    std::vector<Occupation> basis_;
    std::map<Occupation, int> index_;
};

/// Isometry from the symmetric two-particle basis (Sym3 for two modes, Sym10
/// for four) into the Fock space; column k is the occupation vector of the k-th
/// symmetric basis state. Throws InputError if n_max < 2.
Mat pair_isometry(const FockSpace& space);

/// First -> second quantization. Mode order is positional.
Vec map_first_to_second(const State& sym_state, const FockSpace& space);

/// Second -> first quantization; the Fock vector must lie in the two-particle
/// sector (weight elsewhere above `tol` relative raises InputError).
State map_second_to_first(const Vec& fock_state, const FockSpace& space, double tol = 1e-12);

/// W^dagger F W: a Fock-space operator compressed to the two-particle sector.
Operator restrict_to_pairs(const Mat& fock_op, const FockSpace& space);

}  // namespace entloc
