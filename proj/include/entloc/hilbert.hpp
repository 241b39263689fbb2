#pragma once

#include <array>
#include <utility>
#include <vector>

#include "entloc/types.hpp"

namespace entloc {

/// Single-particle labels of the four-level system: spatial L/R times internal 0/1.
enum class Level4 : int { L0 = 0, L1 = 1, R0 = 2, R1 = 3 };

Vec basis_vector(Eigen::Index dim, Eigen::Index index);
Vec level_vector(Level4 level);

/// Dimension of the symmetric two-particle space over `levels` (2 or 4) levels.
int sym_dim(int levels);
Basis sym_basis(int levels);
Basis product_basis(int levels);
Basis single_basis(int levels);
/// Number of single-particle levels behind a Sym3/Sym10 basis tag.
int levels_of(Basis sym);

/// Position of the pair {i, j} in the symmetric basis ordering.
int sym_index(int levels, int i, int j);
/// Inverse of sym_index: (i, j) with i <= j except for Sym3 where (0,0),(1,1),(0,1).
std::pair<int, int> sym_pair(int levels, int index);

/// Columns are the symmetric basis vectors written in the product basis
/// (levels^2 x sym_dim). V^dagger V = 1 and V V^dagger is the symmetrizer.
const Mat& symmetric_isometry(int levels);

/// S(|phi> (x) |zeta>) in the symmetric basis; not normalized.
State symmetrize_product(const Vec& phi, const Vec& zeta);

/// Kronecker square O (x) O on the product basis.
Operator embed_tensor_square(const Mat& single);

/// S M S written on the symmetric basis.
Operator project_symmetric(const Operator& product_op);

/// Symmetric state rewritten as a product-basis vector.
Vec to_product(const State& sym_state);

/// Tr_2(|psi><psi|) / <psi|psi> for a Sym3 state.
Mat partial_trace_second_particle(const State& sym3);

/// Purity Tr(rho^2) of the normalized one-particle partial trace.
double reduced_purity(const State& sym3);

/// Bosonic reduction Pi_psi S|phi>|zeta> = <psi|phi>|zeta> + <psi|zeta>|phi>.
Vec pi_reduction(const Vec& psi, const State& sym10);

struct ReducedDm {
    bool sector_only = false;  ///< every reduction along the subspace vanished
    Mat rho;                   ///< 4x4, empty when sector_only
    double weight = 0.0;       ///< sum_k ||Pi_k Psi||^2 for the normalized state
};

/// span{|L,0>, |L,1>}
std::vector<Vec> left_subspace();
std::vector<Vec> right_subspace();

/// Reduced single-particle density matrix relative to the subspace spanned by
/// the orthonormal list `subspace`.
ReducedDm reduced_single_particle_dm(const State& sym10,
                                     const std::vector<Vec>& subspace = left_subspace());

struct PauliComponents {
    cplx x0;
    std::array<cplx, 3> x;
};

/// sigma_0 = identity, sigma_1..3 the Pauli matrices.
Mat pauli(int k);
PauliComponents pauli_decompose(const Mat& op2);
Mat pauli_reconstruct(const PauliComponents& p);

/// Second-quantized one-body operator sum_ij h_ij a_i^dag a_j on the
/// symmetric two-particle space: S (h (x) 1 + 1 (x) h) S.
Operator one_body(const Mat& h);

/// Number operator of one single-particle level on the symmetric space.
Operator level_number(int levels, int level);

/// Sym3 state placed in the LL sector of Sym10: |Phi_0> -> |L0 L0>,
/// |Phi_1> -> |L1 L1>, |Phi_2> -> pair(L0, L1).
State embed_left_sector(const State& sym3);

}  // namespace entloc
