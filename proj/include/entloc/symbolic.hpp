#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entloc/exact.hpp"
#include "entloc/invariance.hpp"
#include "entloc/multipoly.hpp"

namespace entloc {

/// n^2 <OQ>_phi^2 - <O>_phi^2 <Q>_phi^2 over {c0, c1}, where |phi> = c0|0> +
/// c1|1>, <X>_phi = sum_ij conj(c_i) X_ij c_j and n = <phi|phi>. On the
/// SEP-I state built from (c0, c1) this is n^4 times the factorization
/// residual of the pair S(O (x) O)S, S(Q (x) Q)S. Total degree <= 8.
MultiPoly expand_residual_sep_I(const ExactMatrix& o2, const ExactMatrix& q2);

enum class CertVerdict { IdenticallyZero, NonzeroMonomial };
const char* cert_verdict_name(CertVerdict v);

struct Certificate {
    CertVerdict verdict = CertVerdict::IdenticallyZero;
    std::vector<std::string> variables;
    std::size_t term_count = 0;
    std::optional<MultiPoly::Exponents> exponents;
    std::string monomial;                 ///< empty when identically zero
    std::optional<ExactScalar> coefficient;
    /// Exact polynomial value at `check_point`, nonzero for NonzeroMonomial.
    std::vector<GaussianRational> check_point;
    ExactScalar check_value;
};

struct TwoBasisTest {
    /// Every product <i|O|j><l|Q|k> with i != j and l != k vanishes, both in
    /// the computational and in the Hadamard basis.
    bool offdiagonal_products_vanish = false;
    /// O diagonal in both bases, or Q diagonal in both bases. A 2x2 matrix
    /// diagonal in two bases related by a Hadamard rotation commutes with
    /// sigma_3 and sigma_1, hence is a multiple of the identity.
    bool trivial = false;
    bool o_scalar = false;
    bool q_scalar = false;
};

TwoBasisTest two_basis_test(const ExactMatrix& o2, const ExactMatrix& q2);

struct SepICertificate {
    Certificate certificate;
    TwoBasisTest structure;
};

/// Exact decision of whether the factorization residual vanishes on all of
/// SEP-I. The polynomial verdict must agree with the two-basis test
/// (identically zero iff O or Q is scalar); disagreement raises
/// ConsistencyError.
SepICertificate certify_sep_I_factorization(const ExactMatrix& o2, const ExactMatrix& q2);

/// Separable sector parametrizations used by the off-diagonal certificate:
///   LL: c0^2 |L0 L0> + c1^2 |L1 L1> + sqrt2 c0 c1 pair(L0, L1)
///   LR: sum_st b_s d_t pair(L s, R t)
///   RR: e0^2 |R0 R0> + e1^2 |R1 R1> + sqrt2 e0 e1 pair(R0, R1)
std::vector<std::string> sector_variables(Sector x);

/// <Psi_X|A_XY|Psi_Y> <Psi_X|B_XY|Psi_Y> over the sector variables of X and Y,
/// the coefficient of conj(c_X)^2 c_Y^2 in the factorization condition on
/// c_X Psi_X + c_Y Psi_Y.
MultiPoly expand_sector_offdiagonal(const ExactMatrix& a10, const ExactMatrix& b10, Sector x, Sector y);

struct SectorCertificate {
    Certificate certificate;
    bool a_block_zero = false;
    bool b_block_zero = false;
};

/// IdenticallyZero iff A_XY = 0 or B_XY = 0; the polynomial verdict is
/// checked against the blocks and a mismatch raises ConsistencyError.
SectorCertificate certify_sector_offdiagonal(const ExactMatrix& a10, const ExactMatrix& b10, Sector x, Sector y);

}  // namespace entloc
