#pragma once

// Operator and scalar mini-language used on the command line.
//
//   pauli:k            2x2 Pauli matrix, k in 0..3
//   diag:a,b[,...]     diagonal matrix
//   entries:[a,b;c,d]  rows separated by ';' (2, 3, 4 or 10 rows)
//   oxo:<factor>       S (O (x) O) S of a 2x2 or 4x4 factor
//   onebody:<factor>   S (h (x) 1 + 1 (x) h) S of a 2x2 or 4x4 factor
//   number:<mode>      number operator on the pair space
//   ladder:<mode>:+/-  creation/annihilation in the truncated Fock space
//   identity, id       identity on the pair space
//
// Scalars: integers, decimals, i, sqrt2, "2i", parentheses, + - * /.
// Modes are 0, 1 on Sym3 and L0, L1, R0, R1 on Sym10.
//
// A bare single-particle matrix used where a pair-space operator is needed
// is lifted as S (O (x) O) S. Fock-space values are restricted to the
// two-particle sector when they meet pair-space values or at the end.

#include <optional>
#include <string>
#include <utility>

#include "entloc/exact.hpp"
#include "entloc/types.hpp"

namespace entloc::cli {

enum class ValueKind { Scalar, Single, Pair, Fock };

struct OpValue {
    ValueKind kind = ValueKind::Scalar;
    ExactScalar scalar;               ///< Scalar kind only
    Mat numeric;                      ///< matrix kinds
    std::optional<ExactMatrix> exact; ///< when every step was exact
};

/// Parses one operator expression for the pair space `basis` (Sym3 or Sym10).
OpValue parse_value(const std::string& text, Basis basis);

/// Final pair-space operator.
Operator to_operator(const OpValue& v, Basis basis);
/// Exact pair-space matrix, if available.
std::optional<ExactMatrix> to_exact_operator(const OpValue& v, Basis basis);
/// The unlifted single-particle matrix (exact), for certificates on 2x2 pairs.
std::optional<ExactMatrix> exact_single(const OpValue& v);

Operator parse_operator(const std::string& text, Basis basis);

/// Splits "A,B" or "A;B" into two operator expressions. A top-level ';' wins;
/// otherwise the split is at the top-level comma followed by an operator
/// keyword.
std::pair<std::string, std::string> split_pair(const std::string& text);

/// Exact scalar expression ("1/2", "sqrt2/2", "1+2i").
ExactScalar parse_exact_scalar(const std::string& text);
/// Comma-separated list of scalar expressions, evaluated numerically.
std::vector<cplx> parse_scalar_list(const std::string& text);

}  // namespace entloc::cli
