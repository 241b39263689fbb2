#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entloc/hilbert.hpp"
#include "entloc/types.hpp"

namespace entloc {

/// S (O (x) O) S on (Phi0, Phi1, Phi2), written out from the entries
/// a_ij = <j|O|i>:
///
///   [ a00^2         a10^2         sqrt2 a00 a10     ]
///   [ a01^2         a11^2         sqrt2 a01 a11     ]
///   [ sqrt2 a00 a01 sqrt2 a10 a11 a00 a11 + a01 a10 ]
Operator construct_sep_I_preserver(const Mat& o2);

struct SepIPreserverFit {
    bool fits = false;
    std::optional<Mat> o;  ///< recovered up to a global sign
    double defect = 0.0;   ///< max entrywise |construct(O) - A|
};

/// Recovers O from a 3x3 operator, trying each nonvanishing entry of O as the
/// square-root anchor so zero entries do not lose sign information.
SepIPreserverFit fit_sep_I_preserver(const Mat& a3, const Tolerances& tol = {});

/// O^dagger O proportional to the identity (O proportional to a unitary).
bool is_sep_II_preserver(const Mat& o2, const Tolerances& tol = {});

struct CommutativityCondition {
    cplx s;                ///< x0 y0 + x.y
    std::array<cplx, 3> z; ///< x ^ y
    bool commutes = false; ///< [O (x) O, Q (x) Q] vanishes
    double commutator_norm = 0.0;
};

/// Pauli-component form of the commutation of O (x) O with Q (x) Q. When the
/// pair commutes, s or z must vanish; a violation raises ConsistencyError.
CommutativityCondition commutativity_condition(const Mat& o2, const Mat& q2);

/// Distance of O/||O|| from the scalar matrices (Frobenius).
double normalized_distance_from_scalar(const Mat& o);

enum class Sector { LL = 0, LR = 1, RR = 2 };
inline constexpr std::array<Sector, 3> kSectors = {Sector::LL, Sector::LR, Sector::RR};

const char* sector_name(Sector x);
Sector parse_sector(const std::string& text);
/// Sym10 indices spanning a sector.
std::vector<int> sector_indices(Sector x);

/// Orthogonal projector onto the sector, built in first quantization from
/// the spatial projectors: S (Pi_X1 (x) Pi_X2 + Pi_X2 (x) Pi_X1) S / (1 + delta).
Operator sector_projector(Sector x);

using SectorBlocks = std::map<std::pair<Sector, Sector>, Operator>;

/// A_XY = P_X A P_Y for all nine sector pairs.
SectorBlocks sector_blocks(const Operator& a10);

struct BlockScalar {
    bool block_scalar = false;
    std::array<cplx, 3> alpha{};       ///< Tr(A_XX) / rank(P_X)
    bool identity_proportional = false;
    double offdiagonal_norm = 0.0;     ///< largest off-diagonal block norm
    double diagonal_defect = 0.0;      ///< largest ||A_XX - alpha_X P_X||
};

BlockScalar is_block_scalar(const Operator& a10, double tol = 1e-9);

}  // namespace entloc
