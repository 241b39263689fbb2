#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "entloc/types.hpp"

namespace entloc {

/// The five separable sets under comparison.
enum class SeparableSet { I, II, III, Mode, Ssr };

/// Parametrized families whose union makes up a separable set. SEP-II is the
/// union of the SEP-I family and the orthogonal-pair family.
enum class Family { SepI, SepIIOrthogonal, SepIII, Mode, Ssr };

const char* set_name(SeparableSet s);
SeparableSet parse_set(const std::string& text);
const char* family_name(Family f);
/// Accepts the family names and the set names of single-family sets.
Family parse_family(const std::string& text);

/// Sym3 for I, II and mode; Sym10 for III and SSR.
Basis set_basis(SeparableSet s);
std::vector<Family> families_of(SeparableSet s);

/// Coordinates of one member of a family.
///
/// Layouts (complex parameters):
///   SepI, SepIIOrthogonal: c0, c1
///   SepIII: u0, u1, v0, v1, a, b, r0, r1, r2 giving
///           a |L,u>^2 + b S|L,u>|R,v> + sum_k r_k |RR_k>
///   Mode:   scale, with the occupation index in `occupation`
///   Ssr:    a0, a1, a2 (LL block), b0, b1 (L factor), c0, c1 (R factor),
///           d0, d1, d2 (RR block)
struct FamilyPoint {
    Family family = Family::SepI;
    std::vector<cplx> params;
    int occupation = 0;
};

std::size_t family_param_count(Family f);
/// Number of discrete occupation choices (3 for Mode, 1 otherwise).
int family_occupation_count(Family f);

/// Unnormalized state built from the family's parametrization.
State build_family_state(const FamilyPoint& p);

/// Gaussian draw of the family coordinates.
FamilyPoint draw_family_point(Family f, Rng& rng);

struct Sample {
    State state;  ///< normalized
    FamilyPoint point;
};

/// Draws a normalized member of the set. For SEP-II each family is picked with
/// probability 1/2. Degenerate draws below kStateEps are redrawn.
Sample sample_separable(SeparableSet s, Rng& rng);
Sample sample_family(Family f, Rng& rng);

}  // namespace entloc
