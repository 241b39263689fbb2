#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entloc/hilbert.hpp"
#include "entloc/sampling.hpp"
#include "entloc/types.hpp"

namespace entloc {

enum class Verdict { SepI, SepIIOnly, EntangledII, SepIII, EntangledIII, ModeSep, ModeEnt, SsrSep, SsrEnt };

const char* verdict_name(Verdict v);
bool is_separable_verdict(Verdict v);

struct SeparabilityVerdict {
    Verdict verdict = Verdict::EntangledII;
    /// Canonical parameters of the separable class, empty otherwise.
    std::vector<cplx> parameters;
    /// Tested quantities, keyed by name; always populated.
    std::map<std::string, double> diagnostics;

    bool separable() const { return is_separable_verdict(verdict); }
};

/// <Phi2|Psi>^2 - 2 <Phi0|Psi><Phi1|Psi>; vanishes exactly on SEP-I.
cplx sep_I_discriminant(const State& sym3);

/// c0^2 |Phi0> + c1^2 |Phi1> + sqrt2 c0 c1 |Phi2>, unnormalized.
State sep_I_state(cplx c0, cplx c1);

/// The orthogonal-pair member of SEP-II, S|phi>|phi_perp> up to scale with
/// |phi> = c0|0> + c1|1>.
State sep_II_orthogonal_state(cplx c0, cplx c1);

/// Discriminant test on the normalized state; on success recovers (c0, c1)
/// with c0^2 = <Phi0|Psi>, c1^2 = <Phi1|Psi> (global sign free).
SeparabilityVerdict classify_sep_I(const State& sym3, const Tolerances& tol = {});

/// Purity of the partial trace, with the discriminant deciding SepI. The
/// identity purity = 1 - |D|^2/2 on normalized states is checked and a
/// mismatch beyond tolerance raises ConsistencyError.
SeparabilityVerdict classify_sep_II(const State& sym3, const Tolerances& tol = {});

/// Idempotency of the reduced single-particle density matrix relative to the
/// subspace. States with no support reachable from the subspace count as
/// separable (their whole support lies in the complementary sector).
SeparabilityVerdict classify_sep_III(const State& sym10, const Tolerances& tol = {},
                                     const std::vector<Vec>& subspace = left_subspace());

/// Single occupation-basis vector up to phase and scale. `mode_basis`, when
/// given, is a unitary whose columns are the new single-particle modes.
SeparabilityVerdict classify_mode(const State& sym, const Tolerances& tol = {},
                                  const std::optional<Mat>& mode_basis = std::nullopt);

/// Same test on raw occupation amplitudes (any particle number).
SeparabilityVerdict classify_mode_amplitudes(const Vec& occupation_amplitudes, const Tolerances& tol = {});

/// Rank of the LR coefficient block; LL and RR blocks are unconstrained.
SeparabilityVerdict classify_ssr(const State& sym10, const Tolerances& tol = {});

/// The verdict of the classifier matching `set`.
SeparabilityVerdict classify(const State& s, SeparableSet set, const Tolerances& tol = {});

/// Membership in `set` (SEP-II accepts both SepI and SepIIOnly).
bool is_member(const State& s, SeparableSet set, const Tolerances& tol = {});

/// Coefficient matrix M(s, t) = <pair(L s, R t)|Psi> of the LR sector.
Mat lr_block(const State& sym10);

}  // namespace entloc
