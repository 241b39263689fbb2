#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "entloc/fock.hpp"
#include "entloc/invariance.hpp"
#include "entloc/sampling.hpp"
#include "entloc/separability.hpp"
#include "entloc/types.hpp"

namespace entloc {

struct ResidualParts {
    cplx ab;  ///< <AB> (normalized)
    cplx a;   ///< <A>
    cplx b;   ///< <B>
    cplx residual() const { return ab - a * b; }
};

/// Normalized expectations on raw vectors (Fock or symmetric).
ResidualParts residual_parts(const Mat& a, const Mat& b, const Vec& psi);
ResidualParts residual_parts(const Operator& a, const Operator& b, const State& psi);

/// <AB> - <A><B> with expectations divided by <Psi|Psi>.
cplx residual(const Operator& a, const Operator& b, const State& psi);
cplx residual(const Mat& a, const Mat& b, const Vec& psi);

/// Largest |residual| over the sector components P_X Psi (each normalized);
/// sectors with weight below kStateEps are skipped. Sym10 only.
cplx sectorwise_residual(const Operator& a, const Operator& b, const State& psi);

enum class AuditVerdict { FactorizesOnSamples, ViolationFound };
const char* audit_verdict_name(AuditVerdict v);

struct AuditConfig {
    std::size_t samples = 1000;
    std::uint64_t seed = 42;
    Tolerances tol;
    unsigned threads = 0;            ///< 0 = hardware concurrency
    bool sectorwise = false;         ///< use sectorwise_residual (SSR locality)
    bool verify_membership = true;   ///< run the set's classifier on every sample
};

struct AuditReport {
    std::string pair;
    SeparableSet set = SeparableSet::I;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    Tolerances tol;
    bool sectorwise = false;
    double max_abs = 0.0;
    double mean_abs = 0.0;
    std::size_t argmax_index = 0;
    std::optional<State> argmax_state;
    cplx argmax_residual;
    AuditVerdict verdict = AuditVerdict::FactorizesOnSamples;
};

/// Residuals over `samples` draws of sample_separable(set); sample i uses the
/// generator make_rng(seed, i), so the report does not depend on threading.
AuditReport audit(const Operator& a, const Operator& b, SeparableSet set, const AuditConfig& cfg,
                  const std::string& description = "");

/// Runs `body(i)` for i in [0, n) on up to `threads` workers. Results must be
/// written to per-index slots; the caller reduces them in index order.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

struct WitnessConfig {
    std::size_t budget = 10000;
    double threshold = 1e-6;
    std::optional<Family> family;  ///< restrict to one family of the set
    Tolerances tol;
    bool sectorwise = false;
    /// Keep climbing after the first hit (up to the budget) and report the
    /// largest |residual| found rather than the first.
    bool maximize = false;
};

struct Witness {
    State state;  ///< normalized
    FamilyPoint point;
    cplx residual;
    SeparableSet set = SeparableSet::I;
    SeparabilityVerdict membership;
};

struct WitnessSearch {
    std::optional<Witness> witness;
    std::size_t evaluations = 0;
    double best_abs = 0.0;
};

/// Random restarts over the set's family parameters followed by coordinate
/// refinement of |residual|. Every visited state lies in the family; the
/// returned witness is re-checked with the set's classifier.
WitnessSearch find_violation_witness(const Operator& a, const Operator& b, SeparableSet set, const WitnessConfig& cfg,
                                     std::uint64_t seed);

/// n_{L0} - n_{L1} and n_{R0} - n_{R1} on Sym10.
Operator left_imbalance();
Operator right_imbalance();

/// c_LL |L0 L0> + c_LR pair(L0, R1) + c_RR |R1 R1>.
State sep_III_example_state(cplx c_ll, cplx c_lr, cplx c_rr);

/// (<AB>, <A>, <B>) for the imbalance pair on the example state, evaluated
/// from the 10x10 matrices.
std::array<cplx, 3> sep_III_example_expectations(cplx c_ll, cplx c_lr, cplx c_rr);

/// Zeroes the off-diagonal sector blocks: sum_X P_X A P_X.
Operator ssr_constrain(const Operator& a10);

enum class ControlKind { Mode, Ssr };
const char* control_kind_name(ControlKind k);

struct ControlReport {
    ControlKind kind = ControlKind::Mode;
    std::size_t pairs = 0;
    std::size_t states = 0;
    std::uint64_t seed = 0;
    double max_abs = 0.0;
    std::size_t argmax_pair = 0;
    std::size_t argmax_state = 0;
    cplx argmax_residual;
};

/// Locality controls. Mode: random polynomials of degree <= 2 in the ladder
/// operators of mode 0 (A) and mode 1 (B) on the two-mode Fock space with
/// cutoff 4, evaluated on occupation states of total number <= 2. SSR:
/// number-conserving L-mode and R-mode polynomials restricted to two
/// particles and block-constrained, evaluated sector-wise on SSR samples.
ControlReport positive_control(ControlKind kind, std::size_t n_pairs, std::size_t n_states, std::uint64_t seed,
                               unsigned threads = 0);

/// Random local pair for the mode set on Sym3: real polynomials f(n0), g(n1)
/// of degree <= 2.
std::pair<Operator, Operator> random_mode_pair(Rng& rng);
/// Random block-constrained L-side / R-side pair on Sym10.
std::pair<Operator, Operator> random_ssr_pair(Rng& rng);
/// Random pair suited to auditing `set`: SEP-I preservers of random O, Q
/// for I; of random unitary multiples for II; Hermitian 10x10 for III; the
/// local pairs above for mode and SSR.
std::pair<Operator, Operator> random_pair_for_set(SeparableSet set, Rng& rng);

}  // namespace entloc
