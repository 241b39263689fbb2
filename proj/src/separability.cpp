#include "entloc/separability.hpp"

#include <cmath>

namespace entloc {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::SepI: return "SepI";
        case Verdict::SepIIOnly: return "SepIIOnly";
        case Verdict::EntangledII: return "EntangledII";
        case Verdict::SepIII: return "SepIII";
        case Verdict::EntangledIII: return "EntangledIII";
        case Verdict::ModeSep: return "ModeSep";
        case Verdict::ModeEnt: return "ModeEnt";
        case Verdict::SsrSep: return "SsrSep";
        case Verdict::SsrEnt: return "SsrEnt";
    }
    return "?";
}

bool is_separable_verdict(Verdict v) {
    switch (v) {
        case Verdict::SepI:
        case Verdict::SepIIOnly:
        case Verdict::SepIII:
        case Verdict::ModeSep:
        case Verdict::SsrSep: return true;
        default: return false;
    }
}

namespace {

void require_basis(const State& s, Basis b, const char* what) {
    if (s.basis() != b) {
        throw DimensionError(std::string(what) + " expects a " + basis_name(b) + " state, got " +
                             basis_name(s.basis()));
    }
}

}  // namespace

cplx sep_I_discriminant(const State& sym3) {
    require_basis(sym3, Basis::Sym3, "sep_I_discriminant");
    return sym3[2] * sym3[2] - 2.0 * sym3[0] * sym3[1];
}

State sep_I_state(cplx c0, cplx c1) { return build_family_state({Family::SepI, {c0, c1}, 0}); }

State sep_II_orthogonal_state(cplx c0, cplx c1) {
    return build_family_state({Family::SepIIOrthogonal, {c0, c1}, 0});
}

SeparabilityVerdict classify_sep_I(const State& sym3, const Tolerances& tol) {
    require_basis(sym3, Basis::Sym3, "classify_sep_I");
    sym3.require_nonzero();
    const double n2 = sym3.amplitudes().squaredNorm();
    const double disc = std::abs(sep_I_discriminant(sym3)) / n2;

    SeparabilityVerdict out;
    out.diagnostics["discriminant"] = disc;
    if (disc > tol.classify) {
        out.verdict = Verdict::EntangledII;
        return out;
    }
    out.verdict = Verdict::SepI;
    const cplx c0 = std::sqrt(sym3[0]);
    cplx c1 = std::sqrt(sym3[1]);
    const double r2 = std::sqrt(2.0);
    if (std::abs(-r2 * c0 * c1 - sym3[2]) < std::abs(r2 * c0 * c1 - sym3[2])) c1 = -c1;
    out.parameters = {c0, c1};
    return out;
}

SeparabilityVerdict classify_sep_II(const State& sym3, const Tolerances& tol) {
    require_basis(sym3, Basis::Sym3, "classify_sep_II");
    sym3.require_nonzero();
    const double purity = reduced_purity(sym3);
    SeparabilityVerdict out = classify_sep_I(sym3, tol);
    const double disc = out.diagnostics["discriminant"];
    const double predicted = 1.0 - disc * disc / 2.0;
    out.diagnostics["purity"] = purity;
    out.diagnostics["purity_from_discriminant"] = predicted;
    if (std::abs(purity - predicted) > tol.classify) {
        throw ConsistencyError("purity " + std::to_string(purity) + " disagrees with discriminant prediction " +
                               std::to_string(predicted));
    }
    if (out.verdict == Verdict::SepI) {
        if (std::abs(purity - 1.0) > tol.classify) {
            throw ConsistencyError("discriminant says SEP-I but purity is " + std::to_string(purity));
        }
        return out;
    }
    out.parameters.clear();
    out.verdict = std::abs(purity - 0.5) <= tol.classify ? Verdict::SepIIOnly : Verdict::EntangledII;
    return out;
}

SeparabilityVerdict classify_sep_III(const State& sym10, const Tolerances& tol, const std::vector<Vec>& subspace) {
    require_basis(sym10, Basis::Sym10, "classify_sep_III");
    sym10.require_nonzero();
    const ReducedDm red = reduced_single_particle_dm(sym10, subspace);
    SeparabilityVerdict out;
    out.diagnostics["reduction_weight"] = red.weight;
    if (red.sector_only) {
        out.verdict = Verdict::SepIII;
        out.diagnostics["idempotency_defect"] = 0.0;
        out.diagnostics["sector_only"] = 1.0;
        return out;
    }
    out.diagnostics["sector_only"] = 0.0;
    const double defect = spectral_norm(red.rho * red.rho - red.rho);
    out.diagnostics["idempotency_defect"] = defect;
    Eigen::SelfAdjointEigenSolver<Mat> eig(red.rho);
    const auto& ev = eig.eigenvalues();
    out.diagnostics["rho_largest_eigenvalue"] = ev(3);
    out.diagnostics["rho_second_eigenvalue"] = ev(2);
    if (defect <= tol.classify) {
        out.verdict = Verdict::SepIII;
        const Vec top = eig.eigenvectors().col(3);
        out.parameters.assign(top.data(), top.data() + top.size());
    } else {
        out.verdict = Verdict::EntangledIII;
    }
    return out;
}

SeparabilityVerdict classify_mode_amplitudes(const Vec& amps, const Tolerances& tol) {
    if (amps.size() == 0) throw DimensionError("empty amplitude vector");
    if (!amps.allFinite()) throw InputError("non-finite amplitude");
    const double n = amps.norm();
    if (n < kStateEps) throw ZeroNormError("state norm below threshold");
    int count = 0;
    Eigen::Index where = 0;
    double largest = 0.0;
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        const double a = std::abs(amps(i));
        if (a > tol.classify * n) ++count;
        if (a > largest) {
            largest = a;
            where = i;
        }
    }
    SeparabilityVerdict out;
    out.diagnostics["support_size"] = count;
    out.diagnostics["largest_weight"] = (largest / n) * (largest / n);
    out.diagnostics["occupation_index"] = static_cast<double>(where);
    if (count == 1) {
        out.verdict = Verdict::ModeSep;
        out.parameters = {cplx(static_cast<double>(where), 0.0), amps(where)};
    } else {
        out.verdict = Verdict::ModeEnt;
    }
    return out;
}

SeparabilityVerdict classify_mode(const State& sym, const Tolerances& tol, const std::optional<Mat>& mode_basis) {
    if (sym.basis() != Basis::Sym3 && sym.basis() != Basis::Sym10 && sym.basis() != Basis::Fock) {
        throw DimensionError(std::string("classify_mode expects a symmetric or Fock state, got ") +
                             basis_name(sym.basis()));
    }
    sym.require_nonzero();
    if (!mode_basis) return classify_mode_amplitudes(sym.amplitudes(), tol);
    if (sym.basis() == Basis::Fock) throw InputError("mode-basis change is only supported on Sym3/Sym10 states");
    const int levels = levels_of(sym.basis());
    const Mat& u = *mode_basis;
    if (u.rows() != levels || u.cols() != levels) throw DimensionError("mode basis has wrong dimension");
    if ((u.adjoint() * u - Mat::Identity(levels, levels)).norm() > 1e-10) {
        throw InputError("mode basis must be unitary");
    }
    const Operator lifted = project_symmetric(embed_tensor_square(u));
    return classify_mode_amplitudes(lifted.matrix().adjoint() * sym.amplitudes(), tol);
}

Mat lr_block(const State& sym10) {
    require_basis(sym10, Basis::Sym10, "lr_block");
    Mat m(2, 2);
    for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) m(s, t) = sym10[sym_index(4, s, 2 + t)];
    }
    return m;
}

SeparabilityVerdict classify_ssr(const State& sym10, const Tolerances& tol) {
    require_basis(sym10, Basis::Sym10, "classify_ssr");
    sym10.require_nonzero();
    const double n = sym10.norm();
    Eigen::JacobiSVD<Mat> svd(lr_block(sym10));
    const double s1 = svd.singularValues()(0) / n;
    const double s2 = svd.singularValues()(1) / n;
    SeparabilityVerdict out;
    out.diagnostics["lr_singular_1"] = s1;
    out.diagnostics["lr_singular_2"] = s2;
    const bool no_lr = s1 <= tol.classify;
    out.verdict = (no_lr || s2 <= tol.rank * s1) ? Verdict::SsrSep : Verdict::SsrEnt;
    return out;
}

SeparabilityVerdict classify(const State& s, SeparableSet set, const Tolerances& tol) {
    switch (set) {
        case SeparableSet::I: return classify_sep_I(s, tol);
        case SeparableSet::II: return classify_sep_II(s, tol);
        case SeparableSet::III: return classify_sep_III(s, tol);
        case SeparableSet::Mode: return classify_mode(s, tol);
        case SeparableSet::Ssr: return classify_ssr(s, tol);
    }
    throw InputError("unknown separable set");
}

bool is_member(const State& s, SeparableSet set, const Tolerances& tol) { return classify(s, set, tol).separable(); }

}  // namespace entloc
