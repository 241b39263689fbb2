// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <Eigen/SVD>

#include "cli.hpp"
#include "entloc/factorization.hpp"
#include "entloc/invariance.hpp"
#include "entloc/roots.hpp"
#include "entloc/symbolic.hpp"
#include "report.hpp"
#include "reproduce.hpp"

using namespace entloc;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

template <typename... Args>
std::string fmt(const char* f, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

bool reproduce_ok(const std::string& prefix) {
    bool ok = true;
    for (const auto& line : cli::reproduce_paper()) {
        if (line.id.rfind(prefix, 0) == 0) ok = ok && line.pass;
    }
    return ok;
}

Outcome worked_examples_sep_I() {
    const Operator a = construct_sep_I_preserver(pauli(1)), b = construct_sep_I_preserver(pauli(2));
    const double e1 = std::abs(residual(a, b, sep_I_state(1, 0)) - cplx(-1.0));
    const double e2 = std::abs(residual(a, b, sep_I_state(1 / std::sqrt(5.0), 2 / std::sqrt(5.0))) - cplx(-9.0 / 25));
    bool all = true;
    for (const auto& line : cli::reproduce_paper()) all = all && line.pass;
    return {e1 <= 1e-12 && e2 <= 1e-12 && all,
            fmt("|R(c0=1)+1|=%.1e |R(1/sqrt5,2/sqrt5)+9/25|=%.1e reproduce-paper=%s", e1, e2, all ? "PASS" : "FAIL")};
}

Outcome worked_examples_sep_III() {
    Rng rng = make_rng(1001, 0);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        Vec c(3);
        for (int j = 0; j < 3; ++j) c(j) = complex_normal(rng);
        c.normalize();
        const State psi = sep_III_example_state(c(0), c(1), c(2));
        const ResidualParts p = residual_parts(left_imbalance(), right_imbalance(), psi);
        const double ll = std::norm(c(0)), lr = std::norm(c(1)), rr = std::norm(c(2));
        worst = std::max({worst, std::abs(p.ab + lr), std::abs(p.a - (2 * ll + lr)), std::abs(p.b + (2 * rr + lr))});
    }
    const bool instances = reproduce_ok("ex-III.1") && reproduce_ok("ex-III.2");
    return {worst <= 1e-12 && instances,
            fmt("20 draws max error %.1e, worked instances %s", worst, instances ? "PASS" : "FAIL")};
}

Outcome preserver_round_trip() {
    double fit_defect = 0.0, proj_defect = 0.0;
    bool all_fit = true;
    for (std::uint64_t k = 0; k < 1000; ++k) {
        Rng rng = make_rng(1002, k);
        const Mat o = complex_normal_matrix(rng, 2, 2);
        const Operator a = construct_sep_I_preserver(o);
        const SepIPreserverFit fit = fit_sep_I_preserver(a.matrix());
        all_fit = all_fit && fit.fits;
        if (fit.fits) fit_defect = std::max(fit_defect, (construct_sep_I_preserver(*fit.o).matrix() - a.matrix()).cwiseAbs().maxCoeff());
        const Operator p = project_symmetric(embed_tensor_square(o));
        proj_defect = std::max(proj_defect, (p.matrix() - a.matrix()).cwiseAbs().maxCoeff());
    }
    return {all_fit && fit_defect <= 1e-10 && proj_defect <= 1e-12,
            fmt("1000 O: reconstruct defect %.1e, project_symmetric vs construction %.1e", fit_defect, proj_defect)};
}

ExactMatrix random_exact(Rng& rng) {
    std::uniform_int_distribution<long> d(-3, 3);
    std::vector<std::vector<ExactScalar>> rows(2, std::vector<ExactScalar>(2));
    for (auto& row : rows) {
        for (auto& x : row) x = ExactScalar(GaussianRational(d(rng), d(rng)));
    }
    return ExactMatrix::from_rows(rows);
}

Outcome exact_certificates() {
    WitnessConfig wc;
    wc.budget = 10000;
    int zero_ok = 0, nonzero_ok = 0, disagree = 0;
    for (std::uint64_t k = 0; k < 200; ++k) {
        Rng rng = make_rng(1003, k);
        ExactMatrix o, q;
        if (k < 100) {
            GaussianRational c;
            std::uniform_int_distribution<long> d(-3, 3);
            do c = GaussianRational(d(rng), d(rng)); while (c.is_zero());
            o = ExactScalar(c) * ExactMatrix::identity(2);
            q = random_exact(rng);
        } else {
            do o = random_exact(rng); while (normalized_distance_from_scalar(o.to_numeric()) < 0.1);
            do q = random_exact(rng); while (normalized_distance_from_scalar(q.to_numeric()) < 0.1);
        }
        const SepICertificate cert = certify_sep_I_factorization(o, q);
        const bool zero = cert.certificate.verdict == CertVerdict::IdenticallyZero;
        if (k < 100) zero_ok += zero;
        else nonzero_ok += !zero;
        const WitnessSearch w = find_violation_witness(construct_sep_I_preserver(o.to_numeric()),
                                                       construct_sep_I_preserver(q.to_numeric()), SeparableSet::I, wc,
                                                       1003 + k);
        disagree += w.witness.has_value() == zero;
    }
    return {zero_ok == 100 && nonzero_ok == 100 && disagree == 0,
            fmt("IdenticallyZero %d/100, NonzeroMonomial %d/100, witness disagreements %d", zero_ok, nonzero_ok, disagree)};
}

Outcome numeric_witnesses() {
    WitnessConfig wc;
    wc.budget = 10000;
    std::string detail;
    bool ok = true;
    for (SeparableSet set : {SeparableSet::I, SeparableSet::II, SeparableSet::III}) {
        int found = 0;
        for (std::uint64_t k = 0; k < 100; ++k) {
            Rng rng = make_rng(1004, (static_cast<std::uint64_t>(set) << 20) + k);
            auto [a, b] = random_pair_for_set(set, rng);
            const WitnessSearch w = find_violation_witness(a, b, set, wc, 1004 + k);
            found += w.witness.has_value() && std::abs(w.witness->residual) > 1e-6;
        }
        ok = ok && found == 100;
        detail += fmt("%s %d/100 ", set_name(set), found);
    }
    return {ok, detail + "witnesses within 10^4 evaluations"};
}

double band_distance(double purity) { return std::min(std::abs(purity - 1.0), std::abs(purity - 0.5)); }

Outcome sep_II_dichotomy() {
    double worst_inside = 0.0;
    int leaving = 0;
    for (std::uint64_t k = 0; k < 400; ++k) {
        Rng rng = make_rng(1005, k);
        const bool unitary = k < 200;
        const Mat o = unitary ? Mat(complex_normal(rng) * random_unitary(rng, 2)) : complex_normal_matrix(rng, 2, 2);
        const Mat a = construct_sep_I_preserver(o).matrix();
        double best_exit = 0.0;
        for (std::uint64_t s = 0; s < 100; ++s) {
            Rng srng = make_rng(1005, (std::uint64_t{1} << 32) + 100 * k + s);
            const State psi = sample_separable(SeparableSet::II, srng).state;
            const Vec image = a * psi.amplitudes();
            if (image.norm() < 1e-8) continue;
            const double d = band_distance(reduced_purity(State(Basis::Sym3, image).normalized()));
            if (unitary) worst_inside = std::max(worst_inside, d);
            else best_exit = std::max(best_exit, d);
        }
        if (!unitary) leaving += best_exit > 1e-4;
    }
    return {worst_inside <= 1e-9 && leaving == 200,
            fmt("unitary multiples max band distance %.1e; %d/200 general operators leave both bands by > 1e-4",
                worst_inside, leaving)};
}

Outcome positive_controls() {
    const ControlReport m = positive_control(ControlKind::Mode, 100, 100, 1006);
    const ControlReport s = positive_control(ControlKind::Ssr, 100, 100, 1006);
    return {m.max_abs <= 1e-10 && s.max_abs <= 1e-10, fmt("mode max %.1e, SSR max %.1e", m.max_abs, s.max_abs)};
}

Outcome classifier_cross_validation() {
    const double tol = Tolerances{}.classify;
    int discrepancies = 0, gray = 0, identity_fail = 0, embed_fail = 0, members = 0;
    for (std::uint64_t k = 0; k < 10000; ++k) {
        Rng rng = make_rng(1007, k);
        const State s = k % 2 == 0 ? sample_separable(SeparableSet::I, rng).state
                                   : State(Basis::Sym3, complex_normal_vector(rng, 3)).normalized();
        const double d = std::abs(sep_I_discriminant(s));
        const double p = reduced_purity(s);
        identity_fail += std::abs(p - (1.0 - d * d / 2.0)) > tol;
        // |D| = sqrt(2 (1 - p)); between tol and sqrt(2 tol) the two thresholds differ.
        if (d > tol && d < std::sqrt(2 * tol)) {
            ++gray;
            continue;
        }
        const bool by_disc = d <= tol;
        const bool by_purity = std::abs(1.0 - p) <= tol;
        discrepancies += by_disc != by_purity;
        members += by_disc;
        const bool sep_iii = classify_sep_III(embed_left_sector(s)).verdict == Verdict::SepIII;
        embed_fail += sep_iii != by_disc;
    }
    return {discrepancies == 0 && identity_fail == 0 && embed_fail == 0,
            fmt("10^4 states (%d SEP-I): discriminant/purity discrepancies %d, identity failures %d, gray zone %d, "
                "LL-embedding mismatches %d",
                members, discrepancies, identity_fail, gray, embed_fail)};
}

Outcome preimage_span() {
    double worst_ratio = 1.0, worst_backward = 0.0;
    int good = 0, trials = 0;
    for (std::uint64_t k = 0; trials < 100; ++k) {
        Rng rng = make_rng(1008, k);
        const Mat a = complex_normal_matrix(rng, 3, 3);
        std::vector<Vec> states;
        bool tautology = false;
        for (double c0 : {1.0, 2.0, 3.0}) {
            const PreimageRoots r = sep_I_preimage_roots(a, c0);
            if (r.tautology) {
                tautology = true;
                break;
            }
            worst_backward = std::max(worst_backward, r.solution.max_backward_error);
            for (const cplx& c1 : r.solution.roots) states.push_back(sep_I_state(c0, c1).normalized().amplitudes());
        }
        if (tautology) continue;
        ++trials;
        Mat m(3, static_cast<Eigen::Index>(states.size()));
        for (std::size_t j = 0; j < states.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = states[j];
        const Eigen::JacobiSVD<Mat> svd(m);
        const auto& sv = svd.singularValues();
        const double ratio = sv(2) / sv(0);
        worst_ratio = std::min(worst_ratio, ratio);
        good += ratio > 1e-6;
    }
    return {good == 100 && worst_backward <= 1e-10,
            fmt("%d/100 matrices span 3 dimensions (min sigma ratio %.1e), max solver backward error %.1e", good,
                worst_ratio, worst_backward)};
}

std::string run_sections(std::vector<std::string> args) {
    std::ostringstream out, err;
    cli::run(args, out, err);
    const cli::json j = cli::json::parse(out.str());
    return j["results"].dump() + j["summary"].dump();
}

Outcome determinism() {
    const std::vector<std::vector<std::string>> commands = {
        {"classify", "--family", "sep-III", "--params", "1,2,3,4,5,6,7,8,9"},
        {"reproduce-paper"},
        {"audit", "--set", "I", "--pairs", "random:4", "--samples", "500"},
        {"audit", "--set", "SSR", "--pairs", "random:4", "--samples", "500"},
        {"witness", "--set", "III", "--pairs", "random:4", "--budget", "2000"},
        {"certify", "--pair", "pauli:1,pauli:2"},
        {"preserve-check", "--op", "entries:[1,2;3,4]", "--with", "pauli:1"},
        {"sample", "--set", "mode", "--count", "50"},
        {"control", "--kind", "mode", "--pairs", "20", "--states", "50"},
    };
    int same = 0;
    for (const auto& base : commands) {
        bool ok = true;
        std::string first;
        for (const char* threads : {"1", "4", "0", "0"}) {
            auto args = base;
            args.insert(args.end(), {"--seed", "5", "--threads", threads});
            const std::string sections = run_sections(args);
            if (first.empty()) first = sections;
            ok = ok && sections == first;
        }
        same += ok;
    }
    return {same == static_cast<int>(commands.size()),
            fmt("%d/%zu commands byte-identical over 4 runs (1, 4, all, all threads)", same, commands.size())};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;  // 0 = no runtime bound
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "SEP-I worked examples", 1.0, worked_examples_sep_I},
        {2, "SEP-III worked examples", 1.0, worked_examples_sep_III},
        {3, "SEP-I preserver round trip", 5.0, preserver_round_trip},
        {4, "exact SEP-I certificates", 30.0, exact_certificates},
        {5, "numeric witnesses for SEP-I/II/III", 60.0, numeric_witnesses},
        {6, "SEP-II invariance dichotomy", 0.0, sep_II_dichotomy},
        {7, "mode and SSR positive controls", 0.0, positive_controls},
        {8, "classifier cross-validation", 0.0, classifier_cross_validation},
        {9, "preimage span and quartic solver", 0.0, preimage_span},
        {10, "determinism", 0.0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string timing = fmt("%.2fs", secs);
        if (c.limit_seconds > 0) {
            timing += fmt(" (limit %.0fs)", c.limit_seconds);
            if (secs >= c.limit_seconds) {
                o.pass = false;
                o.detail += "; over time limit";
            }
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail << " [" << timing
                  << "]\n";
    }
    std::cout << (failed ? "FAIL" : "PASS") << " overall: " << criteria.size() - failed << "/" << criteria.size()
              << " criteria\n";
    return failed ? 1 : 0;
}
