#include <doctest.h>

#include "entloc/factorization.hpp"
#include "oracles.hpp"

using namespace entloc;

namespace {

const double r2 = std::sqrt(2.0);

Operator oxo(const Mat& o) { return construct_sep_I_preserver(o); }

/// -(|c0|^2 - |c1|^2)^2 - 16 (Re conj(c0) c1)^2 (Im conj(c0) c1)^2, normalized.
double sigma12_residual(cplx c0, cplx c1) {
    const double n = std::norm(c0) + std::norm(c1);
    const cplx w = std::conj(c0) * c1 / n;
    const double d = (std::norm(c0) - std::norm(c1)) / n;
    return -d * d - 16.0 * w.real() * w.real() * w.imag() * w.imag();
}

}  // namespace

TEST_CASE("residual examples") {
    const Operator a = oxo(pauli(1)), b = oxo(pauli(2));
    CHECK(std::abs(residual(a, b, sep_I_state(1, 0)) - cplx(-1.0)) < 1e-12);
    const State s = sep_I_state(1 / std::sqrt(5.0), 2 / std::sqrt(5.0));
    CHECK(std::abs(residual(a, b, s) - cplx(-9.0 / 25)) < 1e-12);
    Rng rng = make_rng(61, 0);
    const Operator id = Operator::identity(Basis::Sym3);
    for (int k = 0; k < 20; ++k) {
        const Operator r(Basis::Sym3, complex_normal_matrix(rng, 3, 3));
        CHECK(std::abs(residual(r, id, State(Basis::Sym3, complex_normal_vector(rng, 3)))) < 1e-12);
    }
    CHECK_THROWS_AS(residual(a, b, State(Basis::Sym3, Vec::Zero(3))), ZeroNormError);
    CHECK_THROWS_AS(residual(a, Operator::identity(Basis::Sym10), sep_I_state(1, 0)), DimensionError);
}

TEST_CASE("residual of the sigma1/sigma2 pair matches the closed form on SEP-I") {
    Rng rng = make_rng(67, 0);
    const Operator a = oxo(pauli(1)), b = oxo(pauli(2));
    for (int k = 0; k < 200; ++k) {
        const cplx c0 = complex_normal(rng), c1 = complex_normal(rng);
        CHECK(std::abs(residual(a, b, sep_I_state(c0, c1)) - sigma12_residual(c0, c1)) < 1e-12);
    }
}

TEST_CASE("residual agrees with the product-space oracle") {
    Rng rng = make_rng(71, 0);
    for (int k = 0; k < 50; ++k) {
        const Mat o = complex_normal_matrix(rng, 2, 2), q = complex_normal_matrix(rng, 2, 2);
        const State s(Basis::Sym3, complex_normal_vector(rng, 3));
        const Vec p = oracle::to_product(s.amplitudes());
        const Mat oo = oracle::kron(o, o), qq = oracle::kron(q, q);
        const double n = p.squaredNorm();
        const cplx expected = p.dot(oo * qq * p) / n - (p.dot(oo * p) / n) * (p.dot(qq * p) / n);
        CHECK(std::abs(residual(oxo(o), oxo(q), s) - expected) < 1e-10 * (1.0 + std::abs(expected)));
    }
}

TEST_CASE("residual properties") {
    Rng rng = make_rng(73, 0);
    std::uniform_real_distribution<double> logmag(-3.0, 3.0);
    for (int k = 0; k < 200; ++k) {
        const Operator a(Basis::Sym10, complex_normal_matrix(rng, 10, 10));
        const Operator b(Basis::Sym10, complex_normal_matrix(rng, 10, 10));
        const State s(Basis::Sym10, complex_normal_vector(rng, 10));
        const cplx lambda = std::polar(std::pow(10.0, logmag(rng)), 1.3 * k);
        const cplx r = residual(a, b, s);
        CHECK(std::abs(residual(a, b, s.scaled(lambda)) - r) <= 1e-12 * std::max(1.0, std::abs(r)));

        // commuting Hermitian pair: simultaneous diagonalization
        const Mat u = random_unitary(rng, 10);
        Vec da(10), db(10);
        for (int i = 0; i < 10; ++i) {
            da(i) = complex_normal(rng).real();
            db(i) = complex_normal(rng).real();
        }
        const Operator ha(Basis::Sym10, u * da.asDiagonal() * u.adjoint());
        const Operator hb(Basis::Sym10, u * db.asDiagonal() * u.adjoint());
        CHECK(std::abs(residual(ha, hb, s).imag()) < 1e-12);

        // A proportional to the identity factorizes against anything
        const Operator scalar(Basis::Sym10, complex_normal(rng) * Mat::Identity(10, 10));
        CHECK(std::abs(residual(scalar, b, s)) < 1e-12 * b.matrix().norm());
    }
}

TEST_CASE("audit examples") {
    AuditConfig cfg;
    cfg.samples = 200;
    const SeparableSet sets[] = {SeparableSet::I, SeparableSet::II, SeparableSet::III, SeparableSet::Mode,
                                 SeparableSet::Ssr};
    for (SeparableSet set : sets) {
        const Operator id = Operator::identity(set_basis(set));
        CHECK(audit(id, id, set, cfg).max_abs <= 1e-15);
    }

    Rng rng = make_rng(79, 0);
    for (int k = 0; k < 10; ++k) {
        const auto [a, b] = random_mode_pair(rng);
        const AuditReport r = audit(a, b, SeparableSet::Mode, cfg);
        CHECK(r.max_abs <= 1e-12);
        CHECK(r.verdict == AuditVerdict::FactorizesOnSamples);
    }

    cfg.samples = 1000;
    const AuditReport v = audit(oxo(pauli(1)), oxo(pauli(2)), SeparableSet::I, cfg, "sigma1 sigma2");
    CHECK(v.verdict == AuditVerdict::ViolationFound);
    REQUIRE(v.argmax_state);
    CHECK(std::abs(residual(oxo(pauli(1)), oxo(pauli(2)), *v.argmax_state) - v.argmax_residual) <= 1e-12);
    CHECK(v.pair == "sigma1 sigma2");
}

TEST_CASE("audit is deterministic across thread counts") {
    Rng rng = make_rng(83, 0);
    const auto [a, b] = random_pair_for_set(SeparableSet::III, rng);
    AuditConfig cfg;
    cfg.samples = 300;
    cfg.threads = 1;
    const AuditReport one = audit(a, b, SeparableSet::III, cfg);
    cfg.threads = 4;
    const AuditReport four = audit(a, b, SeparableSet::III, cfg);
    CHECK(one.max_abs == four.max_abs);
    CHECK(one.mean_abs == four.mean_abs);
    CHECK(one.argmax_index == four.argmax_index);
    CHECK(one.argmax_residual == four.argmax_residual);
}

TEST_CASE("witness examples") {
    WitnessConfig cfg;
    cfg.maximize = true;
    const WitnessSearch a = find_violation_witness(oxo(pauli(3)), oxo(pauli(3)), SeparableSet::I, cfg, 42);
    REQUIRE(a.witness);
    CHECK(std::abs(a.witness->residual - cplx(1.0)) < 1e-6);
    CHECK(a.witness->membership.verdict == Verdict::SepI);
    // the maximum sits at |c0| = |c1|
    const auto& w = a.witness->point.params;
    CHECK(std::abs(std::abs(w[0]) - std::abs(w[1])) < 1e-3 * std::abs(w[0]));

    WitnessConfig orth;
    orth.family = Family::SepIIOrthogonal;
    orth.maximize = true;
    const WitnessSearch b = find_violation_witness(oxo(pauli(1)), oxo(pauli(2)), SeparableSet::II, orth, 42);
    REQUIRE(b.witness);
    CHECK(std::abs(b.witness->residual - cplx(-1.0)) < 1e-6);
    CHECK(b.witness->membership.verdict == Verdict::SepIIOnly);

    // the worked SEP-III example state itself
    const State s = sep_III_example_state(1 / r2, 0, 1 / r2);
    CHECK(classify_sep_III(s).verdict == Verdict::SepIII);
    CHECK(std::abs(residual(left_imbalance(), right_imbalance(), s) - cplx(1.0)) < 1e-12);
    const WitnessSearch c = find_violation_witness(left_imbalance(), right_imbalance(), SeparableSet::III, {}, 42);
    REQUIRE(c.witness);
    CHECK(std::abs(c.witness->residual) > 1e-6);
}

TEST_CASE("witness search returns the first hit and respects the budget") {
    WitnessConfig cfg;
    const WitnessSearch a = find_violation_witness(oxo(pauli(1)), oxo(pauli(2)), SeparableSet::I, cfg, 7);
    REQUIRE(a.witness);
    CHECK(std::abs(a.witness->residual) > cfg.threshold);
    CHECK(is_member(a.witness->state, SeparableSet::I));
    CHECK(std::abs(residual(oxo(pauli(1)), oxo(pauli(2)), a.witness->state) - a.witness->residual) < 1e-12);

    const Operator id = Operator::identity(Basis::Sym3);
    cfg.budget = 500;
    const WitnessSearch none = find_violation_witness(id, oxo(pauli(1)), SeparableSet::I, cfg, 7);
    CHECK_FALSE(none.witness);
    CHECK(none.evaluations == 500);
    CHECK(none.best_abs < 1e-12);

    cfg.budget = 0;
    CHECK_THROWS_AS(find_violation_witness(id, id, SeparableSet::I, cfg, 7), InputError);
    WitnessConfig wrong;
    wrong.family = Family::SepIII;
    CHECK_THROWS_AS(find_violation_witness(id, id, SeparableSet::I, wrong, 7), InputError);
}

TEST_CASE("witness search is deterministic") {
    WitnessConfig cfg;
    const Operator a = oxo(pauli(1) + 0.3 * pauli(3)), b = oxo(pauli(2));
    const WitnessSearch x = find_violation_witness(a, b, SeparableSet::I, cfg, 11);
    const WitnessSearch y = find_violation_witness(a, b, SeparableSet::I, cfg, 11);
    REQUIRE(x.witness);
    REQUIRE(y.witness);
    CHECK(x.evaluations == y.evaluations);
    CHECK(x.witness->residual == y.witness->residual);
}

TEST_CASE("SEP-III example expectations") {
    const auto a = sep_III_example_expectations(1 / r2, 0, 1 / r2);
    CHECK(std::abs(a[0]) < 1e-12);
    CHECK(std::abs(a[1] - 1.0) < 1e-12);
    CHECK(std::abs(a[2] + 1.0) < 1e-12);
    const auto c = sep_III_example_expectations(0, 1, 0);
    CHECK(std::abs(c[0] + 1.0) < 1e-12);
    CHECK(std::abs(c[1] - 1.0) < 1e-12);
    CHECK(std::abs(c[2] + 1.0) < 1e-12);
    CHECK(std::abs(c[0] - c[1] * c[2]) < 1e-12);

    Rng rng = make_rng(89, 0);
    for (int k = 0; k < 20; ++k) {
        Vec v = complex_normal_vector(rng, 3);
        v.normalize();
        const auto e = sep_III_example_expectations(v(0), v(1), v(2));
        const double ll = std::norm(v(0)), lr = std::norm(v(1)), rr = std::norm(v(2));
        CHECK(std::abs(e[0] + lr) < 1e-12);
        CHECK(std::abs(e[1] - (2 * ll + lr)) < 1e-12);
        CHECK(std::abs(e[2] + (2 * rr + lr)) < 1e-12);
        // with no RR component the ratio <A><B>/<AB> is 1 + |c_LL|^2
        Vec w = v;
        w(2) = 0.0;
        w.normalize();
        const auto f = sep_III_example_expectations(w(0), w(1), 0);
        CHECK(std::abs(f[1] * f[2] / f[0] - (1.0 + std::norm(w(0)))) < 1e-12);
    }
}

TEST_CASE("ssr_constrain") {
    const Operator id = Operator::identity(Basis::Sym10);
    CHECK((ssr_constrain(id).matrix() - id.matrix()).norm() < 1e-14);
    Mat coh = Mat::Zero(10, 10);
    coh(sym_index(4, 0, 0), sym_index(4, 3, 3)) = 1.0;
    CHECK(ssr_constrain(Operator(Basis::Sym10, coh)).matrix().norm() < 1e-15);
    CHECK((ssr_constrain(left_imbalance()).matrix() - left_imbalance().matrix()).norm() < 1e-14);
    Rng rng = make_rng(97, 0);
    const Operator r(Basis::Sym10, complex_normal_matrix(rng, 10, 10));
    const Operator once = ssr_constrain(r);
    CHECK((ssr_constrain(once).matrix() - once.matrix()).norm() < 1e-14);
}

TEST_CASE("positive control examples") {
    const FockSpace space = FockSpace::two_mode(4);
    const Mat n0 = space.number("0"), n1 = space.number("1");
    const ResidualParts p11 = residual_parts(n0, n1, space.basis_state({1, 1}));
    CHECK(std::abs(p11.ab - 1.0) < 1e-15);
    CHECK(std::abs(p11.residual()) < 1e-15);
    const ResidualParts p20 = residual_parts(n0, n1, space.basis_state({2, 0}));
    CHECK(std::abs(p20.ab) < 1e-15);
    CHECK(std::abs(p20.a - 2.0) < 1e-15);
    CHECK(std::abs(p20.residual()) < 1e-15);

    Vec pv = Vec::Zero(10);
    pv(sym_index(4, 0, 1)) = 1 / r2;
    pv(sym_index(4, 2, 3)) = 1 / r2;
    const State pairs(Basis::Sym10, pv);
    CHECK(std::abs(residual(left_imbalance(), right_imbalance(), pairs)) < 1e-15);
    const State ends = sep_III_example_state(1 / r2, 0, 1 / r2);
    CHECK(std::abs(sectorwise_residual(left_imbalance(), right_imbalance(), ends)) < 1e-15);
}

TEST_CASE("positive controls stay below tolerance") {
    const ControlReport mode = positive_control(ControlKind::Mode, 20, 50, 42);
    CHECK(mode.max_abs <= 1e-10);
    const ControlReport ssr = positive_control(ControlKind::Ssr, 20, 50, 42);
    CHECK(ssr.max_abs <= 1e-10);
}

TEST_CASE("random pairs for the impossibility sets have witnesses") {
    const SeparableSet sets[] = {SeparableSet::I, SeparableSet::II, SeparableSet::III};
    for (SeparableSet set : sets) {
        for (std::uint64_t k = 0; k < 10; ++k) {
            Rng rng = make_rng(101, k);
            const auto [a, b] = random_pair_for_set(set, rng);
            const WitnessSearch w = find_violation_witness(a, b, set, {}, k);
            REQUIRE(w.witness);
            CHECK(is_member(w.witness->state, set));
        }
    }
}
