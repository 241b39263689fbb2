#include <doctest.h>

#include "entloc/hilbert.hpp"
#include "entloc/invariance.hpp"
#include "oracles.hpp"

using namespace entloc;

namespace {

const double r2 = std::sqrt(2.0);

Vec vec3(cplx a, cplx b, cplx c) {
    Vec v(3);
    v << a, b, c;
    return v;
}

}  // namespace

TEST_CASE("symmetrize_product on the qubit pair space") {
    Vec e0 = Vec::Zero(2), e1 = Vec::Zero(2);
    e0(0) = 1.0;
    e1(1) = 1.0;
    CHECK((symmetrize_product(e0, e0).amplitudes() - vec3(1, 0, 0)).norm() < 1e-15);
    const State s = symmetrize_product(e0, e1);
    CHECK(s.basis() == Basis::Sym3);
    CHECK((s.amplitudes() - vec3(0, 0, 1.0 / r2)).norm() < 1e-15);
}

TEST_CASE("symmetrize_product matches the symmetrizer oracle in 16 dimensions") {
    Rng rng = make_rng(7, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec phi = complex_normal_vector(rng, 4);
        const Vec zeta = complex_normal_vector(rng, 4);
        const Vec expected = oracle::symmetrizer(4) * oracle::kron(phi, zeta);
        const State s = symmetrize_product(phi, zeta);
        CHECK((oracle::to_product(s.amplitudes()) - expected).norm() < 1e-13);
        // argument swap symmetry
        CHECK((symmetrize_product(zeta, phi).amplitudes() - s.amplitudes()).norm() < 1e-14);
    }
    const State lr = symmetrize_product(level_vector(Level4::L0), level_vector(Level4::R1));
    Vec expected = Vec::Zero(10);
    expected(sym_index(4, 0, 3)) = 1.0 / r2;
    CHECK((lr.amplitudes() - expected).norm() < 1e-15);
}

TEST_CASE("symmetrize_product rejects mismatched dimensions") {
    CHECK_THROWS_AS(symmetrize_product(Vec::Zero(2), Vec::Zero(4)), DimensionError);
}

TEST_CASE("embed_tensor_square is the Kronecker square") {
    CHECK(embed_tensor_square(Mat::Identity(2, 2)).matrix().isApprox(Mat::Identity(4, 4)));
    Mat anti = Mat::Zero(4, 4);
    for (int i = 0; i < 4; ++i) anti(i, 3 - i) = 1.0;
    CHECK(embed_tensor_square(pauli(1)).matrix().isApprox(anti));
    Mat d = Mat::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    const Mat expected = Vec((Eigen::Vector4cd() << 1, 2, 2, 4).finished()).asDiagonal();
    CHECK(embed_tensor_square(d).matrix().isApprox(expected));
}

TEST_CASE("project_symmetric examples") {
    CHECK(project_symmetric(Operator(Basis::Product4, Mat::Identity(4, 4))).matrix().isApprox(Mat::Identity(3, 3)));
    Mat expected(3, 3);
    expected << 0, 1, 0, 1, 0, 0, 0, 0, 1;
    const Mat got = project_symmetric(embed_tensor_square(pauli(1))).matrix();
    CHECK((got - expected).norm() < 1e-15);
    CHECK((got - construct_sep_I_preserver(pauli(1)).matrix()).norm() < 1e-15);
    CHECK((project_symmetric(Operator(Basis::Product4, oracle::swap_matrix(2))).matrix() - Mat::Identity(3, 3))
              .norm() < 1e-15);
}

TEST_CASE("project_symmetric agrees with the explicit-basis oracle") {
    Rng rng = make_rng(11, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const Mat m = complex_normal_matrix(rng, 16, 16);
        const Mat got = project_symmetric(Operator(Basis::Product16, m)).matrix();
        CHECK((got - oracle::compress(m, 4)).norm() < 1e-12);
    }
}

TEST_CASE("construct_sep_I_preserver equals project_symmetric of O (x) O for random O") {
    Rng rng = make_rng(3, 0);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Mat o = complex_normal_matrix(rng, 2, 2);
        const Mat a = project_symmetric(embed_tensor_square(o)).matrix();
        worst = std::max(worst, (a - construct_sep_I_preserver(o).matrix()).cwiseAbs().maxCoeff());
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("partial trace examples") {
    const Mat rho0 = partial_trace_second_particle(State(Basis::Sym3, vec3(1, 0, 0)));
    Mat expected0 = Mat::Zero(2, 2);
    expected0(0, 0) = 1.0;
    CHECK((rho0 - expected0).norm() < 1e-15);
    CHECK((partial_trace_second_particle(State(Basis::Sym3, vec3(0, 0, 1))) - Mat::Identity(2, 2) / 2.0).norm() <
          1e-15);
    const Mat rho = partial_trace_second_particle(State(Basis::Sym3, vec3(1, 0, 1) / r2));
    Mat expected(2, 2);
    expected << 0.75, 1.0 / (2 * r2), 1.0 / (2 * r2), 0.25;
    CHECK((rho - expected).norm() < 1e-15);
    CHECK(reduced_purity(State(Basis::Sym3, vec3(1, 0, 1) / r2)) == doctest::Approx(7.0 / 8.0).epsilon(1e-14));
    CHECK_THROWS_AS(partial_trace_second_particle(State(Basis::Sym3, Vec::Zero(3))), ZeroNormError);
}

TEST_CASE("partial trace properties against the brute-force oracle") {
    Rng rng = make_rng(5, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const Vec amps = complex_normal_vector(rng, 3);
        const Mat rho = partial_trace_second_particle(State(Basis::Sym3, amps));
        CHECK((rho - oracle::partial_trace(oracle::to_product(amps), 2)).norm() < 1e-12);
        CHECK((rho - rho.adjoint()).norm() < 1e-14);
        CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
        Eigen::SelfAdjointEigenSolver<Mat> eig(rho);
        CHECK(eig.eigenvalues().minCoeff() >= -1e-10);
    }
}

TEST_CASE("pi_reduction examples and oracle") {
    const State lr = symmetrize_product(level_vector(Level4::L0), level_vector(Level4::R1));
    CHECK((pi_reduction(level_vector(Level4::L0), lr) - level_vector(Level4::R1)).norm() < 1e-15);
    const State ll = symmetrize_product(level_vector(Level4::L0), level_vector(Level4::L0));
    CHECK((pi_reduction(level_vector(Level4::L0), ll) - 2.0 * level_vector(Level4::L0)).norm() < 1e-15);
    CHECK(pi_reduction(level_vector(Level4::L1), lr).norm() < 1e-15);

    Rng rng = make_rng(9, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const Vec psi = complex_normal_vector(rng, 4);
        const Vec amps = complex_normal_vector(rng, 10);
        const Vec expected = oracle::pi_reduce(psi, oracle::to_product(amps));
        CHECK((pi_reduction(psi, State(Basis::Sym10, amps)) - expected).norm() < 1e-12);
    }
}

TEST_CASE("reduced single-particle density matrix examples") {
    const State lr = symmetrize_product(level_vector(Level4::L0), level_vector(Level4::R1));
    const ReducedDm a = reduced_single_particle_dm(lr);
    REQUIRE_FALSE(a.sector_only);
    const Vec r1 = level_vector(Level4::R1);
    CHECK((a.rho - r1 * r1.adjoint()).norm() < 1e-14);

    const State ll = symmetrize_product(level_vector(Level4::L0), level_vector(Level4::L1));
    const ReducedDm b = reduced_single_particle_dm(ll);
    REQUIRE_FALSE(b.sector_only);
    Mat expected = Mat::Zero(4, 4);
    expected(0, 0) = 0.5;
    expected(1, 1) = 0.5;
    CHECK((b.rho - expected).norm() < 1e-14);

    Vec rr = Vec::Zero(10);
    rr(sym_index(4, 2, 2)) = 1.0;
    CHECK(reduced_single_particle_dm(State(Basis::Sym10, rr)).sector_only);
}

TEST_CASE("reduced density matrix does not depend on the subspace basis") {
    Rng rng = make_rng(13, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const State psi(Basis::Sym10, complex_normal_vector(rng, 10));
        const Mat u = random_unitary(rng, 2);
        std::vector<Vec> rotated;
        for (int k = 0; k < 2; ++k) rotated.push_back(u(0, k) * level_vector(Level4::L0) + u(1, k) * level_vector(Level4::L1));
        const ReducedDm a = reduced_single_particle_dm(psi);
        const ReducedDm b = reduced_single_particle_dm(psi, rotated);
        CHECK((a.rho - b.rho).norm() < 1e-10);
        CHECK(std::abs(a.rho.trace() - 1.0) < 1e-12);
    }
}

TEST_CASE("pauli decomposition") {
    const PauliComponents s1 = pauli_decompose(pauli(1));
    CHECK(std::abs(s1.x0) < 1e-15);
    CHECK(std::abs(s1.x[0] - 1.0) < 1e-15);
    const PauliComponents id = pauli_decompose(Mat::Identity(2, 2));
    CHECK(std::abs(id.x0 - 1.0) < 1e-15);
    Mat d = Mat::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    const PauliComponents p = pauli_decompose(d);
    CHECK(std::abs(p.x0 - 1.5) < 1e-15);
    CHECK(std::abs(p.x[2] + 0.5) < 1e-15);
    CHECK(std::abs(p.x[0]) + std::abs(p.x[1]) < 1e-15);
    Rng rng = make_rng(1, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const Mat o = complex_normal_matrix(rng, 2, 2);
        CHECK((pauli_reconstruct(pauli_decompose(o)) - o).norm() < 1e-14);
    }
}

TEST_CASE("one_body matches the explicit first-quantized construction") {
    Rng rng = make_rng(17, 0);
    const Mat h = random_hermitian(rng, 4);
    const Mat id = Mat::Identity(4, 4);
    const Mat expected = oracle::compress(oracle::kron(h, id) + oracle::kron(id, h), 4);
    CHECK((one_body(h).matrix() - expected).norm() < 1e-12);
}
