#include "entloc/symbolic.hpp"

#include <cstdlib>

#include "entloc/hilbert.hpp"

namespace entloc {

const char* cert_verdict_name(CertVerdict v) {
    return v == CertVerdict::IdenticallyZero ? "IdenticallyZero" : "NonzeroMonomial";
}

namespace {

const std::vector<std::string> kSepIVars = {"c0", "c1"};

void require_2x2(const ExactMatrix& m, const char* what) {
    if (m.rows() != 2 || m.cols() != 2) throw DimensionError(std::string(what) + " expects 2x2 matrices");
}

/// sum_ij conj(c_i) X_ij c_j
MultiPoly single_expectation(const ExactMatrix& x) {
    MultiPoly out(kSepIVars);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (x(i, j).is_zero()) continue;
            out += x(i, j) * (MultiPoly::variable(kSepIVars, i, true) * MultiPoly::variable(kSepIVars, j, false));
        }
    }
    return out;
}

/// Deterministic list of small Gaussian-integer points.
std::vector<std::vector<GaussianRational>> check_points(std::size_t nvars) {
    const std::vector<GaussianRational> values = {1, 2, GaussianRational(1, 1), GaussianRational(0, 1), 3,
                                                  GaussianRational(2, -1), -1, GaussianRational(1, 3)};
    std::vector<std::vector<GaussianRational>> out;
    for (std::size_t shift = 0; shift < 40; ++shift) {
        std::vector<GaussianRational> p(nvars);
        for (std::size_t k = 0; k < nvars; ++k) p[k] = values[(shift * (k + 1) + k * k + shift / 8) % values.size()];
        out.push_back(std::move(p));
    }
    return out;
}

Certificate make_certificate(const MultiPoly& poly, int anchor_var) {
    Certificate cert;
    cert.variables = poly.variables();
    cert.term_count = poly.terms().size();
    const auto points = check_points(poly.variables().size());
    if (poly.is_zero()) {
        cert.verdict = CertVerdict::IdenticallyZero;
        cert.check_point = points.front();
        cert.check_value = poly.evaluate_exact(cert.check_point);
        return cert;
    }
    cert.verdict = CertVerdict::NonzeroMonomial;
    // Prefer the monomial whose anchor variable is most unbalanced between
    // z and conj(z): such terms can only come from the product of
    // expectations.
    const MultiPoly::Exponents* best = nullptr;
    int best_score = -1;
    for (const auto& [e, c] : poly.terms()) {
        const int score = std::abs(static_cast<int>(e[2 * anchor_var]) - static_cast<int>(e[2 * anchor_var + 1]));
        if (score > best_score) {
            best_score = score;
            best = &e;
        }
    }
    cert.exponents = *best;
    cert.monomial = poly.monomial_string(*best);
    cert.coefficient = poly.coefficient(*best);
    for (const auto& p : points) {
        cert.check_point = p;
        cert.check_value = poly.evaluate_exact(p);
        if (!cert.check_value.is_zero()) break;
    }
    return cert;
}

bool offdiagonal_products_vanish(const ExactMatrix& o, const ExactMatrix& q) {
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (i == j) continue;
            for (int l = 0; l < 2; ++l) {
                for (int k = 0; k < 2; ++k) {
                    if (l == k) continue;
                    if (!(o(i, j) * q(l, k)).is_zero()) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

MultiPoly expand_residual_sep_I(const ExactMatrix& o, const ExactMatrix& q) {
    require_2x2(o, "expand_residual_sep_I");
    require_2x2(q, "expand_residual_sep_I");
    const MultiPoly n = single_expectation(ExactMatrix::identity(2));
    const MultiPoly e_oq = single_expectation(o * q);
    const MultiPoly e_o = single_expectation(o);
    const MultiPoly e_q = single_expectation(q);
    return n * n * e_oq * e_oq - e_o * e_o * e_q * e_q;
}

TwoBasisTest two_basis_test(const ExactMatrix& o, const ExactMatrix& q) {
    require_2x2(o, "two_basis_test");
    require_2x2(q, "two_basis_test");
    const ExactMatrix ho = hadamard_rotate(o);
    const ExactMatrix hq = hadamard_rotate(q);
    TwoBasisTest t;
    t.offdiagonal_products_vanish = offdiagonal_products_vanish(o, q) && offdiagonal_products_vanish(ho, hq);
    t.o_scalar = o.is_diagonal() && ho.is_diagonal();
    t.q_scalar = q.is_diagonal() && hq.is_diagonal();
    t.trivial = t.o_scalar || t.q_scalar;
    return t;
}

SepICertificate certify_sep_I_factorization(const ExactMatrix& o, const ExactMatrix& q) {
    SepICertificate out;
    out.certificate = make_certificate(expand_residual_sep_I(o, q), 0);
    out.structure = two_basis_test(o, q);
    const bool zero = out.certificate.verdict == CertVerdict::IdenticallyZero;
    if (zero != out.structure.trivial) {
        throw ConsistencyError("polynomial certificate disagrees with the two-basis structural test");
    }
    if (!zero && out.certificate.check_value.is_zero()) {
        throw ConsistencyError("nonzero residual polynomial vanished at every check point");
    }
    return out;
}

std::vector<std::string> sector_variables(Sector x) {
    switch (x) {
        case Sector::LL: return {"c0", "c1"};
        case Sector::LR: return {"b0", "b1", "d0", "d1"};
        case Sector::RR: return {"e0", "e1"};
    }
    return {};
}

namespace {

/// Components of the sector's separable parametrization on Sym10, as
/// polynomials over `vars` starting at variable offset `first`.
std::vector<MultiPoly> sector_state(Sector x, const std::vector<std::string>& vars, int first) {
    std::vector<MultiPoly> psi(10, MultiPoly(vars));
    auto z = [&](int k) { return MultiPoly::variable(vars, first + k, false); };
    const ExactScalar r2 = ExactScalar::sqrt2();
    switch (x) {
        case Sector::LL:
        case Sector::RR: {
            const int base = x == Sector::LL ? 0 : 2;
            psi[sym_index(4, base, base)] = z(0) * z(0);
            psi[sym_index(4, base + 1, base + 1)] = z(1) * z(1);
            psi[sym_index(4, base, base + 1)] = r2 * (z(0) * z(1));
            break;
        }
        case Sector::LR:
            for (int s = 0; s < 2; ++s) {
                for (int t = 0; t < 2; ++t) psi[sym_index(4, s, 2 + t)] = z(s) * z(2 + t);
            }
            break;
    }
    return psi;
}

MultiPoly sandwich(const std::vector<MultiPoly>& bra, const ExactMatrix& m, const std::vector<MultiPoly>& ket,
                   const std::vector<std::string>& vars) {
    MultiPoly out(vars);
    for (int i = 0; i < 10; ++i) {
        if (bra[i].is_zero()) continue;
        MultiPoly row(vars);
        for (int j = 0; j < 10; ++j) {
            if (m(i, j).is_zero() || ket[j].is_zero()) continue;
            row += m(i, j) * ket[j];
        }
        if (!row.is_zero()) out += bra[i].conjugate() * row;
    }
    return out;
}

ExactMatrix block(const ExactMatrix& a, Sector x, Sector y) {
    return exact_sector_projector(static_cast<int>(x)) * a * exact_sector_projector(static_cast<int>(y));
}

void require_10x10(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != 10 || a.cols() != 10 || b.rows() != 10 || b.cols() != 10) {
        throw DimensionError("sector certificates expect 10x10 matrices");
    }
}

}  // namespace

MultiPoly expand_sector_offdiagonal(const ExactMatrix& a, const ExactMatrix& b, Sector x, Sector y) {
    require_10x10(a, b);
    if (x == y) throw InputError("sector certificate needs two different sectors");
    std::vector<std::string> vars = sector_variables(x);
    const int offset = static_cast<int>(vars.size());
    for (auto& v : sector_variables(y)) vars.push_back(v);
    const auto psi_x = sector_state(x, vars, 0);
    const auto psi_y = sector_state(y, vars, offset);
    return sandwich(psi_x, block(a, x, y), psi_y, vars) * sandwich(psi_x, block(b, x, y), psi_y, vars);
}

SectorCertificate certify_sector_offdiagonal(const ExactMatrix& a, const ExactMatrix& b, Sector x, Sector y) {
    SectorCertificate out;
    out.certificate = make_certificate(expand_sector_offdiagonal(a, b, x, y), 0);
    out.a_block_zero = block(a, x, y).is_zero();
    out.b_block_zero = block(b, x, y).is_zero();
    const bool zero = out.certificate.verdict == CertVerdict::IdenticallyZero;
    if (zero != (out.a_block_zero || out.b_block_zero)) {
        throw ConsistencyError("sector certificate disagrees with the block structure");
    }
    return out;
}

}  // namespace entloc
