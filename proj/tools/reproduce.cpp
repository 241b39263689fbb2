#include "reproduce.hpp"

#include <cmath>

#include "entloc/factorization.hpp"

namespace entloc::cli {

namespace {

ReproLine finish(ReproLine line) {
    line.max_abs_error = 0.0;
    for (const auto& q : line.quantities) line.max_abs_error = std::max(line.max_abs_error, std::abs(q.computed - q.expected));
    line.pass = line.max_abs_error <= line.tolerance;
    return line;
}

/// sigma1 (x) sigma1 and sigma2 (x) sigma2 on a SEP-I state.
ReproLine sep_I_line(const std::string& id, const std::string& description, cplx c0, cplx c1, double expected) {
    const Operator a = construct_sep_I_preserver(pauli(1));
    const Operator b = construct_sep_I_preserver(pauli(2));
    const State psi = sep_I_state(c0, c1).normalized();
    const ResidualParts p = residual_parts(a, b, psi);
    ReproLine line{id, description, {}};
    line.quantities = {{"<AB>", p.ab, expected},
                       {"<A><B>", p.a * p.b, 0.0},
                       {"residual", p.residual(), expected},
                       {"discriminant", sep_I_discriminant(psi), 0.0}};
    return finish(line);
}

/// Same pair on the orthogonal SEP-II member S|psi>|psi_perp>.
ReproLine sep_II_line(const std::string& id, const std::string& description, cplx c0, cplx c1) {
    const Operator a = construct_sep_I_preserver(pauli(1));
    const Operator b = construct_sep_I_preserver(pauli(2));
    const State psi = sep_II_orthogonal_state(c0, c1).normalized();
    const ResidualParts p = residual_parts(a, b, psi);
    const double n0 = std::norm(c0), n1 = std::norm(c1);
    const cplx w = std::conj(c0) * c1;
    const cplx ab = n0 * n0 + n1 * n1 - 6.0 * n0 * n1;
    const cplx ea = std::norm(c1 * c1 - c0 * c0) - 4.0 * w.real() * w.real();
    const cplx eb = std::norm(c0 * c0 + c1 * c1) - 4.0 * w.imag() * w.imag();
    ReproLine line{id, description, {}};
    line.quantities = {{"<AB>", p.ab, ab},
                       {"<A>", p.a, ea},
                       {"<B>", p.b, eb},
                       {"residual", p.residual(), ab - ea * eb},
                       {"purity", reduced_purity(psi), 0.5}};
    return finish(line);
}

/// Imbalance pair on c_LL |L0 L0> + c_LR pair(L0, R1) + c_RR |R1 R1>.
ReproLine sep_III_line(const std::string& id, const std::string& description, cplx ll, cplx lr, cplx rr) {
    const auto e = sep_III_example_expectations(ll, lr, rr);
    const double pll = std::norm(ll), plr = std::norm(lr), prr = std::norm(rr);
    ReproLine line{id, description, {}};
    line.quantities = {{"<AB>", e[0], -plr},
                       {"<A>", e[1], 2 * pll + plr},
                       {"<B>", e[2], -2 * prr - plr},
                       {"<A><B>", e[1] * e[2], (2 * pll + plr) * (-2 * prr - plr)}};
    return finish(line);
}

}  // namespace

std::vector<ReproLine> reproduce_paper() {
    const double r2 = std::sqrt(2.0), r5 = std::sqrt(5.0);
    const cplx eighth = std::polar(1.0, M_PI / 4.0);
    std::vector<ReproLine> out;
    out.push_back(sep_I_line("ex-I.1", "sigma1 (x) sigma1, sigma2 (x) sigma2 on SEP-I, c0 = 1", 1.0, 0.0, -1.0));
    out.push_back(sep_I_line("ex-I.2", "same pair, c1 = 1", 0.0, 1.0, -1.0));
    out.push_back(sep_I_line("ex-I.3", "same pair, c0 = 1/sqrt5, c1 = 2/sqrt5", 1 / r5, 2 / r5, -9.0 / 25));
    out.push_back(sep_II_line("ex-II.1", "same pair on S|psi>|psi_perp>, c0 = 1/sqrt5, c1 = 2/sqrt5", 1 / r5, 2 / r5));
    out.push_back(sep_II_line("ex-II.2", "same pair on S|psi>|psi_perp>, c0 = 1/sqrt2, c1 = e^{i pi/4}/sqrt2", 1 / r2,
                              eighth / r2));

    ReproLine l1 = sep_III_line("ex-III.1", "imbalance pair, c_LL = c_RR = 1/sqrt2, c_LR = 0", 1 / r2, 0.0, 1 / r2);
    // 0 != -4 |c_LL|^2 |c_RR|^2
    l1.quantities.push_back({"-4|c_LL|^2|c_RR|^2", l1.quantities[3].computed, -1.0});
    out.push_back(finish(l1));

    // With c_RR = 0 the condition reads 1 != 1 + |c_LL|^2 after dividing by <AB>.
    const auto e = sep_III_example_expectations(1 / r2, 1 / r2, 0.0);
    ReproLine l2{"ex-III.2", "imbalance pair, c_LL = c_LR = 1/sqrt2, c_RR = 0", {}};
    l2.quantities = {{"<AB>", e[0], -0.5}, {"<A><B>/<AB>", e[1] * e[2] / e[0], 1.5}};
    out.push_back(finish(l2));

    ReproLine l3 = sep_III_line("ex-III.3", "imbalance pair on the LR sector, c_LR = 1", 0.0, 1.0, 0.0);
    l3.quantities.push_back(
        {"residual", residual(left_imbalance(), right_imbalance(), sep_III_example_state(0.0, 1.0, 0.0)), 0.0});
    out.push_back(finish(l3));

    out.push_back(sep_III_line("ex-III.4", "imbalance pair, c = (1, i, -1)/sqrt3", 1 / std::sqrt(3.0),
                               cplx(0, 1) / std::sqrt(3.0), -1 / std::sqrt(3.0)));
    return out;
}

}  // namespace entloc::cli
