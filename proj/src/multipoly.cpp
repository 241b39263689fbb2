#include "entloc/multipoly.hpp"

#include <numeric>

namespace entloc {

MultiPoly::MultiPoly(std::vector<std::string> variables, int max_degree)
    : vars_(std::move(variables)), max_degree_(max_degree) {
    if (max_degree_ < 0 || max_degree_ > 255) throw InputError("degree cap must lie in [0, 255]");
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const ExactScalar& c, int max_degree) {
    MultiPoly p(std::move(variables), max_degree);
    p.add_term(Exponents(2 * p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, int k, bool conjugate, int max_degree) {
    MultiPoly p(std::move(variables), max_degree);
    if (k < 0 || k >= static_cast<int>(p.vars_.size())) throw InputError("variable index out of range");
    Exponents e(2 * p.vars_.size(), 0);
    e[2 * k + (conjugate ? 1 : 0)] = 1;
    p.add_term(e, ExactScalar(1));
    return p;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

ExactScalar MultiPoly::coefficient(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? ExactScalar{} : it->second;
}

void MultiPoly::add_term(const Exponents& e, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

void MultiPoly::require_same_variables(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw InputError("polynomials over different variable lists");
}

MultiPoly MultiPoly::conjugate() const {
    MultiPoly out(vars_, max_degree_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        for (std::size_t k = 0; k + 1 < f.size(); k += 2) std::swap(f[k], f[k + 1]);
        out.add_term(f, c.conj());
    }
    return out;
}

cplx MultiPoly::evaluate(const std::vector<cplx>& z) const {
    if (z.size() != vars_.size()) throw DimensionError("wrong number of variable values");
    cplx acc = 0.0;
    for (const auto& [e, c] : terms_) {
        cplx m = c.to_complex();
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            for (int p = 0; p < e[2 * k]; ++p) m *= z[k];
            for (int p = 0; p < e[2 * k + 1]; ++p) m *= std::conj(z[k]);
        }
        acc += m;
    }
    return acc;
}

ExactScalar MultiPoly::evaluate_exact(const std::vector<GaussianRational>& z) const {
    if (z.size() != vars_.size()) throw DimensionError("wrong number of variable values");
    ExactScalar acc;
    for (const auto& [e, c] : terms_) {
        GaussianRational m{1};
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            for (int p = 0; p < e[2 * k]; ++p) m = m * z[k];
            const GaussianRational zc = z[k].conj();
            for (int p = 0; p < e[2 * k + 1]; ++p) m = m * zc;
        }
        acc = acc + c * ExactScalar(m);
    }
    return acc;
}

std::string MultiPoly::monomial_string(const Exponents& e) const {
    std::string out;
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        for (int conj = 0; conj < 2; ++conj) {
            const int p = e[2 * k + conj];
            if (p == 0) continue;
            if (!out.empty()) out += "*";
            out += conj ? "conj(" + vars_[k] + ")" : vars_[k];
            if (p > 1) out += "^" + std::to_string(p);
        }
    }
    return out.empty() ? "1" : out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*" + monomial_string(e);
    }
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_variables(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_variables(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_variables(b);
    MultiPoly out(a.vars_, std::min(a.max_degree_, b.max_degree_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exponents e(ea.size());
            int degree = 0;
            for (std::size_t k = 0; k < e.size(); ++k) {
                e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
                degree += e[k];
            }
            if (degree > out.max_degree_) {
                throw ConsistencyError("polynomial degree " + std::to_string(degree) + " exceeds cap " +
                                       std::to_string(out.max_degree_));
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly operator*(const ExactScalar& c, const MultiPoly& a) {
    MultiPoly out(a.vars_, a.max_degree_);
    for (const auto& [e, x] : a.terms_) out.add_term(e, c * x);
    return out;
}

}  // namespace entloc
