#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "entloc/exact.hpp"

namespace entloc {

/// Polynomial in complex variables z_k and their conjugates, treated as
/// independent indeterminates, with coefficients in Q(i, sqrt2). Exponent
/// tuples interleave (z_0, conj z_0, z_1, conj z_1, ...). Zero coefficients
/// are never stored. Any product exceeding `max_degree` throws
/// ConsistencyError.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint8_t>;
    using Terms = std::map<Exponents, ExactScalar>;

    explicit MultiPoly(std::vector<std::string> variables, int max_degree = 8);

    static MultiPoly constant(std::vector<std::string> variables, const ExactScalar& c, int max_degree = 8);
    /// z_k, or conj(z_k) when `conjugate` is set.
    static MultiPoly variable(std::vector<std::string> variables, int k, bool conjugate, int max_degree = 8);

    const std::vector<std::string>& variables() const { return vars_; }
    int max_degree() const { return max_degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    ExactScalar coefficient(const Exponents& e) const;

    /// Swaps z_k with conj(z_k) and conjugates the coefficients.
    MultiPoly conjugate() const;

    /// Physical evaluation: conj(z_k) is replaced by the conjugate of z_k.
    cplx evaluate(const std::vector<cplx>& z) const;
    ExactScalar evaluate_exact(const std::vector<GaussianRational>& z) const;

    /// "c0^2*conj(c1)"; "1" for the empty monomial.
    std::string monomial_string(const Exponents& e) const;
    /// Terms in exponent order, "coef*monomial" joined by " + ".
    std::string to_string() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const ExactScalar& c, const MultiPoly& a);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

private:
    void add_term(const Exponents& e, const ExactScalar& c);
    void require_same_variables(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    int max_degree_;
    Terms terms_;
};

}  // namespace entloc
