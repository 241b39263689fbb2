#include "opspec.hpp"

#include <cctype>
#include <set>

#include "entloc/fock.hpp"
#include "entloc/hilbert.hpp"

namespace entloc::cli {

namespace {

const std::set<std::string> kKeywords = {"pauli", "diag", "entries", "oxo", "onebody", "number", "ladder",
                                         "identity", "id"};

int pair_levels(Basis basis) {
    if (basis == Basis::Sym3) return 2;
    if (basis == Basis::Sym10) return 4;
    throw InputError("operators act on sym3 or sym10");
}

FockSpace fock_for(Basis basis) { return pair_levels(basis) == 2 ? FockSpace::two_mode(4) : FockSpace::four_mode(4); }

int level_of_mode(const std::string& mode, Basis basis) {
    static const char* four[] = {"L0", "L1", "R0", "R1"};
    if (pair_levels(basis) == 2) {
        if (mode == "0") return 0;
        if (mode == "1") return 1;
        throw InputError("unknown mode '" + mode + "' (sym3 modes are 0, 1)");
    }
    for (int k = 0; k < 4; ++k) {
        if (mode == four[k]) return k;
    }
    throw InputError("unknown mode '" + mode + "' (sym10 modes are L0, L1, R0, R1)");
}

ExactMatrix exact_diagonal(const std::vector<ExactScalar>& d) {
    ExactMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t k = 0; k < d.size(); ++k) m(static_cast<int>(k), static_cast<int>(k)) = d[k];
    return m;
}

OpValue matrix_value(ValueKind kind, ExactMatrix m) {
    OpValue v;
    v.kind = kind;
    v.numeric = m.to_numeric();
    v.exact = std::move(m);
    return v;
}

OpValue numeric_value(ValueKind kind, Mat m) {
    OpValue v;
    v.kind = kind;
    v.numeric = std::move(m);
    return v;
}

OpValue scalar_value(ExactScalar s) {
    OpValue v;
    v.scalar = std::move(s);
    return v;
}

OpValue lift_single(const OpValue& v, Basis basis, bool one_body_lift) {
    const int levels = pair_levels(basis);
    if (v.numeric.rows() != levels) {
        throw DimensionError("single-particle matrix is " + std::to_string(v.numeric.rows()) + "x" +
                             std::to_string(v.numeric.rows()) + " but " + basis_name(basis) + " needs " +
                             std::to_string(levels) + "x" + std::to_string(levels));
    }
    OpValue out;
    out.kind = ValueKind::Pair;
    if (one_body_lift) {
        out.numeric = one_body(v.numeric).matrix();
        if (v.exact) out.exact = exact_one_body(*v.exact);
    } else {
        out.numeric = project_symmetric(embed_tensor_square(v.numeric)).matrix();
        if (v.exact) out.exact = exact_tensor_square(*v.exact);
    }
    return out;
}

OpValue restrict_fock(const OpValue& v, Basis basis) {
    return numeric_value(ValueKind::Pair, restrict_to_pairs(v.numeric, fock_for(basis)).matrix());
}

/// Brings a matrix value into pair space.
OpValue to_pair(const OpValue& v, Basis basis) {
    switch (v.kind) {
        case ValueKind::Pair: return v;
        case ValueKind::Single: return lift_single(v, basis, false);
        case ValueKind::Fock: return restrict_fock(v, basis);
        case ValueKind::Scalar: {
            const int n = basis_dim(basis);
            return matrix_value(ValueKind::Pair, v.scalar * ExactMatrix::identity(n));
        }
    }
    throw InputError("bad operator value");
}

/// Scalar promoted to a multiple of the identity in the partner's space.
OpValue scalar_as(const OpValue& s, const OpValue& like) {
    const int n = static_cast<int>(like.numeric.rows());
    OpValue out = matrix_value(like.kind, s.scalar * ExactMatrix::identity(n));
    if (!like.exact) out.exact.reset();
    return out;
}

/// Brings two matrix values into a common space.
void unify(OpValue& a, OpValue& b, Basis basis) {
    if (a.kind == ValueKind::Scalar) a = scalar_as(a, b);
    if (b.kind == ValueKind::Scalar) b = scalar_as(b, a);
    if (a.kind != b.kind) {
        a = to_pair(a, basis);
        b = to_pair(b, basis);
    }
    if (a.numeric.rows() != b.numeric.rows()) {
        throw DimensionError("operand sizes differ: " + std::to_string(a.numeric.rows()) + " vs " +
                             std::to_string(b.numeric.rows()));
    }
}

enum class BinOp { Add, Sub, Mul };

OpValue combine(OpValue a, OpValue b, BinOp op, Basis basis) {
    if (a.kind == ValueKind::Scalar && b.kind == ValueKind::Scalar) {
        switch (op) {
            case BinOp::Add: return scalar_value(a.scalar + b.scalar);
            case BinOp::Sub: return scalar_value(a.scalar - b.scalar);
            case BinOp::Mul: return scalar_value(a.scalar * b.scalar);
        }
    }
    if (op == BinOp::Mul && (a.kind == ValueKind::Scalar || b.kind == ValueKind::Scalar)) {
        const OpValue& s = a.kind == ValueKind::Scalar ? a : b;
        OpValue m = a.kind == ValueKind::Scalar ? b : a;
        m.numeric *= s.scalar.to_complex();
        if (m.exact) m.exact = s.scalar * *m.exact;
        return m;
    }
    unify(a, b, basis);
    OpValue out;
    out.kind = a.kind;
    switch (op) {
        case BinOp::Add: out.numeric = a.numeric + b.numeric; break;
        case BinOp::Sub: out.numeric = a.numeric - b.numeric; break;
        case BinOp::Mul: out.numeric = a.numeric * b.numeric; break;
    }
    if (a.exact && b.exact) {
        switch (op) {
            case BinOp::Add: out.exact = *a.exact + *b.exact; break;
            case BinOp::Sub: out.exact = *a.exact - *b.exact; break;
            case BinOp::Mul: out.exact = *a.exact * *b.exact; break;
        }
    }
    return out;
}

class Parser {
public:
    Parser(const std::string& text, Basis basis, bool scalars_only)
        : s_(text), basis_(basis), scalars_only_(scalars_only) {}

    OpValue parse_all() {
        OpValue v = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_, 1) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("cannot parse '" + s_ + "' at position " + std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    OpValue parse_sum() {
        OpValue v = parse_product();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                v = combine(std::move(v), parse_product(), BinOp::Add, basis_);
            } else if (peek('-')) {
                ++pos_;
                v = combine(std::move(v), parse_product(), BinOp::Sub, basis_);
            } else {
                return v;
            }
        }
    }

    OpValue parse_product() {
        OpValue v = parse_unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                v = combine(std::move(v), parse_unary(), BinOp::Mul, basis_);
            } else if (peek('/')) {
                ++pos_;
                OpValue d = parse_unary();
                if (d.kind != ValueKind::Scalar) fail("division by an operator");
                if (d.scalar.is_zero()) fail("division by zero");
                v = combine(std::move(v), scalar_value(ExactScalar(1) / d.scalar), BinOp::Mul, basis_);
            } else {
                return v;
            }
        }
    }

    OpValue parse_unary() {
        if (peek('-')) {
            ++pos_;
            return combine(scalar_value(ExactScalar(-1)), parse_unary(), BinOp::Mul, basis_);
        }
        if (peek('+')) {
            ++pos_;
            return parse_unary();
        }
        return parse_primary();
    }

    OpValue parse_number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
        const mpq_class q = GaussianRational::parse_rational(s_.substr(start, pos_ - start));
        // "2i" is shorthand for 2*i
        if (pos_ < s_.size() && s_[pos_] == 'i' &&
            (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
            ++pos_;
            return scalar_value(ExactScalar(GaussianRational(0, q)));
        }
        return scalar_value(ExactScalar(GaussianRational(q)));
    }

    OpValue parse_primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            OpValue v = parse_sum();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        const std::size_t start = pos_;
        const std::string name = identifier();
        if (name.empty()) fail("expected a number or an operator");
        if (name == "i") return scalar_value(ExactScalar(GaussianRational::i()));
        if (name == "sqrt2") return scalar_value(ExactScalar::sqrt2());
        if (scalars_only_) {
            pos_ = start;
            fail("expected a scalar");
        }
        if (name == "identity" || name == "id") {
            return matrix_value(ValueKind::Pair, ExactMatrix::identity(basis_dim(basis_)));
        }
        if (!kKeywords.count(name)) {
            pos_ = start;
            fail("unknown name '" + name + "'");
        }
        expect(':');
        if (name == "pauli") return pauli_atom();
        if (name == "diag") return diag_atom();
        if (name == "entries") return entries_atom();
        if (name == "oxo" || name == "onebody") {
            OpValue inner = parse_primary();
            if (inner.kind != ValueKind::Single) fail(name + " needs a single-particle matrix");
            return lift_single(inner, basis_, name == "onebody");
        }
        if (name == "number") {
            const std::string mode = identifier();
            const int levels = pair_levels(basis_);
            std::vector<ExactScalar> d(static_cast<std::size_t>(levels), ExactScalar(0));
            d[static_cast<std::size_t>(level_of_mode(mode, basis_))] = 1;
            return matrix_value(ValueKind::Pair, exact_one_body(exact_diagonal(d)));
        }
        // ladder:<mode>:+ / -
        const std::string mode = identifier();
        level_of_mode(mode, basis_);
        expect(':');
        skip_ws();
        if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) fail("ladder needs ':+' or ':-'");
        const Ladder kind = s_[pos_] == '+' ? Ladder::Create : Ladder::Annihilate;
        ++pos_;
        return numeric_value(ValueKind::Fock, fock_for(basis_).ladder(mode, kind));
    }

    /// Product of scalar factors; stops before '+', '-' and ','.
    ExactScalar scalar_item() {
        auto factor = [&] {
            OpValue v = parse_unary();
            if (v.kind != ValueKind::Scalar) fail("expected a scalar entry");
            return v.scalar;
        };
        ExactScalar out = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                out = out * factor();
            } else if (peek('/')) {
                ++pos_;
                const ExactScalar d = factor();
                if (d.is_zero()) fail("division by zero");
                out = out / d;
            } else {
                return out;
            }
        }
    }

    OpValue pauli_atom() {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '3') fail("pauli index must be 0..3");
        const int k = s_[pos_++] - '0';
        return matrix_value(ValueKind::Single, exact_pauli(k));
    }

    OpValue diag_atom() {
        std::vector<ExactScalar> d = {scalar_item()};
        while (peek(',')) {
            ++pos_;
            d.push_back(scalar_item());
        }
        return sized_value(exact_diagonal(d));
    }

    OpValue entries_atom() {
        expect('[');
        std::vector<std::vector<ExactScalar>> rows(1);
        for (;;) {
            OpValue v = parse_sum();
            if (v.kind != ValueKind::Scalar) fail("matrix entries must be scalars");
            rows.back().push_back(v.scalar);
            if (peek(',')) {
                ++pos_;
            } else if (peek(';')) {
                ++pos_;
                rows.emplace_back();
            } else {
                break;
            }
        }
        expect(']');
        const std::size_t n = rows.size();
        for (const auto& r : rows) {
            if (r.size() != n) fail("entries must form a square matrix");
        }
        return sized_value(ExactMatrix::from_rows(rows));
    }

    /// 2x2 and 4x4 are single-particle; the pair-space size passes through.
    OpValue sized_value(ExactMatrix m) {
        const int n = m.rows();
        if (n == 2 || n == 4) return matrix_value(ValueKind::Single, std::move(m));
        if (n == basis_dim(basis_)) return matrix_value(ValueKind::Pair, std::move(m));
        throw DimensionError("a " + std::to_string(n) + "x" + std::to_string(n) + " matrix does not act on " +
                             basis_name(basis_));
    }

    const std::string& s_;
    Basis basis_;
    bool scalars_only_;
    std::size_t pos_ = 0;
};

bool starts_operator(const std::string& text, std::size_t pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && std::isalpha(static_cast<unsigned char>(text[end]))) ++end;
    return kKeywords.count(text.substr(pos, end - pos)) > 0;
}

}  // namespace

OpValue parse_value(const std::string& text, Basis basis) {
    pair_levels(basis);
    return Parser(text, basis, false).parse_all();
}

Operator to_operator(const OpValue& v, Basis basis) { return Operator(basis, to_pair(v, basis).numeric); }

std::optional<ExactMatrix> to_exact_operator(const OpValue& v, Basis basis) { return to_pair(v, basis).exact; }

std::optional<ExactMatrix> exact_single(const OpValue& v) {
    if (v.kind == ValueKind::Scalar) return v.scalar * ExactMatrix::identity(2);
    if (v.kind != ValueKind::Single) return std::nullopt;
    return v.exact;
}

Operator parse_operator(const std::string& text, Basis basis) { return to_operator(parse_value(text, basis), basis); }

std::pair<std::string, std::string> split_pair(const std::string& text) {
    std::vector<std::size_t> commas, semis;
    int depth = 0;
    for (std::size_t k = 0; k < text.size(); ++k) {
        const char c = text[k];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (depth != 0) continue;
        if (c == ';') semis.push_back(k);
        if (c == ',' && starts_operator(text, k + 1)) commas.push_back(k);
    }
    const std::vector<std::size_t>& cut = semis.empty() ? commas : semis;
    if (cut.size() != 1) throw InputError("expected an operator pair 'A,B' (or 'A;B'), got '" + text + "'");
    return {text.substr(0, cut[0]), text.substr(cut[0] + 1)};
}

ExactScalar parse_exact_scalar(const std::string& text) {
    return Parser(text, Basis::Sym3, true).parse_all().scalar;
}

std::vector<cplx> parse_scalar_list(const std::string& text) {
    std::vector<cplx> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= text.size(); ++k) {
        if (k < text.size()) {
            if (text[k] == '(') ++depth;
            if (text[k] == ')') --depth;
        }
        if (k == text.size() || (text[k] == ',' && depth == 0)) {
            out.push_back(parse_exact_scalar(text.substr(start, k - start)).to_complex());
            start = k + 1;
        }
    }
    return out;
}

}  // namespace entloc::cli
