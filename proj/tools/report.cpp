#include "report.hpp"

#include <sstream>

namespace entloc::cli {

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const Vec& v) {
    json out = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(to_json(v(k)));
    return out;
}

json to_json(const Mat& m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

json to_json(const ExactMatrix& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        out.push_back(std::move(row));
    }
    return out;
}

json to_json(const Tolerances& tol) {
    return {{"classify", tol.classify}, {"rank", tol.rank}, {"witness", tol.witness}};
}

json to_json(const State& s) { return {{"basis", basis_name(s.basis())}, {"amplitudes", to_json(s.amplitudes())}}; }

json to_json(const SeparabilityVerdict& v) {
    json params = json::array();
    for (const cplx& p : v.parameters) params.push_back(to_json(p));
    json diag = json::object();
    for (const auto& [k, x] : v.diagnostics) diag[k] = x;
    return {{"verdict", verdict_name(v.verdict)}, {"separable", v.separable()}, {"parameters", params},
            {"diagnostics", diag}};
}

json to_json(const FamilyPoint& p) {
    json params = json::array();
    for (const cplx& c : p.params) params.push_back(to_json(c));
    return {{"family", family_name(p.family)}, {"params", params}, {"occupation", p.occupation}};
}

json to_json(const Certificate& c) {
    json out = {{"verdict", cert_verdict_name(c.verdict)}, {"variables", c.variables}, {"term_count", c.term_count}};
    if (c.exponents) {
        json e = json::array();
        for (auto x : *c.exponents) e.push_back(static_cast<int>(x));
        out["exponents"] = e;
        out["monomial"] = c.monomial;
        out["coefficient"] = c.coefficient->to_string();
    } else {
        out["exponents"] = nullptr;
        out["monomial"] = nullptr;
        out["coefficient"] = nullptr;
    }
    json point = json::array();
    for (const auto& g : c.check_point) point.push_back(g.to_string());
    out["check_point"] = point;
    out["check_value"] = c.check_value.to_string();
    return out;
}

json to_json(const TwoBasisTest& t) {
    return {{"offdiagonal_products_vanish", t.offdiagonal_products_vanish},
            {"trivial", t.trivial},
            {"o_scalar", t.o_scalar},
            {"q_scalar", t.q_scalar}};
}

json to_json(const AuditReport& r) {
    json out = {{"pair", r.pair},
                {"set", set_name(r.set)},
                {"samples", r.samples},
                {"seed", r.seed},
                {"sectorwise", r.sectorwise},
                {"max_abs", r.max_abs},
                {"mean_abs", r.mean_abs},
                {"argmax_index", r.argmax_index},
                {"argmax_residual", to_json(r.argmax_residual)}};
    out["argmax_state"] = r.argmax_state ? to_json(*r.argmax_state) : json(nullptr);
    out["verdict"] = audit_verdict_name(r.verdict);
    return out;
}

json to_json(const WitnessSearch& w) {
    json out = {{"found", w.witness.has_value()}, {"evaluations", w.evaluations}, {"best_abs", w.best_abs}};
    if (w.witness) {
        out["residual"] = to_json(w.witness->residual);
        out["abs_residual"] = std::abs(w.witness->residual);
        out["state"] = to_json(w.witness->state);
        out["point"] = to_json(w.witness->point);
        out["membership"] = to_json(w.witness->membership);
    }
    return out;
}

json to_json(const ControlReport& r) {
    return {{"kind", control_kind_name(r.kind)},   {"pairs", r.pairs},
            {"states", r.states},                  {"seed", r.seed},
            {"max_abs", r.max_abs},                {"argmax_pair", r.argmax_pair},
            {"argmax_state", r.argmax_state},      {"argmax_residual", to_json(r.argmax_residual)}};
}

namespace {

std::string csv_cell(const json& v) {
    std::string text = v.is_string() ? v.get<std::string>() : v.dump();
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

}  // namespace

std::string to_csv(const json& results) {
    std::ostringstream out;
    json rows = results.is_array() ? results : json::array({results});
    if (rows.empty()) return "";
    std::vector<std::string> columns;
    for (const auto& [k, v] : rows.front().items()) columns.push_back(k);
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
    out << '\n';
    for (const json& row : rows) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out << (c ? "," : "");
            if (row.contains(columns[c])) out << csv_cell(row.at(columns[c]));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace entloc::cli
