#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "entloc/roots.hpp"
#include "opspec.hpp"
#include "report.hpp"
#include "reproduce.hpp"

namespace entloc::cli {

namespace {

/// Random operator pairs use streams above this offset so they never share a
/// generator with the per-sample streams of an audit.
constexpr std::uint64_t kPairStream = std::uint64_t{1} << 40;

struct Common {
    std::uint64_t seed = 42;
    double tol_class = 1e-9;
    double tol_rank = 1e-8;
    double tol_witness = 1e-6;
    std::string format = "json";
    std::string out;
    unsigned threads = 0;

    Tolerances tolerances() const {
        Tolerances t{tol_class, tol_rank, tol_witness};
        t.validate();
        return t;
    }

    json echo() const {
        return {{"seed", seed},
                {"tolerances", {{"classify", tol_class}, {"rank", tol_rank}, {"witness", tol_witness}}},
                {"format", format},
                {"out", out},
                {"threads", threads}};
    }
};

struct Outcome {
    json config;
    json results;
    json summary;
    int exit_code = kExitOk;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
    sub->add_option("--tol-class", c.tol_class, "Classifier tolerance")->capture_default_str();
    sub->add_option("--tol-rank", c.tol_rank, "Rank tolerance")->capture_default_str();
    sub->add_option("--tol-witness", c.tol_witness, "Residual counted as a violation")->capture_default_str();
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--out", c.out, "Write the report to this file");
    sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

Basis parse_basis(const std::string& text) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "sym3" || t == "sym-3") return Basis::Sym3;
    if (t == "sym10" || t == "sym-10") return Basis::Sym10;
    throw InputError("unknown basis '" + text + "' (expected sym3 or sym10)");
}

std::vector<SeparableSet> sets_for(Basis b) {
    if (b == Basis::Sym3) return {SeparableSet::I, SeparableSet::II, SeparableSet::Mode};
    return {SeparableSet::III, SeparableSet::Mode, SeparableSet::Ssr};
}

SeparableSet set_of_family(Family f) {
    switch (f) {
        case Family::SepI: return SeparableSet::I;
        case Family::SepIIOrthogonal: return SeparableSet::II;
        case Family::SepIII: return SeparableSet::III;
        case Family::Mode: return SeparableSet::Mode;
        case Family::Ssr: return SeparableSet::Ssr;
    }
    throw InputError("unknown family");
}

struct PairSpec {
    std::string description;
    Operator a;
    Operator b;
    json operators;
};

/// "--pair A,B" or "--pairs random:N".
std::vector<PairSpec> resolve_pairs(const std::string& pair, const std::string& pairs, SeparableSet set,
                                    std::uint64_t seed) {
    const Basis basis = set_basis(set);
    std::vector<PairSpec> out;
    if (!pair.empty() && !pairs.empty()) throw InputError("give either --pair or --pairs, not both");
    if (!pair.empty()) {
        const auto [ta, tb] = split_pair(pair);
        Operator a = parse_operator(ta, basis), b = parse_operator(tb, basis);
        json ops = {{"a", to_json(a.matrix())}, {"b", to_json(b.matrix())}};
        out.push_back({pair, std::move(a), std::move(b), std::move(ops)});
        return out;
    }
    if (pairs.rfind("random:", 0) != 0) throw InputError("--pairs expects random:N");
    std::size_t n = 0;
    try {
        n = std::stoul(pairs.substr(7));
    } catch (const std::exception&) {
        throw InputError("--pairs expects random:N, got '" + pairs + "'");
    }
    if (n == 0) throw InputError("--pairs needs N >= 1");
    for (std::size_t k = 0; k < n; ++k) {
        Rng rng = make_rng(seed, kPairStream + k);
        auto [a, b] = random_pair_for_set(set, rng);
        json ops = {{"stream", kPairStream + k}, {"a", to_json(a.matrix())}, {"b", to_json(b.matrix())}};
        out.push_back({"random:" + std::to_string(k), std::move(a), std::move(b), std::move(ops)});
    }
    return out;
}

// ---------------------------------------------------------------- classify

struct ClassifyOpts {
    Common common;
    std::string amplitudes;
    std::string basis;
    std::string family;
    std::string params;
    int occupation = 0;
    std::string set = "all";
};

Outcome cmd_classify(const ClassifyOpts& o) {
    const Tolerances tol = o.common.tolerances();
    std::optional<State> state;
    json source;
    if (!o.amplitudes.empty() == !o.family.empty()) throw InputError("give exactly one of --amplitudes or --family");
    if (!o.amplitudes.empty()) {
        const std::vector<cplx> amps = parse_scalar_list(o.amplitudes);
        Basis basis;
        if (!o.basis.empty()) {
            basis = parse_basis(o.basis);
        } else if (amps.size() == 3 || amps.size() == 10) {
            basis = amps.size() == 3 ? Basis::Sym3 : Basis::Sym10;
        } else {
            throw DimensionError(std::to_string(amps.size()) + " amplitudes match neither sym3 (3) nor sym10 (10)");
        }
        if (static_cast<int>(amps.size()) != basis_dim(basis)) {
            throw DimensionError(std::string(basis_name(basis)) + " needs " + std::to_string(basis_dim(basis)) +
                                 " amplitudes, got " + std::to_string(amps.size()));
        }
        Vec v(static_cast<Eigen::Index>(amps.size()));
        for (std::size_t k = 0; k < amps.size(); ++k) v(static_cast<Eigen::Index>(k)) = amps[k];
        state = State(basis, v);
        source = {{"amplitudes", o.amplitudes}};
    } else {
        FamilyPoint p;
        p.family = parse_family(o.family);
        p.params = parse_scalar_list(o.params);
        p.occupation = o.occupation;
        if (p.params.size() != family_param_count(p.family)) {
            throw DimensionError(std::string(family_name(p.family)) + " takes " +
                                 std::to_string(family_param_count(p.family)) + " parameters, got " +
                                 std::to_string(p.params.size()));
        }
        if (p.occupation < 0 || p.occupation >= family_occupation_count(p.family)) {
            throw InputError("occupation index out of range");
        }
        state = build_family_state(p);
        source = {{"family", family_name(p.family)}, {"params", o.params}, {"occupation", o.occupation}};
    }
    state->require_nonzero();

    std::vector<SeparableSet> sets;
    if (o.set == "all") {
        sets = sets_for(state->basis());
    } else {
        const SeparableSet s = parse_set(o.set);
        if (set_basis(s) != state->basis() && !(s == SeparableSet::Mode)) {
            throw DimensionError(std::string("set ") + set_name(s) + " acts on " + basis_name(set_basis(s)) +
                                 ", the state is " + basis_name(state->basis()));
        }
        sets = {s};
    }

    Outcome out;
    out.config = o.common.echo();
    out.config["state"] = source;
    out.config["basis"] = basis_name(state->basis());
    out.config["set"] = o.set;
    out.results = json::array();
    json verdicts = json::object();
    for (SeparableSet s : sets) {
        const SeparabilityVerdict v = classify(*state, s, tol);
        json row = {{"set", set_name(s)}};
        row.update(to_json(v));
        out.results.push_back(row);
        verdicts[set_name(s)] = verdict_name(v.verdict);
    }
    out.summary = {{"state", to_json(state->normalized())}, {"verdicts", verdicts}};
    return out;
}

// ---------------------------------------------------------------- reproduce

Outcome cmd_reproduce(const Common& c) {
    Outcome out;
    out.config = c.echo();
    out.results = json::array();
    std::size_t passed = 0;
    const auto lines = reproduce_paper();
    for (const ReproLine& line : lines) {
        json qs = json::array();
        for (const auto& q : line.quantities) {
            qs.push_back({{"name", q.name},
                          {"computed", to_json(q.computed)},
                          {"expected", to_json(q.expected)},
                          {"abs_error", std::abs(q.computed - q.expected)}});
        }
        out.results.push_back({{"id", line.id},
                               {"description", line.description},
                               {"quantities", qs},
                               {"tolerance", line.tolerance},
                               {"max_abs_error", line.max_abs_error},
                               {"status", line.pass ? "PASS" : "FAIL"}});
        passed += line.pass;
    }
    const bool ok = passed == lines.size();
    out.summary = {{"lines", lines.size()}, {"passed", passed}, {"failed", lines.size() - passed},
                   {"status", ok ? "PASS" : "FAIL"}};
    out.exit_code = ok ? kExitOk : kExitReproduceFail;
    return out;
}

// ---------------------------------------------------------------- audit

struct AuditOpts {
    Common common;
    std::string set;
    std::string pair;
    std::string pairs;
    std::size_t samples = 1000;
    bool sectorwise = false;
    bool global = false;
};

Outcome cmd_audit(const AuditOpts& o) {
    const SeparableSet set = parse_set(o.set);
    AuditConfig cfg;
    cfg.samples = o.samples;
    cfg.seed = o.common.seed;
    cfg.tol = o.common.tolerances();
    cfg.threads = o.common.threads;
    cfg.sectorwise = set == SeparableSet::Ssr ? !o.global : o.sectorwise;
    if (cfg.sectorwise && set_basis(set) != Basis::Sym10) throw InputError("--sectorwise needs a sym10 set");

    Outcome out;
    out.config = o.common.echo();
    out.config.update({{"set", set_name(set)}, {"pair", o.pair}, {"pairs", o.pairs}, {"samples", o.samples},
                       {"sectorwise", cfg.sectorwise}});
    out.results = json::array();
    double worst = 0.0;
    std::size_t violations = 0;
    for (const PairSpec& p : resolve_pairs(o.pair, o.pairs, set, o.common.seed)) {
        const AuditReport r = audit(p.a, p.b, set, cfg, p.description);
        json row = to_json(r);
        row["operators"] = p.operators;
        out.results.push_back(row);
        worst = std::max(worst, r.max_abs);
        violations += r.verdict == AuditVerdict::ViolationFound;
    }
    out.summary = {{"pairs", out.results.size()},
                   {"max_abs", worst},
                   {"violations", violations},
                   {"verdict", violations ? "ViolationFound" : "FactorizesOnSamples"}};
    return out;
}

// ---------------------------------------------------------------- witness

struct WitnessOpts {
    Common common;
    std::string set;
    std::string pair;
    std::string pairs;
    std::size_t budget = 10000;
    std::string family;
    bool first_hit = false;
    bool sectorwise = false;
};

Outcome cmd_witness(const WitnessOpts& o) {
    const SeparableSet set = parse_set(o.set);
    WitnessConfig cfg;
    cfg.budget = o.budget;
    cfg.tol = o.common.tolerances();
    cfg.threshold = cfg.tol.witness;
    cfg.maximize = !o.first_hit;
    cfg.sectorwise = o.sectorwise;
    if (!o.family.empty()) cfg.family = parse_family(o.family);

    Outcome out;
    out.config = o.common.echo();
    out.config.update({{"set", set_name(set)}, {"pair", o.pair}, {"pairs", o.pairs}, {"budget", o.budget},
                       {"family", o.family}, {"first_hit", o.first_hit}, {"sectorwise", o.sectorwise}});
    out.results = json::array();
    std::size_t found = 0;
    for (const PairSpec& p : resolve_pairs(o.pair, o.pairs, set, o.common.seed)) {
        const WitnessSearch w = find_violation_witness(p.a, p.b, set, cfg, o.common.seed);
        json row = {{"pair", p.description}};
        row.update(to_json(w));
        row["operators"] = p.operators;
        out.results.push_back(row);
        found += w.witness.has_value();
    }
    const std::size_t total = out.results.size();
    out.summary = {{"pairs", total}, {"found", found}, {"not_found", total - found},
                   {"verdict", found == total ? "WitnessFound" : "NotFound"}};
    return out;
}

// ---------------------------------------------------------------- certify

struct CertifyOpts {
    Common common;
    std::string pair;
    std::string sector;
};

std::vector<std::pair<Sector, Sector>> parse_sector_pairs(const std::string& text) {
    std::vector<std::pair<Sector, Sector>> out;
    if (text == "all") {
        for (Sector x : kSectors) {
            for (Sector y : kSectors) {
                if (x != y) out.emplace_back(x, y);
            }
        }
        return out;
    }
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw InputError("--sector expects X,Y (LL, LR, RR) or all");
    const Sector x = parse_sector(text.substr(0, comma)), y = parse_sector(text.substr(comma + 1));
    if (x == y) throw InputError("--sector needs two different sectors");
    out.emplace_back(x, y);
    return out;
}

Outcome cmd_certify(const CertifyOpts& o) {
    const auto [ta, tb] = split_pair(o.pair);
    Outcome out;
    out.config = o.common.echo();
    out.config.update({{"pair", o.pair}, {"sector", o.sector}});
    out.results = json::array();
    std::size_t zero = 0;
    if (o.sector.empty()) {
        const auto oa = exact_single(parse_value(ta, Basis::Sym3));
        const auto ob = exact_single(parse_value(tb, Basis::Sym3));
        if (!oa || !ob || oa->rows() != 2 || ob->rows() != 2) {
            throw InputError("certify needs two exact 2x2 single-particle operators");
        }
        const SepICertificate c = certify_sep_I_factorization(*oa, *ob);
        out.results.push_back({{"pair", o.pair},
                               {"o", to_json(*oa)},
                               {"q", to_json(*ob)},
                               {"certificate", to_json(c.certificate)},
                               {"structure", to_json(c.structure)}});
        zero += c.certificate.verdict == CertVerdict::IdenticallyZero;
    } else {
        const auto a = to_exact_operator(parse_value(ta, Basis::Sym10), Basis::Sym10);
        const auto b = to_exact_operator(parse_value(tb, Basis::Sym10), Basis::Sym10);
        if (!a || !b) throw InputError("sector certificates need exact operators (no ladder terms)");
        for (const auto& [x, y] : parse_sector_pairs(o.sector)) {
            const SectorCertificate c = certify_sector_offdiagonal(*a, *b, x, y);
            out.results.push_back({{"pair", o.pair},
                                   {"sectors", {sector_name(x), sector_name(y)}},
                                   {"certificate", to_json(c.certificate)},
                                   {"a_block_zero", c.a_block_zero},
                                   {"b_block_zero", c.b_block_zero}});
            zero += c.certificate.verdict == CertVerdict::IdenticallyZero;
        }
    }
    out.summary = {{"certificates", out.results.size()},
                   {"identically_zero", zero},
                   {"nonzero_monomial", out.results.size() - zero}};
    return out;
}

// ---------------------------------------------------------------- preserve-check

struct PreserveOpts {
    Common common;
    std::string op;
    std::string basis = "sym3";
    std::string with;
    std::string c0;
};

json sep_II_check(const Mat& o) {
    const Mat g = o.adjoint() * o;
    return {{"sep_II_preserver", is_sep_II_preserver(o)},
            {"gram", to_json(g)},
            {"distance_from_scalar", normalized_distance_from_scalar(o)}};
}

Outcome cmd_preserve(const PreserveOpts& o) {
    const Basis basis = parse_basis(o.basis);
    const Tolerances tol = o.common.tolerances();
    const OpValue v = parse_value(o.op, basis);
    Outcome out;
    out.config = o.common.echo();
    out.config.update({{"op", o.op}, {"basis", basis_name(basis)}, {"with", o.with}, {"c0", o.c0}});
    json r = json::object();
    std::optional<Mat> single;
    if (v.kind == ValueKind::Single && v.numeric.rows() == 2) {
        single = v.numeric;
        r["input"] = "single";
        r["o"] = to_json(*single);
        r["construct"] = to_json(construct_sep_I_preserver(*single).matrix());
        r.update(sep_II_check(*single));
        r["sep_I_preserver"] = true;
    } else if (basis == Basis::Sym3) {
        const Operator a = to_operator(v, basis);
        const SepIPreserverFit fit = fit_sep_I_preserver(a.matrix(), tol);
        r["input"] = "pair";
        r["a"] = to_json(a.matrix());
        r["sep_I_preserver"] = fit.fits;
        r["defect"] = fit.defect;
        if (fit.fits) {
            single = *fit.o;
            r["o"] = to_json(*fit.o);
            r.update(sep_II_check(*fit.o));
        }
        if (!o.c0.empty()) {
            const cplx c0 = parse_exact_scalar(o.c0).to_complex();
            const PreimageRoots roots = sep_I_preimage_roots(a.matrix(), c0);
            json rs = json::array();
            for (const cplx& z : roots.solution.roots) rs.push_back(to_json(z));
            r["preimage"] = {{"c0", to_json(c0)},
                             {"tautology", roots.tautology},
                             {"coefficients", to_json(Vec(Eigen::Map<const Vec>(roots.coefficients.data(),
                                                                                   static_cast<Eigen::Index>(
                                                                                       roots.coefficients.size()))))},
                             {"c1_roots", rs},
                             {"max_backward_error", roots.solution.max_backward_error}};
        }
    } else {
        const Operator a = to_operator(v, basis);
        const BlockScalar bs = is_block_scalar(a);
        r["input"] = "pair";
        r["a"] = to_json(a.matrix());
        json alpha = json::array();
        for (const cplx& x : bs.alpha) alpha.push_back(to_json(x));
        r["block_scalar"] = bs.block_scalar;
        r["identity_proportional"] = bs.identity_proportional;
        r["alpha"] = alpha;
        r["offdiagonal_norm"] = bs.offdiagonal_norm;
        r["diagonal_defect"] = bs.diagonal_defect;
        json blocks = json::object();
        for (const auto& [key, blk] : sector_blocks(a)) {
            blocks[std::string(sector_name(key.first)) + "," + sector_name(key.second)] = blk.matrix().norm();
        }
        r["block_norms"] = blocks;
    }
    if (!o.with.empty()) {
        const OpValue w = parse_value(o.with, basis);
        if (!single || w.kind != ValueKind::Single || w.numeric.rows() != 2) {
            throw InputError("--with needs 2x2 single-particle operators on both sides");
        }
        const CommutativityCondition cc = commutativity_condition(*single, w.numeric);
        r["commutativity"] = {{"q", to_json(w.numeric)},
                              {"s", to_json(cc.s)},
                              {"z", {to_json(cc.z[0]), to_json(cc.z[1]), to_json(cc.z[2])}},
                              {"commutes", cc.commutes},
                              {"commutator_norm", cc.commutator_norm}};
    }
    out.results = json::array({r});
    out.summary = {{"sep_I_preserver", r.value("sep_I_preserver", false)},
                   {"sep_II_preserver", r.value("sep_II_preserver", false)}};
    if (r.contains("block_scalar")) out.summary["block_scalar"] = r["block_scalar"];
    return out;
}

// ---------------------------------------------------------------- sample

struct SampleOpts {
    Common common;
    std::string set;
    std::string family;
    std::size_t count = 10;
};

Outcome cmd_sample(const SampleOpts& o) {
    if (o.set.empty() == o.family.empty()) throw InputError("give exactly one of --set or --family");
    std::optional<Family> fam;
    SeparableSet set;
    if (!o.family.empty()) {
        fam = parse_family(o.family);
        set = set_of_family(*fam);
    } else {
        set = parse_set(o.set);
    }
    const Tolerances tol = o.common.tolerances();
    Outcome out;
    out.config = o.common.echo();
    out.config.update({{"set", set_name(set)}, {"family", o.family}, {"count", o.count}});
    out.results = json::array();
    std::size_t members = 0;
    for (std::size_t k = 0; k < o.count; ++k) {
        Rng rng = make_rng(o.common.seed, k);
        const Sample s = fam ? sample_family(*fam, rng) : sample_separable(set, rng);
        const SeparabilityVerdict v = classify(s.state, set, tol);
        members += v.separable();
        out.results.push_back({{"index", k}, {"point", to_json(s.point)}, {"state", to_json(s.state)},
                               {"membership", to_json(v)}});
    }
    out.summary = {{"count", o.count}, {"members", members}};
    if (members != o.count) throw ConsistencyError("a sampled state failed its own classifier");
    return out;
}

// ---------------------------------------------------------------- control

struct ControlOpts {
    Common common;
    std::string kind = "mode";
    std::size_t pairs = 100;
    std::size_t states = 100;
};

Outcome cmd_control(const ControlOpts& o) {
    std::string k;
    for (char c : o.kind) k.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (k != "mode" && k != "ssr") throw InputError("--kind must be mode or ssr");
    const ControlKind kind = k == "mode" ? ControlKind::Mode : ControlKind::Ssr;
    const ControlReport r = positive_control(kind, o.pairs, o.states, o.common.seed, o.common.threads);
    Outcome out;
    out.config = o.common.echo();
    out.config.update({{"kind", control_kind_name(kind)}, {"pairs", o.pairs}, {"states", o.states}});
    out.results = json::array({to_json(r)});
    const double tol = 1e-10;
    out.summary = {{"max_abs", r.max_abs}, {"tolerance", tol},
                   {"verdict", r.max_abs <= tol ? "FactorizesOnSamples" : "ViolationFound"}};
    return out;
}

void emit(const std::string& command, const Outcome& o, const Common& c, double seconds, std::ostream& out) {
    std::string text;
    if (c.format == "csv") {
        text = to_csv(o.results);
    } else {
        json report = {{"schema", kSchema},
                       {"version", kVersion},
                       {"command", command},
                       {"config", o.config},
                       {"results", o.results},
                       {"summary", o.summary},
                       {"exit_code", o.exit_code},
                       {"wall_time_seconds", seconds}};
        text = report.dump(2) + "\n";
    }
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw InputError("cannot write '" + c.out + "'");
    f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Separability classification and factorization checks for two-boson states"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    ClassifyOpts classify_o;
    auto* classify_cmd = app.add_subcommand("classify", "Run the separability classifiers on one state");
    add_common(classify_cmd, classify_o.common);
    classify_cmd->add_option("--amplitudes", classify_o.amplitudes, "Comma-separated amplitudes");
    classify_cmd->add_option("--basis", classify_o.basis, "sym3 or sym10 (inferred from the amplitude count)");
    classify_cmd->add_option("--family", classify_o.family, "Separable family to build the state from");
    classify_cmd->add_option("--params", classify_o.params, "Family parameters");
    classify_cmd->add_option("--occupation", classify_o.occupation, "Occupation index for the mode family");
    classify_cmd->add_option("--set", classify_o.set, "I, II, III, mode, SSR or all")->capture_default_str();

    Common reproduce_o;
    auto* reproduce_cmd = app.add_subcommand("reproduce-paper", "Evaluate the worked examples");
    add_common(reproduce_cmd, reproduce_o);

    AuditOpts audit_o;
    auto* audit_cmd = app.add_subcommand("audit", "Residuals of operator pairs over sampled separable states");
    add_common(audit_cmd, audit_o.common);
    audit_cmd->add_option("--set", audit_o.set, "Separable set")->required();
    audit_cmd->add_option("--pair", audit_o.pair, "Operator pair A,B");
    audit_cmd->add_option("--pairs", audit_o.pairs, "random:N");
    audit_cmd->add_option("--samples,--states", audit_o.samples, "States per pair")->capture_default_str();
    audit_cmd->add_flag("--sectorwise", audit_o.sectorwise, "Evaluate on each sector component");
    audit_cmd->add_flag("--global", audit_o.global, "SSR only: evaluate on the whole state");

    WitnessOpts witness_o;
    auto* witness_cmd = app.add_subcommand("witness", "Search a separable state violating factorization");
    add_common(witness_cmd, witness_o.common);
    witness_cmd->add_option("--set", witness_o.set, "Separable set")->required();
    witness_cmd->add_option("--pair", witness_o.pair, "Operator pair A,B");
    witness_cmd->add_option("--pairs", witness_o.pairs, "random:N");
    witness_cmd->add_option("--budget", witness_o.budget, "Residual evaluations per pair")->capture_default_str();
    witness_cmd->add_option("--family", witness_o.family, "Restrict to one family of the set");
    witness_cmd->add_flag("--first-hit", witness_o.first_hit, "Stop at the first state above the threshold");
    witness_cmd->add_flag("--sectorwise", witness_o.sectorwise, "Evaluate on each sector component");

    CertifyOpts certify_o;
    auto* certify_cmd = app.add_subcommand("certify", "Exact polynomial certificate for a pair");
    add_common(certify_cmd, certify_o.common);
    certify_cmd->add_option("--pair", certify_o.pair, "Operator pair O,Q (2x2) or A,B with --sector")->required();
    certify_cmd->add_option("--sector", certify_o.sector, "X,Y sector pair (LL, LR, RR) or all");

    PreserveOpts preserve_o;
    auto* preserve_cmd = app.add_subcommand("preserve-check", "Which separable sets an operator preserves");
    add_common(preserve_cmd, preserve_o.common);
    preserve_cmd->add_option("--op", preserve_o.op, "Operator")->required();
    preserve_cmd->add_option("--basis", preserve_o.basis, "sym3 or sym10")->capture_default_str();
    preserve_cmd->add_option("--with", preserve_o.with, "Second 2x2 operator for the commutation test");
    preserve_cmd->add_option("--c0", preserve_o.c0, "Solve for c1 so that the image is in SEP-I");

    SampleOpts sample_o;
    auto* sample_cmd = app.add_subcommand("sample", "Draw separable states");
    add_common(sample_cmd, sample_o.common);
    sample_cmd->add_option("--set", sample_o.set, "Separable set");
    sample_cmd->add_option("--family", sample_o.family, "Single family");
    sample_cmd->add_option("--count", sample_o.count, "Number of states")->capture_default_str();

    ControlOpts control_o;
    auto* control_cmd = app.add_subcommand("control", "Positive locality controls (mode, SSR)");
    add_common(control_cmd, control_o.common);
    control_cmd->add_option("--kind", control_o.kind, "mode or ssr")->capture_default_str();
    control_cmd->add_option("--pairs", control_o.pairs, "Random operator pairs")->capture_default_str();
    control_cmd->add_option("--states", control_o.states, "States per pair")->capture_default_str();

    std::vector<std::string> argv_store = {"entloc"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    const auto start = std::chrono::steady_clock::now();
    std::string command;
    const Common* common = nullptr;
    try {
        Outcome o;
        if (classify_cmd->parsed()) {
            command = "classify", common = &classify_o.common, o = cmd_classify(classify_o);
        } else if (reproduce_cmd->parsed()) {
            command = "reproduce-paper", common = &reproduce_o, o = cmd_reproduce(reproduce_o);
        } else if (audit_cmd->parsed()) {
            command = "audit", common = &audit_o.common, o = cmd_audit(audit_o);
        } else if (witness_cmd->parsed()) {
            command = "witness", common = &witness_o.common, o = cmd_witness(witness_o);
        } else if (certify_cmd->parsed()) {
            command = "certify", common = &certify_o.common, o = cmd_certify(certify_o);
        } else if (preserve_cmd->parsed()) {
            command = "preserve-check", common = &preserve_o.common, o = cmd_preserve(preserve_o);
        } else if (sample_cmd->parsed()) {
            command = "sample", common = &sample_o.common, o = cmd_sample(sample_o);
        } else {
            command = "control", common = &control_o.common, o = cmd_control(control_o);
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        emit(command, o, *common, seconds, out);
        if (o.exit_code == kExitReproduceFail) err << "reproduce-paper: FAIL\n";
        return o.exit_code;
    } catch (const ZeroNormError& e) {
        err << "error: " << e.what() << "\n";
        return kExitZeroNorm;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ConsistencyError& e) {
        err << "consistency error: " << e.what() << "\n";
        return kExitConsistency;
    } catch (const ConvergenceError& e) {
        err << "convergence error: " << e.what() << "\n";
        return kExitConsistency;
    }
}

}  // namespace entloc::cli
