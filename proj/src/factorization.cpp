#include "entloc/factorization.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace entloc {

ResidualParts residual_parts(const Mat& a, const Mat& b, const Vec& psi) {
    if (a.rows() != psi.size() || a.cols() != psi.size() || b.rows() != psi.size() || b.cols() != psi.size()) {
        throw DimensionError("operator and state dimensions do not match");
    }
    const double n2 = psi.squaredNorm();
    if (std::sqrt(n2) < kStateEps) throw ZeroNormError("state norm below threshold");
    const Vec bpsi = b * psi;
    ResidualParts out;
    out.ab = psi.dot(a * bpsi) / n2;
    out.a = psi.dot(a * psi) / n2;
    out.b = psi.dot(bpsi) / n2;
    return out;
}

ResidualParts residual_parts(const Operator& a, const Operator& b, const State& psi) {
    require_compatible(a, psi);
    require_compatible(b, psi);
    return residual_parts(a.matrix(), b.matrix(), psi.amplitudes());
}

cplx residual(const Operator& a, const Operator& b, const State& psi) { return residual_parts(a, b, psi).residual(); }

cplx residual(const Mat& a, const Mat& b, const Vec& psi) { return residual_parts(a, b, psi).residual(); }

cplx sectorwise_residual(const Operator& a, const Operator& b, const State& psi) {
    if (psi.basis() != Basis::Sym10) throw DimensionError("sector-wise residual expects a Sym10 state");
    require_compatible(a, psi);
    require_compatible(b, psi);
    psi.require_nonzero();
    const double n = psi.norm();
    cplx worst = 0.0;
    for (Sector x : kSectors) {
        Vec part = Vec::Zero(10);
        for (int k : sector_indices(x)) part(k) = psi[k];
        if (part.norm() <= kStateEps * std::max(1.0, n)) continue;
        const cplx r = residual(a.matrix(), b.matrix(), part);
        if (std::abs(r) > std::abs(worst)) worst = r;
    }
    return worst;
}

const char* audit_verdict_name(AuditVerdict v) {
    return v == AuditVerdict::ViolationFound ? "ViolationFound" : "FactorizesOnSamples";
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(threads, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next.store(n);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

namespace {

cplx evaluate(const Operator& a, const Operator& b, const State& psi, bool sectorwise) {
    return sectorwise ? sectorwise_residual(a, b, psi) : residual(a, b, psi);
}

void require_member(const State& s, SeparableSet set, const Tolerances& tol) {
    if (!is_member(s, set, tol)) {
        throw ConsistencyError(std::string("sampled state failed the ") + set_name(set) + " classifier");
    }
}

}  // namespace

AuditReport audit(const Operator& a, const Operator& b, SeparableSet set, const AuditConfig& cfg,
                  const std::string& description) {
    if (cfg.samples == 0) throw InputError("audit needs at least one sample");
    cfg.tol.validate();
    std::vector<cplx> values(cfg.samples);
    parallel_for(cfg.samples, cfg.threads, [&](std::size_t i) {
        Rng rng = make_rng(cfg.seed, i);
        const Sample s = sample_separable(set, rng);
        if (cfg.verify_membership) require_member(s.state, set, cfg.tol);
        values[i] = evaluate(a, b, s.state, cfg.sectorwise);
    });

    AuditReport out;
    out.pair = description;
    out.set = set;
    out.samples = cfg.samples;
    out.seed = cfg.seed;
    out.tol = cfg.tol;
    out.sectorwise = cfg.sectorwise;
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = std::abs(values[i]);
        sum += v;
        if (i == 0 || v > out.max_abs) {
            out.max_abs = v;
            out.argmax_index = i;
        }
    }
    out.mean_abs = sum / static_cast<double>(values.size());
    out.argmax_residual = values[out.argmax_index];
    Rng rng = make_rng(cfg.seed, out.argmax_index);
    out.argmax_state = sample_separable(set, rng).state;
    out.verdict = out.max_abs > cfg.tol.witness ? AuditVerdict::ViolationFound : AuditVerdict::FactorizesOnSamples;
    return out;
}

WitnessSearch find_violation_witness(const Operator& a, const Operator& b, SeparableSet set, const WitnessConfig& cfg,
                                     std::uint64_t seed) {
    if (cfg.budget == 0) throw InputError("witness budget must be >= 1");
    std::vector<Family> families = families_of(set);
    if (cfg.family) {
        if (std::find(families.begin(), families.end(), *cfg.family) == families.end()) {
            throw InputError(std::string("family ") + family_name(*cfg.family) + " does not belong to set " +
                             set_name(set));
        }
        families = {*cfg.family};
    }

    Rng rng = make_rng(seed, 0);
    WitnessSearch out;

    struct Eval {
        bool ok = false;
        State state{Basis::Sym3, Vec::Zero(3)};
        cplx r;
    };
    auto eval = [&](const FamilyPoint& p) {
        Eval e;
        ++out.evaluations;
        const State raw = build_family_state(p);
        if (raw.norm() < kStateEps) return e;
        e.state = raw.normalized();
        e.r = evaluate(a, b, e.state, cfg.sectorwise);
        e.ok = true;
        out.best_abs = std::max(out.best_abs, std::abs(e.r));
        return e;
    };
    // Records a hit; returns true when the search should stop.
    auto consider = [&](const FamilyPoint& p, const Eval& e) {
        if (!e.ok || std::abs(e.r) <= cfg.threshold) return false;
        if (out.witness && std::abs(e.r) <= std::abs(out.witness->residual)) return false;
        SeparabilityVerdict v = classify(e.state, set, cfg.tol);
        if (!v.separable()) return false;
        out.witness = Witness{e.state, p, e.r, set, std::move(v)};
        return !cfg.maximize;
    };

    const cplx directions[4] = {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)};
    std::size_t restart = 0;
    while (out.evaluations < cfg.budget) {
        const Family fam = families[restart++ % families.size()];
        FamilyPoint p = draw_family_point(fam, rng);
        Eval cur = eval(p);
        if (consider(p, cur)) return out;
        if (!cur.ok) continue;
        double step = 0.5;
        for (int sweep = 0; sweep < 60 && out.evaluations < cfg.budget && step > 1e-6; ++sweep) {
            bool improved = false;
            auto try_point = [&](const FamilyPoint& q) {
                if (out.evaluations >= cfg.budget) return false;
                Eval e = eval(q);
                if (consider(q, e)) return true;
                if (e.ok && std::abs(e.r) > std::abs(cur.r)) {
                    p = q;
                    cur = std::move(e);
                    improved = true;
                }
                return false;
            };
            for (int occ = 0; occ < family_occupation_count(fam); ++occ) {
                if (occ == p.occupation) continue;
                FamilyPoint q = p;
                q.occupation = occ;
                if (try_point(q)) return out;
            }
            for (std::size_t k = 0; k < p.params.size(); ++k) {
                for (const cplx& d : directions) {
                    FamilyPoint q = p;
                    q.params[k] += step * d;
                    if (try_point(q)) return out;
                }
            }
            if (!improved) step *= 0.5;
        }
    }
    return out;
}

Operator left_imbalance() { return level_number(4, 0) - level_number(4, 1); }

Operator right_imbalance() { return level_number(4, 2) - level_number(4, 3); }

State sep_III_example_state(cplx c_ll, cplx c_lr, cplx c_rr) {
    Vec v = Vec::Zero(10);
    v(sym_index(4, 0, 0)) = c_ll;
    v(sym_index(4, 0, 3)) = c_lr;
    v(sym_index(4, 3, 3)) = c_rr;
    return State(Basis::Sym10, std::move(v));
}

std::array<cplx, 3> sep_III_example_expectations(cplx c_ll, cplx c_lr, cplx c_rr) {
    const State psi = sep_III_example_state(c_ll, c_lr, c_rr);
    const ResidualParts p = residual_parts(left_imbalance(), right_imbalance(), psi);
    return {p.ab, p.a, p.b};
}

Operator ssr_constrain(const Operator& a) {
    if (a.basis() != Basis::Sym10) throw DimensionError("ssr_constrain expects a Sym10 operator");
    Mat out = Mat::Zero(10, 10);
    for (Sector x : kSectors) {
        const Mat px = sector_projector(x).matrix();
        out += px * a.matrix() * px;
    }
    return Operator(Basis::Sym10, std::move(out));
}

const char* control_kind_name(ControlKind k) { return k == ControlKind::Mode ? "mode" : "SSR"; }

namespace {

/// Random polynomial of degree <= 2 in the ladder operators of one mode.
Mat random_ladder_polynomial(const FockSpace& space, const std::string& mode, Rng& rng) {
    const Mat c = space.ladder(mode, Ladder::Create);
    const Mat d = space.ladder(mode, Ladder::Annihilate);
    const Mat words[] = {space.identity(), d, c, d * d, d * c, c * d, c * c};
    Mat out = Mat::Zero(space.dim(), space.dim());
    for (const Mat& w : words) out += complex_normal(rng) * w;
    return out;
}

/// Random Hermitian number-conserving one- and two-body operator on two modes.
Mat random_side_operator(const FockSpace& space, const std::string& m0, const std::string& m1, Rng& rng) {
    const Mat c[2] = {space.ladder(m0, Ladder::Create), space.ladder(m1, Ladder::Create)};
    const Mat d[2] = {space.ladder(m0, Ladder::Annihilate), space.ladder(m1, Ladder::Annihilate)};
    Mat out = complex_normal(rng) * space.identity();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) out += complex_normal(rng) * (c[i] * d[j]);
    }
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) out += complex_normal(rng) * (c[i] * c[j] * d[k] * d[l]);
            }
        }
    }
    return (out + out.adjoint()) / 2.0;
}

Mat random_number_polynomial(const Operator& n, Rng& rng) {
    std::normal_distribution<double> g;
    const Mat& m = n.matrix();
    return g(rng) * Mat::Identity(m.rows(), m.cols()) + g(rng) * m + g(rng) * (m * m);
}

}  // namespace

std::pair<Operator, Operator> random_mode_pair(Rng& rng) {
    Operator a(Basis::Sym3, random_number_polynomial(level_number(2, 0), rng));
    Operator b(Basis::Sym3, random_number_polynomial(level_number(2, 1), rng));
    return {std::move(a), std::move(b)};
}

std::pair<Operator, Operator> random_ssr_pair(Rng& rng) {
    const FockSpace space = FockSpace::four_mode(4);
    const Mat af = random_side_operator(space, "L0", "L1", rng);
    const Mat bf = random_side_operator(space, "R0", "R1", rng);
    return {ssr_constrain(restrict_to_pairs(af, space)), ssr_constrain(restrict_to_pairs(bf, space))};
}

std::pair<Operator, Operator> random_pair_for_set(SeparableSet set, Rng& rng) {
    switch (set) {
        case SeparableSet::I: {
            const Mat o = complex_normal_matrix(rng, 2, 2);
            const Mat q = complex_normal_matrix(rng, 2, 2);
            return {construct_sep_I_preserver(o), construct_sep_I_preserver(q)};
        }
        case SeparableSet::II: {
            const Mat o = complex_normal(rng) * random_unitary(rng, 2);
            const Mat q = complex_normal(rng) * random_unitary(rng, 2);
            return {construct_sep_I_preserver(o), construct_sep_I_preserver(q)};
        }
        case SeparableSet::III:
            return {Operator(Basis::Sym10, random_hermitian(rng, 10)), Operator(Basis::Sym10, random_hermitian(rng, 10))};
        case SeparableSet::Mode: return random_mode_pair(rng);
        case SeparableSet::Ssr: return random_ssr_pair(rng);
    }
    throw InputError("unknown separable set");
}

ControlReport positive_control(ControlKind kind, std::size_t n_pairs, std::size_t n_states, std::uint64_t seed,
                               unsigned threads) {
    if (n_pairs == 0 || n_states == 0) throw InputError("positive control needs at least one pair and one state");
    // Streams: pairs use [0, n_pairs), states use [2^32, 2^32 + n_states).
    const std::uint64_t state_stream = std::uint64_t{1} << 32;
    ControlReport out;
    out.kind = kind;
    out.pairs = n_pairs;
    out.states = n_states;
    out.seed = seed;
    std::vector<std::pair<std::size_t, cplx>> worst(n_pairs);

    if (kind == ControlKind::Mode) {
        const FockSpace space = FockSpace::two_mode(4);
        std::vector<Vec> states;
        std::vector<int> low;
        for (int i = 0; i < space.dim(); ++i) {
            const auto& occ = space.occupation(i);
            if (occ[0] + occ[1] <= space.n_max() - 2) low.push_back(i);
        }
        for (std::size_t s = 0; s < n_states; ++s) {
            Rng rng = make_rng(seed, state_stream + s);
            const int pick = low[std::uniform_int_distribution<std::size_t>(0, low.size() - 1)(rng)];
            cplx scale = complex_normal(rng);
            if (std::abs(scale) < kStateEps) scale = 1.0;
            states.push_back(scale * basis_vector(space.dim(), pick));
        }
        parallel_for(n_pairs, threads, [&](std::size_t p) {
            Rng rng = make_rng(seed, p);
            const Mat a = random_ladder_polynomial(space, "0", rng);
            const Mat b = random_ladder_polynomial(space, "1", rng);
            std::pair<std::size_t, cplx> w{0, 0.0};
            for (std::size_t s = 0; s < n_states; ++s) {
                const cplx r = residual(a, b, states[s]);
                if (std::abs(r) > std::abs(w.second)) w = {s, r};
            }
            worst[p] = w;
        });
    } else {
        std::vector<State> states;
        for (std::size_t s = 0; s < n_states; ++s) {
            Rng rng = make_rng(seed, state_stream + s);
            states.push_back(sample_separable(SeparableSet::Ssr, rng).state);
        }
        parallel_for(n_pairs, threads, [&](std::size_t p) {
            Rng rng = make_rng(seed, p);
            const auto [a, b] = random_ssr_pair(rng);
            std::pair<std::size_t, cplx> w{0, 0.0};
            for (std::size_t s = 0; s < n_states; ++s) {
                const cplx r = sectorwise_residual(a, b, states[s]);
                if (std::abs(r) > std::abs(w.second)) w = {s, r};
            }
            worst[p] = w;
        });
    }
    for (std::size_t p = 0; p < n_pairs; ++p) {
        if (p == 0 || std::abs(worst[p].second) > out.max_abs) {
            out.max_abs = std::abs(worst[p].second);
            out.argmax_pair = p;
            out.argmax_state = worst[p].first;
            out.argmax_residual = worst[p].second;
        }
    }
    return out;
}

}  // namespace entloc
