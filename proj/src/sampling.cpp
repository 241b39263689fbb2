#include "entloc/sampling.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "entloc/hilbert.hpp"

namespace entloc {

const char* set_name(SeparableSet s) {
    switch (s) {
        case SeparableSet::I: return "I";
        case SeparableSet::II: return "II";
        case SeparableSet::III: return "III";
        case SeparableSet::Mode: return "mode";
        case SeparableSet::Ssr: return "SSR";
    }
    return "?";
}

SeparableSet parse_set(const std::string& text) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "i" || t == "1" || t == "sep-i") return SeparableSet::I;
    if (t == "ii" || t == "2" || t == "sep-ii") return SeparableSet::II;
    if (t == "iii" || t == "3" || t == "sep-iii") return SeparableSet::III;
    if (t == "mode") return SeparableSet::Mode;
    if (t == "ssr") return SeparableSet::Ssr;
    throw InputError("unknown separable set '" + text + "' (expected I, II, III, mode, SSR)");
}

Family parse_family(const std::string& text) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (Family f : {Family::SepI, Family::SepIIOrthogonal, Family::SepIII, Family::Mode, Family::Ssr}) {
        std::string name = family_name(f);
        for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (t == name) return f;
    }
    if (t == "orthogonal") return Family::SepIIOrthogonal;
    try {
        const SeparableSet s = parse_set(text);
        if (s != SeparableSet::II) return families_of(s).front();
    } catch (const InputError&) {
    }
    throw InputError("unknown family '" + text + "' (expected sep-I, sep-II-orthogonal, sep-III, mode, SSR)");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::SepI: return "sep-I";
        case Family::SepIIOrthogonal: return "sep-II-orthogonal";
        case Family::SepIII: return "sep-III";
        case Family::Mode: return "mode";
        case Family::Ssr: return "ssr";
    }
    return "?";
}

Basis set_basis(SeparableSet s) {
    switch (s) {
        case SeparableSet::I:
        case SeparableSet::II:
        case SeparableSet::Mode: return Basis::Sym3;
        case SeparableSet::III:
        case SeparableSet::Ssr: return Basis::Sym10;
    }
    return Basis::Sym3;
}

std::vector<Family> families_of(SeparableSet s) {
    switch (s) {
        case SeparableSet::I: return {Family::SepI};
        case SeparableSet::II: return {Family::SepI, Family::SepIIOrthogonal};
        case SeparableSet::III: return {Family::SepIII};
        case SeparableSet::Mode: return {Family::Mode};
        case SeparableSet::Ssr: return {Family::Ssr};
    }
    return {};
}

std::size_t family_param_count(Family f) {
    switch (f) {
        case Family::SepI:
        case Family::SepIIOrthogonal: return 2;
        case Family::SepIII: return 9;
        case Family::Mode: return 1;
        case Family::Ssr: return 10;
    }
    return 0;
}

int family_occupation_count(Family f) { return f == Family::Mode ? 3 : 1; }

namespace {

Vec left(cplx x0, cplx x1) {
    Vec v = Vec::Zero(4);
    v(0) = x0;
    v(1) = x1;
    return v;
}

Vec right(cplx x0, cplx x1) {
    Vec v = Vec::Zero(4);
    v(2) = x0;
    v(3) = x1;
    return v;
}

}  // namespace

State build_family_state(const FamilyPoint& p) {
    if (p.params.size() != family_param_count(p.family)) {
        throw DimensionError(std::string("wrong parameter count for family ") + family_name(p.family));
    }
    const auto& c = p.params;
    const double r2 = std::sqrt(2.0);
    switch (p.family) {
        case Family::SepI: {
            Vec v(3);
            v << c[0] * c[0], c[1] * c[1], r2 * c[0] * c[1];
            return State(Basis::Sym3, std::move(v));
        }
        case Family::SepIIOrthogonal: {
            Vec v(3);
            v << c[0] * std::conj(c[1]), -c[1] * std::conj(c[0]), (std::norm(c[1]) - std::norm(c[0])) / r2;
            return State(Basis::Sym3, std::move(v));
        }
        case Family::SepIII: {
            const Vec u = left(c[0], c[1]);
            const Vec v = right(c[2], c[3]);
            Vec out = c[4] * symmetrize_product(u, u).amplitudes() + c[5] * symmetrize_product(u, v).amplitudes();
            out(sym_index(4, 2, 2)) += c[6];
            out(sym_index(4, 2, 3)) += c[7];
            out(sym_index(4, 3, 3)) += c[8];
            return State(Basis::Sym10, std::move(out));
        }
        case Family::Mode: {
            if (p.occupation < 0 || p.occupation > 2) throw InputError("mode occupation index must be 0..2");
            Vec v = Vec::Zero(3);
            v(p.occupation) = c[0];
            return State(Basis::Sym3, std::move(v));
        }
        case Family::Ssr: {
            Vec out = symmetrize_product(left(c[3], c[4]), right(c[5], c[6])).amplitudes();
            out(sym_index(4, 0, 0)) += c[0];
            out(sym_index(4, 1, 1)) += c[1];
            out(sym_index(4, 0, 1)) += c[2];
            out(sym_index(4, 2, 2)) += c[7];
            out(sym_index(4, 3, 3)) += c[8];
            out(sym_index(4, 2, 3)) += c[9];
            return State(Basis::Sym10, std::move(out));
        }
    }
    throw InputError("unknown family");
}

FamilyPoint draw_family_point(Family f, Rng& rng) {
    FamilyPoint p;
    p.family = f;
    p.params.resize(family_param_count(f));
    for (auto& x : p.params) x = complex_normal(rng);
    if (f == Family::Mode) p.occupation = static_cast<int>(std::uniform_int_distribution<int>(0, 2)(rng));
    return p;
}

Sample sample_family(Family f, Rng& rng) {
    for (;;) {
        FamilyPoint p = draw_family_point(f, rng);
        State s = build_family_state(p);
        if (s.norm() > kStateEps) return Sample{s.normalized(), std::move(p)};
    }
}

Sample sample_separable(SeparableSet s, Rng& rng) {
    const auto fams = families_of(s);
    Family f = fams.front();
    if (fams.size() > 1) {
        const auto pick = std::uniform_int_distribution<std::size_t>(0, fams.size() - 1)(rng);
        f = fams[pick];
    }
    return sample_family(f, rng);
}

}  // namespace entloc
