#pragma once

#include "gysin.hpp"
#include "presentation.hpp"
#include "presets.hpp"

#include <json.hpp>

#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace chowring {

using nlohmann::json;

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
inline json int_json(const BigInt& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return x.str();
}

inline json vector_json(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(int_json(x));
    return a;
}

inline json matrix_json(const IntMatrix& M) {
    json rows = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) rows.push_back(vector_json(M.row(i)));
    return rows;
}

inline json class_json(const CosetTable& t, int id) {
    const CosetRep& r = t.rep(id);
    return {{"label", class_label(t, id)}, {"length", r.length}, {"index", r.index}, {"word", r.word}};
}

inline json combination_json(const CosetTable& t, const SchubertCombination& c) {
    json terms = json::array();
    for (const auto& [id, x] : c.terms) {
        json e = class_json(t, id);
        e["coefficient"] = int_json(x);
        terms.push_back(e);
    }
    return {{"degree", c.degree}, {"text", to_string(t, c)}, {"terms", terms}};
}

inline json space_json(const SpaceConfig& s, const CosetTable& t) {
    return {{"name", s.name}, {"root_system", s.root_label()}, {"nodes", s.nodes}, {"label", t.label()}};
}

inline json binding_json(const CosetTable& t, const GeneratorBinding& b) {
    json gens = json::array();
    for (std::size_t i = 0; i < b.size(); ++i) {
        json g = class_json(t, b.generators[i].rep);
        g["name"] = b.generators[i].name;
        g["degree"] = b.ring->degree(i);
        gens.push_back(g);
    }
    return gens;
}

inline json coset_table_json(const SpaceConfig& s, const CosetTable& t, std::optional<int> only_degree = std::nullopt) {
    json reps = json::array();
    for (std::size_t id = 0; id < t.size(); ++id) {
        const CosetRep& r = t.rep(static_cast<int>(id));
        if (only_degree && r.length != *only_degree) continue;
        json e = class_json(t, static_cast<int>(id));
        e["id"] = id;
        e["point"] = r.point;
        reps.push_back(e);
    }
    json counts = json::array();
    for (int r = 0; r <= t.top_degree(); ++r) counts.push_back(t.beta(r));
    return {{"schema", "chowring.coset-table/1"},
            {"space", space_json(s, t)},
            {"truncated", t.truncated()},
            {"size", t.size()},
            {"top_degree", t.top_degree()},
            {"counts_by_degree", counts},
            {"representatives", reps}};
}

inline std::string coset_table_text(const SpaceConfig& s, const CosetTable& t, std::optional<int> only_degree = std::nullopt) {
    std::ostringstream out;
    out << "space " << s.name << " (" << t.label() << ")" << (t.truncated() ? ", truncated" : "") << "\n";
    out << "classes " << t.size() << ", top degree " << t.top_degree() << "\n";
    out << "counts by degree:";
    for (int r = 0; r <= t.top_degree(); ++r) out << " " << t.beta(r);
    out << "\n";
    for (std::size_t id = 0; id < t.size(); ++id) {
        const CosetRep& r = t.rep(static_cast<int>(id));
        if (only_degree && r.length != *only_degree) continue;
        out << std::left << std::setw(10) << class_label(t, static_cast<int>(id)) << " " << word_to_string(r.word) << "\n";
    }
    return out.str();
}

inline json group_json(const GroupStructure& g) {
    json tor = json::array();
    for (const auto& d : g.torsion) tor.push_back(int_json(d));
    return {{"free_rank", g.free_rank}, {"torsion", tor}, {"text", g.to_string()}};
}

inline json ring_rule_json(const CosetTable& t, const GysinComputation& g, const RingRule& r) {
    json factors = json::array();
    for (int id : r.factors) factors.push_back(class_label(t, id));
    json terms = json::array();
    const auto& basis = g.even(r.degree).basis;
    for (std::size_t j = 0; j < r.coefficients.size(); ++j) {
        if (r.coefficients[j] == 0) continue;
        terms.push_back({{"class", class_label(t, basis[j])}, {"coefficient", int_json(r.coefficients[j])},
                         {"modulus", int_json(r.orders[j])}});
    }
    return {{"factors", factors}, {"degree", r.degree}, {"terms", terms}};
}

inline std::string ring_rule_text(const CosetTable& t, const GysinComputation& g, const RingRule& r) {
    std::ostringstream out;
    for (std::size_t i = 0; i < r.factors.size(); ++i) out << (i ? "*" : "") << class_label(t, r.factors[i]);
    out << " = ";
    const auto& basis = g.even(r.degree).basis;
    bool any = false;
    for (std::size_t j = 0; j < r.coefficients.size(); ++j) {
        if (r.coefficients[j] == 0) continue;
        BigInt c = r.coefficients[j];
        out << (any ? (c < 0 ? " - " : " + ") : (c < 0 ? "-" : ""));
        BigInt a = abs_value(c);
        if (a != 1) out << a << "*";
        out << class_label(t, basis[j]);
        if (r.orders[j] != 0) out << " (mod " << r.orders[j] << ")";
        any = true;
    }
    if (!any) out << "0";
    return out.str();
}

struct CohomologyOptions {
    std::optional<int> degree;  // real degree
    bool rules = false;
};

inline json cohomology_json(const SpaceConfig& s, const GysinComputation& g, const GeneratorBinding* binding,
                            const CohomologyOptions& opt = {}) {
    const CosetTable& t = g.engine().table();
    json groups = json::array();
    const int N = t.top_degree();
    int even_free = 0, odd_free = 0;
    for (int q = 0; q <= 2 * N + 1; ++q) {
        GroupStructure G = g.group(q);
        if (q % 2 == 0) even_free += G.free_rank; else odd_free += G.free_rank;
        if (G.trivial() || (opt.degree && *opt.degree != q)) continue;
        json e = {{"degree", q}, {"group", group_json(G)}};
        if (q % 2 == 0) {
            const auto& d = g.even(q / 2);
            json basis = json::array();
            for (std::size_t j = 0; j < d.basis.size(); ++j) {
                json c = class_json(t, d.basis[j]);
                c["order"] = int_json(g.order_of_basis(q / 2, j));
                basis.push_back(c);
            }
            e["basis"] = basis;
        } else {
            json ker = json::array();
            for (const auto& x : g.odd((q - 1) / 2).kernel_basis) ker.push_back(combination_json(t, x));
            e["kernel_basis"] = ker;
        }
        groups.push_back(e);
    }
    json out = {{"schema", "chowring.cohomology/1"},
                {"space", space_json(s, t)},
                {"groups", groups},
                {"even_free_rank", even_free},
                {"odd_free_rank", odd_free}};
    json mods = json::array();
    for (const auto& m : g.odd_module_generators())
        mods.push_back({{"degree", 2 * m.k + 1}, {"class", combination_json(t, m.klass)}, {"order", int_json(m.order)}});
    out["odd_module_generators"] = mods;
    if (binding) {
        out["generators"] = binding_json(t, *binding);
        json hs = json::array();
        for (const auto& h : g.even_ring_relations(*binding))
            hs.push_back({{"degree", h.degree}, {"polynomial", to_string(h.poly)}, {"order", int_json(h.order)}});
        out["even_ring_relations"] = hs;
    }
    if (opt.rules) {
        json rules = json::array();
        for (const auto& r : g.even_ring_table()) rules.push_back(ring_rule_json(t, g, r));
        out["even_ring_table"] = rules;
    }
    return out;
}

inline std::string cohomology_text(const SpaceConfig& s, const GysinComputation& g, const GeneratorBinding* binding,
                                   const CohomologyOptions& opt = {}) {
    const CosetTable& t = g.engine().table();
    std::ostringstream out;
    out << "integral cohomology of the circle bundle over " << s.name << " (" << t.label() << ")\n";
    out << std::left << std::setw(8) << "degree" << std::setw(12) << "group" << "basis\n";
    const int N = t.top_degree();
    for (int q = 0; q <= 2 * N + 1; ++q) {
        GroupStructure G = g.group(q);
        if (G.trivial() || (opt.degree && *opt.degree != q)) continue;
        out << std::setw(8) << ("H^" + std::to_string(q)) << std::setw(12) << G.to_string();
        if (q % 2 == 0) {
            const auto& d = g.even(q / 2);
            for (std::size_t j = 0; j < d.basis.size(); ++j) out << (j ? ", " : "") << "p*" << class_label(t, d.basis[j]);
        } else {
            const auto& ker = g.odd((q - 1) / 2).kernel_basis;
            for (std::size_t j = 0; j < ker.size(); ++j) out << (j ? ", " : "") << "beta^-1(" << to_string(t, ker[j]) << ")";
        }
        out << "\n";
    }
    if (binding) {
        out << "even ring relations:\n";
        for (const auto& h : g.even_ring_relations(*binding)) {
            out << "  h" << h.degree << " = " << to_string(h.poly);
            if (h.order != 0) out << "   (order " << h.order << " modulo lower relations)";
            out << "\n";
        }
    }
    if (opt.rules) {
        out << "even ring table:\n";
        for (const auto& r : g.even_ring_table()) out << "  " << ring_rule_text(t, g, r) << "\n";
    }
    return out.str();
}

inline json presentation_json(const SpaceConfig& s, const CosetTable& t, const Presentation& p) {
    json rels = json::array();
    for (const auto& r : p.relations)
        rels.push_back({{"name", r.name}, {"degree", r.degree}, {"polynomial", to_string(r.poly)}, {"origin", r.origin}});
    json hs = json::array();
    for (const auto& h : p.even_relations)
        hs.push_back({{"degree", h.degree}, {"polynomial", to_string(h.poly)}, {"order", int_json(h.order)}});
    json odd = json::array();
    for (std::size_t j = 0; j < p.odd_generators.size(); ++j)
        odd.push_back({{"degree", 2 * p.odd_generators[j].k + 1},
                       {"class", combination_json(t, p.odd_generators[j].klass)},
                       {"lift", to_string(p.odd_lifts[j])},
                       {"eliminated", static_cast<bool>(p.odd_eliminated[j])}});
    json cert = json::array();
    for (const auto& c : p.certificate)
        cert.push_back({{"degree", 2 * c.degree}, {"b", c.b}, {"delta", c.delta}, {"rank", c.beta}, {"ok", c.ok}});
    return {{"schema", "chowring.presentation/1"},
            {"space", space_json(s, t)},
            {"generators", binding_json(t, p.binding)},
            {"relations", rels},
            {"even_ring_relations", hs},
            {"odd_classes", odd},
            {"certificate", cert}};
}

inline std::string presentation_text(const SpaceConfig& s, const CosetTable& t, const Presentation& p) {
    std::ostringstream out;
    out << "Chow ring of " << s.name << " (" << t.label() << ")\n";
    out << "generators:\n";
    for (std::size_t i = 0; i < p.binding.size(); ++i) {
        int id = p.binding.generators[i].rep;
        out << "  " << p.binding.generators[i].name << " = " << class_label(t, id) << " = sigma"
            << word_to_string(t.rep(id).word) << "\n";
    }
    out << "relations:\n";
    for (const auto& r : p.relations) out << "  " << r.name << " = " << to_string(r.poly) << "\n";
    if (!p.odd_generators.empty()) {
        out << "odd classes:\n";
        for (std::size_t j = 0; j < p.odd_generators.size(); ++j)
            out << "  H^" << 2 * p.odd_generators[j].k + 1 << ": " << to_string(t, p.odd_generators[j].klass)
                << (p.odd_eliminated[j] ? "   (omega*g in the ideal of the others)" : "   (omega*g kept)") << "\n";
    }
    out << "certificate (degree: b - delta = rank):\n";
    for (const auto& c : p.certificate)
        out << "  " << 2 * c.degree << ": " << c.b << " - " << c.delta << " = " << c.beta << (c.ok ? "" : "  FAILED") << "\n";
    return out.str();
}

inline json giambelli_json(const SpaceConfig& s, const CosetTable& t, const GeneratorBinding& b, const GiambelliResult& g) {
    json polys = json::array();
    for (std::size_t k = 0; k < g.polynomials.size(); ++k) {
        json c = class_json(t, t.id(g.degree, static_cast<int>(k) + 1));
        c["polynomial"] = to_string(g.polynomials[k]);
        polys.push_back(c);
    }
    json inv = json::array();
    for (const auto& d : g.invariant_factors) inv.push_back(int_json(d));
    return {{"schema", "chowring.giambelli/1"}, {"space", space_json(s, t)}, {"generators", binding_json(t, b)},
            {"degree", g.degree}, {"integral", g.integral}, {"invariant_factors", inv}, {"polynomials", polys}};
}

inline std::string giambelli_text(const CosetTable& t, const GiambelliResult& g) {
    std::ostringstream out;
    out << "Schubert classes of degree " << g.degree << (g.integral ? "" : " (rational coefficients needed)") << ":\n";
    for (std::size_t k = 0; k < g.polynomials.size(); ++k)
        out << "  " << class_label(t, t.id(g.degree, static_cast<int>(k) + 1)) << " = " << to_string(g.polynomials[k]) << "\n";
    return out.str();
}

inline json chevalley_json(const SpaceConfig& s, const CosetTable& t, int k, const IntMatrix& A) {
    json rows = json::array(), cols = json::array();
    for (int i = 1; i <= t.beta(k - 1); ++i) rows.push_back(class_label(t, t.id(k - 1, i)));
    for (int i = 1; i <= t.beta(k); ++i) cols.push_back(class_label(t, t.id(k, i)));
    return {{"schema", "chowring.chevalley/1"}, {"space", space_json(s, t)}, {"degree", k},
            {"rows", rows}, {"columns", cols}, {"matrix", matrix_json(A)}};
}

inline std::string matrix_text(const IntMatrix& M) {
    std::size_t w = 1;
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) w = std::max(w, M(i, j).str().size());
    std::ostringstream out;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < M.cols(); ++j) out << (j ? " " : "") << std::right << std::setw(static_cast<int>(w)) << M(i, j).str();
        out << "]\n";
    }
    return out.str();
}

}  // namespace chowring
