#pragma once

#include "disk_cache.hpp"
#include "gysin.hpp"
#include "presentation.hpp"
#include "presets.hpp"
#include "report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace chowring {

struct RunConfig {
    std::string preset;
    std::string type;
    int rank = 0;
    std::string nodes;
    std::string gens;
    std::optional<int> degree;
    std::optional<int> max_length;
    std::string out = "text";
    std::string cache_dir;
    unsigned jobs = 1;
    // command specific
    std::string poly;
    std::string word;
    std::string index;
    std::string vars;
    std::string relations;
    bool rules = false;
    bool full_certificate = false;
    bool integral_only = false;
    std::size_t sample = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace cli_detail {

struct Session {
    SpaceConfig space;
    std::shared_ptr<const CosetTable> table;
    std::unique_ptr<SchubertEngine> engine;
};

inline SpaceConfig resolve_space(const RunConfig& c) {
    SpaceConfig s;
    if (!c.preset.empty()) {
        if (!c.type.empty() || c.rank || !c.nodes.empty()) throw UsageError("--preset excludes --type/--rank/--nodes");
        s = parse_space(c.preset);
    } else {
        if (c.type.size() != 1 || c.rank <= 0 || c.nodes.empty())
            throw UsageError("give --preset, or all of --type, --rank and --nodes");
        s = custom_space(c.type[0], c.rank, parse_node_list(c.nodes));
    }
    if (!c.gens.empty()) s.generators = parse_generator_spec(c.gens);
    return s;
}

inline std::string cache_directory(const RunConfig& c) {
    if (!c.cache_dir.empty()) return c.cache_dir;
    if (const char* env = std::getenv("CHOWRING_CACHE_DIR")) return env;
    return "";
}

inline Session open_session(const RunConfig& c, bool need_engine = true) {
    Session s;
    s.space = resolve_space(c);
    s.table = make_table(s.space, need_engine ? std::nullopt : c.max_length);
    if (need_engine) {
        s.engine = std::make_unique<SchubertEngine>(s.table, std::vector<BigInt>{}, c.jobs);
        std::string dir = cache_directory(c);
        if (!dir.empty()) s.engine->set_cache(std::make_shared<const DiskCache>(dir));
    }
    return s;
}

inline bool as_json(const RunConfig& c) {
    if (c.out == "json") return true;
    if (c.out == "text") return false;
    throw UsageError("--out must be json or text");
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// Class by --word or --index r,i; -1 when neither is given.
inline int select_class(const CosetTable& t, const RunConfig& c) {
    if (!c.word.empty() && !c.index.empty()) throw UsageError("--word and --index are exclusive");
    if (!c.word.empty()) {
        WeylWord w = parse_word(c.word);
        int id = t.find_word(w);
        if (id < 0) throw std::invalid_argument("word " + word_to_string(w) + " is not a minimized coset representative");
        return id;
    }
    if (!c.index.empty()) {
        auto v = parse_node_list(c.index);
        if (v.size() != 2) throw UsageError("--index expects r,i");
        if (v[0] < 0 || v[0] > t.top_degree() || v[1] < 1 || v[1] > t.beta(v[0]))
            throw std::invalid_argument("no class s[" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "]");
        return t.id(v[0], v[1]);
    }
    return -1;
}

// Parses "y1:2, y5:10" (real degrees).
inline RingPtr parse_vars(const std::string& text) {
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("--vars expects name:degree pairs");
        std::string name = item.substr(0, colon);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        names.push_back(name);
        degrees.push_back(std::stoi(item.substr(colon + 1)));
    }
    return make_ring(names, degrees);
}

inline std::vector<IntPolynomial> parse_relations(const RingPtr& ring, const std::string& text) {
    std::vector<IntPolynomial> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        IntPolynomial p = parse_int_polynomial(ring, item);
        if (!p.is_homogeneous()) throw std::invalid_argument("relation '" + item + "' is not homogeneous");
        out.push_back(p);
    }
    return out;
}

inline int cmd_cosets(const RunConfig& c, std::ostream& out) {
    Session s = open_session(c, false);
    if (as_json(c)) emit(out, coset_table_json(s.space, *s.table, c.degree));
    else out << coset_table_text(s.space, *s.table, c.degree);
    return 0;
}

inline int cmd_coeff(const RunConfig& c, std::ostream& out) {
    if (c.poly.empty()) throw UsageError("coeff needs --poly");
    Session s = open_session(c);
    GeneratorBinding b = binding_for(s.space, *s.engine);
    IntPolynomial f = parse_int_polynomial(b.ring, c.poly);
    SchubertCombination e = s.engine->expand_polynomial(b, f);
    int id = select_class(*s.table, c);
    json j = {{"schema", "chowring.coefficient/1"}, {"space", space_json(s.space, *s.table)},
              {"generators", binding_json(*s.table, b)}, {"polynomial", to_string(f)}};
    if (id >= 0) {
        if (2LL * s.table->rep(id).length != (f.is_zero() ? 2LL * s.table->rep(id).length : f.degree()))
            throw std::invalid_argument("class degree differs from the polynomial degree");
        j["class"] = class_json(*s.table, id);
        j["coefficient"] = int_json(e.coefficient(id));
    } else {
        j["expansion"] = combination_json(*s.table, e);
    }
    if (as_json(c)) {
        emit(out, j);
    } else if (id >= 0) {
        out << "coefficient of " << class_label(*s.table, id) << " in " << to_string(f) << ": " << e.coefficient(id) << "\n";
    } else {
        out << to_string(f) << " = " << to_string(*s.table, e) << "\n";
    }
    return 0;
}

inline int cmd_chevalley(const RunConfig& c, std::ostream& out) {
    if (!c.degree) throw UsageError("chevalley needs --degree k");
    Session s = open_session(c);
    const int k = *c.degree;
    if (k < 1 || k > s.table->top_degree())
        throw std::invalid_argument("degree must lie in 1.." + std::to_string(s.table->top_degree()));
    IntMatrix A = s.engine->chevalley_matrix(k);
    if (as_json(c)) {
        emit(out, chevalley_json(s.space, *s.table, k, A));
    } else {
        out << "A_" << k << " (rows: degree " << k - 1 << " classes, columns: degree " << k << " classes)\n" << matrix_text(A);
    }
    return 0;
}

inline int cmd_cohomology(const RunConfig& c, std::ostream& out) {
    Session s = open_session(c);
    GysinComputation g(*s.engine);
    std::optional<GeneratorBinding> b;
    if (s.space.nodes.size() == 1) b = binding_for(s.space, *s.engine);
    CohomologyOptions opt{c.degree, c.rules};
    if (as_json(c)) emit(out, cohomology_json(s.space, g, b ? &*b : nullptr, opt));
    else out << cohomology_text(s.space, g, b ? &*b : nullptr, opt);
    return 0;
}

inline Presentation build_presentation(Session& s, const RunConfig& c) {
    GeneratorBinding b = binding_for(s.space, *s.engine);
    PresentationOptions opt;
    opt.full_certificate = c.full_certificate;
    return schubert_presentation(*s.engine, b, s.space.name, opt);
}

inline int cmd_present(const RunConfig& c, std::ostream& out) {
    Session s = open_session(c);
    Presentation p = build_presentation(s, c);
    if (as_json(c)) emit(out, presentation_json(s.space, *s.table, p));
    else out << presentation_text(s.space, *s.table, p);
    return 0;
}

inline int cmd_giambelli(const RunConfig& c, std::ostream& out) {
    if (!c.degree) throw UsageError("giambelli needs --degree m");
    Session s = open_session(c);
    if (*c.degree < 0 || *c.degree > s.table->top_degree())
        throw std::invalid_argument("degree must lie in 0.." + std::to_string(s.table->top_degree()));
    GeneratorBinding b = binding_for(s.space, *s.engine);
    GiambelliResult g = giambelli(*s.engine, b, *c.degree, !c.integral_only);
    if (as_json(c)) emit(out, giambelli_json(s.space, *s.table, b, g));
    else out << giambelli_text(*s.table, g);
    return 0;
}

inline int cmd_deficiency(const RunConfig& c, std::ostream& out) {
    if (!c.degree) throw UsageError("deficiency needs --degree m (polynomial degree)");
    const long long m = *c.degree;
    RingPtr ring;
    std::vector<IntPolynomial> rels;
    std::optional<int> rank;
    json j = {{"schema", "chowring.deficiency/1"}};
    if (!c.vars.empty()) {
        ring = parse_vars(c.vars);
        rels = parse_relations(ring, c.relations);
    } else {
        Session s = open_session(c);
        if (!c.relations.empty()) {
            ring = binding_for(s.space, *s.engine).ring;
            rels = parse_relations(ring, c.relations);
        } else {
            Presentation p = build_presentation(s, c);
            ring = p.binding.ring;
            rels = polys_of(p.relations);
        }
        if (m % 2 == 0 && m / 2 <= s.table->top_degree()) rank = s.table->beta(static_cast<int>(m / 2));
        else if (m > 0) rank = 0;
        j["space"] = space_json(s.space, *s.table);
    }
    IntMatrix M = relation_matrix(ring, rels, m);
    std::size_t b = monomial_basis(ring->degrees(), m).size();
    std::size_t d = deficiency(ring, rels, m);
    json rj = json::array();
    for (const auto& r : rels) rj.push_back(to_string(r));
    j["relations"] = rj;
    j["degree"] = m;
    j["b"] = b;
    j["delta"] = d;
    j["rows"] = M.rows();
    if (rank) {
        j["rank"] = *rank;
        j["certified"] = static_cast<long long>(b) - static_cast<long long>(d) == *rank;
    }
    if (as_json(c)) {
        emit(out, j);
    } else {
        out << "b(" << m << ") = " << b << ", delta_" << m << " = " << d;
        if (rank) out << ", rank = " << *rank << (j["certified"].get<bool>() ? " (b - delta = rank)" : " (b - delta != rank)");
        out << "\n";
    }
    return 0;
}

inline int cmd_rational(const RunConfig& c, std::ostream& out) {
    RingPtr ring;
    std::vector<IntPolynomial> rels;
    json j = {{"schema", "chowring.rational-homotopy/1"}};
    if (!c.vars.empty()) {
        ring = parse_vars(c.vars);
        rels = parse_relations(ring, c.relations);
    } else {
        Session s = open_session(c);
        Presentation p = build_presentation(s, c);
        ring = p.binding.ring;
        rels = polys_of(p.relations);
        j["space"] = space_json(s.space, *s.table);
    }
    RationalHomotopyResult r = rational_homotopy(ring, rels);
    j["degrees"] = r.degrees;
    j["eliminated"] = r.eliminated;
    if (as_json(c)) {
        emit(out, j);
    } else {
        out << "rational homotopy in degrees:";
        for (int d : r.degrees) out << " " << d;
        out << "\n";
    }
    return 0;
}

// Recomputes a cached value from its key with a fresh, cache-free engine.
inline json recompute_cache_entry(const DiskCache::Entry& e) {
    RootSystem rs = build_root_system(e.key.at("root_system").get<std::string>());
    auto table = std::make_shared<const CosetTable>(std::make_shared<const RootSystem>(rs),
                                                    e.key.at("nodes").get<std::vector<int>>());
    SchubertEngine engine(table);
    auto id_of = [&](const json& w) {
        int id = table->find_word(w.get<WeylWord>());
        if (id < 0) throw CacheError("cache key names an unknown class");
        return id;
    };
    if (e.kind == "product")
        return SchubertEngine::combination_to_cache_json(engine.multiply(schubert_class(*table, id_of(e.key.at("u"))),
                                                                         schubert_class(*table, id_of(e.key.at("v")))));
    if (e.kind == "expansion") {
        std::vector<int> ids;
        for (const auto& f : e.key.at("factors")) {
            int id = id_of(f.at("word"));
            for (int k = 0; k < f.at("power").get<int>(); ++k) ids.push_back(id);
        }
        return SchubertEngine::combination_to_cache_json(engine.product(ids));
    }
    throw CacheError("unknown cache entry kind " + e.kind);
}

inline int cmd_cache(const std::string& action, const RunConfig& c, std::ostream& out) {
    std::string dir = cache_directory(c);
    if (dir.empty()) throw UsageError("cache commands need --cache-dir or CHOWRING_CACHE_DIR");
    DiskCache cache(dir);
    json j = {{"schema", "chowring.cache-report/1"}, {"directory", dir}, {"action", action}};
    if (action == "purge") {
        std::size_t n = cache.purge();
        j["removed"] = n;
        if (as_json(c)) emit(out, j);
        else out << "removed " << n << " files\n";
        return 0;
    }
    auto entries = cache.list();
    if (action == "list") {
        json list = json::array();
        for (const auto& e : entries) list.push_back({{"kind", e.kind}, {"key", e.key}, {"file", e.path.filename().string()}});
        j["entries"] = list;
        if (as_json(c)) {
            emit(out, j);
        } else {
            out << entries.size() << " entries\n";
            for (const auto& e : entries) out << "  " << e.kind << " " << e.key.dump() << "\n";
        }
        return 0;
    }
    // verify: deterministic sample of the first `sample` entries in path order (0 = all)
    std::size_t n = c.sample ? std::min(c.sample, entries.size()) : entries.size();
    std::size_t bad = 0;
    json failures = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& e = entries[i];
        json stored = *cache.value_at(e.path);
        json fresh = recompute_cache_entry(e);
        if (stored != fresh) {
            ++bad;
            failures.push_back(e.path.filename().string());
        }
    }
    j["checked"] = n;
    j["total"] = entries.size();
    j["failures"] = failures;
    if (as_json(c)) emit(out, j);
    else out << "checked " << n << " of " << entries.size() << " entries, " << bad << " mismatches\n";
    if (bad) throw CacheError(std::to_string(bad) + " cache entries disagree with recomputation");
    return 0;
}

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const UsageError*>(&e) || dynamic_cast<const CLI::Error*>(&e)) return 2;
    if (dynamic_cast<const UnsolvableError*>(&e) || dynamic_cast<const UnsupportedError*>(&e)) return 3;
    if (dynamic_cast<const CertificateError*>(&e) || dynamic_cast<const ConsistencyError*>(&e)) return 4;
    if (dynamic_cast<const CacheError*>(&e)) return 5;
    return 1;
}

inline std::string error_kind(const std::exception& e) {
    switch (exit_code_for(e)) {
        case 2: return "usage";
        case 3: return "unsolvable";
        case 4: return "certificate";
        case 5: return "cache";
        default: return "invalid-input";
    }
}

}  // namespace cli_detail

// Entry point shared by the executable and the tests. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    RunConfig c;
    CLI::App app{"Schubert calculus, integral cohomology and Chow ring presentations of generalized Grassmannians"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    auto common = [&](CLI::App* sub, bool engine = true) {
        sub->add_option("--preset", c.preset, "Space: F4/C3, F4/B3, E6/A6, E6/D5, E7/E6, E7/D6, E8/E7, <type><rank>/B or <type><rank>/{k,...}");
        sub->add_option("--type", c.type, "Simple type letter A-G");
        sub->add_option("--rank", c.rank, "Rank of the simple type");
        sub->add_option("--nodes", c.nodes, "Dynkin nodes K, comma separated");
        sub->add_option("--out", c.out, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));
        if (engine) {
            sub->add_option("--gens", c.gens, "Generators as 'y1=[4]; y4=[3,2,3,4]' (default: preset or automatic)");
            sub->add_option("--cache-dir", c.cache_dir, "On-disk cache directory (default: $CHOWRING_CACHE_DIR)");
            sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
        }
    };

    auto* cosets = app.add_subcommand("cosets", "List minimal coset representatives with minimized words");
    common(cosets, false);
    cosets->add_option("--degree", c.degree, "Only this length");
    cosets->add_option("--max-length", c.max_length, "Stop enumeration after this length")->check(CLI::NonNegativeNumber);

    auto* coeff = app.add_subcommand("coeff", "Expand a polynomial in the generators in the Schubert basis");
    common(coeff);
    coeff->add_option("--poly", c.poly, "Polynomial in the generator names")->required();
    coeff->add_option("--word", c.word, "Class by minimized word, e.g. 3,2,1");
    coeff->add_option("--index", c.index, "Class by r,i");

    auto* chev = app.add_subcommand("chevalley", "Matrix of multiplication by the degree-1 class");
    common(chev);
    chev->add_option("--degree", c.degree, "Target degree k")->required();

    auto* coh = app.add_subcommand("cohomology", "Integral cohomology of the circle bundle via the Gysin sequence");
    common(coh);
    coh->add_option("--degree", c.degree, "Only this cohomological degree");
    coh->add_flag("--rules", c.rules, "Include the even-ring multiplication table");

    auto* pres = app.add_subcommand("present", "Chow ring presentation by generators and relations");
    common(pres);
    pres->add_flag("--full-certificate", c.full_certificate, "Certify every degree up to top + largest generator degree");

    auto* giam = app.add_subcommand("giambelli", "Schubert classes as polynomials in the generators");
    common(giam);
    giam->add_option("--degree", c.degree, "Degree m")->required();
    giam->add_flag("--integral-only", c.integral_only, "Fail instead of using rational coefficients");

    auto* defi = app.add_subcommand("deficiency", "b(m), delta_m and the rank check for a relation set");
    common(defi);
    defi->add_option("--degree", c.degree, "Polynomial degree m (twice the Schubert degree)")->required();
    defi->add_option("--vars", c.vars, "Standalone ring, e.g. 'y1:2,y5:10,y9:18'");
    defi->add_option("--relations", c.relations, "Relations separated by ';' (default: the computed presentation)");
    defi->add_flag("--full-certificate", c.full_certificate, "Certify the presentation in every degree");

    auto* rat = app.add_subcommand("rational-homotopy", "Degrees of the nonzero rational homotopy groups");
    common(rat);
    rat->add_option("--vars", c.vars, "Standalone ring, e.g. 'y1:2,y6:12'");
    rat->add_option("--relations", c.relations, "Relations separated by ';'");

    auto* cache = app.add_subcommand("cache", "Inspect the on-disk cache");
    cache->require_subcommand(1);
    std::string action;
    for (const char* name : {"list", "verify", "purge"}) {
        auto* sub = cache->add_subcommand(name, std::string(name) + " cache entries");
        sub->add_option("--cache-dir", c.cache_dir, "Cache directory (default: $CHOWRING_CACHE_DIR)");
        sub->add_option("--out", c.out, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));
        if (std::string(name) == "verify") sub->add_option("--sample", c.sample, "Check only the first N entries (0 = all)");
        sub->callback([&action, name] { action = name; });
    }

    std::vector<const char*> argv{"chowring"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << json{{"schema", "chowring.error/1"}, {"kind", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }
    try {
        if (*cosets) return cmd_cosets(c, out);
        if (*coeff) return cmd_coeff(c, out);
        if (*chev) return cmd_chevalley(c, out);
        if (*coh) return cmd_cohomology(c, out);
        if (*pres) return cmd_present(c, out);
        if (*giam) return cmd_giambelli(c, out);
        if (*defi) return cmd_deficiency(c, out);
        if (*rat) return cmd_rational(c, out);
        if (*cache) return cmd_cache(action, c, out);
    } catch (const std::exception& e) {
        err << json{{"schema", "chowring.error/1"}, {"kind", error_kind(e)}, {"message", e.what()}}.dump() << "\n";
        return exit_code_for(e);
    }
    return 2;
}

}  // namespace chowring
