#pragma once

#include "int_linalg.hpp"
#include "lie_data.hpp"
#include "schubert_engine.hpp"
#include "weyl_coset.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chowring {

// A homogeneous space G/P_K with an optional fixed choice of ring generators.
struct SpaceConfig {
    std::string name;  // e.g. "F4/C3", or a generated label such as "A3/{2}"
    char type = 'A';
    int rank = 1;
    std::vector<int> nodes;
    std::vector<std::pair<std::string, WeylWord>> generators;  // empty: choose automatically

    std::string root_label() const { return std::string(1, type) + std::to_string(rank); }
};

inline const std::vector<SpaceConfig>& paper_presets() {
    static const std::vector<SpaceConfig> presets = {
        {"F4/C3", 'F', 4, {1}, {{"y1", {1}}, {"y3", {3, 2, 1}}, {"y4", {4, 3, 2, 1}}, {"y6", {3, 2, 4, 3, 2, 1}}}},
        {"F4/B3", 'F', 4, {4}, {{"y1", {4}}, {"y4", {3, 2, 3, 4}}}},
        {"E6/A6", 'E', 6, {2}, {{"y1", {2}}, {"y3", {5, 4, 2}}, {"y4", {6, 5, 4, 2}}, {"y6", {1, 3, 6, 5, 4, 2}}}},
        {"E6/D5", 'E', 6, {6}, {{"y1", {6}}, {"y4", {2, 4, 5, 6}}}},
        {"E7/E6", 'E', 7, {7}, {{"y1", {7}}, {"y5", {2, 4, 5, 6, 7}}, {"y9", {1, 5, 4, 2, 3, 4, 5, 6, 7}}}},
        {"E7/D6",
         'E',
         7,
         {1},
         {{"y1", {1}}, {"y4", {2, 4, 3, 1}}, {"y6", {2, 6, 5, 4, 3, 1}}, {"y9", {3, 4, 2, 7, 6, 5, 4, 3, 1}}}},
        {"E8/E7",
         'E',
         8,
         {8},
         {{"y1", {8}},
          {"y6", {3, 4, 5, 6, 7, 8}},
          {"y10", {1, 5, 4, 2, 3, 4, 5, 6, 7, 8}},
          {"y15", {5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8}}}},
    };
    return presets;
}

inline std::optional<SpaceConfig> find_preset(const std::string& name) {
    for (const auto& p : paper_presets())
        if (p.name == name) return p;
    return std::nullopt;
}

inline std::string space_label(char type, int rank, const std::vector<int>& nodes) {
    std::string s = std::string(1, type) + std::to_string(rank) + "/{";
    for (std::size_t i = 0; i < nodes.size(); ++i) s += (i ? "," : "") + std::to_string(nodes[i]);
    return s + "}";
}

inline std::vector<int> parse_node_list(const std::string& text) {
    std::vector<int> out;
    std::string cleaned;
    for (char c : text)
        if (c != '{' && c != '}' && c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c))) cleaned += c;
    std::stringstream ss(cleaned);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad node index '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("bad node index '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty node list");
    return out;
}

inline WeylWord parse_word(const std::string& text) {
    WeylWord w;
    if (text.find_first_not_of(" []{}()") == std::string::npos) return w;
    for (int i : parse_node_list(text)) w.push_back(i);
    return w;
}

inline SpaceConfig custom_space(char type, int rank, std::vector<int> nodes) {
    type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
    CartanMatrix c = cartan_matrix(type, rank);  // validates the pair
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (int k : nodes)
        if (k < 1 || k > rank) throw std::invalid_argument("node " + std::to_string(k) + " outside 1.." + std::to_string(rank));
    SpaceConfig s;
    s.type = type;
    s.rank = c.rank();
    s.nodes = nodes;
    s.name = space_label(type, rank, nodes);
    return s;
}

// Accepts a preset name ("E6/D5"), "<type><rank>/B" for the full flag variety, or "<type><rank>/{k,...}".
inline SpaceConfig parse_space(const std::string& tag) {
    if (auto p = find_preset(tag)) return *p;
    auto slash = tag.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("unknown space '" + tag + "'");
    std::string root = tag.substr(0, slash), rest = tag.substr(slash + 1);
    RootSystem rs = build_root_system(root);
    std::vector<int> nodes;
    if (rest == "B" || rest == "b") {
        for (int i = 1; i <= rs.rank(); ++i) nodes.push_back(i);
    } else {
        nodes = parse_node_list(rest);
    }
    SpaceConfig s = custom_space(rs.cartan().type(), rs.rank(), nodes);
    s.name = tag;
    return s;
}

inline std::shared_ptr<const CosetTable> make_table(const SpaceConfig& s, std::optional<int> max_length = std::nullopt) {
    auto rs = std::make_shared<const RootSystem>(cartan_matrix(s.type, s.rank));
    return std::make_shared<const CosetTable>(rs, s.nodes, max_length);
}

// Greedy generator choice: all degree-1 classes, then in each degree the lowest-index classes needed
// for the monomials in the generators to span that degree over Z.
inline GeneratorBinding auto_generators(const SchubertEngine& engine) {
    const CosetTable& t = engine.table();
    std::vector<std::pair<std::string, int>> spec;
    auto rebuild = [&]() { return make_binding_ids(t, spec); };
    for (int m = 1; m <= t.top_degree(); ++m) {
        const std::size_t beta = t.beta(m);
        auto units = [&]() -> std::size_t {
            if (spec.empty()) return 0;
            IntMatrix M = engine.structure_matrix(rebuild(), m);
            if (M.rows() == 0) return 0;
            return smith_normal_form(M, false).unit_count();
        };
        std::size_t have = units();
        if (have == beta) continue;
        std::vector<int> added;
        for (int i = 1; i <= static_cast<int>(beta) && have < beta; ++i) {
            spec.emplace_back("tmp" + std::to_string(t.id(m, i)), t.id(m, i));
            std::size_t now = units();
            if (now > have) {
                have = now;
                added.push_back(i);
            } else {
                spec.pop_back();
            }
        }
        if (have != beta) throw ConsistencyError("automatic generator choice failed in degree " + std::to_string(m));
        std::size_t first = spec.size() - added.size();
        for (std::size_t j = 0; j < added.size(); ++j)
            spec[first + j].first = "y" + std::to_string(m) + (added.size() > 1 ? "_" + std::to_string(j + 1) : "");
    }
    return rebuild();
}

inline GeneratorBinding binding_for(const SpaceConfig& s, const SchubertEngine& engine) {
    if (!s.generators.empty()) return make_binding(engine.table(), s.generators);
    return auto_generators(engine);
}

// Parses "y1=[4]; y4=[3,2,3,4]".
inline std::vector<std::pair<std::string, WeylWord>> parse_generator_spec(const std::string& text) {
    std::vector<std::pair<std::string, WeylWord>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            if (item.find_first_not_of(" \t") == std::string::npos) continue;
            throw std::invalid_argument("generator spec '" + item + "' lacks '='");
        }
        std::string name = item.substr(0, eq);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        out.emplace_back(name, parse_word(item.substr(eq + 1)));
    }
    if (out.empty()) throw std::invalid_argument("empty generator spec");
    return out;
}

}  // namespace chowring
