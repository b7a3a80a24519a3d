#pragma once

#include "lie_data.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowring {

using WeylWord = std::vector<int>;

inline std::string word_to_string(const WeylWord& w) {
    std::string s = "[";
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
    return s + "]";
}

// Apply sigma_{i1} o ... o sigma_{ir} to a weight (last letter acts first).
inline WeightVector apply_word(const RootSystem& rs, const WeylWord& w, WeightVector lambda) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) lambda = rs.reflect_weight(*it, lambda);
    return lambda;
}

inline RootVector apply_word_to_root(const RootSystem& rs, const WeylWord& w, RootVector alpha) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) alpha = rs.reflect_root(*it, alpha);
    return alpha;
}

// l(w) as the number of positive roots sent negative, via w(rho).
inline int inversion_count(const RootSystem& rs, const WeylWord& w) {
    WeightVector wr = apply_word(rs, w, rs.rho());
    int count = 0;
    for (const auto& g : rs.positive_roots())
        if (rs.pairing(wr, g) < 0) ++count;
    return count;
}

struct CosetRep {
    WeylWord word;
    int length = 0;
    int index = 0;  // 1-based position within its length
    WeightVector point;
};

class CosetTable {
public:
    CosetTable(std::shared_ptr<const RootSystem> rs, std::vector<int> K, std::optional<int> max_length = std::nullopt)
        : rs_(std::move(rs)), K_(std::move(K)) {
        std::sort(K_.begin(), K_.end());
        K_.erase(std::unique(K_.begin(), K_.end()), K_.end());
        if (K_.empty()) throw std::invalid_argument("node subset K must be nonempty");
        for (int k : K_) rs_->check_node(k);
        build(max_length);
    }

    const RootSystem& root_system() const { return *rs_; }
    const std::shared_ptr<const RootSystem>& root_system_ptr() const { return rs_; }
    const std::vector<int>& nodes() const { return K_; }
    bool truncated() const { return truncated_; }
    int rank() const { return rs_->rank(); }

    std::size_t size() const { return reps_.size(); }
    const CosetRep& rep(int id) const { return reps_.at(id); }
    const std::vector<CosetRep>& reps() const { return reps_; }

    // Highest length present.
    int top_degree() const { return static_cast<int>(offset_.size()) - 2; }

    WeightVector base_point() const {
        WeightVector b(rank(), 0);
        for (int k : K_) b[k - 1] = 1;
        return b;
    }

    std::vector<int> counts_by_degree() const {
        if (truncated_) throw std::logic_error("counts_by_degree: table is truncated");
        return counts_unchecked();
    }

    int beta(int r) const {
        if (r < 0 || r > top_degree()) return 0;
        return offset_[r + 1] - offset_[r];
    }

    // Table id of s_{r,i} (i is 1-based).
    int id(int r, int i) const {
        if (r < 0 || r > top_degree() || i < 1 || i > beta(r))
            throw std::out_of_range("no Schubert class s_{" + std::to_string(r) + "," + std::to_string(i) + "}");
        return offset_[r] + i - 1;
    }
    int first_of_degree(int r) const { return (r < 0 || r > top_degree()) ? 0 : offset_[r]; }

    int find_point(const WeightVector& p) const {
        auto it = point_index_.find(p);
        return it == point_index_.end() ? -1 : it->second;
    }

    // Element given by any word; returns -1 when the word's product is not a minimal representative
    // of its coset with matching length.
    int find_word(const WeylWord& w) const {
        WeightVector p = apply_word(*rs_, w, base_point());
        int id = find_point(p);
        if (id < 0 || reps_[id].length != static_cast<int>(w.size())) return -1;
        return id;
    }

    const WeylWord& minimized_word(int id) const { return reps_.at(id).word; }

    WeylWord minimized_word(const WeightVector& p) const {
        int id = find_point(p);
        if (id < 0) throw std::invalid_argument("orbit point not in table");
        return reps_[id].word;
    }

    // Index of sigma_i applied to rep id's orbit point, or -1 if outside the (possibly truncated) table.
    int neighbor(int id, int i) const { return nbr_[static_cast<std::size_t>(id) * rank() + (i - 1)]; }

    bool bruhat_leq(int u, int w) const {
        return (below_[w][static_cast<std::size_t>(u) / 64] >> (static_cast<std::size_t>(u) % 64)) & 1u;
    }

    // All u <= w by the subword criterion along an arbitrary reduced word of w (last letter first).
    std::vector<uint64_t> subword_closure(const WeylWord& word) const {
        const std::size_t words = (reps_.size() + 63) / 64;
        std::vector<uint64_t> set(words, 0);
        std::vector<int> members{0};
        set[0] |= 1u;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            const int i = *it;
            std::size_t count = members.size();
            for (std::size_t k = 0; k < count; ++k) {
                int u = members[k];
                if (reps_[u].point[i - 1] <= 0) continue;
                int v = neighbor(u, i);
                if (v < 0) continue;
                uint64_t bit = uint64_t(1) << (v % 64);
                if (!(set[v / 64] & bit)) {
                    set[v / 64] |= bit;
                    members.push_back(v);
                }
            }
        }
        return set;
    }

    std::string label() const {
        std::string s = rs_->label() + "/{";
        for (std::size_t k = 0; k < K_.size(); ++k) s += (k ? "," : "") + std::to_string(K_[k]);
        return s + "}";
    }

private:
    std::vector<int> counts_unchecked() const {
        std::vector<int> c;
        for (int r = 0; r <= top_degree(); ++r) c.push_back(beta(r));
        return c;
    }

    // Lex-minimal reduced word: smallest left descent first, then recurse.
    WeylWord lex_min_word(const WeightVector& p, const std::map<WeightVector, WeylWord>& known) const {
        for (int i = 1; i <= rank(); ++i)
            if (p[i - 1] < 0) {
                WeightVector q = rs_->reflect_weight(i, p);
                WeylWord w{i};
                const WeylWord& tail = known.at(q);
                w.insert(w.end(), tail.begin(), tail.end());
                return w;
            }
        return {};
    }

    void build(std::optional<int> max_length) {
        const int n = rank();
        std::map<WeightVector, WeylWord> words;
        std::vector<std::vector<WeightVector>> levels;
        WeightVector b = base_point();
        words[b] = {};
        levels.push_back({b});
        for (int r = 0;; ++r) {
            std::vector<WeightVector> next;
            for (const auto& p : levels[r])
                for (int i = 1; i <= n; ++i)
                    if (p[i - 1] > 0) {
                        WeightVector q = rs_->reflect_weight(i, p);
                        if (!words.count(q)) {
                            words[q] = {};
                            next.push_back(q);
                        }
                    }
            if (next.empty()) break;
            if (max_length && r + 1 > *max_length) {
                truncated_ = true;
                for (const auto& q : next) words.erase(q);
                break;
            }
            for (const auto& q : next) words[q] = lex_min_word(q, words);
            std::sort(next.begin(), next.end(),
                      [&](const WeightVector& x, const WeightVector& y) { return words[x] < words[y]; });
            levels.push_back(std::move(next));
        }
        offset_.push_back(0);
        for (std::size_t r = 0; r < levels.size(); ++r) {
            int i = 1;
            for (const auto& p : levels[r]) {
                point_index_[p] = static_cast<int>(reps_.size());
                reps_.push_back(CosetRep{words[p], static_cast<int>(r), i++, p});
            }
            offset_.push_back(static_cast<int>(reps_.size()));
        }
        nbr_.assign(reps_.size() * n, -1);
        for (std::size_t id = 0; id < reps_.size(); ++id)
            for (int i = 1; i <= n; ++i) nbr_[id * n + (i - 1)] = find_point(rs_->reflect_weight(i, reps_[id].point));
        below_.resize(reps_.size());
        for (std::size_t id = 0; id < reps_.size(); ++id) below_[id] = subword_closure(reps_[id].word);
    }

    std::shared_ptr<const RootSystem> rs_;
    std::vector<int> K_;
    bool truncated_ = false;
    std::vector<CosetRep> reps_;
    std::vector<int> offset_;
    std::map<WeightVector, int> point_index_;
    std::vector<int> nbr_;
    std::vector<std::vector<uint64_t>> below_;
};

inline CosetTable enumerate_cosets(const RootSystem& rs, std::vector<int> K, std::optional<int> max_length = std::nullopt) {
    return CosetTable(std::make_shared<const RootSystem>(rs), std::move(K), max_length);
}

inline CosetTable enumerate_cosets(std::shared_ptr<const RootSystem> rs, std::vector<int> K,
                                   std::optional<int> max_length = std::nullopt) {
    return CosetTable(std::move(rs), std::move(K), max_length);
}

}  // namespace chowring
