#pragma once

#include "bigint.hpp"
#include "disk_cache.hpp"
#include "int_linalg.hpp"
#include "int_poly.hpp"
#include "parallel.hpp"
#include "weyl_coset.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowring {

// Integer combination of Schubert classes, keyed by table id.
struct SchubertCombination {
    int degree = 0;
    std::map<int, BigInt> terms;

    bool is_zero() const { return terms.empty(); }

    void add(int id, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms.try_emplace(id, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    BigInt coefficient(int id) const {
        auto it = terms.find(id);
        return it == terms.end() ? BigInt(0) : it->second;
    }

    SchubertCombination& operator+=(const SchubertCombination& o) {
        for (const auto& [id, c] : o.terms) add(id, c);
        return *this;
    }

    SchubertCombination scaled(const BigInt& k) const {
        SchubertCombination r;
        r.degree = degree;
        if (k != 0)
            for (const auto& [id, c] : terms) r.terms[id] = c * k;
        return r;
    }

    friend bool operator==(const SchubertCombination& a, const SchubertCombination& b) {
        return a.terms == b.terms && (a.terms.empty() || a.degree == b.degree);
    }
    friend bool operator!=(const SchubertCombination& a, const SchubertCombination& b) { return !(a == b); }
};

inline SchubertCombination schubert_class(const CosetTable& t, int id) {
    SchubertCombination c;
    c.degree = t.rep(id).length;
    c.terms[id] = 1;
    return c;
}

// Coefficient vector over the degree-d basis s_{d,1..beta(d)}.
inline IntVector to_vector(const CosetTable& t, const SchubertCombination& c, int d) {
    IntVector v(t.beta(d));
    for (const auto& [id, x] : c.terms) {
        if (t.rep(id).length != d) throw std::invalid_argument("combination is not homogeneous of degree " + std::to_string(d));
        v[id - t.first_of_degree(d)] = x;
    }
    return v;
}

inline SchubertCombination from_vector(const CosetTable& t, const IntVector& v, int d) {
    SchubertCombination c;
    c.degree = d;
    for (std::size_t i = 0; i < v.size(); ++i) c.add(t.first_of_degree(d) + static_cast<int>(i), v[i]);
    return c;
}

inline std::string class_label(const CosetTable& t, int id) {
    return "s[" + std::to_string(t.rep(id).length) + "," + std::to_string(t.rep(id).index) + "]";
}

inline std::string to_string(const CosetTable& t, const SchubertCombination& c) {
    if (c.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [id, x] : c.terms) {
        bool neg = x < 0;
        BigInt mag = neg ? BigInt(-x) : x;
        std::string body = (mag == 1 ? "" : mag.str() + "*") + class_label(t, id);
        out += first ? (neg ? "-" : "") + body : (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

// Billey's subword sum along a fixed reduced word of w, evaluated through `root_value`.
// Returns u -> restriction of the class of u at w, for every u <= w.
template <class V, class RootValue>
std::map<int, V> restriction_row(const CosetTable& t, const WeylWord& word, RootValue&& root_value, const V& one) {
    const RootSystem& rs = t.root_system();
    const int r = static_cast<int>(word.size());
    std::vector<V> weights;
    weights.reserve(r);
    for (int j = 0; j < r; ++j) {
        RootVector a(rs.rank(), 0);
        a[word[j] - 1] = 1;
        WeylWord prefix(word.begin(), word.begin() + j);
        weights.push_back(root_value(apply_word_to_root(rs, prefix, a)));
    }
    std::map<int, V> states;
    states.emplace(0, one);
    for (int j = r - 1; j >= 0; --j) {
        const int i = word[j];
        std::vector<std::pair<int, V>> taken;
        for (const auto& [u, x] : states) {
            if (t.rep(u).point[i - 1] <= 0) continue;
            int v = t.neighbor(u, i);
            if (v < 0) throw std::logic_error("restriction_row: table truncated below the word length");
            taken.emplace_back(v, x * weights[j]);
        }
        for (auto& [v, x] : taken) {
            auto [it, inserted] = states.try_emplace(v, x);
            if (!inserted) it->second += x;
        }
    }
    return states;
}

// Ring Z[b1..bn] of simple-root variables, each of degree 2.
inline RingPtr simple_root_ring(int rank) {
    std::vector<std::string> names;
    for (int i = 1; i <= rank; ++i) names.push_back("b" + std::to_string(i));
    return make_ring(names, std::vector<int>(rank, 2));
}

inline IntPolynomial billey_restriction(const CosetTable& t, int u, int w, const WeylWord* word = nullptr) {
    RingPtr ring = simple_root_ring(t.rank());
    auto root_value = [&](const RootVector& a) {
        IntPolynomial p(ring);
        for (int k = 0; k < t.rank(); ++k)
            if (a[k] != 0) p += IntPolynomial::variable(ring, k) * BigInt(a[k]);
        return p;
    };
    auto row = restriction_row<IntPolynomial>(t, word ? *word : t.rep(w).word, root_value,
                                             IntPolynomial::constant(ring, BigInt(1)));
    for (auto& [id, p] : row)
        if (id == u) return p;
    return IntPolynomial(ring);
}

struct Generator {
    std::string name;
    int rep = 0;  // table id
};

// Generators y_i bound to Schubert classes; ring degrees are twice the class lengths.
struct GeneratorBinding {
    std::vector<Generator> generators;
    RingPtr ring;

    std::size_t size() const { return generators.size(); }
};

inline GeneratorBinding make_binding(const CosetTable& t, const std::vector<std::pair<std::string, WeylWord>>& spec) {
    GeneratorBinding b;
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (const auto& [name, word] : spec) {
        int id = t.find_word(word);
        if (id < 0) throw std::invalid_argument("generator " + name + " = " + word_to_string(word) + " is not a minimal coset representative");
        b.generators.push_back(Generator{name, id});
        names.push_back(name);
        degrees.push_back(2 * t.rep(id).length);
    }
    b.ring = make_ring(names, degrees);
    return b;
}

inline GeneratorBinding make_binding_ids(const CosetTable& t, const std::vector<std::pair<std::string, int>>& spec) {
    GeneratorBinding b;
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (const auto& [name, id] : spec) {
        b.generators.push_back(Generator{name, id});
        names.push_back(name);
        degrees.push_back(2 * t.rep(id).length);
    }
    b.ring = make_ring(names, degrees);
    return b;
}

// Localization engine: restrictions are evaluated at a regular integral point of the torus Lie algebra
// (simple roots mapped to positive integers), so each positive root evaluates to a positive integer.
class SchubertEngine {
public:
    explicit SchubertEngine(std::shared_ptr<const CosetTable> table, std::vector<BigInt> point = {}, unsigned jobs = 1)
        : table_(std::move(table)), jobs_(jobs) {
        if (table_->truncated()) throw std::invalid_argument("SchubertEngine needs an untruncated coset table");
        const int n = table_->rank();
        point_ = point.empty() ? std::vector<BigInt>(n, BigInt(1)) : std::move(point);
        if (static_cast<int>(point_.size()) != n) throw std::invalid_argument("evaluation point has wrong length");
        for (const auto& x : point_)
            if (x <= 0) throw std::invalid_argument("evaluation point must be strictly dominant (positive on simple roots)");
        build();
    }

    const CosetTable& table() const { return *table_; }
    const std::shared_ptr<const CosetTable>& table_ptr() const { return table_; }
    const std::vector<BigInt>& point() const { return point_; }
    unsigned jobs() const { return jobs_; }
    void set_jobs(unsigned j) { jobs_ = std::max(1u, j); }
    void set_cache(std::shared_ptr<const DiskCache> cache) { cache_ = std::move(cache); }
    const std::shared_ptr<const DiskCache>& cache() const { return cache_; }

    // Restriction of the class of u to the fixed point w, evaluated at the point.
    const BigInt& restriction(int u, int w) const { return R_[static_cast<std::size_t>(w) * size_ + u]; }

    BigInt restrict(const SchubertCombination& c, int w) const {
        BigInt s = 0;
        for (const auto& [u, x] : c.terms) s += x * restriction(u, w);
        return s;
    }

    // Solves f = sum c_y xi^y from fixed-point values f|_x for l(x) <= degree; returns the degree-`degree` slice.
    SchubertCombination expand_values(const std::vector<BigInt>& values, int degree) const {
        const CosetTable& t = *table_;
        if (degree < 0 || degree > t.top_degree()) throw std::invalid_argument("expand: degree out of range");
        const int limit = t.first_of_degree(degree) + t.beta(degree);
        std::vector<BigInt> c(limit);
        for (int x = 0; x < limit; ++x) {
            BigInt s = values.at(x);
            for (const auto& [y, ry] : lower_[x]) {
                if (c[y] != 0) s -= c[y] * ry;
            }
            if (s == 0) continue;
            const BigInt& d = restriction(x, x);
            BigInt q = s / d;
            if (q * d != s) throw ConsistencyError("exact division failed in the triangular solve at class " + class_label(t, x));
            if (t.rep(x).length > degree) throw ConsistencyError("nonzero coefficient above the product degree");
            c[x] = q;
        }
        SchubertCombination out;
        out.degree = degree;
        for (int x = t.first_of_degree(degree); x < limit; ++x) out.add(x, c[x]);
        return out;
    }

    SchubertCombination multiply(const SchubertCombination& a, const SchubertCombination& b) const {
        if (a.is_zero() || b.is_zero()) return SchubertCombination{a.degree + b.degree, {}};
        const int d = a.degree + b.degree;
        if (d > table_->top_degree()) return SchubertCombination{d, {}};
        const int limit = table_->first_of_degree(d) + table_->beta(d);
        std::vector<BigInt> v(limit);
        for (int x = 0; x < limit; ++x) v[x] = restrict(a, x) * restrict(b, x);
        return expand_values(v, d);
    }

    SchubertCombination multiply(int u, int v) const {
        const CosetTable& t = *table_;
        if (cache_) {
            int a = std::min(u, v), b = std::max(u, v);
            nlohmann::json key = cache_prefix();
            key["u"] = t.rep(a).word;
            key["v"] = t.rep(b).word;
            auto value = cache_->get_or_compute("product", key, [&] {
                return combination_to_cache_json(multiply(schubert_class(t, a), schubert_class(t, b)));
            });
            return combination_from_cache_json(value, t.rep(u).length + t.rep(v).length);
        }
        return multiply(schubert_class(t, u), schubert_class(t, v));
    }

    // Product of the listed classes (with repetition).
    SchubertCombination product(const std::vector<int>& ids) const {
        const CosetTable& t = *table_;
        int d = 0;
        for (int id : ids) d += t.rep(id).length;
        if (d > t.top_degree()) return SchubertCombination{d, {}};
        const int limit = t.first_of_degree(d) + t.beta(d);
        std::vector<BigInt> v(limit, BigInt(1));
        for (int x = 0; x < limit; ++x)
            for (int id : ids) v[x] *= restriction(id, x);
        return expand_values(v, d);
    }

    SchubertCombination expand_monomial(const GeneratorBinding& b, const Exponent& e) const {
        if (e.size() != b.size()) throw std::invalid_argument("exponent length differs from the number of generators");
        std::vector<std::pair<int, unsigned>> key;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) key.emplace_back(b.generators[i].rep, e[i]);
        std::sort(key.begin(), key.end());
        {
            std::lock_guard<std::mutex> lock(memo_mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        SchubertCombination result;
        int d = 0;
        for (const auto& [id, k] : key) d += static_cast<int>(k) * table_->rep(id).length;
        auto compute = [&]() {
            if (d > table_->top_degree()) return SchubertCombination{d, {}};
            const int limit = table_->first_of_degree(d) + table_->beta(d);
            std::vector<BigInt> v(limit, BigInt(1));
            for (int x = 0; x < limit; ++x)
                for (const auto& [id, k] : key) {
                    const BigInt& r = restriction(id, x);
                    if (r == 0) {
                        v[x] = 0;
                        break;
                    }
                    v[x] *= boost::multiprecision::pow(r, k);
                }
            return expand_values(v, d);
        };
        if (cache_ && d <= table_->top_degree()) {
            nlohmann::json ck = cache_prefix();
            nlohmann::json factors = nlohmann::json::array();
            for (const auto& [id, k] : key) factors.push_back({{"word", table_->rep(id).word}, {"power", k}});
            ck["factors"] = factors;
            result = combination_from_cache_json(
                cache_->get_or_compute("expansion", ck, [&] { return combination_to_cache_json(compute()); }), d);
        } else {
            result = compute();
        }
        std::lock_guard<std::mutex> lock(memo_mutex_);
        memo_.emplace(key, result);
        return result;
    }

    SchubertCombination expand_polynomial(const GeneratorBinding& b, const IntPolynomial& f) const {
        if (f.is_zero()) return SchubertCombination{};
        if (!f.is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
        long long deg = f.degree();
        if (deg % 2 != 0) throw std::invalid_argument("polynomial has odd degree");
        SchubertCombination out;
        out.degree = static_cast<int>(deg / 2);
        for (const auto& [e, c] : f.terms()) out += expand_monomial(b, e).scaled(c);
        out.degree = static_cast<int>(deg / 2);
        return out;
    }

    // a_w(f) for l(w) equal to the (complex) degree of f.
    BigInt eval_coefficient(const GeneratorBinding& b, const IntPolynomial& f, int w) const {
        if (f.is_zero()) return 0;
        long long deg = f.degree();
        if (deg != 2LL * table_->rep(w).length)
            throw std::invalid_argument("eval_coefficient: degree of f (" + std::to_string(deg) +
                                        ") does not match the class " + class_label(*table_, w));
        return expand_polynomial(b, f).coefficient(w);
    }

    // M(pi_m): rows are the lex basis B(2m), columns s_{m,1..beta(m)}.
    IntMatrix structure_matrix(const GeneratorBinding& b, int m) const {
        const CosetTable& t = *table_;
        if (m < 0 || m > t.top_degree()) throw std::invalid_argument("structure_matrix: degree out of range");
        MonomialBasis B = monomial_basis(b.ring->degrees(), 2LL * m);
        auto rows = parallel_map(B.size(), jobs_, [&](std::size_t k) { return to_vector(t, expand_monomial(b, B.monomials[k]), m); });
        return IntMatrix::from_rows(rows, t.beta(m));
    }

    // The degree-1 class; requires a single node in K.
    int omega() const {
        if (table_->beta(1) != 1) throw std::invalid_argument("the degree-1 class is not unique (K has more than one node)");
        return table_->id(1, 1);
    }

    // A_k via products: row i is omega * s_{k-1,i}.
    IntMatrix chevalley_matrix(int k) const {
        const CosetTable& t = *table_;
        if (k < 1 || k > t.top_degree() + 1) throw std::invalid_argument("chevalley_matrix: degree out of range");
        const int w0 = omega();
        IntMatrix A(t.beta(k - 1), t.beta(k));
        if (k > t.top_degree()) return A;
        auto rows = parallel_map(static_cast<std::size_t>(t.beta(k - 1)), jobs_, [&](std::size_t i) {
            return to_vector(t, multiply(w0, t.first_of_degree(k - 1) + static_cast<int>(i)), k);
        });
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) A(i, j) = rows[i][j];
        return A;
    }

    // A_k via the divisor rule: omega * s_w = sum <b, beta^vee> s_{w s_beta} over l(w s_beta) = l(w) + 1.
    IntMatrix chevalley_matrix_divisor_rule(int k) const {
        const CosetTable& t = *table_;
        const RootSystem& rs = t.root_system();
        omega();
        IntMatrix A(t.beta(k - 1), t.beta(k));
        if (k > t.top_degree()) return A;
        const WeightVector b = t.base_point();
        for (int i = 0; i < t.beta(k - 1); ++i) {
            const int w = t.first_of_degree(k - 1) + i;
            const CosetRep& rep = t.rep(w);
            for (const auto& beta : rs.positive_roots()) {
                int c = rs.pairing(b, beta);
                if (c == 0) continue;
                // w s_beta (b) = w(b) - c * w(beta)
                WeightVector wb = rs.root_as_weight(apply_word_to_root(rs, rep.word, beta));
                WeightVector p = rep.point;
                for (int j = 0; j < rs.rank(); ++j) p[j] -= c * wb[j];
                int v = t.find_point(p);
                if (v < 0 || t.rep(v).length != k) continue;
                // exact length of w s_beta via inversions of w s_beta(rho)
                WeightVector sr = rs.rho();
                int pr = rs.pairing(sr, beta);
                WeightVector bw = rs.root_as_weight(beta);
                for (int j = 0; j < rs.rank(); ++j) sr[j] -= pr * bw[j];
                WeightVector wsr = apply_word(rs, rep.word, sr);
                int len = 0;
                for (const auto& g : rs.positive_roots())
                    if (rs.pairing(wsr, g) < 0) ++len;
                if (len != k) continue;
                A(i, v - t.first_of_degree(k)) += c;
            }
        }
        return A;
    }

    nlohmann::json cache_prefix() const {
        return {{"root_system", table_->root_system().label()}, {"nodes", table_->nodes()}};
    }

    static nlohmann::json combination_to_cache_json(const SchubertCombination& c) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [id, x] : c.terms) terms.push_back({id, x.str()});
        return {{"degree", c.degree}, {"terms", terms}};
    }

    SchubertCombination combination_from_cache_json(const nlohmann::json& j, int expected_degree) const {
        SchubertCombination c;
        c.degree = j.at("degree").get<int>();
        if (c.degree != expected_degree) throw CacheError("cached combination has the wrong degree");
        for (const auto& term : j.at("terms")) {
            int id = term.at(0).get<int>();
            if (id < 0 || id >= static_cast<int>(table_->size()) || table_->rep(id).length != c.degree)
                throw CacheError("cached combination references an invalid class");
            c.add(id, parse_bigint(term.at(1).get<std::string>()));
        }
        return c;
    }

private:
    void build() {
        const CosetTable& t = *table_;
        size_ = t.size();
        R_.assign(size_ * size_, BigInt(0));
        const RootSystem& rs = t.root_system();
        auto root_value = [&](const RootVector& a) {
            BigInt v = 0;
            for (int k = 0; k < rs.rank(); ++k)
                if (a[k] != 0) v += point_[k] * a[k];
            if (v <= 0) throw std::logic_error("inversion root evaluated to a non-positive value");
            return v;
        };
        auto rows = parallel_map(size_, jobs_, [&](std::size_t w) {
            return restriction_row<BigInt>(t, t.rep(static_cast<int>(w)).word, root_value, BigInt(1));
        });
        lower_.resize(size_);
        for (std::size_t w = 0; w < size_; ++w) {
            for (auto& [u, x] : rows[w]) {
                R_[w * size_ + u] = x;
                if (static_cast<std::size_t>(u) != w && x != 0) lower_[w].emplace_back(u, x);
            }
            if (R_[w * size_ + w] == 0) throw std::logic_error("diagonal restriction vanished");
        }
    }

    std::shared_ptr<const CosetTable> table_;
    std::vector<BigInt> point_;
    unsigned jobs_ = 1;
    std::size_t size_ = 0;
    std::vector<BigInt> R_;
    std::vector<std::vector<std::pair<int, BigInt>>> lower_;
    std::shared_ptr<const DiskCache> cache_;
    mutable std::mutex memo_mutex_;
    mutable std::map<std::vector<std::pair<int, unsigned>>, SchubertCombination> memo_;
};

}  // namespace chowring
