#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowring {

using WeightVector = std::vector<int>;  // fundamental-weight coordinates
using RootVector = std::vector<int>;    // simple-root coordinates

class CartanMatrix {
public:
    CartanMatrix() = default;
    CartanMatrix(char type, int rank, std::vector<std::vector<int>> entries)
        : type_(type), rank_(rank), c_(std::move(entries)) {
        validate();
    }

    char type() const { return type_; }
    int rank() const { return rank_; }
    std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

    // c(i, j) with 1-based nodes
    int operator()(int i, int j) const { return c_.at(i - 1).at(j - 1); }
    const std::vector<std::vector<int>>& entries() const { return c_; }

private:
    void validate() const {
        if (static_cast<int>(c_.size()) != rank_) throw std::invalid_argument("Cartan matrix has wrong size");
        for (int i = 0; i < rank_; ++i) {
            if (static_cast<int>(c_[i].size()) != rank_) throw std::invalid_argument("Cartan matrix is not square");
            if (c_[i][i] != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
            for (int j = 0; j < rank_; ++j) {
                if (i == j) continue;
                if (c_[i][j] > 0 || c_[i][j] < -3) throw std::invalid_argument("Cartan matrix entry out of range");
                if ((c_[i][j] == 0) != (c_[j][i] == 0)) throw std::invalid_argument("Cartan matrix zero pattern not symmetric");
            }
        }
    }

    char type_ = 'A';
    int rank_ = 0;
    std::vector<std::vector<int>> c_;
};

// Bourbaki numbering of the Dynkin nodes.
inline CartanMatrix cartan_matrix(char type, int n) {
    auto bad = [&]() {
        return std::invalid_argument("invalid simple type " + std::string(1, type) + std::to_string(n));
    };
    if (n < 1) throw bad();
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](int a, int b) {  // simply laced edge between 1-based nodes
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    };
    switch (type) {
        case 'A':
            for (int i = 1; i < n; ++i) link(i, i + 1);
            break;
        case 'B':
            if (n < 2) throw bad();
            for (int i = 1; i < n; ++i) link(i, i + 1);
            c[n - 2][n - 1] = -2;  // alpha_n short
            break;
        case 'C':
            if (n < 2) throw bad();
            for (int i = 1; i < n; ++i) link(i, i + 1);
            c[n - 1][n - 2] = -2;  // alpha_n long
            break;
        case 'D':
            if (n < 3) throw bad();
            for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
            link(n - 2, n);
            break;
        case 'E':
            if (n < 6 || n > 8) throw bad();
            link(1, 3);
            link(2, 4);
            for (int i = 3; i < n; ++i) link(i, i + 1);
            break;
        case 'F':
            if (n != 4) throw bad();
            link(1, 2);
            link(3, 4);
            c[1][2] = -2;
            c[2][1] = -1;
            break;
        case 'G':
            if (n != 2) throw bad();
            c[0][1] = -1;
            c[1][0] = -3;
            break;
        default:
            throw bad();
    }
    return CartanMatrix(type, n, std::move(c));
}

class RootSystem {
public:
    explicit RootSystem(CartanMatrix c) : cartan_(std::move(c)) { build(); }

    const CartanMatrix& cartan() const { return cartan_; }
    int rank() const { return cartan_.rank(); }
    std::string label() const { return cartan_.label(); }

    const std::vector<RootVector>& positive_roots() const { return positive_; }
    int positive_root_index(const RootVector& a) const {
        auto it = index_.find(a);
        return it == index_.end() ? -1 : it->second;
    }

    // Half squared length of simple root i (1-based), normalised so the shortest is 1.
    int half_norm(int i) const { return half_norm_.at(i - 1); }

    // (alpha, beta) in the normalisation where short simple roots have squared length 2.
    long long inner(const RootVector& a, const RootVector& b) const {
        long long s = 0;
        const int n = rank();
        for (int i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < n; ++j)
                if (b[j] != 0) s += static_cast<long long>(a[i]) * b[j] * cartan_(i + 1, j + 1) * half_norm_[j];
        }
        return s;
    }

    // <lambda, alpha^vee>
    int pairing(const WeightVector& lambda, const RootVector& alpha) const {
        check_len(lambda);
        check_len(alpha);
        long long norm = inner(alpha, alpha);
        if (norm == 0) throw std::invalid_argument("pairing with the zero root");
        long long num = 0;
        for (int k = 0; k < rank(); ++k) num += 2LL * alpha[k] * half_norm_[k] * lambda[k];
        if (num % norm != 0) throw std::logic_error("pairing: non-integral coroot expansion");
        return static_cast<int>(num / norm);
    }

    // sigma_i(lambda) = lambda - lambda_i * (row i of C)
    WeightVector reflect_weight(int i, const WeightVector& lambda) const {
        check_node(i);
        check_len(lambda);
        WeightVector out = lambda;
        const int li = lambda[i - 1];
        if (li != 0)
            for (int j = 1; j <= rank(); ++j) out[j - 1] -= li * cartan_(i, j);
        return out;
    }

    // sigma_i(alpha) = alpha - <alpha, beta_i^vee> beta_i
    RootVector reflect_root(int i, const RootVector& alpha) const {
        check_node(i);
        check_len(alpha);
        RootVector out = alpha;
        out[i - 1] -= root_pairing_simple(alpha, i);
        return out;
    }

    // <alpha, beta_i^vee> for a root in simple-root coordinates
    int root_pairing_simple(const RootVector& alpha, int i) const {
        int s = 0;
        for (int k = 1; k <= rank(); ++k) s += alpha[k - 1] * cartan_(k, i);
        return s;
    }

    WeightVector root_as_weight(const RootVector& alpha) const {
        WeightVector w(rank(), 0);
        for (int j = 1; j <= rank(); ++j) w[j - 1] = root_pairing_simple(alpha, j);
        return w;
    }

    WeightVector rho() const { return WeightVector(rank(), 1); }

    static int height(const RootVector& a) { return std::accumulate(a.begin(), a.end(), 0); }

    void check_node(int i) const {
        if (i < 1 || i > rank()) throw std::out_of_range("node index " + std::to_string(i) + " out of range");
    }

private:
    void check_len(const std::vector<int>& v) const {
        if (static_cast<int>(v.size()) != rank()) throw std::invalid_argument("vector length differs from rank");
    }

    void build() {
        const int n = rank();
        // symmetriser: c_ij d_j = c_ji d_i
        std::vector<long long> num(n, 0), den(n, 1);
        num[0] = 1;
        std::vector<int> stack{0};
        std::vector<bool> seen(n, false);
        seen[0] = true;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (seen[j] || cartan_(i + 1, j + 1) == 0) continue;
                // d_j = d_i * c_ji / c_ij
                num[j] = num[i] * cartan_(j + 1, i + 1);
                den[j] = den[i] * cartan_(i + 1, j + 1);
                if (den[j] < 0) {
                    num[j] = -num[j];
                    den[j] = -den[j];
                }
                seen[j] = true;
                stack.push_back(j);
            }
        }
        for (int i = 0; i < n; ++i)
            if (!seen[i]) throw std::invalid_argument("Dynkin diagram is not connected");
        long long l = 1;
        for (int i = 0; i < n; ++i) l = std::lcm(l, den[i]);
        std::vector<long long> d(n);
        long long g = 0;
        for (int i = 0; i < n; ++i) {
            d[i] = num[i] * (l / den[i]);
            g = std::gcd(g, d[i]);
        }
        half_norm_.resize(n);
        for (int i = 0; i < n; ++i) half_norm_[i] = static_cast<int>(d[i] / g);

        std::set<RootVector> found;
        std::vector<RootVector> frontier;
        for (int i = 0; i < n; ++i) {
            RootVector e(n, 0);
            e[i] = 1;
            found.insert(e);
            frontier.push_back(e);
        }
        while (!frontier.empty()) {
            std::vector<RootVector> next;
            for (const auto& a : frontier)
                for (int i = 1; i <= n; ++i) {
                    RootVector b = reflect_root(i, a);
                    bool positive = std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; });
                    if (positive && found.insert(b).second) next.push_back(b);
                }
            frontier = std::move(next);
        }
        positive_.assign(found.begin(), found.end());
        std::sort(positive_.begin(), positive_.end(), [](const RootVector& a, const RootVector& b) {
            int ha = height(a), hb = height(b);
            if (ha != hb) return ha < hb;
            return a > b;
        });
        for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = static_cast<int>(k);
    }

    CartanMatrix cartan_;
    std::vector<int> half_norm_;
    std::vector<RootVector> positive_;
    std::map<RootVector, int> index_;
};

inline RootSystem build_root_system(char type, int rank) { return RootSystem(cartan_matrix(type, rank)); }

// Parses tags such as "F4", "E8", "A2".
inline RootSystem build_root_system(const std::string& tag) {
    if (tag.size() < 2) throw std::invalid_argument("bad root system tag " + tag);
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(tag[0])));
    int r = 0;
    try {
        std::size_t used = 0;
        r = std::stoi(tag.substr(1), &used);
        if (used != tag.size() - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad root system tag " + tag);
    }
    return build_root_system(t, r);
}

}  // namespace chowring
