#pragma once

// Littlewood-Richardson coefficients by counting LR tableaux, independent of the library.

#include <algorithm>
#include <vector>

namespace oracle {

using Partition = std::vector<int>;  // weakly decreasing, trailing zeros allowed

inline int part(const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

inline bool contains(const Partition& outer, const Partition& inner) {
    for (std::size_t i = 0; i < std::max(outer.size(), inner.size()); ++i)
        if (part(inner, i) > part(outer, i)) return false;
    return true;
}

inline int size_of(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

namespace detail {

struct LRSearch {
    Partition lambda, nu, mu;
    std::vector<std::vector<int>> fill;  // fill[row][col], 0 for cells of lambda
    std::vector<std::pair<int, int>> cells;  // skew cells in reverse reading order
    std::vector<int> used;
    long long count = 0;

    void run() {
        // Reading order: rows top to bottom, each row right to left.
        for (int r = 0; r < static_cast<int>(nu.size()); ++r)
            for (int c = part(nu, r) - 1; c >= part(lambda, r); --c) cells.emplace_back(r, c);
        fill.assign(nu.size(), {});
        for (std::size_t r = 0; r < nu.size(); ++r) fill[r].assign(part(nu, r), 0);
        used.assign(mu.size() + 1, 0);
        place(0);
    }

    void place(std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[k];
        for (int v = 1; v <= static_cast<int>(mu.size()); ++v) {
            if (used[v] >= mu[v - 1]) continue;
            // Lattice condition on the reading word.
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;
            // Rows weakly increase left to right; the cell to the right is already filled.
            if (c + 1 < part(nu, r) && fill[r][c + 1] != 0 && v > fill[r][c + 1]) continue;
            // Columns strictly increase downward; the cell above is filled (or belongs to lambda).
            if (r > 0 && c >= part(lambda, r - 1) && fill[r - 1][c] >= v) continue;
            fill[r][c] = v;
            ++used[v];
            place(k + 1);
            --used[v];
            fill[r][c] = 0;
        }
    }
};

}  // namespace detail

// c^nu_{lambda,mu}
inline long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!contains(nu, lambda)) return 0;
    if (size_of(nu) != size_of(lambda) + size_of(mu)) return 0;
    detail::LRSearch s;
    s.lambda = lambda;
    s.nu = nu;
    s.mu.clear();
    for (int x : mu)
        if (x > 0) s.mu.push_back(x);
    s.run();
    return s.count;
}

// All partitions fitting in a rows x cols box with the given size.
inline std::vector<Partition> partitions_in_box(int rows, int cols, int size) {
    std::vector<Partition> out;
    Partition cur(rows, 0);
    auto rec = [&](auto&& self, int i, int maxpart, int rest) -> void {
        if (i == rows) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (int x = std::min(maxpart, rest); x >= 0; --x) {
            cur[i] = x;
            self(self, i + 1, x, rest - x);
        }
        cur[i] = 0;
    };
    rec(rec, 0, cols, size);
    return out;
}

// Type A_{n-1}: a weight in fundamental-weight coordinates lying in the orbit of omega_k is the indicator
// of a k-subset S of {1..n}; the Schubert class indexed by it carries the partition (s_k - k, ..., s_1 - 1).
inline Partition grassmannian_partition(const std::vector<int>& weight, int k) {
    const int n = static_cast<int>(weight.size()) + 1;
    std::vector<int> chi(n + 1, 0);
    // chi(i) - chi(i+1) = weight_i; pick chi(n) so that exactly k entries equal 1.
    for (int last = 0; last <= 1; ++last) {
        chi[n] = last;
        for (int i = n - 1; i >= 1; --i) chi[i] = chi[i + 1] + weight[i - 1];
        int ones = 0;
        bool ok = true;
        for (int i = 1; i <= n; ++i) {
            if (chi[i] != 0 && chi[i] != 1) ok = false;
            ones += chi[i];
        }
        if (ok && ones == k) break;
    }
    std::vector<int> S;
    for (int i = 1; i <= n; ++i)
        if (chi[i] == 1) S.push_back(i);
    Partition p;
    for (int j = k; j >= 1; --j) p.push_back(S[j - 1] - j);
    return p;
}

}  // namespace oracle
