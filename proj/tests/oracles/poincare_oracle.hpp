#pragma once

// Coset counts from Weyl group degrees and monomial counts by coin change, independent of the library.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

using Cartan = std::vector<std::vector<int>>;  // 0-based, c[i][j]

inline std::vector<int> weyl_degrees(char type, int n) {
    std::vector<int> d;
    switch (type) {
        case 'A':
            for (int i = 2; i <= n + 1; ++i) d.push_back(i);
            break;
        case 'B':
        case 'C':
            for (int i = 1; i <= n; ++i) d.push_back(2 * i);
            break;
        case 'D':
            for (int i = 1; i < n; ++i) d.push_back(2 * i);
            d.push_back(n);
            break;
        case 'E':
            if (n == 6) d = {2, 5, 6, 8, 9, 12};
            if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
            if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
            break;
        case 'F':
            d = {2, 6, 8, 12};
            break;
        case 'G':
            d = {2, 6};
            break;
    }
    if (d.empty()) throw std::invalid_argument("unknown Weyl group");
    return d;
}

// Identifies a connected Dynkin diagram from its Cartan submatrix; B and C share degrees.
inline std::vector<int> component_degrees(const Cartan& c, const std::vector<int>& nodes) {
    const int n = static_cast<int>(nodes.size());
    if (n == 1) return weyl_degrees('A', 1);
    std::vector<int> deg(n, 0);
    int worst = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            int x = c[nodes[a]][nodes[b]];
            if (x != 0) ++deg[a];
            worst = std::min(worst, x);
        }
    if (worst == -3) return weyl_degrees('G', 2);
    if (worst == -2) {
        if (n == 4) {
            // F4 has its double bond between the two middle nodes.
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (a != b && c[nodes[a]][nodes[b]] == -2 && deg[a] == 2 && deg[b] == 2) return weyl_degrees('F', 4);
        }
        return weyl_degrees('B', n);
    }
    int branch = -1;
    for (int a = 0; a < n; ++a)
        if (deg[a] == 3) branch = a;
    if (branch < 0) return weyl_degrees('A', n);
    // Arm lengths from the branch node.
    std::vector<int> arms;
    for (int b = 0; b < n; ++b) {
        if (b == branch || c[nodes[branch]][nodes[b]] == 0) continue;
        int len = 1, prev = branch, cur = b;
        for (;;) {
            int next = -1;
            for (int x = 0; x < n; ++x)
                if (x != prev && x != cur && c[nodes[cur]][nodes[x]] != 0) next = x;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return weyl_degrees('D', n);
    return weyl_degrees('E', n);
}

// Polynomial product of (1 + t + ... + t^{d-1}) over degrees d.
inline std::vector<long long> poincare_of_degrees(const std::vector<int>& degrees) {
    std::vector<long long> p{1};
    for (int d : degrees) {
        std::vector<long long> q(p.size() + d - 1, 0);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (int j = 0; j < d; ++j) q[i + j] += p[i];
        p = q;
    }
    return p;
}

// Counts of minimal coset representatives by length for W(G)/W(Levi), K = removed nodes (1-based).
inline std::vector<long long> coset_counts(const Cartan& c, char type, const std::vector<int>& K) {
    const int n = static_cast<int>(c.size());
    std::vector<long long> num = poincare_of_degrees(weyl_degrees(type, n));
    std::vector<bool> in_levi(n, true);
    for (int k : K) in_levi[k - 1] = false;
    std::vector<int> seen(n, 0);
    std::vector<long long> den{1};
    for (int s = 0; s < n; ++s) {
        if (!in_levi[s] || seen[s]) continue;
        std::vector<int> comp;
        std::function<void(int)> dfs = [&](int a) {
            seen[a] = 1;
            comp.push_back(a);
            for (int b = 0; b < n; ++b)
                if (in_levi[b] && !seen[b] && c[a][b] != 0) dfs(b);
        };
        dfs(s);
        std::sort(comp.begin(), comp.end());
        std::vector<long long> f = poincare_of_degrees(component_degrees(c, comp));
        std::vector<long long> g(den.size() + f.size() - 1, 0);
        for (std::size_t i = 0; i < den.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j) g[i + j] += den[i] * f[j];
        den = g;
    }
    // Exact polynomial division num / den.
    std::vector<long long> q(num.size() - den.size() + 1, 0), r = num;
    for (std::size_t i = q.size(); i-- > 0;) {
        q[i] = r[i + den.size() - 1] / den.back();
        for (std::size_t j = 0; j < den.size(); ++j) r[i + j] -= q[i] * den[j];
    }
    for (long long x : r)
        if (x != 0) throw std::logic_error("Poincare division not exact");
    return q;
}

// Number of monomials of weighted degree m in variables of the given degrees.
inline long long monomial_count(const std::vector<int>& degrees, int m) {
    if (m < 0) return 0;
    std::vector<long long> ways(m + 1, 0);
    ways[0] = 1;
    for (int d : degrees)
        for (int x = d; x <= m; ++x) ways[x] += ways[x - d];
    return ways[m];
}

}  // namespace oracle
