#pragma once

// Lexicographically least reduced words for minimal coset representatives, computed by breadth-first
// search on the orbit of the base weight, independent of the library.

#include <map>
#include <queue>
#include <vector>

namespace oracle {

using Weight = std::vector<int>;
using Word = std::vector<int>;

// sigma_i(lambda)_j = lambda_j - lambda_i * c_ij, with c_ij = 2(b_i, b_j)/(b_j, b_j).
inline Weight reflect(const std::vector<std::vector<int>>& c, int i, Weight w) {
    const int li = w[i - 1];
    for (std::size_t j = 0; j < w.size(); ++j) w[j] -= li * c[i - 1][j];
    return w;
}

struct OrbitWords {
    std::map<Weight, int> distance;
    std::map<Weight, Word> word;
};

inline OrbitWords orbit_words(const std::vector<std::vector<int>>& c, const std::vector<int>& K) {
    const int n = static_cast<int>(c.size());
    Weight base(n, 0);
    for (int k : K) base[k - 1] = 1;
    OrbitWords o;
    std::queue<Weight> q;
    o.distance[base] = 0;
    q.push(base);
    std::vector<Weight> order;
    while (!q.empty()) {
        Weight p = q.front();
        q.pop();
        order.push_back(p);
        for (int i = 1; i <= n; ++i) {
            Weight x = reflect(c, i, p);
            if (!o.distance.count(x)) {
                o.distance[x] = o.distance[p] + 1;
                q.push(x);
            }
        }
    }
    // word(p) = [i] + word(sigma_i p) for the least i that shortens the distance.
    for (const Weight& p : order) {
        int d = o.distance[p];
        if (d == 0) {
            o.word[p] = {};
            continue;
        }
        for (int i = 1; i <= n; ++i) {
            Weight x = reflect(c, i, p);
            if (o.distance[x] == d - 1) {
                Word w{i};
                const Word& tail = o.word[x];
                w.insert(w.end(), tail.begin(), tail.end());
                o.word[p] = w;
                break;
            }
        }
    }
    return o;
}

}  // namespace oracle
