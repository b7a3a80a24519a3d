#pragma once

// Reference data transcribed for the acceptance suite.

#include <string>
#include <utility>
#include <vector>

namespace paper {

using Word = std::vector<int>;
using ClassIndex = std::pair<int, int>;  // s_{r,i}

struct PrintedPresentation {
    std::string space;
    std::vector<std::pair<std::string, Word>> generators;
    std::vector<std::string> relations;
};

inline const std::vector<PrintedPresentation>& printed_presentations() {
    static const std::vector<PrintedPresentation> data = {
        {"F4/C3",
         {{"y1", {1}}, {"y3", {3, 2, 1}}, {"y4", {4, 3, 2, 1}}, {"y6", {3, 2, 4, 3, 2, 1}}},
         {"2*y3-y1^3", "2*y6+y3^2-3*y1^2*y4", "3*y4^2-y1^2*y6", "y6^2-y4^3"}},
        {"F4/B3", {{"y1", {4}}, {"y4", {3, 2, 3, 4}}}, {"3*y4^2-y1^8", "26*y4^3-5*y1^12"}},
        {"E6/A6",
         {{"y1", {2}}, {"y3", {5, 4, 2}}, {"y4", {6, 5, 4, 2}}, {"y6", {1, 3, 6, 5, 4, 2}}},
         {"2*y6+y3^2-3*y1^2*y4+2*y1^3*y3-y1^6", "3*y4^2-6*y1*y3*y4+y1^2*y6+5*y1^2*y3^2-2*y1^5*y3",
          "2*y3*y6-y1^3*y6", "y4^3-y6^2"}},
        {"E6/D5", {{"y1", {6}}, {"y4", {2, 4, 5, 6}}}, {"2*y1^9+3*y1*y4^2-6*y1^5*y4", "y4^3-6*y1^4*y4^2+y1^12"}},
        {"E7/E6",
         {{"y1", {7}}, {"y5", {2, 4, 5, 6, 7}}, {"y9", {1, 5, 4, 2, 3, 4, 5, 6, 7}}},
         {"y5^2-2*y1*y9", "2*y5*y9-9*y1^4*y5^2+6*y1^9*y5-y1^14", "y9^2+10*y1^3*y5^3-9*y1^8*y5^2+2*y1^13*y5"}},
        {"E7/D6",
         {{"y1", {1}}, {"y4", {2, 4, 3, 1}}, {"y6", {2, 6, 5, 4, 3, 1}}, {"y9", {3, 4, 2, 7, 6, 5, 4, 3, 1}}},
         {"2*y9+3*y1*y4^2+4*y1^3*y6+2*y1^5*y4-2*y1^9",
          "3*y6^2-y4^3-3*y1^4*y4^2-2*y1^6*y6+2*y1^8*y4",
          "3*y4^2*y6+3*y1^2*y6^2+6*y1^2*y4^3+6*y1^4*y4*y6+2*y1^5*y9-y1^14",
          "5*y9^2+29*y6^3-24*y1^6*y6^2+45*y1^2*y4*y6^2+2*y1^9*y9"}},
        {"E8/E7",
         {{"y1", {8}},
          {"y6", {3, 4, 5, 6, 7, 8}},
          {"y10", {1, 5, 4, 2, 3, 4, 5, 6, 7, 8}},
          {"y15", {5, 4, 3, 1, 7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 8}}},
         {"2*y15-16*y1^5*y10-10*y1^3*y6^2+10*y1^9*y6-y1^15",
          "3*y10^2+10*y1^2*y6^3+18*y1^4*y6*y10-2*y1^5*y15-8*y1^8*y6^2+4*y1^10*y10-y1^14*y6",
          "5*y6^4+30*y1^2*y6^2*y10+15*y1^4*y10^2-2*y1^9*y15-5*y1^12*y6^2+y1^14*y10",
          "y15^2-8*y10^3+y6^5-2*y1^3*y6^2*y15+3*y1^4*y6*y10^2-8*y1^5*y10*y15+6*y1^9*y6*y15-9*y1^10*y10^2"
          "-y1^12*y6^3-2*y1^14*y6*y10-3*y1^15*y15+8*y1^20*y10+y1^24*y6-y1^30"}},
    };
    return data;
}

inline const PrintedPresentation& printed(const std::string& space) {
    for (const auto& p : printed_presentations())
        if (p.space == space) return p;
    throw std::out_of_range(space);
}

// b(q), delta_q for the printed relations and rank of A^q, at real degree q.
struct Checkpoint {
    std::string space;
    int real_degree;
    long long b, delta, beta;
};

inline const std::vector<Checkpoint>& checkpoints() {
    static const std::vector<Checkpoint> data = {
        {"F4/C3", 24, 16, 15, 1},  {"F4/B3", 24, 4, 3, 1},    {"E6/A6", 24, 16, 11, 5}, {"E6/A6", 30, 24, 20, 4},
        {"E7/E6", 38, 8, 6, 2},    {"E7/E6", 46, 10, 9, 1},   {"E7/D6", 36, 17, 11, 6}, {"E7/D6", 52, 32, 29, 3},
    };
    return data;
}

inline const Checkpoint& e8_checkpoint() {
    static const Checkpoint c{"E8/E7", 60, 18, 11, 7};
    return c;
}

// Worked example over Z[y1, y5, y9].
struct DeficiencyExample {
    std::vector<std::pair<std::string, int>> variables{{"y1", 2}, {"y5", 10}, {"y9", 18}};
    std::vector<std::string> relations{"y5^2-2*y1*y9", "2*y5*y9-18*y1^5*y9+6*y1^9*y5-y1^14",
                                       "y9^2+20*y1^4*y5*y9+2*y1^13*y5-18*y1^9*y9"};
    int real_degree = 36;
    std::vector<std::string> basis{"y9^2", "y1^3*y5^3", "y1^4*y5*y9", "y1^8*y5^2", "y1^9*y9", "y1^13*y5", "y1^18"};
    // Rows for r18, y1^4*r14, y1^3*y5*r10, y1^8*r10 in that order.
    std::vector<std::vector<long long>> matrix{{1, 0, 20, 0, -18, 2, 0},
                                               {0, 0, 2, 0, -18, 6, -1},
                                               {0, 1, -2, 0, 0, 0, 0},
                                               {0, 0, 0, 1, -2, 0, 0}};
    std::vector<std::pair<std::string, int>> row_sources{{"1", 2}, {"y1^4", 1}, {"y1^3*y5", 0}, {"y1^8", 0}};
    long long b = 7, delta = 4;
};

// Linear system fixing the odd lift on E6/D5 in degree 8.
struct OddLiftExample {
    std::string space = "E6/D5";
    std::vector<Word> classes{{1, 5, 4, 2, 3, 4, 5, 6}, {3, 1, 4, 2, 3, 4, 5, 6}, {6, 5, 4, 2, 3, 4, 5, 6}};
    std::vector<std::string> monomials{"y1^8", "y1^4*y4", "y4^2"};
    std::vector<std::vector<long long>> matrix{{7, 3, 1}, {5, 2, 1}, {2, 1, 1}};
    std::vector<long long> target{1, -1, -1};
    std::vector<long long> solution{-2, 6, -3};
};

// Gysin tables. An even relation reads  basis_coeff * sbar_basis = sign * prod(factors)  (sign free when pm).
// An erratum entry keeps the printed relation, which must fail, and the corrected one, which must hold.
struct EvenRelation {
    int basis_coeff;
    int sign;
    std::vector<ClassIndex> factors;
    bool pm = false;
    bool erratum = false;
    int fixed_basis_coeff = 0;
    int fixed_sign = 0;
};

struct EvenRow {
    int q;
    int order;  // 0 for Z
    ClassIndex basis;
    std::vector<EvenRelation> relations;
};

struct Term {
    ClassIndex s;
    int coeff;
};

// lhs_coeff * prod(lhs_factors) * d_{lhs_source} = +- prod(rhs_factors) * d_{rhs_source}
struct OddRelation {
    int lhs_coeff;
    std::vector<ClassIndex> lhs_factors;
    int lhs_source;
    std::vector<ClassIndex> rhs_factors;
    int rhs_source;
};

struct OddRow {
    int q;
    std::vector<Term> beta;
    std::vector<OddRelation> relations;
};

struct GysinTable {
    std::string space;
    std::vector<EvenRow> even;
    std::vector<OddRow> odd;
    std::vector<int> unlisted;  // nontrivial degrees missing from the printed table
};

inline std::vector<Term> terms(int r, std::vector<int> coeffs) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) out.push_back({{r, static_cast<int>(i) + 1}, coeffs[i]});
    return out;
}

inline const std::vector<GysinTable>& gysin_tables() {
    using V = std::vector<ClassIndex>;
    static const std::vector<GysinTable> data = {
        {"F4/C3",
         {{6, 2, {3, 1}, {}},
          {8, 0, {4, 2}, {}},
          {12, 4, {6, 2}, {{-2, 1, V{{3, 1}, {3, 1}}}}},
          {14, 2, {7, 1}, {{1, 1, V{{3, 1}, {4, 2}}}}},
          {16, 3, {8, 1}, {{1, -1, V{{4, 2}, {4, 2}}}}},
          {18, 2, {9, 2}, {{1, 1, V{{3, 1}, {6, 2}}}}},
          {20, 4, {10, 2}, {{1, 1, V{{4, 2}, {6, 2}}}}},
          {26, 2, {13, 1}, {{1, 1, V{{3, 1}, {4, 2}, {6, 2}}}}}},
         {{23, terms(11, {2, -1}), {}}, {31, terms(15, {1}), {{1, {}, 31, V{{4, 2}}, 23}}}},
         {}},
        {"F4/B3",
         {{8, 0, {4, 2}, {}}, {16, 3, {8, 1}, {{1, 1, V{{4, 2}, {4, 2}}}}}},
         {{23, terms(11, {-1, 1}), {}}, {31, terms(15, {1}), {{1, {}, 31, V{{4, 2}}, 23}}}},
         {}},
        {"E6/A6",
         {{6, 0, {3, 2}, {}},
          {8, 0, {4, 3}, {}},
          {12, 0, {6, 1}, {{-2, 1, V{{3, 2}, {3, 2}}}}},
          {14, 0, {7, 1}, {{1, 1, V{{3, 2}, {4, 3}}}}},
          {16, 3, {8, 1}, {{1, 1, V{{4, 3}, {4, 3}}}}},
          {18, 2, {9, 1}, {{1, 1, V{{3, 2}, {6, 1}}}}},
          {20, 0, {10, 1}, {{1, -1, V{{4, 3}, {6, 1}}}}},
          {22, 3, {11, 1}, {{1, 1, V{{4, 3}, {4, 3}, {3, 2}}}}},
          {26, 2, {13, 2}, {{1, 1, V{{3, 2}, {4, 3}, {6, 1}}}}},
          {28, 3, {14, 1}, {{1, -1, V{{4, 3}, {4, 3}, {6, 1}}, false, true, 1, 1}}}},
         {{23, terms(11, {1, -1, -1, 1, -1, 1}), {}},
          {29, terms(14, {-1, 1, 0, 1, -1}), {{2, {}, 29, V{{3, 2}}, 23}}},
          {31, terms(15, {1, -2, 1, -1}), {{1, {}, 31, V{{4, 3}}, 23}}},
          {35, terms(17, {-1, 1, 1}), {{1, {}, 35, V{{6, 1}}, 23}}},
          {37, terms(18, {-1, 1}), {{1, {}, 37, V{{4, 3}}, 29}}},
          // printed as s_{22,1}; the top degree of E6/A6 is 21
          {43, terms(21, {1}), {{1, {}, 43, V{{4, 3}, {6, 1}}, 23}}}},
         {}},
        {"E6/D5",
         {{8, 0, {4, 1}, {}}, {16, 0, {8, 1}, {{1, 1, V{{4, 1}, {4, 1}}, false, true, 1, -1}}}},
         {{17, terms(8, {1, -1, -1}), {}},
          {25, terms(12, {1, -1}), {{1, {}, 25, V{{4, 1}}, 17}}},
          {33, terms(16, {1}), {{1, {}, 33, V{{4, 1}, {4, 1}}, 17}}}},
         {}},
        {"E7/E6",
         {{10, 0, {5, 1}, {}}, {18, 0, {9, 1}, {}}, {28, 2, {14, 1}, {{1, 1, V{{5, 1}, {9, 1}}}}}},
         {{37, terms(18, {1, -1, 1}), {}},
          {45, terms(22, {1, -1}), {}},
          {55, terms(27, {1}), {{1, V{{9, 1}}, 37, V{{5, 1}}, 45}}}},
         {}},
        {"E7/D6",
         {{8, 0, {4, 1}, {}},
          {12, 0, {6, 1}, {}},
          {16, 0, {8, 1}, {{1, 1, V{{4, 1}, {4, 1}}}}},
          {18, 2, {9, 2}, {}},
          {20, 0, {10, 1}, {{1, 1, V{{4, 1}, {6, 1}}}}},
          {24, 0, {12, 2}, {{1, 1, V{{6, 1}, {6, 1}}}, {3, 1, V{{4, 1}, {4, 1}, {4, 1}}}}},
          {26, 2, {13, 1}, {{1, 1, V{{4, 1}, {9, 2}}}}},
          {28, 3, {14, 1}, {{1, -1, V{{4, 1}, {4, 1}, {6, 1}}}}},
          {30, 2, {15, 1}, {{1, 1, V{{6, 1}, {9, 2}}}}},
          {32, 0, {16, 1}, {{1, 1, V{{4, 1}, {6, 1}, {6, 1}}}}},
          {34, 2, {17, 2}, {{1, 1, V{{4, 1}, {4, 1}, {9, 2}}}}},
          {38, 2, {19, 2}, {{1, 1, V{{4, 1}, {6, 1}, {9, 2}}}}},
          {40, 3, {20, 1}, {{1, 1, V{{4, 1}, {4, 1}, {6, 1}, {6, 1}}}}},
          {42, 2, {21, 3}, {{1, 1, V{{4, 1}, {4, 1}, {4, 1}, {9, 2}}}}},
          {50, 2, {25, 1}, {{1, 1, V{{4, 1}, {4, 1}, {4, 1}, {4, 1}, {9, 2}}}}}},
         {{35, terms(17, {1, -1, -1, 1, -1, 1, -1}), {}},
          {43, terms(21, {1, -2, 1, -3, 2, -1}), {{1, {}, 43, V{{4, 1}}, 35}}},
          {47, terms(23, {2, -1, 1, -1, 1}), {{1, {}, 47, V{{6, 1}}, 35}}},
          {51, terms(25, {1, -1, 0, -1}), {{3, {}, 51, V{{4, 1}, {4, 1}}, 35}}},
          {55, terms(27, {1, 1, -1}), {{1, {}, 55, V{{4, 1}, {6, 1}}, 35}}},
          {59, terms(29, {1, -1}), {{1, {}, 59, V{{6, 1}, {6, 1}}, 35}, {1, {}, 59, V{{4, 1}}, 51}}},
          {67, terms(33, {1}), {{1, V{{4, 1}, {6, 1}, {6, 1}}, 35, V{{4, 1}, {4, 1}}, 51}}}},
         {}},
        {"E8/E7",
         {{12, 0, {6, 2}, {}},
          {20, 0, {10, 1}, {}},
          {24, 0, {12, 1}, {{1, 1, V{{6, 2}, {6, 2}}, true}}},
          {30, 2, {15, 4}, {}},
          {32, 0, {16, 1}, {{1, 1, V{{6, 2}, {10, 1}}, true}}},
          {36, 0, {18, 2}, {{1, 1, V{{6, 2}, {6, 2}, {6, 2}}, true}}},
          {40, 3, {20, 1}, {{1, 1, V{{10, 1}, {10, 1}}, true}}},
          {42, 2, {21, 3}, {{1, 1, V{{6, 2}, {15, 4}}, true}}},
          {44, 0, {22, 1}, {{1, 1, V{{6, 2}, {6, 2}, {10, 1}}, true}}},
          {48, 5, {24, 1}, {{1, 1, V{{6, 2}, {6, 2}, {6, 2}, {6, 2}}, true, true, 2, 1}}},
          {50, 2, {25, 1}, {{1, 1, V{{10, 1}, {15, 4}}, true}}},
          {52, 3, {26, 1}, {{1, 1, V{{6, 2}, {10, 1}, {10, 1}}, true}}},
          {54, 2, {27, 1}, {{1, 1, V{{6, 2}, {6, 2}, {15, 4}}, true}}},
          {56, 0, {28, 1}, {{1, 1, V{{6, 2}, {6, 2}, {6, 2}, {10, 1}}, true}}},
          {62, 2, {31, 2}, {{1, 1, V{{6, 2}, {10, 1}, {15, 4}}, true}}},
          {64, 3, {32, 1}, {{1, 1, V{{6, 2}, {6, 2}, {10, 1}, {10, 1}}, true}}},
          {66, 2, {33, 3}, {{1, 1, V{{6, 2}, {6, 2}, {6, 2}, {15, 4}}, true}}},
          {68, 5, {34, 1}, {{1, 1, V{{6, 2}, {6, 2}, {6, 2}, {6, 2}, {10, 1}}, true, true, 2, 1}}},
          {74, 2, {37, 2}, {{1, 1, V{{6, 2}, {6, 2}, {10, 1}, {15, 4}}, true}}},
          {76, 3, {38, 1}, {{1, 1, V{{6, 2}, {6, 2}, {6, 2}, {10, 1}, {10, 1}}, true}}},
          // printed with sbar_{10,1}^2, which has degree 53
          {86, 2, {43, 1}, {{1, 1, V{{6, 2}, {6, 2}, {6, 2}, {10, 1}, {15, 4}}, true}}}},
         {{59, terms(29, {1, -1, -1, 1, -1, 1, -1, 1}), {}},
          {71, terms(35, {2, -3, -1, 1, 1, -1, 1}), {{1, {}, 71, V{{6, 2}}, 59}}},
          {79, terms(39, {2, -1, -1, -1, 1, -2}), {{1, {}, 79, V{{10, 1}}, 59}}},
          // the table cell repeats the H^71 entry; the accompanying derivation gives sbar_{6,2} d_71
          {83, terms(41, {2, -1, 1, -1, 1}), {{1, {}, 83, V{{6, 2}}, 71}}},
          {91, terms(45, {1, -1, -1, 1}), {{1, {}, 91, V{{6, 2}, {10, 1}}, 59}}},
          {95, terms(47, {1, -1, 1}), {{1, {}, 95, V{{6, 2}, {6, 2}, {6, 2}}, 59}}},
          {103, terms(51, {-1, 1}), {{1, {}, 103, V{{6, 2}, {6, 2}, {10, 1}}, 59}}}},
         {115}},
    };
    return data;
}

// Degrees of the nonzero rational homotopy groups of the circle bundles.
inline const std::vector<std::pair<std::string, std::vector<int>>>& rational_homotopy_table() {
    static const std::vector<std::pair<std::string, std::vector<int>>> data = {
        {"F4/C3", {2, 8, 15, 23}},          {"F4/B3", {2, 8, 15, 23}},          {"E6/A6", {2, 6, 8, 15, 17, 23}},
        {"E6/D5", {2, 8, 17, 23}},          {"E7/E6", {2, 10, 18, 19, 27, 35}}, {"E7/D6", {2, 8, 12, 23, 27, 35}},
        {"E8/E7", {2, 12, 20, 39, 47, 59}},
    };
    return data;
}

}  // namespace paper
