#pragma once

#include "int_linalg.hpp"
#include "int_poly.hpp"
#include "schubert_engine.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowring {

// Finitely generated abelian group as Z^free + sum Z_d.
struct GroupStructure {
    int free_rank = 0;
    std::vector<BigInt> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }

    std::string to_string() const {
        if (trivial()) return "0";
        std::string s;
        auto add = [&](const std::string& part) { s += (s.empty() ? "" : "+") + part; };
        for (int i = 0; i < free_rank; ++i) add("Z");
        for (const auto& d : torsion) add("Z_" + d.str());
        return s;
    }

    friend bool operator==(const GroupStructure& a, const GroupStructure& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

// H^{2k}(G/H_s) = coker(A_k) with a coordinate map and a Schubert-class lift of a generating set.
struct EvenDegreeData {
    int k = 0;
    GroupStructure group;
    IntMatrix A;                       // A_k, beta(k-1) x beta(k)
    IntMatrix Q;                       // right transform of the SNF of A_k
    std::vector<std::size_t> coords;   // SNF coordinates carrying the nontrivial summands
    std::vector<BigInt> orders;        // matching orders, 0 for free
    std::vector<int> basis;            // lifted Schubert classes (table ids)
};

// H^{2k+1}(G/H_s) = ker(omega : A^k -> A^{k+1}).
struct OddDegreeData {
    int k = 0;
    std::vector<SchubertCombination> kernel_basis;
};

// An even-ring presentation relation h in the generators other than omega.
struct EvenRelation {
    int degree = 0;     // complex degree
    IntPolynomial poly;
    BigInt order = 0;   // order of the class of h in K_m / I_m (0 when free)
};

struct ModuleGenerator {
    int k = 0;  // the generator lives in H^{2k+1}
    SchubertCombination klass;
    BigInt order = 0;
};

struct RingRule {
    std::vector<int> factors;                 // lifted basis classes
    int degree = 0;
    std::vector<BigInt> coefficients;         // over the lifted basis in that degree
    std::vector<BigInt> orders;               // modulus per coefficient (0 = exact)
};

class GysinComputation {
public:
    explicit GysinComputation(const SchubertEngine& engine) : engine_(engine) {
        const CosetTable& t = engine_.table();
        engine_.omega();
        const int N = t.top_degree();
        for (int k = 0; k <= N; ++k) even_.push_back(compute_even(k));
        for (int k = 0; k <= N; ++k) odd_.push_back(compute_odd(k));
    }

    const SchubertEngine& engine() const { return engine_; }
    int top_degree() const { return engine_.table().top_degree(); }

    const EvenDegreeData& even(int k) const { return even_.at(k); }
    const OddDegreeData& odd(int k) const { return odd_.at(k); }

    // Group in real degree q.
    GroupStructure group(int q) const {
        if (q < 0) return {};
        if (q % 2 == 0) return q / 2 <= top_degree() ? even_[q / 2].group : GroupStructure{};
        int k = (q - 1) / 2;
        if (k > top_degree()) return {};
        return GroupStructure{static_cast<int>(odd_[k].kernel_basis.size()), {}};
    }

    // Coordinates of x in A^k inside coker(A_k), one per nontrivial summand (torsion reduced to [0, d)).
    IntVector coker_coordinates(int k, const IntVector& x) const {
        const EvenDegreeData& e = even_.at(k);
        IntVector y = e.Q.rows() ? vec_times_matrix(x, e.Q) : IntVector{};
        IntVector out;
        for (std::size_t i = 0; i < e.coords.size(); ++i) {
            BigInt v = y[e.coords[i]];
            if (e.orders[i] != 0) {
                BigInt q, r;
                floor_divmod(v, e.orders[i], q, r);
                v = r;
            }
            out.push_back(v);
        }
        return out;
    }

    bool is_zero_in_coker(int k, const IntVector& x) const {
        for (const auto& c : coker_coordinates(k, x))
            if (c != 0) return false;
        return true;
    }

    // Whether the class x generates H^{2k} (meaningful for cyclic groups).
    bool generates(int k, const IntVector& x) const {
        const EvenDegreeData& e = even_.at(k);
        if (e.coords.size() != 1) return false;
        BigInt c = coker_coordinates(k, x)[0];
        if (e.orders[0] == 0) return c == 1 || c == -1;
        return gcd(c, e.orders[0]) == 1;
    }

    // Expresses x in A^k over the lifted basis of H^{2k}; symmetric residues for torsion summands.
    std::vector<BigInt> in_lifted_basis(int k, const IntVector& x) const {
        const EvenDegreeData& e = even_.at(k);
        const CosetTable& t = engine_.table();
        std::vector<BigInt> out;
        if (e.basis.empty()) return out;
        IntMatrix S = e.A;
        if (S.cols() == 0) S = IntMatrix(0, t.beta(k));
        for (int id : e.basis) {
            IntVector unit(t.beta(k));
            unit[id - t.first_of_degree(k)] = 1;
            S.append_row(unit);
        }
        auto sol = solve_left(S, x);
        if (!sol) throw ConsistencyError("lifted basis does not span H^" + std::to_string(2 * k));
        for (std::size_t j = 0; j < e.basis.size(); ++j) {
            BigInt c = (*sol)[e.A.rows() + j];
            BigInt ord = order_of_basis(k, j);
            if (ord != 0) c = symmetric_residue(c, ord);
            out.push_back(c);
        }
        return out;
    }

    // Order of the j-th lifted basis element in H^{2k}.
    BigInt order_of_basis(int k, std::size_t j) const {
        const EvenDegreeData& e = even_.at(k);
        const CosetTable& t = engine_.table();
        IntVector unit(t.beta(k));
        unit[e.basis.at(j) - t.first_of_degree(k)] = 1;
        IntVector c = coker_coordinates(k, unit);
        bool any_free = false;
        BigInt l = 1;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            if (e.orders[i] == 0) {
                any_free = true;
            } else {
                BigInt ord = e.orders[i] / gcd(c[i], e.orders[i]);
                l = l / gcd(l, ord) * ord;
            }
        }
        return any_free ? BigInt(0) : l;
    }

    // Products of pairs of lifted basis elements expressed over the lifted basis.
    std::vector<RingRule> even_ring_table() const {
        std::vector<RingRule> rules;
        std::vector<int> all;
        for (const auto& e : even_)
            for (int id : e.basis) all.push_back(id);
        const CosetTable& t = engine_.table();
        for (std::size_t a = 0; a < all.size(); ++a)
            for (std::size_t b = a; b < all.size(); ++b) {
                int d = t.rep(all[a]).length + t.rep(all[b]).length;
                if (d > top_degree()) continue;
                if (even_[d].basis.empty()) continue;
                rules.push_back(rule_for({all[a], all[b]}));
            }
        return rules;
    }

    RingRule rule_for(const std::vector<int>& factors) const {
        const CosetTable& t = engine_.table();
        RingRule r;
        r.factors = factors;
        for (int id : factors) r.degree += t.rep(id).length;
        if (r.degree > top_degree()) return r;
        SchubertCombination p = engine_.product(factors);
        r.coefficients = in_lifted_basis(r.degree, to_vector(t, p, r.degree));
        for (std::size_t j = 0; j < even_[r.degree].basis.size(); ++j) r.orders.push_back(order_of_basis(r.degree, j));
        return r;
    }

    // Minimal generators of H^odd as a module over H^even, in increasing degree.
    std::vector<ModuleGenerator> odd_module_generators() const {
        const CosetTable& t = engine_.table();
        std::vector<ModuleGenerator> out;
        for (int k = 0; k <= top_degree(); ++k) {
            const auto& basis = odd_[k].kernel_basis;
            if (basis.empty()) continue;
            IntMatrix K(0, t.beta(k));
            for (const auto& x : basis) K.append_row(to_vector(t, x, k));
            IntMatrix S(0, t.beta(k));
            for (int j = 0; j < k; ++j)
                for (const auto& x : odd_[j].kernel_basis)
                    for (int u = t.first_of_degree(k - j); u < t.first_of_degree(k - j) + t.beta(k - j); ++u) {
                        IntVector v = to_vector(t, engine_.multiply(schubert_class(t, u), x), k);
                        if (!is_zero_vector(v)) S.append_row(v);
                    }
            LatticeQuotient q = lattice_quotient(K, S.rows() ? hermite_normal_form(S) : S);
            for (std::size_t i = 0; i < q.generators.size(); ++i) {
                IntVector g = q.generators[i];
                if (S.rows()) g = reduce_mod_hnf(g, hermite_normal_form(S));
                normalize_sign(g);
                out.push_back(ModuleGenerator{k, from_vector(t, g, k), q.orders[i]});
            }
        }
        return out;
    }

    // Relations h_i presenting H^even(G/H_s) on the generators other than omega (binding entry 0 must be omega).
    std::vector<EvenRelation> even_ring_relations(const GeneratorBinding& binding) const {
        const CosetTable& t = engine_.table();
        if (binding.size() == 0 || binding.generators[0].rep != engine_.omega())
            throw std::invalid_argument("the first generator must be the degree-1 class");
        const std::size_t n = binding.size();
        std::vector<int> bar_degrees;
        for (std::size_t i = 1; i < n; ++i) bar_degrees.push_back(binding.ring->degree(i));
        std::vector<EvenRelation> rels;
        if (bar_degrees.empty()) return rels;
        const int maxdeg = *std::max_element(bar_degrees.begin(), bar_degrees.end()) / 2;
        const int N = top_degree();
        auto lift = [&](const Exponent& bar) {
            Exponent e(n, 0);
            for (std::size_t i = 1; i < n; ++i) e[i] = bar[i - 1];
            return e;
        };
        for (int m = 1; m <= N + maxdeg; ++m) {
            MonomialBasis B = monomial_basis(bar_degrees, 2LL * m);
            if (B.size() == 0) continue;
            IntMatrix K;
            if (m > N) {
                K = IntMatrix::identity(B.size());
            } else {
                IntMatrix stacked(0, t.beta(m));
                for (const auto& bar : B.monomials)
                    stacked.append_row(to_vector(t, engine_.expand_monomial(binding, lift(bar)), m));
                const IntMatrix& A = even_[m].A;
                for (std::size_t i = 0; i < A.rows(); ++i) stacked.append_row(A.row(i));
                IntMatrix ns = integer_nullspace(stacked);
                IntMatrix proj(0, B.size());
                for (std::size_t i = 0; i < ns.rows(); ++i) {
                    IntVector v(B.size());
                    for (std::size_t j = 0; j < B.size(); ++j) v[j] = ns(i, j);
                    if (!is_zero_vector(v)) proj.append_row(v);
                }
                K = proj.rows() ? hermite_normal_form(proj) : IntMatrix(0, B.size());
            }
            if (K.rows() == 0) continue;
            IntMatrix I(0, B.size());
            for (const auto& h : rels) {
                long long rest = 2LL * m - 2LL * h.degree;
                if (rest < 0) continue;
                MonomialBasis C = monomial_basis(bar_degrees, rest);
                for (const auto& mono : C.monomials) {
                    IntVector v(B.size());
                    for (const auto& [e, c] : h.poly.terms()) {
                        Exponent bar(e.begin() + 1, e.end());
                        for (std::size_t i = 0; i < bar.size(); ++i) bar[i] += mono[i];
                        int idx = B.index_of(bar);
                        if (idx < 0) throw std::logic_error("even_ring_relations: monomial outside basis");
                        v[idx] += c;
                    }
                    I.append_row(v);
                }
            }
            IntMatrix Ih = I.rows() ? hermite_normal_form(I) : I;
            LatticeQuotient q = lattice_quotient(K, Ih);
            for (std::size_t i = 0; i < q.generators.size(); ++i) {
                IntVector g = Ih.rows() ? reduce_mod_hnf(q.generators[i], Ih) : q.generators[i];
                normalize_sign(g);
                IntPolynomial h(binding.ring);
                for (std::size_t j = 0; j < B.size(); ++j) h.add_term(lift(B.monomials[j]), g[j]);
                rels.push_back(EvenRelation{m, h, q.orders[i]});
            }
        }
        return rels;
    }

    static BigInt symmetric_residue(const BigInt& c, const BigInt& d) {
        BigInt q, r;
        floor_divmod(c, d, q, r);
        if (2 * r > d) r -= d;
        return r;
    }

    static void normalize_sign(IntVector& v) {
        for (const auto& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : v) y = -y;
            return;
        }
    }

private:
    EvenDegreeData compute_even(int k) const {
        const CosetTable& t = engine_.table();
        EvenDegreeData e;
        e.k = k;
        e.A = k == 0 ? IntMatrix(0, 1) : engine_.chevalley_matrix(k);
        const std::size_t n = t.beta(k);
        SmithForm s = smith_normal_form(e.A.rows() ? e.A : IntMatrix(0, n));
        e.Q = s.Q;
        for (std::size_t i = 0; i < n; ++i) {
            BigInt d = i < s.rank ? s.diagonal[i] : BigInt(0);
            if (d == 1) continue;
            e.coords.push_back(i);
            e.orders.push_back(d);
            if (d == 0) ++e.group.free_rank;
            else e.group.torsion.push_back(d);
        }
        e.basis = choose_basis(k, e, s);
        return e;
    }

    // Lowest-index Schubert classes whose images generate coker(A_k) with the minimal number of generators.
    std::vector<int> choose_basis(int k, const EvenDegreeData& e, const SmithForm&) const {
        const CosetTable& t = engine_.table();
        const std::size_t need = e.coords.size();
        const int n = t.beta(k);
        if (need == 0) return {};
        std::vector<int> pick(need);
        for (std::size_t i = 0; i < need; ++i) pick[i] = static_cast<int>(i);
        for (;;) {
            IntMatrix S = e.A.rows() ? e.A : IntMatrix(0, n);
            for (int j : pick) {
                IntVector unit(n);
                unit[j] = 1;
                S.append_row(unit);
            }
            SmithForm s = smith_normal_form(S, false);
            if (s.rank == static_cast<std::size_t>(n) && s.unit_count() == static_cast<std::size_t>(n)) {
                std::vector<int> ids;
                for (int j : pick) ids.push_back(t.first_of_degree(k) + j);
                return ids;
            }
            // next combination in lex order
            int pos = static_cast<int>(need) - 1;
            while (pos >= 0 && pick[pos] == n - static_cast<int>(need) + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (std::size_t i = pos + 1; i < need; ++i) pick[i] = pick[i - 1] + 1;
        }
        throw ConsistencyError("no Schubert-class lift generates H^" + std::to_string(2 * k));
    }

    OddDegreeData compute_odd(int k) const {
        const CosetTable& t = engine_.table();
        OddDegreeData o;
        o.k = k;
        IntMatrix A = k + 1 <= top_degree() ? even_[k + 1].A : IntMatrix(t.beta(k), 0);
        IntMatrix ns = A.cols() == 0 ? IntMatrix::identity(t.beta(k)) : integer_nullspace(A);
        for (std::size_t i = 0; i < ns.rows(); ++i) {
            IntVector v = ns.row(i);
            normalize_sign(v);
            o.kernel_basis.push_back(from_vector(t, v, k));
        }
        return o;
    }

    const SchubertEngine& engine_;
    std::vector<EvenDegreeData> even_;
    std::vector<OddDegreeData> odd_;
};

}  // namespace chowring
