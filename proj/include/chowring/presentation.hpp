#pragma once

#include "gysin.hpp"
#include "int_linalg.hpp"
#include "int_poly.hpp"
#include "schubert_engine.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace chowring {

class UnsolvableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Relation {
    std::string name;
    int degree = 0;  // complex degree
    IntPolynomial poly;
    std::string origin;  // "even" (lift of an h), "odd" (omega times a lifted odd class) or "kernel"
    int odd_source = -1;  // index into Presentation::odd_generators when origin is "odd"
};

struct CertificateRow {
    int degree = 0;  // complex degree m, checked in real degree 2m
    std::size_t b = 0;
    std::size_t delta = 0;
    int beta = 0;
    bool ok = false;
};

struct Presentation {
    std::string label;
    GeneratorBinding binding;
    std::vector<Relation> relations;
    std::vector<EvenRelation> even_relations;      // the h_i
    std::vector<ModuleGenerator> odd_generators;   // the d_j
    std::vector<IntPolynomial> odd_lifts;          // g_j with pi(g_j) = beta(d_j)
    std::vector<bool> odd_eliminated;              // whether omega*g_j lies in the ideal of the r_i
    std::vector<CertificateRow> certificate;
};

// Expands y^alpha * p in the lex basis of degree m (real).
inline IntVector coefficient_row(const MonomialBasis& B, const IntPolynomial& p, const Exponent& shift) {
    IntVector row(B.size());
    for (const auto& [e, c] : p.terms()) {
        Exponent f = e;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
        int idx = B.index_of(f);
        if (idx < 0) throw std::invalid_argument("relation is not homogeneous");
        row[idx] += c;
    }
    return row;
}

// M_m(r_1..r_k): rows y^alpha r_i ordered by (relation, lex alpha); columns lex B(m). m is a real degree.
inline IntMatrix relation_matrix(const RingPtr& ring, const std::vector<IntPolynomial>& relations, long long m) {
    MonomialBasis B = monomial_basis(ring->degrees(), m);
    IntMatrix M(0, B.size());
    for (const auto& r : relations) {
        if (r.is_zero()) continue;
        long long rest = m - r.degree();
        if (rest < 0) continue;
        for (const auto& alpha : monomial_basis(ring->degrees(), rest).monomials) M.append_row(coefficient_row(B, r, alpha));
    }
    return M;
}

// delta_m: number of unit invariant factors of M_m.
inline std::size_t deficiency(const RingPtr& ring, const std::vector<IntPolynomial>& relations, long long m) {
    IntMatrix M = relation_matrix(ring, relations, m);
    if (M.rows() == 0 || M.cols() == 0) return 0;
    return smith_normal_form(M, false).unit_count();
}

inline std::vector<IntPolynomial> polys_of(const std::vector<Relation>& rels) {
    std::vector<IntPolynomial> out;
    for (const auto& r : rels) out.push_back(r.poly);
    return out;
}

// Integer basis of ker pi_m as polynomials.
inline std::vector<IntPolynomial> kernel_basis(const SchubertEngine& engine, const GeneratorBinding& b, int m) {
    MonomialBasis B = monomial_basis(b.ring->degrees(), 2LL * m);
    std::vector<IntPolynomial> out;
    if (B.size() == 0) return out;
    IntMatrix ns;
    if (m > engine.table().top_degree()) {
        ns = IntMatrix::identity(B.size());
    } else {
        IntMatrix M = engine.structure_matrix(b, m);
        ns = M.cols() == 0 ? IntMatrix::identity(B.size()) : integer_nullspace(M);
    }
    for (std::size_t i = 0; i < ns.rows(); ++i) {
        IntPolynomial p(b.ring);
        for (std::size_t j = 0; j < B.size(); ++j) p.add_term(B.monomials[j], ns(i, j));
        out.push_back(p);
    }
    return out;
}

inline bool in_kernel(const SchubertEngine& engine, const GeneratorBinding& b, const IntPolynomial& f) {
    if (f.is_zero()) return true;
    long long d = f.degree();
    if (d % 2 != 0) return false;
    if (d / 2 > engine.table().top_degree()) return true;
    return engine.expand_polynomial(b, f).is_zero();
}

inline CertificateRow hilbert_row(const SchubertEngine& engine, const GeneratorBinding& b,
                                  const std::vector<IntPolynomial>& relations, int m) {
    CertificateRow row;
    row.degree = m;
    row.b = monomial_basis(b.ring->degrees(), 2LL * m).size();
    row.delta = deficiency(b.ring, relations, 2LL * m);
    row.beta = engine.table().beta(m);
    row.ok = static_cast<long long>(row.b) - static_cast<long long>(row.delta) == row.beta;
    return row;
}

// Per degree: beta(m) == b(2m) - delta_{2m}.
inline std::vector<bool> elimination_check(const SchubertEngine& engine, const GeneratorBinding& b,
                                           const std::vector<IntPolynomial>& relations, const std::vector<int>& degrees) {
    for (const auto& r : relations)
        if (!in_kernel(engine, b, r)) throw std::invalid_argument("relation " + to_string(r) + " is not in the kernel of pi");
    std::vector<bool> out;
    for (int m : degrees) out.push_back(hilbert_row(engine, b, relations, m).ok);
    return out;
}

// Solves pi(g) = target over Z; the solution is reduced modulo the kernel lattice for determinism.
inline IntPolynomial lift_odd_class(const SchubertEngine& engine, const GeneratorBinding& b,
                                    const SchubertCombination& target, int m) {
    const CosetTable& t = engine.table();
    IntPolynomial g(b.ring);
    if (target.is_zero()) return g;
    IntVector rhs = to_vector(t, target, m);
    MonomialBasis B = monomial_basis(b.ring->degrees(), 2LL * m);
    IntMatrix M = engine.structure_matrix(b, m);
    auto x = solve_left(M, rhs);
    if (!x) throw UnsolvableError("no integral polynomial in the generators maps to " + to_string(t, target));
    IntMatrix ns = integer_nullspace(M);
    IntVector v = ns.rows() ? reduce_mod_hnf(*x, ns) : *x;
    for (std::size_t j = 0; j < B.size(); ++j) g.add_term(B.monomials[j], v[j]);
    return g;
}

// Lifts h (free of omega) to h + omega*f in ker pi.
inline IntPolynomial lift_even_relation(const SchubertEngine& engine, const GeneratorBinding& b, const IntPolynomial& h) {
    const CosetTable& t = engine.table();
    const int m = static_cast<int>(h.degree() / 2);
    if (m > t.top_degree()) return h;
    IntVector rhs = to_vector(t, engine.expand_polynomial(b, h), m);
    for (auto& x : rhs) x = -x;
    MonomialBasis C = monomial_basis(b.ring->degrees(), 2LL * (m - 1));
    IntMatrix Y(0, t.beta(m));
    std::vector<Exponent> shifted;
    for (const auto& e : C.monomials) {
        Exponent f = e;
        f[0] += 1;
        shifted.push_back(f);
        Y.append_row(to_vector(t, engine.expand_monomial(b, f), m));
    }
    if (is_zero_vector(rhs)) return h;
    auto x = Y.rows() ? solve_left(Y, rhs) : std::nullopt;
    if (!x) throw UnsolvableError("cannot lift " + to_string(h) + " to a relation (no omega-multiple correction)");
    IntMatrix ns = integer_nullspace(Y);
    IntVector v = ns.rows() ? reduce_mod_hnf(*x, ns) : *x;
    IntPolynomial r = h;
    for (std::size_t j = 0; j < shifted.size(); ++j) r.add_term(shifted[j], v[j]);
    return r;
}

struct GiambelliResult {
    int degree = 0;
    std::vector<RatPolynomial> polynomials;  // one per s_{m,k}
    bool integral = true;
    std::vector<BigInt> invariant_factors;
};

// Schubert classes of degree m as polynomials in the generators, via the SNF of M(pi_m).
inline GiambelliResult giambelli(const SchubertEngine& engine, const GeneratorBinding& b, int m, bool allow_rational = true) {
    const CosetTable& t = engine.table();
    GiambelliResult out;
    out.degree = m;
    const std::size_t beta = t.beta(m);
    MonomialBasis B = monomial_basis(b.ring->degrees(), 2LL * m);
    IntMatrix M = engine.structure_matrix(b, m);
    SmithForm s = smith_normal_form(M);
    out.invariant_factors.assign(s.diagonal.begin(), s.diagonal.begin() + std::min(s.rank, s.diagonal.size()));
    if (s.rank < beta) {
        std::ostringstream msg;
        msg << "pi_" << m << " is not surjective: rank " << s.rank << " < beta(" << m << ") = " << beta;
        throw UnsolvableError(msg.str());
    }
    std::vector<BigInt> torsion;
    for (std::size_t i = 0; i < beta; ++i)
        if (s.diagonal[i] != 1) torsion.push_back(s.diagonal[i]);
    if (!torsion.empty()) {
        out.integral = false;
        if (!allow_rational) {
            std::ostringstream msg;
            msg << "pi_" << m << " is not onto over Z; torsion obstruction with invariant factors";
            for (const auto& d : torsion) msg << " " << d;
            throw UnsolvableError(msg.str());
        }
    }
    // S = Q * D_beta^{-1} * (P Y)_{first beta rows}
    for (std::size_t k = 0; k < beta; ++k) {
        RatPolynomial g(b.ring);
        for (std::size_t i = 0; i < beta; ++i) {
            if (s.Q(k, i) == 0) continue;
            BigRational coef = BigRational(s.Q(k, i)) / BigRational(s.diagonal[i]);
            for (std::size_t j = 0; j < B.size(); ++j)
                if (s.P(i, j) != 0) g.add_term(B.monomials[j], coef * BigRational(s.P(i, j)));
        }
        out.polynomials.push_back(g);
    }
    return out;
}

// When K/I is cyclic, finds r = u*c_i + t*c_j generating it, with u a unit modulo the order of the
// leading part of c_i (so r still restricts to a generator of the even ring relations) and |u|, |t| small.
inline std::vector<Relation> cyclic_choice(const IntMatrix& K, const IntMatrix& I, const MonomialBasis& B,
                                           const std::vector<Relation>& cands, const std::vector<BigInt>& orders, int m) {
    SmithForm sk = smith_normal_form(K);
    IntMatrix C(0, K.rows());
    for (std::size_t i = 0; i < I.rows(); ++i) C.append_row(*solve_left(K, I.row(i), &sk));
    IntMatrix Qc = IntMatrix::identity(K.rows());
    std::size_t idx = 0;
    BigInt d = 0;
    if (C.rows()) {
        SmithForm sc = smith_normal_form(C);
        Qc = sc.Q;
        for (std::size_t i = 0; i < K.rows(); ++i) {
            BigInt di = i < sc.rank ? sc.diagonal[i] : BigInt(0);
            if (di != 1) {
                idx = i;
                d = di;
                break;
            }
        }
    }
    const std::size_t nvars = cands.empty() ? 0 : cands[0].poly.ring()->size();
    auto coord = [&](const IntPolynomial& f) {
        auto x = solve_left(K, coefficient_row(B, f, Exponent(nvars, 0)), &sk);
        if (!x) throw ConsistencyError("candidate relation outside the kernel");
        return vec_times_matrix(*x, Qc)[idx];
    };
    auto generates = [&](const BigInt& c) { return d == 0 ? abs_value(c) == 1 : gcd(c, d) == 1; };
    std::vector<BigInt> co;
    for (const auto& c : cands) co.push_back(coord(c.poly));
    std::optional<std::tuple<BigInt, BigInt, std::size_t, std::size_t, BigInt, BigInt>> best;  // |u|+|t|, |u|, i, j, u, t
    auto consider = [&](std::size_t i, std::size_t j, const BigInt& u, const BigInt& t) {
        auto key = std::make_tuple(abs_value(u) + abs_value(t), abs_value(u), i, j, u, t);
        if (!best || key < *best) best = key;
    };
    for (std::size_t i = 0; i < cands.size(); ++i) {
        BigInt o = orders[i];
        long umax = o > 0 ? static_cast<long>(std::min<BigInt>(o, BigInt(240))) : 1;
        for (long uu = 1; uu <= umax; ++uu) {
            for (long sign : {1L, -1L}) {
                BigInt u = uu * sign;
                if (o > 0 && gcd(u, o) != 1) continue;
                if (generates(u * co[i])) consider(i, i, u, 0);
                for (std::size_t j = 0; j < cands.size(); ++j) {
                    if (j == i || co[j] == 0) continue;
                    if (d == 0) {
                        for (long s : {1L, -1L}) {
                            BigInt num = BigInt(s) - u * co[i], q, r;
                            floor_divmod(num, co[j], q, r);
                            if (r == 0) consider(i, j, u, q);
                        }
                    } else {
                        long dl = static_cast<long>(std::min<BigInt>(d, BigInt(1000)));
                        for (long t = -dl / 2; t <= dl / 2; ++t)
                            if (generates(u * co[i] + t * co[j])) consider(i, j, u, t);
                    }
                }
            }
        }
    }
    if (!best) return {};
    auto [cost, au, i, j, u, t] = *best;
    IntPolynomial r = cands[i].poly * u;
    if (j != i) r += cands[j].poly * t;
    Relation out = cands[i];
    out.degree = m;
    out.poly = r;
    return {out};
}

struct PresentationOptions {
    bool full_certificate = false;  // also certify every degree up to N + max generator degree
};

// Problems 1-2 for G/H with omega bound first: lifts of the even-ring relations h_i, omega*g_j when needed,
// and a Hilbert-function certificate.
inline Presentation schubert_presentation(const SchubertEngine& engine, const GeneratorBinding& b, const std::string& label,
                                          const PresentationOptions& opt = {}) {
    const CosetTable& t = engine.table();
    const int N = t.top_degree();
    Presentation p;
    p.label = label;
    p.binding = b;
    if (b.size() == 0 || b.generators[0].rep != engine.omega())
        throw std::invalid_argument("the first generator must be the degree-1 class");

    // generators must generate: pi_m onto over Z in every degree
    for (int m = 1; m <= N; ++m) {
        IntMatrix M = engine.structure_matrix(b, m);
        SmithForm s = smith_normal_form(M, false);
        if (s.rank != static_cast<std::size_t>(t.beta(m)) || s.unit_count() != static_cast<std::size_t>(t.beta(m)))
            throw CertificateError("the chosen generators do not generate the ring in degree " + std::to_string(m));
    }

    GysinComputation gysin(engine);
    p.even_relations = gysin.even_ring_relations(b);
    p.odd_generators = gysin.odd_module_generators();
    std::map<int, std::vector<Relation>> candidates;
    std::map<int, std::vector<BigInt>> cand_orders;
    for (const auto& h : p.even_relations) {
        candidates[h.degree].push_back(Relation{"", h.degree, lift_even_relation(engine, b, h.poly), "even"});
        cand_orders[h.degree].push_back(h.order);
    }
    for (std::size_t j = 0; j < p.odd_generators.size(); ++j) {
        const auto& d = p.odd_generators[j];
        IntPolynomial g = lift_odd_class(engine, b, d.klass, d.k);
        p.odd_lifts.push_back(g);
        p.odd_eliminated.push_back(true);
        candidates[d.k + 1].push_back(
            Relation{"", d.k + 1, IntPolynomial::variable(b.ring, 0) * g, "odd", static_cast<int>(j)});
        cand_orders[d.k + 1].push_back(0);
    }

    // Degree by degree, keep the fewest relations that together with lower ones span ker pi_m.
    for (auto& [m, cands] : candidates) {
        MonomialBasis B = monomial_basis(b.ring->degrees(), 2LL * m);
        IntMatrix K(0, B.size());
        for (const auto& k : kernel_basis(engine, b, m)) K.append_row(coefficient_row(B, k, Exponent(b.size(), 0)));
        IntMatrix I = relation_matrix(b.ring, polys_of(p.relations), 2LL * m);
        const std::size_t need = lattice_quotient(K, I).orders.size();
        if (need == 0) continue;
        auto spans = [&](const std::vector<IntPolynomial>& extra) {
            IntMatrix J = I;
            for (const auto& e : extra) J.append_row(coefficient_row(B, e, Exponent(b.size(), 0)));
            return lattice_quotient(K, J).orders.empty();
        };
        std::vector<Relation> chosen;
        if (cands.size() == need && spans(polys_of(cands))) {
            chosen = cands;
        } else if (need == 1) {
            chosen = cyclic_choice(K, I, B, cands, cand_orders[m], m);
        }
        if (chosen.empty()) {
            // keep candidates greedily, then complete with generators of the remaining quotient
            for (const auto& c : cands) {
                IntMatrix J = I;
                for (const auto& x : chosen) J.append_row(coefficient_row(B, x.poly, Exponent(b.size(), 0)));
                std::size_t before = lattice_quotient(K, J).orders.size();
                if (before == 0) break;
                J.append_row(coefficient_row(B, c.poly, Exponent(b.size(), 0)));
                if (lattice_quotient(K, J).orders.size() < before) chosen.push_back(c);
            }
            IntMatrix J = I;
            for (const auto& x : chosen) J.append_row(coefficient_row(B, x.poly, Exponent(b.size(), 0)));
            for (const auto& v : lattice_quotient(K, J).generators) {
                IntPolynomial r(b.ring);
                for (std::size_t i = 0; i < B.size(); ++i) r.add_term(B.monomials[i], v[i]);
                chosen.push_back(Relation{"", m, r, "kernel"});
            }
        }
        // canonical representative modulo the lower-degree part of the ideal
        IntMatrix H = I.rows() ? hermite_normal_form(I) : I;
        for (auto& r : chosen) {
            IntVector v = coefficient_row(B, r.poly, Exponent(b.size(), 0));
            if (H.rows()) v = reduce_mod_hnf_symmetric(v, H);
            GysinComputation::normalize_sign(v);
            r.poly = IntPolynomial(b.ring);
            for (std::size_t i = 0; i < B.size(); ++i) r.poly.add_term(B.monomials[i], v[i]);
            if (r.origin == "odd") p.odd_eliminated[r.odd_source] = false;
            p.relations.push_back(r);
        }
    }
    std::map<int, int> counts;
    for (const auto& r : p.relations) ++counts[r.degree];
    std::map<int, int> used;
    for (auto& r : p.relations) {
        int k = ++used[r.degree];
        r.name = "r" + std::to_string(r.degree) + (counts[r.degree] > 1 ? "_" + std::to_string(k) : "");
    }

    std::vector<IntPolynomial> rels = polys_of(p.relations);
    for (const auto& r : p.relations)
        if (!in_kernel(engine, b, r.poly))
            throw CertificateError("emitted relation " + r.name + " = " + to_string(r.poly) + " does not vanish");
    int maxrel = 0;
    for (const auto& r : p.relations) maxrel = std::max(maxrel, r.degree);
    int maxgen = 0;
    for (int d : b.ring->degrees()) maxgen = std::max(maxgen, d / 2);
    int upto = opt.full_certificate ? N + maxgen : std::max(maxrel, 1);
    for (int m = 1; m <= upto; ++m) {
        CertificateRow row = hilbert_row(engine, b, rels, m);
        p.certificate.push_back(row);
        if (!row.ok) {
            std::ostringstream msg;
            msg << "certificate fails in degree " << 2 * m << ": b = " << row.b << ", delta = " << row.delta
                << ", beta = " << row.beta;
            throw CertificateError(msg.str());
        }
    }
    return p;
}

// Ideal membership degree by degree: every polynomial of `a` lies in the ideal generated by `b`.
inline bool ideal_contains(const RingPtr& ring, const std::vector<IntPolynomial>& gens, const std::vector<IntPolynomial>& polys) {
    for (const auto& f : polys) {
        if (f.is_zero()) continue;
        long long m = f.degree();
        IntMatrix M = relation_matrix(ring, gens, m);
        MonomialBasis B = monomial_basis(ring->degrees(), m);
        IntVector v = coefficient_row(B, f, Exponent(ring->size(), 0));
        if (!in_row_lattice(M, v)) return false;
    }
    return true;
}

struct RationalHomotopyResult {
    std::vector<int> degrees;             // sorted
    std::vector<std::string> eliminated;  // generator names removed
};

// Over Q, eliminates generators occurring linearly in a relation of equal degree, then reads off
// {real degree of y} + {real degree of r - 1}.
inline RationalHomotopyResult rational_homotopy(const RingPtr& ring, const std::vector<IntPolynomial>& relations) {
    std::vector<RatPolynomial> rels;
    for (const auto& r : relations)
        if (!r.is_zero()) rels.push_back(to_rational(r));
    std::vector<bool> alive(ring->size(), true);
    RationalHomotopyResult out;
    for (;;) {
        bool progress = false;
        for (std::size_t i = 0; i < ring->size() && !progress; ++i) {
            if (!alive[i]) continue;
            Exponent lin(ring->size(), 0);
            lin[i] = 1;
            for (std::size_t j = 0; j < rels.size(); ++j) {
                BigRational c = rels[j].coefficient(lin);
                if (c == 0) continue;
                // y_i = -(r_j - c y_i) / c
                RatPolynomial rest = rels[j] - RatPolynomial::monomial(ring, lin, c);
                bool linear = std::all_of(rest.terms().begin(), rest.terms().end(),
                                          [&](const auto& term) { return term.first[i] == 0; });
                if (!linear) continue;
                RatPolynomial repl = rest * RatPolynomial::constant(ring, BigRational(-1) / c);
                std::vector<RatPolynomial> next;
                for (std::size_t k = 0; k < rels.size(); ++k) {
                    if (k == j) continue;
                    RatPolynomial s = substitute(rels[k], i, repl);
                    if (!s.is_zero()) next.push_back(s);
                }
                rels = std::move(next);
                alive[i] = false;
                out.eliminated.push_back(ring->name(i));
                progress = true;
                break;
            }
        }
        if (!progress) break;
    }
    std::size_t gens = std::count(alive.begin(), alive.end(), true);
    if (!rels.empty() && rels.size() != gens)
        throw UnsupportedError("elimination leaves " + std::to_string(gens) + " generators and " +
                               std::to_string(rels.size()) + " relations (not a complete intersection shape)");
    for (std::size_t i = 0; i < ring->size(); ++i)
        if (alive[i]) out.degrees.push_back(ring->degree(i));
    for (const auto& r : rels) out.degrees.push_back(static_cast<int>(r.degree()) - 1);
    std::sort(out.degrees.begin(), out.degrees.end());
    return out;
}

}  // namespace chowring
