#pragma once

#include "bigint.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace chowring {

using Exponent = std::vector<unsigned>;

// Named graded variables; degrees are real (cohomological) degrees.
class PolyRing {
public:
    PolyRing(std::vector<std::string> names, std::vector<int> degrees)
        : names_(std::move(names)), degrees_(std::move(degrees)) {
        if (names_.size() != degrees_.size()) throw std::invalid_argument("variable names and degrees differ in length");
        for (int d : degrees_)
            if (d <= 0) throw std::invalid_argument("variable degrees must be positive");
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name " + names_[i]);
    }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    int degree(std::size_t i) const { return degrees_.at(i); }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return -1;
    }

    long long degree_of(const Exponent& e) const {
        long long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long long>(e[i]) * degrees_[i];
        return d;
    }

    bool operator==(const PolyRing& o) const { return names_ == o.names_ && degrees_ == o.degrees_; }

private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<std::string> names, std::vector<int> degrees) {
    return std::make_shared<const PolyRing>(std::move(names), std::move(degrees));
}

// Lex-ascending list of exponent vectors of total degree m.
struct MonomialBasis {
    long long degree = 0;
    std::vector<Exponent> monomials;

    std::size_t size() const { return monomials.size(); }

    int index_of(const Exponent& e) const {
        auto it = std::lower_bound(monomials.begin(), monomials.end(), e);
        if (it == monomials.end() || *it != e) return -1;
        return static_cast<int>(it - monomials.begin());
    }
};

namespace detail {
inline void enumerate_monomials(const std::vector<int>& deg, std::size_t i, long long rest, Exponent& cur,
                                std::vector<Exponent>& out) {
    if (i + 1 == deg.size()) {
        if (rest % deg[i] == 0) {
            cur[i] = static_cast<unsigned>(rest / deg[i]);
            out.push_back(cur);
        }
        return;
    }
    for (long long e = 0; e * deg[i] <= rest; ++e) {
        cur[i] = static_cast<unsigned>(e);
        enumerate_monomials(deg, i + 1, rest - e * deg[i], cur, out);
    }
    cur[i] = 0;
}
}  // namespace detail

inline MonomialBasis monomial_basis(const std::vector<int>& degrees, long long m) {
    for (int d : degrees)
        if (d <= 0) throw std::invalid_argument("monomial_basis: degrees must be positive");
    MonomialBasis b;
    b.degree = m;
    if (m < 0) return b;
    if (degrees.empty()) {
        if (m == 0) b.monomials.push_back({});
        return b;
    }
    Exponent cur(degrees.size(), 0);
    detail::enumerate_monomials(degrees, 0, m, cur, b.monomials);
    return b;
}

template <class C>
class Polynomial {
public:
    using Coeff = C;
    using TermMap = std::map<Exponent, C>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, const C& c) {
        Polynomial p(std::move(ring));
        if (c != 0) p.terms_[Exponent(p.ring_->size(), 0)] = c;
        return p;
    }

    static Polynomial variable(RingPtr ring, std::size_t i) {
        Polynomial p(std::move(ring));
        Exponent e(p.ring_->size(), 0);
        e.at(i) = 1;
        p.terms_[e] = 1;
        return p;
    }

    static Polynomial monomial(RingPtr ring, const Exponent& e, const C& c = C(1)) {
        Polynomial p(std::move(ring));
        if (e.size() != p.ring_->size()) throw std::invalid_argument("monomial: exponent length mismatch");
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    C coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Exponent& e, const C& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        long long d = ring_->degree_of(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (ring_->degree_of(e) != d) return false;
        return true;
    }

    // Degree of a homogeneous polynomial; -1 for zero.
    long long degree() const {
        if (terms_.empty()) return -1;
        if (!is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
        return ring_->degree_of(terms_.begin()->first);
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        adopt_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        adopt_ring(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    Polynomial& operator*=(const C& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const C& s) { return a *= s; }
    friend Polynomial operator*(const C& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r(a.ring_ ? a.ring_ : b.ring_);
        if (a.ring_ && b.ring_ && !(*a.ring_ == *b.ring_)) throw std::invalid_argument("polynomial rings differ");
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned n) const {
        Polynomial result = constant(ring_, C(1));
        Polynomial base = *this;
        while (n) {
            if (n & 1u) result *= base;
            n >>= 1;
            if (n) base *= base;
        }
        return result;
    }

    // Terms of total degree exactly d.
    Polynomial homogeneous_part(long long d) const {
        Polynomial r(ring_);
        for (const auto& [e, c] : terms_)
            if (ring_->degree_of(e) == d) r.terms_[e] = c;
        return r;
    }

private:
    void adopt_ring(const Polynomial& o) {
        if (!ring_) {
            ring_ = o.ring_;
        } else if (o.ring_ && !(*ring_ == *o.ring_)) {
            throw std::invalid_argument("polynomial rings differ");
        }
    }

    RingPtr ring_;
    TermMap terms_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRational>;

inline IntPolynomial power(const IntPolynomial& p, unsigned n) { return p.pow(n); }

inline RatPolynomial to_rational(const IntPolynomial& p) {
    RatPolynomial r(p.ring());
    for (const auto& [e, c] : p.terms()) r.add_term(e, BigRational(c));
    return r;
}

inline bool is_integral(const RatPolynomial& p) {
    for (const auto& [e, c] : p.terms())
        if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
}

inline IntPolynomial to_integral(const RatPolynomial& p) {
    IntPolynomial r(p.ring());
    for (const auto& [e, c] : p.terms()) {
        if (boost::multiprecision::denominator(c) != 1) throw std::invalid_argument("polynomial has non-integral coefficients");
        r.add_term(e, boost::multiprecision::numerator(c));
    }
    return r;
}

// Replace variable `var` by `replacement`, which must be homogeneous of the variable's degree.
template <class C, class R>
Polynomial<R> substitute(const Polynomial<C>& p, std::size_t var, const Polynomial<R>& replacement) {
    const RingPtr& ring = p.ring();
    if (!ring) return Polynomial<R>(replacement.ring());
    if (var >= ring->size()) throw std::out_of_range("substitute: variable index out of range");
    if (!replacement.is_zero()) {
        if (!replacement.is_homogeneous() || replacement.degree() != ring->degree(var))
            throw std::invalid_argument("substitute: replacement is not homogeneous of degree " +
                                        std::to_string(ring->degree(var)));
        if (!(*replacement.ring() == *ring)) throw std::invalid_argument("substitute: replacement lives in another ring");
    }
    std::map<unsigned, Polynomial<R>> powers;
    Polynomial<R> out(ring);
    for (const auto& [e, c] : p.terms()) {
        Exponent rest = e;
        unsigned k = rest[var];
        rest[var] = 0;
        Polynomial<R> term = Polynomial<R>::monomial(ring, rest, R(c));
        if (k > 0) {
            auto it = powers.find(k);
            if (it == powers.end()) it = powers.emplace(k, replacement.pow(k)).first;
            term *= it->second;
        }
        out += term;
    }
    return out;
}

template <class C>
Polynomial<C> set_variable_zero(const Polynomial<C>& p, std::size_t var) {
    return substitute(p, var, Polynomial<C>(p.ring()));
}

// Exact polynomial division; throws ConsistencyError if q does not divide p.
inline IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
    IntPolynomial rem = p;
    IntPolynomial quot(p.ring() ? p.ring() : q.ring());
    const auto& [lq_e, lq_c] = *q.terms().rbegin();
    while (!rem.is_zero()) {
        auto [lr_e, lr_c] = *rem.terms().rbegin();
        Exponent e(lr_e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (lr_e[i] < lq_e[i]) throw ConsistencyError("exact_divide: division is not exact");
            e[i] = lr_e[i] - lq_e[i];
        }
        if (lr_c % lq_c != 0) throw ConsistencyError("exact_divide: division is not exact");
        IntPolynomial t = IntPolynomial::monomial(quot.ring(), e, lr_c / lq_c);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

// Evaluate at a point (one value per variable).
template <class C, class V>
V evaluate(const Polynomial<C>& p, const std::vector<V>& point) {
    V total = 0;
    for (const auto& [e, c] : p.terms()) {
        V term = V(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= point.at(i);
        total += term;
    }
    return total;
}

inline std::string monomial_to_string(const PolyRing& ring, const Exponent& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.name(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

// Canonical rendering: terms in ascending lex order of exponents.
template <class C>
std::string to_string(const Polynomial<C>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bool neg = c < 0;
        C mag = neg ? C(-c) : c;
        std::string mono = monomial_to_string(*p.ring(), e);
        std::string coef = to_string(mag);
        std::string body;
        if (mono.empty()) body = coef;
        else if (mag == 1) body = mono;
        else body = coef + "*" + mono;
        if (first) out += (neg ? "-" : "") + body;
        else out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

namespace detail {

template <class C>
class PolyParser {
public:
    PolyParser(RingPtr ring, const std::string& text) : ring_(std::move(ring)), s_(text) {}

    Polynomial<C> parse() {
        Polynomial<C> p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg +
                                    " in \"" + s_ + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial<C> expr() {
        skip();
        Polynomial<C> acc(ring_);
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        Polynomial<C> t = term();
        acc = neg ? -t : t;
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    Polynomial<C> term() {
        Polynomial<C> acc = factor();
        for (;;) {
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                skip();
                BigInt d = integer();
                if (d == 0) fail("division by zero");
                if constexpr (std::is_same_v<C, BigInt>) {
                    Polynomial<C> q(ring_);
                    for (const auto& [e, c] : acc.terms()) {
                        if (c % d != 0) fail("non-integral coefficient in integer polynomial");
                        q.add_term(e, c / d);
                    }
                    acc = q;
                } else {
                    acc *= C(1) / C(d);
                }
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial<C> factor() {
        Polynomial<C> base = primary();
        if (accept('^')) {
            skip();
            BigInt e = integer();
            if (e < 0 || e > 100000) fail("bad exponent");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial<C> primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial<C> inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial<C>::constant(ring_, C(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            int idx = ring_->index_of(name);
            if (idx < 0) fail("unknown variable " + name);
            return Polynomial<C>::variable(ring_, static_cast<std::size_t>(idx));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    BigInt integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return BigInt(s_.substr(start, pos_ - start));
    }

    RingPtr ring_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline IntPolynomial parse_int_polynomial(const RingPtr& ring, const std::string& text) {
    return detail::PolyParser<BigInt>(ring, text).parse();
}

inline RatPolynomial parse_rat_polynomial(const RingPtr& ring, const std::string& text) {
    return detail::PolyParser<BigRational>(ring, text).parse();
}

}  // namespace chowring
