#pragma once

#include "bigint.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chowring {

using IntVector = std::vector<BigInt>;

// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
            for (long long v : row) data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const { return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

    IntVector col(std::size_t j) const {
        IntVector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::vector<IntVector> row_list() const {
        std::vector<IntVector> out;
        for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
        return out;
    }

    void append_row(const IntVector& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: appended row has wrong length");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // Rows [r0, r1).
    IntMatrix row_block(std::size_t r0, std::size_t r1) const {
        IntMatrix m(r1 - r0, cols_);
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i - r0, j) = (*this)(i, j);
        return m;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: product shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const BigInt& x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
            }
        return c;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row_dst += k * row_src
    void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
        if (k == 0) return;
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(src, j) != 0) (*this)(dst, j) += k * (*this)(src, j);
    }
    // col_dst += k * col_src
    void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
        if (k == 0) return;
        for (std::size_t i = 0; i < rows_; ++i)
            if ((*this)(i, src) != 0) (*this)(i, dst) += k * (*this)(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }
    void negate_col(std::size_t c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

inline IntVector vec_times_matrix(const IntVector& v, const IntMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector/matrix shape mismatch");
    IntVector out(m.cols());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

inline bool is_zero_vector(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

// P * M * Q = D with P, Q unimodular; inverses tracked alongside.
struct SmithForm {
    IntMatrix P, Pinv, D, Q, Qinv;
    std::vector<BigInt> diagonal;  // first min(rows, cols) diagonal entries of D
    std::size_t rank = 0;

    std::size_t unit_count() const {
        return static_cast<std::size_t>(
            std::count_if(diagonal.begin(), diagonal.end(), [](const BigInt& d) { return d == 1 || d == -1; }));
    }

    // Invariant factors other than 1 (includes zeros for the free part only if requested).
    std::vector<BigInt> nonunit_factors() const {
        std::vector<BigInt> out;
        for (std::size_t i = 0; i < rank; ++i)
            if (diagonal[i] != 1) out.push_back(diagonal[i]);
        return out;
    }
};

inline std::size_t unit_count(const std::vector<BigInt>& diagonal) {
    return static_cast<std::size_t>(
        std::count_if(diagonal.begin(), diagonal.end(), [](const BigInt& d) { return d == 1 || d == -1; }));
}

inline SmithForm smith_normal_form(const IntMatrix& M, bool with_transforms = true) {
    const std::size_t m = M.rows(), n = M.cols();
    SmithForm s;
    s.D = M;
    IntMatrix& A = s.D;
    if (with_transforms) {
        s.P = IntMatrix::identity(m);
        s.Pinv = IntMatrix::identity(m);
        s.Q = IntMatrix::identity(n);
        s.Qinv = IntMatrix::identity(n);
    }
    auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
        A.add_row(dst, src, k);
        if (with_transforms) {
            s.P.add_row(dst, src, k);
            s.Pinv.add_col(src, dst, -k);
        }
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        A.swap_rows(a, b);
        if (with_transforms) {
            s.P.swap_rows(a, b);
            s.Pinv.swap_cols(a, b);
        }
    };
    auto row_negate = [&](std::size_t r) {
        A.negate_row(r);
        if (with_transforms) {
            s.P.negate_row(r);
            s.Pinv.negate_col(r);
        }
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
        A.add_col(dst, src, k);
        if (with_transforms) {
            s.Q.add_col(dst, src, k);
            s.Qinv.add_row(src, dst, -k);
        }
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        A.swap_cols(a, b);
        if (with_transforms) {
            s.Q.swap_cols(a, b);
            s.Qinv.swap_rows(a, b);
        }
    };

    const std::size_t lim = std::min(m, n);
    std::size_t t = 0;
    for (; t < lim; ++t) {
        bool found = true;
        for (;;) {
            // smallest nonzero absolute value, ties broken by lowest (row, col)
            std::size_t pi = m, pj = n;
            BigInt best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const BigInt& x = A(i, j);
                    if (x == 0) continue;
                    BigInt ax = abs_value(x);
                    if (pi == m || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m) {
                found = false;
                break;
            }
            row_swap(t, pi);
            col_swap(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (A(i, t) == 0) continue;
                BigInt q = A(i, t) / A(t, t);
                row_add(i, t, -q);
                if (A(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (A(t, j) == 0) continue;
                BigInt q = A(t, j) / A(t, t);
                col_add(j, t, -q);
                if (A(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad != m) {
                row_add(t, bad, BigInt(1));
                continue;
            }
            break;
        }
        if (!found) break;
        if (A(t, t) < 0) row_negate(t);
    }
    s.rank = t;
    s.diagonal.resize(lim);
    for (std::size_t i = 0; i < lim; ++i) s.diagonal[i] = A(i, i);
    return s;
}

// Fraction-free elimination rank.
inline std::size_t rank(const IntMatrix& M) {
    IntMatrix A = M;
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        std::size_t p = r;
        while (p < A.rows() && A(p, c) == 0) ++p;
        if (p == A.rows()) continue;
        A.swap_rows(r, p);
        for (std::size_t i = r + 1; i < A.rows(); ++i) {
            for (std::size_t j = c + 1; j < A.cols(); ++j) A(i, j) = (A(r, c) * A(i, j) - A(i, c) * A(r, j)) / prev;
            A(i, c) = 0;
        }
        prev = A(r, c);
        ++r;
    }
    return r;
}

inline BigInt determinant(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant: matrix not square");
    std::size_t n = M.rows();
    if (n == 0) return 1;
    IntMatrix A = M;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && A(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            A.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) A(i, j) = (A(k, k) * A(i, j) - A(i, k) * A(k, j)) / prev;
            A(i, k) = 0;
        }
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

// Row Hermite normal form: upper echelon, positive pivots, entries above pivots reduced into [0, pivot).
// Zero rows are dropped, so the result is a basis of the row lattice.
inline IntMatrix hermite_normal_form(const IntMatrix& M) {
    IntMatrix A = M;
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        // Euclid on column c: move the smallest entry to row r and reduce the rows below by it.
        // Remainders stay small, which keeps the untouched columns from growing.
        for (;;) {
            std::size_t p = A.rows();
            BigInt best;
            for (std::size_t i = r; i < A.rows(); ++i) {
                if (A(i, c) == 0) continue;
                BigInt ax = abs_value(A(i, c));
                if (p == A.rows() || ax < best) {
                    best = std::move(ax);
                    p = i;
                }
            }
            if (p == A.rows()) break;
            if (p != r) A.swap_rows(r, p);
            bool done = true;
            for (std::size_t i = r + 1; i < A.rows(); ++i) {
                if (A(i, c) == 0) continue;
                BigInt q = A(i, c) / A(r, c);
                A.add_row(i, r, -q);
                if (A(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (r >= A.rows() || A(r, c) == 0) continue;
        if (A(r, c) < 0) A.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            BigInt q, rem;
            floor_divmod(A(i, c), A(r, c), q, rem);
            A.add_row(i, r, -q);
        }
        pivots.push_back(c);
        ++r;
    }
    return A.row_block(0, r);
}

// Basis of the left kernel lattice {v : v M = 0}, saturated, in Hermite normal form.
inline IntMatrix integer_nullspace(const IntMatrix& M) {
    if (M.rows() == 0) return IntMatrix(0, 0);
    if (M.cols() == 0) return IntMatrix::identity(M.rows());
    // Row-reduce [M | I]; rows whose M part vanishes span the kernel and stay saturated because the
    // reduction is unimodular. This avoids the transform growth of a full Smith reduction.
    const std::size_t m = M.rows(), n = M.cols();
    IntMatrix A(m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) A(i, j) = M(i, j);
        A(i, n + i) = 1;
    }
    IntMatrix H = hermite_normal_form(A);
    std::size_t first = 0;
    while (first < H.rows()) {
        bool zero = true;
        for (std::size_t j = 0; j < n && zero; ++j) zero = H(first, j) == 0;
        if (zero) break;
        ++first;
    }
    IntMatrix raw(H.rows() - first, m);
    for (std::size_t i = first; i < H.rows(); ++i)
        for (std::size_t j = 0; j < m; ++j) raw(i - first, j) = H(i, n + j);
    return hermite_normal_form(raw);
}

// Integer x with x * M = b, if one exists.
inline std::optional<IntVector> solve_left(const IntMatrix& M, const IntVector& b, const SmithForm* pre = nullptr) {
    if (b.size() != M.cols()) throw std::invalid_argument("solve_left: shape mismatch");
    SmithForm local;
    if (!pre) {
        local = smith_normal_form(M);
        pre = &local;
    }
    const SmithForm& s = *pre;
    IntVector bq = M.cols() ? vec_times_matrix(b, s.Q) : IntVector{};
    IntVector y(M.rows());
    for (std::size_t i = 0; i < M.cols(); ++i) {
        if (i < s.rank) {
            if (bq[i] % s.diagonal[i] != 0) return std::nullopt;
            y[i] = bq[i] / s.diagonal[i];
        } else if (bq[i] != 0) {
            return std::nullopt;
        }
    }
    if (M.rows() == 0) return IntVector{};
    return vec_times_matrix(y, s.P);
}

inline bool in_row_lattice(const IntMatrix& M, const IntVector& v) {
    if (M.rows() == 0) return is_zero_vector(v);
    return solve_left(M, v).has_value();
}

// Reduce v modulo the row lattice of an HNF basis (canonical coset representative).
inline IntVector reduce_mod_hnf(IntVector v, const IntMatrix& hnf) {
    for (std::size_t i = 0; i < hnf.rows(); ++i) {
        std::size_t c = 0;
        while (c < hnf.cols() && hnf(i, c) == 0) ++c;
        if (c == hnf.cols()) continue;
        BigInt q, r;
        floor_divmod(v[c], hnf(i, c), q, r);
        if (q != 0)
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * hnf(i, j);
    }
    return v;
}

// As reduce_mod_hnf, with pivot residues in (-p/2, p/2].
inline IntVector reduce_mod_hnf_symmetric(IntVector v, const IntMatrix& hnf) {
    for (std::size_t i = 0; i < hnf.rows(); ++i) {
        std::size_t c = 0;
        while (c < hnf.cols() && hnf(i, c) == 0) ++c;
        if (c == hnf.cols()) continue;
        BigInt q, r;
        floor_divmod(v[c], hnf(i, c), q, r);
        if (2 * r > abs_value(hnf(i, c))) ++q;
        if (q != 0)
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * hnf(i, j);
    }
    return v;
}

// Structure of K / I for lattices I within K, both given by generating rows in a common ambient space.
struct LatticeQuotient {
    std::vector<BigInt> orders;       // 0 for a free summand, otherwise the torsion order (> 1)
    std::vector<IntVector> generators;  // ambient vectors generating each cyclic summand
};

inline LatticeQuotient lattice_quotient(const IntMatrix& K_basis, const IntMatrix& I_gens) {
    LatticeQuotient out;
    const std::size_t k = K_basis.rows();
    if (k == 0) return out;
    SmithForm sk = smith_normal_form(K_basis);
    IntMatrix C(0, k);
    for (std::size_t i = 0; i < I_gens.rows(); ++i) {
        auto x = solve_left(K_basis, I_gens.row(i), &sk);
        if (!x) throw ConsistencyError("lattice_quotient: generator outside the ambient lattice");
        C.append_row(*x);
    }
    SmithForm s = smith_normal_form(C.rows() ? C : IntMatrix(0, k));
    IntMatrix F = (C.rows() ? s.Qinv : IntMatrix::identity(k)) * K_basis;
    for (std::size_t i = 0; i < k; ++i) {
        BigInt d = (C.rows() && i < s.rank) ? s.diagonal[i] : BigInt(0);
        if (d == 1) continue;
        out.orders.push_back(d);
        out.generators.push_back(F.row(i));
    }
    return out;
}

}  // namespace chowring
