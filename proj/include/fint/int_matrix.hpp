#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fint/rational.hpp"

namespace fint {

// Dense integer matrix with arbitrary-precision entries, row major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, 0) {}
    IntMatrix(int rows, int cols, std::vector<Integer> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != static_cast<size_t>(rows) * cols)
            throw input_error("entry count does not match matrix dimensions");
    }

    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
        int m = static_cast<int>(rows.size());
        int n = m ? static_cast<int>(rows[0].size()) : 0;
        IntMatrix a(m, n);
        for (int i = 0; i < m; ++i) {
            if (static_cast<int>(rows[i].size()) != n) throw input_error("ragged row list");
            for (int j = 0; j < n; ++j) a.at(i, j) = rows[i][j];
        }
        return a;
    }

    // Columns are the given vectors.
    static IntMatrix from_columns(const std::vector<std::vector<Integer>>& cols, int dim) {
        IntMatrix a(dim, static_cast<int>(cols.size()));
        for (int j = 0; j < a.cols(); ++j) {
            if (static_cast<int>(cols[j].size()) != dim) throw input_error("ragged column list");
            for (int i = 0; i < dim; ++i) a.at(i, j) = cols[j][i];
        }
        return a;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Integer& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<Integer> row(int i) const {
        return {entries_.begin() + static_cast<size_t>(i) * cols_,
                entries_.begin() + static_cast<size_t>(i + 1) * cols_};
    }
    std::vector<Integer> column(int j) const {
        std::vector<Integer> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    std::vector<Integer> mul_vec(const std::vector<Integer>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw input_error("dimension mismatch");
        std::vector<Integer> r(rows_, 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    int rows_, cols_;
    std::vector<Integer> entries_;
};

// l = lcm of the denominators of the entries in lowest terms; A = l*C.
inline std::pair<IntMatrix, Integer> integerize(const std::vector<std::vector<Rational>>& C) {
    int d = static_cast<int>(C.size());
    int n = d ? static_cast<int>(C[0].size()) : 0;
    Integer l(1);
    for (const auto& row : C)
        for (const auto& q : row) l = lcm(l, Integer(q.get_den()));
    IntMatrix A(d, n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) {
            Rational v = C[i][j] * Rational(l);
            v.canonicalize();
            A.at(i, j) = Integer(v.get_num());
        }
    return {A, l};
}

struct EchelonResult {
    IntMatrix R;                  // row-style Hermite normal form of M
    IntMatrix U;                  // unimodular, U*M = R
    std::vector<int> pivot_cols;  // 0-based, ascending
    int rank = 0;
};

// Row echelon form over Z by unimodular row operations (Hermite convention:
// positive pivots, entries above each pivot reduced into [0, pivot)).
inline EchelonResult z_echelon(const IntMatrix& M) {
    int m = M.rows(), n = M.cols();
    EchelonResult res;
    res.R = M;
    res.U = IntMatrix(m, m);
    for (int i = 0; i < m; ++i) res.U.at(i, i) = 1;
    IntMatrix& R = res.R;
    IntMatrix& U = res.U;

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < n; ++j) std::swap(R.at(a, j), R.at(b, j));
        for (int j = 0; j < m; ++j) std::swap(U.at(a, j), U.at(b, j));
    };
    auto add_row = [&](int dst, int src, const Integer& c) {  // row dst += c * row src
        if (c == 0) return;
        for (int j = 0; j < n; ++j) R.at(dst, j) += c * R.at(src, j);
        for (int j = 0; j < m; ++j) U.at(dst, j) += c * U.at(src, j);
    };
    auto negate_row = [&](int i) {
        for (int j = 0; j < n; ++j) R.at(i, j) = -R.at(i, j);
        for (int j = 0; j < m; ++j) U.at(i, j) = -U.at(i, j);
    };

    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        // Euclidean elimination in column c among rows r..m-1.
        while (true) {
            int piv = -1;
            for (int i = r; i < m; ++i)
                if (R.at(i, c) != 0 &&
                    (piv < 0 || abs(R.at(i, c)) < abs(R.at(piv, c))))
                    piv = i;
            if (piv < 0) break;
            swap_rows(r, piv);
            bool clean = true;
            for (int i = r + 1; i < m; ++i) {
                if (R.at(i, c) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), R.at(i, c).get_mpz_t(), R.at(r, c).get_mpz_t());
                add_row(i, r, -q);
                if (R.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (R.at(r, c) == 0) continue;
        if (R.at(r, c) < 0) negate_row(r);
        // Reduce entries above the pivot into [0, pivot).
        for (int i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), R.at(i, c).get_mpz_t(), R.at(r, c).get_mpz_t());
            add_row(i, r, -q);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

// Exact determinant via Bareiss fraction-free elimination.
inline Integer det(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw input_error("det of non-square matrix");
    int n = M.rows();
    if (n == 0) return 1;
    IntMatrix A = M;
    Integer prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A.at(k, k) == 0) {
            int s = -1;
            for (int i = k + 1; i < n; ++i)
                if (A.at(i, k) != 0) {
                    s = i;
                    break;
                }
            if (s < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(s, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Integer v = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
                mpz_divexact(A.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        prev = A.at(k, k);
    }
    return sign > 0 ? A.at(n - 1, n - 1) : Integer(-A.at(n - 1, n - 1));
}

namespace detail {

struct Diagonalization {
    IntMatrix S;  // U * A * V = S, S diagonal up to min(m, n)
    IntMatrix U;  // m x m unimodular
    IntMatrix V;  // n x n unimodular
    int rank = 0;
};

// Diagonalize A by unimodular row and column operations (Smith-style
// reduction; the divisibility chain is not normalized, which the kernel and
// integer solving below do not need).
inline Diagonalization diagonalize(const IntMatrix& A) {
    int m = A.rows(), n = A.cols();
    Diagonalization d;
    d.S = A;
    d.U = IntMatrix(m, m);
    d.V = IntMatrix(n, n);
    for (int i = 0; i < m; ++i) d.U.at(i, i) = 1;
    for (int j = 0; j < n; ++j) d.V.at(j, j) = 1;
    IntMatrix& S = d.S;

    auto row_add = [&](int dst, int src, const Integer& c) {
        for (int j = 0; j < n; ++j) S.at(dst, j) += c * S.at(src, j);
        for (int j = 0; j < m; ++j) d.U.at(dst, j) += c * d.U.at(src, j);
    };
    auto col_add = [&](int dst, int src, const Integer& c) {
        for (int i = 0; i < m; ++i) S.at(i, dst) += c * S.at(i, src);
        for (int i = 0; i < n; ++i) d.V.at(i, dst) += c * d.V.at(i, src);
    };
    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < n; ++j) std::swap(S.at(a, j), S.at(b, j));
        for (int j = 0; j < m; ++j) std::swap(d.U.at(a, j), d.U.at(b, j));
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < m; ++i) std::swap(S.at(i, a), S.at(i, b));
        for (int i = 0; i < n; ++i) std::swap(d.V.at(i, a), d.V.at(i, b));
    };

    int t = 0;
    while (t < m && t < n) {
        // Find a nonzero pivot in the remaining submatrix.
        int pi = -1, pj = -1;
        for (int i = t; i < m && pi < 0; ++i)
            for (int j = t; j < n; ++j)
                if (S.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        // Clear row t and column t beyond position t.
        while (true) {
            bool dirty = false;
            for (int i = t + 1; i < m; ++i) {
                if (S.at(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(i, t).get_mpz_t(), S.at(t, t).get_mpz_t());
                row_add(i, t, -q);
                if (S.at(i, t) != 0) {
                    row_swap(t, i);  // smaller remainder becomes the pivot
                    dirty = true;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (S.at(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(t, j).get_mpz_t(), S.at(t, t).get_mpz_t());
                col_add(j, t, -q);
                if (S.at(t, j) != 0) {
                    col_swap(t, j);
                    dirty = true;
                }
            }
            if (!dirty) {
                bool clear = true;
                for (int i = t + 1; i < m; ++i)
                    if (S.at(i, t) != 0) clear = false;
                for (int j = t + 1; j < n; ++j)
                    if (S.at(t, j) != 0) clear = false;
                if (clear) break;
            }
        }
        if (S.at(t, t) < 0) {
            for (int j = 0; j < n; ++j) S.at(t, j) = -S.at(t, j);
            for (int j = 0; j < m; ++j) d.U.at(t, j) = -d.U.at(t, j);
        }
        ++t;
    }
    d.rank = t;
    return d;
}

}  // namespace detail

struct LatticeBasis {
    std::vector<std::vector<Integer>> vectors;  // linearly independent over Q
    int rank = 0;
};

// Z-basis of { v in Z^n : A v = 0 }, read off a Smith-style diagonalization.
inline LatticeBasis kernel_basis(const IntMatrix& A) {
    auto d = detail::diagonalize(A);
    LatticeBasis b;
    int n = A.cols();
    for (int j = d.rank; j < n; ++j) b.vectors.push_back(d.V.column(j));
    b.rank = static_cast<int>(b.vectors.size());
    return b;
}

// Integer solution of A x = b if one exists.
inline std::optional<std::vector<Integer>> solve_integer(const IntMatrix& A,
                                                         const std::vector<Integer>& b) {
    auto d = detail::diagonalize(A);
    std::vector<Integer> ub = d.U.mul_vec(b);
    int n = A.cols(), m = A.rows();
    std::vector<Integer> y(n, 0);
    for (int i = 0; i < m; ++i) {
        if (i < d.rank) {
            if (ub[i] % d.S.at(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / d.S.at(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return d.V.mul_vec(y);
}

struct ModuleGenerators {
    std::vector<std::vector<Integer>> generators;
    int rank = 0;
};

// Algorithm 2: columns of the Hilbert-basis matrix N picked at the pivot
// columns of its echelon form span the Z-module R_lambda.
inline ModuleGenerators module_generators(const std::vector<std::vector<Integer>>& hilbert_vectors,
                                          int n) {
    ModuleGenerators out;
    if (hilbert_vectors.empty()) return out;
    IntMatrix N = IntMatrix::from_columns(hilbert_vectors, n);
    auto ech = z_echelon(N);
    for (int c : ech.pivot_cols) out.generators.push_back(hilbert_vectors[c]);
    out.rank = ech.rank;
    return out;
}

struct RankCondition {
    int rank_kernel = 0;
    int rank_R = 0;
    bool equal = false;
};

inline RankCondition rank_condition(const IntMatrix& A,
                                    const std::vector<std::vector<Integer>>& hilbert_vectors) {
    RankCondition rc;
    rc.rank_kernel = kernel_basis(A).rank;
    rc.rank_R = module_generators(hilbert_vectors, A.cols()).rank;
    rc.equal = rc.rank_kernel == rc.rank_R;
    return rc;
}

}  // namespace fint
