#include "nonabcoh/numkit/int_matrix.hpp"

#include <algorithm>

#include "nonabcoh/error.hpp"

namespace nonabcoh::numkit {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
            raise("BadDimension", "ragged row list");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) raise("BadDimension", "shape mismatch in integer matrix product");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& v) const {
    if (static_cast<int>(v.size()) != cols_) raise("BadDimension", "vector size mismatch");
    std::vector<mpz_class> r(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

mpz_class IntMatrix::determinant() const {
    if (rows_ != cols_) raise("BadDimension", "determinant of a non-square matrix");
    int n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    mpz_class prev = 1;
    int sign = 1;
    for (int c = 0; c < n - 1; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a.at(i, c) != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
            sign = -sign;
        }
        for (int i = c + 1; i < n; ++i)
            for (int j = c + 1; j < n; ++j) {
                mpz_class num = a.at(i, j) * a.at(c, c) - a.at(i, c) * a.at(c, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = q;
            }
        prev = a.at(c, c);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

struct SnfWork {
    IntMatrix a, left, right;
};

// Elementary operations keeping left * original * right == a invariant.
void row_swap(SnfWork& w, int i, int j) {
    for (int c = 0; c < w.a.cols(); ++c) std::swap(w.a.at(i, c), w.a.at(j, c));
    for (int c = 0; c < w.left.cols(); ++c) std::swap(w.left.at(i, c), w.left.at(j, c));
}
void col_swap(SnfWork& w, int i, int j) {
    for (int r = 0; r < w.a.rows(); ++r) std::swap(w.a.at(r, i), w.a.at(r, j));
    for (int r = 0; r < w.right.rows(); ++r) std::swap(w.right.at(r, i), w.right.at(r, j));
}
void row_addmul(SnfWork& w, int dst, int src, const mpz_class& f) {
    for (int c = 0; c < w.a.cols(); ++c) w.a.at(dst, c) += f * w.a.at(src, c);
    for (int c = 0; c < w.left.cols(); ++c) w.left.at(dst, c) += f * w.left.at(src, c);
}
void col_addmul(SnfWork& w, int dst, int src, const mpz_class& f) {
    for (int r = 0; r < w.a.rows(); ++r) w.a.at(r, dst) += f * w.a.at(r, src);
    for (int r = 0; r < w.right.rows(); ++r) w.right.at(r, dst) += f * w.right.at(r, src);
}
void row_negate(SnfWork& w, int i) {
    for (int c = 0; c < w.a.cols(); ++c) w.a.at(i, c) = -w.a.at(i, c);
    for (int c = 0; c < w.left.cols(); ++c) w.left.at(i, c) = -w.left.at(i, c);
}

} // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
    SnfWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    int n = std::min(m.rows(), m.cols());

    for (int t = 0; t < n; ++t) {
        // Move a minimal-magnitude nonzero entry of the trailing block to (t,t).
        auto find_pivot = [&]() -> std::pair<int, int> {
            int bi = -1, bj = -1;
            mpz_class best;
            for (int i = t; i < w.a.rows(); ++i)
                for (int j = t; j < w.a.cols(); ++j) {
                    if (w.a.at(i, j) == 0) continue;
                    mpz_class v = abs(w.a.at(i, j));
                    if (bi < 0 || v < best) { best = v; bi = i; bj = j; }
                }
            return {bi, bj};
        };

        for (;;) {
            auto [pi, pj] = find_pivot();
            if (pi < 0) { t = n; break; } // trailing block is zero
            if (pi != t) row_swap(w, t, pi);
            if (pj != t) col_swap(w, t, pj);

            bool dirty = false;
            for (int i = t + 1; i < w.a.rows(); ++i) {
                if (w.a.at(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.a.at(i, t).get_mpz_t(), w.a.at(t, t).get_mpz_t());
                row_addmul(w, i, t, -q);
                if (w.a.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < w.a.cols(); ++j) {
                if (w.a.at(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.a.at(t, j).get_mpz_t(), w.a.at(t, t).get_mpz_t());
                col_addmul(w, j, t, -q);
                if (w.a.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // Divisibility sweep: the pivot must divide the whole block.
            bool fixed = true;
            for (int i = t + 1; i < w.a.rows() && fixed; ++i)
                for (int j = t + 1; j < w.a.cols() && fixed; ++j)
                    if (w.a.at(i, j) % w.a.at(t, t) != 0) {
                        row_addmul(w, t, i, mpz_class(1));
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (t >= n) break;
        if (w.a.at(t, t) < 0) row_negate(w, t);
    }

    SmithNormalForm out;
    out.diagonal.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.diagonal[static_cast<size_t>(i)] = w.a.at(i, i);
    out.left = std::move(w.left);
    out.right = std::move(w.right);
    return out;
}

int rank(const SmithNormalForm& snf) {
    int r = 0;
    for (const auto& d : snf.diagonal)
        if (d != 0) ++r;
    return r;
}

IntMatrix invert_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) raise("BadDimension", "inverse of a non-square matrix");
    int n = m.rows();
    // Gauss-Jordan over Q; entries of the result must come out integral.
    std::vector<std::vector<mpq_class>> a(static_cast<size_t>(n),
                                          std::vector<mpq_class>(static_cast<size_t>(2 * n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][static_cast<size_t>(n + i)] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) raise("SingularMatrix", "matrix is not unimodular");
        std::swap(a[static_cast<size_t>(p)], a[static_cast<size_t>(c)]);
        mpq_class inv = 1 / a[static_cast<size_t>(c)][static_cast<size_t>(c)];
        for (int j = 0; j < 2 * n; ++j) a[static_cast<size_t>(c)][static_cast<size_t>(j)] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c) continue;
            mpq_class f = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (f == 0) continue;
            for (int j = 0; j < 2 * n; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * a[static_cast<size_t>(c)][static_cast<size_t>(j)];
        }
    }
    IntMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpq_class v = a[static_cast<size_t>(i)][static_cast<size_t>(n + j)];
            if (v.get_den() != 1) raise("SingularMatrix", "matrix is not unimodular");
            r.at(i, j) = v.get_num();
        }
    return r;
}

std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& a,
                                                    const std::vector<mpz_class>& b) {
    if (static_cast<int>(b.size()) != a.rows()) raise("BadDimension", "rhs size mismatch");
    SmithNormalForm snf = smith_normal_form(a);
    // a x = b  <=>  D (right^-1 x) = left b  with D = left a right.
    std::vector<mpz_class> c = snf.left.apply(b);
    int n = std::min(a.rows(), a.cols());
    std::vector<mpz_class> y(static_cast<size_t>(a.cols()));
    for (int i = 0; i < a.rows(); ++i) {
        mpz_class d = i < n ? snf.diagonal[static_cast<size_t>(i)] : mpz_class(0);
        if (d == 0) {
            if (c[static_cast<size_t>(i)] != 0) return std::nullopt;
        } else {
            if (c[static_cast<size_t>(i)] % d != 0) return std::nullopt;
            if (i < a.cols()) y[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] / d;
        }
    }
    return snf.right.apply(y);
}

std::vector<std::vector<mpz_class>> kernel_basis_integer(const IntMatrix& a) {
    SmithNormalForm snf = smith_normal_form(a);
    int r = rank(snf);
    std::vector<std::vector<mpz_class>> basis;
    for (int j = r; j < a.cols(); ++j) {
        std::vector<mpz_class> v(static_cast<size_t>(a.cols()));
        for (int i = 0; i < a.cols(); ++i) v[static_cast<size_t>(i)] = snf.right.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace nonabcoh::numkit
