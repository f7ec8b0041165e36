#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace nonabcoh::numkit {

/// Dense matrix over Z with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const mpz_class& at(int i, int j) const { return e_[idx(i, j)]; }
    mpz_class& at(int i, int j) { return e_[idx(i, j)]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix transpose() const;
    std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;

    /// Exact determinant via fraction-free (Bareiss) elimination.
    mpz_class determinant() const;

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i) * cols_ + j; }
    int rows_, cols_;
    std::vector<mpz_class> e_;
};

/// left * m * right is diagonal with d1 | d2 | ... ; left and right are
/// unimodular.  The diagonal has min(rows, cols) entries, zeros included,
/// all non-negative.
struct SmithNormalForm {
    std::vector<mpz_class> diagonal;
    IntMatrix left;
    IntMatrix right;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

int rank(const SmithNormalForm& snf);

/// Inverse of a unimodular integer matrix (integer entries guaranteed).
IntMatrix invert_unimodular(const IntMatrix& m);

/// Solves A x = b over Z; nullopt when no integer solution exists.
std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& a,
                                                    const std::vector<mpz_class>& b);

/// Basis of { x in Z^cols : A x = 0 }; the basis is saturated (every
/// rational kernel vector with integer entries is an integer combination).
std::vector<std::vector<mpz_class>> kernel_basis_integer(const IntMatrix& a);

} // namespace nonabcoh::numkit
