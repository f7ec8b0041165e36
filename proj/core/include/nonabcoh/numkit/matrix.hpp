#pragma once

#include <optional>
#include <vector>

#include "nonabcoh/numkit/scalar.hpp"

namespace nonabcoh::numkit {

/// Dense complex matrix whose entries all share one arithmetic mode.
/// Matrices are plain values; every operation returns a fresh matrix.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), data_(std::vector<GaussianRational>{}) {}

    static Matrix zeros(int rows, int cols, Mode mode);
    static Matrix identity(int n, Mode mode);
    static Matrix from_exact(int rows, int cols, std::vector<GaussianRational> entries);
    static Matrix from_float(int rows, int cols, std::vector<std::complex<double>> entries);
    /// Row-major entry list, all scalars sharing one mode.
    static Matrix from_scalars(int rows, int cols, const std::vector<Scalar>& entries);
    static Matrix diagonal(const std::vector<Scalar>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    Mode mode() const {
        return std::holds_alternative<std::vector<GaussianRational>>(data_) ? Mode::exact
                                                                            : Mode::floating;
    }

    Scalar at(int i, int j) const;
    void set(int i, int j, const Scalar& value);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    Matrix operator-() const;

    Matrix transpose() const;
    Matrix conjugate_transpose() const;

    Scalar trace() const;
    Scalar determinant() const;
    /// Throws SingularMatrix when not invertible (exact: det == 0;
    /// floating: pivot magnitude below 1e-300).
    Matrix inverse() const;

    bool is_invertible(double tol) const;

    /// Largest entry magnitude (numeric in either mode).
    double max_abs() const;
    /// max |a_ij - b_ij| as doubles; shapes must agree.
    double max_abs_diff(const Matrix& o) const;
    bool equals(const Matrix& o) const; // exact mode only
    bool approx_identity(double tol) const;
    bool is_identity() const;           // exact mode only

    Matrix to_float() const;

    // Exact-mode linear algebra (throws ModeMismatch on floating input).
    int rank_exact() const;
    std::vector<std::vector<GaussianRational>> kernel_basis_exact() const;
    /// Solves A x = b exactly; nullopt when inconsistent.
    std::optional<std::vector<GaussianRational>> solve_exact(
        const std::vector<GaussianRational>& rhs) const;

private:
    int rows_, cols_;
    std::variant<std::vector<GaussianRational>, std::vector<std::complex<double>>> data_;

    std::vector<GaussianRational>& xdata() { return std::get<std::vector<GaussianRational>>(data_); }
    const std::vector<GaussianRational>& xdata() const {
        return std::get<std::vector<GaussianRational>>(data_);
    }
    std::vector<std::complex<double>>& fdata() {
        return std::get<std::vector<std::complex<double>>>(data_);
    }
    const std::vector<std::complex<double>>& fdata() const {
        return std::get<std::vector<std::complex<double>>>(data_);
    }

    friend class MatrixOps;
};

void require_same_mode(const Matrix& a, const Matrix& b);

} // namespace nonabcoh::numkit
