#include "nonabcoh/numkit/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "nonabcoh/error.hpp"

namespace nonabcoh::numkit {

namespace {

void check_shape(int rows, int cols) {
    if (rows < 0 || cols < 0) raise("BadDimension", "negative matrix dimension");
}

// Gaussian elimination over Q(i) on an augmented row-major grid.
// Returns the pivot column list; the grid is left in row echelon form.
std::vector<int> echelonize(std::vector<GaussianRational>& a, int rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i * cols + c].is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
        GaussianRational inv = a[r * cols + c].inverse();
        for (int j = c; j < cols; ++j) a[r * cols + j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i * cols + c].is_zero()) continue;
            GaussianRational f = a[i * cols + c];
            for (int j = c; j < cols; ++j) a[i * cols + j] -= f * a[r * cols + j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

Matrix Matrix::zeros(int rows, int cols, Mode mode) {
    check_shape(rows, cols);
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    if (mode == Mode::exact)
        m.data_ = std::vector<GaussianRational>(static_cast<size_t>(rows) * cols);
    else
        m.data_ = std::vector<std::complex<double>>(static_cast<size_t>(rows) * cols);
    return m;
}

Matrix Matrix::identity(int n, Mode mode) {
    Matrix m = zeros(n, n, mode);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(mode));
    return m;
}

Matrix Matrix::from_exact(int rows, int cols, std::vector<GaussianRational> entries) {
    check_shape(rows, cols);
    if (entries.size() != static_cast<size_t>(rows) * cols)
        raise("BadDimension", "entry count does not match matrix shape");
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(entries);
    return m;
}

Matrix Matrix::from_float(int rows, int cols, std::vector<std::complex<double>> entries) {
    check_shape(rows, cols);
    if (entries.size() != static_cast<size_t>(rows) * cols)
        raise("BadDimension", "entry count does not match matrix shape");
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(entries);
    return m;
}

Matrix Matrix::from_scalars(int rows, int cols, const std::vector<Scalar>& entries) {
    if (entries.empty()) return zeros(rows, cols, Mode::exact);
    Mode mode = entries.front().mode();
    for (const Scalar& s : entries)
        if (s.mode() != mode) raise("ModeMismatch", "matrix entries must share one mode");
    Matrix m = zeros(rows, cols, mode);
    if (entries.size() != static_cast<size_t>(rows) * cols)
        raise("BadDimension", "entry count does not match matrix shape");
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, entries[static_cast<size_t>(i) * cols + j]);
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& entries) {
    int n = static_cast<int>(entries.size());
    if (n == 0) raise("BadDimension", "empty diagonal");
    Matrix m = zeros(n, n, entries.front().mode());
    for (int i = 0; i < n; ++i) m.set(i, i, entries[static_cast<size_t>(i)]);
    return m;
}

Scalar Matrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        raise("IndexOutOfRange", "matrix index out of range");
    size_t k = static_cast<size_t>(i) * cols_ + j;
    if (mode() == Mode::exact) return Scalar::exact(xdata()[k]);
    return Scalar::floating(fdata()[k]);
}

void Matrix::set(int i, int j, const Scalar& value) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        raise("IndexOutOfRange", "matrix index out of range");
    if (value.mode() != mode()) raise("ModeMismatch", "entry mode differs from matrix mode");
    size_t k = static_cast<size_t>(i) * cols_ + j;
    if (mode() == Mode::exact)
        xdata()[k] = value.exact_value();
    else
        fdata()[k] = value.float_value();
}

void require_same_mode(const Matrix& a, const Matrix& b) {
    if (a.mode() != b.mode())
        raise("ModeMismatch", "mixed exact/floating matrix arithmetic is rejected");
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_mode(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) raise("BadDimension", "shape mismatch in +");
    Matrix r = *this;
    if (mode() == Mode::exact)
        for (size_t k = 0; k < r.xdata().size(); ++k) r.xdata()[k] += o.xdata()[k];
    else
        for (size_t k = 0; k < r.fdata().size(); ++k) r.fdata()[k] += o.fdata()[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_mode(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) raise("BadDimension", "shape mismatch in -");
    Matrix r = *this;
    if (mode() == Mode::exact)
        for (size_t k = 0; k < r.xdata().size(); ++k) r.xdata()[k] -= o.xdata()[k];
    else
        for (size_t k = 0; k < r.fdata().size(); ++k) r.fdata()[k] -= o.fdata()[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same_mode(*this, o);
    if (cols_ != o.rows_) raise("BadDimension", "shape mismatch in *");
    Matrix r = zeros(rows_, o.cols_, mode());
    if (mode() == Mode::exact) {
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const GaussianRational& aik = xdata()[static_cast<size_t>(i) * cols_ + k];
                if (aik.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.xdata()[static_cast<size_t>(i) * o.cols_ + j] +=
                        aik * o.xdata()[static_cast<size_t>(k) * o.cols_ + j];
            }
    } else {
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                std::complex<double> aik = fdata()[static_cast<size_t>(i) * cols_ + k];
                for (int j = 0; j < o.cols_; ++j)
                    r.fdata()[static_cast<size_t>(i) * o.cols_ + j] +=
                        aik * o.fdata()[static_cast<size_t>(k) * o.cols_ + j];
            }
    }
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    if (s.mode() != mode()) raise("ModeMismatch", "scale factor mode differs from matrix mode");
    Matrix r = *this;
    if (mode() == Mode::exact)
        for (auto& e : r.xdata()) e *= s.exact_value();
    else
        for (auto& e : r.fdata()) e *= s.float_value();
    return r;
}

Matrix Matrix::operator-() const {
    return scaled(mode() == Mode::exact ? Scalar::exact(-1L) : Scalar::floating({-1.0, 0.0}));
}

Matrix Matrix::transpose() const {
    Matrix r = zeros(cols_, rows_, mode());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

Matrix Matrix::conjugate_transpose() const {
    Matrix r = zeros(cols_, rows_, mode());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j).conj());
    return r;
}

Scalar Matrix::trace() const {
    if (!is_square()) raise("BadDimension", "trace of a non-square matrix");
    Scalar t = Scalar::zero(mode());
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Scalar Matrix::determinant() const {
    if (!is_square()) raise("BadDimension", "determinant of a non-square matrix");
    int n = rows_;
    if (n == 0) return Scalar::one(mode());
    if (mode() == Mode::exact) {
        std::vector<GaussianRational> a = xdata();
        GaussianRational det(1);
        for (int c = 0; c < n; ++c) {
            int p = -1;
            for (int i = c; i < n; ++i)
                if (!a[static_cast<size_t>(i) * n + c].is_zero()) { p = i; break; }
            if (p < 0) return Scalar::exact(GaussianRational{});
            if (p != c) {
                for (int j = 0; j < n; ++j)
                    std::swap(a[static_cast<size_t>(p) * n + j], a[static_cast<size_t>(c) * n + j]);
                det = -det;
            }
            det *= a[static_cast<size_t>(c) * n + c];
            GaussianRational inv = a[static_cast<size_t>(c) * n + c].inverse();
            for (int i = c + 1; i < n; ++i) {
                GaussianRational f = a[static_cast<size_t>(i) * n + c] * inv;
                if (f.is_zero()) continue;
                for (int j = c; j < n; ++j)
                    a[static_cast<size_t>(i) * n + j] -= f * a[static_cast<size_t>(c) * n + j];
            }
        }
        return Scalar::exact(det);
    }
    std::vector<std::complex<double>> a = fdata();
    std::complex<double> det = 1.0;
    for (int c = 0; c < n; ++c) {
        int p = c;
        double best = std::abs(a[static_cast<size_t>(c) * n + c]);
        for (int i = c + 1; i < n; ++i) {
            double v = std::abs(a[static_cast<size_t>(i) * n + c]);
            if (v > best) { best = v; p = i; }
        }
        if (best == 0.0) return Scalar::floating({0.0, 0.0});
        if (p != c) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<size_t>(p) * n + j], a[static_cast<size_t>(c) * n + j]);
            det = -det;
        }
        det *= a[static_cast<size_t>(c) * n + c];
        std::complex<double> inv = 1.0 / a[static_cast<size_t>(c) * n + c];
        for (int i = c + 1; i < n; ++i) {
            std::complex<double> f = a[static_cast<size_t>(i) * n + c] * inv;
            for (int j = c; j < n; ++j)
                a[static_cast<size_t>(i) * n + j] -= f * a[static_cast<size_t>(c) * n + j];
        }
    }
    return Scalar::floating(det);
}

Matrix Matrix::inverse() const {
    if (!is_square()) raise("BadDimension", "inverse of a non-square matrix");
    int n = rows_;
    // Gauss-Jordan on [A | I].
    Matrix aug = zeros(n, 2 * n, mode());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.set(i, j, at(i, j));
        aug.set(i, n + i, Scalar::one(mode()));
    }
    for (int c = 0; c < n; ++c) {
        int p = -1;
        if (mode() == Mode::exact) {
            for (int i = c; i < n; ++i)
                if (!aug.at(i, c).is_zero()) { p = i; break; }
        } else {
            double best = 0.0;
            for (int i = c; i < n; ++i) {
                double v = aug.at(i, c).abs();
                if (v > best) { best = v; p = i; }
            }
            if (best < 1e-300) p = -1;
        }
        if (p < 0) raise("SingularMatrix", "matrix is not invertible");
        if (p != c)
            for (int j = 0; j < 2 * n; ++j) {
                Scalar t = aug.at(p, j);
                aug.set(p, j, aug.at(c, j));
                aug.set(c, j, t);
            }
        Scalar inv = aug.at(c, c).inverse();
        for (int j = 0; j < 2 * n; ++j) aug.set(c, j, aug.at(c, j) * inv);
        for (int i = 0; i < n; ++i) {
            if (i == c) continue;
            Scalar f = aug.at(i, c);
            if (f.is_zero()) continue;
            for (int j = 0; j < 2 * n; ++j) aug.set(i, j, aug.at(i, j) - f * aug.at(c, j));
        }
    }
    Matrix r = zeros(n, n, mode());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.set(i, j, aug.at(i, n + j));
    return r;
}

bool Matrix::is_invertible(double tol) const {
    if (!is_square()) return false;
    Scalar d = determinant();
    return mode() == Mode::exact ? !d.is_zero() : d.abs() > tol;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m = std::max(m, at(i, j).abs());
    return m;
}

double Matrix::max_abs_diff(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) raise("BadDimension", "shape mismatch in diff");
    double m = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m = std::max(m, std::abs(at(i, j).to_complex() - o.at(i, j).to_complex()));
    return m;
}

bool Matrix::equals(const Matrix& o) const {
    if (mode() != Mode::exact || o.mode() != Mode::exact)
        raise("ModeMismatch", "equals() requires exact matrices");
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < xdata().size(); ++k)
        if (xdata()[k] != o.xdata()[k]) return false;
    return true;
}

bool Matrix::approx_identity(double tol) const {
    if (!is_square()) return false;
    return max_abs_diff(identity(rows_, mode())) <= tol;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    return equals(identity(rows_, Mode::exact));
}

Matrix Matrix::to_float() const {
    if (mode() == Mode::floating) return *this;
    std::vector<std::complex<double>> e;
    e.reserve(xdata().size());
    for (const auto& q : xdata()) e.push_back(q.to_complex());
    return from_float(rows_, cols_, std::move(e));
}

int Matrix::rank_exact() const {
    if (mode() != Mode::exact) raise("ModeMismatch", "rank_exact on floating matrix");
    std::vector<GaussianRational> a = xdata();
    return static_cast<int>(echelonize(a, rows_, cols_).size());
}

std::vector<std::vector<GaussianRational>> Matrix::kernel_basis_exact() const {
    if (mode() != Mode::exact) raise("ModeMismatch", "kernel_basis_exact on floating matrix");
    std::vector<GaussianRational> a = xdata();
    std::vector<int> pivots = echelonize(a, rows_, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<GaussianRational> v(cols_);
        v[static_cast<size_t>(free)] = GaussianRational(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -a[r * cols_ + free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<GaussianRational>> Matrix::solve_exact(
    const std::vector<GaussianRational>& rhs) const {
    if (mode() != Mode::exact) raise("ModeMismatch", "solve_exact on floating matrix");
    if (rhs.size() != static_cast<size_t>(rows_)) raise("BadDimension", "rhs size mismatch");
    int cols = cols_ + 1;
    std::vector<GaussianRational> a(static_cast<size_t>(rows_) * cols);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            a[static_cast<size_t>(i) * cols + j] = xdata()[static_cast<size_t>(i) * cols_ + j];
        a[static_cast<size_t>(i) * cols + cols_] = rhs[static_cast<size_t>(i)];
    }
    std::vector<int> pivots = echelonize(a, rows_, cols);
    for (int c : pivots)
        if (c == cols_) return std::nullopt; // inconsistent
    std::vector<GaussianRational> x(cols_);
    for (size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<size_t>(pivots[r])] = a[r * cols + cols_];
    return x;
}

} // namespace nonabcoh::numkit
