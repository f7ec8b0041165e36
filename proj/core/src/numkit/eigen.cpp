#include "nonabcoh/numkit/eigen.hpp"

#include <algorithm>
#include <cmath>

#include "nonabcoh/error.hpp"

namespace nonabcoh::numkit {

namespace {

using Cx = std::complex<double>;

Cx poly_eval(const std::vector<Cx>& c, Cx x) {
    // monic: x^n + c[0] x^{n-1} + ... + c[n-1]
    Cx v = 1.0;
    for (const Cx& ck : c) v = v * x + ck;
    return v;
}

Cx poly_deriv_eval(const std::vector<Cx>& c, Cx x) {
    size_t n = c.size();
    Cx v = static_cast<double>(n);
    for (size_t k = 0; k + 1 < n; ++k) v = v * x + static_cast<double>(n - 1 - k) * c[k];
    return v;
}

// Durand-Kerner simultaneous root iteration on a monic polynomial.
std::vector<Cx> all_roots(const std::vector<Cx>& c) {
    size_t n = c.size();
    double radius = 1.0;
    for (const Cx& ck : c) radius = std::max(radius, std::abs(ck));
    radius += 1.0;
    std::vector<Cx> r(n);
    Cx seed(0.4, 0.9);
    Cx p = 1.0;
    for (size_t k = 0; k < n; ++k) {
        p *= seed;
        r[k] = radius * p;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (size_t k = 0; k < n; ++k) {
            Cx denom = 1.0;
            for (size_t j = 0; j < n; ++j)
                if (j != k) denom *= r[k] - r[j];
            if (denom == 0.0) denom = Cx(1e-300, 0.0);
            Cx step = poly_eval(c, r[k]) / denom;
            r[k] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-15 * radius) break;
    }
    // Newton polish (harmless near multiple roots, quadratic near simple ones).
    for (size_t k = 0; k < n; ++k)
        for (int it = 0; it < 3; ++it) {
            Cx d = poly_deriv_eval(c, r[k]);
            if (std::abs(d) < 1e-14) break;
            r[k] -= poly_eval(c, r[k]) / d;
        }
    return r;
}

} // namespace

std::vector<Cx> characteristic_polynomial(const Matrix& m) {
    if (!m.is_square()) raise("BadDimension", "characteristic polynomial of non-square matrix");
    Matrix a = m.to_float();
    int n = a.rows();
    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_{k-1} + c_{k-1})/k.
    std::vector<Cx> c(static_cast<size_t>(n));
    Matrix mk = a;
    for (int k = 1; k <= n; ++k) {
        Cx ck = -mk.trace().float_value() / static_cast<double>(k);
        c[static_cast<size_t>(k - 1)] = ck;
        if (k == n) break;
        Matrix shifted = mk + Matrix::identity(n, Mode::floating).scaled(Scalar::floating(ck));
        mk = a * shifted;
    }
    return c;
}

std::vector<Cx> eigenvalues(const Matrix& m, double tol) {
    if (!m.is_square()) raise("BadDimension", "eigenvalues of a non-square matrix");
    int n = m.rows();
    if (n > 4) raise("DimensionTooLarge", "eigenvalues limited to matrices of size <= 4");
    (void)tol;
    if (n == 0) return {};
    std::vector<Cx> c = characteristic_polynomial(m);
    if (n == 1) return {-c[0]};
    if (n == 2) {
        // x^2 + c0 x + c1: exact quadratic formula.
        Cx disc = std::sqrt(c[0] * c[0] - 4.0 * c[1]);
        Cx r1 = (-c[0] + disc) / 2.0;
        Cx r2 = (-c[0] - disc) / 2.0;
        // Evaluate the better-conditioned root first, recover the other from the product.
        if (std::abs(r1) > std::abs(r2) && std::abs(r1) > 0.0) r2 = c[1] / r1;
        else if (std::abs(r2) > 0.0) r1 = c[1] / r2;
        return {r1, r2};
    }
    return all_roots(c);
}

Matrix mat_exp(const Matrix& m, double tol) {
    if (!m.is_square()) raise("BadDimension", "exponential of a non-square matrix");
    if (m.mode() != Mode::floating) raise("ModeMismatch", "mat_exp requires a floating matrix");
    if (tol <= 0.0) raise("BadTolerance", "mat_exp tolerance must be positive");
    int n = m.rows();
    double norm = m.max_abs();
    int squarings = 0;
    while (norm > 0.5 && squarings < 60) {
        norm /= 2.0;
        ++squarings;
    }
    Matrix b = m.scaled(Scalar::floating({std::ldexp(1.0, -squarings), 0.0}));
    Matrix sum = Matrix::identity(n, Mode::floating);
    Matrix term = Matrix::identity(n, Mode::floating);
    for (int k = 1; k <= 64; ++k) {
        term = term * b.scaled(Scalar::floating({1.0 / k, 0.0}));
        sum = sum + term;
        // Scaled norm <= 1/2, so the tail is bounded by twice the next term.
        if (term.max_abs() < tol * 0.25) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

double operator_norm(const Matrix& m) {
    Matrix a = m.to_float();
    Matrix g = a.conjugate_transpose() * a;
    int n = g.cols();
    if (n == 0) return 0.0;
    std::vector<Cx> v(static_cast<size_t>(n), Cx(1.0, 0.0));
    double lambda = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<Cx> w(static_cast<size_t>(n), Cx(0.0, 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                w[static_cast<size_t>(i)] += g.at(i, j).float_value() * v[static_cast<size_t>(j)];
        double nw = 0.0;
        for (const Cx& x : w) nw += std::norm(x);
        nw = std::sqrt(nw);
        if (nw == 0.0) return 0.0;
        double next = nw;
        for (auto& x : w) x /= nw;
        v = std::move(w);
        if (std::abs(next - lambda) < 1e-14 * std::max(1.0, next)) { lambda = next; break; }
        lambda = next;
    }
    return std::sqrt(lambda);
}

} // namespace nonabcoh::numkit
