#pragma once

#include <complex>
#include <vector>

#include "nonabcoh/numkit/matrix.hpp"

namespace nonabcoh::numkit {

/// Roots of the characteristic polynomial, with multiplicity, for square
/// matrices of size at most 4 (closed form for degree <= 2, polished
/// simultaneous iteration above).  Throws DimensionTooLarge beyond 4.
std::vector<std::complex<double>> eigenvalues(const Matrix& m, double tol);

/// Scaling-and-squaring matrix exponential (floating mode only).
Matrix mat_exp(const Matrix& m, double tol);

/// Spectral norm of a floating matrix via power iteration on A^H A.
double operator_norm(const Matrix& m);

/// Coefficients c1..cn with char(m) = x^n + c1 x^{n-1} + ... + cn.
std::vector<std::complex<double>> characteristic_polynomial(const Matrix& m);

} // namespace nonabcoh::numkit
