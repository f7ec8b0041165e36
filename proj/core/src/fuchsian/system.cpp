#include "nonabcoh/fuchsian/system.hpp"

#include <cmath>

#include "nonabcoh/error.hpp"

namespace nonabcoh::fuchsian {

using numkit::Matrix;
using numkit::Mode;

FuchsianSystem::FuchsianSystem(Matrix a0, Matrix a1) : a0_(std::move(a0)), a1_(std::move(a1)) {
    if (!a0_.is_square() || !a1_.is_square() || a0_.rows() != a1_.rows())
        raise("BadDimension", "residues must be square matrices of equal size");
    if (a0_.mode() != Mode::floating || a1_.mode() != Mode::floating)
        raise("ModeMismatch", "Fuchsian residues are floating matrices");
}

FuchsianSystem FuchsianSystem::rank1(std::complex<double> a0, std::complex<double> a1) {
    return FuchsianSystem(Matrix::from_float(1, 1, {a0}), Matrix::from_float(1, 1, {a1}));
}

FuchsianSystem lambda_rescale(const FuchsianSystem& sys, std::complex<double> lambda) {
    if (lambda == std::complex<double>(0.0, 0.0))
        raise("ZeroLambda", "lambda = 0 degenerates to an O-linear operator; not integrable here");
    numkit::Scalar inv = numkit::Scalar::floating(1.0 / lambda);
    return FuchsianSystem(sys.a0().scaled(inv), sys.a1().scaled(inv));
}

namespace {

bool near_integer(std::complex<double> z, double tol) {
    return std::abs(z.imag()) <= tol && std::abs(z.real() - std::round(z.real())) <= tol;
}

} // namespace

HypergeometricParams::HypergeometricParams(std::complex<double> a_, std::complex<double> b_,
                                           std::complex<double> c_, double tol)
    : a(a_), b(b_), c(c_) {
    c_integer = near_integer(c, tol);
    c_minus_a_minus_b_integer = near_integer(c - a - b, tol);
    a_minus_b_integer = near_integer(a - b, tol);
}

FuchsianSystem hypergeometric_to_system(const HypergeometricParams& p) {
    // With u = (f, z f'... ) in the theta = z d/dz frame: theta u1 = u2 and
    // (1-z) theta u2 = z a b u1 + (z(a+b) - c + 1) u2; partial fractions in
    // U' = (B0/z + B1/(z-1)) U give the residues below (A_i = -B_i).
    std::complex<double> one(1.0, 0.0);
    numkit::Matrix a0 = numkit::Matrix::from_float(2, 2, {0.0, -one, 0.0, p.c - one});
    numkit::Matrix a1 =
        numkit::Matrix::from_float(2, 2, {0.0, 0.0, p.a * p.b, p.a + p.b - p.c + one});
    return FuchsianSystem(std::move(a0), std::move(a1));
}

} // namespace nonabcoh::fuchsian
