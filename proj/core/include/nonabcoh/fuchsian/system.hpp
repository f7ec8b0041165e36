#pragma once

#include <complex>

#include "nonabcoh/numkit/matrix.hpp"

namespace nonabcoh::fuchsian {

/// First-order system F' + (A0/z + A1/(z-1)) F = 0 on the three-punctured
/// sphere.  The residue at infinity is always -A0 - A1, recomputed on
/// demand and never stored.
class FuchsianSystem {
public:
    FuchsianSystem(numkit::Matrix a0, numkit::Matrix a1);

    static FuchsianSystem rank1(std::complex<double> a0, std::complex<double> a1);

    int rank() const { return a0_.rows(); }
    const numkit::Matrix& a0() const { return a0_; }
    const numkit::Matrix& a1() const { return a1_; }
    numkit::Matrix a_infinity() const { return -(a0_ + a1_); }

private:
    numkit::Matrix a0_, a1_;
};

/// Divides both residues by lambda: the system solved by
/// lambda F' + (A0/z + A1/(z-1)) F = 0.  Throws ZeroLambda at the
/// degenerate value, which is outside the numeric scope.
FuchsianSystem lambda_rescale(const FuchsianSystem& sys, std::complex<double> lambda);

struct HypergeometricParams {
    std::complex<double> a, b, c;
    // Resonance flags: integer exponent differences at 0, 1, infinity.
    bool c_integer = false;
    bool c_minus_a_minus_b_integer = false;
    bool a_minus_b_integer = false;

    HypergeometricParams(std::complex<double> a, std::complex<double> b,
                         std::complex<double> c, double tol = 1e-9);
};

/// Companion system of the hypergeometric equation
/// z(1-z) f'' + (c - (a+b+1) z) f' - a b f = 0 whose first component
/// solves the equation: A0 = [[0,-1],[0,c-1]], A1 = [[0,0],[ab, a+b-c+1]].
FuchsianSystem hypergeometric_to_system(const HypergeometricParams& p);

} // namespace nonabcoh::fuchsian
