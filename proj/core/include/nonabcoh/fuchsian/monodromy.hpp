#pragma once

#include <string>

#include "nonabcoh/fuchsian/integrate.hpp"

namespace nonabcoh::fuchsian {

enum class LoopKind { around0, around1, aroundInfinity, custom };

/// A based loop avoiding the punctures 0 and 1.  The stock loops keep a
/// distance of at least radius/2 from both punctures.
struct LoopSpec {
    std::complex<double> basepoint{-0.25, 0.0};
    LoopKind kind = LoopKind::custom;
    double radius = 0.25;
    Polyline polyline; // realized path, start == end == basepoint
};

LoopSpec loop_around_0(std::complex<double> base, double radius);
LoopSpec loop_around_1(std::complex<double> base, double radius);
LoopSpec loop_around_infinity(std::complex<double> base, double big_radius = 10.0);

/// Monodromy around 0, 1 and infinity.  The loop around infinity is
/// integrated independently on a large clockwise circle, so the product
/// identity below is a genuine zero-cost consistency check, never a
/// definition.  Loops are counterclockwise around their puncture and the
/// frozen composition convention is product_order: the transports satisfy
/// C0 * C1 * Cinf = id up to integration error.
struct MonodromyResult {
    numkit::Matrix c0, c1, cinf;
    double residual_identity_error = 0.0; // |C0 C1 Cinf - id|, max entry
    double integration_tolerance = 0.0;
    double max_liouville_residual = 0.0;
    std::string product_order = "C0*C1*Cinf";
};

MonodromyResult monodromy(const FuchsianSystem& sys, std::complex<double> base = {-0.25, 0.0},
                          double tol = 1e-9, double radius = 0.25);

/// Comparison of the monodromy spectrum with the residue spectrum:
/// eig(C_i) against { exp(-2 pi i mu) : mu in eig(A_i) }.  Points whose
/// residue eigenvalues differ by a nonzero integer are resonant; they are
/// flagged and skipped, never asserted.
struct EigenvalueCheckPoint {
    std::string point; // "0", "1", "inf"
    bool resonant = false;
    double max_error = 0.0;
    std::vector<std::complex<double>> predicted, computed;
    bool passed = false;
};

struct EigenvalueCheckReport {
    std::vector<EigenvalueCheckPoint> points;
    bool any_resonant = false;
    bool all_passed = true; // over the non-resonant points
};

EigenvalueCheckReport eigenvalue_check(const FuchsianSystem& sys, const MonodromyResult& result,
                                       double tol);

} // namespace nonabcoh::fuchsian
