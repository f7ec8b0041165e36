#pragma once

#include <complex>
#include <vector>

#include "nonabcoh/fuchsian/system.hpp"

namespace nonabcoh::fuchsian {

using Polyline = std::vector<std::complex<double>>;

struct TransportResult {
    numkit::Matrix transport;
    /// |det U - exp(-integral of tr)| / max(1, |exp|): the Liouville
    /// determinant identity residual, recorded on every call.
    double liouville_residual = 0.0;
};

struct IntegrateOptions {
    double tol = 1e-9;
    /// Minimum allowed distance from the path to the poles 0 and 1.
    double pole_guard = 1e-8;
    /// Rescaling of the derivative: solves lambda F' + A(z) F = 0.
    std::complex<double> lambda{1.0, 0.0};
};

/// Transport matrix U with F(end) = U F(start) for every solution F,
/// computed along the polyline with an adaptive embedded 5(4) pair.
/// Throws PoleTooClose / StepUnderflow / BadTolerance.
TransportResult integrate(const FuchsianSystem& sys, const Polyline& path,
                          const IntegrateOptions& options);

inline TransportResult integrate(const FuchsianSystem& sys, const Polyline& path, double tol) {
    IntegrateOptions o;
    o.tol = tol;
    return integrate(sys, path, o);
}

/// Counterclockwise polygonal circle through `segments` chords, starting
/// and ending at angle `start_angle`; negative `turns` winds clockwise.
Polyline polygonal_circle(std::complex<double> center, double radius, double start_angle,
                          int turns, int segments = 64);

} // namespace nonabcoh::fuchsian
