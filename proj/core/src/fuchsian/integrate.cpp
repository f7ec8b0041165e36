#include "nonabcoh/fuchsian/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nonabcoh/error.hpp"

namespace nonabcoh::fuchsian {

namespace {

using Cx = std::complex<double>;
using State = std::vector<Cx>; // transport row-major, then the log-determinant

struct Rhs {
    const FuchsianSystem& sys;
    Cx za, dz;     // segment z(t) = za + t dz
    Cx inv_lambda;
    double guard;
    int r;

    void operator()(double t, const State& y, State& dy) const {
        Cx z = za + t * dz;
        if (std::abs(z) < guard || std::abs(z - 1.0) < guard)
            raise("PoleTooClose", "integration path passes too close to a pole");
        // B(z) = -(A0/z + A1/(z-1)) / lambda
        Cx w0 = -inv_lambda / z;
        Cx w1 = -inv_lambda / (z - 1.0);
        // dU/dt = B U dz; d(logdet)/dt = tr(B) dz
        Cx trace = 0.0;
        for (int i = 0; i < r; ++i) {
            trace += w0 * sys.a0().at(i, i).float_value() + w1 * sys.a1().at(i, i).float_value();
            for (int j = 0; j < r; ++j) {
                Cx acc = 0.0;
                for (int k = 0; k < r; ++k) {
                    Cx b_ik = w0 * sys.a0().at(i, k).float_value() +
                              w1 * sys.a1().at(i, k).float_value();
                    acc += b_ik * y[static_cast<size_t>(k * r + j)];
                }
                dy[static_cast<size_t>(i * r + j)] = acc * dz;
            }
        }
        dy[static_cast<size_t>(r * r)] = trace * dz;
    }
};

// Dormand-Prince 5(4) coefficients.
constexpr double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
                 A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
constexpr double E1 = 35.0 / 384 - 5179.0 / 57600, E3 = 500.0 / 1113 - 7571.0 / 16695,
                 E4 = 125.0 / 192 - 393.0 / 640, E5 = -2187.0 / 6784 + 92097.0 / 339200,
                 E6 = 11.0 / 84 - 187.0 / 2100, E7 = -1.0 / 40;

void integrate_segment(const Rhs& rhs, State& y, double tol) {
    size_t n = y.size();
    State k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), y5(n);
    double t = 0.0, h = 0.1;
    bool fsal_valid = false;
    int steps = 0;
    while (t < 1.0) {
        if (++steps > 1000000) raise("StepUnderflow", "step count exceeded");
        h = std::min(h, 1.0 - t);
        if (h < 1e-14) raise("StepUnderflow", "adaptive step collapsed");
        if (!fsal_valid) rhs(t, y, k1);
        auto stage = [&](const State& base, State& out, double tc) { rhs(t + tc * h, base, out); };
        for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (A21 * k1[i]);
        stage(tmp, k2, C2);
        for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (A31 * k1[i] + A32 * k2[i]);
        stage(tmp, k3, C3);
        for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (A41 * k1[i] + A42 * k2[i] + A43 * k3[i]);
        stage(tmp, k4, C4);
        for (size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + h * (A51 * k1[i] + A52 * k2[i] + A53 * k3[i] + A54 * k4[i]);
        stage(tmp, k5, C5);
        for (size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + h * (A61 * k1[i] + A62 * k2[i] + A63 * k3[i] + A64 * k4[i] + A65 * k5[i]);
        stage(tmp, k6, 1.0);
        for (size_t i = 0; i < n; ++i)
            y5[i] = y[i] + h * (B1 * k1[i] + B3 * k3[i] + B4 * k4[i] + B5 * k5[i] + B6 * k6[i]);
        rhs(t + h, y5, k7);

        double err = 0.0, ynorm = 0.0;
        for (size_t i = 0; i < n; ++i) {
            Cx e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            err = std::max(err, std::abs(e));
            ynorm = std::max(ynorm, std::abs(y5[i]));
        }
        // Safety margin keeps the accumulated global error below the
        // requested tolerance, not just each local step; the floor keeps
        // the acceptance test above the roundoff of the error estimate.
        double limit = std::max(2e-4 * tol, 1e-14) * std::max(1.0, ynorm);
        if (err <= limit) {
            t += h;
            y = y5;
            k1 = k7; // first-same-as-last
            fsal_valid = true;
            double grow = err > 0.0 ? 0.9 * std::pow(limit / err, 0.2) : 5.0;
            h *= std::clamp(grow, 0.2, 5.0);
        } else {
            fsal_valid = false;
            h *= std::clamp(0.9 * std::pow(limit / err, 0.2), 0.1, 0.9);
        }
    }
}

} // namespace

TransportResult integrate(const FuchsianSystem& sys, const Polyline& path,
                          const IntegrateOptions& options) {
    if (options.tol <= 0.0) raise("BadTolerance", "integration tolerance must be positive");
    if (options.lambda == Cx(0.0, 0.0)) raise("ZeroLambda", "lambda must be nonzero");
    if (path.size() < 1) raise("BrokenPath", "empty integration path");
    int r = sys.rank();
    State y(static_cast<size_t>(r * r) + 1, Cx(0.0, 0.0));
    for (int i = 0; i < r; ++i) y[static_cast<size_t>(i * r + i)] = 1.0;

    for (size_t seg = 0; seg + 1 < path.size(); ++seg) {
        Cx za = path[seg], zb = path[seg + 1];
        if (za == zb) continue;
        Rhs rhs{sys, za, zb - za, 1.0 / options.lambda, options.pole_guard, r};
        integrate_segment(rhs, y, options.tol);
    }

    std::vector<Cx> entries(y.begin(), y.begin() + r * r);
    numkit::Matrix u = numkit::Matrix::from_float(r, r, std::move(entries));
    Cx expected_det = std::exp(y[static_cast<size_t>(r * r)]);
    double residual =
        std::abs(u.determinant().float_value() - expected_det) / std::max(1.0, std::abs(expected_det));
    return TransportResult{std::move(u), residual};
}

Polyline polygonal_circle(Cx center, double radius, double start_angle, int turns, int segments) {
    if (segments < 8) raise("BadDimension", "circle needs at least 8 segments");
    Polyline pts;
    int total = std::abs(turns) * segments;
    double span = 2.0 * std::numbers::pi * turns;
    for (int i = 0; i <= total; ++i) {
        double theta = start_angle + span * static_cast<double>(i) / static_cast<double>(total);
        pts.push_back(center + radius * Cx(std::cos(theta), std::sin(theta)));
    }
    return pts;
}

} // namespace nonabcoh::fuchsian
