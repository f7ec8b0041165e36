#include "nonabcoh/fuchsian/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "nonabcoh/error.hpp"
#include "nonabcoh/numkit/eigen.hpp"
#include "nonabcoh/parallel.hpp"

namespace nonabcoh::fuchsian {

namespace {

using Cx = std::complex<double>;

void append(Polyline& into, const Polyline& tail) {
    for (const Cx& z : tail)
        if (into.empty() || into.back() != z) into.push_back(z);
}

Polyline reversed(Polyline p) {
    std::reverse(p.begin(), p.end());
    return p;
}

} // namespace

LoopSpec loop_around_0(Cx base, double radius) {
    LoopSpec loop;
    loop.basepoint = base;
    loop.kind = LoopKind::around0;
    loop.radius = radius;
    double dist = std::abs(base);
    if (dist < radius) raise("PoleTooClose", "basepoint inside the loop radius around 0");
    Cx anchor = radius * base / dist;
    Polyline tail{base, anchor};
    append(loop.polyline, tail);
    append(loop.polyline, polygonal_circle({0.0, 0.0}, radius, std::arg(anchor), 1));
    append(loop.polyline, reversed(tail));
    return loop;
}

LoopSpec loop_around_1(Cx base, double radius) {
    LoopSpec loop;
    loop.basepoint = base;
    loop.kind = LoopKind::around1;
    loop.radius = radius;
    // Dip into the lower half plane so the tail clears the puncture at 0,
    // then anchor at the bottom of the circle around 1.
    Cx waypoint(0.5, -std::max(0.5, 2.0 * radius));
    Cx anchor(1.0, -radius);
    Polyline tail{base, waypoint, anchor};
    append(loop.polyline, tail);
    append(loop.polyline, polygonal_circle({1.0, 0.0}, radius, -std::numbers::pi / 2.0, 1));
    append(loop.polyline, reversed(tail));
    return loop;
}

LoopSpec loop_around_infinity(Cx base, double big_radius) {
    LoopSpec loop;
    loop.basepoint = base;
    loop.kind = LoopKind::aroundInfinity;
    loop.radius = big_radius;
    Cx anchor(-big_radius, 0.0);
    Polyline tail{base, anchor};
    append(loop.polyline, tail);
    // Clockwise in z is counterclockwise around infinity.
    append(loop.polyline, polygonal_circle({0.0, 0.0}, big_radius, std::numbers::pi, -1, 128));
    append(loop.polyline, reversed(tail));
    return loop;
}

MonodromyResult monodromy(const FuchsianSystem& sys, Cx base, double tol, double radius) {
    if (base == Cx(0.0, 0.0) || base == Cx(1.0, 0.0))
        raise("PoleTooClose", "basepoint coincides with a puncture");
    LoopSpec l0 = loop_around_0(base, radius);
    LoopSpec l1 = loop_around_1(base, radius);
    LoopSpec li = loop_around_infinity(base);

    IntegrateOptions options;
    options.tol = tol;
    options.pole_guard = radius / 2.0;

    TransportResult t0, t1, ti;
    run_tasks({[&] { t0 = integrate(sys, l0.polyline, options); },
               [&] { t1 = integrate(sys, l1.polyline, options); },
               [&] { ti = integrate(sys, li.polyline, options); }});

    MonodromyResult out;
    out.integration_tolerance = tol;
    out.max_liouville_residual =
        std::max({t0.liouville_residual, t1.liouville_residual, ti.liouville_residual});
    numkit::Matrix product = t0.transport * t1.transport * ti.transport;
    out.residual_identity_error =
        product.max_abs_diff(numkit::Matrix::identity(sys.rank(), numkit::Mode::floating));
    out.c0 = std::move(t0.transport);
    out.c1 = std::move(t1.transport);
    out.cinf = std::move(ti.transport);
    return out;
}

namespace {

double multiset_distance(std::vector<Cx> a, std::vector<Cx> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::vector<size_t> idx(a.size());
    std::iota(idx.begin(), idx.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0.0;
        for (size_t k = 0; k < a.size(); ++k)
            worst = std::max(worst, std::abs(a[idx[k]] - b[k]));
        best = std::min(best, worst);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return best;
}

bool resonant_spectrum(const std::vector<Cx>& eigs, double tol) {
    for (size_t i = 0; i < eigs.size(); ++i)
        for (size_t j = i + 1; j < eigs.size(); ++j) {
            Cx diff = eigs[i] - eigs[j];
            double nearest = std::round(diff.real());
            if (std::abs(diff.imag()) <= tol && std::abs(diff.real() - nearest) <= tol &&
                nearest != 0.0)
                return true;
        }
    return false;
}

} // namespace

EigenvalueCheckReport eigenvalue_check(const FuchsianSystem& sys, const MonodromyResult& result,
                                       double tol) {
    EigenvalueCheckReport report;
    const double two_pi = 2.0 * std::numbers::pi;
    struct Case {
        const char* label;
        numkit::Matrix residue;
        const numkit::Matrix* loop;
    };
    const Case cases[3] = {{"0", sys.a0(), &result.c0},
                           {"1", sys.a1(), &result.c1},
                           {"inf", sys.a_infinity(), &result.cinf}};
    for (const Case& c : cases) {
        EigenvalueCheckPoint point;
        point.point = c.label;
        std::vector<Cx> mu = numkit::eigenvalues(c.residue, 1e-12);
        point.resonant = resonant_spectrum(mu, 1e-8);
        for (const Cx& m : mu) point.predicted.push_back(std::exp(Cx(0.0, -two_pi) * m));
        point.computed = numkit::eigenvalues(*c.loop, 1e-12);
        point.max_error = multiset_distance(point.predicted, point.computed);
        point.passed = !point.resonant && point.max_error <= tol;
        report.any_resonant = report.any_resonant || point.resonant;
        if (!point.resonant && !point.passed) report.all_passed = false;
        report.points.push_back(std::move(point));
    }
    return report;
}

} // namespace nonabcoh::fuchsian
