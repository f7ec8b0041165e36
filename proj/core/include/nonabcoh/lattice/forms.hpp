#pragma once

#include <memory>
#include <vector>

#include "nonabcoh/lattice/surface.hpp"
#include "nonabcoh/numkit/scalar.hpp"

namespace nonabcoh::lattice {

/// Complex-valued discrete form on a triangulated surface: values on
/// vertices (degree 0), on edges with antisymmetry under reversal
/// (degree 1, stored in the u < v direction), or on faces (degree 2).
class DiscreteForm {
public:
    DiscreteForm(std::shared_ptr<const TriangulatedSurface> surface, int degree,
                 std::vector<numkit::Scalar> values);

    static DiscreteForm zero(std::shared_ptr<const TriangulatedSurface> surface, int degree,
                             numkit::Mode mode = numkit::Mode::exact);

    const TriangulatedSurface& surface() const { return *surface_; }
    std::shared_ptr<const TriangulatedSurface> surface_ptr() const { return surface_; }
    int degree() const { return degree_; }
    numkit::Mode mode() const;
    int size() const { return static_cast<int>(values_.size()); }

    const numkit::Scalar& at(int index) const { return values_.at(static_cast<size_t>(index)); }
    void set(int index, const numkit::Scalar& v) { values_.at(static_cast<size_t>(index)) = v; }

    /// Degree-1 value on the directed edge u -> v (sign under reversal).
    numkit::Scalar on_edge(int u, int v) const;

    bool is_zero() const;
    bool approx_zero(double tol) const;

private:
    std::shared_ptr<const TriangulatedSurface> surface_;
    int degree_;
    std::vector<numkit::Scalar> values_;
};

/// Discrete exterior derivative: (df)(u->v) = f(v) - f(u) on edges,
/// (dA)(face) = oriented boundary sum on faces.  Throws DegreeTooHigh on
/// 2-forms.
DiscreteForm d(const DiscreteForm& form);

} // namespace nonabcoh::lattice
