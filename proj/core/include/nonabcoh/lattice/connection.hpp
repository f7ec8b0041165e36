#pragma once

#include <memory>
#include <vector>

#include "nonabcoh/betti/representation.hpp"
#include "nonabcoh/lattice/forms.hpp"
#include "nonabcoh/lattice/surface.hpp"
#include "nonabcoh/localsys/pi1.hpp"
#include "nonabcoh/numkit/matrix.hpp"

namespace nonabcoh::lattice {

/// G-valued transport on the oriented edges of a triangulated surface:
/// T(u -> v) maps the fiber over u to the fiber over v and the reversed
/// edge carries the inverse.  Stored in the u < v direction.
class LatticeConnection {
public:
    LatticeConnection(std::shared_ptr<const TriangulatedSurface> surface, int rank,
                      std::vector<numkit::Matrix> transport_by_edge);

    /// The discrete trivial connection: identity transport everywhere.
    static LatticeConnection trivial(std::shared_ptr<const TriangulatedSurface> surface,
                                     int rank, numkit::Mode mode = numkit::Mode::exact);

    /// Rank-1 transport e^{-A(e)} from a complex-valued 1-form (floating).
    static LatticeConnection from_one_form(const DiscreteForm& a);

    const TriangulatedSurface& surface() const { return *surface_; }
    std::shared_ptr<const TriangulatedSurface> surface_ptr() const { return surface_; }
    int rank() const { return rank_; }
    numkit::Mode mode() const;

    numkit::Matrix transport(int u, int v) const;
    const numkit::Matrix& stored(int edge_index) const {
        return transport_[static_cast<size_t>(edge_index)];
    }
    void set_stored(int edge_index, numkit::Matrix m);

private:
    std::shared_ptr<const TriangulatedSurface> surface_;
    int rank_;
    std::vector<numkit::Matrix> transport_;
};

/// Plaquette curvature: for each face, the ordered boundary transport
/// starting at the smallest vertex.  Flat means identity on every face.
std::vector<numkit::Matrix> curvature(const LatticeConnection& conn);

bool is_flat(const LatticeConnection& conn, double tol);

/// Vertex gauge action T(u -> v) -> g(u)^{-1} T(u -> v) g(v); curvature is
/// conjugated by the gauge at the face's base vertex, so flatness survives.
LatticeConnection gauge_act(const std::vector<numkit::Matrix>& gauge,
                            const LatticeConnection& conn);

/// A path as directed edges; consecutive edges must chain head to tail.
using EdgePath = std::vector<std::array<int, 2>>;

EdgePath edge_path_from_vertices(const std::vector<int>& vertices);

/// Ordered product of transports along the path (first edge leftmost).
numkit::Matrix holonomy(const LatticeConnection& conn, const EdgePath& path);

/// Monodromy representation of a flat connection on the edge-path
/// presentation of the surface 1-skeleton.  Throws NotFlat.
betti::Representation monodromy_rep(const LatticeConnection& conn, int basepoint = 0,
                                    double tol = 1e-9);

} // namespace nonabcoh::lattice
