#include "nonabcoh/lattice/connection.hpp"

#include <cmath>

#include "nonabcoh/error.hpp"

namespace nonabcoh::lattice {

using numkit::Matrix;
using numkit::Mode;
using numkit::Scalar;

LatticeConnection::LatticeConnection(std::shared_ptr<const TriangulatedSurface> surface,
                                     int rank, std::vector<Matrix> transport_by_edge)
    : surface_(std::move(surface)), rank_(rank), transport_(std::move(transport_by_edge)) {
    if (rank_ < 1) raise("BadDimension", "connection rank must be positive");
    if (static_cast<int>(transport_.size()) != surface_->edge_count())
        raise("MissingEdge", "one transport matrix per edge is required");
    for (const Matrix& m : transport_) {
        if (m.rows() != rank_ || m.cols() != rank_)
            raise("BadDimension", "transport shape does not match the rank");
        if (!transport_.empty() && m.mode() != transport_.front().mode())
            raise("ModeMismatch", "transport matrices must share one mode");
        if (!m.is_invertible(1e-12)) raise("SingularMatrix", "transport must be invertible");
    }
}

LatticeConnection LatticeConnection::trivial(std::shared_ptr<const TriangulatedSurface> surface,
                                             int rank, Mode mode) {
    int ne = surface->edge_count();
    std::vector<Matrix> t(static_cast<size_t>(ne), Matrix::identity(rank, mode));
    return LatticeConnection(std::move(surface), rank, std::move(t));
}

LatticeConnection LatticeConnection::from_one_form(const DiscreteForm& a) {
    if (a.degree() != 1) raise("BadDimension", "rank-1 transport needs a 1-form");
    std::vector<Matrix> t;
    t.reserve(static_cast<size_t>(a.size()));
    for (int e = 0; e < a.size(); ++e) {
        std::complex<double> value = std::exp(-a.at(e).to_complex());
        t.push_back(Matrix::from_float(1, 1, {value}));
    }
    return LatticeConnection(a.surface_ptr(), 1, std::move(t));
}

Mode LatticeConnection::mode() const {
    return transport_.empty() ? Mode::exact : transport_.front().mode();
}

Matrix LatticeConnection::transport(int u, int v) const {
    int e = surface_->skeleton().edge_index(u, v);
    if (e < 0) raise("MissingEdge", "not an edge of the surface");
    const Matrix& m = transport_[static_cast<size_t>(e)];
    return u < v ? m : m.inverse();
}

void LatticeConnection::set_stored(int edge_index, Matrix m) {
    if (edge_index < 0 || edge_index >= static_cast<int>(transport_.size()))
        raise("IndexOutOfRange", "edge index out of range");
    transport_[static_cast<size_t>(edge_index)] = std::move(m);
}

std::vector<Matrix> curvature(const LatticeConnection& conn) {
    const TriangulatedSurface& s = conn.surface();
    std::vector<Matrix> out;
    out.reserve(static_cast<size_t>(s.face_count()));
    for (int f = 0; f < s.face_count(); ++f) {
        auto b = s.face_boundary(f);
        out.push_back(conn.transport(b[0], b[1]) * conn.transport(b[1], b[2]) *
                      conn.transport(b[2], b[3]));
    }
    return out;
}

bool is_flat(const LatticeConnection& conn, double tol) {
    for (const Matrix& f : curvature(conn)) {
        if (conn.mode() == Mode::exact) {
            if (!f.is_identity()) return false;
        } else if (!f.approx_identity(tol)) {
            return false;
        }
    }
    return true;
}

LatticeConnection gauge_act(const std::vector<Matrix>& gauge, const LatticeConnection& conn) {
    const TriangulatedSurface& s = conn.surface();
    if (static_cast<int>(gauge.size()) != s.vertex_count())
        raise("BadDimension", "one gauge matrix per vertex is required");
    for (const Matrix& g : gauge)
        if (!g.is_invertible(1e-12)) raise("SingularMatrix", "gauge values must be invertible");
    LatticeConnection out = conn;
    const auto& edges = s.skeleton().edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        int u = edges[e][0], v = edges[e][1];
        out.set_stored(static_cast<int>(e),
                       gauge[static_cast<size_t>(u)].inverse() * conn.stored(static_cast<int>(e)) *
                           gauge[static_cast<size_t>(v)]);
    }
    return out;
}

EdgePath edge_path_from_vertices(const std::vector<int>& vertices) {
    EdgePath path;
    for (size_t k = 0; k + 1 < vertices.size(); ++k)
        path.push_back({vertices[k], vertices[k + 1]});
    return path;
}

Matrix holonomy(const LatticeConnection& conn, const EdgePath& path) {
    Matrix acc = Matrix::identity(conn.rank(), conn.mode());
    for (size_t k = 0; k < path.size(); ++k) {
        if (k > 0 && path[k - 1][1] != path[k][0])
            raise("BrokenPath", "path edges are not consecutive");
        acc = acc * conn.transport(path[k][0], path[k][1]);
    }
    return acc;
}

betti::Representation monodromy_rep(const LatticeConnection& conn, int basepoint, double tol) {
    if (!is_flat(conn, tol)) raise("NotFlat", "monodromy needs a flat connection");
    localsys::Pi1Presentation p = localsys::pi1_presentation(conn.surface().skeleton(), basepoint);
    std::vector<Matrix> images;
    images.reserve(p.generator_edges.size());
    for (size_t g = 0; g < p.generator_edges.size(); ++g) {
        betti::Word gen = betti::Word::generator(static_cast<int>(g) + 1);
        images.push_back(holonomy(conn, edge_path_from_vertices(p.loop_for_word(gen))));
    }
    betti::Representation rep(p.group, conn.rank(), std::move(images));
    if (!betti::check_relations(rep, tol))
        raise("NotFlat", "holonomy violates a presentation relator");
    return rep;
}

} // namespace nonabcoh::lattice
