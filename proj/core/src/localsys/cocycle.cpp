#include "nonabcoh/localsys/cocycle.hpp"

#include "nonabcoh/error.hpp"

namespace nonabcoh::localsys {

using numkit::Matrix;
using numkit::Mode;

GCocycle::GCocycle(std::shared_ptr<const cech::CoverNerve> nerve, int rank,
                   std::vector<Matrix> transitions_by_edge)
    : nerve_(std::move(nerve)), rank_(rank), transitions_(std::move(transitions_by_edge)) {
    if (rank_ < 1) raise("BadDimension", "cocycle rank must be positive");
    if (static_cast<int>(transitions_.size()) != nerve_->simplex_count(1))
        raise("MissingEdge", "one transition per nerve edge is required");
    for (const Matrix& m : transitions_) {
        if (m.rows() != rank_ || m.cols() != rank_)
            raise("BadDimension", "transition shape does not match the rank");
        if (!transitions_.empty() && m.mode() != transitions_.front().mode())
            raise("ModeMismatch", "transitions must share one mode");
        if (!m.is_invertible(1e-12))
            raise("SingularMatrix", "transitions must be invertible");
    }
}

GCocycle GCocycle::trivial(std::shared_ptr<const cech::CoverNerve> nerve, int rank, Mode mode) {
    int ne = nerve->simplex_count(1);
    std::vector<Matrix> t(static_cast<size_t>(ne), Matrix::identity(rank, mode));
    return GCocycle(std::move(nerve), rank, std::move(t));
}

Mode GCocycle::mode() const {
    return transitions_.empty() ? Mode::exact : transitions_.front().mode();
}

Matrix GCocycle::transition(int u, int v) const {
    int e = nerve_->skeleton().edge_index(u, v);
    if (e < 0) raise("MissingEdge", "overlap is not an edge of the nerve");
    const Matrix& m = transitions_[static_cast<size_t>(e)];
    return u < v ? m : m.inverse();
}

void GCocycle::set_stored(int edge_index, Matrix m) {
    if (edge_index < 0 || edge_index >= static_cast<int>(transitions_.size()))
        raise("IndexOutOfRange", "edge index out of range");
    if (m.rows() != rank_ || m.cols() != rank_)
        raise("BadDimension", "transition shape does not match the rank");
    transitions_[static_cast<size_t>(edge_index)] = std::move(m);
}

GaugeCochain::GaugeCochain(std::shared_ptr<const cech::CoverNerve> nerve, int rank,
                           std::vector<Matrix> values)
    : nerve_(std::move(nerve)), rank_(rank), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != nerve_->vertex_count())
        raise("BadDimension", "one gauge value per cover index is required");
    for (const Matrix& m : values_) {
        if (m.rows() != rank_ || m.cols() != rank_)
            raise("BadDimension", "gauge shape does not match the rank");
        if (!m.is_invertible(1e-12)) raise("SingularMatrix", "gauge values must be invertible");
    }
}

GaugeCochain GaugeCochain::identity(std::shared_ptr<const cech::CoverNerve> nerve, int rank,
                                    Mode mode) {
    int n = nerve->vertex_count();
    std::vector<Matrix> vals(static_cast<size_t>(n), Matrix::identity(rank, mode));
    return GaugeCochain(std::move(nerve), rank, std::move(vals));
}

const Matrix& GaugeCochain::at(int vertex) const {
    if (vertex < 0 || vertex >= nerve_->vertex_count())
        raise("IndexOutOfRange", "gauge vertex out of range");
    return values_[static_cast<size_t>(vertex)];
}

bool validate_cocycle(const GCocycle& c, double tol) {
    for (const auto& tri : c.nerve().simplices(2)) {
        Matrix prod = c.transition(tri[0], tri[1]) * c.transition(tri[1], tri[2]) *
                      c.transition(tri[2], tri[0]);
        if (c.mode() == Mode::exact) {
            if (!prod.is_identity()) return false;
        } else if (!prod.approx_identity(tol)) {
            return false;
        }
    }
    return true;
}

GCocycle gauge_act(const GaugeCochain& g, const GCocycle& c) {
    if (&g.nerve() != &c.nerve()) raise("BadDimension", "gauge and cocycle nerves differ");
    if (g.rank() != c.rank()) raise("BadDimension", "gauge and cocycle ranks differ");
    GCocycle out = c;
    const auto& edges = c.nerve().skeleton().edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        int u = edges[e][0], v = edges[e][1];
        out.set_stored(static_cast<int>(e), g.at(u) * c.stored(static_cast<int>(e)) * g.at(v).inverse());
    }
    return out;
}

} // namespace nonabcoh::localsys
