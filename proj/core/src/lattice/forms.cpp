#include "nonabcoh/lattice/forms.hpp"

#include "nonabcoh/error.hpp"

namespace nonabcoh::lattice {

using numkit::Mode;
using numkit::Scalar;

namespace {

int slot_count(const TriangulatedSurface& s, int degree) {
    switch (degree) {
        case 0: return s.vertex_count();
        case 1: return s.edge_count();
        case 2: return s.face_count();
        default: raise("DegreeTooHigh", "discrete forms have degree 0, 1 or 2");
    }
}

} // namespace

DiscreteForm::DiscreteForm(std::shared_ptr<const TriangulatedSurface> surface, int degree,
                           std::vector<Scalar> values)
    : surface_(std::move(surface)), degree_(degree), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != slot_count(*surface_, degree_))
        raise("BadDimension", "form value count does not match the surface");
    for (const Scalar& v : values_)
        if (!values_.empty() && v.mode() != values_.front().mode())
            raise("ModeMismatch", "form values must share one mode");
}

DiscreteForm DiscreteForm::zero(std::shared_ptr<const TriangulatedSurface> surface, int degree,
                                Mode mode) {
    int n = slot_count(*surface, degree);
    std::vector<Scalar> vals(static_cast<size_t>(n), Scalar::zero(mode));
    return DiscreteForm(std::move(surface), degree, std::move(vals));
}

Mode DiscreteForm::mode() const {
    return values_.empty() ? Mode::exact : values_.front().mode();
}

Scalar DiscreteForm::on_edge(int u, int v) const {
    if (degree_ != 1) raise("BadDimension", "on_edge needs a 1-form");
    int e = surface_->skeleton().edge_index(u, v);
    if (e < 0) raise("MissingEdge", "not an edge of the surface");
    const Scalar& val = values_[static_cast<size_t>(e)];
    return u < v ? val : -val;
}

bool DiscreteForm::is_zero() const {
    for (const Scalar& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

bool DiscreteForm::approx_zero(double tol) const {
    for (const Scalar& v : values_)
        if (!v.approx_zero(tol)) return false;
    return true;
}

DiscreteForm d(const DiscreteForm& form) {
    const TriangulatedSurface& s = form.surface();
    if (form.degree() >= 2) raise("DegreeTooHigh", "d of a 2-form on a surface");
    DiscreteForm out = DiscreteForm::zero(form.surface_ptr(), form.degree() + 1, form.mode());
    if (form.degree() == 0) {
        const auto& edges = s.skeleton().edges();
        for (size_t e = 0; e < edges.size(); ++e)
            out.set(static_cast<int>(e), form.at(edges[e][1]) - form.at(edges[e][0]));
    } else {
        for (int f = 0; f < s.face_count(); ++f) {
            auto b = s.face_boundary(f);
            numkit::Scalar acc = form.on_edge(b[0], b[1]);
            acc += form.on_edge(b[1], b[2]);
            acc += form.on_edge(b[2], b[3]);
            out.set(f, acc);
        }
    }
    return out;
}

} // namespace nonabcoh::lattice
