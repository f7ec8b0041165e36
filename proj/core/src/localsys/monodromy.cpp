#include "nonabcoh/localsys/monodromy.hpp"

#include <algorithm>

#include "nonabcoh/error.hpp"

namespace nonabcoh::localsys {

using numkit::Matrix;

Matrix transport(const GCocycle& c, const std::vector<int>& path) {
    Matrix acc = Matrix::identity(c.rank(), c.mode());
    for (size_t k = 0; k + 1 < path.size(); ++k) acc = acc * c.transition(path[k], path[k + 1]);
    return acc;
}

betti::Representation monodromy(const GCocycle& c, const Pi1Presentation& p, double tol) {
    if (!validate_cocycle(c, tol)) raise("InvalidCocycle", "cocycle condition fails");
    std::vector<Matrix> images;
    images.reserve(p.generator_edges.size());
    for (size_t g = 0; g < p.generator_edges.size(); ++g) {
        betti::Word gen = betti::Word::generator(static_cast<int>(g) + 1);
        images.push_back(transport(c, p.loop_for_word(gen)));
    }
    betti::Representation rep(p.group, c.rank(), std::move(images));
    if (!betti::check_relations(rep, tol))
        raise("InvalidCocycle", "monodromy violates a presentation relator");
    return rep;
}

GCocycle rep_to_cocycle(const betti::Representation& rep,
                        std::shared_ptr<const cech::CoverNerve> nerve,
                        const Pi1Presentation& p) {
    if (!(rep.group() == p.group))
        raise("PresentationMismatch", "representation group differs from the presentation");
    const auto& edges = nerve->skeleton().edges();
    if (edges.size() != p.skeleton.edges().size() ||
        nerve->vertex_count() != p.skeleton.vertex_count())
        raise("PresentationMismatch", "presentation was built over a different nerve");
    std::vector<Matrix> transitions(edges.size(), Matrix::identity(rep.rank(), rep.mode()));
    for (size_t g = 0; g < p.generator_edges.size(); ++g) {
        int e = nerve->skeleton().edge_index(p.generator_edges[g][0], p.generator_edges[g][1]);
        if (e < 0) raise("PresentationMismatch", "generator edge missing from the nerve");
        transitions[static_cast<size_t>(e)] = rep.image(static_cast<int>(g) + 1);
    }
    return GCocycle(std::move(nerve), rep.rank(), std::move(transitions));
}

} // namespace nonabcoh::localsys
