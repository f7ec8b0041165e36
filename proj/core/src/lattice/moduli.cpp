#include "nonabcoh/lattice/moduli.hpp"

#include "nonabcoh/error.hpp"

namespace nonabcoh::lattice {

std::vector<numkit::Scalar> abelian_moduli(const LatticeConnection& conn, double tol) {
    if (conn.rank() != 1) raise("RankNotOne", "abelian moduli need a rank-1 connection");
    if (!is_flat(conn, tol)) raise("NotFlat", "abelian moduli need a flat connection");
    const topo::Skeleton2& skel = conn.surface().skeleton();
    topo::SpanningTree tree = topo::spanning_tree(skel, 0);
    topo::HomologyBasis basis = topo::homology_basis(skel, tree);
    std::vector<numkit::Scalar> point;
    point.reserve(basis.basis_loops.size());
    for (const auto& word : basis.basis_loops) {
        std::vector<int> loop = topo::loop_vertices(skel, tree, word);
        point.push_back(holonomy(conn, edge_path_from_vertices(loop)).at(0, 0));
    }
    return point;
}

} // namespace nonabcoh::lattice
