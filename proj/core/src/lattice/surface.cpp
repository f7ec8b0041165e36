#include "nonabcoh/lattice/surface.hpp"

#include <algorithm>
#include <map>

#include "nonabcoh/error.hpp"

namespace nonabcoh::lattice {

TriangulatedSurface::TriangulatedSurface(int vertex_count,
                                         std::vector<std::array<int, 3>> oriented_triangles)
    : triangles_(std::move(oriented_triangles)) {
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> sorted_tris;
    for (const auto& t : triangles_) {
        std::array<int, 3> s = t;
        std::sort(s.begin(), s.end());
        sorted_tris.push_back(s);
        edges.push_back({s[0], s[1]});
        edges.push_back({s[1], s[2]});
        edges.push_back({s[0], s[2]});
    }
    skeleton_ = topo::Skeleton2(vertex_count, std::move(edges), std::move(sorted_tris));
    if (skeleton_.triangles().size() != triangles_.size())
        raise("BadSimplex", "duplicate triangles in the surface");

    // Edge -> net orientation count; a closed oriented surface has every
    // edge traversed once in each direction.
    std::map<std::array<int, 2>, int> directed;
    for (const auto& t : triangles_) {
        const std::array<std::array<int, 2>, 3> sides = {{{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}}};
        for (const auto& s : sides) directed[{s[0], s[1]}] += 1;
    }
    std::map<std::array<int, 2>, int> incidence;
    bool coherent = true;
    for (const auto& [dir_edge, count] : directed) {
        if (count > 1) coherent = false;
        std::array<int, 2> key{std::min(dir_edge[0], dir_edge[1]),
                               std::max(dir_edge[0], dir_edge[1])};
        incidence[key] += count;
    }
    for (const auto& e : skeleton_.edges()) {
        int c = incidence[{e[0], e[1]}];
        if (c == 1) has_boundary_ = true;
        else if (c != 2) raise("BadSimplex", "edge lies on more than two triangles");
    }
    if (!has_boundary_) {
        for (const auto& [dir_edge, count] : directed) {
            std::array<int, 2> rev{dir_edge[1], dir_edge[0]};
            if (count != 1 || directed.find(rev) == directed.end() || directed.at(rev) != 1)
                coherent = false;
        }
        closed_oriented_ = coherent;
        if (!coherent)
            raise("NotOrientable", "closed surface triangles are not coherently oriented");
    }
}

TriangulatedSurface TriangulatedSurface::from_nerve(const cech::CoverNerve& nerve) {
    auto oriented = topo::coherent_orientation(nerve.skeleton());
    return TriangulatedSurface(nerve.vertex_count(), std::move(oriented));
}

int TriangulatedSurface::euler_characteristic() const {
    return vertex_count() - edge_count() + face_count();
}

int TriangulatedSurface::genus() const {
    if (!closed_oriented_) raise("NotClosedSurface", "genus needs a closed oriented surface");
    int chi = euler_characteristic();
    if ((2 - chi) % 2 != 0) raise("NotClosedSurface", "odd Euler characteristic");
    return (2 - chi) / 2;
}

std::array<int, 4> TriangulatedSurface::face_boundary(int face) const {
    if (face < 0 || face >= face_count()) raise("IndexOutOfRange", "face index out of range");
    std::array<int, 3> t = triangles_[static_cast<size_t>(face)];
    int start = 0;
    for (int k = 1; k < 3; ++k)
        if (t[static_cast<size_t>(k)] < t[static_cast<size_t>(start)]) start = k;
    return {t[static_cast<size_t>(start)], t[static_cast<size_t>((start + 1) % 3)],
            t[static_cast<size_t>((start + 2) % 3)], t[static_cast<size_t>(start)]};
}

} // namespace nonabcoh::lattice
