#include "nonabcoh/cech/nerve.hpp"

#include <algorithm>
#include <set>

#include "nonabcoh/error.hpp"

namespace nonabcoh::cech {

CoverNerve CoverNerve::from_maximal(int n, const std::vector<std::vector<int>>& maximal,
                                    bool declared_good_cover) {
    if (n <= 0) raise("BadSimplex", "nerve needs a positive index set");
    std::set<std::vector<int>> closure;
    // Breadth of a desk-scale nerve is small; enumerate all faces directly.
    for (const auto& simplex : maximal) {
        std::vector<int> sorted = simplex;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.empty()) raise("BadSimplex", "empty simplex");
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            raise("BadSimplex", "repeated vertex in a simplex");
        if (sorted.front() < 0 || sorted.back() >= n)
            raise("BadSimplex", "simplex vertex out of range");
        size_t m = sorted.size();
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<int> face;
            for (size_t b = 0; b < m; ++b)
                if (mask & (1u << b)) face.push_back(sorted[b]);
            closure.insert(std::move(face));
        }
    }
    for (int v = 0; v < n; ++v) closure.insert({v});

    CoverNerve nerve;
    nerve.n_ = n;
    nerve.declared_good_ = declared_good_cover;
    for (const auto& simplex : closure) {
        size_t degree = simplex.size() - 1;
        if (nerve.simplices_.size() <= degree) nerve.simplices_.resize(degree + 1);
        nerve.simplices_[degree].push_back(simplex);
    }
    for (auto& level : nerve.simplices_) std::sort(level.begin(), level.end());
    return nerve;
}

const std::vector<std::vector<int>>& CoverNerve::simplices(int degree) const {
    static const std::vector<std::vector<int>> empty;
    if (degree < 0 || degree >= static_cast<int>(simplices_.size())) return empty;
    return simplices_[static_cast<size_t>(degree)];
}

int CoverNerve::simplex_index(int degree, const std::vector<int>& sorted_tuple) const {
    const auto& level = simplices(degree);
    auto it = std::lower_bound(level.begin(), level.end(), sorted_tuple);
    if (it == level.end() || *it != sorted_tuple) return -1;
    return static_cast<int>(it - level.begin());
}

const topo::Skeleton2& CoverNerve::skeleton() const {
    if (!skeleton_) {
        std::vector<std::array<int, 2>> edges;
        for (const auto& e : simplices(1)) edges.push_back({e[0], e[1]});
        std::vector<std::array<int, 3>> tris;
        for (const auto& t : simplices(2)) tris.push_back({t[0], t[1], t[2]});
        skeleton_ = std::make_shared<topo::Skeleton2>(n_, std::move(edges), std::move(tris));
    }
    return *skeleton_;
}

CoverNerve CoverNerve::hollow_triangle() {
    return from_maximal(3, {{0, 1}, {1, 2}, {0, 2}});
}

CoverNerve CoverNerve::filled_triangle() {
    return from_maximal(3, {{0, 1, 2}});
}

CoverNerve CoverNerve::tetrahedron_boundary() {
    return from_maximal(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

CoverNerve CoverNerve::torus_minimal() {
    // 7-vertex triangulated torus: vertices Z/7 with triangles
    // {i, i+1, i+3} and {i, i+2, i+3}.
    std::vector<std::vector<int>> tris;
    for (int i = 0; i < 7; ++i) {
        tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return from_maximal(7, tris);
}

CoverNerve CoverNerve::projective_plane_minimal() {
    // Antipodal quotient of the icosahedron on 6 vertices.
    return from_maximal(6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                            {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
}

CoverNerve CoverNerve::genus2_surface() {
    // Connected sum of two copies of the 7-vertex torus: remove triangle
    // {0,1,3} from each copy and glue the copies along its boundary.
    // Copy A keeps labels 0..6; copy B relabels 0,1,3 to the shared
    // vertices and its other four vertices to 7..10.
    std::vector<std::vector<int>> tris;
    auto add_copy = [&tris](const std::array<int, 7>& relabel) {
        for (int i = 0; i < 7; ++i) {
            std::array<int, 3> t1{i, (i + 1) % 7, (i + 3) % 7};
            std::array<int, 3> t2{i, (i + 2) % 7, (i + 3) % 7};
            for (auto t : {t1, t2}) {
                std::vector<int> mapped{relabel[static_cast<size_t>(t[0])],
                                        relabel[static_cast<size_t>(t[1])],
                                        relabel[static_cast<size_t>(t[2])]};
                std::sort(mapped.begin(), mapped.end());
                if (mapped == std::vector<int>{relabel[0], relabel[1], relabel[3]}) continue;
                tris.push_back(mapped);
            }
        }
    };
    add_copy({0, 1, 2, 3, 4, 5, 6});
    add_copy({0, 1, 7, 3, 8, 9, 10});
    return from_maximal(11, tris);
}

} // namespace nonabcoh::cech
