#include "nonabcoh/topo/skeleton.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "nonabcoh/error.hpp"
#include "nonabcoh/numkit/int_matrix.hpp"

namespace nonabcoh::topo {

using numkit::IntMatrix;
using numkit::SmithNormalForm;

Skeleton2::Skeleton2(int n, std::vector<std::array<int, 2>> edges,
                     std::vector<std::array<int, 3>> triangles)
    : n_(n), edges_(std::move(edges)), triangles_(std::move(triangles)) {
    for (auto& e : edges_) {
        if (e[0] > e[1]) std::swap(e[0], e[1]);
        if (e[0] < 0 || e[1] >= n_ || e[0] == e[1])
            raise("BadSimplex", "edge out of range or degenerate");
    }
    for (auto& tri : triangles_) {
        std::sort(tri.begin(), tri.end());
        if (tri[0] < 0 || tri[2] >= n_ || tri[0] == tri[1] || tri[1] == tri[2])
            raise("BadSimplex", "triangle out of range or degenerate");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    std::sort(triangles_.begin(), triangles_.end());
    triangles_.erase(std::unique(triangles_.begin(), triangles_.end()), triangles_.end());
    for (const auto& tri : triangles_)
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (edge_index(tri[static_cast<size_t>(a)], tri[static_cast<size_t>(b)]) < 0)
                    raise("BadSimplex", "triangle face missing from edge list");
    adj_.assign(static_cast<size_t>(n_), {});
    for (const auto& e : edges_) {
        adj_[static_cast<size_t>(e[0])].push_back(e[1]);
        adj_[static_cast<size_t>(e[1])].push_back(e[0]);
    }
}

int Skeleton2::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    std::array<int, 2> key{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return -1;
    return static_cast<int>(it - edges_.begin());
}

bool Skeleton2::connected() const {
    if (n_ == 0) return true;
    std::vector<bool> seen(static_cast<size_t>(n_), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : neighbors(v))
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                ++count;
                q.push(w);
            }
    }
    return count == n_;
}

SpanningTree spanning_tree(const Skeleton2& s, int basepoint) {
    int n = s.vertex_count();
    if (basepoint < 0 || basepoint >= n) raise("IndexOutOfRange", "basepoint out of range");
    SpanningTree t;
    t.basepoint = basepoint;
    t.parent.assign(static_cast<size_t>(n), -2);
    t.edge_in_tree.assign(s.edges().size(), false);
    std::queue<int> q;
    q.push(basepoint);
    t.parent[static_cast<size_t>(basepoint)] = -1;
    int seen = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : s.neighbors(v)) {
            if (t.parent[static_cast<size_t>(w)] != -2) continue;
            t.parent[static_cast<size_t>(w)] = v;
            t.edge_in_tree[static_cast<size_t>(s.edge_index(v, w))] = true;
            ++seen;
            q.push(w);
        }
    }
    if (seen != n) raise("Disconnected", "1-skeleton is not connected");
    t.generator_of_edge.assign(s.edges().size(), -1);
    for (size_t e = 0; e < s.edges().size(); ++e)
        if (!t.edge_in_tree[e]) {
            t.generator_of_edge[e] = static_cast<int>(t.edge_of_generator.size());
            t.edge_of_generator.push_back(static_cast<int>(e));
        }
    return t;
}

std::vector<int> tree_path(const SpanningTree& t, int v) {
    std::vector<int> path;
    for (int x = v; x != -1; x = t.parent[static_cast<size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<Letter> letter_for_step(const Skeleton2& s, const SpanningTree& t, int u, int v) {
    int e = s.edge_index(u, v);
    if (e < 0) raise("BrokenPath", "step is not an edge of the skeleton");
    int g = t.generator_of_edge[static_cast<size_t>(e)];
    if (g < 0) return std::nullopt;
    return Letter{g, u < v ? +1 : -1};
}

std::vector<LetterWord> triangle_relators(const Skeleton2& s, const SpanningTree& t) {
    std::vector<LetterWord> relators;
    relators.reserve(s.triangles().size());
    for (const auto& tri : s.triangles()) {
        LetterWord w;
        const int path[4] = {tri[0], tri[1], tri[2], tri[0]};
        for (int k = 0; k < 3; ++k)
            if (auto letter = letter_for_step(s, t, path[k], path[k + 1])) w.push_back(*letter);
        relators.push_back(std::move(w));
    }
    return relators;
}

std::vector<int> loop_vertices(const Skeleton2& s, const SpanningTree& t, const LetterWord& word) {
    std::vector<int> path{t.basepoint};
    auto append = [&path](const std::vector<int>& seg) {
        for (size_t k = 1; k < seg.size(); ++k) path.push_back(seg[k]);
    };
    for (const auto& [gen, sign] : word) {
        const auto& e = s.edges()[static_cast<size_t>(t.edge_of_generator[static_cast<size_t>(gen)])];
        int from = sign > 0 ? e[0] : e[1];
        int to = sign > 0 ? e[1] : e[0];
        // back to the basepoint, out to `from`, across the edge
        std::vector<int> here = tree_path(t, path.back());
        std::reverse(here.begin(), here.end());
        append(here);
        append(tree_path(t, from));
        path.push_back(to);
    }
    std::vector<int> back = tree_path(t, path.back());
    std::reverse(back.begin(), back.end());
    append(back);
    return path;
}

IntMatrix abelianized_relators(const std::vector<LetterWord>& relators, int generators) {
    IntMatrix m(static_cast<int>(relators.size()), generators);
    for (size_t r = 0; r < relators.size(); ++r)
        for (const auto& [gen, sign] : relators[r]) m.at(static_cast<int>(r), gen) += sign;
    return m;
}

HomologyBasis homology_basis(const Skeleton2& s, const SpanningTree& t) {
    std::vector<LetterWord> relators = triangle_relators(s, t);
    int m = t.generator_count();
    IntMatrix rel = abelianized_relators(relators, m);

    // H1 = Z^m / column space of rel^T.  With L * rel^T * R diagonal,
    // the columns of L^-1 split Z^m into torsion and free directions.
    IntMatrix relT = rel.transpose();
    SmithNormalForm snf = numkit::smith_normal_form(relT);
    IntMatrix linv = numkit::invert_unimodular(snf.left);
    int k = numkit::rank(snf);

    HomologyBasis h;
    h.free_rank = m - k;
    for (int i = 0; i < k; ++i)
        if (snf.diagonal[static_cast<size_t>(i)] > 1)
            h.torsion.push_back(snf.diagonal[static_cast<size_t>(i)]);

    for (int j = k; j < m; ++j) {
        std::vector<mpz_class> v(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] = linv.at(i, j);
        h.basis_vectors.push_back(std::move(v));
    }
    std::vector<int> torsion_rows;
    for (int i = 0; i < k; ++i)
        if (snf.diagonal[static_cast<size_t>(i)] > 1) torsion_rows.push_back(i);
    for (int g = 0; g < m; ++g) {
        std::vector<mpz_class> coords(static_cast<size_t>(h.free_rank));
        for (int j = 0; j < h.free_rank; ++j) coords[static_cast<size_t>(j)] = snf.left.at(k + j, g);
        h.generator_coordinates.push_back(std::move(coords));
        std::vector<mpz_class> tcoords;
        tcoords.reserve(torsion_rows.size());
        for (int row : torsion_rows) tcoords.push_back(snf.left.at(row, g));
        h.generator_torsion_coordinates.push_back(std::move(tcoords));
    }
    for (const auto& v : h.basis_vectors) {
        LetterWord loop;
        for (int g = 0; g < m; ++g) {
            const mpz_class& exponent = v[static_cast<size_t>(g)];
            long reps = std::abs(exponent.get_si());
            int sign = exponent >= 0 ? +1 : -1;
            for (long r = 0; r < reps; ++r) loop.emplace_back(g, sign);
        }
        h.basis_loops.push_back(std::move(loop));
    }
    return h;
}

std::vector<mpz_class> class_coordinates(const HomologyBasis& h, const LetterWord& word) {
    std::vector<mpz_class> coords(static_cast<size_t>(h.free_rank));
    for (const auto& [gen, sign] : word)
        for (int j = 0; j < h.free_rank; ++j)
            coords[static_cast<size_t>(j)] +=
                sign * h.generator_coordinates[static_cast<size_t>(gen)][static_cast<size_t>(j)];
    return coords;
}

std::vector<std::array<int, 3>> coherent_orientation(const Skeleton2& s) {
    size_t ne = s.edges().size();
    std::vector<std::vector<int>> faces_of_edge(ne);
    for (size_t f = 0; f < s.triangles().size(); ++f) {
        const auto& tri = s.triangles()[f];
        faces_of_edge[static_cast<size_t>(s.edge_index(tri[0], tri[1]))].push_back(static_cast<int>(f));
        faces_of_edge[static_cast<size_t>(s.edge_index(tri[1], tri[2]))].push_back(static_cast<int>(f));
        faces_of_edge[static_cast<size_t>(s.edge_index(tri[0], tri[2]))].push_back(static_cast<int>(f));
    }
    for (const auto& faces : faces_of_edge)
        if (faces.size() != 2)
            raise("NotClosedSurface", "an edge does not lie on exactly two triangles");

    // sign of the induced orientation of sorted edge {u<v} in face f when f
    // is traversed with orientation flip[f] applied to its sorted order.
    auto induced_sign = [&](const std::array<int, 3>& tri, int u, int v, bool flipped) {
        // sorted order a<b<c traversed a->b->c->a gives edges (a,b),(b,c),(c,a)
        int sign;
        if (u == tri[0] && v == tri[1]) sign = +1;
        else if (u == tri[1] && v == tri[2]) sign = +1;
        else sign = -1; // (c,a) traversal means sorted {a,c} appears reversed
        return flipped ? -sign : sign;
    };

    std::vector<int> flip(s.triangles().size(), -1); // -1 unvisited, 0 keep, 1 reverse
    for (size_t start = 0; start < s.triangles().size(); ++start) {
        if (flip[start] != -1) continue;
        flip[start] = 0;
        std::queue<int> q;
        q.push(static_cast<int>(start));
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            const auto& tri = s.triangles()[static_cast<size_t>(f)];
            const std::array<std::array<int, 2>, 3> sides = {{{tri[0], tri[1]},
                                                              {tri[1], tri[2]},
                                                              {tri[0], tri[2]}}};
            for (const auto& side : sides) {
                int e = s.edge_index(side[0], side[1]);
                for (int g : faces_of_edge[static_cast<size_t>(e)]) {
                    if (g == f) continue;
                    const auto& otri = s.triangles()[static_cast<size_t>(g)];
                    int mine = induced_sign(tri, side[0], side[1], flip[static_cast<size_t>(f)] == 1);
                    int theirs = induced_sign(otri, side[0], side[1], false);
                    int needed = mine == theirs ? 1 : 0;
                    if (flip[static_cast<size_t>(g)] == -1) {
                        flip[static_cast<size_t>(g)] = needed;
                        q.push(g);
                    } else if (flip[static_cast<size_t>(g)] != needed) {
                        raise("NotOrientable", "surface admits no coherent orientation");
                    }
                }
            }
        }
    }
    std::vector<std::array<int, 3>> oriented;
    oriented.reserve(s.triangles().size());
    for (size_t f = 0; f < s.triangles().size(); ++f) {
        auto tri = s.triangles()[f];
        if (flip[f] == 1) std::swap(tri[1], tri[2]);
        oriented.push_back(tri);
    }
    return oriented;
}

} // namespace nonabcoh::topo
