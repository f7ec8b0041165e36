#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nonabcoh/numkit/int_matrix.hpp"

namespace nonabcoh::topo {

/// A letter of a word over edge-loop generators: (generator index, +1/-1).
using Letter = std::pair<int, int>;
using LetterWord = std::vector<Letter>;

/// The 2-skeleton of a finite simplicial complex: vertices 0..n-1, sorted
/// edges and sorted triangles, both in lexicographic order.
class Skeleton2 {
public:
    Skeleton2() : n_(0) {}
    Skeleton2(int n, std::vector<std::array<int, 2>> edges,
              std::vector<std::array<int, 3>> triangles);

    int vertex_count() const { return n_; }
    const std::vector<std::array<int, 2>>& edges() const { return edges_; }
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }

    /// Index of the sorted edge {u, v}; -1 when absent.
    int edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

    bool connected() const;

private:
    int n_;
    std::vector<std::array<int, 2>> edges_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<std::vector<int>> adj_;
};

/// BFS spanning tree rooted at the basepoint, plus the resulting edge-loop
/// generator labelling: one generator per non-tree edge, numbered in edge
/// order.  The generator of edge {u < v} stands for the based loop
/// basepoint -> u -> v -> basepoint through the tree.
struct SpanningTree {
    int basepoint = 0;
    std::vector<int> parent;          // parent vertex, -1 at the root
    std::vector<bool> edge_in_tree;   // by edge index
    std::vector<int> generator_of_edge; // by edge index, -1 for tree edges
    std::vector<int> edge_of_generator; // by generator index

    int generator_count() const { return static_cast<int>(edge_of_generator.size()); }
};

/// Throws Disconnected when the 1-skeleton is not connected.
SpanningTree spanning_tree(const Skeleton2& s, int basepoint);

/// Vertex path basepoint -> v through the tree.
std::vector<int> tree_path(const SpanningTree& t, int v);

/// One relator per triangle {i<j<k}: the letters of the boundary loop
/// i->j->k->i, tree edges skipped.  Trivial (empty) relators are kept so
/// that relator indices match triangle indices.
std::vector<LetterWord> triangle_relators(const Skeleton2& s, const SpanningTree& t);

/// The letter for traversing edge {u,v} in the direction u -> v
/// (nullopt for tree edges).
std::optional<Letter> letter_for_step(const Skeleton2& s, const SpanningTree& t, int u, int v);

/// Expands a word over generators into the vertex path of the
/// corresponding based loop.
std::vector<int> loop_vertices(const Skeleton2& s, const SpanningTree& t, const LetterWord& word);

/// relator x generator matrix of letter-sign sums.
numkit::IntMatrix abelianized_relators(const std::vector<LetterWord>& relators, int generators);

/// First homology of the presentation 2-complex, H1 = Z^m / (relator rows),
/// in a fixed basis.
struct HomologyBasis {
    int free_rank = 0;                       // 2g on a closed orientable surface
    std::vector<mpz_class> torsion;          // invariant factors > 1
    /// Free basis vectors written in the generator lattice Z^m.
    std::vector<std::vector<mpz_class>> basis_vectors;
    /// For each generator, its coordinates in the free basis (torsion dropped).
    std::vector<std::vector<mpz_class>> generator_coordinates;
    /// For each generator, its coordinate on each torsion factor (take it
    /// mod the factor).
    std::vector<std::vector<mpz_class>> generator_torsion_coordinates;
    /// Loop words realizing the basis vectors.
    std::vector<LetterWord> basis_loops;
};

HomologyBasis homology_basis(const Skeleton2& s, const SpanningTree& t);

/// Coordinates of an arbitrary word's homology class in the free basis.
std::vector<mpz_class> class_coordinates(const HomologyBasis& h, const LetterWord& word);

/// Coherent orientation of a closed surface: returns the triangles as
/// ordered triples such that each edge receives opposite orientations from
/// its two faces.  Throws NotClosedSurface / NotOrientable.
std::vector<std::array<int, 3>> coherent_orientation(const Skeleton2& s);

} // namespace nonabcoh::topo
