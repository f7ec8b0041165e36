#pragma once

#include <memory>
#include <vector>

#include "nonabcoh/topo/skeleton.hpp"

namespace nonabcoh::cech {

/// Abstract good cover, encoded purely combinatorially by its nerve: a
/// finite simplicial complex on the index set 0..n-1, closed under taking
/// faces.  Whether the cover really is good (all intersections
/// contractible) is the caller's declaration and is never verified here.
class CoverNerve {
public:
    CoverNerve() : n_(0), declared_good_(false) {}

    /// Builds the downward closure of the given maximal simplices.
    static CoverNerve from_maximal(int n, const std::vector<std::vector<int>>& maximal,
                                   bool declared_good_cover = true);

    int vertex_count() const { return n_; }
    bool declared_good_cover() const { return declared_good_; }

    /// Largest p with a p-simplex.
    int dimension() const { return static_cast<int>(simplices_.size()) - 1; }

    /// Sorted (p+1)-tuples in lexicographic order; empty beyond the dimension.
    const std::vector<std::vector<int>>& simplices(int degree) const;
    int simplex_count(int degree) const {
        return static_cast<int>(simplices(degree).size());
    }
    /// Position of a sorted tuple among the p-simplices; -1 when absent.
    int simplex_index(int degree, const std::vector<int>& sorted_tuple) const;

    bool connected_1skeleton() const { return skeleton().connected(); }

    /// The 1- and 2-simplices as a Skeleton2 (shared with the path and
    /// monodromy machinery).
    const topo::Skeleton2& skeleton() const;

    // Stock complexes used throughout the tests and examples.
    static CoverNerve hollow_triangle();  // circle
    static CoverNerve filled_triangle();  // disk
    static CoverNerve tetrahedron_boundary(); // sphere
    static CoverNerve torus_minimal();    // 7-vertex torus
    static CoverNerve projective_plane_minimal(); // 6-vertex RP^2
    static CoverNerve genus2_surface();   // 11-vertex genus-2 surface

private:
    int n_;
    bool declared_good_;
    std::vector<std::vector<std::vector<int>>> simplices_; // by degree
    mutable std::shared_ptr<topo::Skeleton2> skeleton_;
};

} // namespace nonabcoh::cech
