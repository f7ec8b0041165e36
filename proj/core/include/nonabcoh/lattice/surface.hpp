#pragma once

#include <array>
#include <memory>
#include <vector>

#include "nonabcoh/cech/nerve.hpp"
#include "nonabcoh/topo/skeleton.hpp"

namespace nonabcoh::lattice {

/// A triangulated surface: ordered vertex triples carry the orientation.
/// On a closed surface the triangles must orient coherently (each edge
/// inherits opposite directions from its two faces); surfaces with
/// boundary are loadable but flagged.
class TriangulatedSurface {
public:
    TriangulatedSurface(int vertex_count, std::vector<std::array<int, 3>> oriented_triangles);

    /// Coherently oriented surface built from the 2-simplices of a nerve.
    static TriangulatedSurface from_nerve(const cech::CoverNerve& nerve);

    int vertex_count() const { return skeleton_.vertex_count(); }
    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
    const topo::Skeleton2& skeleton() const { return skeleton_; }
    int edge_count() const { return static_cast<int>(skeleton_.edges().size()); }
    int face_count() const { return static_cast<int>(triangles_.size()); }

    bool has_boundary() const { return has_boundary_; }
    bool closed_oriented() const { return closed_oriented_; }
    int euler_characteristic() const;
    /// Genus of a closed orientable surface; throws otherwise.
    int genus() const;

    /// Face boundary starting at the smallest vertex of the triangle,
    /// following the stored orientation: four vertices v0 v1 v2 v0.
    std::array<int, 4> face_boundary(int face) const;

private:
    std::vector<std::array<int, 3>> triangles_;
    topo::Skeleton2 skeleton_;
    bool has_boundary_ = false;
    bool closed_oriented_ = false;
};

} // namespace nonabcoh::lattice
