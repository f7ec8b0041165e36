#pragma once

#include <array>
#include <vector>

#include "nonabcoh/betti/group.hpp"
#include "nonabcoh/topo/skeleton.hpp"

namespace nonabcoh::localsys {

/// Edge-path presentation of the fundamental group of a 2-complex:
/// generators are the non-tree edges of a BFS spanning tree, one relator
/// per 2-simplex.  Generator k (1-based) is the based loop through
/// directed edge generator_edges[k-1].
struct Pi1Presentation {
    topo::Skeleton2 skeleton;
    topo::SpanningTree tree;
    betti::FpGroup group;
    std::vector<std::array<int, 2>> generator_edges; // (u, v) with u < v
    int basepoint = 0;

    /// Vertex path of the based loop for a word in the generators.
    std::vector<int> loop_for_word(const betti::Word& w) const;
};

/// Throws Disconnected when the 1-skeleton is not connected.
Pi1Presentation pi1_presentation(const topo::Skeleton2& skeleton, int basepoint = 0);

betti::Word word_from_letters(const topo::LetterWord& letters);
topo::LetterWord letters_from_word(const betti::Word& w);

} // namespace nonabcoh::localsys
