#include "nonabcoh/localsys/pi1.hpp"

namespace nonabcoh::localsys {

betti::Word word_from_letters(const topo::LetterWord& letters) {
    std::vector<betti::Word::Letter> out;
    out.reserve(letters.size());
    for (const auto& [gen, sign] : letters) out.emplace_back(gen + 1, sign);
    return betti::Word(std::move(out));
}

topo::LetterWord letters_from_word(const betti::Word& w) {
    topo::LetterWord out;
    out.reserve(w.letters().size());
    for (const auto& [gen, sign] : w.letters()) out.emplace_back(gen - 1, sign);
    return out;
}

std::vector<int> Pi1Presentation::loop_for_word(const betti::Word& w) const {
    return topo::loop_vertices(skeleton, tree, letters_from_word(w));
}

Pi1Presentation pi1_presentation(const topo::Skeleton2& skeleton, int basepoint) {
    Pi1Presentation p;
    p.skeleton = skeleton;
    p.basepoint = basepoint;
    p.tree = topo::spanning_tree(p.skeleton, basepoint);
    p.group.generators = p.tree.generator_count();
    for (const topo::LetterWord& relator : topo::triangle_relators(p.skeleton, p.tree))
        p.group.relators.push_back(word_from_letters(relator));
    for (int g = 0; g < p.tree.generator_count(); ++g) {
        const auto& e = p.skeleton.edges()[static_cast<size_t>(
            p.tree.edge_of_generator[static_cast<size_t>(g)])];
        p.generator_edges.push_back({e[0], e[1]});
    }
    return p;
}

} // namespace nonabcoh::localsys
