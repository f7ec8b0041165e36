#pragma once

#include <utility>
#include <vector>

namespace nonabcoh::betti {

/// A word in the free group on generators 1..N: a list of letters
/// (generatorIndex, sign) with sign +1 or -1.  Generator indices are
/// 1-based to match the interchange format; 0 is never a generator.
class Word {
public:
    using Letter = std::pair<int, int>;

    Word() = default;
    explicit Word(std::vector<Letter> letters);

    static Word generator(int index, int sign = +1) { return Word({{index, sign}}); }
    static Word commutator(int a, int b) {
        return Word({{a, +1}, {b, +1}, {a, -1}, {b, -1}});
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    int length() const { return static_cast<int>(letters_.size()); }
    int max_generator() const;

    Word operator*(const Word& o) const; // concatenation
    Word inverse() const;
    Word prefix(int length) const;

    /// Cancels adjacent g g^-1 pairs until none remain.
    Word freely_reduced() const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }

private:
    std::vector<Letter> letters_;
};

/// Finitely presented group: N generators and a list of relator words.
struct FpGroup {
    int generators = 0;
    std::vector<Word> relators;

    bool operator==(const FpGroup& o) const {
        if (generators != o.generators || relators.size() != o.relators.size()) return false;
        for (size_t i = 0; i < relators.size(); ++i)
            if (!(relators[i] == o.relators[i])) return false;
        return true;
    }
};

/// Fundamental group of the closed orientable genus-g surface:
/// generators A_1, B_1, ..., A_g, B_g with the single relator
/// [A_1,B_1]...[A_g,B_g].  Generator 2i-1 is A_i and 2i is B_i.
FpGroup surface_group(int genus);

} // namespace nonabcoh::betti
