#include "nonabcoh/betti/group.hpp"

#include <algorithm>

#include "nonabcoh/error.hpp"

namespace nonabcoh::betti {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (const auto& [gen, sign] : letters_) {
        if (gen < 1) raise("IndexOutOfRange", "generator indices are 1-based");
        if (sign != 1 && sign != -1) raise("BadWord", "letter signs must be +1 or -1");
    }
}

int Word::max_generator() const {
    int m = 0;
    for (const auto& [gen, sign] : letters_) m = std::max(m, gen);
    return m;
}

Word Word::operator*(const Word& o) const {
    std::vector<Letter> joined = letters_;
    joined.insert(joined.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(joined));
}

Word Word::inverse() const {
    std::vector<Letter> inv;
    inv.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        inv.emplace_back(it->first, -it->second);
    return Word(std::move(inv));
}

Word Word::prefix(int length) const {
    if (length < 0 || length > this->length()) raise("IndexOutOfRange", "bad prefix length");
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + length));
}

Word Word::freely_reduced() const {
    std::vector<Letter> stack;
    for (const auto& letter : letters_) {
        if (!stack.empty() && stack.back().first == letter.first &&
            stack.back().second == -letter.second)
            stack.pop_back();
        else
            stack.push_back(letter);
    }
    return Word(std::move(stack));
}

FpGroup surface_group(int genus) {
    if (genus < 1) raise("InvalidGenus", "surface group needs genus >= 1");
    Word relator;
    for (int i = 1; i <= genus; ++i)
        relator = relator * Word::commutator(2 * i - 1, 2 * i);
    return FpGroup{2 * genus, {relator}};
}

} // namespace nonabcoh::betti
