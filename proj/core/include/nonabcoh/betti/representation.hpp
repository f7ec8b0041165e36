#pragma once

#include <vector>

#include "nonabcoh/betti/group.hpp"
#include "nonabcoh/numkit/matrix.hpp"

namespace nonabcoh::betti {

/// A matrix representation of a finitely presented group: one invertible
/// rank x rank matrix per generator, all in one arithmetic mode.
class Representation {
public:
    Representation(FpGroup group, int rank, std::vector<numkit::Matrix> images,
                   double invertibility_tol = 1e-12);

    const FpGroup& group() const { return group_; }
    int rank() const { return rank_; }
    numkit::Mode mode() const { return images_.empty() ? numkit::Mode::exact : images_.front().mode(); }
    const std::vector<numkit::Matrix>& images() const { return images_; }
    const numkit::Matrix& image(int generator) const; // 1-based

    static Representation trivial(FpGroup group, int rank,
                                  numkit::Mode mode = numkit::Mode::exact);

private:
    FpGroup group_;
    int rank_;
    std::vector<numkit::Matrix> images_;
};

/// Ordered left-to-right product of generator images along the word.
numkit::Matrix evaluate_word(const Representation& rep, const Word& w);

/// True iff every relator evaluates to the identity: exactly in exact
/// mode, within tol in operator norm in floating mode.
bool check_relations(const Representation& rep, double tol);

/// The conjugated representation g rho g^{-1}; throws SingularMatrix.
Representation conjugate(const Representation& rep, const numkit::Matrix& g);

/// Traces of the word evaluations: class functions separating orbits of
/// the small cases handled here.
std::vector<numkit::Scalar> trace_invariants(const Representation& rep,
                                             const std::vector<Word>& words);

} // namespace nonabcoh::betti
