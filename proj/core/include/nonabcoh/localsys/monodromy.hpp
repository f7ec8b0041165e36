#pragma once

#include "nonabcoh/betti/representation.hpp"
#include "nonabcoh/localsys/cocycle.hpp"
#include "nonabcoh/localsys/pi1.hpp"

namespace nonabcoh::localsys {

/// Transport of a cocycle along a vertex path: the left-to-right product
/// of the transitions of consecutive steps, first step leftmost.
numkit::Matrix transport(const GCocycle& c, const std::vector<int>& path);

/// The monodromy representation of a validated cocycle on the edge-path
/// presentation.  Each generator loop maps to the ordered product of
/// transitions along basepoint -> tree path -> edge -> tree path ->
/// basepoint.  Throws InvalidCocycle when the cocycle condition fails;
/// the relators of the presentation are re-checked on the result.
betti::Representation monodromy(const GCocycle& c, const Pi1Presentation& p,
                                double tol = 1e-9);

/// The combinatorial inverse: tree edges carry the identity, the non-tree
/// edge of generator k carries the image of generator k.  With these
/// conventions monodromy(rep_to_cocycle(rep)) returns rep on the nose.
GCocycle rep_to_cocycle(const betti::Representation& rep,
                        std::shared_ptr<const cech::CoverNerve> nerve,
                        const Pi1Presentation& p);

} // namespace nonabcoh::localsys
