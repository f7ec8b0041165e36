#pragma once

#include "nonabcoh/lattice/connection.hpp"

namespace nonabcoh::lattice {

/// Holonomy of a flat rank-1 connection around the canonical homology
/// basis loops of the surface 1-skeleton (basepoint 0): the point of
/// (Cx)^{2g} the connection represents.  Invariant under vertex gauges.
/// Throws NotFlat / RankNotOne.
std::vector<numkit::Scalar> abelian_moduli(const LatticeConnection& conn, double tol = 1e-9);

} // namespace nonabcoh::lattice
