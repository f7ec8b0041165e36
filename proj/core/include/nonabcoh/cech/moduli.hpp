#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "nonabcoh/cech/cohomology.hpp"
#include "nonabcoh/topo/skeleton.hpp"

namespace nonabcoh::cech {

/// Basis of H^1(Z) inside H^1(C).  Representatives over C are integral by
/// construction, so the two bases coincide and the inclusion matrix is the
/// identity lattice Z^{2g} in C^{2g}.
struct H1LatticeInclusion {
    std::vector<Cochain> z_basis;
    std::vector<Cochain> c_basis;
    numkit::IntMatrix inclusion; // z_basis classes in c_basis coordinates
};

H1LatticeInclusion h1_lattice_inclusion(std::shared_ptr<const CoverNerve> nerve);

/// The canonical homology basis loops of the nerve's 1-skeleton (basepoint
/// 0, BFS spanning tree); shared by every abelian moduli computation so
/// the three constructions land in the same coordinates.
struct HomologyLoops {
    topo::SpanningTree tree;
    topo::HomologyBasis basis;
    std::vector<std::vector<int>> loop_vertex_paths; // one closed path per basis loop
};

HomologyLoops homology_loops(const CoverNerve& nerve, int basepoint = 0);

/// Sum of a degree-1 cochain along a closed vertex path (with direction
/// signs); the pairing of cohomology with homology.
numkit::Scalar pair_with_loop(const Cochain& c, const std::vector<int>& loop);

/// Coordinates of a closed C-valued 1-cochain in (Cx)^{2g}: pair with the
/// homology basis loops and apply x -> exp(2 pi i x), which kills both
/// coboundary shifts and integral cocycle shifts.
std::vector<std::complex<double>> moduli_coordinates(const Cochain& cocycle,
                                                     double tol = 1e-9);

/// Connecting map of the exponential sequence: branch logarithms of a
/// multiplicative 1-cocycle, then the integer-valued alternating sum on
/// triples, classified in H^2(Z).
struct ChernClass {
    Cochain delta; // integer 2-cocycle
    CohomologyEngine::ClassCoordinates cls;
    bool zero_class = false;
};

ChernClass chern_class(const Cochain& u, double tol = 1e-6);

/// Logarithm lift through exp(2 pi i .): a closed C-valued 1-cochain `a`
/// with exp(2 pi i a) = u, when the Chern class vanishes; nullopt otherwise.
std::optional<Cochain> exp_lift(const Cochain& u, double tol = 1e-6);

} // namespace nonabcoh::cech
