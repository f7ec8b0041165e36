#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "nonabcoh/betti/representation.hpp"
#include "nonabcoh/cech/cochain.hpp"
#include "nonabcoh/fuchsian/monodromy.hpp"
#include "nonabcoh/lattice/moduli.hpp"
#include "nonabcoh/localsys/monodromy.hpp"

namespace nonabcoh::equivalences {

/// Outcome of one round trip through the construction functors.
struct EquivalenceReport {
    std::string route;
    std::vector<std::pair<std::string, std::string>> input_fingerprints;
    std::vector<numkit::Scalar> invariants_before;
    std::vector<numkit::Scalar> invariants_after;
    bool exact_equal = false;     // set only when an exact comparison ran
    double max_discrepancy = 0.0; // over the floating legs
    bool passed = false;
    double tolerance = 0.0;
};

/// Trace fingerprint words: all generators, all ordered pairwise products,
/// and every relator prefix up to length 4.  Separates conjugation orbits
/// of the small cases exercised here; not separating in general.
std::vector<betti::Word> standard_word_list(const betti::FpGroup& group);

/// Representation of an edge-path presentation through its abelianization:
/// generator g maps to the product of target powers given by its homology
/// coordinates.  Targets must commute pairwise (exact mode: checked
/// exactly); one target per homology basis loop.
betti::Representation abelian_representation(const localsys::Pi1Presentation& p,
                                             const std::vector<numkit::Matrix>& targets);

/// The multiplicative 1-cochain of a rank-1 cocycle (entries of the 1x1
/// transitions).
cech::Cochain cx_cochain_from_cocycle(const localsys::GCocycle& cocycle);

/// Rank-1 lattice transport with the same per-edge values as the cocycle;
/// the surface must triangulate the same complex as the nerve.
lattice::LatticeConnection connection_from_cocycle(
    const localsys::GCocycle& cocycle, std::shared_ptr<const lattice::TriangulatedSurface> surface);

/// rep -> cocycle -> rep; trace invariants on the standard word list must
/// survive (exactly in exact mode).
EquivalenceReport roundtrip_betti_cech(const betti::Representation& rep,
                                       std::shared_ptr<const cech::CoverNerve> nerve,
                                       double tol = 1e-10);

/// Rank-1 three-way agreement: the exponential-lift moduli coordinates of
/// the cocycle, the lattice holonomy moduli of the induced connection,
/// and the Betti monodromy on the homology basis loops.
EquivalenceReport roundtrip_cech_lattice(
    const localsys::GCocycle& cocycle, std::shared_ptr<const cech::CoverNerve> nerve,
    std::shared_ptr<const lattice::TriangulatedSurface> surface, double tol = 1e-10);

/// Monodromy of the lambda-rescaled derivative against the monodromy of
/// the system with residues divided by lambda, for each lambda.
EquivalenceReport lambda_equivalence(const fuchsian::FuchsianSystem& sys,
                                     const std::vector<std::complex<double>>& lambdas,
                                     double tol = 1e-9);

} // namespace nonabcoh::equivalences
