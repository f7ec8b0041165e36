#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "nonabcoh/cech/cochain.hpp"
#include "nonabcoh/numkit/int_matrix.hpp"

namespace nonabcoh::cech {

struct CohomologyReport {
    int degree = 0;
    Coefficients coefficients = Coefficients::Z;
    int free_rank = 0;
    std::vector<mpz_class> torsion;      // invariant factors > 1 (Z only)
    std::vector<Cochain> representatives; // free generators, then torsion generators
};

/// Matrix of the degree-p differential: rows are (p+1)-simplices, columns
/// are p-simplices, entries the alternating face signs.
numkit::IntMatrix differential_matrix(const CoverNerve& nerve, int degree);

/// Cohomology of the nerve in one degree.  All differentials here have
/// integer entries, so both coefficient choices reduce to exact integer
/// linear algebra; C simply forgets the torsion.
CohomologyReport cohomology(std::shared_ptr<const CoverNerve> nerve, int degree,
                            Coefficients coefficients);

/// Reduction engine for cocycle classes in one degree, over Z.
class CohomologyEngine {
public:
    CohomologyEngine(std::shared_ptr<const CoverNerve> nerve, int degree);

    int free_rank() const { return free_rank_; }
    const std::vector<mpz_class>& torsion() const { return torsion_; }

    struct ClassCoordinates {
        std::vector<mpz_class> free_part;
        std::vector<mpz_class> torsion_part; // already reduced mod the factor
        std::vector<mpz_class> torsion_moduli;
        bool zero() const;
    };

    /// Coordinates of an integer cocycle's class; nullopt when the input is
    /// not a cocycle.
    std::optional<ClassCoordinates> classify(const std::vector<mpz_class>& cocycle) const;

    /// Solves d(x) = target for a degree-1 integer cochain x; nullopt when
    /// the target is not an integral coboundary.
    std::optional<std::vector<mpz_class>> coboundary_preimage(
        const std::vector<mpz_class>& target) const;

    /// Cocycle representatives of the free then torsion generators.
    std::vector<std::vector<mpz_class>> representative_vectors() const;

    const numkit::IntMatrix& incoming() const { return d_in_; }  // degree-1 -> degree
    const numkit::IntMatrix& outgoing() const { return d_out_; } // degree -> degree+1

private:
    std::shared_ptr<const CoverNerve> nerve_;
    int degree_;
    numkit::IntMatrix d_in_, d_out_;
    numkit::IntMatrix kernel_;    // columns: saturated basis of ker d_out
    numkit::SmithNormalForm snf_q_;
    numkit::IntMatrix l_inv_;
    int rank_q_ = 0;
    int free_rank_ = 0;
    std::vector<mpz_class> torsion_;
};

} // namespace nonabcoh::cech
