#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonabcoh/betti/representation.hpp"

namespace nonabcoh::betti {

enum class ReductivityStatus { reductive, nonReductive, unknown };

struct ReductivityVerdict {
    ReductivityStatus status = ReductivityStatus::unknown;
    /// Bases of the invariant lines found.  For nonReductive: the single
    /// invariant line with no invariant complement.  For a split rank-2
    /// representation: the two lines certifying the decomposition.
    std::vector<std::vector<numkit::Scalar>> witness;
    std::string detail;
};

/// Decides reductivity for rank <= 2 (exact in exact mode, rank tests with
/// the given tolerance in floating mode); rank >= 3 returns unknown.
ReductivityVerdict reductivity(const Representation& rep, double tol);

/// Exact square root in Q(i) when one exists.
std::optional<numkit::GaussianRational> sqrt_exact(const numkit::GaussianRational& z);

} // namespace nonabcoh::betti
