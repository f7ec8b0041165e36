#pragma once

#include <memory>
#include <vector>

#include "nonabcoh/cech/nerve.hpp"
#include "nonabcoh/numkit/matrix.hpp"

namespace nonabcoh::localsys {

/// G-valued Cech 1-cochain on the nerve: one invertible matrix per edge,
/// stored in the u < v direction; the reversed direction is the inverse.
/// Whether the family is a 1-cocycle is checked by validate_cocycle.
class GCocycle {
public:
    GCocycle(std::shared_ptr<const cech::CoverNerve> nerve, int rank,
             std::vector<numkit::Matrix> transitions_by_edge);

    /// All-identity transitions.
    static GCocycle trivial(std::shared_ptr<const cech::CoverNerve> nerve, int rank,
                            numkit::Mode mode = numkit::Mode::exact);

    const cech::CoverNerve& nerve() const { return *nerve_; }
    std::shared_ptr<const cech::CoverNerve> nerve_ptr() const { return nerve_; }
    int rank() const { return rank_; }
    numkit::Mode mode() const;

    /// Transition for the directed overlap u -> v; throws MissingEdge.
    numkit::Matrix transition(int u, int v) const;
    const numkit::Matrix& stored(int edge_index) const {
        return transitions_[static_cast<size_t>(edge_index)];
    }
    void set_stored(int edge_index, numkit::Matrix m);

private:
    std::shared_ptr<const cech::CoverNerve> nerve_;
    int rank_;
    std::vector<numkit::Matrix> transitions_;
};

/// A 0-cochain of invertible matrices: one gauge per cover index.
class GaugeCochain {
public:
    GaugeCochain(std::shared_ptr<const cech::CoverNerve> nerve, int rank,
                 std::vector<numkit::Matrix> values);

    static GaugeCochain identity(std::shared_ptr<const cech::CoverNerve> nerve, int rank,
                                 numkit::Mode mode = numkit::Mode::exact);

    const cech::CoverNerve& nerve() const { return *nerve_; }
    int rank() const { return rank_; }
    const numkit::Matrix& at(int vertex) const;

private:
    std::shared_ptr<const cech::CoverNerve> nerve_;
    int rank_;
    std::vector<numkit::Matrix> values_;
};

/// Checks g_ij g_jk g_ki = id on every 2-simplex (exactly in exact mode,
/// within tol entrywise in floating mode).
bool validate_cocycle(const GCocycle& c, double tol);

/// The gauge action h_ij -> g_i h_ij g_j^{-1}.  This ordering preserves
/// the nonabelian cocycle condition and reduces to multiplication by
/// g_i g_j^{-1} when G is abelian.
GCocycle gauge_act(const GaugeCochain& g, const GCocycle& c);

} // namespace nonabcoh::localsys
