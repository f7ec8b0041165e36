#include "nonabcoh/cech/moduli.hpp"

#include <cmath>
#include <numbers>

#include "nonabcoh/error.hpp"

namespace nonabcoh::cech {

using numkit::GaussianRational;
using numkit::Mode;
using numkit::Scalar;

H1LatticeInclusion h1_lattice_inclusion(std::shared_ptr<const CoverNerve> nerve) {
    CohomologyReport hz = cohomology(nerve, 1, Coefficients::Z);
    CohomologyReport hc = cohomology(nerve, 1, Coefficients::C);
    if (hz.free_rank != hc.free_rank)
        raise("RankMismatch", "rank of H^1(Z) differs from dim H^1(C)");
    H1LatticeInclusion out;
    out.z_basis.assign(hz.representatives.begin(),
                       hz.representatives.begin() + hz.free_rank);
    out.c_basis = hc.representatives;
    out.inclusion = numkit::IntMatrix::identity(hz.free_rank);
    return out;
}

HomologyLoops homology_loops(const CoverNerve& nerve, int basepoint) {
    const topo::Skeleton2& skel = nerve.skeleton();
    HomologyLoops out;
    out.tree = topo::spanning_tree(skel, basepoint);
    out.basis = topo::homology_basis(skel, out.tree);
    for (const auto& word : out.basis.basis_loops)
        out.loop_vertex_paths.push_back(topo::loop_vertices(skel, out.tree, word));
    return out;
}

Scalar pair_with_loop(const Cochain& c, const std::vector<int>& loop) {
    if (c.degree() != 1) raise("BadDimension", "loop pairing needs a degree-1 cochain");
    bool mult = c.coefficients() == Coefficients::Cx;
    Scalar acc = mult ? Scalar::one(c.mode()) : Scalar::zero(c.mode());
    for (size_t k = 0; k + 1 < loop.size(); ++k) {
        Scalar v = c.value_on({loop[k], loop[k + 1]});
        acc = mult ? acc * v : acc + v;
    }
    return acc;
}

std::vector<std::complex<double>> moduli_coordinates(const Cochain& cocycle, double tol) {
    if (cocycle.coefficients() != Coefficients::C || cocycle.degree() != 1)
        raise("BadCoefficients", "moduli coordinates need a C-valued 1-cochain");
    Cochain boundary = cech_differential(cocycle);
    if (cocycle.mode() == Mode::exact ? !boundary.is_neutral() : !boundary.approx_neutral(tol))
        raise("NotClosed", "the cochain is not a cocycle");
    HomologyLoops loops = homology_loops(cocycle.nerve());
    std::vector<std::complex<double>> point;
    point.reserve(loops.loop_vertex_paths.size());
    const double two_pi = 2.0 * std::numbers::pi;
    for (const auto& path : loops.loop_vertex_paths) {
        std::complex<double> x = pair_with_loop(cocycle, path).to_complex();
        point.push_back(std::exp(std::complex<double>(0.0, two_pi) * x));
    }
    return point;
}

namespace {

// Principal-branch logarithm scaled so that exp means x -> e^{2 pi i x}.
// Fourth roots of unity stay exact; everything else goes through doubles.
struct BranchLog {
    bool exact = false;
    GaussianRational exact_value;
    std::complex<double> float_value;
};

BranchLog branch_log(const Scalar& u) {
    BranchLog out;
    if (u.mode() == Mode::exact) {
        const GaussianRational& g = u.exact_value();
        if (g.im() == 0 && g.re() == 1) {
            out.exact = true;
            return out;
        }
        if (g.im() == 0 && g.re() == -1) {
            out.exact = true;
            out.exact_value = GaussianRational(mpq_class(1, 2), mpq_class(0));
            return out;
        }
        if (g.re() == 0 && g.im() == 1) {
            out.exact = true;
            out.exact_value = GaussianRational(mpq_class(1, 4), mpq_class(0));
            return out;
        }
        if (g.re() == 0 && g.im() == -1) {
            out.exact = true;
            out.exact_value = GaussianRational(mpq_class(-1, 4), mpq_class(0));
            return out;
        }
    }
    std::complex<double> z = u.to_complex();
    const double two_pi = 2.0 * std::numbers::pi;
    // log(z) / (2 pi i) = arg(z)/(2 pi) - i log|z|/(2 pi)
    out.float_value = {std::arg(z) / two_pi, -std::log(std::abs(z)) / two_pi};
    return out;
}

} // namespace

ChernClass chern_class(const Cochain& u, double tol) {
    if (u.coefficients() != Coefficients::Cx || u.degree() != 1)
        raise("BadCoefficients", "the Chern class takes a Cx-valued 1-cochain");
    Cochain cocycle_check = cech_differential(u);
    if (u.mode() == Mode::exact ? !cocycle_check.is_neutral()
                                : !cocycle_check.approx_neutral(tol))
        raise("NotCocycle", "the multiplicative cochain is not a cocycle");

    auto nerve = u.nerve_ptr();
    int ne = nerve->simplex_count(1);
    std::vector<BranchLog> logs(static_cast<size_t>(ne));
    bool all_exact = true;
    for (int e = 0; e < ne; ++e) {
        logs[static_cast<size_t>(e)] = branch_log(u.s_at(e));
        all_exact = all_exact && logs[static_cast<size_t>(e)].exact;
    }

    const auto& triples = nerve->simplices(2);
    std::vector<mpz_class> delta(triples.size());
    for (size_t t = 0; t < triples.size(); ++t) {
        int i = triples[t][0], j = triples[t][1], k = triples[t][2];
        int e_ij = nerve->simplex_index(1, {i, j});
        int e_ik = nerve->simplex_index(1, {i, k});
        int e_jk = nerve->simplex_index(1, {j, k});
        if (all_exact) {
            GaussianRational v = logs[static_cast<size_t>(e_jk)].exact_value -
                                 logs[static_cast<size_t>(e_ik)].exact_value +
                                 logs[static_cast<size_t>(e_ij)].exact_value;
            if (v.im() != 0 || v.re().get_den() != 1)
                raise("NotCocycle", "branch sum is not an integer");
            delta[t] = v.re().get_num();
        } else {
            auto lv = [&](int e) {
                const BranchLog& b = logs[static_cast<size_t>(e)];
                return b.exact ? b.exact_value.to_complex() : b.float_value;
            };
            std::complex<double> v = lv(e_jk) - lv(e_ik) + lv(e_ij);
            double n = std::round(v.real());
            if (std::abs(v.real() - n) > tol || std::abs(v.imag()) > tol)
                raise("NotCocycle", "branch sum is not an integer within tolerance");
            delta[t] = static_cast<long>(n);
        }
    }

    ChernClass out;
    out.delta = Cochain::from_integers(nerve, 2, delta);
    CohomologyEngine engine(nerve, 2);
    auto cls = engine.classify(delta);
    if (!cls) raise("Internal", "Chern cochain is not closed");
    out.cls = *cls;
    out.zero_class = out.cls.zero();
    return out;
}

std::optional<Cochain> exp_lift(const Cochain& u, double tol) {
    ChernClass chern = chern_class(u, tol);
    if (!chern.zero_class) return std::nullopt;

    auto nerve = u.nerve_ptr();
    int ne = nerve->simplex_count(1);
    std::vector<mpz_class> delta(static_cast<size_t>(nerve->simplex_count(2)));
    for (int t = 0; t < nerve->simplex_count(2); ++t) delta[static_cast<size_t>(t)] =
        chern.delta.z_at(t);
    CohomologyEngine engine(nerve, 2);
    auto shift = engine.coboundary_preimage(delta);
    if (!shift) raise("Internal", "zero Chern class without an integral preimage");

    // Recompute the branch logs and subtract the integer 1-cochain.
    std::vector<Scalar> lifted;
    lifted.reserve(static_cast<size_t>(ne));
    bool all_exact = true;
    std::vector<BranchLog> logs(static_cast<size_t>(ne));
    for (int e = 0; e < ne; ++e) {
        logs[static_cast<size_t>(e)] = branch_log(u.s_at(e));
        all_exact = all_exact && logs[static_cast<size_t>(e)].exact;
    }
    for (int e = 0; e < ne; ++e) {
        const mpz_class& n = (*shift)[static_cast<size_t>(e)];
        if (all_exact) {
            GaussianRational v = logs[static_cast<size_t>(e)].exact_value -
                                 GaussianRational(mpq_class(n), mpq_class(0));
            lifted.push_back(Scalar::exact(v));
        } else {
            const BranchLog& b = logs[static_cast<size_t>(e)];
            std::complex<double> v = b.exact ? b.exact_value.to_complex() : b.float_value;
            lifted.push_back(Scalar::floating(v - std::complex<double>(n.get_d(), 0.0)));
        }
    }
    return Cochain::from_scalars(nerve, 1, Coefficients::C, std::move(lifted));
}

} // namespace nonabcoh::cech
