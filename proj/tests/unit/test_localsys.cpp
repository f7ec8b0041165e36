#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nonabcoh/equivalences/equivalences.hpp"
#include "nonabcoh/error.hpp"
#include "nonabcoh/localsys/monodromy.hpp"
#include "test_util.hpp"

using namespace nonabcoh;
using cech::CoverNerve;
using localsys::GaugeCochain;
using localsys::GCocycle;
using localsys::Pi1Presentation;
using numkit::GaussianRational;
using numkit::Matrix;
using numkit::Mode;
using numkit::Scalar;

namespace {

std::shared_ptr<const CoverNerve> make(CoverNerve nerve) {
    return std::make_shared<const CoverNerve>(std::move(nerve));
}

Matrix exact2(long a, long b, long c, long d) {
    return Matrix::from_exact(2, 2,
                              {GaussianRational(a), GaussianRational(b), GaussianRational(c),
                               GaussianRational(d)});
}

GCocycle random_flat_cocycle(std::mt19937_64& rng, std::shared_ptr<const CoverNerve> nerve,
                             const Pi1Presentation& p, int rank) {
    // flat by construction: random gauge applied to the trivial cocycle,
    // then one commuting pair planted through the abelianization
    std::vector<Matrix> targets;
    Matrix basis = testutil::random_exact_invertible(rng, rank);
    topo::HomologyBasis h = topo::homology_basis(p.skeleton, p.tree);
    for (int k = 0; k < h.free_rank; ++k) {
        std::vector<Scalar> diag;
        for (int r = 0; r < rank; ++r) diag.push_back(testutil::random_exact_unit(rng));
        targets.push_back(basis * Matrix::diagonal(diag) * basis.inverse());
    }
    auto rep = equivalences::abelian_representation(p, targets);
    return localsys::rep_to_cocycle(rep, nerve, p);
}

} // namespace

TEST_CASE("validate_cocycle: stated examples") {
    auto tri = make(CoverNerve::filled_triangle());
    CHECK(localsys::validate_cocycle(GCocycle::trivial(tri, 2), 0.0));

    std::mt19937_64 rng(5);
    Matrix m = testutil::random_exact_invertible(rng, 2);
    // g01 = M, g12 = id, g02 = M: M * id * M^-1 = id
    GCocycle forced = GCocycle::trivial(tri, 2);
    forced.set_stored(tri->skeleton().edge_index(0, 1), m);
    forced.set_stored(tri->skeleton().edge_index(0, 2), m);
    CHECK(localsys::validate_cocycle(forced, 0.0));

    GCocycle bad = GCocycle::trivial(tri, 2);
    Matrix u = exact2(1, 1, 0, 1);
    bad.set_stored(tri->skeleton().edge_index(0, 1), u);
    bad.set_stored(tri->skeleton().edge_index(1, 2), u);
    bad.set_stored(tri->skeleton().edge_index(0, 2), u);
    CHECK_FALSE(localsys::validate_cocycle(bad, 0.0));
    CHECK_THROWS_AS(localsys::monodromy(bad, localsys::pi1_presentation(tri->skeleton(), 0)),
                    Error);
}

TEST_CASE("gauge action: identity, abelian ordering, cocycle preservation") {
    auto torus = make(CoverNerve::torus_minimal());
    Pi1Presentation p = localsys::pi1_presentation(torus->skeleton(), 0);
    std::mt19937_64 rng(19);
    GCocycle c = random_flat_cocycle(rng, torus, p, 2);
    REQUIRE(localsys::validate_cocycle(c, 0.0));

    GCocycle same = localsys::gauge_act(GaugeCochain::identity(torus, 2), c);
    for (int e = 0; e < torus->simplex_count(1); ++e)
        CHECK(same.stored(e).equals(c.stored(e)));

    // abelian rank 1: transition multiplied by g_i / g_j
    GCocycle c1 = random_flat_cocycle(rng, torus, p, 1);
    std::vector<Matrix> values;
    for (int v = 0; v < torus->vertex_count(); ++v)
        values.push_back(Matrix::from_scalars(1, 1, {testutil::random_exact_unit(rng)}));
    GaugeCochain g1(torus, 1, values);
    GCocycle acted = localsys::gauge_act(g1, c1);
    const auto& edges = torus->skeleton().edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        Scalar expected = values[static_cast<size_t>(edges[e][0])].at(0, 0) *
                          c1.stored(static_cast<int>(e)).at(0, 0) /
                          values[static_cast<size_t>(edges[e][1])].at(0, 0);
        CHECK(acted.stored(static_cast<int>(e)).at(0, 0).equals(expected));
    }

    // random rank-2 gauges preserve the cocycle condition
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Matrix> gv;
        for (int v = 0; v < torus->vertex_count(); ++v)
            gv.push_back(testutil::random_exact_invertible(rng, 2));
        GCocycle out = localsys::gauge_act(GaugeCochain(torus, 2, gv), c);
        CHECK(localsys::validate_cocycle(out, 0.0));
    }
}

TEST_CASE("gauge action composes as a group action") {
    auto torus = make(CoverNerve::torus_minimal());
    Pi1Presentation p = localsys::pi1_presentation(torus->skeleton(), 0);
    std::mt19937_64 rng(23);
    GCocycle c = random_flat_cocycle(rng, torus, p, 2);
    std::vector<Matrix> gv, hv;
    for (int v = 0; v < torus->vertex_count(); ++v) {
        gv.push_back(testutil::random_exact_invertible(rng, 2));
        hv.push_back(testutil::random_exact_invertible(rng, 2));
    }
    std::vector<Matrix> product;
    for (int v = 0; v < torus->vertex_count(); ++v)
        product.push_back(gv[static_cast<size_t>(v)] * hv[static_cast<size_t>(v)]);
    GCocycle lhs = localsys::gauge_act(GaugeCochain(torus, 2, gv),
                                       localsys::gauge_act(GaugeCochain(torus, 2, hv), c));
    GCocycle rhs = localsys::gauge_act(GaugeCochain(torus, 2, product), c);
    for (int e = 0; e < torus->simplex_count(1); ++e)
        CHECK(lhs.stored(e).equals(rhs.stored(e)));
}

TEST_CASE("pi1 presentation: circle, disk, torus") {
    auto hollow = make(CoverNerve::hollow_triangle());
    Pi1Presentation pc = localsys::pi1_presentation(hollow->skeleton(), 0);
    CHECK(pc.group.generators == 1);
    CHECK(pc.group.relators.empty());

    auto filled = make(CoverNerve::filled_triangle());
    Pi1Presentation pd = localsys::pi1_presentation(filled->skeleton(), 0);
    CHECK(pd.group.generators == 1);
    REQUIRE(pd.group.relators.size() == 1);
    // the single relator kills the single generator: trivial group
    topo::HomologyBasis h = topo::homology_basis(pd.skeleton, pd.tree);
    CHECK(h.free_rank == 0);
    CHECK(h.torsion.empty());

    auto torus = make(CoverNerve::torus_minimal());
    Pi1Presentation pt = localsys::pi1_presentation(torus->skeleton(), 0);
    CHECK(pt.group.generators == 21 - 6); // edges minus spanning tree
    CHECK(pt.group.relators.size() == 14);
    topo::HomologyBasis ht = topo::homology_basis(pt.skeleton, pt.tree);
    CHECK(ht.free_rank == 2);
    CHECK(ht.torsion.empty());

    auto disconnected = topo::Skeleton2(4, {{0, 1}, {2, 3}}, {});
    CHECK_THROWS_AS(localsys::pi1_presentation(disconnected, 0), Error);
}

TEST_CASE("monodromy: trivial cocycle, single-edge loop, abelian round trip") {
    auto hollow = make(CoverNerve::hollow_triangle());
    Pi1Presentation p = localsys::pi1_presentation(hollow->skeleton(), 0);

    auto trivial = GCocycle::trivial(hollow, 2);
    auto rep0 = localsys::monodromy(trivial, p);
    CHECK(rep0.image(1).is_identity());

    std::mt19937_64 rng(37);
    Matrix m = testutil::random_exact_invertible(rng, 2);
    GCocycle c = GCocycle::trivial(hollow, 2);
    int gen_edge = hollow->skeleton().edge_index(p.generator_edges[0][0], p.generator_edges[0][1]);
    c.set_stored(gen_edge, m);
    auto rep = localsys::monodromy(c, p);
    CHECK(rep.image(1).equals(m));

    // torus rank 1: targets come back on the homology basis loops
    auto torus = make(CoverNerve::torus_minimal());
    Pi1Presentation pt = localsys::pi1_presentation(torus->skeleton(), 0);
    topo::HomologyBasis ht = topo::homology_basis(pt.skeleton, pt.tree);
    std::vector<Matrix> targets = {Matrix::from_exact(1, 1, {GaussianRational(2)}),
                                   Matrix::from_exact(1, 1, {GaussianRational(mpq_class(-3, 7), mpq_class(1))})};
    auto rep1 = equivalences::abelian_representation(pt, targets);
    auto cocycle = localsys::rep_to_cocycle(rep1, torus, pt);
    auto back = localsys::monodromy(cocycle, pt);
    for (size_t k = 0; k < ht.basis_loops.size(); ++k) {
        Matrix value = betti::evaluate_word(back, localsys::word_from_letters(ht.basis_loops[k]));
        CHECK(value.equals(targets[k]));
    }
}

TEST_CASE("round trip rep -> cocycle -> rep is the identity on generators") {
    auto torus = make(CoverNerve::torus_minimal());
    Pi1Presentation p = localsys::pi1_presentation(torus->skeleton(), 0);
    std::mt19937_64 rng(41);
    GCocycle c = random_flat_cocycle(rng, torus, p, 2);
    auto rep = localsys::monodromy(c, p);
    auto c2 = localsys::rep_to_cocycle(rep, torus, p);
    auto rep2 = localsys::monodromy(c2, p);
    for (int g = 1; g <= p.group.generators; ++g) CHECK(rep2.image(g).equals(rep.image(g)));

    // trace invariants survive the full round trip as well
    auto words = equivalences::standard_word_list(p.group);
    auto before = betti::trace_invariants(rep, words);
    auto after = betti::trace_invariants(rep2, words);
    for (size_t k = 0; k < words.size(); ++k) CHECK(before[k].equals(after[k]));

    // and cocycle -> rep -> cocycle stays in the same gauge orbit: its
    // monodromy is conjugate (here equal at the basepoint) to the original
    CHECK_THROWS_AS(
        localsys::rep_to_cocycle(betti::Representation::trivial(betti::surface_group(1), 2),
                                 torus, p),
        Error);
}

TEST_CASE("monodromy of a gauged cocycle is the basepoint conjugate") {
    auto torus = make(CoverNerve::torus_minimal());
    Pi1Presentation p = localsys::pi1_presentation(torus->skeleton(), 0);
    std::mt19937_64 rng(43);
    GCocycle c = random_flat_cocycle(rng, torus, p, 2);
    std::vector<Matrix> gv;
    for (int v = 0; v < torus->vertex_count(); ++v)
        gv.push_back(testutil::random_exact_invertible(rng, 2));
    GCocycle acted = localsys::gauge_act(GaugeCochain(torus, 2, gv), c);

    auto rep = localsys::monodromy(c, p);
    auto rep_acted = localsys::monodromy(acted, p);
    auto conj = betti::conjugate(rep, gv[0]); // basepoint is vertex 0
    for (int g = 1; g <= p.group.generators; ++g)
        CHECK(rep_acted.image(g).equals(conj.image(g)));
}

TEST_CASE("transport is homotopy invariant: backtracks and triangle slides") {
    auto torus = make(CoverNerve::torus_minimal());
    Pi1Presentation p = localsys::pi1_presentation(torus->skeleton(), 0);
    std::mt19937_64 rng(47);
    GCocycle c = random_flat_cocycle(rng, torus, p, 2);

    std::vector<int> loop = p.loop_for_word(betti::Word::generator(1));
    Matrix base = localsys::transport(c, loop);

    // insert an immediate backtrack at a random position
    for (int trial = 0; trial < 20; ++trial) {
        size_t pos = 1 + rng() % (loop.size() - 1);
        int detour = torus->skeleton().neighbors(loop[pos]).front();
        std::vector<int> with_backtrack(loop.begin(), loop.begin() + static_cast<long>(pos) + 1);
        with_backtrack.push_back(detour);
        with_backtrack.push_back(loop[pos]);
        with_backtrack.insert(with_backtrack.end(), loop.begin() + static_cast<long>(pos) + 1,
                              loop.end());
        CHECK(localsys::transport(c, with_backtrack).equals(base));
    }

    // slide across a 2-simplex: replace step u -> v by u -> w -> v
    for (int trial = 0; trial < 40; ++trial) {
        size_t pos = rng() % (loop.size() - 1);
        int u = loop[pos], v = loop[pos + 1];
        const auto& tris = torus->skeleton().triangles();
        int w = -1;
        for (const auto& t : tris) {
            bool hu = t[0] == u || t[1] == u || t[2] == u;
            bool hv = t[0] == v || t[1] == v || t[2] == v;
            if (hu && hv) {
                for (int x : t)
                    if (x != u && x != v) w = x;
                break;
            }
        }
        REQUIRE(w >= 0);
        std::vector<int> slid(loop.begin(), loop.begin() + static_cast<long>(pos) + 1);
        slid.push_back(w);
        slid.insert(slid.end(), loop.begin() + static_cast<long>(pos) + 1, loop.end());
        CHECK(localsys::transport(c, slid).equals(base));
    }
}
