// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Exercised tolerances and thresholds are fixed here, not configurable.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "nonabcoh/betti/reductivity.hpp"
#include "nonabcoh/cech/moduli.hpp"
#include "nonabcoh/equivalences/equivalences.hpp"
#include "nonabcoh/error.hpp"
#include "nonabcoh/lattice/moduli.hpp"
#include "nonabcoh/numkit/eigen.hpp"

using namespace nonabcoh;
using cech::Cochain;
using cech::Coefficients;
using cech::CoverNerve;
using numkit::GaussianRational;
using numkit::Matrix;
using numkit::Mode;
using numkit::Scalar;
using Cx = std::complex<double>;

namespace {

constexpr double TWO_PI = 2.0 * std::numbers::pi;

int failures = 0;
std::vector<std::string> notes;

struct Criterion {
    int number;
    const char* label;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;

    Criterion(int n, const char* text) : number(n), label(text) { notes.clear(); }

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes.push_back(what);
        }
    }

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    ~Criterion() {
        double dt = seconds();
        std::printf("[%s] criterion %2d (%6.2fs): %s\n", ok ? "PASS" : "FAIL", number, dt, label);
        for (const auto& note : notes) std::printf("        - %s\n", note.c_str());
        if (!ok) ++failures;
    }
};

std::shared_ptr<const CoverNerve> make(CoverNerve nerve) {
    return std::make_shared<const CoverNerve>(std::move(nerve));
}

GaussianRational random_rational(std::mt19937_64& rng, int span = 7) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, span);
    return {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
}

Scalar random_unit(std::mt19937_64& rng) {
    for (;;) {
        GaussianRational g = random_rational(rng);
        if (!g.is_zero()) return Scalar::exact(g);
    }
}

Matrix random_exact_invertible(std::mt19937_64& rng, int n) {
    for (;;) {
        std::vector<GaussianRational> entries;
        for (int k = 0; k < n * n; ++k) entries.push_back(random_rational(rng));
        Matrix m = Matrix::from_exact(n, n, std::move(entries));
        if (!m.determinant().is_zero()) return m;
    }
}

// 2x2 floating matrix with operator norm at most one.
Matrix random_bounded(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Cx> entries;
    for (int k = 0; k < 4; ++k) entries.push_back({u(rng), u(rng)});
    Matrix m = Matrix::from_float(2, 2, std::move(entries));
    double norm = numkit::operator_norm(m);
    if (norm > 1.0) m = m.scaled(Scalar::floating({1.0 / norm, 0.0}));
    return m;
}

std::vector<Matrix> rank1_targets(std::mt19937_64& rng, int count) {
    std::vector<Matrix> out;
    for (int k = 0; k < count; ++k) out.push_back(Matrix::from_scalars(1, 1, {random_unit(rng)}));
    return out;
}

void criterion_1() {
    Criterion c(1, "genus tower: Cech cohomology ranks over C, exact arithmetic");
    auto torus = make(CoverNerve::torus_minimal());
    auto genus2 = make(CoverNerve::genus2_surface());
    for (auto& [nerve, h1] : {std::pair{torus, 2}, std::pair{genus2, 4}}) {
        c.require(cech::cohomology(nerve, 0, Coefficients::C).free_rank == 1, "H^0 rank 1");
        c.require(cech::cohomology(nerve, 1, Coefficients::C).free_rank == h1, "H^1 rank 2g");
        c.require(cech::cohomology(nerve, 2, Coefficients::C).free_rank == 1, "H^2 rank 1");
    }
    c.require(c.seconds() < 5.0, "runtime below 5 s");
}

void criterion_2() {
    Criterion c(2, "Chern class: sign cocycle generates H^2(RP^2; Z) = Z/2; torus classes vanish");
    auto rp2 = make(CoverNerve::projective_plane_minimal());
    topo::SpanningTree tree = topo::spanning_tree(rp2->skeleton(), 0);
    topo::HomologyBasis h = topo::homology_basis(rp2->skeleton(), tree);
    c.require(h.torsion.size() == 1 && h.torsion[0] == 2, "H_1(RP^2) = Z/2");

    Cochain sign = Cochain::neutral(rp2, 1, Coefficients::Cx, Mode::exact);
    for (size_t g = 0; g < static_cast<size_t>(tree.generator_count()); ++g) {
        long s = mpz_odd_p(h.generator_torsion_coordinates[g][0].get_mpz_t()) ? -1 : 1;
        sign.s_set(tree.edge_of_generator[g], Scalar::exact(GaussianRational(s)));
    }
    auto chern = cech::chern_class(sign);
    c.require(!chern.zero_class, "sign cocycle has a nonzero class");
    c.require(chern.cls.torsion_moduli.size() == 1 && chern.cls.torsion_moduli[0] == 2 &&
                  chern.cls.torsion_part[0] == 1,
              "class is the Z/2 generator");
    c.require(!cech::exp_lift(sign).has_value(), "sign cocycle admits no exponential lift");

    auto torus = make(CoverNerve::torus_minimal());
    localsys::Pi1Presentation p = localsys::pi1_presentation(torus->skeleton(), 0);
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 10; ++trial) {
        auto rep = equivalences::abelian_representation(p, rank1_targets(rng, 2));
        Cochain u = equivalences::cx_cochain_from_cocycle(localsys::rep_to_cocycle(rep, torus, p));
        auto cls = cech::chern_class(u);
        c.require(cls.zero_class, "torus cocycle class vanishes");
        c.require(cech::exp_lift(u).has_value(), "torus cocycle lifts");
    }
}

void criterion_3() {
    Criterion c(3, "Riemann-Hilbert rank-1 anchor (a0,a1) = (1/3,1/5) within 1e-8 at tol 1e-10");
    fuchsian::FuchsianSystem sys = fuchsian::FuchsianSystem::rank1({1.0 / 3.0, 0.0}, {0.2, 0.0});
    auto m = fuchsian::monodromy(sys, {-0.25, 0.0}, 1e-10);
    c.require(std::abs(m.c0.at(0, 0).float_value() - std::exp(Cx(0, -TWO_PI / 3))) < 1e-8,
              "C0 = exp(-2 pi i / 3)");
    c.require(std::abs(m.c1.at(0, 0).float_value() - std::exp(Cx(0, -TWO_PI / 5))) < 1e-8,
              "C1 = exp(-2 pi i / 5)");
    c.require(std::abs(m.cinf.at(0, 0).float_value() - std::exp(Cx(0, TWO_PI * 8.0 / 15.0))) < 1e-8,
              "Cinf = exp(2 pi i 8/15)");
    c.require(c.seconds() < 2.0, "runtime below 2 s");
}

void criteria_4_and_5() {
    std::mt19937_64 rng(404);
    std::vector<fuchsian::FuchsianSystem> systems;
    std::vector<fuchsian::MonodromyResult> results;
    {
        Criterion c(4, "C0 C1 Cinf = id with an independently computed Cinf, 20 random systems");
        for (int trial = 0; trial < 20; ++trial) {
            systems.emplace_back(random_bounded(rng), random_bounded(rng));
            results.push_back(fuchsian::monodromy(systems.back(), {-0.25, 0.0}, 1e-9));
            c.require(results.back().residual_identity_error < 1e-6,
                      "identity residual below 1e-6");
        }
        c.require(c.seconds() < 60.0, "runtime below 60 s");
    }
    {
        Criterion c(5, "multiset eig(C_i) = exp(-2 pi i eig(A_i)) on the same 20 systems");
        int checked = 0;
        for (size_t k = 0; k < systems.size(); ++k) {
            auto report = fuchsian::eigenvalue_check(systems[k], results[k], 1e-6);
            for (const auto& point : report.points) {
                if (point.resonant) continue;
                ++checked;
                c.require(point.passed, "spectrum match at point " + point.point);
            }
        }
        c.require(checked > 0, "at least one non-resonant point");
    }
}

void criterion_6() {
    Criterion c(6, "hypergeometric reduction: scalar residual and indicial multipliers at 0");
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    int done = 0;
    while (done < 10) {
        fuchsian::HypergeometricParams params({u(rng), u(rng)}, {u(rng), u(rng)},
                                              {u(rng), u(rng)});
        if (params.c_integer || params.c_minus_a_minus_b_integer || params.a_minus_b_integer)
            continue;
        ++done;
        fuchsian::FuchsianSystem sys = fuchsian::hypergeometric_to_system(params);

        // transport along [i/2, 1/2 + i/2]; finite-difference residual
        const Cx z0(0.0, 0.5), z1(0.5, 0.5);
        const Cx dir = (z1 - z0) / std::abs(z1 - z0);
        const double h = 1e-3;
        const int samples = 7;
        Matrix state = Matrix::from_float(2, 1, {Cx(1.0, 0.0), Cx(0.3, -0.2)});
        Cx prev = z0;
        std::vector<Cx> f;
        for (int k = 0; k < samples; ++k) {
            Cx zk = z0 + 0.4 * (z1 - z0) + (static_cast<double>(k) - samples / 2) * h * dir;
            auto step = fuchsian::integrate(sys, {prev, zk}, 1e-12);
            state = step.transport * state;
            f.push_back(state.at(0, 0).float_value());
            prev = zk;
        }
        for (int k = 1; k + 1 < samples; ++k) {
            Cx zk = z0 + 0.4 * (z1 - z0) + (static_cast<double>(k) - samples / 2) * h * dir;
            Cx fp = (f[static_cast<size_t>(k + 1)] - f[static_cast<size_t>(k - 1)]) / (2.0 * h * dir);
            Cx fpp = (f[static_cast<size_t>(k + 1)] - 2.0 * f[static_cast<size_t>(k)] +
                      f[static_cast<size_t>(k - 1)]) /
                     (h * h * dir * dir);
            Cx t1 = zk * (1.0 - zk) * fpp;
            Cx t2 = (params.c - (params.a + params.b + 1.0) * zk) * fp;
            Cx t3 = -params.a * params.b * f[static_cast<size_t>(k)];
            double scale = std::abs(t1) + std::abs(t2) + std::abs(t3) + 1.0;
            c.require(std::abs(t1 + t2 + t3) < 1e-6 * scale, "scalar residual below 1e-6");
        }

        auto result = fuchsian::monodromy(sys, {-0.25, 0.0}, 1e-10);
        auto eig = numkit::eigenvalues(result.c0, 1e-12);
        Cx target = std::exp(Cx(0, -TWO_PI) * params.c);
        bool has_one = std::abs(eig[0] - 1.0) < 1e-6 || std::abs(eig[1] - 1.0) < 1e-6;
        bool has_target = std::abs(eig[0] - target) < 1e-6 || std::abs(eig[1] - target) < 1e-6;
        c.require(has_one && has_target, "monodromy multipliers at 0 are {1, exp(-2 pi i c)}");
    }
}

void criterion_7() {
    Criterion c(7, "Betti -> Cech -> Betti round trip preserves trace invariants exactly");
    auto torus = make(CoverNerve::torus_minimal());
    localsys::Pi1Presentation p = localsys::pi1_presentation(torus->skeleton(), 0);
    std::mt19937_64 rng(707);

    auto trivial = betti::Representation::trivial(p.group, 2);
    c.require(equivalences::roundtrip_betti_cech(trivial, torus).exact_equal, "trivial rep");

    for (int trial = 0; trial < 10; ++trial) {
        auto rep = equivalences::abelian_representation(p, rank1_targets(rng, 2));
        c.require(equivalences::roundtrip_betti_cech(rep, torus).exact_equal,
                  "rank-1 representation");
    }
    for (int trial = 0; trial < 10; ++trial) {
        Matrix basis = random_exact_invertible(rng, 2);
        auto diag = [&] {
            return Matrix::diagonal({random_unit(rng), random_unit(rng)});
        };
        std::vector<Matrix> targets = {basis * diag() * basis.inverse(),
                                       basis * diag() * basis.inverse()};
        auto rep = equivalences::abelian_representation(p, targets);
        c.require(equivalences::roundtrip_betti_cech(rep, torus).exact_equal,
                  "commuting rank-2 representation");
    }
}

void criterion_8() {
    Criterion c(8, "discrete de Rham: gauge covariance, homotopy invariance, path dependence");
    auto torus = std::make_shared<const lattice::TriangulatedSurface>(
        lattice::TriangulatedSurface::from_nerve(CoverNerve::torus_minimal()));
    std::mt19937_64 rng(808);

    // exact gauge covariance of curvature on a curved connection
    lattice::LatticeConnection curved = lattice::LatticeConnection::trivial(torus, 2);
    curved.set_stored(0, Matrix::from_exact(2, 2,
                                            {GaussianRational(1), GaussianRational(1),
                                             GaussianRational(0), GaussianRational(1)}));
    auto base_curvature = curvature(curved);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Matrix> g;
        for (int v = 0; v < torus->vertex_count(); ++v)
            g.push_back(random_exact_invertible(rng, 2));
        auto after = curvature(gauge_act(g, curved));
        for (int f = 0; f < torus->face_count(); ++f) {
            int anchor = torus->face_boundary(f)[0];
            Matrix expected = g[static_cast<size_t>(anchor)].inverse() *
                              base_curvature[static_cast<size_t>(f)] *
                              g[static_cast<size_t>(anchor)];
            c.require(after[static_cast<size_t>(f)].equals(expected),
                      "curvature conjugates by the base-vertex gauge");
        }
    }

    // flat holonomy is invariant under 100 random elementary moves
    std::vector<Matrix> gauge;
    for (int v = 0; v < torus->vertex_count(); ++v)
        gauge.push_back(random_exact_invertible(rng, 2));
    lattice::LatticeConnection flat =
        gauge_act(gauge, lattice::LatticeConnection::trivial(torus, 2));
    localsys::Pi1Presentation p = localsys::pi1_presentation(torus->skeleton(), 0);
    std::vector<int> loop = p.loop_for_word(betti::Word::generator(2));
    Matrix base = holonomy(flat, lattice::edge_path_from_vertices(loop));
    for (int trial = 0; trial < 100; ++trial) {
        size_t pos = rng() % (loop.size() - 1);
        std::vector<int> moved(loop.begin(), loop.begin() + static_cast<long>(pos) + 1);
        if (rng() % 2 == 0) {
            int detour = torus->skeleton().neighbors(loop[pos]).front();
            moved.push_back(detour);
            moved.push_back(loop[pos]);
        } else {
            int uu = loop[pos], vv = loop[pos + 1];
            int w = -1;
            for (const auto& t : torus->skeleton().triangles()) {
                bool hu = t[0] == uu || t[1] == uu || t[2] == uu;
                bool hv = t[0] == vv || t[1] == vv || t[2] == vv;
                if (hu && hv) {
                    for (int x : t)
                        if (x != uu && x != vv) w = x;
                    break;
                }
            }
            if (w < 0) {
                c.require(false, "missing triangle for a slide move");
                continue;
            }
            moved.push_back(w);
        }
        moved.insert(moved.end(), loop.begin() + static_cast<long>(pos) + 1, loop.end());
        c.require(holonomy(flat, lattice::edge_path_from_vertices(moved)).equals(base),
                  "holonomy unchanged under an elementary move");
    }

    // the non-flat single face shows path-dependent transport
    auto tri = std::make_shared<const lattice::TriangulatedSurface>(
        3, std::vector<std::array<int, 3>>{{0, 1, 2}});
    auto q = [](long n, long d) {
        return Matrix::from_exact(1, 1, {GaussianRational(mpq_class(n, d), mpq_class(0))});
    };
    lattice::LatticeConnection scalar(tri, 1, {q(2, 1), q(5, 1), q(3, 1)});
    Scalar via = holonomy(scalar, {{{0, 1}}, {{1, 2}}}).at(0, 0);
    Scalar direct = holonomy(scalar, {{{0, 2}}}).at(0, 0);
    c.require(!(via / direct).equals(Scalar::exact(GaussianRational(1))),
              "two routes around a curved face disagree");
    c.require((via / direct).exact_value() == GaussianRational(mpq_class(6, 5), mpq_class(0)),
              "the disagreement is exactly the plaquette curvature 6/5");
}

void criterion_9() {
    Criterion c(9, "the unipotent surface representation: non-reductive, trivial trace invariants");
    for (int genus : {1, 2}) {
        betti::FpGroup g = betti::surface_group(genus);
        std::vector<Matrix> images(static_cast<size_t>(2 * genus),
                                   Matrix::from_exact(2, 2,
                                                      {GaussianRational(1), GaussianRational(1),
                                                       GaussianRational(0), GaussianRational(1)}));
        betti::Representation uni(g, 2, images);
        auto verdict = betti::reductivity(uni, 0.0);
        c.require(verdict.status == betti::ReductivityStatus::nonReductive,
                  "flagged non-reductive");
        c.require(verdict.witness.size() == 1, "witness line present");
        if (verdict.witness.size() == 1) {
            // the witness line is invariant under every image, checkably
            const auto& w = verdict.witness[0];
            for (const Matrix& m : uni.images()) {
                Scalar wx = m.at(0, 0) * w[0] + m.at(0, 1) * w[1];
                Scalar wy = m.at(1, 0) * w[0] + m.at(1, 1) * w[1];
                c.require((wx * w[1] - wy * w[0]).is_zero(), "witness is an eigenvector");
            }
        }
        auto words = equivalences::standard_word_list(g);
        auto uni_traces = betti::trace_invariants(uni, words);
        auto triv_traces =
            betti::trace_invariants(betti::Representation::trivial(g, 2), words);
        for (size_t k = 0; k < words.size(); ++k)
            c.require(uni_traces[k].equals(triv_traces[k]),
                      "trace invariants equal the trivial representation's");
    }
}

void criterion_10() {
    Criterion c(10, "three-way abelian moduli agreement on the torus and the genus-2 surface");
    std::mt19937_64 rng(1010);
    for (auto base_nerve : {CoverNerve::torus_minimal(), CoverNerve::genus2_surface()}) {
        auto nerve = make(std::move(base_nerve));
        auto surface = std::make_shared<const lattice::TriangulatedSurface>(
            lattice::TriangulatedSurface::from_nerve(*nerve));
        localsys::Pi1Presentation p = localsys::pi1_presentation(nerve->skeleton(), 0);
        topo::HomologyBasis h = topo::homology_basis(p.skeleton, p.tree);
        for (int trial = 0; trial < 5; ++trial) {
            auto rep = equivalences::abelian_representation(p, rank1_targets(rng, h.free_rank));
            auto cocycle = localsys::rep_to_cocycle(rep, nerve, p);
            auto report = equivalences::roundtrip_cech_lattice(cocycle, nerve, surface, 1e-10);
            c.require(report.exact_equal, "lattice and Betti legs agree exactly");
            c.require(report.max_discrepancy < 1e-10, "Cech leg agrees within 1e-10");
        }
    }
}

void criterion_11() {
    Criterion c(11, "lambda rescaling: monodromy matches the divided system; lambda = 0 rejected");
    std::vector<Cx> lambdas = {{2.0, 0.0}, {0.0, 1.0}};
    fuchsian::FuchsianSystem r1 = fuchsian::FuchsianSystem::rank1({1.0 / 3.0, 0.0}, {0.2, 0.0});
    auto report1 = equivalences::lambda_equivalence(r1, lambdas, 1e-9);
    c.require(report1.max_discrepancy < 1e-6, "rank-1 routes agree within 1e-6");

    std::mt19937_64 rng(1111);
    fuchsian::FuchsianSystem sys(random_bounded(rng), random_bounded(rng));
    auto report2 = equivalences::lambda_equivalence(sys, lambdas, 1e-9);
    c.require(report2.max_discrepancy < 1e-6, "2x2 routes agree within 1e-6");

    bool rejected = false;
    try {
        fuchsian::lambda_rescale(sys, {0.0, 0.0});
    } catch (const Error& e) {
        rejected = e.code() == "ZeroLambda";
    }
    c.require(rejected, "lambda = 0 raises ZeroLambda");
}

} // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criteria_4_and_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
