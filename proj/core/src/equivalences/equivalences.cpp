#include "nonabcoh/equivalences/equivalences.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "nonabcoh/cech/moduli.hpp"
#include "nonabcoh/error.hpp"
#include "nonabcoh/fingerprint.hpp"

namespace nonabcoh::equivalences {

using betti::Representation;
using betti::Word;
using numkit::Matrix;
using numkit::Mode;
using numkit::Scalar;

namespace {

std::string matrix_bytes(const Matrix& m) {
    std::ostringstream os;
    os << m.rows() << 'x' << m.cols() << ':';
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m.mode() == Mode::exact) {
                os << m.at(i, j).exact_value().re_string() << ','
                   << m.at(i, j).exact_value().im_string() << ';';
            } else {
                char buf[64];
                std::complex<double> z = m.at(i, j).float_value();
                std::snprintf(buf, sizeof(buf), "%.17g,%.17g;", z.real(), z.imag());
                os << buf;
            }
        }
    return os.str();
}

std::string rep_fingerprint(const Representation& rep) {
    std::ostringstream os;
    os << rep.group().generators << '|' << rep.rank() << '|';
    for (const Matrix& m : rep.images()) os << matrix_bytes(m);
    return fingerprint_hex(os.str());
}

std::string cocycle_fingerprint(const localsys::GCocycle& c) {
    std::ostringstream os;
    os << c.nerve().vertex_count() << '|' << c.rank() << '|';
    for (int e = 0; e < c.nerve().simplex_count(1); ++e) os << matrix_bytes(c.stored(e));
    return fingerprint_hex(os.str());
}

double scalar_diff(const Scalar& a, const Scalar& b) {
    return std::abs(a.to_complex() - b.to_complex());
}

Matrix int_power(const Matrix& base, const mpz_class& exponent) {
    long e = exponent.get_si();
    Matrix m = e >= 0 ? base : base.inverse();
    long n = std::abs(e);
    Matrix acc = Matrix::identity(base.rows(), base.mode());
    for (long k = 0; k < n; ++k) acc = acc * m;
    return acc;
}

} // namespace

std::vector<Word> standard_word_list(const betti::FpGroup& group) {
    std::vector<Word> words;
    for (int i = 1; i <= group.generators; ++i) words.push_back(Word::generator(i));
    for (int i = 1; i <= group.generators; ++i)
        for (int j = 1; j <= group.generators; ++j)
            words.push_back(Word::generator(i) * Word::generator(j));
    for (const Word& relator : group.relators)
        for (int len = 1; len <= std::min(4, relator.length()); ++len)
            words.push_back(relator.prefix(len));
    return words;
}

Representation abelian_representation(const localsys::Pi1Presentation& p,
                                      const std::vector<Matrix>& targets) {
    topo::HomologyBasis basis = topo::homology_basis(p.skeleton, p.tree);
    if (static_cast<int>(targets.size()) != basis.free_rank)
        raise("BadDimension", "one commuting target per homology basis loop is required");
    for (size_t i = 0; i < targets.size(); ++i)
        for (size_t j = i + 1; j < targets.size(); ++j) {
            Matrix lhs = targets[i] * targets[j];
            Matrix rhs = targets[j] * targets[i];
            bool ok = lhs.mode() == Mode::exact ? lhs.equals(rhs)
                                                : lhs.max_abs_diff(rhs) <= 1e-12;
            if (!ok) raise("BadDimension", "targets must commute pairwise");
        }
    int rank = targets.empty() ? 1 : targets.front().rows();
    Mode mode = targets.empty() ? Mode::exact : targets.front().mode();
    std::vector<Matrix> images;
    images.reserve(static_cast<size_t>(p.group.generators));
    for (int g = 0; g < p.group.generators; ++g) {
        Matrix img = Matrix::identity(rank, mode);
        const auto& coords = basis.generator_coordinates[static_cast<size_t>(g)];
        for (size_t j = 0; j < targets.size(); ++j)
            if (coords[j] != 0) img = img * int_power(targets[j], coords[j]);
        images.push_back(std::move(img));
    }
    return Representation(p.group, rank, std::move(images));
}

cech::Cochain cx_cochain_from_cocycle(const localsys::GCocycle& cocycle) {
    if (cocycle.rank() != 1) raise("RankNotOne", "Cx cochain needs a rank-1 cocycle");
    std::vector<Scalar> values;
    int ne = cocycle.nerve().simplex_count(1);
    values.reserve(static_cast<size_t>(ne));
    for (int e = 0; e < ne; ++e) values.push_back(cocycle.stored(e).at(0, 0));
    return cech::Cochain::from_scalars(cocycle.nerve_ptr(), 1, cech::Coefficients::Cx,
                                       std::move(values));
}

lattice::LatticeConnection connection_from_cocycle(
    const localsys::GCocycle& cocycle,
    std::shared_ptr<const lattice::TriangulatedSurface> surface) {
    const auto& nerve_edges = cocycle.nerve().skeleton().edges();
    const auto& surf_edges = surface->skeleton().edges();
    if (nerve_edges != surf_edges || cocycle.nerve().vertex_count() != surface->vertex_count())
        raise("GenusMismatch", "surface does not triangulate the nerve's complex");
    std::vector<Matrix> transport;
    transport.reserve(nerve_edges.size());
    for (int e = 0; e < static_cast<int>(nerve_edges.size()); ++e)
        transport.push_back(cocycle.stored(e));
    return lattice::LatticeConnection(std::move(surface), cocycle.rank(), std::move(transport));
}

EquivalenceReport roundtrip_betti_cech(const Representation& rep,
                                       std::shared_ptr<const cech::CoverNerve> nerve,
                                       double tol) {
    EquivalenceReport report;
    report.route = "betti->cech->betti";
    report.tolerance = tol;
    report.input_fingerprints.emplace_back("representation", rep_fingerprint(rep));

    localsys::Pi1Presentation p = localsys::pi1_presentation(nerve->skeleton(), 0);
    if (!(rep.group() == p.group))
        raise("PresentationMismatch", "representation group differs from the nerve presentation");
    std::vector<Word> words = standard_word_list(p.group);
    report.invariants_before = betti::trace_invariants(rep, words);

    localsys::GCocycle cocycle = localsys::rep_to_cocycle(rep, nerve, p);
    Representation back = localsys::monodromy(cocycle, p, tol);
    report.invariants_after = betti::trace_invariants(back, words);

    if (rep.mode() == Mode::exact) {
        report.exact_equal = true;
        for (size_t k = 0; k < words.size(); ++k)
            if (!report.invariants_before[k].equals(report.invariants_after[k]))
                report.exact_equal = false;
        report.passed = report.exact_equal;
    } else {
        for (size_t k = 0; k < words.size(); ++k)
            report.max_discrepancy = std::max(
                report.max_discrepancy,
                scalar_diff(report.invariants_before[k], report.invariants_after[k]));
        report.passed = report.max_discrepancy <= tol;
    }
    return report;
}

EquivalenceReport roundtrip_cech_lattice(
    const localsys::GCocycle& cocycle, std::shared_ptr<const cech::CoverNerve> nerve,
    std::shared_ptr<const lattice::TriangulatedSurface> surface, double tol) {
    EquivalenceReport report;
    report.route = "cech->lattice->betti";
    report.tolerance = tol;
    report.input_fingerprints.emplace_back("cocycle", cocycle_fingerprint(cocycle));
    if (cocycle.rank() != 1) raise("RankNotOne", "the three-way comparison is rank-1");

    cech::HomologyLoops loops = cech::homology_loops(*nerve);
    int genus2x = loops.basis.free_rank;
    if (surface->closed_oriented() && surface->genus() * 2 != genus2x)
        raise("GenusMismatch", "surface genus differs from the nerve genus");

    // Betti leg: monodromy representation evaluated on the basis loops.
    localsys::Pi1Presentation p = localsys::pi1_presentation(nerve->skeleton(), 0);
    Representation rep = localsys::monodromy(cocycle, p, tol);
    std::vector<Scalar> betti_point;
    for (const auto& word : loops.basis.basis_loops)
        betti_point.push_back(
            betti::evaluate_word(rep, localsys::word_from_letters(word)).at(0, 0));

    // Lattice leg: holonomy moduli of the induced transport.
    lattice::LatticeConnection conn = connection_from_cocycle(cocycle, surface);
    std::vector<Scalar> lattice_point = lattice::abelian_moduli(conn, tol);

    // Cech leg: logarithm lift, then the exponential moduli coordinates.
    cech::Cochain u = cx_cochain_from_cocycle(cocycle);
    auto lift = cech::exp_lift(u, 1e-6);
    if (!lift) raise("NotCocycle", "cocycle has nonzero Chern class; no moduli point");
    std::vector<std::complex<double>> cech_point = cech::moduli_coordinates(*lift, 1e-6);

    if (betti_point.size() != lattice_point.size() || betti_point.size() != cech_point.size())
        raise("GenusMismatch", "legs disagree on the number of moduli coordinates");

    report.invariants_before = betti_point;
    report.invariants_after = lattice_point;

    bool exact_mode = cocycle.mode() == Mode::exact;
    report.exact_equal = exact_mode;
    for (size_t k = 0; k < betti_point.size(); ++k) {
        if (exact_mode) {
            if (!betti_point[k].equals(lattice_point[k])) report.exact_equal = false;
        } else {
            report.max_discrepancy =
                std::max(report.max_discrepancy, scalar_diff(betti_point[k], lattice_point[k]));
        }
        report.max_discrepancy = std::max(
            report.max_discrepancy, std::abs(betti_point[k].to_complex() - cech_point[k]));
        report.max_discrepancy = std::max(
            report.max_discrepancy, std::abs(lattice_point[k].to_complex() - cech_point[k]));
    }
    report.passed = report.max_discrepancy <= tol && (!exact_mode || report.exact_equal);
    return report;
}

EquivalenceReport lambda_equivalence(const fuchsian::FuchsianSystem& sys,
                                     const std::vector<std::complex<double>>& lambdas,
                                     double tol) {
    EquivalenceReport report;
    report.route = "lambda-rescale";
    report.tolerance = tol;
    {
        std::ostringstream os;
        os << matrix_bytes(sys.a0()) << matrix_bytes(sys.a1());
        report.input_fingerprints.emplace_back("system", fingerprint_hex(os.str()));
    }
    std::complex<double> base(-0.25, 0.0);
    double radius = 0.25;
    fuchsian::LoopSpec loops[3] = {fuchsian::loop_around_0(base, radius),
                                   fuchsian::loop_around_1(base, radius),
                                   fuchsian::loop_around_infinity(base)};
    for (std::complex<double> lambda : lambdas) {
        fuchsian::FuchsianSystem rescaled = fuchsian::lambda_rescale(sys, lambda);
        for (const fuchsian::LoopSpec& loop : loops) {
            fuchsian::IntegrateOptions direct;
            direct.tol = tol;
            direct.pole_guard = radius / 2.0;
            direct.lambda = lambda;
            fuchsian::TransportResult a = fuchsian::integrate(sys, loop.polyline, direct);

            fuchsian::IntegrateOptions plain;
            plain.tol = tol;
            plain.pole_guard = radius / 2.0;
            fuchsian::TransportResult b = fuchsian::integrate(rescaled, loop.polyline, plain);

            report.invariants_before.push_back(a.transport.trace());
            report.invariants_after.push_back(b.transport.trace());
            report.max_discrepancy =
                std::max(report.max_discrepancy, a.transport.max_abs_diff(b.transport));
        }
    }
    report.passed = report.max_discrepancy <= 1000.0 * tol;
    return report;
}

} // namespace nonabcoh::equivalences
