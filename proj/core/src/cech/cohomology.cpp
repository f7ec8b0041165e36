#include "nonabcoh/cech/cohomology.hpp"

#include "nonabcoh/error.hpp"

namespace nonabcoh::cech {

using numkit::IntMatrix;

IntMatrix differential_matrix(const CoverNerve& nerve, int degree) {
    const auto& rows = nerve.simplices(degree + 1);
    const auto& cols = nerve.simplices(degree);
    IntMatrix d(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    std::vector<int> sub;
    for (size_t r = 0; r < rows.size(); ++r) {
        const auto& simplex = rows[r];
        for (size_t drop = 0; drop < simplex.size(); ++drop) {
            sub.clear();
            for (size_t k = 0; k < simplex.size(); ++k)
                if (k != drop) sub.push_back(simplex[k]);
            int c = nerve.simplex_index(degree, sub);
            if (c < 0) raise("BadSimplex", "nerve is not downward closed");
            d.at(static_cast<int>(r), c) += (drop % 2 == 0) ? 1 : -1;
        }
    }
    return d;
}

CohomologyEngine::CohomologyEngine(std::shared_ptr<const CoverNerve> nerve, int degree)
    : nerve_(std::move(nerve)), degree_(degree) {
    if (degree_ < 0) raise("BadDimension", "negative cohomology degree");
    if (!nerve_->declared_good_cover())
        raise("NotGoodCover",
              "cohomology requires the cover to be declared good (Leray identification)");
    int n_here = nerve_->simplex_count(degree_);
    d_out_ = differential_matrix(*nerve_, degree_);
    d_in_ = degree_ == 0 ? IntMatrix(n_here, 0) : differential_matrix(*nerve_, degree_ - 1);

    auto kernel_vectors = numkit::kernel_basis_integer(d_out_);
    int s = static_cast<int>(kernel_vectors.size());
    kernel_ = IntMatrix(n_here, s);
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < n_here; ++i)
            kernel_.at(i, j) = kernel_vectors[static_cast<size_t>(j)][static_cast<size_t>(i)];

    // Image generators of d_in written in kernel coordinates.
    IntMatrix q(s, d_in_.cols());
    for (int c = 0; c < d_in_.cols(); ++c) {
        std::vector<mpz_class> col(static_cast<size_t>(d_in_.rows()));
        for (int i = 0; i < d_in_.rows(); ++i) col[static_cast<size_t>(i)] = d_in_.at(i, c);
        auto x = numkit::solve_integer(kernel_, col);
        if (!x) raise("Internal", "coboundary escaped the cocycle lattice");
        for (int i = 0; i < s; ++i) q.at(i, c) = (*x)[static_cast<size_t>(i)];
    }
    snf_q_ = numkit::smith_normal_form(q);
    rank_q_ = numkit::rank(snf_q_);
    l_inv_ = numkit::invert_unimodular(snf_q_.left);
    free_rank_ = s - rank_q_;
    for (int i = 0; i < rank_q_; ++i)
        if (snf_q_.diagonal[static_cast<size_t>(i)] > 1)
            torsion_.push_back(snf_q_.diagonal[static_cast<size_t>(i)]);
}

bool CohomologyEngine::ClassCoordinates::zero() const {
    for (const auto& v : free_part)
        if (v != 0) return false;
    for (const auto& v : torsion_part)
        if (v != 0) return false;
    return true;
}

std::optional<CohomologyEngine::ClassCoordinates> CohomologyEngine::classify(
    const std::vector<mpz_class>& cocycle) const {
    auto image = d_out_.apply(cocycle);
    for (const auto& v : image)
        if (v != 0) return std::nullopt;
    auto x = numkit::solve_integer(kernel_, cocycle);
    if (!x) raise("Internal", "cocycle escaped the saturated kernel lattice");
    std::vector<mpz_class> w = snf_q_.left.apply(*x);
    ClassCoordinates out;
    int s = kernel_.cols();
    for (int j = rank_q_; j < s; ++j) out.free_part.push_back(w[static_cast<size_t>(j)]);
    for (int i = 0; i < rank_q_; ++i) {
        const mpz_class& d = snf_q_.diagonal[static_cast<size_t>(i)];
        if (d > 1) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), w[static_cast<size_t>(i)].get_mpz_t(), d.get_mpz_t());
            out.torsion_part.push_back(r);
            out.torsion_moduli.push_back(d);
        }
    }
    return out;
}

std::optional<std::vector<mpz_class>> CohomologyEngine::coboundary_preimage(
    const std::vector<mpz_class>& target) const {
    return numkit::solve_integer(d_in_, target);
}

std::vector<std::vector<mpz_class>> CohomologyEngine::representative_vectors() const {
    std::vector<std::vector<mpz_class>> reps;
    int s = kernel_.cols();
    auto lift = [&](int j) {
        std::vector<mpz_class> coeff(static_cast<size_t>(s));
        for (int i = 0; i < s; ++i) coeff[static_cast<size_t>(i)] = l_inv_.at(i, j);
        return kernel_.apply(coeff);
    };
    for (int j = rank_q_; j < s; ++j) reps.push_back(lift(j));
    for (int i = 0; i < rank_q_; ++i)
        if (snf_q_.diagonal[static_cast<size_t>(i)] > 1) reps.push_back(lift(i));
    return reps;
}

CohomologyReport cohomology(std::shared_ptr<const CoverNerve> nerve, int degree,
                            Coefficients coefficients) {
    if (coefficients == Coefficients::Cx)
        raise("BadCoefficients", "cohomology is computed with Z or C coefficients");
    CohomologyEngine engine(nerve, degree);
    CohomologyReport report;
    report.degree = degree;
    report.coefficients = coefficients;
    report.free_rank = engine.free_rank();
    auto reps = engine.representative_vectors();
    size_t free_count = static_cast<size_t>(engine.free_rank());
    if (coefficients == Coefficients::Z) {
        report.torsion = engine.torsion();
    } else {
        reps.resize(free_count); // torsion classes vanish over C
    }
    for (const auto& vec : reps) {
        if (coefficients == Coefficients::Z) {
            report.representatives.push_back(Cochain::from_integers(nerve, degree, vec));
        } else {
            std::vector<numkit::Scalar> scalars;
            scalars.reserve(vec.size());
            for (const auto& v : vec)
                scalars.push_back(numkit::Scalar::exact(
                    numkit::GaussianRational(mpq_class(v), mpq_class(0))));
            report.representatives.push_back(
                Cochain::from_scalars(nerve, degree, Coefficients::C, std::move(scalars)));
        }
    }
    return report;
}

} // namespace nonabcoh::cech
