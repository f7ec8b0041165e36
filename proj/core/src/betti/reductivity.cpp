#include "nonabcoh/betti/reductivity.hpp"

#include <cmath>

#include "nonabcoh/error.hpp"

namespace nonabcoh::betti {

using numkit::GaussianRational;
using numkit::Matrix;
using numkit::Mode;
using numkit::Scalar;

namespace {

std::optional<mpq_class> sqrt_rational(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return mpq_class(sn, sd);
}

} // namespace

std::optional<GaussianRational> sqrt_exact(const GaussianRational& z) {
    if (z.is_zero()) return GaussianRational{};
    auto modulus = sqrt_rational(z.norm_squared());
    if (!modulus) return std::nullopt;
    mpq_class s2 = (z.re() + *modulus) / 2;
    mpq_class t2 = (*modulus - z.re()) / 2;
    auto s = sqrt_rational(s2);
    auto t = sqrt_rational(t2);
    if (!s || !t) return std::nullopt;
    mpq_class tim = z.im() >= 0 ? *t : mpq_class(-*t);
    GaussianRational w(*s, tim);
    if (w * w == z) return w;
    return std::nullopt;
}

namespace {

// ---- exact rank-2 machinery ------------------------------------------

bool is_scalar_exact(const Matrix& m) {
    return m.at(0, 1).is_zero() && m.at(1, 0).is_zero() && m.at(0, 0).equals(m.at(1, 1));
}

// (Mv) x v as an exact cross product; zero iff v spans an eigendirection.
GaussianRational cross_exact(const Matrix& m, const GaussianRational& x,
                             const GaussianRational& y) {
    GaussianRational mx = m.at(0, 0).exact_value() * x + m.at(0, 1).exact_value() * y;
    GaussianRational my = m.at(1, 0).exact_value() * x + m.at(1, 1).exact_value() * y;
    return mx * y - my * x;
}

struct ExactDirections {
    bool rational = true; // false: conjugate pair outside Q(i)
    std::vector<std::pair<GaussianRational, GaussianRational>> dirs;
};

// Eigendirections of a non-scalar 2x2 matrix, as points of P^1 over Q(i).
ExactDirections eigendirections_exact(const Matrix& m) {
    // q(x, y) = -m10 x^2 + (m00 - m11) xy + m01 y^2
    GaussianRational alpha = -m.at(1, 0).exact_value();
    GaussianRational beta = m.at(0, 0).exact_value() - m.at(1, 1).exact_value();
    GaussianRational gamma = m.at(0, 1).exact_value();
    ExactDirections out;
    if (alpha.is_zero()) {
        out.dirs.push_back({GaussianRational(1), GaussianRational(0)});
        if (!beta.is_zero()) {
            // second root y/x = -beta/gamma ... solve beta x + gamma y = 0
            out.dirs.push_back({gamma, -beta});
        }
        return out;
    }
    GaussianRational disc = beta * beta - GaussianRational(4) * alpha * gamma;
    auto root = sqrt_exact(disc);
    if (!root) {
        out.rational = false;
        return out;
    }
    GaussianRational two_alpha = GaussianRational(2) * alpha;
    GaussianRational x1 = (-beta + *root) / two_alpha;
    GaussianRational x2 = (-beta - *root) / two_alpha;
    out.dirs.push_back({x1, GaussianRational(1)});
    if (!(x1 == x2)) out.dirs.push_back({x2, GaussianRational(1)});
    return out;
}

ReductivityVerdict reductivity_exact_rank2(const Representation& rep) {
    ReductivityVerdict verdict;
    const Matrix* pivot = nullptr;
    for (const Matrix& m : rep.images())
        if (!is_scalar_exact(m)) { pivot = &m; break; }
    if (!pivot) {
        verdict.status = ReductivityStatus::reductive;
        verdict.detail = "all images scalar";
        return verdict;
    }
    ExactDirections dirs = eigendirections_exact(*pivot);
    if (!dirs.rational) {
        // The eigendirections form a conjugate pair outside Q(i).  A common
        // eigenvector would have its Galois conjugate common as well, making
        // the family simultaneously diagonalizable; otherwise the family is
        // irreducible.  Reductive in both cases.
        verdict.status = ReductivityStatus::reductive;
        verdict.detail = "eigendirections outside Q(i): diagonalizable pair or irreducible";
        return verdict;
    }
    std::vector<std::pair<GaussianRational, GaussianRational>> common;
    for (const auto& [x, y] : dirs.dirs) {
        bool ok = true;
        for (const Matrix& m : rep.images())
            if (!cross_exact(m, x, y).is_zero()) { ok = false; break; }
        if (ok) common.push_back({x, y});
    }
    if (common.empty()) {
        verdict.status = ReductivityStatus::reductive;
        verdict.detail = "irreducible: no common eigenvector";
        return verdict;
    }
    if (common.size() == 2) {
        verdict.status = ReductivityStatus::reductive;
        verdict.detail = "split: two independent invariant lines";
        for (const auto& [x, y] : common)
            verdict.witness.push_back({Scalar::exact(x), Scalar::exact(y)});
        return verdict;
    }
    verdict.status = ReductivityStatus::nonReductive;
    verdict.detail = "invariant line without an invariant complement";
    verdict.witness.push_back({Scalar::exact(common[0].first), Scalar::exact(common[0].second)});
    return verdict;
}

// ---- floating rank-2 machinery ---------------------------------------

using Cx = std::complex<double>;

struct FloatDir { Cx x, y; };

// Smallest singular value of the stacked (M_k - lambda_k I) block matrix,
// where lambda_k is the Rayleigh quotient of the candidate direction.
double stacked_rank_defect(const Representation& rep, const FloatDir& v) {
    // Accumulate the 2x2 Gram matrix sum_k (M_k - l_k)^H (M_k - l_k).
    Cx g00 = 0, g01 = 0, g11 = 0;
    for (const Matrix& m : rep.images()) {
        Cx a = m.at(0, 0).float_value(), b = m.at(0, 1).float_value();
        Cx c = m.at(1, 0).float_value(), d = m.at(1, 1).float_value();
        Cx mx = a * v.x + b * v.y, my = c * v.x + d * v.y;
        Cx lambda = std::conj(v.x) * mx + std::conj(v.y) * my; // v normalized
        Cx ra = a - lambda, rd = d - lambda;
        g00 += std::conj(ra) * ra + std::conj(c) * c;
        g01 += std::conj(ra) * b + std::conj(c) * rd;
        g11 += std::conj(b) * b + std::conj(rd) * rd;
    }
    double tr = g00.real() + g11.real();
    double det = (g00 * g11 - std::conj(g01) * g01).real();
    double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    double lmin = std::max(0.0, tr / 2.0 - disc);
    return std::sqrt(lmin);
}

ReductivityVerdict reductivity_float_rank2(const Representation& rep, double tol) {
    ReductivityVerdict verdict;
    double scale = 1.0;
    for (const Matrix& m : rep.images()) scale = std::max(scale, m.max_abs());
    const Matrix* pivot = nullptr;
    for (const Matrix& m : rep.images()) {
        Cx mean = (m.at(0, 0).float_value() + m.at(1, 1).float_value()) / 2.0;
        double off = std::max(std::abs(m.at(0, 1).float_value()),
                              std::abs(m.at(1, 0).float_value()));
        double diag = std::abs(m.at(0, 0).float_value() - mean);
        if (std::max(off, diag) > tol * scale) { pivot = &m; break; }
    }
    if (!pivot) {
        verdict.status = ReductivityStatus::reductive;
        verdict.detail = "all images scalar";
        return verdict;
    }
    Cx a = pivot->at(0, 0).float_value(), b = pivot->at(0, 1).float_value();
    Cx c = pivot->at(1, 0).float_value(), d = pivot->at(1, 1).float_value();
    Cx tr = a + d, det = a * d - b * c;
    Cx disc = std::sqrt(tr * tr - 4.0 * det);
    Cx l1 = (tr + disc) / 2.0, l2 = (tr - disc) / 2.0;
    auto direction = [&](Cx lambda) -> FloatDir {
        FloatDir v1{b, lambda - a}, v2{lambda - d, c};
        double n1 = std::sqrt(std::norm(v1.x) + std::norm(v1.y));
        double n2 = std::sqrt(std::norm(v2.x) + std::norm(v2.y));
        FloatDir v = n1 >= n2 ? v1 : v2;
        double n = std::max(n1, n2);
        v.x /= n;
        v.y /= n;
        return v;
    };
    FloatDir v1 = direction(l1), v2 = direction(l2);
    bool distinct = std::abs(v1.x * v2.y - v1.y * v2.x) > tol;
    std::vector<FloatDir> common;
    if (stacked_rank_defect(rep, v1) <= tol * scale) common.push_back(v1);
    if (distinct && stacked_rank_defect(rep, v2) <= tol * scale) common.push_back(v2);
    if (common.empty()) {
        verdict.status = ReductivityStatus::reductive;
        verdict.detail = "irreducible: no common eigenvector";
        return verdict;
    }
    if (common.size() == 2) {
        verdict.status = ReductivityStatus::reductive;
        verdict.detail = "split: two independent invariant lines";
        for (const FloatDir& v : common)
            verdict.witness.push_back({Scalar::floating(v.x), Scalar::floating(v.y)});
        return verdict;
    }
    verdict.status = ReductivityStatus::nonReductive;
    verdict.detail = "invariant line without an invariant complement";
    verdict.witness.push_back({Scalar::floating(common[0].x), Scalar::floating(common[0].y)});
    return verdict;
}

} // namespace

ReductivityVerdict reductivity(const Representation& rep, double tol) {
    ReductivityVerdict verdict;
    if (rep.rank() == 1) {
        verdict.status = ReductivityStatus::reductive;
        verdict.detail = "rank 1";
        return verdict;
    }
    if (rep.rank() > 2) {
        verdict.status = ReductivityStatus::unknown;
        verdict.detail = "rank > 2 is out of the decidable range";
        return verdict;
    }
    return rep.mode() == Mode::exact ? reductivity_exact_rank2(rep)
                                     : reductivity_float_rank2(rep, tol);
}

} // namespace nonabcoh::betti
