#include "nonabcoh/betti/representation.hpp"

#include "nonabcoh/error.hpp"
#include "nonabcoh/numkit/eigen.hpp"

namespace nonabcoh::betti {

using numkit::Matrix;
using numkit::Mode;
using numkit::Scalar;

Representation::Representation(FpGroup group, int rank, std::vector<Matrix> images,
                               double invertibility_tol)
    : group_(std::move(group)), rank_(rank), images_(std::move(images)) {
    if (rank_ < 1) raise("BadDimension", "representation rank must be positive");
    if (static_cast<int>(images_.size()) != group_.generators)
        raise("BadDimension", "one image per generator is required");
    for (const Matrix& m : images_) {
        if (m.rows() != rank_ || m.cols() != rank_)
            raise("BadDimension", "image shape does not match the rank");
        if (!images_.empty() && m.mode() != images_.front().mode())
            raise("ModeMismatch", "generator images must share one mode");
        if (!m.is_invertible(invertibility_tol))
            raise("SingularMatrix", "generator images must be invertible");
    }
    for (const Word& r : group_.relators)
        if (r.max_generator() > group_.generators)
            raise("IndexOutOfRange", "relator uses an unknown generator");
}

const Matrix& Representation::image(int generator) const {
    if (generator < 1 || generator > group_.generators)
        raise("IndexOutOfRange", "generator index out of range");
    return images_[static_cast<size_t>(generator - 1)];
}

Representation Representation::trivial(FpGroup group, int rank, Mode mode) {
    std::vector<Matrix> images(static_cast<size_t>(group.generators),
                               Matrix::identity(rank, mode));
    return Representation(std::move(group), rank, std::move(images));
}

Matrix evaluate_word(const Representation& rep, const Word& w) {
    Matrix acc = Matrix::identity(rep.rank(), rep.mode());
    for (const auto& [gen, sign] : w.letters()) {
        if (gen > rep.group().generators)
            raise("IndexOutOfRange", "word uses an unknown generator");
        const Matrix& m = rep.image(gen);
        acc = sign > 0 ? acc * m : acc * m.inverse();
    }
    return acc;
}

bool check_relations(const Representation& rep, double tol) {
    for (const Word& r : rep.group().relators) {
        Matrix value = evaluate_word(rep, r);
        if (rep.mode() == Mode::exact) {
            if (!value.is_identity()) return false;
        } else {
            Matrix diff = value - Matrix::identity(rep.rank(), Mode::floating);
            if (numkit::operator_norm(diff) > tol) return false;
        }
    }
    return true;
}

Representation conjugate(const Representation& rep, const Matrix& g) {
    if (g.rows() != rep.rank() || g.cols() != rep.rank())
        raise("BadDimension", "conjugator shape does not match the rank");
    Matrix ginv = g.inverse();
    std::vector<Matrix> images;
    images.reserve(rep.images().size());
    for (const Matrix& m : rep.images()) images.push_back(g * m * ginv);
    return Representation(rep.group(), rep.rank(), std::move(images));
}

std::vector<Scalar> trace_invariants(const Representation& rep,
                                     const std::vector<Word>& words) {
    std::vector<Scalar> traces;
    traces.reserve(words.size());
    for (const Word& w : words) traces.push_back(evaluate_word(rep, w).trace());
    return traces;
}

} // namespace nonabcoh::betti
