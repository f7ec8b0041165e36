#include "nonabcoh/cech/cochain.hpp"

#include <algorithm>

#include "nonabcoh/error.hpp"

namespace nonabcoh::cech {

using numkit::Mode;
using numkit::Scalar;

std::string to_string(Coefficients c) {
    switch (c) {
        case Coefficients::Z: return "Z";
        case Coefficients::C: return "C";
        case Coefficients::Cx: return "Cx";
    }
    return "?";
}

Cochain Cochain::neutral(std::shared_ptr<const CoverNerve> nerve, int degree,
                         Coefficients coeffs, Mode mode) {
    Cochain c;
    c.degree_ = degree;
    c.coeffs_ = coeffs;
    int n = nerve->simplex_count(degree);
    c.nerve_ = std::move(nerve);
    if (coeffs == Coefficients::Z) {
        c.values_ = std::vector<mpz_class>(static_cast<size_t>(n));
    } else {
        Scalar fill = coeffs == Coefficients::Cx ? Scalar::one(mode) : Scalar::zero(mode);
        c.values_ = std::vector<Scalar>(static_cast<size_t>(n), fill);
    }
    return c;
}

Cochain Cochain::from_integers(std::shared_ptr<const CoverNerve> nerve, int degree,
                               std::vector<mpz_class> values) {
    if (static_cast<int>(values.size()) != nerve->simplex_count(degree))
        raise("BadDimension", "cochain value count does not match the nerve");
    Cochain c;
    c.nerve_ = std::move(nerve);
    c.degree_ = degree;
    c.coeffs_ = Coefficients::Z;
    c.values_ = std::move(values);
    return c;
}

Cochain Cochain::from_scalars(std::shared_ptr<const CoverNerve> nerve, int degree,
                              Coefficients coeffs, std::vector<Scalar> values) {
    if (coeffs == Coefficients::Z) raise("BadCoefficients", "Z cochains take integer values");
    if (static_cast<int>(values.size()) != nerve->simplex_count(degree))
        raise("BadDimension", "cochain value count does not match the nerve");
    if (!values.empty()) {
        Mode mode = values.front().mode();
        for (const Scalar& v : values) {
            if (v.mode() != mode) raise("ModeMismatch", "cochain values must share one mode");
            if (coeffs == Coefficients::Cx && v.is_zero())
                raise("BadCoefficients", "Cx cochain values must be nonzero");
        }
    }
    Cochain c;
    c.nerve_ = std::move(nerve);
    c.degree_ = degree;
    c.coeffs_ = coeffs;
    c.values_ = std::move(values);
    return c;
}

Mode Cochain::mode() const {
    if (coeffs_ == Coefficients::Z) return Mode::exact;
    const auto& vals = std::get<std::vector<Scalar>>(values_);
    return vals.empty() ? Mode::exact : vals.front().mode();
}

int Cochain::size() const {
    if (coeffs_ == Coefficients::Z)
        return static_cast<int>(std::get<std::vector<mpz_class>>(values_).size());
    return static_cast<int>(std::get<std::vector<Scalar>>(values_).size());
}

const mpz_class& Cochain::z_at(int simplex) const {
    if (coeffs_ != Coefficients::Z) raise("BadCoefficients", "z_at on non-Z cochain");
    return std::get<std::vector<mpz_class>>(values_).at(static_cast<size_t>(simplex));
}

Scalar Cochain::s_at(int simplex) const {
    if (coeffs_ == Coefficients::Z)
        return Scalar::exact(numkit::GaussianRational(
            mpq_class(z_at(simplex)), mpq_class(0)));
    return std::get<std::vector<Scalar>>(values_).at(static_cast<size_t>(simplex));
}

void Cochain::z_set(int simplex, mpz_class v) {
    if (coeffs_ != Coefficients::Z) raise("BadCoefficients", "z_set on non-Z cochain");
    std::get<std::vector<mpz_class>>(values_).at(static_cast<size_t>(simplex)) = std::move(v);
}

void Cochain::s_set(int simplex, const Scalar& v) {
    if (coeffs_ == Coefficients::Z) raise("BadCoefficients", "s_set on Z cochain");
    if (coeffs_ == Coefficients::Cx && v.is_zero())
        raise("BadCoefficients", "Cx cochain values must be nonzero");
    std::get<std::vector<Scalar>>(values_).at(static_cast<size_t>(simplex)) = v;
}

namespace {

// Sign of the permutation sorting the tuple; 0 when a vertex repeats.
int sorting_sign(std::vector<int>& tuple) {
    int sign = 1;
    for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = i + 1; j < tuple.size(); ++j) {
            if (tuple[i] == tuple[j]) return 0;
            if (tuple[i] > tuple[j]) {
                std::swap(tuple[i], tuple[j]);
                sign = -sign;
            }
        }
    return sign;
}

} // namespace

Scalar Cochain::value_on(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != degree_ + 1)
        raise("BadDimension", "tuple size does not match the cochain degree");
    std::vector<int> sorted = tuple;
    int sign = sorting_sign(sorted);
    if (sign == 0) {
        // degenerate tuple: 0 additively, 1 multiplicatively
        return coeffs_ == Coefficients::Cx ? Scalar::one(mode()) : Scalar::zero(mode());
    }
    int idx = nerve_->simplex_index(degree_, sorted);
    if (idx < 0) raise("BadSimplex", "tuple is not a simplex of the nerve");
    Scalar v = s_at(idx);
    if (sign > 0) return v;
    return coeffs_ == Coefficients::Cx ? v.inverse() : -v;
}

bool Cochain::is_neutral() const {
    if (coeffs_ == Coefficients::Z) {
        for (const auto& v : std::get<std::vector<mpz_class>>(values_))
            if (v != 0) return false;
        return true;
    }
    for (const Scalar& v : std::get<std::vector<Scalar>>(values_)) {
        if (coeffs_ == Coefficients::Cx) {
            Scalar d = v - Scalar::one(v.mode());
            if (!d.is_zero()) return false;
        } else if (!v.is_zero()) {
            return false;
        }
    }
    return true;
}

bool Cochain::approx_neutral(double tol) const {
    if (coeffs_ == Coefficients::Z) return is_neutral();
    for (int i = 0; i < size(); ++i) {
        Scalar v = s_at(i);
        Scalar d = coeffs_ == Coefficients::Cx ? v - Scalar::one(v.mode()) : v;
        if (!d.approx_zero(tol)) return false;
    }
    return true;
}

namespace {

void require_compatible(const Cochain& a, const Cochain& b) {
    if (a.degree() != b.degree() || a.coefficients() != b.coefficients() ||
        &a.nerve() != &b.nerve())
        raise("BadCoefficients", "cochain operands do not match");
}

} // namespace

Cochain Cochain::operator+(const Cochain& o) const {
    require_compatible(*this, o);
    if (coeffs_ == Coefficients::Cx) raise("BadCoefficients", "+ on multiplicative cochain");
    Cochain r = *this;
    if (coeffs_ == Coefficients::Z) {
        for (int i = 0; i < size(); ++i) r.z_set(i, z_at(i) + o.z_at(i));
    } else {
        for (int i = 0; i < size(); ++i) r.s_set(i, s_at(i) + o.s_at(i));
    }
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const {
    require_compatible(*this, o);
    if (coeffs_ == Coefficients::Cx) raise("BadCoefficients", "- on multiplicative cochain");
    Cochain r = *this;
    if (coeffs_ == Coefficients::Z) {
        for (int i = 0; i < size(); ++i) r.z_set(i, z_at(i) - o.z_at(i));
    } else {
        for (int i = 0; i < size(); ++i) r.s_set(i, s_at(i) - o.s_at(i));
    }
    return r;
}

Cochain Cochain::scaled(const Scalar& s) const {
    if (coeffs_ != Coefficients::C) raise("BadCoefficients", "scaled() needs C coefficients");
    Cochain r = *this;
    for (int i = 0; i < size(); ++i) r.s_set(i, s_at(i) * s);
    return r;
}

Cochain Cochain::operator*(const Cochain& o) const {
    require_compatible(*this, o);
    if (coeffs_ != Coefficients::Cx) raise("BadCoefficients", "* is for multiplicative cochains");
    Cochain r = *this;
    for (int i = 0; i < size(); ++i) r.s_set(i, s_at(i) * o.s_at(i));
    return r;
}

Cochain cech_differential(const Cochain& c) {
    const CoverNerve& nerve = c.nerve();
    int p = c.degree();
    Cochain out = Cochain::neutral(c.nerve_ptr(), p + 1, c.coefficients(), c.mode());
    const auto& faces = nerve.simplices(p + 1);
    for (size_t s = 0; s < faces.size(); ++s) {
        const std::vector<int>& simplex = faces[s];
        if (c.coefficients() == Coefficients::Z) {
            mpz_class acc = 0;
            std::vector<int> sub;
            for (size_t drop = 0; drop < simplex.size(); ++drop) {
                sub.clear();
                for (size_t k = 0; k < simplex.size(); ++k)
                    if (k != drop) sub.push_back(simplex[k]);
                int idx = nerve.simplex_index(p, sub);
                if (idx < 0) raise("BadSimplex", "nerve is not downward closed");
                if (drop % 2 == 0)
                    acc += c.z_at(idx);
                else
                    acc -= c.z_at(idx);
            }
            out.z_set(static_cast<int>(s), std::move(acc));
        } else {
            bool mult = c.coefficients() == Coefficients::Cx;
            Scalar acc = mult ? Scalar::one(c.mode()) : Scalar::zero(c.mode());
            std::vector<int> sub;
            for (size_t drop = 0; drop < simplex.size(); ++drop) {
                sub.clear();
                for (size_t k = 0; k < simplex.size(); ++k)
                    if (k != drop) sub.push_back(simplex[k]);
                int idx = nerve.simplex_index(p, sub);
                if (idx < 0) raise("BadSimplex", "nerve is not downward closed");
                Scalar v = c.s_at(idx);
                if (mult)
                    acc = drop % 2 == 0 ? acc * v : acc * v.inverse();
                else
                    acc = drop % 2 == 0 ? acc + v : acc - v;
            }
            out.s_set(static_cast<int>(s), acc);
        }
    }
    return out;
}

} // namespace nonabcoh::cech
