#include "nonabcoh/numkit/scalar.hpp"

#include "nonabcoh/error.hpp"

namespace nonabcoh::numkit {

Scalar Scalar::zero(Mode mode) {
    return mode == Mode::exact ? exact(GaussianRational{}) : floating({0.0, 0.0});
}

Scalar Scalar::one(Mode mode) {
    return mode == Mode::exact ? exact(GaussianRational{1}) : floating({1.0, 0.0});
}

const GaussianRational& Scalar::exact_value() const {
    if (mode() != Mode::exact)
        raise("ModeMismatch", "exact_value() on a floating scalar");
    return std::get<GaussianRational>(value_);
}

std::complex<double> Scalar::float_value() const {
    if (mode() != Mode::floating)
        raise("ModeMismatch", "float_value() on an exact scalar");
    return std::get<std::complex<double>>(value_);
}

std::complex<double> Scalar::to_complex() const {
    return mode() == Mode::exact ? exact_value().to_complex() : float_value();
}

bool Scalar::is_zero() const {
    return mode() == Mode::exact ? exact_value().is_zero()
                                 : float_value() == std::complex<double>{0.0, 0.0};
}

bool Scalar::approx_zero(double tol) const {
    return mode() == Mode::exact ? exact_value().is_zero() : std::abs(float_value()) <= tol;
}

bool Scalar::equals(const Scalar& o) const {
    if (mode() != Mode::exact || o.mode() != Mode::exact)
        raise("ModeMismatch", "equals() requires exact scalars; use approx_equal with a tolerance");
    return exact_value() == o.exact_value();
}

bool Scalar::approx_equal(const Scalar& o, double tol) const {
    require_same_mode(*this, o);
    if (mode() == Mode::exact) return exact_value() == o.exact_value();
    return std::abs(float_value() - o.float_value()) <= tol;
}

void require_same_mode(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode())
        raise("ModeMismatch", "mixed exact/floating scalar arithmetic is rejected");
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_mode(*this, o);
    if (mode() == Mode::exact) return exact(exact_value() + o.exact_value());
    return floating(float_value() + o.float_value());
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_mode(*this, o);
    if (mode() == Mode::exact) return exact(exact_value() - o.exact_value());
    return floating(float_value() - o.float_value());
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_mode(*this, o);
    if (mode() == Mode::exact) return exact(exact_value() * o.exact_value());
    return floating(float_value() * o.float_value());
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_mode(*this, o);
    if (mode() == Mode::exact) return exact(exact_value() / o.exact_value());
    if (o.is_zero()) raise("DivisionByZero", "floating scalar division by zero");
    return floating(float_value() / o.float_value());
}

Scalar Scalar::operator-() const {
    if (mode() == Mode::exact) return exact(-exact_value());
    return floating(-float_value());
}

Scalar Scalar::inverse() const {
    if (mode() == Mode::exact) return exact(exact_value().inverse());
    if (is_zero()) raise("DivisionByZero", "inverse of floating zero");
    return floating(1.0 / float_value());
}

Scalar Scalar::conj() const {
    if (mode() == Mode::exact) return exact(exact_value().conj());
    return floating(std::conj(float_value()));
}

double Scalar::abs() const {
    return std::abs(to_complex());
}

} // namespace nonabcoh::numkit
