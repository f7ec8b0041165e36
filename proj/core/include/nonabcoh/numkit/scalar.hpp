#pragma once

#include <complex>
#include <variant>

#include "nonabcoh/numkit/rational.hpp"

namespace nonabcoh::numkit {

enum class Mode { exact, floating };

/// A complex scalar in one of two arithmetic modes: exact Q(i) or
/// double-precision floating point.  Modes never mix implicitly: any
/// binary operation on scalars of different modes throws ModeMismatch.
/// There is deliberately no operator== — exact values compare with
/// equals(), floating values with approx_equal() and a tolerance.
class Scalar {
public:
    Scalar() : value_(GaussianRational{}) {}

    static Scalar exact(GaussianRational v) { return Scalar(std::move(v)); }
    static Scalar exact(long v) { return Scalar(GaussianRational(v)); }
    static Scalar floating(std::complex<double> v) { return Scalar(v); }
    static Scalar zero(Mode mode);
    static Scalar one(Mode mode);

    Mode mode() const {
        return std::holds_alternative<GaussianRational>(value_) ? Mode::exact
                                                                : Mode::floating;
    }

    const GaussianRational& exact_value() const;
    std::complex<double> float_value() const;

    /// Numeric value regardless of mode (exact values are rounded).
    std::complex<double> to_complex() const;

    bool is_zero() const;              // exact: literal; floating: bit zero
    bool approx_zero(double tol) const;

    bool equals(const Scalar& o) const;            // exact mode only
    bool approx_equal(const Scalar& o, double tol) const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar conj() const;
    double abs() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

private:
    explicit Scalar(GaussianRational v) : value_(std::move(v)) {}
    explicit Scalar(std::complex<double> v) : value_(v) {}

    std::variant<GaussianRational, std::complex<double>> value_;
};

/// Throws ModeMismatch unless both scalars share a mode.
void require_same_mode(const Scalar& a, const Scalar& b);

} // namespace nonabcoh::numkit
