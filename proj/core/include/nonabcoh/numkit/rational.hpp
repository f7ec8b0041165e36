#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace nonabcoh::numkit {

/// An element of Q(i): a complex number with rational real and imaginary
/// parts.  All arithmetic is exact; nothing here ever rounds.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long value) : re_(value), im_(0) {} // NOLINT(google-explicit-constructor)
    /// Components are canonicalized; a zero denominator is rejected.
    GaussianRational(mpq_class re, mpq_class im);

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    /// Parses a rational component string such as "-3/4" or "2".
    static mpq_class parse_rational(const std::string& text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    /// |z|^2 as an exact rational.
    mpq_class norm_squared() const { return re_ * re_ + im_ * im_; }

    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational operator+(const GaussianRational& o) const {
        return {re_ + o.re_, im_ + o.im_};
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return {re_ - o.re_, im_ - o.im_};
    }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational operator/(const GaussianRational& o) const;

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    /// Exact reciprocal; throws DivisionByZero on zero.
    GaussianRational inverse() const;

    std::complex<double> to_complex() const {
        return {re_.get_d(), im_.get_d()};
    }

    std::string re_string() const { return re_.get_str(); }
    std::string im_string() const { return im_.get_str(); }

private:
    mpq_class re_, im_;
};

} // namespace nonabcoh::numkit
