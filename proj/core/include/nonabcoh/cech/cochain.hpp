#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "nonabcoh/cech/nerve.hpp"
#include "nonabcoh/numkit/scalar.hpp"

namespace nonabcoh::cech {

enum class Coefficients { Z, C, Cx };

std::string to_string(Coefficients c);

using Scalar = numkit::Scalar;

/// A p-cochain on a nerve with coefficients in Z, C or the multiplicative
/// group Cx.  Values are stored on the sorted p-simplices only; the value
/// on any other ordering of a tuple is derived by the antisymmetry sign
/// (additive coefficients) or by inversion (multiplicative coefficients).
class Cochain {
public:
    Cochain() : degree_(0), coeffs_(Coefficients::Z) {}

    /// Zero cochain (Z/C) or all-ones cochain (Cx).
    static Cochain neutral(std::shared_ptr<const CoverNerve> nerve, int degree,
                           Coefficients coeffs,
                           numkit::Mode mode = numkit::Mode::exact);

    static Cochain from_integers(std::shared_ptr<const CoverNerve> nerve, int degree,
                                 std::vector<mpz_class> values);
    static Cochain from_scalars(std::shared_ptr<const CoverNerve> nerve, int degree,
                                Coefficients coeffs, std::vector<Scalar> values);

    const CoverNerve& nerve() const { return *nerve_; }
    std::shared_ptr<const CoverNerve> nerve_ptr() const { return nerve_; }
    int degree() const { return degree_; }
    Coefficients coefficients() const { return coeffs_; }
    /// Mode of scalar values (C/Cx); Z cochains report exact.
    numkit::Mode mode() const;
    int size() const;

    const mpz_class& z_at(int simplex) const;
    Scalar s_at(int simplex) const;
    void z_set(int simplex, mpz_class v);
    void s_set(int simplex, const Scalar& v);

    /// Value on an arbitrary ordering of a simplex tuple (sign/inverse rule).
    Scalar value_on(const std::vector<int>& tuple) const;

    bool is_neutral() const;
    bool approx_neutral(double tol) const;

    Cochain operator+(const Cochain& o) const; // additive coefficients only
    Cochain operator-(const Cochain& o) const;
    Cochain scaled(const Scalar& s) const;     // C coefficients only
    Cochain operator*(const Cochain& o) const; // multiplicative coefficients only

private:
    std::shared_ptr<const CoverNerve> nerve_;
    int degree_;
    Coefficients coeffs_;
    std::variant<std::vector<mpz_class>, std::vector<numkit::Scalar>> values_;
};

/// Alternating-sum coboundary (alternating product for Cx); d o d is
/// neutral on the nose.
Cochain cech_differential(const Cochain& c);

} // namespace nonabcoh::cech
