#include "nonabcoh/numkit/rational.hpp"

#include "nonabcoh/error.hpp"

namespace nonabcoh::numkit {

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
    if (re_.get_den() == 0 || im_.get_den() == 0)
        raise("BadRational", "zero denominator");
    re_.canonicalize();
    im_.canonicalize();
}

mpq_class GaussianRational::parse_rational(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0)
        raise("BadRational", "cannot parse rational '" + text + "'");
    if (q.get_den() == 0)
        raise("BadRational", "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero())
        raise("DivisionByZero", "inverse of zero in Q(i)");
    mpq_class n = norm_squared();
    return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    return *this * o.inverse();
}

} // namespace nonabcoh::numkit
