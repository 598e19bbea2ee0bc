#include "polcurve/rational.hpp"

#include <stdexcept>

namespace polcurve {

void Rational::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

BigInt Rational::floor() const {
    BigInt q, r;
    BigInt::divmod(num_, den_, q, r);
    if (r.sign() < 0) q -= BigInt(1);
    return q;
}

BigInt Rational::ceil() const {
    BigInt q, r;
    BigInt::divmod(num_, den_, q, r);
    if (r.sign() > 0) q += BigInt(1);
    return q;
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace polcurve
