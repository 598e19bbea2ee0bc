#ifndef POLCURVE_RATIONAL_HPP
#define POLCURVE_RATIONAL_HPP

#include <string>

#include "polcurve/bigint.hpp"

namespace polcurve {

// Exact rational, always stored reduced with a positive denominator.
// Half-integer boundary values are the business of this library, so no
// floating point appears anywhere.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    BigInt floor() const;
    BigInt ceil() const;

    // "p/q", or just "p" when integral.
    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

}  // namespace polcurve

#endif
