#ifndef POLCURVE_BIGINT_HPP
#define POLCURVE_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace polcurve {

// Arbitrary-precision signed integer, sign-magnitude with base 2^32 limbs.
// Sized for lattice normal forms and spanning-tree counts of desk-scale
// graphs; all operations are schoolbook.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);

    static BigInt from_string(const std::string& text);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

    // Throws std::overflow_error if the value does not fit.
    long long to_long_long() const;
    bool fits_long_long() const;
    std::string to_string() const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }

    // Truncated division (C semantics): quotient rounds toward zero and the
    // remainder carries the sign of the dividend. Throws on zero divisor.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

private:
    int sign_ = 0;                 // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian, no trailing zero limbs

    void trim();
    static int compare_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

BigInt gcd(BigInt a, BigInt b);

}  // namespace polcurve

#endif
