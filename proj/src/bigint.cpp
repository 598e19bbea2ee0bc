#include "polcurve/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace polcurve {

BigInt::BigInt(long long value) {
    if (value == 0) return;
    sign_ = value < 0 ? -1 : 1;
    // Avoid overflow on LLONG_MIN by working in unsigned space.
    unsigned long long mag = value < 0
        ? ~static_cast<unsigned long long>(value) + 1ull
        : static_cast<unsigned long long>(value);
    while (mag != 0) {
        mag_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffull));
        mag >>= 32;
    }
}

BigInt BigInt::from_string(const std::string& text) {
    BigInt result;
    std::size_t i = 0;
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') sign = -1;
        ++i;
    }
    if (i == text.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt ten(10);
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("BigInt: bad digit in numeral");
        result *= ten;
        result += BigInt(text[i] - '0');
    }
    if (sign < 0) result = -result;
    return result;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        std::uint64_t sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffull));
        carry = sum >> 32;
    }
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(out[i]) - borrow -
                            (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        borrow = diff < 0 ? 1 : 0;
        if (diff < 0) diff += (1ll << 32);
        out[i] = static_cast<std::uint32_t>(diff);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) { *this = rhs; return *this; }
    if (sign_ == rhs.sign_) {
        mag_ = add_mag(mag_, rhs.mag_);
        return *this;
    }
    int cmp = compare_mag(mag_, rhs.mag_);
    if (cmp == 0) { sign_ = 0; mag_.clear(); return *this; }
    if (cmp > 0) {
        mag_ = sub_mag(mag_, rhs.mag_);
    } else {
        mag_ = sub_mag(rhs.mag_, mag_);
        sign_ = rhs.sign_;
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (sign_ == 0 || rhs.sign_ == 0) { sign_ = 0; mag_.clear(); return *this; }
    std::vector<std::uint32_t> out(mag_.size() + rhs.mag_.size(), 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.mag_.size() || carry; ++j) {
            std::uint64_t cur = out[i + j] + carry;
            if (j < rhs.mag_.size())
                cur += static_cast<std::uint64_t>(mag_[i]) * rhs.mag_[j];
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
    }
    mag_ = std::move(out);
    sign_ *= rhs.sign_;
    trim();
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (compare_mag(a.mag_, b.mag_) < 0) {
        q = BigInt();
        r = a;
        return;
    }
    // Binary long division on magnitudes; plenty at the scales we handle.
    std::size_t abits = a.mag_.size() * 32;
    std::vector<std::uint32_t> quot((a.mag_.size()), 0);
    BigInt rem;
    rem.sign_ = 0;
    for (std::size_t bit = abits; bit-- > 0;) {
        // rem = rem*2 + bit_of_a
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < rem.mag_.size(); ++i) {
            std::uint32_t next = rem.mag_[i] >> 31;
            rem.mag_[i] = (rem.mag_[i] << 1) | carry;
            carry = next;
        }
        if (carry) rem.mag_.push_back(carry);
        if ((a.mag_[bit / 32] >> (bit % 32)) & 1u) {
            if (rem.mag_.empty()) rem.mag_.push_back(1u);
            else {
                std::uint64_t sum = static_cast<std::uint64_t>(rem.mag_[0]) + 1;
                rem.mag_[0] = static_cast<std::uint32_t>(sum & 0xffffffffull);
                std::uint64_t c = sum >> 32;
                for (std::size_t i = 1; c && i < rem.mag_.size(); ++i) {
                    std::uint64_t s = static_cast<std::uint64_t>(rem.mag_[i]) + c;
                    rem.mag_[i] = static_cast<std::uint32_t>(s & 0xffffffffull);
                    c = s >> 32;
                }
                if (c) rem.mag_.push_back(static_cast<std::uint32_t>(c));
            }
        }
        if (compare_mag(rem.mag_, b.mag_) >= 0) {
            rem.mag_ = sub_mag(rem.mag_, b.mag_);
            quot[bit / 32] |= (1u << (bit % 32));
        }
    }
    q.mag_ = std::move(quot);
    q.sign_ = 1;
    q.trim();
    rem.sign_ = rem.mag_.empty() ? 0 : 1;
    r = std::move(rem);
    // Fix signs for truncated division.
    if (!q.is_zero()) q.sign_ = a.sign_ * b.sign_;
    if (!r.is_zero()) r.sign_ = a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int cmp = BigInt::compare_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? cmp < 0 : cmp > 0;
}

bool BigInt::fits_long_long() const {
    if (mag_.size() > 2) return false;
    unsigned long long v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    if (sign_ >= 0) return v <= 0x7fffffffffffffffull;
    return v <= 0x8000000000000000ull;
}

long long BigInt::to_long_long() const {
    if (!fits_long_long()) throw std::overflow_error("BigInt: value exceeds long long");
    unsigned long long v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    if (sign_ < 0) return -static_cast<long long>(v - 1) - 1;
    return static_cast<long long>(v);
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    BigInt value = abs();
    BigInt base(1000000000ll);
    while (!value.is_zero()) {
        BigInt q, r;
        divmod(value, base, q, r);
        long long chunk = r.is_zero() ? 0 : r.to_long_long();
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        value = q;
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

}  // namespace polcurve
