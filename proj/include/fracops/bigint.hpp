#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fracops {

/// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
///
/// Division truncates toward zero and the remainder carries the sign of the
/// dividend, matching built-in integer semantics.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);
    explicit BigInt(std::string_view decimal); // optional leading '-', digits

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;
    /// -1, 0 or +1.
    int sign() const { return sign_; }

    BigInt abs() const;
    BigInt operator-() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
    BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

    /// quotient and remainder in one pass; q truncated toward zero.
    static void divmod(const BigInt& n, const BigInt& d, BigInt& q, BigInt& r);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    // little-endian limbs, no leading zeros; empty iff sign_ == 0
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    static BigInt from_mag(int sign, std::vector<std::uint32_t> mag);
    friend int cmp(const BigInt& a, const BigInt& b);
};

/// gcd(a, b) >= 0; gcd(0, 0) == 0.
BigInt gcd(BigInt a, BigInt b);
BigInt pow(BigInt base, unsigned long long exp);

} // namespace fracops
