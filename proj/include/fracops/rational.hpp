#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fracops/bigint.hpp"

namespace fracops {

/// Exact rational number in canonical form: gcd(num, den) == 1, den > 0,
/// zero is 0/1. Two Rationals are equal iff their fields are equal.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(BigInt value) : num_(std::move(value)), den_(1) {}
    Rational(BigInt num, BigInt den); // throws zero_denominator_error if den == 0

    /// "p/q" or a bare integer "p".
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational reciprocal() const; // throws zero_denominator_error on zero

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    /// t^k; negative k inverts (throws on zero base).
    Rational pow(long long k) const;

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p/q", or "p" when the value is an integer.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    BigInt num_;
    BigInt den_;

    struct canonical_tag {};
    Rational(canonical_tag, BigInt num, BigInt den)
        : num_(std::move(num)), den_(std::move(den)) {}
};

} // namespace fracops
