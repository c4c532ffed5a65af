#include "fracops/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

#include "fracops/errors.hpp"

namespace fracops {

Rational::Rational(BigInt num, BigInt den) {
    if (den.is_zero())
        throw zero_denominator_error("Rational: zero denominator");
    if (num.is_zero()) {
        num_ = BigInt{};
        den_ = BigInt{1};
        return;
    }
    if (den.sign() < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational{BigInt{text}};
    return Rational{BigInt{text.substr(0, slash)}, BigInt{text.substr(slash + 1)}};
}

Rational Rational::operator-() const {
    return Rational{canonical_tag{}, -num_, den_};
}

Rational Rational::reciprocal() const {
    if (is_zero())
        throw zero_denominator_error("Rational: reciprocal of zero");
    return num_.sign() > 0 ? Rational{canonical_tag{}, den_, num_}
                           : Rational{canonical_tag{}, -den_, -num_};
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational{a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational{a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational{a.num_ * b.num_, a.den_ * b.den_};
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
        throw zero_denominator_error("Rational: division by zero");
    return Rational{a.num_ * b.den_, a.den_ * b.num_};
}

Rational Rational::pow(long long k) const {
    if (k == 0)
        return Rational{1};
    if (k < 0)
        return reciprocal().pow(-k);
    // num_ and den_ are coprime, so the powers are too
    auto e = static_cast<unsigned long long>(k);
    return Rational{canonical_tag{}, fracops::pow(num_, e), fracops::pow(den_, e)};
}

bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Rational::str() const {
    return den_.is_one() ? num_.str() : num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) {
    return os << v.str();
}

} // namespace fracops
