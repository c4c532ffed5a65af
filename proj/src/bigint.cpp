#include "fracops/bigint.hpp"

#include <bit>
#include <cassert>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace fracops {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using Mag = std::vector<u32>;

constexpr u64 kBase = u64{1} << 32;

void trim(Mag& v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

int cmp_mag(const Mag& a, const Mag& b) {
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

Mag add_mag(const Mag& a, const Mag& b) {
    const Mag& lo = a.size() < b.size() ? a : b;
    const Mag& hi = a.size() < b.size() ? b : a;
    Mag out(hi.size() + 1, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        u64 cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out[i] = static_cast<u32>(cur);
        carry = cur >> 32;
    }
    out[hi.size()] = static_cast<u32>(carry);
    trim(out);
    return out;
}

// requires |a| >= |b|
Mag sub_mag(const Mag& a, const Mag& b) {
    Mag out(a.size(), 0);
    i64 borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        i64 cur = static_cast<i64>(a[i]) - borrow - (i < b.size() ? static_cast<i64>(b[i]) : 0);
        borrow = cur < 0;
        if (cur < 0)
            cur += static_cast<i64>(kBase);
        out[i] = static_cast<u32>(cur);
    }
    assert(borrow == 0);
    trim(out);
    return out;
}

Mag mul_mag(const Mag& a, const Mag& b) {
    if (a.empty() || b.empty())
        return {};
    Mag out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            u64 cur = static_cast<u64>(out[i + j]) + static_cast<u64>(a[i]) * b[j] + carry;
            out[i + j] = static_cast<u32>(cur);
            carry = cur >> 32;
        }
        out[i + b.size()] = static_cast<u32>(carry);
    }
    trim(out);
    return out;
}

void divmod_small(const Mag& u, u32 d, Mag& q, u32& r) {
    q.assign(u.size(), 0);
    u64 rem = 0;
    for (std::size_t i = u.size(); i-- > 0;) {
        u64 cur = (rem << 32) | u[i];
        q[i] = static_cast<u32>(cur / d);
        rem = cur % d;
    }
    trim(q);
    r = static_cast<u32>(rem);
}

// Knuth algorithm D; requires |u| >= |v| and v.size() >= 2.
void divmod_knuth(const Mag& u_in, const Mag& v_in, Mag& q, Mag& r) {
    const std::size_t n = v_in.size();
    const std::size_t m = u_in.size() - n;
    const int s = std::countl_zero(v_in.back());

    Mag v(n), u(u_in.size() + 1, 0);
    if (s == 0) {
        v = v_in;
        for (std::size_t i = 0; i < u_in.size(); ++i)
            u[i] = u_in[i];
    } else {
        for (std::size_t i = n; i-- > 1;)
            v[i] = (v_in[i] << s) | (v_in[i - 1] >> (32 - s));
        v[0] = v_in[0] << s;
        u[u_in.size()] = u_in.back() >> (32 - s);
        for (std::size_t i = u_in.size(); i-- > 1;)
            u[i] = (u_in[i] << s) | (u_in[i - 1] >> (32 - s));
        u[0] = u_in[0] << s;
    }

    q.assign(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        u64 top = (static_cast<u64>(u[j + n]) << 32) | u[j + n - 1];
        u64 qhat = top / v[n - 1];
        u64 rhat = top % v[n - 1];
        while (qhat >= kBase ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase)
                break;
        }

        // u[j .. j+n] -= qhat * v
        u64 carry = 0;
        i64 borrow = 0;
        for (std::size_t i = 0; i < n; ++i) {
            u64 p = qhat * v[i] + carry;
            carry = p >> 32;
            i64 t = static_cast<i64>(u[i + j]) - static_cast<i64>(static_cast<u32>(p)) - borrow;
            borrow = t < 0;
            if (t < 0)
                t += static_cast<i64>(kBase);
            u[i + j] = static_cast<u32>(t);
        }
        i64 t = static_cast<i64>(u[j + n]) - static_cast<i64>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large; add v back
            u[j + n] = static_cast<u32>(t + static_cast<i64>(kBase));
            --qhat;
            u64 c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                u64 sum = static_cast<u64>(u[i + j]) + v[i] + c;
                u[i + j] = static_cast<u32>(sum);
                c = sum >> 32;
            }
            u[j + n] = static_cast<u32>(u[j + n] + c);
        } else {
            u[j + n] = static_cast<u32>(t);
        }
        q[j] = static_cast<u32>(qhat);
    }
    trim(q);

    r.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        r[i] = s == 0 ? u[i] : (u[i] >> s) | (static_cast<u64>(u[i + 1]) << (32 - s));
    trim(r);
}

void divmod_mag(const Mag& u, const Mag& v, Mag& q, Mag& r) {
    if (v.empty())
        throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(u, v) < 0) {
        q.clear();
        r = u;
        return;
    }
    if (v.size() == 1) {
        u32 rem = 0;
        divmod_small(u, v[0], q, rem);
        r.clear();
        if (rem)
            r.push_back(rem);
        return;
    }
    divmod_knuth(u, v, q, r);
}

} // namespace

BigInt BigInt::from_mag(int sign, Mag mag) {
    BigInt out;
    trim(mag);
    out.mag_ = std::move(mag);
    out.sign_ = out.mag_.empty() ? 0 : sign;
    return out;
}

BigInt::BigInt(long long value) {
    if (value == 0)
        return;
    sign_ = value < 0 ? -1 : 1;
    u64 mag = value < 0 ? 0 - static_cast<u64>(value) : static_cast<u64>(value);
    mag_.push_back(static_cast<u32>(mag));
    if (mag >> 32)
        mag_.push_back(static_cast<u32>(mag >> 32));
}

BigInt::BigInt(std::string_view decimal) {
    std::string_view s = decimal;
    int sign = 1;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        sign = s[0] == '-' ? -1 : 1;
        s.remove_prefix(1);
    }
    if (s.empty())
        throw std::invalid_argument("BigInt: empty numeral");
    for (char c : s)
        if (c < '0' || c > '9')
            throw std::invalid_argument("BigInt: bad digit in numeral");

    Mag acc;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t chunk_len = std::min<std::size_t>(9, s.size() - pos);
        u32 chunk = 0;
        u32 scale = 1;
        for (std::size_t i = 0; i < chunk_len; ++i) {
            chunk = chunk * 10 + static_cast<u32>(s[pos + i] - '0');
            scale *= 10;
        }
        pos += chunk_len;
        // acc = acc * scale + chunk
        u64 carry = chunk;
        for (auto& limb : acc) {
            u64 cur = static_cast<u64>(limb) * scale + carry;
            limb = static_cast<u32>(cur);
            carry = cur >> 32;
        }
        if (carry)
            acc.push_back(static_cast<u32>(carry));
    }
    trim(acc);
    mag_ = std::move(acc);
    sign_ = mag_.empty() ? 0 : sign;
}

bool BigInt::is_one() const {
    return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0)
        out.sign_ = 1;
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

int cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_)
        return a.sign_ < b.sign_ ? -1 : 1;
    int mc = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? mc : -mc;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    int c = cmp(a, b);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0)
        return b;
    if (b.sign_ == 0)
        return a;
    if (a.sign_ == b.sign_)
        return BigInt::from_mag(a.sign_, add_mag(a.mag_, b.mag_));
    int mc = cmp_mag(a.mag_, b.mag_);
    if (mc == 0)
        return BigInt{};
    return mc > 0 ? BigInt::from_mag(a.sign_, sub_mag(a.mag_, b.mag_))
                  : BigInt::from_mag(b.sign_, sub_mag(b.mag_, a.mag_));
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    return a + (-b);
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0)
        return BigInt{};
    return BigInt::from_mag(a.sign_ * b.sign_, mul_mag(a.mag_, b.mag_));
}

void BigInt::divmod(const BigInt& n, const BigInt& d, BigInt& q, BigInt& r) {
    Mag qm, rm;
    divmod_mag(n.mag_, d.mag_, qm, rm);
    q = BigInt::from_mag(n.sign_ * d.sign_, std::move(qm));
    r = BigInt::from_mag(n.sign_, std::move(rm));
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

std::string BigInt::str() const {
    if (sign_ == 0)
        return "0";
    Mag cur = mag_;
    std::string digits; // reversed 9-digit groups
    while (!cur.empty()) {
        Mag q;
        u32 rem = 0;
        divmod_small(cur, 1000000000u, q, rem);
        bool last = q.empty();
        std::string group = std::to_string(rem);
        if (!last)
            group.insert(group.begin(), 9 - group.size(), '0');
        digits.insert(0, group);
        cur = std::move(q);
    }
    return sign_ < 0 ? "-" + digits : digits;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.str();
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt pow(BigInt base, unsigned long long exp) {
    BigInt out{1};
    while (exp > 0) {
        if (exp & 1)
            out *= base;
        base *= base;
        exp >>= 1;
    }
    return out;
}

} // namespace fracops
