#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "fracops/bigint.hpp"

using fracops::BigInt;

namespace {

BigInt from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v)
                                : static_cast<unsigned __int128>(v);
    BigInt out{0};
    const BigInt base{1LL << 32};
    for (int shift = 96; shift >= 0; shift -= 32)
        out = out * base +
              BigInt{static_cast<long long>(static_cast<std::uint32_t>(mag >> shift))};
    return neg ? -out : out;
}

} // namespace

TEST_CASE("construction and printing") {
    CHECK(BigInt{0}.str() == "0");
    CHECK(BigInt{-1}.str() == "-1");
    CHECK(BigInt{1234567890123456789LL}.str() == "1234567890123456789");
    CHECK(BigInt{"0"}.str() == "0");
    CHECK(BigInt{"-0"}.str() == "0");
    CHECK(BigInt{"000123"}.str() == "123");
    CHECK(BigInt{"-98765432109876543210987654321"}.str() ==
          "-98765432109876543210987654321");
    CHECK_THROWS_AS(BigInt{""}, std::invalid_argument);
    CHECK_THROWS_AS(BigInt{"12x4"}, std::invalid_argument);
}

TEST_CASE("known big values") {
    // 30! and 2^100
    BigInt fact{1};
    for (long long i = 2; i <= 30; ++i)
        fact *= BigInt{i};
    CHECK(fact.str() == "265252859812191058636308480000000");
    CHECK(fracops::pow(BigInt{2}, 100).str() == "1267650600228229401496703205376");
    CHECK((fracops::pow(BigInt{2}, 100) % BigInt{"1000000007"}).str() == "976371285");
}

TEST_CASE("arithmetic against long long") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<long long> dist(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 20000; ++i) {
        long long a = dist(rng), b = dist(rng);
        CHECK(BigInt{a} + BigInt{b} == BigInt{a + b});
        CHECK(BigInt{a} - BigInt{b} == BigInt{a - b});
        CHECK(BigInt{a} * BigInt{b} == BigInt{a * b});
        if (b != 0) {
            CHECK(BigInt{a} / BigInt{b} == BigInt{a / b});
            CHECK(BigInt{a} % BigInt{b} == BigInt{a % b});
        }
        CHECK((BigInt{a} < BigInt{b}) == (a < b));
        CHECK((BigInt{a} == BigInt{b}) == (a == b));
    }
}

TEST_CASE("division against __int128") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 20000; ++i) {
        __int128 n = static_cast<__int128>(rng()) * static_cast<long long>(rng() >> 16);
        __int128 d = static_cast<long long>(rng() >> (i % 3 == 0 ? 33 : 1));
        if (i % 2)
            n = -n;
        if (d == 0)
            continue;
        BigInt q = from_i128(n) / from_i128(d);
        BigInt r = from_i128(n) % from_i128(d);
        CHECK(q == from_i128(n / d));
        CHECK(r == from_i128(n % d));
    }
}

TEST_CASE("division corner patterns exercise the correction steps") {
    // limb patterns around the base hit the qhat adjustment and add-back paths
    const std::vector<unsigned long long> specials = {
        0ULL, 1ULL, 2ULL, 0x7fffffffULL, 0x80000000ULL, 0xfffffffeULL, 0xffffffffULL};
    for (auto hi : specials)
        for (auto mid : specials)
            for (auto lo : specials)
                for (auto dhi : specials)
                    for (auto dlo : specials) {
                        if (dhi == 0)
                            continue; // keep the divisor two limbs wide
                        __int128 n = ((static_cast<unsigned __int128>(hi) << 64)) +
                                     (static_cast<unsigned __int128>(mid) << 32) + lo;
                        __int128 d =
                            static_cast<__int128>((dhi << 32) + dlo);
                        BigInt bn = from_i128(n), bd = from_i128(d);
                        BigInt q, r;
                        BigInt::divmod(bn, bd, q, r);
                        CHECK(q == from_i128(n / d));
                        CHECK(r == from_i128(n % d));
                        CHECK(q * bd + r == bn);
                    }
}

TEST_CASE("four-by-three limb divisions reach the add-back correction") {
    // two-limb divisors make the trial quotient exact, so this sweep uses
    // three-limb divisors; patterns like u={0,0,2,0}, v={1,0,1} overshoot the
    // trial digit and force the correction step
    auto from_u128 = [](unsigned __int128 v) {
        BigInt out{0};
        const BigInt base{1LL << 32};
        for (int shift = 96; shift >= 0; shift -= 32)
            out = out * base +
                  BigInt{static_cast<long long>(static_cast<std::uint32_t>(v >> shift))};
        return out;
    };
    const std::vector<unsigned long long> sp = {
        0ULL, 1ULL, 2ULL, 0x7fffffffULL, 0x80000000ULL, 0xfffffffeULL, 0xffffffffULL};
    for (auto u3 : sp)
        for (auto u2 : sp)
            for (auto u1 : sp)
                for (auto u0 : sp)
                    for (auto v2 : sp)
                        for (auto v1 : sp)
                            for (auto v0 : {0ULL, 1ULL, 0xffffffffULL}) {
                                if (v2 == 0)
                                    continue;
                                unsigned __int128 n =
                                    (static_cast<unsigned __int128>(u3) << 96) |
                                    (static_cast<unsigned __int128>(u2) << 64) |
                                    (static_cast<unsigned __int128>(u1) << 32) | u0;
                                unsigned __int128 d =
                                    (static_cast<unsigned __int128>(v2) << 64) |
                                    (static_cast<unsigned __int128>(v1) << 32) | v0;
                                BigInt bn = from_u128(n), bd = from_u128(d);
                                BigInt q, r;
                                BigInt::divmod(bn, bd, q, r);
                                CHECK(q == from_u128(n / d));
                                CHECK(r == from_u128(n % d));
                            }
}

TEST_CASE("string round trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        BigInt v{static_cast<long long>(rng())};
        v = v * v * BigInt{static_cast<long long>(rng() % 1000 - 500)};
        CHECK(BigInt{v.str()} == v);
    }
}

TEST_CASE("gcd") {
    CHECK(fracops::gcd(BigInt{12}, BigInt{18}) == BigInt{6});
    CHECK(fracops::gcd(BigInt{-12}, BigInt{18}) == BigInt{6});
    CHECK(fracops::gcd(BigInt{0}, BigInt{5}) == BigInt{5});
    CHECK(fracops::gcd(BigInt{0}, BigInt{0}) == BigInt{0});
    BigInt big = fracops::pow(BigInt{2}, 90) * BigInt{3};
    CHECK(fracops::gcd(big, fracops::pow(BigInt{2}, 40) * BigInt{9}) ==
          fracops::pow(BigInt{2}, 40) * BigInt{3});
}
