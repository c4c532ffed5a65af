#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fracops/errors.hpp"
#include "fracops/rational.hpp"

using fracops::BigInt;
using fracops::Rational;

namespace {
Rational rat(long long n, long long d) { return Rational{BigInt{n}, BigInt{d}}; }
} // namespace

TEST_CASE("canonicalization") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(2, 4).num() == BigInt{1});
    CHECK(rat(2, 4).den() == BigInt{2});
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(rat(3, -6).num() == BigInt{-1});
    CHECK(rat(0, 7) == Rational{0});
    CHECK(rat(0, -7).den() == BigInt{1});
    CHECK_THROWS_AS(rat(1, 0), fracops::zero_denominator_error);
}

TEST_CASE("arithmetic") {
    CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
    CHECK(rat(1, 2) - rat(1, 3) == rat(1, 6));
    CHECK(rat(2, 3) * rat(3, 4) == rat(1, 2));
    CHECK(rat(1, 2) / rat(1, 4) == Rational{2});
    CHECK(-rat(1, -2) == rat(1, 2));
    CHECK(rat(3, 7).reciprocal() == rat(7, 3));
    CHECK(rat(-3, 7).reciprocal() == rat(-7, 3));
    CHECK_THROWS_AS(rat(1, 2) / Rational{0}, fracops::zero_denominator_error);
    CHECK_THROWS_AS(Rational{0}.reciprocal(), fracops::zero_denominator_error);
}

TEST_CASE("comparison") {
    CHECK(rat(1, 3) < rat(1, 2));
    CHECK(rat(-1, 2) < rat(-1, 3));
    CHECK(rat(2, 1) > Rational{1});
    CHECK(rat(7, 7).is_one());
    CHECK(rat(0, 3).is_zero());
    CHECK(rat(4, 2).is_integer());
    CHECK(!rat(1, 2).is_integer());
    CHECK(rat(-1, 2).sign() == -1);
}

TEST_CASE("pow") {
    CHECK(rat(2, 3).pow(0) == Rational{1});
    CHECK(rat(2, 3).pow(3) == rat(8, 27));
    CHECK(rat(2, 3).pow(-2) == rat(9, 4));
    CHECK(rat(-1, 2).pow(2) == rat(1, 4));
    CHECK(rat(-1, 2).pow(3) == rat(-1, 8));
    CHECK_THROWS_AS(Rational{0}.pow(-1), fracops::zero_denominator_error);
}

TEST_CASE("parse and print") {
    CHECK(Rational::parse("3/4") == rat(3, 4));
    CHECK(Rational::parse("-3/4") == rat(-3, 4));
    CHECK(Rational::parse("3/-4") == rat(-3, 4));
    CHECK(Rational::parse("17") == Rational{17});
    CHECK(rat(9, 2).str() == "9/2");
    CHECK(rat(-9, 2).str() == "-9/2");
    CHECK(rat(8, 4).str() == "2");
    CHECK(Rational{0}.str() == "0");

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> dist(-100000, 100000);
    for (int i = 0; i < 2000; ++i) {
        long long d = dist(rng);
        if (d == 0)
            continue;
        Rational v = rat(dist(rng), d);
        CHECK(Rational::parse(v.str()) == v);
    }
}

TEST_CASE("field arithmetic laws on random values") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<long long> dist(-50, 50);
    auto gen = [&] {
        long long d = 0;
        while (d == 0)
            d = dist(rng);
        return rat(dist(rng), d);
    };
    for (int i = 0; i < 3000; ++i) {
        Rational a = gen(), b = gen(), c = gen();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational{0} == a);
        CHECK(a * Rational{1} == a);
        CHECK(a - a == Rational{0});
        if (!a.is_zero())
            CHECK(a * a.reciprocal() == Rational{1});
    }
}
