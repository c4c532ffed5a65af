#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fracops/relations.hpp"

using namespace fracops;

namespace {
Rational rat(long long n, long long d) { return Rational{BigInt{n}, BigInt{d}}; }
} // namespace

TEST_CASE("relation names parse and print") {
    auto r = RelationId::parse("add=mul");
    REQUIRE(r);
    CHECK(r->kind == RelationKind::Agreement);
    CHECK(r->name() == "add=mul");

    // unordered: both spellings canonicalize the same way
    CHECK(RelationId::parse("mul=add")->name() == "add=mul");
    CHECK(RelationId::agreement(OpKind::DualMul, OpKind::Add).name() == "add=dmul");

    auto k = RelationId::parse("dadd1=0");
    REQUIRE(k);
    CHECK(k->kind == RelationKind::Kernel);
    CHECK(k->op_a == OpKind::DualAdd1);

    auto c = RelationId::parse("comm:dadd2");
    REQUIRE(c);
    CHECK(c->kind == RelationKind::Commutes);

    CHECK(!RelationId::parse("add"));
    CHECK(!RelationId::parse("add=add"));
    CHECK(!RelationId::parse("foo=bar"));
}

TEST_CASE("agrees") {
    CHECK(agrees(OpKind::Add, OpKind::Mul, make_rep(3, 1), make_rep(3, 2)) ==
          Outcome::Holds);
    CHECK(agrees(OpKind::Add, OpKind::DualMul, make_rep(2, 1), make_rep(-2, 1)) ==
          Outcome::Holds);
    CHECK(agrees(OpKind::Mul, OpKind::DualMul, make_rep(1, 2), make_rep(2, 1)) ==
          Outcome::Holds);
    CHECK(agrees(OpKind::Add, OpKind::DualMul, make_rep(1, 2), make_rep(1, 3)) ==
          Outcome::Fails);

    // one side undefined -> Fails; both undefined -> Undefined
    CHECK(agrees(OpKind::Add, OpKind::DualMul, make_rep(1, 1), make_rep(1, -1)) ==
          Outcome::Fails);
    CHECK(agrees(OpKind::DualMul, OpKind::DualAdd1, make_rep(1, 1), make_rep(1, -1)) ==
          Outcome::Undefined);

    // symmetric in the two operations
    for (OpKind a : kAllOps)
        for (OpKind b : kAllOps)
            CHECK(agrees(a, b, make_rep(2, 3), make_rep(-1, 4)) ==
                  agrees(b, a, make_rep(2, 3), make_rep(-1, 4)));
}

TEST_CASE("proportional") {
    Rational two{2};
    CHECK(proportional(OpKind::Add, OpKind::Mul, two, make_rep(1, 1), make_rep(1, 1)) ==
          Outcome::Holds);
    CHECK(proportional(OpKind::Add, OpKind::DualMul, Rational{3}, make_rep(1, 2),
                       make_rep(1, 3)) == Outcome::Fails);
    CHECK_THROWS_AS(proportional(OpKind::Add, OpKind::Mul, Rational{0}, make_rep(1, 1),
                                 make_rep(1, 1)),
                    std::invalid_argument);

    // lambda = 1 degenerates to agreement, everywhere on a small grid
    Rational one{1};
    for (long long a = -2; a <= 2; ++a)
        for (long long b = 1; b <= 2; ++b)
            for (long long al = -2; al <= 2; ++al)
                for (long long be = 1; be <= 2; ++be)
                    CHECK(proportional(OpKind::Add, OpKind::Mul, one, make_rep(a, b),
                                       make_rep(al, be)) ==
                          agrees(OpKind::Add, OpKind::Mul, make_rep(a, b),
                                 make_rep(al, be)));
}

TEST_CASE("kernel") {
    CHECK(kernel(OpKind::DualAdd1, make_rep(1, 1), make_rep(-1, 2)) == Outcome::Holds);
    CHECK(kernel_line_form_holds(make_rep(1, 1), make_rep(-1, 2)));
    // -(b/beta^2) x - b/beta^2 = -(1/4)*1 - 1/4 = -1/2 = value(y)
    CHECK(value_of(make_rep(-1, 2)) == rat(-1, 2));

    // alpha = -b kills the second factor of the dadd2 kernel for any beta
    for (long long be = 1; be <= 3; ++be)
        CHECK(kernel(OpKind::DualAdd2, make_rep(1, 2), make_rep(-2, be)) ==
              Outcome::Holds);

    CHECK(kernel(OpKind::Add, make_rep(1, 2), make_rep(-1, 2)) == Outcome::Holds);
    CHECK(kernel(OpKind::Add, make_rep(1, 2), make_rep(-2, 4)) == Outcome::Holds);
    CHECK(kernel(OpKind::Add, make_rep(1, 2), make_rep(1, 2)) == Outcome::Fails);
    CHECK(kernel(OpKind::DualAdd1, make_rep(1, 2), make_rep(1, -2)) ==
          Outcome::Undefined);
}

TEST_CASE("commutes") {
    CHECK(commutes(OpKind::DualAdd1, make_rep(2, 1), make_rep(1, 2)) == Outcome::Holds);

    // a genuine non-commuting witness must exist in the small grid
    bool found = false;
    long long wa = 0, wb = 0, wal = 0, wbe = 0;
    for (long long a = -4; a <= 4 && !found; ++a)
        for (long long b = 1; b <= 4 && !found; ++b)
            for (long long al = -4; al <= 4 && !found; ++al)
                for (long long be = 1; be <= 4 && !found; ++be)
                    if (commutes(OpKind::DualAdd1, make_rep(a, b), make_rep(al, be)) ==
                        Outcome::Fails) {
                        found = true;
                        wa = a; wb = b; wal = al; wbe = be;
                    }
    REQUIRE(found);
    FracRep x = make_rep(wa, wb), y = make_rep(wal, wbe);
    CHECK(value_of(apply(OpKind::DualAdd1, x, y)) !=
          value_of(apply(OpKind::DualAdd1, y, x)));

    // eq-style addition is symmetric
    for (long long a = -2; a <= 2; ++a)
        for (long long al = -2; al <= 2; ++al)
            CHECK(commutes(OpKind::Add, make_rep(a, 3), make_rep(al, 2)) ==
                  Outcome::Holds);

    CHECK(commutes(OpKind::DualAdd1, make_rep(1, 1), make_rep(1, -1)) ==
          Outcome::Undefined);
}

TEST_CASE("printed conditions") {
    auto add_dmul = RelationId::agreement(OpKind::Add, OpKind::DualMul);
    CHECK(printed_condition(add_dmul, make_rep(2, 1), make_rep(-2, 1)) == true);
    CHECK(printed_condition(add_dmul, make_rep(1, 2), make_rep(1, 3)) == false);

    // the claimed dadd1 commutativity form misfires at (2/1, 1/2): both orders
    // give 5/3, the form says 1 != 3
    auto comm1 = RelationId::commutes(OpKind::DualAdd1);
    CHECK(commutes(OpKind::DualAdd1, make_rep(2, 1), make_rep(1, 2)) == Outcome::Holds);
    CHECK(printed_condition(comm1, make_rep(2, 1), make_rep(1, 2)) == false);

    // garbled forms are unavailable
    CHECK(!printed_condition(RelationId::agreement(OpKind::Add, OpKind::DualAdd2),
                             make_rep(1, 1), make_rep(1, 1)));
    CHECK(!printed_condition(RelationId::agreement(OpKind::Mul, OpKind::DualAdd1),
                             make_rep(1, 1), make_rep(1, 1)));
    CHECK(!printed_form_available(RelationId::kernel(OpKind::DualMul)));
    Rational lam{2};
    CHECK(!printed_condition(RelationId::proportional(OpKind::Add, OpKind::DualAdd2),
                             make_rep(1, 1), make_rep(1, 1), &lam));
    CHECK(!printed_condition(RelationId::proportional(OpKind::Mul, OpKind::DualAdd2),
                             make_rep(1, 1), make_rep(1, 1), &lam));
    // never-stated pairs have no form either
    CHECK(!printed_form_available(
        RelationId::agreement(OpKind::DualMul, OpKind::DualAdd1)));
}

TEST_CASE("agreement iff printed form, exhaustively") {
    auto add_dmul = RelationId::agreement(OpKind::Add, OpKind::DualMul);
    auto add_mul = RelationId::agreement(OpKind::Add, OpKind::Mul);
    auto mul_dmul = RelationId::agreement(OpKind::Mul, OpKind::DualMul);
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b)
            for (long long al = -3; al <= 3; ++al)
                for (long long be = -3; be <= 3; ++be) {
                    if (b == 0 || be == 0)
                        continue;
                    FracRep x = make_rep(a, b), y = make_rep(al, be);
                    for (const auto& rel : {add_dmul, add_mul, mul_dmul}) {
                        if (!try_apply(rel.op_a, x, y) || !try_apply(rel.op_b, x, y))
                            continue;
                        Outcome def = agrees(rel.op_a, rel.op_b, x, y);
                        CHECK((def == Outcome::Holds) == *printed_condition(rel, x, y));
                    }
                    // alpha == beta never yields add=mul agreement
                    if (al == be)
                        CHECK(agrees(OpKind::Add, OpKind::Mul, x, y) == Outcome::Fails);
                }
}

TEST_CASE("kernel characterizations, exhaustively") {
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b)
            for (long long al = -3; al <= 3; ++al)
                for (long long be = -3; be <= 3; ++be) {
                    if (b == 0 || be == 0 || b + be == 0)
                        continue;
                    FracRep x = make_rep(a, b), y = make_rep(al, be);
                    Rational A{a}, B{b}, AL{al}, BE{be};
                    CHECK((kernel(OpKind::DualAdd1, x, y) == Outcome::Holds) ==
                          (A + BE * AL + B).is_zero());
                    CHECK((kernel(OpKind::DualAdd2, x, y) == Outcome::Holds) ==
                          ((A + BE) * (AL + B)).is_zero());
                    CHECK((kernel(OpKind::Add, x, y) == Outcome::Holds) ==
                          (value_of(y) == -value_of(x)));
                    CHECK((kernel(OpKind::Mul, x, y) == Outcome::Holds) ==
                          (value_of(x).is_zero() || value_of(y).is_zero()));
                    if (kernel(OpKind::DualAdd1, x, y) == Outcome::Holds)
                        CHECK(kernel_line_form_holds(x, y));
                }
}

TEST_CASE("solve_partner") {
    auto y1 = solve_partner(make_rep(1, 1), Rational{2});
    REQUIRE(y1);
    CHECK(*y1 == Rational{1});

    CHECK(!solve_partner(make_rep(1, 2), Rational{2})); // x == 1/lambda

    auto y3 = solve_partner(make_rep(3, 1), Rational{1});
    REQUIRE(y3);
    CHECK(*y3 == rat(3, 2));

    // partner then proportional round trip
    const Rational lams[] = {Rational{-1}, Rational{2}, rat(1, 2)};
    for (const Rational& lam : lams)
        for (long long a = -4; a <= 4; ++a)
            for (long long b = 1; b <= 4; ++b) {
                FracRep x = make_rep(a, b);
                auto partner = solve_partner(x, lam);
                if (!partner)
                    continue;
                FracRep y{*partner, Rational{1}};
                CHECK(proportional(OpKind::Add, OpKind::Mul, lam, x, y) ==
                      Outcome::Holds);
            }
}

TEST_CASE("harmonic mean") {
    CHECK(harmonic_mean(Rational{2}, Rational{3}) == rat(12, 5));
    for (long long b = 1; b <= 5; ++b)
        CHECK(harmonic_mean(Rational{b}, Rational{b}) == Rational{b});
    CHECK_THROWS_AS(harmonic_mean(Rational{2}, Rational{-2}), std::domain_error);
    CHECK_THROWS_AS(harmonic_mean(Rational{0}, Rational{1}), std::domain_error);

    // dadd2 on zero fractions gives half the harmonic mean of the denominators
    for (long long b = 1; b <= 6; ++b)
        for (long long be = 1; be <= 6; ++be) {
            Value v = value_of(apply(OpKind::DualAdd2, make_rep(0, b), make_rep(0, be)));
            CHECK(v == rat(b * be, b + be));
            CHECK(v == harmonic_mean(Rational{b}, Rational{be}) * rat(1, 2));
        }
}

TEST_CASE("dadd2 commutes at every defined point") {
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b)
            for (long long al = -3; al <= 3; ++al)
                for (long long be = -3; be <= 3; ++be) {
                    if (b == 0 || be == 0 || b + be == 0)
                        continue;
                    CHECK(commutes(OpKind::DualAdd2, make_rep(a, b), make_rep(al, be)) ==
                          Outcome::Holds);
                }
}
