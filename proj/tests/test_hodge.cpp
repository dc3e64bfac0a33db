#include "ade/hodge.hpp"

#include <random>

#include "ade/errors.hpp"
#include "doctest.h"

using namespace ade;

TEST_CASE("mumford relations genus 1") {
    LambdaPoly l1 = LambdaPoly::lambda(1, 1);
    CHECK(mumford_reduce(l1 * l1).is_zero());
    CHECK(mumford_reduce(l1) == l1);
}

TEST_CASE("mumford relations genus 2") {
    LambdaPoly l1 = LambdaPoly::lambda(2, 1);
    LambdaPoly l2 = LambdaPoly::lambda(2, 2);
    // l1^2 -> 2 l2
    CHECK(mumford_reduce(l1 * l1) == l2 * RatFun(rat(2)));
    // l1^2 l2 -> 2 l2^2 -> 0
    CHECK(mumford_reduce(l1 * l1 * l2).is_zero());
    // l1 l2 is a normal-form fixed point
    CHECK(mumford_reduce(l1 * l2) == l1 * l2);
}

TEST_CASE("mumford relations genus 3 kill lambda squares") {
    LambdaPoly l1 = LambdaPoly::lambda(3, 1);
    LambdaPoly l2 = LambdaPoly::lambda(3, 2);
    LambdaPoly l3 = LambdaPoly::lambda(3, 3);
    CHECK(mumford_reduce(l3 * l3).is_zero());
    CHECK(mumford_reduce(l1 * l1) == l2 * RatFun(rat(2)));
    CHECK(mumford_reduce(l2 * l2) == l1 * l3 * RatFun(rat(2)));
    // (l1^2)^2 = 4 l2^2 = 8 l1 l3
    CHECK(mumford_reduce(l1 * l1 * l1 * l1) == l1 * l3 * RatFun(rat(8)));
    CHECK_THROWS_AS(LambdaPoly(4), UnsupportedGenus);
}

TEST_CASE("mumford_reduce is linear and idempotent on random polynomials") {
    std::mt19937 rng(77);
    for (int genus : {1, 2, 3}) {
        for (int trial = 0; trial < 15; ++trial) {
            LambdaPoly p(genus);
            for (int i = 0; i < 5; ++i) {
                LambdaMono m{static_cast<int>(rng() % 4), genus >= 2 ? static_cast<int>(rng() % 3) : 0,
                             genus >= 3 ? static_cast<int>(rng() % 3) : 0, 0};
                p.add_term(m, RatFun(rat(static_cast<long>(rng() % 9) - 4)));
            }
            LambdaPoly q(genus);
            for (int i = 0; i < 3; ++i) {
                LambdaMono m{static_cast<int>(rng() % 3), genus >= 2 ? static_cast<int>(rng() % 2) : 0, 0, 0};
                q.add_term(m, RatFun(rat(static_cast<long>(rng() % 5) - 2)));
            }
            CHECK(mumford_reduce(mumford_reduce(p)) == mumford_reduce(p));
            CHECK(mumford_reduce(p + q) == mumford_reduce(p) + mumford_reduce(q));
        }
    }
}

TEST_CASE("hodge values") {
    CHECK(hodge_value(1, LambdaMono{1, 0, 0, 0}) == rat(1, 24));
    CHECK(hodge_value(2, LambdaMono{1, 1, 0, 0}) == rat(1, 5760));
    CHECK(hodge_value(1, LambdaMono{2, 0, 0, 0}) == 0);  // reduces to zero first
    CHECK(hodge_value(2, LambdaMono{3, 0, 0, 0}) == rat(2, 5760));  // l1^3 = 2 l1 l2
    CHECK(psi_value_1_1() == rat(1, 24));
    CHECK_THROWS_AS(hodge_value(3, LambdaMono{1, 1, 1, 0}), UnknownIntegral);
}

TEST_CASE("moduli integration dimension filter") {
    // genus 1, n = 1: dim 1, so only the l1 term contributes
    LambdaPoly p = LambdaPoly::constant(1, RatFun(rat(7))) +
                   LambdaPoly::lambda(1, 1) * RatFun(rat(3));
    CHECK(integrate_moduli(p, 1) == RatFun(rat(3, 24)));
    // genus 2, n = 0: dim 3
    LambdaPoly q = LambdaPoly::lambda(2, 1) * LambdaPoly::lambda(2, 2) * RatFun(rat(-2));
    CHECK(integrate_moduli(q, 0) == RatFun(rat(-2, 5760)));
}
