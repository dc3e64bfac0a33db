#include <random>

#include "ade/cyclotomic.hpp"
#include "ade/errors.hpp"
#include "ade/poly.hpp"
#include "ade/ratfun.hpp"
#include "doctest.h"

using namespace ade;

TEST_CASE("rational basics") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-2, -4) == rat(1, 2));
    CHECK(rat(1, -3) == rat(-1, 3));
    CHECK(rat(1, 3).get_den() == 3);
    CHECK(rat_parse("7/3") == rat(7, 3));
    CHECK(factorial(5) == 120);
}

TEST_CASE("cyclotomic polynomial degrees") {
    CHECK(cyclo_degree(1) == 1);
    CHECK(cyclo_degree(4) == 2);
    CHECK(cyclo_degree(5) == 4);
    CHECK(cyclo_degree(8) == 4);
    CHECK(cyclo_degree(20) == 8);
    CHECK(cyclo_degree(120) == 32);
}

TEST_CASE("zeta_4 squared is -1") {
    Cyclo i = Cyclo::zeta(4);
    CHECK(i * i == Cyclo(rat(-1)));
    // via cyclo_normalize, the spec example: (N=4, [0,1]) squared
    Cyclo j = cyclo_normalize(4, {rat(0), rat(1)});
    CHECK(j * j == -Cyclo(rat(1)));
}

TEST_CASE("zeta_5 + zeta_5^4 satisfies x^2 + x - 1 = 0") {
    Cyclo u = Cyclo::zeta(5, 1) + Cyclo::zeta(5, 4);
    CHECK(u * u + u - Cyclo(rat(1)) == Cyclo());
}

TEST_CASE("degenerate field N=1 embeds rationals") {
    Cyclo r = cyclo_normalize(1, {rat(7, 3)});
    CHECK(r.is_rational());
    CHECK(r.rational_value() == rat(7, 3));
}

TEST_CASE("zeta^N reduces to 1") {
    for (int n : {3, 4, 6, 8, 12, 20}) {
        CHECK(Cyclo::zeta(n, n) == Cyclo(rat(1)));
        CHECK(Cyclo::zeta(n, 1) * Cyclo::zeta(n, n - 1) == Cyclo(rat(1)));
    }
}

TEST_CASE("cyclotomic field axioms on random small inputs") {
    std::mt19937 rng(12345);
    auto rnd = [&](int order) {
        std::vector<Rat> c(static_cast<size_t>(cyclo_degree(order)));
        for (Rat& x : c) x = rat(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
        return Cyclo::from_coeffs(order, c);
    };
    for (int order : {5, 8, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
            Cyclo a = rnd(order), b = rnd(order), c = rnd(order);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo(rat(1)));
            CHECK(a.conj().conj() == a);
        }
    }
}

TEST_CASE("cyclotomic promotion is consistent") {
    Cyclo w6 = Cyclo::zeta(6);
    Cyclo w12sq = Cyclo::zeta(12, 2);
    CHECK(w6.promoted(12) == w12sq);
    CHECK(w6 == w12sq);  // automatic promotion in comparison
    // conjugation commutes with promotion
    CHECK(w6.conj().promoted(12) == w12sq.conj());
}

TEST_CASE("floating embedding agrees with exact identities") {
    // diagnostic only: |2 sin(pi/5)|^2 = 2 - 2 cos(2 pi/5)
    Cyclo s = (Cyclo::zeta(20, 2) - Cyclo::zeta(20, 18)) * Cyclo::zeta(4, 3);
    auto z = s.to_complex();
    CHECK(std::abs(z.imag()) < 1e-12);
    CHECK(std::abs(z.real() - 2 * std::sin(M_PI / 5)) < 1e-12);
}

TEST_CASE("polynomial arithmetic and ordering") {
    Poly t1 = Poly::variable(Var::t1), t2 = Poly::variable(Var::t2);
    Poly p = (t1 + t2) * (t1 - t2);
    CHECK(p == t1 * t1 - t2 * t2);
    CHECK(p.total_degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK((t1 + Poly(rat(1))).is_homogeneous() == false);
    CHECK(p.to_string() == "t1^2 - t2^2");
}

TEST_CASE("polynomial gcd") {
    Poly t1 = Poly::variable(Var::t1), t2 = Poly::variable(Var::t2);
    Poly a = (t1 + t2) * (t1 + t2) * (t1 - t2);
    Poly b = (t1 + t2) * t1;
    Poly g = poly_gcd(a, b);
    CHECK(g == t1 + t2);
    CHECK(poly_gcd(a, Poly()) == (t1 + t2) * (t1 + t2) * (t1 - t2));
    Poly q = Poly::variable(Var::q);
    Poly one(rat(1));
    Poly c = (one - q) * (one - q) * (one + q);
    Poly d = (one - q) * Poly(rat(5));
    CHECK(poly_gcd(c, d) == q - one);  // leading coefficient normalized to 1
}

TEST_CASE("ratfun canonical form and equality") {
    RatFun t1 = RatFun::variable(Var::t1), t2 = RatFun::variable(Var::t2);
    RatFun f = (t1 * t1 - t2 * t2) / (t1 + t2);
    CHECK(f == t1 - t2);
    RatFun g = RatFun(rat(2)) * t1 / (RatFun(rat(2)) * t2);
    CHECK(g == t1 / t2);
    CHECK(g.den() == Poly::variable(Var::t2));  // monic denominator
    CHECK(f.equal_cross(t1 - t2));
    // normalize is idempotent by construction: rebuild from parts
    RatFun h(f.num(), f.den());
    CHECK(h == f);
}

TEST_CASE("ratfun field ops on random inputs") {
    std::mt19937 rng(999);
    auto rnd = [&]() {
        Poly p(rat(static_cast<long>(rng() % 5) - 2));
        p += Poly::variable(Var::q) * rat(static_cast<long>(rng() % 5) - 2);
        p += Poly::variable(Var::l1) * rat(static_cast<long>(rng() % 3));
        return p;
    };
    for (int trial = 0; trial < 25; ++trial) {
        Poly pa = rnd(), pb = rnd(), pc = rnd();
        if (pb.is_zero() || pc.is_zero()) continue;
        RatFun a(pa, pb), b(pc, pb), c(pb, pc);
        CHECK((a + b) * c == a * c + b * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == RatFun(rat(1)));
        CHECK(a - a == RatFun());
    }
}

TEST_CASE("ratfun_eval examples from the operation contract") {
    RatFun q = RatFun::variable(Var::q);
    RatFun one(rat(1));

    RatFun f = (one + q) / (one - q);
    CHECK(ratfun_eval(f, {{Var::q, rat(-1)}}) == 0);

    RatFun g = RatFun(rat(4)) * q / ((one - q) * (one - q));
    CHECK(ratfun_eval(g, {{Var::q, rat(-1)}}) == rat(-1));

    RatFun h = one / (one - q);
    CHECK_THROWS_AS(ratfun_eval(h, {{Var::q, rat(1)}}), PoleError);
}

TEST_CASE("ratfun substitution and pole detection") {
    RatFun q = RatFun::variable(Var::q), l1 = RatFun::variable(Var::l1);
    RatFun f = l1 / (RatFun(rat(1)) - q);
    RatFun g = f.substitute(Var::q, rat(-1));
    CHECK(g == l1 * rat(1, 2));
    CHECK_THROWS_AS(f.substitute(Var::q, rat(1)), PoleError);
    // multivariate: pole only when the substituted denominator is identically 0
    RatFun h = l1 / (q * l1);  // reduces to 1/q on construction
    CHECK(h.substitute(Var::l1, rat(0)) == RatFun(rat(1)) / q);
}

TEST_CASE("homogeneity degree") {
    RatFun t1 = RatFun::variable(Var::t1), t2 = RatFun::variable(Var::t2);
    RatFun v = (t1 + t2) / (t1 * t2) * rat(-1, 72);
    CHECK(v.is_homogeneous());
    CHECK(v.homogeneous_degree() == -1);
}

TEST_CASE("derivative quotient rule") {
    RatFun q = RatFun::variable(Var::q);
    RatFun one(rat(1));
    RatFun E = (one + q) / (one - q);
    RatFun d = E.derivative(Var::q);
    CHECK(d == RatFun(rat(2)) / ((one - q) * (one - q)));
}
