#include "ade/gauss.hpp"
#include "ade/series.hpp"
#include "ade/zlaurent.hpp"
#include "doctest.h"

using namespace ade;
using RS = TruncSeries<Rat>;

TEST_CASE("series exp basics") {
    RS x = RS::identity(10);
    RS e = series_exp(x);
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(1) == 1);
    CHECK(e.coeff(2) == rat(1, 2));
    CHECK(e.coeff(3) == rat(1, 6));
    // exp(0) = 1
    CHECK(series_exp(RS(5)).coeff(0) == 1);
    // exp(x)*exp(-x) = 1 to order 10
    RS prod = e * series_exp(-x);
    CHECK(prod.coeff(0) == 1);
    for (int k = 1; k <= 10; ++k) CHECK(prod.coeff(k) == 0);
    CHECK_THROWS_AS(series_exp(RS::constant(4, rat(1))), NonzeroConstantTerm);
}

TEST_CASE("arcsin series") {
    // 2*arcsin(x/2) = x + x^3/24 + 3 x^5/640 + ...
    RS a = arcsin_series(7);
    RS half = RS::identity(7).scaled(rat(1, 2));
    RS s = a.compose(half).scaled(rat(2));
    CHECK(s.coeff(1) == 1);
    CHECK(s.coeff(2) == 0);
    CHECK(s.coeff(3) == rat(1, 24));
    CHECK(s.coeff(5) == rat(3, 640));
    CHECK(arcsin_series(5).coeff(0) == 0);
}

TEST_CASE("arcsin defining ODE: arcsin'(u) * sqrt(1-u^2) = 1") {
    int N = 14;
    RS a = arcsin_series(N);
    RS u = RS::identity(N - 1);
    RS one_minus_u2 = RS::constant(N - 1, rat(1)) - u * u;
    RS prod = a.derivative() * series_sqrt1(one_minus_u2);
    CHECK(prod.coeff(0) == 1);
    for (int k = 1; k <= N - 1; ++k) CHECK(prod.coeff(k) == 0);
}

TEST_CASE("composition examples") {
    int N = 6;
    // f = x^2 composed with g = 2 arcsin(x/2): x^2 + x^4/12 + ...
    RS f(N);
    f.set_coeff(2, rat(1));
    RS g = arcsin_series(N).compose(RS::identity(N).scaled(rat(1, 2))).scaled(rat(2));
    RS h = series_compose(f, g);
    CHECK(h.coeff(2) == 1);
    CHECK(h.coeff(4) == rat(1, 12));
    // identity composition
    RS any = arcsin_series(N);
    CHECK(series_compose(any, RS::identity(N)).coeff(3) == any.coeff(3));
    CHECK_THROWS_AS(series_compose(f, RS::constant(N, rat(2))), NonzeroConstantTerm);
}

TEST_CASE("sin inverts 2arcsin(x/2) scaled") {
    // sin series: x - x^3/6 + x^5/120 ...; check sin(arcsin(u)) = u
    int N = 11;
    RS sinser(N);
    Rat sign(1);
    for (int k = 1; k <= N; k += 2) {
        sinser.set_coeff(k, sign / Rat(factorial(static_cast<unsigned>(k))));
        sign = -sign;
    }
    RS arc = arcsin_series(N);
    RS comp = series_compose(sinser, arc);
    CHECK(comp.coeff(1) == 1);
    for (int k = 2; k <= N; ++k) CHECK(comp.coeff(k) == 0);
}

TEST_CASE("derivative and integral are mutually inverse up to constants") {
    RS a = arcsin_series(9);
    RS b = a.derivative().integral();
    for (int k = 1; k <= 9; ++k) CHECK(b.coeff(k) == a.coeff(k));
    CHECK(b.coeff(0) == 0);
}

TEST_CASE("series inverse") {
    int N = 8;
    RS f = RS::constant(N, rat(1)) + RS::identity(N);
    RS g = series_inverse(f);
    for (int k = 0; k <= N; ++k) CHECK(g.coeff(k) == (k % 2 == 0 ? rat(1) : rat(-1)));
    CHECK_THROWS_AS(series_inverse(RS::identity(4)), NonzeroConstantTerm);
}

TEST_CASE("gauss ring") {
    using G = Gauss<Rat>;
    G i = G::i();
    CHECK(i * i == G(rat(-1)));
    CHECK(inverse(i) == -i);
    G a(rat(1), rat(2));
    CHECK(a * inverse(a) == G(rat(1)));
    CHECK(a.conj() == G(rat(1), rat(-2)));
}

TEST_CASE("gauss series composition") {
    // exp(i x) = cos x + i sin x
    int N = 8;
    using G = Gauss<Rat>;
    TruncSeries<G> ix = TruncSeries<G>::identity(N) * G::i();
    TruncSeries<G> e = series_exp(ix);
    CHECK(e.coeff(0) == G(rat(1)));
    CHECK(e.coeff(1) == G::i());
    CHECK(e.coeff(2) == G(rat(-1, 2)));
    CHECK(e.coeff(3) == G(rat(0), rat(-1, 6)));
}

TEST_CASE("zlaurent ring") {
    ZLaurent z = ZLaurent::z();
    ZLaurent zinv = ZLaurent::z(-1);
    CHECK(z * zinv == ZLaurent(rat(1)));
    RatFun l1 = RatFun::variable(Var::l1);
    ZLaurent f = ZLaurent(l1, -2) + ZLaurent(rat(3));
    CHECK(f.coeff(-2) == l1);
    CHECK(f.min_power() == -2);
    CHECK((f - f).is_zero());
    CHECK(f.shifted_z(2).coeff(0) == l1);
}
