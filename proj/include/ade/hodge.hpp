#pragma once

#include <map>
#include <string>

#include "ade/ratfun.hpp"

namespace ade {

// Monomial in the lambda classes and the P^1 hyperplane class H.
// Cohomological degree: lambda_i has degree i, H degree 1.
struct LambdaMono {
    int l1 = 0, l2 = 0, l3 = 0, h = 0;
    int degree() const { return l1 + 2 * l2 + 3 * l3 + h; }
    bool operator<(const LambdaMono& o) const {
        return std::tie(l1, l2, l3, h) < std::tie(o.l1, o.l2, o.l3, o.h);
    }
    bool operator==(const LambdaMono& o) const {
        return std::tie(l1, l2, l3, h) == std::tie(o.l1, o.l2, o.l3, o.h);
    }
    std::string to_string() const;
};

// Polynomial in lambda classes (and optionally H) with equivariant
// rational-function coefficients, tied to a genus g <= 3.
class LambdaPoly {
public:
    explicit LambdaPoly(int genus);
    static LambdaPoly constant(int genus, const RatFun& c);
    static LambdaPoly lambda(int genus, int i);  // lambda_i
    static LambdaPoly hyperplane(int genus);     // H

    int genus() const { return genus_; }
    const std::map<LambdaMono, RatFun>& terms() const { return terms_; }
    RatFun coeff(const LambdaMono& m) const;

    LambdaPoly operator+(const LambdaPoly& o) const;
    LambdaPoly operator-(const LambdaPoly& o) const;
    LambdaPoly operator*(const LambdaPoly& o) const;
    LambdaPoly operator*(const RatFun& f) const;
    bool operator==(const LambdaPoly& o) const;

    void add_term(const LambdaMono& m, const RatFun& c);
    bool is_zero() const { return terms_.empty(); }
    std::string to_string() const;

private:
    int genus_;
    std::map<LambdaMono, RatFun> terms_;
};

// Normal form under the relations from c(E)c(E^v) = 1 plus H^2 = 0:
//   g = 1:  l1^2 -> 0
//   g = 2:  l1^2 -> 2 l2,  l2^2 -> 0
//   g = 3:  l1^2 -> 2 l2,  l2^2 -> 2 l1 l3,  l3^2 -> 0
// Idempotent; throws UnsupportedGenus for genus > 3 or < 1.
LambdaPoly mumford_reduce(const LambdaPoly& p);

// Exact value of a lambda-monomial integral over Mbar_{g,n(m)}; the monomial
// is reduced first, entries off the table raise UnknownIntegral.  Known:
// <lambda_1>_{1,1} = 1/24 and <lambda_1 lambda_2>_{2,0} = 1/5760; <psi>_{1,1}
// = 1/24 is exposed separately as psi_value_1_1().
Rat hodge_value(int genus, const LambdaMono& mono);
Rat psi_value_1_1();

// Integral over Mbar_{g,n}: reduces, then picks lambda-monomials of top
// degree 3g-3+n (terms of lower degree integrate to zero; H must not appear).
RatFun integrate_moduli(const LambdaPoly& p, int n_marked);

// Integral over Mbar_{g,n} x P^1: picks terms H^1 * (lambda-monomial of
// degree 3g-3+n), using \int_{P^1} H = 1.
RatFun integrate_moduli_times_line(const LambdaPoly& p, int n_marked);

}  // namespace ade
