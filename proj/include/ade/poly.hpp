#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ade/rational.hpp"

namespace ade {

// The fixed variable universe of the project.  t is the one-parameter torus
// weight (D/E), t1/t2 the two-parameter torus (A), l1/l2 the equivariant
// parameters lambda_1/lambda_2, q the Novikov variable, z the descendant
// parameter, a/b the hypergeometric parameters.
enum class Var : int { t = 0, t1, t2, l1, l2, q, z, a, b };
inline constexpr int kNumVars = 9;
const char* var_name(Var v);

struct Mono {
    std::array<int16_t, kNumVars> e{};
    int total_degree() const {
        int d = 0;
        for (int16_t x : e) d += x;
        return d;
    }
    Mono operator*(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<int16_t>(e[i] + o.e[i]);
        return r;
    }
    bool divides(const Mono& o) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Mono quotient(const Mono& o) const {  // *this / o
        Mono r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<int16_t>(e[i] - o.e[i]);
        return r;
    }
    bool operator==(const Mono& o) const { return e == o.e; }
};

// Total degree then lex, highest first: map.begin() is the leading term.
struct MonoOrder {
    bool operator()(const Mono& x, const Mono& y) const {
        int dx = x.total_degree(), dy = y.total_degree();
        if (dx != dy) return dx > dy;
        return x.e > y.e;
    }
};

// Sparse multivariate polynomial over Q with the fixed variable set.
class Poly {
public:
    using Terms = std::map<Mono, Rat, MonoOrder>;

    Poly() = default;
    explicit Poly(const Rat& r) {
        if (r != 0) terms_[Mono{}] = r;
    }
    explicit Poly(long n) : Poly(rat(n)) {}
    static Poly variable(Var v, int power = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& r) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o) { return *this += -o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int n) const;
    Poly derivative(Var v) const;
    Poly substitute(Var v, const Rat& value) const;
    Poly substitute(Var v, const Poly& value) const;
    Rat eval(const std::map<Var, Rat>& assignment) const;

    int degree_in(Var v) const;
    int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total_degree(); }
    bool uses(Var v) const { return degree_in(v) > 0; }
    bool is_homogeneous() const;
    Poly coeff_of(Var v, int k) const;  // coefficient of v^k (a poly without v)

    const Rat& leading_coeff() const;   // under MonoOrder
    Mono monomial_content() const;      // gcd of monomials
    Rat rational_content() const;       // gcd of |coefficients| (0 for zero poly)

    std::string to_string() const;

private:
    Terms terms_;  // no zero coefficients stored
};

inline Poly operator*(const Rat& r, const Poly& p) { return p * r; }

// Exact division; throws if the division has a remainder.
Poly div_exact(const Poly& a, const Poly& b);
// Multivariate gcd (content/primitive-part pseudo-remainder sequences).
// Normalized so the leading coefficient under MonoOrder is 1.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace ade
