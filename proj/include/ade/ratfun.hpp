#pragma once

#include <map>
#include <string>

#include "ade/poly.hpp"

namespace ade {

// Multivariate rational function in canonical form: gcd(num, den) = 1 and the
// denominator's leading coefficient (total-degree-then-lex order) is 1.
// Equal values therefore have identical representations.
class RatFun {
public:
    RatFun() : num_(), den_(rat(1)) {}
    explicit RatFun(const Rat& r) : num_(r), den_(rat(1)) {}
    explicit RatFun(long n) : num_(rat(n)), den_(rat(1)) {}
    explicit RatFun(const Poly& p) : num_(p), den_(rat(1)) {}
    RatFun(const Poly& num, const Poly& den);

    static RatFun variable(Var v, int power = 1) { return RatFun(Poly::variable(v, power)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool is_polynomial() const { return den_ == Poly(rat(1)); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun operator*(const Rat& r) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    // Canonical forms make equality a representation comparison; cross
    // multiplication is exposed separately as an independent check.
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }
    bool equal_cross(const RatFun& o) const { return num_ * o.den_ == o.num_ * den_; }

    RatFun inverse() const;
    RatFun derivative(Var v) const;
    // Partial substitution; PoleError if the denominator vanishes identically.
    RatFun substitute(Var v, const Rat& value) const;
    // Full evaluation; PoleError if the denominator vanishes at the point.
    Rat eval(const std::map<Var, Rat>& assignment) const;

    bool uses(Var v) const { return num_.uses(v) || den_.uses(v); }
    // Homogeneity degree deg(num) - deg(den); throws unless both parts are
    // homogeneous.
    bool is_homogeneous() const { return num_.is_homogeneous() && den_.is_homogeneous(); }
    int homogeneous_degree() const;

    std::string to_string() const;

private:
    void reduce();
    Poly num_, den_;
};

inline RatFun operator*(const Rat& r, const RatFun& f) { return f * r; }
inline RatFun inverse(const RatFun& f) { return f.inverse(); }
inline bool ring_is_zero(const RatFun& x) { return x.is_zero(); }
inline std::string ring_str(const RatFun& x) { return x.to_string(); }

// Spec operation: exact evaluation with pole detection.
inline Rat ratfun_eval(const RatFun& f, const std::map<Var, Rat>& assignment) {
    return f.eval(assignment);
}

}  // namespace ade
