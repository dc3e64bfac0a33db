#include "ade/ratfun.hpp"

#include "ade/errors.hpp"

namespace ade {

RatFun::RatFun(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw PoleError("zero denominator");
    reduce();
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(rat(1));
        return;
    }
    if (!den_.is_constant()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
    }
    Rat lc = den_.leading_coeff();
    if (lc != 1) {
        Rat inv = Rat(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    // Cross-cancel first: with reduced inputs the result needs no further gcd.
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    Poly n1 = g1.is_constant() ? num_ : div_exact(num_, g1);
    Poly d2 = g1.is_constant() ? o.den_ : div_exact(o.den_, g1);
    Poly n2 = g2.is_constant() ? o.num_ : div_exact(o.num_, g2);
    Poly d1 = g2.is_constant() ? den_ : div_exact(den_, g2);
    return RatFun(n1 * n2, d1 * d2);
}

RatFun RatFun::operator*(const Rat& r) const {
    RatFun f = *this;
    f.num_ = f.num_ * r;
    if (r == 0) f.den_ = Poly(rat(1));
    return f;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw PoleError("inverse of zero");
    return RatFun(den_, num_);
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inverse(); }

RatFun RatFun::derivative(Var v) const {
    return RatFun(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RatFun RatFun::substitute(Var v, const Rat& value) const {
    Poly d = den_.substitute(v, value);
    if (d.is_zero())
        throw PoleError("substituting " + std::string(var_name(v)) + " = " + value.get_str() +
                        " in " + to_string());
    return RatFun(num_.substitute(v, value), d);
}

Rat RatFun::eval(const std::map<Var, Rat>& assignment) const {
    Rat d = den_.eval(assignment);
    if (d == 0) throw PoleError("denominator vanishes at the point: " + to_string());
    return num_.eval(assignment) / d;
}

int RatFun::homogeneous_degree() const {
    if (!is_homogeneous()) throw ValidationError("not homogeneous: " + to_string());
    if (num_.is_zero()) return 0;
    return num_.total_degree() - den_.total_degree();
}

std::string RatFun::to_string() const {
    if (is_polynomial()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    std::string d = den_.to_string();
    if (den_.terms().size() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace ade
