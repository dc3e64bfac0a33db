#include "ade/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ade/errors.hpp"

namespace ade {

const char* var_name(Var v) {
    static const char* names[kNumVars] = {"t", "t1", "t2", "l1", "l2", "q", "z", "a", "b"};
    return names[static_cast<int>(v)];
}

Poly Poly::variable(Var v, int power) {
    Poly p;
    if (power < 0) throw InvalidParameter("negative power in Poly::variable");
    Mono m;
    m.e[static_cast<int>(v)] = static_cast<int16_t>(power);
    p.terms_[m] = rat(1);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw Error("polynomial is not constant: " + to_string());
    return terms_.begin()->second;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r += -o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Mono m = m1 * m2;
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_.emplace(m, c1 * c2);
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

Poly Poly::operator*(const Rat& s) const {
    if (s == 0) return Poly();
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw InvalidParameter("negative power");
    Poly r(rat(1)), base = *this;
    while (n > 0) {
        if (n & 1) r *= base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Poly Poly::derivative(Var v) const {
    int vi = static_cast<int>(v);
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m.e[vi] == 0) continue;
        Mono d = m;
        d.e[vi] -= 1;
        r.terms_[d] = c * rat(m.e[vi]);
    }
    return r;
}

Poly Poly::substitute(Var v, const Rat& value) const {
    int vi = static_cast<int>(v);
    Poly r;
    for (const auto& [m, c] : terms_) {
        Rat s = c;
        for (int k = 0; k < m.e[vi]; ++k) s *= value;
        Mono d = m;
        d.e[vi] = 0;
        if (s == 0) continue;
        auto it = r.terms_.find(d);
        if (it == r.terms_.end()) {
            r.terms_.emplace(d, s);
        } else {
            it->second += s;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Poly Poly::substitute(Var v, const Poly& value) const {
    int vi = static_cast<int>(v);
    Poly r;
    for (const auto& [m, c] : terms_) {
        Mono d = m;
        int k = d.e[vi];
        d.e[vi] = 0;
        Poly term;
        term.terms_[d] = c;
        r += term * value.pow(k);
    }
    return r;
}

Rat Poly::eval(const std::map<Var, Rat>& assignment) const {
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat s = c;
        for (int i = 0; i < kNumVars; ++i) {
            if (m.e[i] == 0) continue;
            auto it = assignment.find(static_cast<Var>(i));
            if (it == assignment.end())
                throw InvalidParameter(std::string("unassigned variable ") + var_name(static_cast<Var>(i)));
            for (int k = 0; k < m.e[i]; ++k) s *= it->second;
        }
        total += s;
    }
    return total;
}

int Poly::degree_in(Var v) const {
    int vi = static_cast<int>(v), d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[vi]));
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    return true;
}

Poly Poly::coeff_of(Var v, int k) const {
    int vi = static_cast<int>(v);
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m.e[vi] != k) continue;
        Mono d = m;
        d.e[vi] = 0;
        r.terms_[d] = c;
    }
    return r;
}

const Rat& Poly::leading_coeff() const {
    static const Rat zero(0);
    if (terms_.empty()) return zero;
    return terms_.begin()->second;
}

Mono Poly::monomial_content() const {
    Mono m;
    if (terms_.empty()) return m;
    for (int i = 0; i < kNumVars; ++i) m.e[i] = INT16_MAX;
    for (const auto& [mo, c] : terms_)
        for (int i = 0; i < kNumVars; ++i) m.e[i] = std::min(m.e[i], mo.e[i]);
    return m;
}

Rat Poly::rational_content() const {
    Int num(0), den(1);
    for (const auto& [m, c] : terms_) {
        num = gcd(num, c.get_num());
        den = lcm(den, c.get_den());
    }
    if (num == 0) return Rat(0);
    return rat(num, den);
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = m.total_degree() > 0;
        if (ac != 1 || !has_vars) {
            os << ac.get_str();
            if (has_vars) os << "*";
        }
        bool fv = true;
        for (int i = 0; i < kNumVars; ++i) {
            if (m.e[i] == 0) continue;
            if (!fv) os << "*";
            os << var_name(static_cast<Var>(i));
            if (m.e[i] > 1) os << "^" << m.e[i];
            fv = false;
        }
    }
    return os.str();
}

namespace {

Poly monomial_poly(const Mono& m, const Rat& coeff) {
    Poly p(coeff);
    for (int i = 0; i < kNumVars; ++i)
        if (m.e[i] > 0) p *= Poly::variable(static_cast<Var>(i), m.e[i]);
    return p;
}

}  // namespace

Poly div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    Poly rem = a, quot;
    const Mono& lmb = b.terms().begin()->first;
    const Rat& lcb = b.terms().begin()->second;
    while (!rem.is_zero()) {
        const Mono& lmr = rem.terms().begin()->first;
        if (!lmb.divides(lmr)) throw Error("inexact polynomial division");
        Poly mono = monomial_poly(lmr.quotient(lmb), rem.terms().begin()->second / lcb);
        quot += mono;
        rem -= mono * b;
    }
    return quot;
}

namespace {

// Highest variable index used by either polynomial, or -1.
int main_var(const Poly& a, const Poly& b) {
    for (int i = kNumVars - 1; i >= 0; --i) {
        Var v = static_cast<Var>(i);
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return i;
    }
    return -1;
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * (Rat(1) / p.leading_coeff());
}

// Pseudo-remainder of a by b in variable v.
Poly prem(Poly a, const Poly& b, Var v) {
    int db = b.degree_in(v);
    Poly lcb = b.coeff_of(v, db);
    while (true) {
        int da = a.degree_in(v);
        if (a.is_zero() || da < db) return a;
        Poly lca = a.coeff_of(v, da);
        Poly xshift = Poly::variable(v, da - db);
        a = a * lcb - b * lca * xshift;
    }
}

Poly content_in(const Poly& p, Var v);

Poly gcd_inner(Poly a, Poly b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    int mv = main_var(a, b);
    if (mv < 0) return Poly(rat(1));
    Var v = static_cast<Var>(mv);
    if (a.degree_in(v) == 0 || b.degree_in(v) == 0) {
        // gcd divides the v-free one, so it is v-free: recurse on contents.
        Poly ca = a.degree_in(v) == 0 ? a : content_in(a, v);
        Poly cb = b.degree_in(v) == 0 ? b : content_in(b, v);
        return gcd_inner(ca, cb);
    }
    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly g = gcd_inner(ca, cb);
    a = div_exact(a, ca);
    b = div_exact(b, cb);
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    // primitive PRS
    while (true) {
        Poly r = prem(a, b, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) return monic(g);
        r = div_exact(r, content_in(r, v));
        a = b;
        b = r;
    }
    b = div_exact(b, content_in(b, v));
    return monic(g * b);
}

// Content of p viewed as a polynomial in v: gcd of the v-coefficients.
Poly content_in(const Poly& p, Var v) {
    Poly c;
    for (int k = 0; k <= p.degree_in(v); ++k) {
        Poly ck = p.coeff_of(v, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? monic(ck) : gcd_inner(c, ck);
        if (c.is_constant()) return Poly(rat(1));
    }
    return c.is_zero() ? Poly(rat(1)) : c;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    // Split off the monomial content first; it keeps the PRS small.
    Mono ma = a.monomial_content();
    Mono mb = b.monomial_content();
    Mono mg;
    for (int i = 0; i < kNumVars; ++i) mg.e[i] = std::min(ma.e[i], mb.e[i]);
    Poly am = div_exact(a, monomial_poly(ma, rat(1)));
    Poly bm = div_exact(b, monomial_poly(mb, rat(1)));
    return monomial_poly(mg, rat(1)) * gcd_inner(am, bm);
}

}  // namespace ade
