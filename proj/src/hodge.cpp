#include "ade/hodge.hpp"

#include <sstream>

#include "ade/errors.hpp"

namespace ade {

std::string LambdaMono::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const char* name, int e) {
        if (e == 0) return;
        if (!first) os << "*";
        os << name;
        if (e > 1) os << "^" << e;
        first = false;
    };
    emit("l1", l1);
    emit("l2", l2);
    emit("l3", l3);
    emit("H", h);
    if (first) os << "1";
    return os.str();
}

LambdaPoly::LambdaPoly(int genus) : genus_(genus) {
    if (genus < 1 || genus > 3) throw UnsupportedGenus("genus " + std::to_string(genus));
}

LambdaPoly LambdaPoly::constant(int genus, const RatFun& c) {
    LambdaPoly p(genus);
    p.add_term(LambdaMono{}, c);
    return p;
}

LambdaPoly LambdaPoly::lambda(int genus, int i) {
    if (i < 1 || i > genus)
        throw InvalidParameter("lambda_" + std::to_string(i) + " in genus " + std::to_string(genus));
    LambdaPoly p(genus);
    LambdaMono m;
    if (i == 1) m.l1 = 1;
    if (i == 2) m.l2 = 1;
    if (i == 3) m.l3 = 1;
    p.add_term(m, RatFun(rat(1)));
    return p;
}

LambdaPoly LambdaPoly::hyperplane(int genus) {
    LambdaPoly p(genus);
    LambdaMono m;
    m.h = 1;
    p.add_term(m, RatFun(rat(1)));
    return p;
}

RatFun LambdaPoly::coeff(const LambdaMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RatFun() : it->second;
}

void LambdaPoly::add_term(const LambdaMono& m, const RatFun& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LambdaPoly LambdaPoly::operator+(const LambdaPoly& o) const {
    if (genus_ != o.genus_) throw InvalidParameter("genus mismatch");
    LambdaPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

LambdaPoly LambdaPoly::operator-(const LambdaPoly& o) const {
    return *this + o * RatFun(rat(-1));
}

LambdaPoly LambdaPoly::operator*(const LambdaPoly& o) const {
    if (genus_ != o.genus_) throw InvalidParameter("genus mismatch");
    LambdaPoly r(genus_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            LambdaMono m{m1.l1 + m2.l1, m1.l2 + m2.l2, m1.l3 + m2.l3, m1.h + m2.h};
            r.add_term(m, c1 * c2);
        }
    return r;
}

LambdaPoly LambdaPoly::operator*(const RatFun& f) const {
    LambdaPoly r(genus_);
    for (const auto& [m, c] : terms_) r.add_term(m, c * f);
    return r;
}

bool LambdaPoly::operator==(const LambdaPoly& o) const {
    return genus_ == o.genus_ && terms_ == o.terms_;
}

std::string LambdaPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")*" << m.to_string();
        first = false;
    }
    return os.str();
}

LambdaPoly mumford_reduce(const LambdaPoly& p) {
    int g = p.genus();
    LambdaPoly out(g);
    for (const auto& [mono, coeff] : p.terms()) {
        LambdaMono m = mono;
        RatFun c = coeff;
        // H^2 = 0 on P^1.
        if (m.h >= 2) continue;
        // Rewrite lambda squares until in normal form; coefficients pick up
        // the factors of 2 from the relations.
        while (true) {
            if (g >= 2 && m.l1 >= 2) {
                m.l1 -= 2;
                m.l2 += 1;
                c = c * rat(2);
                continue;
            }
            if (g == 1 && m.l1 >= 2) { c = RatFun(); break; }
            if (g == 2 && m.l2 >= 2) { c = RatFun(); break; }
            if (g == 3 && m.l2 >= 2) {
                m.l2 -= 2;
                m.l1 += 1;
                m.l3 += 1;
                c = c * rat(2);
                continue;
            }
            if (g == 3 && m.l3 >= 2) { c = RatFun(); break; }
            break;
        }
        if (!c.is_zero()) out.add_term(m, c);
    }
    return out;
}

Rat hodge_value(int genus, const LambdaMono& mono) {
    LambdaPoly p(genus);
    p.add_term(mono, RatFun(rat(1)));
    LambdaPoly red = mumford_reduce(p);
    Rat total(0);
    for (const auto& [m, c] : red.terms()) {
        if (m.h != 0) throw InvalidParameter("hodge_value applies to lambda monomials only");
        if (genus == 1 && m == LambdaMono{1, 0, 0, 0}) {
            total += c.constant_value() * rat(1, 24);
        } else if (genus == 2 && m == LambdaMono{1, 1, 0, 0}) {
            total += c.constant_value() * rat(1, 5760);
        } else {
            throw UnknownIntegral("no table entry for genus " + std::to_string(genus) + " " +
                                  m.to_string());
        }
    }
    return total;
}

Rat psi_value_1_1() { return rat(1, 24); }

namespace {

Rat lambda_table(int genus, const LambdaMono& m) {
    if (genus == 1 && m == LambdaMono{1, 0, 0, 0}) return rat(1, 24);
    if (genus == 2 && m == LambdaMono{1, 1, 0, 0}) return rat(1, 5760);
    throw UnknownIntegral("no table entry for genus " + std::to_string(genus) + " " +
                          m.to_string());
}

}  // namespace

RatFun integrate_moduli(const LambdaPoly& p, int n_marked) {
    LambdaPoly red = mumford_reduce(p);
    int dim = 3 * p.genus() - 3 + n_marked;
    RatFun total;
    for (const auto& [m, c] : red.terms()) {
        if (m.h != 0) throw InvalidParameter("H class over a bare moduli integral");
        if (m.degree() != dim) continue;
        total += c * lambda_table(p.genus(), m);
    }
    return total;
}

RatFun integrate_moduli_times_line(const LambdaPoly& p, int n_marked) {
    LambdaPoly red = mumford_reduce(p);
    int dim = 3 * p.genus() - 3 + n_marked;
    RatFun total;
    for (const auto& [m, c] : red.terms()) {
        if (m.h != 1) continue;  // \int_{P^1} 1 = 0, H^2 = 0 already dropped
        LambdaMono lm = m;
        lm.h = 0;
        if (lm.degree() != dim) continue;
        total += c * lambda_table(p.genus(), lm);
    }
    return total;
}

}  // namespace ade
