#pragma once

#include <map>
#include <string>

#include "ade/ratfun.hpp"

namespace ade {

// Finite Laurent polynomial in z whose coefficients are rational functions of
// the remaining parameters (here always l1, l2, q).  The J/I-series
// coefficients live in this ring; z never acquires a denominator beyond an
// explicit power.
class ZLaurent {
public:
    ZLaurent() = default;
    explicit ZLaurent(const Rat& r) {
        if (r != 0) c_[0] = RatFun(r);
    }
    explicit ZLaurent(const RatFun& f, int zpow = 0) {
        if (!f.is_zero()) c_[zpow] = f;
    }

    static ZLaurent z(int power = 1) { return ZLaurent(RatFun(rat(1)), power); }

    const std::map<int, RatFun>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    RatFun coeff(int zpow) const {
        auto it = c_.find(zpow);
        return it == c_.end() ? RatFun() : it->second;
    }
    int min_power() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_power() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    ZLaurent operator-() const {
        ZLaurent r = *this;
        for (auto& [k, f] : r.c_) f = -f;
        return r;
    }
    ZLaurent operator+(const ZLaurent& o) const {
        ZLaurent r = *this;
        for (const auto& [k, f] : o.c_) r.add_term(k, f);
        return r;
    }
    ZLaurent operator-(const ZLaurent& o) const { return *this + (-o); }
    ZLaurent operator*(const ZLaurent& o) const {
        ZLaurent r;
        for (const auto& [k1, f1] : c_)
            for (const auto& [k2, f2] : o.c_) r.add_term(k1 + k2, f1 * f2);
        return r;
    }
    ZLaurent operator*(const RatFun& f) const {
        ZLaurent r;
        for (const auto& [k, g] : c_) r.add_term(k, g * f);
        return r;
    }
    ZLaurent operator*(const Rat& s) const { return *this * RatFun(s); }
    bool operator==(const ZLaurent& o) const { return c_ == o.c_; }
    bool operator!=(const ZLaurent& o) const { return !(*this == o); }

    ZLaurent shifted_z(int dz) const {
        ZLaurent r;
        for (const auto& [k, f] : c_) r.c_[k + dz] = f;
        return r;
    }

    ZLaurent derivative(Var v) const {
        ZLaurent r;
        for (const auto& [k, f] : c_) r.add_term(k, f.derivative(v));
        return r;
    }

    // Coefficient-wise substitution; PoleError propagates from RatFun.
    ZLaurent substitute(Var v, const Rat& value) const {
        ZLaurent r;
        for (const auto& [k, f] : c_) r.add_term(k, f.substitute(v, value));
        return r;
    }

    bool regular_at(Var v, const Rat& value) const {
        for (const auto& [k, f] : c_)
            if (f.den().substitute(v, value).is_zero()) return false;
        return true;
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (!first) s += " + ";
            s += "(" + it->second.to_string() + ")";
            if (it->first != 0) s += "*z^" + std::to_string(it->first);
            first = false;
        }
        return s;
    }

private:
    void add_term(int k, const RatFun& f) {
        if (f.is_zero()) return;
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_.emplace(k, f);
        } else {
            it->second += f;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    std::map<int, RatFun> c_;
};

inline bool ring_is_zero(const ZLaurent& x) { return x.is_zero(); }
inline std::string ring_str(const ZLaurent& x) { return x.to_string(); }

}  // namespace ade
