#pragma once

#include <string>
#include <vector>

#include "ade/errors.hpp"
#include "ade/rational.hpp"

namespace ade {

// Formal power series truncated at a fixed order N: coefficients c[0..N],
// everything of degree > N discarded.  The coefficient ring R needs a
// default (zero) constructor, construction from Rat, +, -, *, scaling by
// Rat, and ring_is_zero/ring_str overloads.
template <class R>
class TruncSeries {
public:
    TruncSeries() : order_(0), c_(1) {}
    explicit TruncSeries(int order, std::string var = "x")
        : order_(order), var_(std::move(var)), c_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw InvalidParameter("negative series order");
    }
    static TruncSeries constant(int order, const R& value, std::string var = "x") {
        TruncSeries s(order, std::move(var));
        s.c_[0] = value;
        return s;
    }
    static TruncSeries identity(int order, std::string var = "x") {
        TruncSeries s(order, std::move(var));
        if (order >= 1) s.c_[1] = R(rat(1));
        return s;
    }

    int order() const { return order_; }
    const std::string& var() const { return var_; }
    const R& coeff(int k) const {
        if (k < 0 || k > order_) throw InvalidParameter("series coefficient out of range");
        return c_[static_cast<size_t>(k)];
    }
    void set_coeff(int k, const R& v) {
        if (k < 0 || k > order_) throw InvalidParameter("series coefficient out of range");
        c_[static_cast<size_t>(k)] = v;
    }
    bool is_zero() const {
        for (const R& x : c_)
            if (!ring_is_zero(x)) return false;
        return true;
    }

    TruncSeries truncated(int new_order) const {
        TruncSeries s(new_order, var_);
        for (int k = 0; k <= std::min(order_, new_order); ++k) s.c_[k] = c_[k];
        return s;
    }

    TruncSeries operator-() const {
        TruncSeries s = *this;
        for (R& x : s.c_) x = -x;
        return s;
    }
    TruncSeries operator+(const TruncSeries& o) const {
        TruncSeries s = truncated(std::min(order_, o.order_));
        for (int k = 0; k <= s.order_; ++k) s.c_[k] = s.c_[k] + o.c_[k];
        return s;
    }
    TruncSeries operator-(const TruncSeries& o) const { return *this + (-o); }
    TruncSeries operator*(const TruncSeries& o) const {
        TruncSeries s(std::min(order_, o.order_), var_);
        for (int i = 0; i <= s.order_; ++i) {
            if (ring_is_zero(c_[i])) continue;
            for (int j = 0; i + j <= s.order_ && j <= o.order_; ++j) {
                if (ring_is_zero(o.c_[j])) continue;
                s.c_[i + j] = s.c_[i + j] + c_[i] * o.c_[j];
            }
        }
        return s;
    }
    TruncSeries operator*(const R& v) const {
        TruncSeries s = *this;
        for (R& x : s.c_) x = x * v;
        return s;
    }
    TruncSeries scaled(const Rat& v) const { return *this * R(v); }

    // d/dx: a series exact to order N determines the derivative to order N-1.
    TruncSeries derivative() const {
        if (order_ == 0) return TruncSeries(0, var_);
        TruncSeries s(order_ - 1, var_);
        for (int k = 1; k <= order_; ++k) s.c_[k - 1] = c_[k] * R(rat(k));
        return s;
    }
    // Antiderivative with zero constant term.
    TruncSeries integral() const {
        TruncSeries s(order_ + 1, var_);
        for (int k = 0; k <= order_; ++k) s.c_[k + 1] = c_[k] * R(rat(1, k + 1));
        return s;
    }

    // this(g(x)); requires g(0) = 0.
    TruncSeries compose(const TruncSeries& g) const {
        if (!ring_is_zero(g.c_[0]))
            throw NonzeroConstantTerm("series composition requires g(0) = 0");
        int n = std::min(order_, g.order_);
        TruncSeries result(n, g.var_);
        for (int k = order_; k >= 0; --k) {
            result = result * g.truncated(n);
            result.c_[0] = result.c_[0] + c_[k];
        }
        return result;
    }

    std::string to_string() const {
        std::string s;
        bool first = true;
        for (int k = 0; k <= order_; ++k) {
            if (ring_is_zero(c_[k])) continue;
            if (!first) s += " + ";
            s += "(" + ring_str(c_[k]) + ")";
            if (k > 0) s += "*" + var_ + "^" + std::to_string(k);
            first = false;
        }
        if (first) s = "0";
        return s + " + O(" + var_ + "^" + std::to_string(order_ + 1) + ")";
    }

private:
    int order_;
    std::string var_;
    std::vector<R> c_;
};

// exp(f) = sum f^k / k!, requires f(0) = 0.
template <class R>
TruncSeries<R> series_exp(const TruncSeries<R>& f) {
    if (!ring_is_zero(f.coeff(0))) throw NonzeroConstantTerm("series_exp requires f(0) = 0");
    TruncSeries<R> result = TruncSeries<R>::constant(f.order(), R(rat(1)), f.var());
    TruncSeries<R> power = result;
    Rat kfac(1);
    for (int k = 1; k <= f.order(); ++k) {
        power = power * f;
        kfac *= k;
        result = result + power.scaled(Rat(1) / kfac);
    }
    return result;
}

template <class R>
TruncSeries<R> series_compose(const TruncSeries<R>& f, const TruncSeries<R>& g) {
    return f.compose(g);
}

// 1/f; requires f(0) invertible (an inverse() overload for R).
template <class R>
TruncSeries<R> series_inverse(const TruncSeries<R>& f) {
    if (ring_is_zero(f.coeff(0))) throw NonzeroConstantTerm("series_inverse requires f(0) != 0");
    R c0inv = inverse(f.coeff(0));
    TruncSeries<R> result(f.order(), f.var());
    result.set_coeff(0, c0inv);
    for (int k = 1; k <= f.order(); ++k) {
        R acc;
        for (int j = 1; j <= k; ++j) acc = acc + f.coeff(j) * result.coeff(k - j);
        result.set_coeff(k, -(c0inv * acc));
    }
    return result;
}

// sqrt(f) with f(0) = 1, branch with value 1 at 0.
template <class R>
TruncSeries<R> series_sqrt1(const TruncSeries<R>& f) {
    TruncSeries<R> u = f;
    u.set_coeff(0, u.coeff(0) - R(rat(1)));
    if (!ring_is_zero(u.coeff(0))) throw NonzeroConstantTerm("series_sqrt1 requires f(0) = 1");
    TruncSeries<R> result = TruncSeries<R>::constant(f.order(), R(rat(1)), f.var());
    TruncSeries<R> power = result;
    Rat coeff(1);
    for (int k = 1; k <= f.order(); ++k) {
        power = power * u;
        coeff *= rat(3 - 2 * k, 2 * k);  // binom(1/2,k)/binom(1/2,k-1)
        result = result + power.scaled(coeff);
    }
    return result;
}

// Taylor series of arcsin: sum (2k)! u^(2k+1) / (4^k (k!)^2 (2k+1)).
TruncSeries<Rat> arcsin_series(int order);

}  // namespace ade
