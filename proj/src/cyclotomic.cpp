#include "ade/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ade/errors.hpp"

namespace ade {

namespace {

// Dense univariate helpers over Rat, ascending coefficients.
using Upoly = std::vector<Rat>;

void utrim(Upoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Upoly umul(const Upoly& a, const Upoly& b) {
    if (a.empty() || b.empty()) return {};
    Upoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division (throws on nonzero remainder).
Upoly udiv_exact(Upoly a, const Upoly& b) {
    utrim(a);
    if (b.empty()) throw Error("division by zero polynomial");
    Upoly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        utrim(a);
    }
    if (!a.empty()) throw Error("inexact polynomial division");
    return q;
}

// a mod b, b monic not required
Upoly umod(Upoly a, const Upoly& b) {
    utrim(a);
    while (a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        utrim(a);
    }
    return a;
}

struct FieldData {
    int order;
    Upoly phi;                      // monic, degree d
    std::vector<Upoly> pow_red;     // zeta^(d+j) reduced mod phi, j = 0..d-2
};

const FieldData& field(int n) {
    static std::map<int, FieldData> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // through the cache without re-locking.
    std::vector<int> todo{n};
    while (!todo.empty()) {
        int m = todo.back();
        if (cache.count(m)) { todo.pop_back(); continue; }
        bool ready = true;
        for (int d = 1; d < m; ++d)
            if (m % d == 0 && !cache.count(d)) { todo.push_back(d); ready = false; }
        if (!ready) continue;
        todo.pop_back();
        Upoly num(m + 1, Rat(0));
        num[0] = rat(-1);
        num[m] = rat(1);
        for (int d = 1; d < m; ++d)
            if (m % d == 0) num = udiv_exact(num, cache[d].phi);
        FieldData fd;
        fd.order = m;
        fd.phi = num;
        int deg = static_cast<int>(fd.phi.size()) - 1;
        for (int j = 0; j + deg < 2 * deg - 1; ++j) {
            Upoly x(deg + j + 1, Rat(0));
            x[deg + j] = rat(1);
            fd.pow_red.push_back(umod(x, fd.phi));
        }
        cache.emplace(m, std::move(fd));
    }
    return cache[n];
}

std::vector<Rat> reduce_mod_phi(int n, std::vector<Rat> raw) {
    const FieldData& fd = field(n);
    int deg = static_cast<int>(fd.phi.size()) - 1;
    // First fold exponents >= 2*deg-1 by zeta^n = 1, then use the table.
    if (static_cast<int>(raw.size()) > n) {
        std::vector<Rat> folded(std::min<size_t>(raw.size(), n), Rat(0));
        for (size_t i = 0; i < raw.size(); ++i) folded[i % n] += raw[i];
        raw = std::move(folded);
    }
    Upoly r = umod(std::move(raw), fd.phi);
    r.resize(deg, Rat(0));
    return r;
}

}  // namespace

int cyclo_degree(int n) { return static_cast<int>(field(n).phi.size()) - 1; }

const std::vector<Rat>& cyclo_polynomial(int n) { return field(n).phi; }

Cyclo Cyclo::zeta(int n, long k) {
    if (n < 1) throw InvalidParameter("cyclotomic order must be >= 1");
    long kk = ((k % n) + n) % n;
    std::vector<Rat> raw(static_cast<size_t>(kk) + 1, Rat(0));
    raw[kk] = rat(1);
    return from_coeffs(n, raw);
}

Cyclo Cyclo::from_coeffs(int n, const std::vector<Rat>& coeffs) {
    if (n < 1) throw InvalidParameter("cyclotomic order must be >= 1");
    Cyclo c;
    c.order_ = n;
    c.c_ = reduce_mod_phi(n, coeffs);
    return c;
}

bool Cyclo::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) throw ValidationError("cyclotomic value is not rational: " + to_string());
    return c_.empty() ? Rat(0) : c_[0];
}

Cyclo Cyclo::promoted(int new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
        throw InvalidParameter("cyclotomic promotion requires divisible orders");
    int step = new_order / order_;
    std::vector<Rat> raw(static_cast<size_t>(new_order), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
    return from_coeffs(new_order, raw);
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    int n = std::lcm(order_, o.order_);
    Cyclo a = promoted(n), b = o.promoted(n);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
    int n = std::lcm(order_, o.order_);
    Cyclo a = promoted(n), b = o.promoted(n);
    std::vector<Rat> conv(a.c_.size() + b.c_.size(), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return from_coeffs(n, conv);
}

Cyclo Cyclo::operator*(const Rat& r) const {
    Cyclo a = *this;
    for (Rat& x : a.c_) x *= r;
    return a;
}

bool Cyclo::operator==(const Cyclo& o) const {
    if (order_ == o.order_) return c_ == o.c_;
    int n = std::lcm(order_, o.order_);
    return promoted(n).c_ == o.promoted(n).c_;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw Error("cyclotomic division by zero");
    if (is_rational()) {
        Cyclo r = *this;
        r.c_[0] = Rat(1) / r.c_[0];
        return r;
    }
    // Extended Euclid in Q[x] for gcd(this, Phi_N) = 1: s*this + t*Phi = 1.
    const FieldData& fd = field(order_);
    Upoly r0 = fd.phi, r1 = c_;
    utrim(r1);
    Upoly s0 = {}, s1 = {rat(1)};  // coefficients of `this`
    while (true) {
        utrim(r1);
        if (r1.empty()) throw Error("cyclotomic inverse: zero remainder before unit");
        if (r1.size() == 1) break;
        // r0 = q*r1 + r2
        Upoly q(r0.size() - r1.size() + 1, Rat(0));
        Upoly rem = r0;
        while (rem.size() >= r1.size()) {
            Rat c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            utrim(rem);
        }
        Upoly s2 = s0;  // s2 = s0 - q*s1
        Upoly qs1 = umul(q, s1);
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rat(0));
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        utrim(s2);
        r0 = r1; r1 = rem; s0 = s1; s1 = s2;
    }
    Rat unit = r1[0];
    for (Rat& x : s1) x /= unit;
    return from_coeffs(order_, s1);
}

Cyclo Cyclo::operator/(const Cyclo& o) const { return *this * o.inverse(); }

Cyclo Cyclo::conj() const {
    std::vector<Rat> raw(static_cast<size_t>(order_), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        raw[i == 0 ? 0 : order_ - i] += c_[i];
    return from_coeffs(order_, raw);
}

std::complex<double> Cyclo::to_complex() const {
    std::complex<double> z(0.0, 0.0);
    const double tau = 2.0 * M_PI / order_;
    for (size_t i = 0; i < c_.size(); ++i)
        z += c_[i].get_d() * std::complex<double>(std::cos(tau * i), std::sin(tau * i));
    return z;
}

std::string Cyclo::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i > 0) os << "*w" << order_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace ade
