#pragma once

#include <complex>
#include <vector>

#include "ade/rational.hpp"

namespace ade {

// Element of the cyclotomic field Q(zeta_N), stored as a polynomial in
// zeta_N reduced modulo the N-th cyclotomic polynomial Phi_N.  The reduced
// coefficient vector is the canonical form: two elements are equal iff their
// orders agree and their coefficient vectors are identical.  Binary
// operations on elements of different orders promote both to Q(zeta_lcm).
class Cyclo {
public:
    Cyclo() : order_(1), c_(1) {}
    explicit Cyclo(const Rat& r) : order_(1), c_{r} {}
    explicit Cyclo(long n) : order_(1), c_{rat(n)} {}

    // zeta_n^k
    static Cyclo zeta(int n, long k = 1);
    // Reduce an arbitrary coefficient vector (poly in zeta_n of any degree).
    static Cyclo from_coeffs(int n, const std::vector<Rat>& coeffs);

    int order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws ValidationError unless is_rational()

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator*(const Rat& r) const;
    Cyclo operator/(const Cyclo& o) const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo inverse() const;               // extended Euclid mod Phi_N
    Cyclo conj() const;                  // zeta -> zeta^{-1}
    Cyclo promoted(int new_order) const; // requires order | new_order

    // Floating embedding zeta_N -> exp(2 pi i/N); diagnostic only.
    std::complex<double> to_complex() const;

    std::string to_string() const;

private:
    int order_;
    std::vector<Rat> c_;  // size deg(Phi_order), reduced
};

inline Cyclo operator*(const Rat& r, const Cyclo& c) { return c * r; }
inline Cyclo inverse(const Cyclo& c) { return c.inverse(); }
inline bool ring_is_zero(const Cyclo& x) { return x.is_zero(); }
inline std::string ring_str(const Cyclo& x) { return x.to_string(); }

// deg Phi_n
int cyclo_degree(int n);
// Phi_n as monic integer polynomial (ascending coefficients).
const std::vector<Rat>& cyclo_polynomial(int n);

// Spec operation: reduce raw coefficients modulo Phi_N.
inline Cyclo cyclo_normalize(int order, const std::vector<Rat>& raw) {
    return Cyclo::from_coeffs(order, raw);
}

}  // namespace ade
