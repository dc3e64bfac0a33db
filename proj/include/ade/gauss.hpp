#pragma once

#include <string>
#include <type_traits>

#include "ade/rational.hpp"

namespace ade {

// Gaussian layer T[i]/(i^2 + 1) over a base ring T: the exact arithmetic of
// Q(zeta_4) needed by the mirror-map composition.
template <class T>
struct Gauss {
    T re, im;

    Gauss() : re(), im() {}
    explicit Gauss(const Rat& r) : re(r), im() {}
    explicit Gauss(T real)
        requires(!std::is_same_v<T, Rat>)
        : re(std::move(real)), im() {}
    Gauss(T real, T imag) : re(std::move(real)), im(std::move(imag)) {}

    static Gauss i() { return Gauss(T(), T(rat(1))); }

    bool is_zero() const { return ring_is_zero(re) && ring_is_zero(im); }

    Gauss operator-() const { return Gauss(-re, -im); }
    Gauss operator+(const Gauss& o) const { return Gauss(re + o.re, im + o.im); }
    Gauss operator-(const Gauss& o) const { return Gauss(re - o.re, im - o.im); }
    Gauss operator*(const Gauss& o) const {
        return Gauss(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Gauss operator*(const Rat& r) const { return Gauss(re * r, im * r); }
    bool operator==(const Gauss& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Gauss& o) const { return !(*this == o); }

    Gauss conj() const { return Gauss(re, -im); }
};

template <class T>
bool ring_is_zero(const Gauss<T>& g) { return g.is_zero(); }

template <class T>
std::string ring_str(const Gauss<T>& g) {
    return "(" + ring_str(g.re) + ") + i*(" + ring_str(g.im) + ")";
}

template <class T>
Gauss<T> inverse(const Gauss<T>& g) {
    // 1/(x+iy) = (x-iy)/(x^2+y^2)
    T n = g.re * g.re + g.im * g.im;
    T ninv = inverse(n);
    return Gauss<T>(g.re * ninv, -(g.im * ninv));
}

}  // namespace ade
