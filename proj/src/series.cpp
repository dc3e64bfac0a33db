#include "ade/series.hpp"

namespace ade {

TruncSeries<Rat> arcsin_series(int order) {
    if (order < 1) throw InvalidParameter("arcsin_series needs order >= 1");
    TruncSeries<Rat> s(order, "x");
    for (int k = 0; 2 * k + 1 <= order; ++k) {
        Int num = factorial(2 * k);
        Int den = Int(1) << (2 * k);
        Int kf = factorial(k);
        den *= kf * kf * (2 * k + 1);
        s.set_coeff(2 * k + 1, rat(num, den));
    }
    return s;
}

}  // namespace ade
