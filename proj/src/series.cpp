#include "hsf/series.hpp"

#include <stdexcept>

namespace hsf {

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b, std::size_t len) {
    RationalSeries r(len, Rational(0));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

RationalSeries series_div(const RationalSeries& a, const RationalSeries& b, std::size_t len) {
    if (b.empty() || b[0].is_zero()) throw std::invalid_argument("series_div: b(0) must be nonzero");
    RationalSeries q(len, Rational(0));
    const Rational inv = b[0].reciprocal();
    for (std::size_t k = 0; k < len; ++k) {
        Rational acc = k < a.size() ? a[k] : Rational(0);
        for (std::size_t j = 1; j <= k && j < b.size(); ++j) acc -= b[j] * q[k - j];
        q[k] = acc * inv;
    }
    return q;
}

RationalSeries sinh_series(std::size_t len) {
    RationalSeries s(len, Rational(0));
    for (std::size_t k = 1; k < len; k += 2) s[k] = factorial(static_cast<int>(k)).reciprocal();
    return s;
}

RationalSeries cosh_series(std::size_t len) {
    RationalSeries c(len, Rational(0));
    for (std::size_t k = 0; k < len; k += 2) c[k] = factorial(static_cast<int>(k)).reciprocal();
    return c;
}

RationalSeries tanh_series(std::size_t len) {
    return series_div(sinh_series(len), cosh_series(len), len);
}

}  // namespace hsf
