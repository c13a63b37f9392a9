#ifndef HSF_SERIES_HPP
#define HSF_SERIES_HPP

#include <vector>

#include "hsf/rational.hpp"

namespace hsf {

/// Truncated univariate power series: c[i] is the coefficient of t^i.
/// All operations truncate to the shorter length.
using RationalSeries = std::vector<Rational>;

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b, std::size_t len);

/// a / b with b[0] != 0.
RationalSeries series_div(const RationalSeries& a, const RationalSeries& b, std::size_t len);

RationalSeries sinh_series(std::size_t len);
RationalSeries cosh_series(std::size_t len);

/// th(t) = sinh(t)/cosh(t) = t - t^3/3 + 2 t^5/15 - 17 t^7/315 + ...
RationalSeries tanh_series(std::size_t len);

}  // namespace hsf

#endif
