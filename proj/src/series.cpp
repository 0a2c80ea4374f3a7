#include "series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "error.hpp"

namespace hmap {

Series::Series(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    fail(ErrorCode::invalid_argument, "series needs at least a constant term");
}

Series Series::zero(int order) {
  if (order < 0) fail(ErrorCode::invalid_argument, "negative series order");
  return Series(std::vector<cplx>(order + 1, 0.0));
}

Series Series::monomial(int order, int power, cplx coeff) {
  if (power < 0) fail(ErrorCode::invalid_argument, "negative monomial power");
  Series s = zero(order);
  if (power <= order) s.coeffs_[power] = coeff;
  return s;
}

cplx Series::coeff(int n) const {
  if (n < 0) fail(ErrorCode::invalid_argument, "negative coefficient index");
  if (n >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[n];
}

Series Series::extended(int order) const {
  if (order < 0) fail(ErrorCode::invalid_argument, "negative series order");
  std::vector<cplx> c(order + 1, 0.0);
  const int m = std::min(order, this->order());
  std::copy_n(coeffs_.begin(), m + 1, c.begin());
  return Series(std::move(c));
}

bool Series::all_finite() const {
  for (const cplx& c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

namespace {

template <class Op>
Series zip(const Series& a, const Series& b, Op op) {
  const int n = std::min(a.order(), b.order());
  std::vector<cplx> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = op(a.coeff(k), b.coeff(k));
  return Series(std::move(c));
}

}  // namespace

Series add(const Series& a, const Series& b) {
  return zip(a, b, [](cplx x, cplx y) { return x + y; });
}

Series sub(const Series& a, const Series& b) {
  return zip(a, b, [](cplx x, cplx y) { return x - y; });
}

Series mul(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<cplx> c(n + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    cplx acc = 0.0;
    const int jmax = std::min(k, a.order());
    for (int j = std::max(0, k - b.order()); j <= jmax; ++j)
      acc += a.coeff(j) * b.coeff(k - j);
    c[k] = acc;
  }
  return Series(std::move(c));
}

Series scale(const Series& a, cplx factor) {
  std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
  for (cplx& x : c) x *= factor;
  return Series(std::move(c));
}

Series recip(const Series& a) {
  const cplx c0 = a.coeff(0);
  if (std::abs(c0) <= kEpsDiv)
    fail(ErrorCode::near_zero_constant_term,
         "series constant term too small to invert");
  const int n = a.order();
  std::vector<cplx> d(n + 1);
  d[0] = 1.0 / c0;
  for (int k = 1; k <= n; ++k) {
    cplx acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += a.coeff(j) * d[k - j];
    d[k] = -acc / c0;
  }
  return Series(std::move(d));
}

Series derivative(const Series& a) {
  const int n = a.order();
  if (n == 0) return Series::zero(0);
  std::vector<cplx> c(n);
  for (int k = 0; k < n; ++k) c[k] = double(k + 1) * a.coeff(k + 1);
  return Series(std::move(c));
}

Series antiderivative(const Series& a) {
  const int n = a.order();
  std::vector<cplx> c(n + 2, 0.0);
  for (int k = 0; k <= n; ++k) c[k + 1] = a.coeff(k) / double(k + 1);
  return Series(std::move(c));
}

Series compose(const Series& outer, const Series& inner) {
  if (inner.coeff(0) != 0.0)
    fail(ErrorCode::nonvanishing_inner_term,
         "composition requires inner constant term 0");
  const int n = std::min(outer.order(), inner.order());
  const Series in = inner.extended(n);
  Series acc = Series::zero(n);
  for (int k = n; k >= 0; --k) {
    acc = mul(acc, in);
    acc = add(acc, Series::monomial(n, 0, outer.coeff(k)));
  }
  return acc;
}

cplx eval(const Series& a, cplx z) {
  cplx acc = 0.0;
  for (int k = a.order(); k >= 0; --k) acc = acc * z + a.coeff(k);
  return acc;
}

Series coeffs_from_samples(std::span<const cplx> fvals, double r, int order) {
  if (!(r > 0.0 && r < 1.0))
    fail(ErrorCode::radius_out_of_range, "sampling radius must be in (0,1)");
  const int m = static_cast<int>(fvals.size());
  if (m <= 2 * order)
    fail(ErrorCode::insufficient_samples,
         "need more than 2*order circle samples");
  std::vector<cplx> c(order + 1);
  double rn = 1.0;
  for (int n = 0; n <= order; ++n) {
    cplx acc = 0.0;
    for (int k = 0; k < m; ++k) {
      const double ang = -2.0 * std::numbers::pi * double(k) * double(n) / m;
      acc += fvals[k] * std::polar(1.0, ang);
    }
    c[n] = acc / (double(m) * rn);
    rn *= r;
  }
  return Series(std::move(c));
}

}  // namespace hmap
