#ifndef HMAP_SERIES_HPP
#define HMAP_SERIES_HPP

#include <complex>
#include <span>
#include <vector>

namespace hmap {

using cplx = std::complex<double>;

// Division guard: a series is treated as non-invertible when |c0| falls at
// or below this, since the reciprocal recurrence amplifies noise beyond any
// useful tolerance.
inline constexpr double kEpsDiv = 1e-12;

// Truncated Taylor series c0 + c1 z + ... + cN z^N. A value type: every
// operation returns a fresh series and the result order is the minimum of
// the operand orders. Extending or shortening the truncation order is an
// explicit operation (extended/truncated), never an implicit side effect.
class Series {
 public:
  explicit Series(std::vector<cplx> coeffs);

  static Series zero(int order);
  // coeff * z^power, truncated at `order`.
  static Series monomial(int order, int power, cplx coeff = 1.0);
  // The normalized identity map z.
  static Series identity(int order) { return monomial(order, 1); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  cplx coeff(int n) const;
  std::span<const cplx> coeffs() const { return coeffs_; }

  // Same coefficients at a different truncation order (zero padded or cut).
  Series extended(int order) const;

  bool all_finite() const;

 private:
  std::vector<cplx> coeffs_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
// Cauchy product c_n = sum_{k=0}^{n} a_k b_{n-k}, truncated at min order.
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, cplx factor);

// Reciprocal to the same order: d0 = 1/c0, d_n = -(1/c0) sum c_k d_{n-k}.
// Throws near_zero_constant_term when |c0| <= kEpsDiv.
Series recip(const Series& a);

// c_n -> (n+1) c_{n+1}; order drops by one (order-0 input gives the zero
// series of order 0).
Series derivative(const Series& a);
// c_n -> c_n/(n+1) shifted up; constant term fixed to 0; order rises by one.
Series antiderivative(const Series& a);

// Horner-style composition outer(inner(z)) at the shared truncation order.
// Requires inner constant term exactly 0 (nonvanishing_inner_term otherwise);
// composition about a nonzero base point has unbounded truncation error and
// must go through pointwise evaluation instead.
Series compose(const Series& outer, const Series& inner);

cplx eval(const Series& a, cplx z);

// Recover Taylor coefficients from samples f(r e^{2 pi i k / M}), k = 0..M-1:
// c_n = (1/(M r^n)) sum_k f_k e^{-2 pi i k n / M}. Requires 0 < r < 1
// (radius_out_of_range) and M > 2*order (insufficient_samples).
Series coeffs_from_samples(std::span<const cplx> fvals, double r, int order);

}  // namespace hmap

#endif
