#pragma once

#include <cstddef>
#include <vector>

#include "hooklab/rational.hpp"

namespace hooklab {

// q^offset * (c_0 + c_1 q + ... + c_N q^N + O(q^{N+1})) with exact rational
// coefficients. The truncation order N is explicit state: binary operations
// truncate to the smaller operand order.
class RationalSeries {
 public:
  // The zero series of the given order.
  explicit RationalSeries(std::size_t order, Rational q_offset = 0);
  // Throws PreconditionError when coeffs is empty.
  RationalSeries(std::vector<Rational> coeffs, Rational q_offset);
  explicit RationalSeries(std::vector<Rational> coeffs) : RationalSeries(std::move(coeffs), 0) {}

  static RationalSeries one(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& q_offset() const { return q_offset_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Coefficient of q^n (relative to the offset); zero for n > order.
  Rational coeff(std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : Rational(0); }
  Rational& operator[](std::size_t n) { return coeffs_[n]; }
  const Rational& operator[](std::size_t n) const { return coeffs_[n]; }

  RationalSeries truncated(std::size_t order) const;
  RationalSeries with_offset(Rational q_offset) const;

  bool is_zero() const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
  Rational q_offset_;
};

// Addition requires equal offsets (PreconditionError otherwise).
RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator-(const RationalSeries& a);
// Schoolbook convolution; offsets add.
RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
RationalSeries operator*(const Rational& c, const RationalSeries& a);

inline RationalSeries negate(const RationalSeries& a) { return -a; }

// Multiplicative inverse up to the truncation order; the offset negates.
// Throws PreconditionError when c_0 = 0.
RationalSeries invert(const RationalSeries& a);

// Formal exponential; needs c_0 = 0 and offset 0.
RationalSeries exp_series(const RationalSeries& a);
// Formal logarithm; needs c_0 = 1 and offset 0.
RationalSeries log_series(const RationalSeries& a);
// exp(s * log a); needs c_0 = 1 and offset 0.
RationalSeries pow_rational(const RationalSeries& a, const Rational& s);

// q -> q^t, truncated at the original order. Needs offset 0.
RationalSeries substitute_qt(const RationalSeries& a, int t);
// q -> y*q: coefficient n is multiplied by y^n.
RationalSeries scale_q(const RationalSeries& a, const Rational& y);

// prod_{n>=1} (1 - q^n) to order N.
RationalSeries euler_product(std::size_t order);
// sum_{n>=1} sigma_v(n) q^n with sigma_v(n) = sum_{d | n} d^v.
RationalSeries sigma_series(int v, std::size_t order);
// sum_{n>=1} q^{tn} / (n (1 - q^{tn})).
RationalSeries lambert_series(int t, std::size_t order);
// q^{1/24} * prod (1 - q^n).
RationalSeries eta_expansion(std::size_t order);

}  // namespace hooklab
