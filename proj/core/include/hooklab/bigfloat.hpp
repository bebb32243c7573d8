#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "hooklab/rational.hpp"

namespace hooklab {

inline constexpr mpfr_prec_t kMinPrecision = 64;

// Owning wrapper around an mpfr_t. Binary operations round to nearest at the
// larger of the operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t prec);
  Real(long value, mpfr_prec_t prec);
  Real(const Rational& value, mpfr_prec_t prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  // Decimal or scientific notation. Throws std::invalid_argument.
  static Real parse(std::string_view text, mpfr_prec_t prec);
  static Real pi(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Exact value of the binary float.
  Rational to_rational() const;
  // Scientific notation with the given number of significant digits.
  std::string to_string(int digits) const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }

  Real abs() const;
  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  mpfr_t value_;
};

Real exp(const Real& x);
Real log(const Real& x);
Real sqrt(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
// Correctly rounded Gamma and log|Gamma| (MPFR).
Real gamma(const Real& x);
Real lngamma(const Real& x);

// Non-negative low-precision number used as a rigorous upper bound on an
// absolute error. All arithmetic rounds upward.
class ErrorBound {
 public:
  ErrorBound();
  ErrorBound(const ErrorBound& other);
  ErrorBound(ErrorBound&& other) noexcept;
  ErrorBound& operator=(const ErrorBound& other);
  ErrorBound& operator=(ErrorBound&& other) noexcept;
  ~ErrorBound();

  // |x| rounded up.
  static ErrorBound above(const Real& x);
  static ErrorBound above(double x);
  static ErrorBound pow2(long exponent);

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  // Smallest integer e with bound <= 2^e; returns lowest for a zero bound.
  long log2_ceil(long lowest) const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDU); }
  // True iff |x| <= bound.
  bool covers(const Real& x) const;

  friend ErrorBound operator+(const ErrorBound& a, const ErrorBound& b);
  friend ErrorBound operator*(const ErrorBound& a, const ErrorBound& b);
  // a / b with the divisor taken as a lower bound; rounds up.
  friend ErrorBound operator/(const ErrorBound& a, const ErrorBound& b);
  friend std::partial_ordering operator<=>(const ErrorBound& a, const ErrorBound& b);
  friend bool operator==(const ErrorBound& a, const ErrorBound& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

 private:
  mpfr_t value_;
};

// a - b rounded down and clipped at zero (a lower bound minus an upper bound).
ErrorBound difference_below(const ErrorBound& a, const ErrorBound& b);
// a^n rounded up.
ErrorBound pow_above(const ErrorBound& a, unsigned long n);

// Complex midpoint with a radius: the true value lies within error_bound() of
// (real(), imag()). Every operation adds its own rounding error and the
// propagated input error, so the radius is a conservative absolute bound.
class HighPrecisionComplex {
 public:
  // Throws DomainError when the precision is below kMinPrecision.
  HighPrecisionComplex(Real re, Real im, ErrorBound error = {});

  static HighPrecisionComplex exact(long re, long im, mpfr_prec_t prec);
  static HighPrecisionComplex from_rational(const Rational& re, const Rational& im,
                                            mpfr_prec_t prec);
  // Parses "a+bi", "a-bi", "bi", "a". The decimal inputs are rounded once to
  // prec bits and the rounded value is taken as exact.
  static HighPrecisionComplex parse(std::string_view text, mpfr_prec_t prec);
  static HighPrecisionComplex pi(mpfr_prec_t prec);

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  const ErrorBound& error_bound() const { return err_; }
  mpfr_prec_t precision_bits() const { return re_.precision(); }

  // |midpoint| rounded up / down.
  ErrorBound magnitude_upper() const;
  ErrorBound magnitude_lower() const;
  // Upper bound on |true value|.
  ErrorBound abs_upper() const { return magnitude_upper() + err_; }
  bool contains_zero() const;

  HighPrecisionComplex inflated(const ErrorBound& extra) const;
  // Same ball at another precision; narrowing adds the rounding error.
  HighPrecisionComplex with_precision(mpfr_prec_t prec) const;
  HighPrecisionComplex conj() const;

  HighPrecisionComplex operator-() const;
  friend HighPrecisionComplex operator+(const HighPrecisionComplex& a, const HighPrecisionComplex& b);
  friend HighPrecisionComplex operator-(const HighPrecisionComplex& a, const HighPrecisionComplex& b);
  friend HighPrecisionComplex operator*(const HighPrecisionComplex& a, const HighPrecisionComplex& b);
  // Throws DomainError when the divisor ball contains zero.
  friend HighPrecisionComplex operator/(const HighPrecisionComplex& a, const HighPrecisionComplex& b);
  friend HighPrecisionComplex operator*(long k, const HighPrecisionComplex& a);

 private:
  Real re_;
  Real im_;
  ErrorBound err_;
};

HighPrecisionComplex exp(const HighPrecisionComplex& z);

// The one branch convention used everywhere: arg in [-pi, pi), so log is real
// on the positive reals and sqrt is positive there. Both throw DomainError
// when the input ball straddles the cut along the negative real axis.
namespace branch {

HighPrecisionComplex log(const HighPrecisionComplex& z);
HighPrecisionComplex sqrt(const HighPrecisionComplex& z);

}  // namespace branch

}  // namespace hooklab
