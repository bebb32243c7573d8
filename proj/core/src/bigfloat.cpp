#include "hooklab/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "hooklab/errors.hpp"

namespace hooklab {

namespace {

constexpr mpfr_prec_t kBoundPrecision = 40;

mpfr_prec_t max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

// ---------------------------------------------------------------- Real

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::parse(std::string_view text, mpfr_prec_t prec) {
  Real out(prec);
  const std::string s(text);
  if (s.empty() || mpfr_set_str(out.value_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("malformed decimal '" + s + "'");
  }
  return out;
}

Real Real::pi(mpfr_prec_t prec) {
  Real out(prec);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

Rational Real::to_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real Real::abs() const {
  Real out(precision());
  mpfr_abs(out.value_, value_, MPFR_RNDN);
  return out;
}

Real Real::operator-() const {
  Real out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

Real operator+(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  Real out(max_prec(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

namespace {

template <typename F>
Real unary(const Real& x, F f) {
  Real out(x.precision());
  f(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real gamma(const Real& x) { return unary(x, mpfr_gamma); }

Real lngamma(const Real& x) { return unary(x, mpfr_lngamma); }

Real atan2(const Real& y, const Real& x) {
  Real out(max_prec(y, x));
  mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
  return out;
}

Real hypot(const Real& x, const Real& y) {
  Real out(max_prec(x, y));
  mpfr_hypot(out.get(), x.get(), y.get(), MPFR_RNDN);
  return out;
}

// ---------------------------------------------------------------- ErrorBound

ErrorBound::ErrorBound() {
  mpfr_init2(value_, kBoundPrecision);
  mpfr_set_zero(value_, 1);
}

ErrorBound::ErrorBound(const ErrorBound& other) {
  mpfr_init2(value_, kBoundPrecision);
  mpfr_set(value_, other.value_, MPFR_RNDU);
}

ErrorBound::ErrorBound(ErrorBound&& other) noexcept {
  mpfr_init2(value_, kBoundPrecision);
  mpfr_swap(value_, other.value_);
}

ErrorBound& ErrorBound::operator=(const ErrorBound& other) {
  mpfr_set(value_, other.value_, MPFR_RNDU);
  return *this;
}

ErrorBound& ErrorBound::operator=(ErrorBound&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

ErrorBound::~ErrorBound() { mpfr_clear(value_); }

ErrorBound ErrorBound::above(const Real& x) {
  ErrorBound out;
  mpfr_abs(out.value_, x.get(), MPFR_RNDU);
  return out;
}

ErrorBound ErrorBound::above(double x) {
  ErrorBound out;
  mpfr_set_d(out.value_, std::fabs(x), MPFR_RNDU);
  return out;
}

ErrorBound ErrorBound::pow2(long exponent) {
  ErrorBound out;
  mpfr_set_ui_2exp(out.value_, 1, exponent, MPFR_RNDU);
  return out;
}

long ErrorBound::log2_ceil(long lowest) const {
  if (mpfr_zero_p(value_)) {
    return lowest;
  }
  // value = m * 2^e with m in [1/2, 1)
  const long e = mpfr_get_exp(value_);
  ErrorBound power = pow2(e - 1);
  return std::max(lowest, mpfr_equal_p(value_, power.value_) ? e - 1 : e);
}

bool ErrorBound::covers(const Real& x) const { return mpfr_cmpabs(x.get(), value_) <= 0; }

ErrorBound operator+(const ErrorBound& a, const ErrorBound& b) {
  ErrorBound out;
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDU);
  return out;
}

ErrorBound operator*(const ErrorBound& a, const ErrorBound& b) {
  ErrorBound out;
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDU);
  return out;
}

ErrorBound operator/(const ErrorBound& a, const ErrorBound& b) {
  ErrorBound out;
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDU);
  return out;
}

std::partial_ordering operator<=>(const ErrorBound& a, const ErrorBound& b) {
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

// ---------------------------------------------------------------- HighPrecisionComplex

ErrorBound difference_below(const ErrorBound& a, const ErrorBound& b) {
  ErrorBound out;
  mpfr_sub(out.get(), a.get(), b.get(), MPFR_RNDD);
  if (mpfr_sgn(out.get()) < 0) {
    mpfr_set_zero(out.get(), 1);
  }
  return out;
}

ErrorBound pow_above(const ErrorBound& a, unsigned long n) {
  ErrorBound out;
  mpfr_pow_ui(out.get(), a.get(), n, MPFR_RNDU);
  return out;
}

namespace {

ErrorBound sqrt_above(const ErrorBound& a) {
  ErrorBound out;
  mpfr_sqrt(out.get(), a.get(), MPFR_RNDU);
  return out;
}

ErrorBound sqrt_below(const ErrorBound& a) {
  ErrorBound out;
  mpfr_sqrt(out.get(), a.get(), MPFR_RNDD);
  return out;
}

ErrorBound expm1_above(const ErrorBound& a) {
  ErrorBound out;
  mpfr_expm1(out.get(), a.get(), MPFR_RNDU);
  return out;
}

// Relative rounding unit 2^(k - prec).
ErrorBound ulp_factor(mpfr_prec_t prec, long k) { return ErrorBound::pow2(k - static_cast<long>(prec)); }

ErrorBound hypot_bound(const Real& re, const Real& im, mpfr_rnd_t rnd) {
  ErrorBound out;
  mpfr_hypot(out.get(), re.get(), im.get(), rnd);
  return out;
}

}  // namespace

HighPrecisionComplex::HighPrecisionComplex(Real re, Real im, ErrorBound error)
    : re_(std::move(re)), im_(std::move(im)), err_(std::move(error)) {
  const mpfr_prec_t prec = std::max(re_.precision(), im_.precision());
  if (prec < kMinPrecision) {
    throw DomainError("precision must be at least " + std::to_string(kMinPrecision) + " bits");
  }
  if (re_.precision() != prec) {
    Real widened(prec);
    mpfr_set(widened.get(), re_.get(), MPFR_RNDN);
    re_ = std::move(widened);
  }
  if (im_.precision() != prec) {
    Real widened(prec);
    mpfr_set(widened.get(), im_.get(), MPFR_RNDN);
    im_ = std::move(widened);
  }
}

HighPrecisionComplex HighPrecisionComplex::exact(long re, long im, mpfr_prec_t prec) {
  return {Real(re, prec), Real(im, prec)};
}

HighPrecisionComplex HighPrecisionComplex::from_rational(const Rational& re, const Rational& im,
                                                         mpfr_prec_t prec) {
  HighPrecisionComplex out{Real(re, prec), Real(im, prec)};
  // each component is within half an ulp
  return out.inflated(out.magnitude_upper() * ulp_factor(prec, 1));
}

HighPrecisionComplex HighPrecisionComplex::parse(std::string_view text, mpfr_prec_t prec) {
  std::string s;
  for (char c : text) {
    if (c != ' ') {
      s.push_back(c);
    }
  }
  if (s.empty()) {
    throw std::invalid_argument("empty complex literal");
  }
  if (s.back() != 'i') {
    return {Real::parse(s, prec), Real(prec)};
  }
  s.pop_back();
  // split at the last sign that is not an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  if (im_text.empty() || im_text == "+") {
    im_text = "1";
  } else if (im_text == "-") {
    im_text = "-1";
  }
  if (im_text.front() == '+') {
    im_text.erase(0, 1);
  }
  return {Real::parse(re_text, prec), Real::parse(im_text, prec)};
}

HighPrecisionComplex HighPrecisionComplex::pi(mpfr_prec_t prec) {
  Real p = Real::pi(prec);
  ErrorBound e = ErrorBound::above(p) * ulp_factor(prec, 0);
  return {std::move(p), Real(prec), std::move(e)};
}

ErrorBound HighPrecisionComplex::magnitude_upper() const { return hypot_bound(re_, im_, MPFR_RNDU); }

ErrorBound HighPrecisionComplex::magnitude_lower() const {
  return difference_below(hypot_bound(re_, im_, MPFR_RNDD), ErrorBound());
}

bool HighPrecisionComplex::contains_zero() const { return !(magnitude_lower() > err_); }

HighPrecisionComplex HighPrecisionComplex::inflated(const ErrorBound& extra) const {
  HighPrecisionComplex out = *this;
  out.err_ = err_ + extra;
  return out;
}

HighPrecisionComplex HighPrecisionComplex::with_precision(mpfr_prec_t prec) const {
  Real re(prec), im(prec);
  mpfr_set(re.get(), re_.get(), MPFR_RNDN);
  mpfr_set(im.get(), im_.get(), MPFR_RNDN);
  HighPrecisionComplex out{std::move(re), std::move(im), err_};
  if (prec < precision_bits()) {
    return out.inflated(out.magnitude_upper() * ulp_factor(prec, 1));
  }
  return out;
}

HighPrecisionComplex HighPrecisionComplex::conj() const { return {re_, -im_, err_}; }

HighPrecisionComplex HighPrecisionComplex::operator-() const { return {-re_, -im_, err_}; }

HighPrecisionComplex operator+(const HighPrecisionComplex& a, const HighPrecisionComplex& b) {
  HighPrecisionComplex out{a.re_ + b.re_, a.im_ + b.im_, a.err_ + b.err_};
  return out.inflated(out.magnitude_upper() * ulp_factor(out.precision_bits(), 1));
}

HighPrecisionComplex operator-(const HighPrecisionComplex& a, const HighPrecisionComplex& b) {
  HighPrecisionComplex out{a.re_ - b.re_, a.im_ - b.im_, a.err_ + b.err_};
  return out.inflated(out.magnitude_upper() * ulp_factor(out.precision_bits(), 1));
}

HighPrecisionComplex operator*(const HighPrecisionComplex& a, const HighPrecisionComplex& b) {
  const ErrorBound ma = a.magnitude_upper();
  const ErrorBound mb = b.magnitude_upper();
  const ErrorBound propagated = ma * b.err_ + mb * a.err_ + a.err_ * b.err_;
  HighPrecisionComplex out{a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_, propagated};
  return out.inflated(ma * mb * ulp_factor(out.precision_bits(), 2));
}

HighPrecisionComplex operator*(long k, const HighPrecisionComplex& a) {
  return HighPrecisionComplex::exact(k, 0, a.precision_bits()) * a;
}

HighPrecisionComplex operator/(const HighPrecisionComplex& a, const HighPrecisionComplex& b) {
  const ErrorBound mb_low = b.magnitude_lower();
  if (!(mb_low > b.err_)) {
    throw DomainError("division by a value that may be zero");
  }
  const ErrorBound ma = a.magnitude_upper();
  const Real den = b.re_ * b.re_ + b.im_ * b.im_;
  Real re = (a.re_ * b.re_ + a.im_ * b.im_) / den;
  Real im = (a.im_ * b.re_ - a.re_ * b.im_) / den;
  const ErrorBound ratio = ma / mb_low;
  // |a'/b' - a/b| <= (|da| + |a/b| |db|) / (|b| - |db|)
  const ErrorBound propagated = (a.err_ + ratio * b.err_) / difference_below(mb_low, b.err_);
  HighPrecisionComplex out{std::move(re), std::move(im), propagated};
  return out.inflated(ratio * ulp_factor(out.precision_bits(), 3));
}

HighPrecisionComplex exp(const HighPrecisionComplex& z) {
  const mpfr_prec_t prec = z.precision_bits();
  const Real modulus = exp(z.real());
  HighPrecisionComplex out{modulus * cos(z.imag()), modulus * sin(z.imag())};
  const ErrorBound m = ErrorBound::above(modulus);
  // |e^{z+d} - e^z| <= |e^z| (e^{|d|} - 1)
  return out.inflated(m * expm1_above(z.error_bound()) + m * ulp_factor(prec, 3));
}

namespace branch {

namespace {

void require_off_cut(const HighPrecisionComplex& z, const char* op) {
  if (z.contains_zero()) {
    throw DomainError(std::string(op) + " of a value that may be zero");
  }
  // an exact point on the negative axis takes arg = -pi; a ball reaching across it has no branch
  if (z.real().sign() < 0 && !z.error_bound().is_zero() && ErrorBound::above(z.imag()) <= z.error_bound()) {
    throw DomainError(std::string(op) + " of a value straddling the branch cut");
  }
}

}  // namespace

HighPrecisionComplex log(const HighPrecisionComplex& z) {
  require_off_cut(z, "log");
  const mpfr_prec_t prec = z.precision_bits();
  Real re = hooklab::log(hypot(z.real(), z.imag()));
  Real im = (z.imag().is_zero() && z.real().sign() < 0) ? -Real::pi(prec) : atan2(z.imag(), z.real());
  const ErrorBound low = z.magnitude_lower();
  const ErrorBound propagated = z.error_bound() / difference_below(low, z.error_bound());
  HighPrecisionComplex out{std::move(re), std::move(im), propagated};
  return out.inflated((ErrorBound::pow2(0) + out.magnitude_upper()) * ulp_factor(prec, 2));
}

HighPrecisionComplex sqrt(const HighPrecisionComplex& z) {
  const mpfr_prec_t prec = z.precision_bits();
  if (z.real().is_zero() && z.imag().is_zero()) {
    return {Real(prec), Real(prec), sqrt_above(z.error_bound())};
  }
  require_off_cut(z, "sqrt");
  const Real r = hypot(z.real(), z.imag());
  const Real two(2, prec);
  Real re(prec), im(prec);
  if (z.real().sign() >= 0) {
    re = hooklab::sqrt((r + z.real()) / two);
    im = z.imag() / (two * re);
  } else {
    Real s = hooklab::sqrt((r - z.real()) / two);
    re = z.imag().abs() / (two * s);
    // arg = -pi on the negative real axis
    im = z.imag().sign() > 0 ? s : -s;
  }
  const ErrorBound propagated = z.error_bound() / sqrt_below(z.magnitude_lower());
  HighPrecisionComplex out{std::move(re), std::move(im), propagated};
  return out.inflated(out.magnitude_upper() * ulp_factor(prec, 3));
}

}  // namespace branch

}  // namespace hooklab
