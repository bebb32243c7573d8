#include "hooklab/chowla_selberg.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "hooklab/errors.hpp"

namespace hooklab {

using HPC = HighPrecisionComplex;

namespace {

bool is_squarefree(long m) {
  m = std::labs(m);
  for (long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) {
      return false;
    }
    if (m % p == 0) {
      m /= p;
    }
  }
  return true;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(long a, long n) {
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const long r = n % 8;
      if (r == 3 || r == 5) {
        result = -result;
      }
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) {
      result = -result;
    }
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

bool is_fundamental_discriminant(long d) {
  if (d == 0 || d == 1) {
    return false;
  }
  if (mod(d, 4) == 1) {
    return is_squarefree(d);
  }
  if (mod(d, 4) != 0) {
    return false;
  }
  const long m = d / 4;
  const long r = mod(m, 4);
  return (r == 2 || r == 3) && is_squarefree(m);
}

FundamentalDiscriminant::FundamentalDiscriminant(long d) : d_(d) {
  if (d >= 0 || !is_fundamental_discriminant(d)) {
    throw DomainError(std::to_string(d) + " is not a negative fundamental discriminant");
  }
}

bool QuadraticForm::is_reduced() const {
  const long abs_b = std::labs(b);
  if (!(abs_b <= a && a <= c)) {
    return false;
  }
  if ((abs_b == a || a == c) && b < 0) {
    return false;
  }
  return true;
}

int kronecker_symbol(long d, long n) {
  if (n < 1) {
    throw DomainError("kronecker_symbol needs n >= 1");
  }
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (d % 2 == 0) {
      return 0;
    }
    const long r = mod(d, 8);
    if (r == 3 || r == 5) {
      result = -result;
    }
  }
  return result * jacobi(d, n);
}

std::vector<QuadraticForm> reduced_forms(const FundamentalDiscriminant& d, long a_limit) {
  const long abs_d = -d.value();
  if (a_limit <= 0) {
    a_limit = 1;
    while (3 * (a_limit + 1) * (a_limit + 1) <= abs_d) {
      ++a_limit;
    }
  }
  std::vector<QuadraticForm> forms;
  for (long a = 1; a <= a_limit; ++a) {
    for (long b = -a; b <= a; ++b) {
      const long numerator = b * b - d.value();
      if (numerator % (4 * a) != 0) {
        continue;
      }
      const QuadraticForm f{a, b, numerator / (4 * a)};
      if (f.is_reduced()) {
        forms.push_back(f);
      }
    }
  }
  return forms;
}

long class_number(const FundamentalDiscriminant& d) {
  return static_cast<long>(reduced_forms(d).size());
}

Rational h_prime(const FundamentalDiscriminant& d) {
  if (d.value() == -3) {
    return Rational(1, 3);
  }
  if (d.value() == -4) {
    return Rational(1, 2);
  }
  return Rational(class_number(d));
}

namespace {

// Bound on 1 + x |psi(x)| for x > 0, using psi(x) = psi(x+1) - 1/x and
// -gamma < psi(x+1) < log(x+1).
double digamma_sensitivity(double x) { return 2.0 + x * (std::log1p(x) + 1.0); }

void require_positive(const Rational& x) {
  if (x <= 0) {
    throw DomainError("Gamma is only evaluated at positive rationals here");
  }
}

HPC lngamma_rational(const Rational& x, mpfr_prec_t wp) {
  require_positive(x);
  const Real xr(x, wp);
  Real value = lngamma(xr);
  const double factor = 2.0 * (digamma_sensitivity(x.get_d()) + std::fabs(value.to_double()));
  const ErrorBound err = ErrorBound::above(factor) * ErrorBound::pow2(1 - static_cast<long>(wp));
  return {std::move(value), Real(wp), err};
}

EvalOptions widened(const EvalOptions& opts) {
  EvalOptions inner = opts;
  inner.prec_bits = opts.prec_bits + kGuardBits;
  return inner;
}

UpperHalfPoint inverted_point(const HPC& z, long scale) {
  const mpfr_prec_t wp = z.precision_bits();
  return UpperHalfPoint(-(HPC::exact(1, 0, wp) / (scale * z)));
}

HPC root_minus_i_times(const HPC& z) {
  return branch::sqrt(-(HPC::exact(0, 1, z.precision_bits()) * z));
}

}  // namespace

HighPrecisionComplex gamma_rational(const Rational& x, mpfr_prec_t prec) {
  require_positive(x);
  const mpfr_prec_t wp = prec + kGuardBits;
  Real value = gamma(Real(x, wp));
  const ErrorBound err = ErrorBound::above(value) * ErrorBound::above(digamma_sensitivity(x.get_d())) *
                         ErrorBound::pow2(2 - static_cast<long>(wp));
  return HPC(std::move(value), Real(wp), err).with_precision(prec);
}

PeriodValue omega_D(const FundamentalDiscriminant& d, mpfr_prec_t prec) {
  const long abs_d = -d.value();
  if (abs_d >= 100) {
    throw DomainError("Omega_D is only computed for -100 < D < 0");
  }
  const mpfr_prec_t wp = prec + kGuardBits;
  HPC log_product = HPC::exact(0, 0, wp);
  for (long j = 1; j < abs_d; ++j) {
    const int chi = kronecker_symbol(d.value(), j);
    if (chi == 0) {
      continue;
    }
    const HPC term = lngamma_rational(Rational(j, abs_d), wp);
    log_product = chi > 0 ? log_product + term : log_product - term;
  }
  const long h = class_number(d);
  const Rational hp = h_prime(d);
  const Rational exponent = 1 / (2 * hp);
  const HPC scaled = log_product * HPC::from_rational(exponent, 0, wp);
  const HPC normaliser = branch::sqrt(2 * abs_d * HPC::pi(wp));
  HPC omega = (exp(scaled) / normaliser).with_precision(prec);
  return {d, std::move(omega), h, hp};
}

HighPrecisionComplex cs_combination(const UpperHalfPoint& tau, int t, const EvalOptions& opts) {
  if (t < 1) {
    throw DomainError("t must be a positive integer");
  }
  const EvalOptions inner = widened(opts);
  const HPC z = tau.value().with_precision(inner.prec_bits);
  const UpperHalfPoint point(z);
  const UpperHalfPoint image = inverted_point(z, static_cast<long>(t) * t);
  const UpperHalfPoint inverse = inverted_point(z, 1);
  const HPC weight = t == 1 ? HPC::exact(1, 0, inner.prec_bits)
                            : eval_eta(image, inner) / eval_eta(inverse, inner);
  const HPC value = weight * eval_H_t_star(t, image, inner) -
                    eval_H_t_star(t, point, inner) / root_minus_i_times(z);
  return value.with_precision(opts.prec_bits);
}

HighPrecisionComplex cs_algebraic_ratio(const UpperHalfPoint& tau, const FundamentalDiscriminant& d,
                                        const EvalOptions& opts) {
  const EvalOptions inner = widened(opts);
  const HPC psi = eval_Psi(UpperHalfPoint(tau.value().with_precision(inner.prec_bits)), inner);
  if (psi.contains_zero()) {
    throw DegeneratePointError("Psi(tau) vanishes (numerically) at this point");
  }
  const HPC root_omega = branch::sqrt(omega_D(d, inner.prec_bits).omega);
  const HPC rho = cs_combination(tau, 1, inner) * root_omega / psi;
  return rho.with_precision(opts.prec_bits);
}

std::optional<AlgebraicWitness> probe_algebraicity(const HighPrecisionComplex& x, int max_power,
                                                   long max_height, std::optional<long> threshold_log2) {
  const long exponent = threshold_log2.value_or(-static_cast<long>(x.precision_bits()) / 2);
  const ErrorBound threshold = ErrorBound::pow2(exponent);
  const mpz_class height_cap(max_height);
  HPC power = x;
  for (int k = 1; k <= max_power; ++k) {
    if (k > 1) {
      power = power * x;
    }
    const ErrorBound imaginary = ErrorBound::above(power.imag()) + power.error_bound();
    if (!(imaginary < threshold)) {
      continue;
    }
    // continued-fraction convergents of the real part
    Rational rest = power.real().to_rational();
    mpz_class h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    for (int step = 0; step < 256; ++step) {
      mpz_class a;
      mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
      const mpz_class h = a * h1 + h2;
      const mpz_class kk = a * k1 + k2;
      Rational candidate(h, kk);
      candidate.canonicalize();
      if (height(candidate) > height_cap) {
        break;
      }
      const Real distance = power.real() - Real(candidate, power.precision_bits());
      if (ErrorBound::above(distance) + imaginary < threshold) {
        return AlgebraicWitness{k, candidate};
      }
      h2 = h1;
      h1 = h;
      k2 = k1;
      k1 = kk;
      rest -= a;
      if (rest == 0) {
        break;
      }
      rest = 1 / rest;
    }
  }
  return std::nullopt;
}

CsReport cs_check(const UpperHalfPoint& tau, const FundamentalDiscriminant& d, int t,
                  const EvalOptions& opts, int probe_power, long probe_height) {
  const EvalOptions inner = widened(opts);
  const mpfr_prec_t wp = inner.prec_bits;
  const HPC z = tau.value().with_precision(wp);
  const UpperHalfPoint point(z);
  const UpperHalfPoint image = inverted_point(z, static_cast<long>(t) * t);
  const UpperHalfPoint inverse = inverted_point(z, 1);
  const UpperHalfPoint scaled(static_cast<long>(t) * z);

  const HPC combination = cs_combination(point, t, inner);
  const HPC eta_inverse = eval_eta(inverse, inner);
  const HPC psi = eval_Psi(scaled, inner);
  const HPC psi_over_eta = psi / eta_inverse;

  const HPC root_omega = branch::sqrt(omega_D(d, wp).omega);
  const HPC alpha = eval_eta(image, inner) / root_omega;
  const HPC beta = eta_inverse / root_omega;
  const HPC remark = alpha * eval_H_t_star(t, image, inner) -
                     beta * eval_H_t_star(t, point, inner) / root_minus_i_times(z) -
                     psi / root_omega;

  const bool degenerate = psi.contains_zero();
  std::optional<HPC> ratio;
  std::optional<AlgebraicWitness> probe;
  if (!degenerate) {
    ratio = (combination * root_omega / psi).with_precision(opts.prec_bits);
    probe = probe_algebraicity(*ratio, probe_power, probe_height);
  }
  const mpfr_prec_t p = opts.prec_bits;
  return CsReport{tau.value(),
                  d.value(),
                  t,
                  combination.with_precision(p),
                  psi_over_eta.with_precision(p),
                  (combination - psi_over_eta).with_precision(p),
                  remark.with_precision(p),
                  alpha.with_precision(p),
                  beta.with_precision(p),
                  std::move(ratio),
                  std::move(probe),
                  degenerate};
}

}  // namespace hooklab
