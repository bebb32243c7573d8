#pragma once

#include <optional>
#include <vector>

#include "hooklab/bigfloat.hpp"
#include "hooklab/modeval.hpp"
#include "hooklab/rational.hpp"

namespace hooklab {

bool is_fundamental_discriminant(long d);

// A negative fundamental discriminant: D = 1 mod 4 squarefree, or D = 4m with
// m = 2, 3 mod 4 squarefree.
class FundamentalDiscriminant {
 public:
  // Throws DomainError for anything else.
  explicit FundamentalDiscriminant(long d);
  long value() const { return d_; }

 private:
  long d_;
};

// a x^2 + b xy + c y^2
struct QuadraticForm {
  long a;
  long b;
  long c;

  long discriminant() const { return b * b - 4 * a * c; }
  // |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
  bool is_reduced() const;
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

// Kronecker symbol (d/n) for n >= 1; completely multiplicative in n.
int kronecker_symbol(long d, long n);

// Reduced positive definite forms of discriminant D with a <= a_limit. The
// default limit sqrt(|D|/3) already contains every reduced form; a larger
// limit must return the same list.
std::vector<QuadraticForm> reduced_forms(const FundamentalDiscriminant& d, long a_limit = 0);

long class_number(const FundamentalDiscriminant& d);

// 1/3 for D = -3, 1/2 for D = -4, h(D) otherwise.
Rational h_prime(const FundamentalDiscriminant& d);

// Gamma at a positive rational, as a ball. Throws DomainError for x <= 0.
HighPrecisionComplex gamma_rational(const Rational& x, mpfr_prec_t prec);

struct PeriodValue {
  FundamentalDiscriminant d;
  HighPrecisionComplex omega;
  long h;
  Rational h_prime;
};

// Omega_D = (2 pi |D|)^{-1/2} (prod_{j=1}^{|D|-1} Gamma(j/|D|)^{chi_D(j)})^{1/(2 h'(D))}.
// Throws DomainError for D <= -100.
PeriodValue omega_D(const FundamentalDiscriminant& d, mpfr_prec_t prec);

// (eta(-1/(t^2 tau)) / eta(-1/tau)) H_t*(-1/(t^2 tau)) - H_t*(tau)/sqrt(-i tau).
// For t = 1 this is H_1*(-1/tau) - H_1*(tau)/sqrt(-i tau); in general it is
// the alpha/beta combination divided by beta_t, so it needs no period.
HighPrecisionComplex cs_combination(const UpperHalfPoint& tau, int t, const EvalOptions& opts);

// rho = cs_combination(tau, 1) * sqrt(Omega_D) / Psi(tau).
// Throws DegeneratePointError when Psi(tau) may vanish (tau = i).
HighPrecisionComplex cs_algebraic_ratio(const UpperHalfPoint& tau, const FundamentalDiscriminant& d,
                                        const EvalOptions& opts);

struct AlgebraicWitness {
  int power;
  Rational value;
};

// Heuristic search for x^k = r with k <= max_power and r rational of height
// <= max_height, accepted when |x^k - r| < 2^threshold_log2 (default
// -prec/2). A hit is evidence, never a proof.
std::optional<AlgebraicWitness> probe_algebraicity(const HighPrecisionComplex& x, int max_power,
                                                   long max_height,
                                                   std::optional<long> threshold_log2 = std::nullopt);

struct CsReport {
  HighPrecisionComplex tau;
  long d;
  int t;
  HighPrecisionComplex combination;
  // Psi(t tau) / eta(-1/tau), the predicted value of combination
  HighPrecisionComplex psi_over_eta;
  // combination - psi_over_eta
  HighPrecisionComplex residual;
  // alpha_t H_t*(-1/(t^2 tau)) - beta_t H_t*(tau)/sqrt(-i tau) - Psi(t tau)/sqrt(Omega_D)
  HighPrecisionComplex remark_residual;
  HighPrecisionComplex alpha;
  HighPrecisionComplex beta;
  // combination * sqrt(Omega_D) / Psi(t tau) = 1/beta_t; empty when Psi(t tau) may vanish
  std::optional<HighPrecisionComplex> ratio;
  std::optional<AlgebraicWitness> probe;
  bool degenerate;

  bool pass() const { return residual.contains_zero() && remark_residual.contains_zero(); }
};

// Full check at a caller-asserted CM point tau of discriminant D.
CsReport cs_check(const UpperHalfPoint& tau, const FundamentalDiscriminant& d, int t,
                  const EvalOptions& opts, int probe_power = 8, long probe_height = 10000);

}  // namespace hooklab
