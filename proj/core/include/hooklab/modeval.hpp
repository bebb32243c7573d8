#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hooklab/bigfloat.hpp"

namespace hooklab {

// q-series below this imaginary part are refused.
inline constexpr double kDefaultImFloor = 0.05;
// Extra bits carried internally beyond the requested precision.
inline constexpr mpfr_prec_t kGuardBits = 32;

// A point z with Im(z) > 0 (the whole ball, not only its midpoint).
class UpperHalfPoint {
 public:
  // Throws DomainError unless the ball lies strictly above the real axis.
  explicit UpperHalfPoint(HighPrecisionComplex z);
  // "a+bi" with decimal a, b.
  static UpperHalfPoint parse(std::string_view text, mpfr_prec_t prec);

  const HighPrecisionComplex& value() const { return z_; }

 private:
  HighPrecisionComplex z_;
};

struct EvalOptions {
  EvalOptions() = default;
  EvalOptions(mpfr_prec_t prec) : prec_bits(prec) {}  // NOLINT: precision is the common case

  mpfr_prec_t prec_bits = 128;
  double im_floor = kDefaultImFloor;
  // Number of q-series terms; 0 picks the smallest count whose tail bound is
  // below 2^-(prec_bits + 8).
  std::size_t terms = 0;
};

// Result of summing a truncated q-series: value already includes the tail
// bound in its radius.
struct SeriesEvaluation {
  HighPrecisionComplex value;
  std::size_t terms;
  ErrorBound tail;
};

// E(z) = sum_{n>=1} q^n / (n (1 - q^n)), q = e^{2 pi i z}. With r = |q| the
// tail after N terms is at most r^{N+1} / ((N+1) (1-r)^2).
// Throws FloorViolation when Im(z) < im_floor.
SeriesEvaluation evaluate_E_series(const UpperHalfPoint& z, const EvalOptions& opts);
HighPrecisionComplex eval_E(const UpperHalfPoint& z, const EvalOptions& opts);

// eta(z) = e^{2 pi i z/24} sum_k (-1)^k q^{k(3k-1)/2}. With r = |q| the tail
// beyond |k| = K is at most 2 r^{(K+1)(3K+2)/2} / (1 - r).
SeriesEvaluation evaluate_eta_series(const UpperHalfPoint& z, const EvalOptions& opts);
HighPrecisionComplex eval_eta(const UpperHalfPoint& z, const EvalOptions& opts);

// Psi(z) = -pi i (z^2 - 3z + 1) / (12 z) - log(z) / 2.
HighPrecisionComplex eval_Psi(const UpperHalfPoint& z, const EvalOptions& opts);

// P_t(z) = -t (t + pi i/12) z + 1/z.
HighPrecisionComplex eval_P_t(int t, const UpperHalfPoint& z, const EvalOptions& opts);
// L_t(z) = -log(t z) / 4.
HighPrecisionComplex eval_L_t(int t, const UpperHalfPoint& z, const EvalOptions& opts);
// M_t(z) = P_t(z) + L_t(z) + E(t z).
HighPrecisionComplex eval_M_t(int t, const UpperHalfPoint& z, const EvalOptions& opts);
// H_t*(z) = E(t z) / eta(z).
HighPrecisionComplex eval_H_t_star(int t, const UpperHalfPoint& z, const EvalOptions& opts);

enum class CheckKind {
  kInversion,          // M_t(z) - M_t(-1/(t^2 z))
  kTranslation,        // M_t(z+1) - M_t(z) - (closed form)
  kBerndt,             // E(z) - E(-1/z) + Psi(z)
  kH1StarTranslation,  // H_1*(z+1) - e^{-pi i/12} H_1*(z)
  kH1StarInversion,    // H_1*(-1/z) - H_1*(z)/sqrt(-iz) - Psi(z)/eta(-1/z)
  kEtaInversion,       // eta(-1/z) - sqrt(-iz) eta(z)
};

std::string to_string(CheckKind kind);
// Accepts the CLI spellings: inversion, translation, berndt, h1star-translation,
// h1star-inversion, eta-inversion.
CheckKind parse_check_kind(std::string_view name);

// A residual that vanishes exactly when the identity holds. The identity is
// confirmed at this precision when the residual ball contains zero.
struct CheckResult {
  CheckKind kind;
  int t;
  HighPrecisionComplex point;
  HighPrecisionComplex residual;

  bool within_budget() const { return residual.contains_zero(); }
  // Certified upper bound |midpoint| + radius on the true residual.
  ErrorBound magnitude_bound() const { return residual.abs_upper(); }
  long residual_log2() const;
  long budget_log2() const;
};

CheckResult check_inversion(int t, const UpperHalfPoint& z, const EvalOptions& opts);
CheckResult check_translation(int t, const UpperHalfPoint& z, const EvalOptions& opts);
CheckResult check_berndt(const UpperHalfPoint& z, const EvalOptions& opts);
std::pair<CheckResult, CheckResult> check_h1star_laws(const UpperHalfPoint& z, const EvalOptions& opts);
CheckResult check_eta_inversion(const UpperHalfPoint& z, const EvalOptions& opts);

CheckResult run_check(CheckKind kind, int t, const UpperHalfPoint& z, const EvalOptions& opts);

// Ten fixed points with 0.25 <= Im(z) <= 4 and Re(z) in (-0.4, 1].
std::vector<UpperHalfPoint> sample_grid(mpfr_prec_t prec);

}  // namespace hooklab
