#include "hooklab/modeval.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "hooklab/errors.hpp"

namespace hooklab {

using HPC = HighPrecisionComplex;

UpperHalfPoint::UpperHalfPoint(HighPrecisionComplex z) : z_(std::move(z)) {
  if (z_.imag().sign() <= 0 || !(ErrorBound::above(z_.imag()) > z_.error_bound())) {
    throw DomainError("point is not in the upper half-plane (Im(z) must be > 0)");
  }
}

UpperHalfPoint UpperHalfPoint::parse(std::string_view text, mpfr_prec_t prec) {
  return UpperHalfPoint(HPC::parse(text, prec));
}

namespace {

struct Work {
  mpfr_prec_t target;
  mpfr_prec_t wp;
  double floor;
  std::size_t terms;
};

Work work_for(const EvalOptions& opts) {
  if (opts.prec_bits < kMinPrecision) {
    throw DomainError("precision must be at least " + std::to_string(kMinPrecision) + " bits");
  }
  return {opts.prec_bits, opts.prec_bits + kGuardBits, opts.im_floor, opts.terms};
}

HPC one(mpfr_prec_t wp) { return HPC::exact(1, 0, wp); }

HPC i_unit(mpfr_prec_t wp) { return HPC::exact(0, 1, wp); }

HPC pi_i(mpfr_prec_t wp) { return HPC::pi(wp) * i_unit(wp); }

HPC two_pi_i(mpfr_prec_t wp) { return 2 * pi_i(wp); }

// Lower bound on Im(z) as a double.
double im_lower(const HPC& z) { return z.imag().to_double() - z.error_bound().to_double(); }

void require_floor(const HPC& z, double floor) {
  if (!(im_lower(z) >= floor)) {
    throw FloorViolation("Im(z) = " + std::to_string(z.imag().to_double()) +
                         " is below the evaluation floor " + std::to_string(floor));
  }
}

// Upper bound r on |q| for q = e^{2 pi i z}; requires r < 1.
ErrorBound nome_bound(const HPC& q) {
  ErrorBound r = q.abs_upper();
  if (!(r < ErrorBound::pow2(0))) {
    throw FloorViolation("|q| is not bounded away from 1");
  }
  return r;
}

// Smallest N with tail(N) < 2^-bits, tail given in log2 form.
template <typename Log2Tail>
std::size_t terms_for(long bits, Log2Tail log2_tail) {
  std::size_t n = 1;
  while (log2_tail(n) >= -static_cast<double>(bits) && n < (1u << 20)) {
    ++n;
  }
  return n;
}

SeriesEvaluation E_series(const HPC& z, const Work& w) {
  require_floor(z, w.floor);
  const HPC q = exp(two_pi_i(w.wp) * z);
  const ErrorBound r = nome_bound(q);
  const double rd = r.to_double();
  std::size_t n_terms = w.terms;
  if (n_terms == 0) {
    n_terms = rd == 0.0 ? 1
                        : terms_for(static_cast<long>(w.target) + 8, [&](std::size_t n) {
                            const double m = static_cast<double>(n + 1);
                            return m * std::log2(rd) - std::log2(m) - 2.0 * std::log2(1.0 - rd);
                          });
  }
  HPC sum = HPC::exact(0, 0, w.wp);
  HPC qn = q;
  const HPC unit = one(w.wp);
  for (std::size_t n = 1; n <= n_terms; ++n) {
    sum = sum + qn / (static_cast<long>(n) * (unit - qn));
    qn = qn * q;
  }
  const ErrorBound gap = difference_below(ErrorBound::pow2(0), r);
  ErrorBound tail = pow_above(r, n_terms + 1) /
                    (ErrorBound::above(static_cast<double>(n_terms + 1)) * gap * gap);
  return {sum.inflated(tail), n_terms, std::move(tail)};
}

SeriesEvaluation eta_series(const HPC& z, const Work& w) {
  require_floor(z, w.floor);
  const HPC tau = two_pi_i(w.wp) * z;
  const HPC q = exp(tau);
  const HPC prefactor = exp(tau / HPC::exact(24, 0, w.wp));
  const ErrorBound r = nome_bound(q);
  const double rd = r.to_double();
  auto exponent_after = [](std::size_t k) { return (k + 1) * (3 * k + 2) / 2; };
  std::size_t k_max = w.terms;
  if (k_max == 0) {
    k_max = rd == 0.0 ? 1
                      : terms_for(static_cast<long>(w.target) + 8, [&](std::size_t k) {
                          return 1.0 + static_cast<double>(exponent_after(k)) * std::log2(rd) -
                                 std::log2(1.0 - rd);
                        });
  }
  HPC sum = one(w.wp);
  HPC qk = one(w.wp);           // q^k
  HPC pentagonal = one(w.wp);   // q^{k(3k-1)/2}
  HPC step = q;                 // q^{3k-2}
  const HPC q3 = q * q * q;
  for (std::size_t k = 1; k <= k_max; ++k) {
    qk = qk * q;
    pentagonal = pentagonal * step;
    step = step * q3;
    const HPC pair = pentagonal + pentagonal * qk;
    sum = (k % 2 == 1) ? sum - pair : sum + pair;
  }
  const ErrorBound gap = difference_below(ErrorBound::pow2(0), r);
  ErrorBound tail = ErrorBound::pow2(1) * pow_above(r, exponent_after(k_max)) / gap;
  return {prefactor * sum.inflated(tail), k_max, std::move(tail)};
}

HPC E_at(const HPC& z, const Work& w) { return E_series(z, w).value; }

HPC eta_at(const HPC& z, const Work& w) { return eta_series(z, w).value; }

HPC Psi_at(const HPC& z, mpfr_prec_t wp) {
  const HPC three = HPC::exact(3, 0, wp);
  const HPC quadratic = z * z - three * z + one(wp);
  const HPC first = -(pi_i(wp) * quadratic / (HPC::exact(12, 0, wp) * z));
  return first - branch::log(z) / HPC::exact(2, 0, wp);
}

HPC P_at(int t, const HPC& z, mpfr_prec_t wp) {
  const HPC tt = HPC::exact(t, 0, wp);
  const HPC coefficient = tt * (tt + pi_i(wp) / HPC::exact(12, 0, wp));
  return one(wp) / z - coefficient * z;
}

HPC L_at(int t, const HPC& z, mpfr_prec_t wp) {
  return -(branch::log(static_cast<long>(t) * z) / HPC::exact(4, 0, wp));
}

HPC M_at(int t, const HPC& z, const Work& w) {
  return P_at(t, z, w.wp) + L_at(t, z, w.wp) + E_at(static_cast<long>(t) * z, w);
}

HPC Hstar_at(int t, const HPC& z, const Work& w) {
  return E_at(static_cast<long>(t) * z, w) / eta_at(z, w);
}

void require_positive_t(int t) {
  if (t < 1) {
    throw DomainError("t must be a positive integer");
  }
}

HPC lifted(const UpperHalfPoint& z, const Work& w) { return z.value().with_precision(w.wp); }

CheckResult finish(CheckKind kind, int t, const UpperHalfPoint& z, const HPC& residual, const Work& w) {
  return {kind, t, z.value(), residual.with_precision(w.target)};
}

// -1/z
HPC inverted(const HPC& z, mpfr_prec_t wp) { return -(one(wp) / z); }

}  // namespace

SeriesEvaluation evaluate_E_series(const UpperHalfPoint& z, const EvalOptions& opts) {
  const Work w = work_for(opts);
  auto s = E_series(lifted(z, w), w);
  s.value = s.value.with_precision(w.target);
  return s;
}

HighPrecisionComplex eval_E(const UpperHalfPoint& z, const EvalOptions& opts) {
  return evaluate_E_series(z, opts).value;
}

SeriesEvaluation evaluate_eta_series(const UpperHalfPoint& z, const EvalOptions& opts) {
  const Work w = work_for(opts);
  auto s = eta_series(lifted(z, w), w);
  s.value = s.value.with_precision(w.target);
  return s;
}

HighPrecisionComplex eval_eta(const UpperHalfPoint& z, const EvalOptions& opts) {
  return evaluate_eta_series(z, opts).value;
}

HighPrecisionComplex eval_Psi(const UpperHalfPoint& z, const EvalOptions& opts) {
  const Work w = work_for(opts);
  return Psi_at(lifted(z, w), w.wp).with_precision(w.target);
}

HighPrecisionComplex eval_P_t(int t, const UpperHalfPoint& z, const EvalOptions& opts) {
  require_positive_t(t);
  const Work w = work_for(opts);
  return P_at(t, lifted(z, w), w.wp).with_precision(w.target);
}

HighPrecisionComplex eval_L_t(int t, const UpperHalfPoint& z, const EvalOptions& opts) {
  require_positive_t(t);
  const Work w = work_for(opts);
  return L_at(t, lifted(z, w), w.wp).with_precision(w.target);
}

HighPrecisionComplex eval_M_t(int t, const UpperHalfPoint& z, const EvalOptions& opts) {
  require_positive_t(t);
  const Work w = work_for(opts);
  return M_at(t, lifted(z, w), w).with_precision(w.target);
}

HighPrecisionComplex eval_H_t_star(int t, const UpperHalfPoint& z, const EvalOptions& opts) {
  require_positive_t(t);
  const Work w = work_for(opts);
  return Hstar_at(t, lifted(z, w), w).with_precision(w.target);
}

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::kInversion:
      return "inversion";
    case CheckKind::kTranslation:
      return "translation";
    case CheckKind::kBerndt:
      return "berndt";
    case CheckKind::kH1StarTranslation:
      return "h1star-translation";
    case CheckKind::kH1StarInversion:
      return "h1star-inversion";
    case CheckKind::kEtaInversion:
      return "eta-inversion";
  }
  return "unknown";
}

CheckKind parse_check_kind(std::string_view name) {
  for (CheckKind k : {CheckKind::kInversion, CheckKind::kTranslation, CheckKind::kBerndt,
                      CheckKind::kH1StarTranslation, CheckKind::kH1StarInversion,
                      CheckKind::kEtaInversion}) {
    if (to_string(k) == name) {
      return k;
    }
  }
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

long CheckResult::residual_log2() const {
  return residual.magnitude_upper().log2_ceil(-2 * static_cast<long>(residual.precision_bits()));
}

long CheckResult::budget_log2() const {
  return residual.error_bound().log2_ceil(-2 * static_cast<long>(residual.precision_bits()));
}

CheckResult check_inversion(int t, const UpperHalfPoint& z, const EvalOptions& opts) {
  require_positive_t(t);
  const Work w = work_for(opts);
  const HPC zz = lifted(z, w);
  const HPC image = inverted(static_cast<long>(t) * t * zz, w.wp);
  return finish(CheckKind::kInversion, t, z, M_at(t, zz, w) - M_at(t, image, w), w);
}

CheckResult check_translation(int t, const UpperHalfPoint& z, const EvalOptions& opts) {
  require_positive_t(t);
  const Work w = work_for(opts);
  const HPC zz = lifted(z, w);
  const HPC shifted = zz + one(w.wp);
  const HPC tt = HPC::exact(t, 0, w.wp);
  const HPC expected = -(tt * (tt + pi_i(w.wp) / HPC::exact(12, 0, w.wp))) -
                       one(w.wp) / (zz * shifted) +
                       branch::log(zz / shifted) / HPC::exact(4, 0, w.wp);
  const HPC residual = (M_at(t, shifted, w) - M_at(t, zz, w)) - expected;
  return finish(CheckKind::kTranslation, t, z, residual, w);
}

CheckResult check_berndt(const UpperHalfPoint& z, const EvalOptions& opts) {
  const Work w = work_for(opts);
  const HPC zz = lifted(z, w);
  const HPC residual = E_at(zz, w) - E_at(inverted(zz, w.wp), w) + Psi_at(zz, w.wp);
  return finish(CheckKind::kBerndt, 1, z, residual, w);
}

std::pair<CheckResult, CheckResult> check_h1star_laws(const UpperHalfPoint& z,
                                                      const EvalOptions& opts) {
  const Work w = work_for(opts);
  const HPC zz = lifted(z, w);
  const HPC h = Hstar_at(1, zz, w);
  const HPC phase = exp(-(pi_i(w.wp) / HPC::exact(12, 0, w.wp)));
  const HPC translation = Hstar_at(1, zz + one(w.wp), w) - phase * h;

  const HPC image = inverted(zz, w.wp);
  const HPC root = branch::sqrt(-(i_unit(w.wp) * zz));
  const HPC inversion = Hstar_at(1, image, w) - h / root - Psi_at(zz, w.wp) / eta_at(image, w);
  return {finish(CheckKind::kH1StarTranslation, 1, z, translation, w),
          finish(CheckKind::kH1StarInversion, 1, z, inversion, w)};
}

CheckResult check_eta_inversion(const UpperHalfPoint& z, const EvalOptions& opts) {
  const Work w = work_for(opts);
  const HPC zz = lifted(z, w);
  const HPC root = branch::sqrt(-(i_unit(w.wp) * zz));
  const HPC residual = eta_at(inverted(zz, w.wp), w) - root * eta_at(zz, w);
  return finish(CheckKind::kEtaInversion, 1, z, residual, w);
}

CheckResult run_check(CheckKind kind, int t, const UpperHalfPoint& z, const EvalOptions& opts) {
  switch (kind) {
    case CheckKind::kInversion:
      return check_inversion(t, z, opts);
    case CheckKind::kTranslation:
      return check_translation(t, z, opts);
    case CheckKind::kBerndt:
      return check_berndt(z, opts);
    case CheckKind::kH1StarTranslation:
      return check_h1star_laws(z, opts).first;
    case CheckKind::kH1StarInversion:
      return check_h1star_laws(z, opts).second;
    case CheckKind::kEtaInversion:
      return check_eta_inversion(z, opts);
  }
  throw std::invalid_argument("unknown check kind");
}

std::vector<UpperHalfPoint> sample_grid(mpfr_prec_t prec) {
  static constexpr const char* kPoints[] = {
      "-0.35+0.25i", "-0.2+0.6i", "0+0.25i",  "0.1+1i",   "0.25+0.4i",
      "0.5+0.8i",    "0.5+2i",    "0.75+0.3i", "0.9+1.5i", "1+4i",
  };
  std::vector<UpperHalfPoint> grid;
  for (const char* p : kPoints) {
    grid.push_back(UpperHalfPoint::parse(p, prec));
  }
  return grid;
}

}  // namespace hooklab
