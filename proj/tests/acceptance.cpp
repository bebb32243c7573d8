// One PASS/FAIL line per acceptance criterion, with the tolerances pinned below.
// Sub-lines show each measured quantity; "info" lines never affect the verdict.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hooklab/hooklab.hpp"
#include "support/generators.hpp"
#include "support/numeric.hpp"

namespace {

using namespace hooklab;
using C = HighPrecisionComplex;
using Clock = std::chrono::steady_clock;

constexpr mpfr_prec_t kPrec = 128;
constexpr mpfr_prec_t kHighPrec = 256;
constexpr double kFourDecimals = 5e-5;
constexpr double kClosedForm = 1e-30;
constexpr double kModularEquality = 1e-25;
constexpr double kRelative = 1e-4;
constexpr double kResidual128 = 1e-25;
constexpr double kResidual256 = 1e-50;
constexpr double kCombination = 1e-4;
constexpr double kAlgebraicFactor = 1e-20;
constexpr double kEtaPeriod = 1e-20;
constexpr double kSeriesSeconds = 10;
constexpr double kBracketSeconds = 60;
constexpr double kHanSeconds = 120;
constexpr double kGridSeconds = 60;

Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)), start_(Clock::now()) {}

  void check(bool ok, const std::string& what) {
    ok_ = ok_ && ok;
    lines_.push_back(std::string(ok ? "    ok    " : "    FAIL  ") + what);
  }
  void info(const std::string& what) { lines_.push_back("    info  " + what); }

  // |value| <= tol, with value an upper bound.
  void within(double value, double tol, const std::string& what) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "  (%.3e vs %.0e)", value, tol);
    check(value < tol, what + buf);
  }

  double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

  void runtime_below(double limit) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "runtime %.2f s (limit %.0f s)", seconds(), limit);
    check(seconds() < limit, buf);
  }

  bool finish(int number) const {
    std::printf("[%s] criterion %d: %s\n", ok_ ? "PASS" : "FAIL", number, title_.c_str());
    for (const auto& l : lines_) std::printf("%s\n", l.c_str());
    std::fflush(stdout);
    return ok_;
  }

 private:
  std::string title_;
  Clock::time_point start_;
  bool ok_ = true;
  std::vector<std::string> lines_;
};

double dist(const C& a, const char* re, const char* im = "0") { return testing::distance(a, re, im); }
double dist(const C& a, const C& b) { return testing::distance(a, b); }
double magnitude(const C& a) { return a.abs_upper().to_double(); }

double relative(const C& a, const char* printed) {
  const Real p = Real::parse(printed, a.precision_bits());
  return dist(a, printed) / p.abs().to_double();
}

C real_ball(const Real& x) { return C(x, Real(0, x.precision())); }

// ---------------------------------------------------------------------------

bool criterion1() {
  Criterion c("f_t fixtures on (4,3,1)");
  const Partition lambda{4, 3, 1};
  c.check(stat_f_t(lambda, 1) == q(253, 72), "f_1 = " + to_string(stat_f_t(lambda, 1)) + " (253/72)");
  c.check(stat_f_t(lambda, 2) == q(29, 36), "f_2 = " + to_string(stat_f_t(lambda, 2)) + " (29/36)");
  c.check(stat_f_t(lambda, 3) == q(5, 12), "f_3 = " + to_string(stat_f_t(lambda, 3)) + " (5/12)");
  return c.finish(1);
}

bool criterion2() {
  Criterion c("series fixtures for H_1, H_2 and <f_1>_q");
  const auto h1 = weighted_sum(statistics::f_t(1), 5);
  const auto h2 = weighted_sum(statistics::f_t(2), 5);
  const std::vector<Rational> want1{1, q(5, 2), q(29, 6), q(109, 12)};
  const std::vector<Rational> want2{0, 1, 1, q(7, 2), q(9, 2)};
  bool ok1 = true, ok2 = true;
  for (std::size_t n = 1; n <= 4; ++n) ok1 = ok1 && h1[n] == want1[n - 1];
  for (std::size_t n = 1; n <= 5; ++n) ok2 = ok2 && h2[n] == want2[n - 1];
  c.check(ok1, "H_1 at q^1..q^4 = 1, 5/2, 29/6, 109/12");
  c.check(ok2, "H_2 at q^1..q^5 = 0, 1, 1, 7/2, 9/2");

  const auto bracket = q_bracket(statistics::f_t(1), 40);
  bool ok = bracket[0] == 0;
  for (long n = 1; n <= 40; ++n) {
    Rational sigma = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) sigma += q(1, d);
    }
    ok = ok && bracket[static_cast<std::size_t>(n)] == sigma;
  }
  c.check(ok, "<f_1>_q coefficient n = sigma_{-1}(n) for n <= 40 (divisor sums)");
  c.runtime_below(kSeriesSeconds);
  return c.finish(2);
}

bool criterion3() {
  Criterion c("<f_t>_q = E(tz) for t = 1..6 at order 40");
  for (int t = 1; t <= 6; ++t) {
    const auto r = verify_theorem1(t, 40);
    c.check(r.equal, "<f_" + std::to_string(t) + ">_q = E(" + std::to_string(t) + "z)");
  }
  c.runtime_below(kBracketSeconds);
  return c.finish(3);
}

bool criterion4() {
  Criterion c("Han's identity, t in {1,2,3}, four (y,w), order 25");
  const std::vector<std::pair<Rational, Rational>> yw{{1, 0}, {1, 1}, {2, q(1, 2)}, {q(1, 3), 2}};
  for (int t = 1; t <= 3; ++t) {
    for (const auto& [y, w] : yw) {
      const auto r = verify_han(t, y, w, 25);
      c.check(r.equal, "t=" + std::to_string(t) + " y=" + to_string(y) + " w=" + to_string(w));
    }
  }
  c.runtime_below(kHanSeconds);
  return c.finish(4);
}

bool criterion5() {
  Criterion c("Nekrasov-Okounkov at order 25");
  for (const Rational& s : {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2), Rational(3), q(1, 2)}) {
    c.check(verify_nekrasov_okounkov(s, 25).equal, "s = " + to_string(s));
  }
  return c.finish(5);
}

bool criterion6() {
  Criterion c("exp identity and size bracket at order 60");
  c.check(verify_exp_identity(60).equal, "1/prod(1-q^n) = exp(sum q^n/(n(1-q^n)))");
  c.check(verify_size_bracket(60).equal, "<|.|>_q = sum sigma_1(n) q^n");
  return c.finish(6);
}

bool criterion7() {
  Criterion c("numeric fixtures at 128 bits");
  const EvalOptions opts(kPrec);
  const mpfr_prec_t wp = kPrec + 64;
  const auto i = UpperHalfPoint(C::exact(0, 1, kPrec));
  const auto i4 = UpperHalfPoint(C::from_rational(0, q(1, 4), kPrec));
  const auto i2 = UpperHalfPoint(C::from_rational(0, q(1, 2), kPrec));
  const auto two_i = UpperHalfPoint(C::exact(0, 2, kPrec));
  const auto four_i = UpperHalfPoint(C::exact(0, 4, kPrec));

  const C eta_i = eval_eta(i, opts);
  const C eta_i4 = eval_eta(i4, opts);
  const C eta_i2 = eval_eta(i2, opts);
  c.within(dist(eta_i, "0.7682"), kFourDecimals, "eta(i) ~ 0.7682");
  c.within(dist(eta_i4, "0.7018"), kFourDecimals, "eta(i/4) ~ 0.7018");
  c.within(dist(eta_i2, "0.8377"), kFourDecimals, "eta(i/2) ~ 0.8377");

  const Real pi = Real::pi(wp);
  const Real two(2, wp);
  const Real g34 = gamma(Real(q(3, 4), wp));
  const Real pi_quarter = exp(log(pi) / Real(4, wp));
  const Real closed_i = sqrt(two) * pi_quarter / (two * g34);
  const Real closed_i4 = exp(log(two) / Real(4, wp)) * sqrt(pi) / (two * g34 * g34);
  const Real closed_i2 = pi_quarter / (exp(log(two) * Real(q(3, 8), wp)) * g34);
  c.within(dist(eta_i, real_ball(closed_i)), kClosedForm, "eta(i) = sqrt(2) pi^(1/4) / (2 Gamma(3/4))");
  c.within(dist(eta_i4, real_ball(closed_i4)), kClosedForm, "eta(i/4) = 2^(1/4) sqrt(pi) / (2 Gamma(3/4)^2)");
  c.within(dist(eta_i2, real_ball(closed_i2)), kClosedForm, "eta(i/2) = pi^(1/4) / (2^(3/8) Gamma(3/4))");

  const C m_i = eval_M_t(2, i, opts);
  const C m_i4 = eval_M_t(2, i4, opts);
  c.within(dist(m_i, "0.3503", "-5.3926"), kFourDecimals, "M_2(i) ~ 0.3503 - 5.3926i");
  c.within(dist(m_i4, "0.3503", "-5.3926"), kFourDecimals, "M_2(i/4) ~ 0.3503 - 5.3926i");
  c.within(dist(m_i, m_i4), kModularEquality, "|M_2(i) - M_2(i/4)|");

  const C h2_i = eval_H_t_star(2, i, opts);
  const C h1_i2 = eval_H_t_star(1, i2, opts);
  const C h2_2i = eval_H_t_star(2, two_i, opts);
  c.within(relative(h2_i, "4.5395e-6"), kRelative, "H_2*(i) ~ 4.5395e-6, relative");
  c.within(relative(h1_i2, "0.05506"), kRelative, "H_1*(i/2) ~ 0.05506, relative");
  c.within(relative(h2_2i, "5.8870e-6"), kRelative, "H_2*(2i) ~ 5.8870e-6, relative");

  char buf[160];
  std::snprintf(buf, sizeof buf, "Im M_2(i) = -5 - pi/8 = %s; distance to 0.3503 - 5.3926i is %.3e",
                m_i.imag().to_string(12).c_str(), dist(m_i, "0.3503", "-5.3926"));
  c.info(buf);
  std::snprintf(buf, sizeof buf, "H_2*(2i) = %s; H_1*(2i) = %s, relative distance to 5.8870e-6 is %.3e",
                h2_2i.real().to_string(6).c_str(), eval_H_t_star(1, two_i, opts).real().to_string(8).c_str(),
                relative(eval_H_t_star(1, two_i, opts), "5.8870e-6"));
  c.info(buf);
  std::snprintf(buf, sizeof buf, "eta(i/4) = 2 eta(4i) to %.3e; printed closed form evaluates to %s",
                dist(eta_i4, C::exact(2, 0, kPrec) * eval_eta(four_i, opts)), closed_i4.to_string(10).c_str());
  c.info(buf);
  return c.finish(7);
}

bool criterion8() {
  Criterion c("transformation suite on the 10-point grid");
  const std::vector<CheckKind> kinds{CheckKind::kInversion,         CheckKind::kTranslation,
                                     CheckKind::kBerndt,            CheckKind::kH1StarTranslation,
                                     CheckKind::kH1StarInversion,   CheckKind::kEtaInversion};
  for (const auto& [prec, tol] : {std::pair{kPrec, kResidual128}, std::pair{kHighPrec, kResidual256}}) {
    const EvalOptions opts(prec);
    const auto grid = sample_grid(prec);
    for (CheckKind kind : kinds) {
      double worst = 0;
      for (int t : {1, 2, 3}) {
        for (const auto& z : grid) {
          worst = std::max(worst, magnitude(run_check(kind, t, z, opts).residual));
        }
        if (kind != CheckKind::kInversion && kind != CheckKind::kTranslation) break;
      }
      c.within(worst, tol, to_string(kind) + " at " + std::to_string(prec) + " bits, worst residual");
    }
  }
  c.runtime_below(kGridSeconds);
  return c.finish(8);
}

bool criterion9() {
  Criterion c("Chowla-Selberg at tau = 2i");
  const EvalOptions opts(kPrec);
  const mpfr_prec_t wp = kPrec + 64;
  const auto two_i = UpperHalfPoint(C::exact(0, 2, kPrec));
  const auto half_i = UpperHalfPoint(C::from_rational(0, q(1, 2), kPrec));
  const FundamentalDiscriminant d4(-4);

  const Real psi_closed = Real::pi(wp) / Real(8, wp) - log(Real(2, wp)) / Real(2, wp);
  c.within(dist(eval_Psi(two_i, opts), real_ball(psi_closed)), kClosedForm, "Psi(2i) = pi/8 - log(2)/2");
  c.within(dist(cs_combination(two_i, 1, opts), "0.05506"), kCombination, "cs_combination(2i, 1) ~ 0.05506");

  const C ratio = cs_algebraic_ratio(two_i, d4, opts);
  C power = C::exact(1, 0, kPrec);
  for (int k = 0; k < 8; ++k) power = power * ratio;
  c.within(dist(power, C::from_rational(q(1, 2), 0, kPrec)), kAlgebraicFactor, "|ratio^8 - 1/2|");

  c.check(class_number(FundamentalDiscriminant(-3)) == 1, "h(-3) = 1");
  c.check(class_number(d4) == 1, "h(-4) = 1");
  c.check(class_number(FundamentalDiscriminant(-23)) == 3, "h(-23) = 3");

  const C omega = omega_D(d4, kPrec).omega;
  const C eighth_root_two = real_ball(exp(log(Real(2, wp)) / Real(8, wp)));
  c.within(dist(eval_eta(half_i, opts), eighth_root_two * branch::sqrt(omega)), kEtaPeriod,
           "eta(i/2) = 2^(1/8) sqrt(Omega_-4)");
  return c.finish(9);
}

bool criterion10() {
  Criterion c("property suites");
  testing::Gen gen(20261015);

  bool conj = true;
  for (int n = 0; n <= 16; ++n) {
    for_each_partition(n, [&](const Partition& p) {
      const auto pc = conjugate(p);
      for (int t = 1; t <= 5; ++t) {
        conj = conj && hook_multiset(pc, t).entries() == hook_multiset(p, t).entries();
      }
    });
  }
  c.check(conj, "hook multisets invariant under conjugation, n <= 16, t <= 5");

  bool linear = true;
  for (int trial = 0; trial < 6; ++trial) {
    const Rational a = gen.rational(9);
    const Rational b = gen.rational(9);
    const int t1 = gen.integer(1, 4);
    const Rational s = gen.rational(5);
    const auto combo = statistics::linear_combination(a, statistics::f_t(t1), b, statistics::D_s(s));
    linear = linear && q_bracket(combo, 15) == a * q_bracket(statistics::f_t(t1), 15) +
                                                   b * q_bracket(statistics::D_s(s), 15);
  }
  c.check(linear, "<a f + b g>_q = a <f>_q + b <g>_q, 6 random draws");

  bool ring = true;
  for (int trial = 0; trial < 20; ++trial) {
    const auto order = static_cast<std::size_t>(gen.integer(0, 25));
    const auto x = gen.series(order, 9), y = gen.series(order, 9), z = gen.series(order, 9);
    ring = ring && (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z && x * y == y * x;
  }
  c.check(ring, "ring axioms on random truncated series");

  bool explog = true;
  for (int trial = 0; trial < 8; ++trial) {
    const auto order = static_cast<std::size_t>(gen.integer(1, 30));
    const auto a = gen.nilpotent_series(order, 4);
    const auto b = gen.unit_series(order, 4);
    explog = explog && log_series(exp_series(a)) == a && exp_series(log_series(b)) == b;
  }
  c.check(explog, "exp and log mutually inverse");

  const auto euler = euler_product(200);
  bool pentagonal = true;
  for (std::size_t n = 0; n <= 200; ++n) {
    Rational want = 0;
    for (long k = -20; k <= 20; ++k) {
      if (k * (3 * k - 1) / 2 == static_cast<long>(n)) want = (k % 2 == 0) ? 1 : -1;
    }
    pentagonal = pentagonal && euler[n] == want;
  }
  c.check(pentagonal, "prod(1-q^n) supported on pentagonal numbers, n <= 200");

  const auto p = invert(euler_product(60));
  bool counts = true;
  for (int n = 0; n <= 60; ++n) {
    long count = 0;
    for_each_partition(n, [&](const Partition&) { ++count; });
    counts = counts && p[static_cast<std::size_t>(n)] == count;
  }
  c.check(counts, "enumerated p(n) = coefficient of 1/prod(1-q^n), n <= 60");
  return c.finish(10);
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9, criterion10};
  int passed = 0;
  for (const auto& run : criteria) {
    passed += run() ? 1 : 0;
  }
  std::printf("%d/%zu criteria pass\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
