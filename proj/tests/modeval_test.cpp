#include <gtest/gtest.h>

#include <thread>

#include "hooklab/errors.hpp"
#include "hooklab/modeval.hpp"
#include "hooklab/qseries.hpp"
#include "support/generators.hpp"
#include "support/numeric.hpp"

namespace hooklab {
namespace {

using C = HighPrecisionComplex;
using testing::distance;

UpperHalfPoint pt(const char* text, mpfr_prec_t prec = 128) { return UpperHalfPoint::parse(text, prec); }

C real_ball(const Real& x) { return C(x, Real(0, x.precision())); }

TEST(UpperHalfPoint, RejectsClosedLowerHalf) {
  EXPECT_THROW(pt("1+0i"), DomainError);
  EXPECT_THROW(pt("0-1i"), DomainError);
  EXPECT_THROW(UpperHalfPoint(C::exact(0, 0, 128).inflated(ErrorBound::pow2(-4))), DomainError);
  EXPECT_NO_THROW(pt("-3+0.001i"));
}

TEST(EvalE, Values) {
  EXPECT_LT(distance(eval_E(pt("0+1i"), 128), oracle::kE_I), 1e-35);
  EXPECT_LT(distance(eval_E(pt("0.1+1i"), 128), oracle::kE_Grid), 1e-35);
  EXPECT_LT(eval_E(pt("0+40i"), 128).abs_upper().to_double(), 1e-100);
}

TEST(EvalE, Periodic) {
  for (const char* z : {"0.1+1i", "-0.3+0.5i", "0.45+0.2i"}) {
    const auto a = eval_E(pt(z), 128);
    const auto b = eval_E(UpperHalfPoint(pt(z).value() + C::exact(1, 0, 128)), 128);
    EXPECT_TRUE((a - b).contains_zero()) << z;
  }
}

TEST(EvalE, FloorViolation) {
  EXPECT_THROW(eval_E(pt("0+0.01i"), 128), FloorViolation);
  EvalOptions relaxed(128);
  relaxed.im_floor = 0.005;
  EXPECT_NO_THROW(eval_E(pt("0+0.01i"), relaxed));
  EXPECT_THROW(eval_eta(pt("0.2+0.04i"), 128), FloorViolation);
}

TEST(EvalE, TruncationSoundness) {
  for (const char* z : {"0+0.25i", "0.3+0.6i", "0.9+1.5i"}) {
    EvalOptions opts(128);
    opts.terms = 30;
    const auto n = evaluate_E_series(pt(z), opts);
    opts.terms = 60;
    const auto two_n = evaluate_E_series(pt(z), opts);
    const auto mid_gap = C(n.value.real(), n.value.imag()) - C(two_n.value.real(), two_n.value.imag());
    EXPECT_LE(mid_gap.magnitude_upper().to_double(), n.tail.to_double() * (1 + 1e-9)) << z;
    EXPECT_TRUE((n.value - two_n.value).contains_zero()) << z;
  }
}

TEST(EvalE, AutoTermsMeetTarget) {
  const auto s = evaluate_E_series(pt("0+0.25i"), 256);
  EXPECT_LE(s.tail.log2_ceil(-1000), -264);
  EXPECT_LT(s.value.error_bound().log2_ceil(-1000), -250);
}

TEST(EvalE, AgreesWithExactSeries) {
  const auto coeffs = sigma_series(-1, 40);
  for (const char* z : {"0+1i", "0.3+1.2i", "-0.7+2i"}) {
    const auto point = pt(z, 160);
    const C q = exp(C::from_rational(0, 2, 160) * C::pi(160) * point.value());
    C sum = C::exact(0, 0, 160);
    C power = C::exact(1, 0, 160);
    for (std::size_t n = 1; n <= 40; ++n) {
      power = power * q;
      sum = sum + C::from_rational(coeffs[n], 0, 160) * power;
    }
    // sigma_{-1}(n) <= n, so the tail is below sum_{n>40} n r^n
    const double rr = q.abs_upper().to_double();
    const double tail = 41 * std::pow(rr, 41) / ((1 - rr) * (1 - rr));
    EXPECT_TRUE((sum.inflated(ErrorBound::above(tail)) - eval_E(point, 160)).contains_zero()) << z;
  }
}

TEST(EvalEta, PrintedValues) {
  EXPECT_LT(distance(eval_eta(pt("0+1i"), 128), "0.7682", "0"), 5e-5);
  EXPECT_LT(distance(eval_eta(pt("0+0.25i"), 128), "0.7018", "0"), 5e-5);
  // printed as 0.8377... (truncated), so the true value is within one unit of the last digit
  EXPECT_LT(distance(eval_eta(pt("0+0.5i"), 128), "0.8377", "0"), 1e-4);
  EXPECT_GT(eval_eta(pt("0+0.5i"), 128).real().to_double(), 0.8377);
}

TEST(EvalEta, ClosedForms) {
  const mpfr_prec_t p = 160;
  const Real pi = Real::pi(p);
  const Real g34 = gamma(Real(Rational(3, 4), p));
  const Real quarter_pi = exp(log(pi) / Real(4, p));
  const Real eta_i = sqrt(Real(2, p)) * quarter_pi / (Real(2, p) * g34);
  EXPECT_LT(distance(eval_eta(pt("0+1i", p), p), real_ball(eta_i)), 1e-40);
  // eta(i/4) = 2 eta(4i) = 2^{3/16} (sqrt 2 - 1)^{1/4} eta(i)
  const Real eta_i4 = exp(log(Real(2, p)) * Real(Rational(3, 16), p) + log(sqrt(Real(2, p)) - Real(1, p)) / Real(4, p)) * eta_i;
  EXPECT_LT(distance(eval_eta(pt("0+0.25i", p), p), real_ball(eta_i4)), 1e-40);
  const Real eta_i2 = quarter_pi / (exp(log(Real(2, p)) * Real(Rational(3, 8), p)) * g34);
  EXPECT_LT(distance(eval_eta(pt("0+0.5i", p), p), real_ball(eta_i2)), 1e-40);
}

TEST(EvalEta, FrozenValues) {
  EXPECT_LT(distance(eval_eta(pt("0+4i"), 128), oracle::kEta4I), 1e-35);
  EXPECT_LT(distance(eval_eta(pt("1+1i"), 128), oracle::kEtaOnePlusI), 1e-35);
}

TEST(EvalPsi, Values) {
  EXPECT_TRUE(eval_Psi(pt("0+1i"), 128).contains_zero());
  const mpfr_prec_t p = 128;
  const Real expected = Real::pi(p) / Real(8, p) - log(Real(2, p)) / Real(2, p);
  EXPECT_LT(distance(eval_Psi(pt("0+2i"), p), real_ball(expected)), 1e-35);
  EXPECT_LT(distance(eval_Psi(pt("1+1i"), p), oracle::kPsi_OnePlusI), 1e-35);
}

TEST(EvalPsi, CauchyRiemann) {
  // A holomorphic f has f(z+h) - f(z-h) = i^{-1} (f(z+ih) - f(z-ih)) to O(h^3).
  const mpfr_prec_t p = 128;
  const C z = C::exact(1, 1, p);
  const C h = C::from_rational(Rational(1, 1000000000000L), 0, p);
  const C ih = C::from_rational(0, Rational(1, 1000000000000L), p);
  const auto f = [&](const C& w) { return eval_Psi(UpperHalfPoint(w), p); };
  const C dx = f(z + h) - f(z - h);
  const C dy = f(z + ih) - f(z - ih);
  const C residual = (dx - dy / C::exact(0, 1, p)) / (h + h);
  EXPECT_LT(residual.abs_upper().to_double(), 1e-20);
}

TEST(EvalPtLt, Values) {
  const C l1 = eval_L_t(1, pt("0+1i"), 128);
  const C expected = C::pi(128) * C::from_rational(0, Rational(-1, 8), 128);
  EXPECT_LT(distance(l1, expected), 1e-35);
  // P_1(i) = -(1 + pi i/12) i + 1/i = pi/12 - 2i
  const C p1 = eval_P_t(1, pt("0+1i"), 128);
  const C p1_expected = C::pi(128) * C::from_rational(Rational(1, 12), 0, 128) + C::exact(0, -2, 128);
  EXPECT_LT(distance(p1, p1_expected), 1e-35);
}

TEST(EvalM, PrintedValues) {
  const auto m_i = eval_M_t(2, pt("0+1i"), 128);
  const auto m_i4 = eval_M_t(2, pt("0+0.25i"), 128);
  EXPECT_LT(distance(m_i, oracle::kM2_I), 1e-35);
  EXPECT_LT(distance(m_i4, oracle::kM2_IOver4), 1e-35);
  EXPECT_LT(distance(m_i, m_i4), 1e-25);
  // Im M_2(i) = -5 - pi/8 exactly
  const C im_expected = C(Real(0, 128), Real(-5, 128) - Real::pi(128) / Real(8, 128));
  EXPECT_LT(std::abs(m_i.imag().to_double() - im_expected.imag().to_double()), 1e-15);
  EXPECT_LT(distance(eval_M_t(3, pt("0.3+0.7i"), 128), oracle::kM3_Point), 1e-35);
}

TEST(EvalHStar, PrintedValues) {
  EXPECT_LT(distance(eval_H_t_star(2, pt("0+1i"), 128), oracle::kH2Star_I), 1e-40);
  EXPECT_LT(distance(eval_H_t_star(1, pt("0+0.5i"), 128), oracle::kH1Star_IOver2), 1e-35);
  EXPECT_LT(distance(eval_H_t_star(2, pt("0+2i"), 128), oracle::kH2Star_2I), 1e-38);
  EXPECT_LT(distance(eval_H_t_star(1, pt("0+2i"), 128), oracle::kH1Star_2I), 1e-38);
}

TEST(CheckKind, Names) {
  for (auto k : {CheckKind::kInversion, CheckKind::kTranslation, CheckKind::kBerndt, CheckKind::kH1StarTranslation,
                 CheckKind::kH1StarInversion, CheckKind::kEtaInversion}) {
    EXPECT_EQ(parse_check_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_check_kind("rotation"), std::invalid_argument);
}

double bound(const CheckResult& c) { return c.magnitude_bound().to_double(); }

TEST(Checks, Inversion) {
  const auto two = check_inversion(2, pt("0+1i"), 128);
  EXPECT_TRUE(two.within_budget());
  EXPECT_LT(bound(two), 1e-25);
  EXPECT_LT(bound(check_inversion(1, pt("0+1i"), 128)), 1e-30);
  EXPECT_TRUE(check_inversion(3, pt("0.3+0.7i"), 128).within_budget());
  EXPECT_THROW(check_inversion(2, pt("0+20i"), 128), FloorViolation);
}

TEST(Checks, Translation) {
  EXPECT_LT(bound(check_translation(1, pt("0+1i"), 128)), 1e-25);
  EXPECT_LT(bound(check_translation(2, pt("0+2i"), 128)), 1e-25);
  EXPECT_TRUE(check_translation(3, pt("0.2+6i"), 128).within_budget());
  // near the Re(z) = -1/2 line the principal log of z/(z+1) still matches
  for (const char* z : {"-0.5+0.3i", "-0.45+0.1i", "-0.55+0.7i"}) {
    EXPECT_TRUE(check_translation(1, pt(z), 128).within_budget()) << z;
  }
}

TEST(Checks, Berndt) {
  EXPECT_LT(bound(check_berndt(pt("0+1i"), 128)), 1e-30);
  EXPECT_LT(bound(check_berndt(pt("0+2i"), 128)), 1e-25);
  EXPECT_TRUE(check_berndt(pt("0.5+1i"), 128).within_budget());
}

TEST(Checks, H1Star) {
  const auto [translation, inversion] = check_h1star_laws(pt("0+2i"), 128);
  EXPECT_LT(bound(translation), 1e-25);
  EXPECT_LT(bound(inversion), 1e-25);
  // both sides of the inversion law at 2i are about 0.05506
  const auto lhs = eval_H_t_star(1, pt("0+0.5i"), 128) -
                   eval_H_t_star(1, pt("0+2i"), 128) / branch::sqrt(C::exact(2, 0, 128));
  EXPECT_LT(distance(lhs, "0.05506", "0"), 1e-5);
  const auto rhs = eval_Psi(pt("0+2i"), 128) / eval_eta(pt("0+0.5i"), 128);
  EXPECT_LT(distance(lhs, rhs), 1e-25);
  const auto [t_i, inv_i] = check_h1star_laws(pt("0+1i"), 128);
  EXPECT_LT(bound(inv_i), 1e-30);
  EXPECT_TRUE(t_i.within_budget());
}

TEST(Checks, EtaInversion) {
  EXPECT_LT(bound(check_eta_inversion(pt("0+1i"), 128)), 1e-30);
  EXPECT_LT(bound(check_eta_inversion(pt("1+1i"), 128)), 1e-25);
  // eta(-1/(i/4)) = eta(4i) = sqrt(1/4) eta(i/4)
  EXPECT_TRUE(check_eta_inversion(pt("0+0.25i"), 128).within_budget());
  EXPECT_LT(distance(eval_eta(pt("0+4i"), 128) * C::exact(2, 0, 128), eval_eta(pt("0+0.25i"), 128)), 1e-30);
}

TEST(Checks, SampleGrid) {
  const auto grid = sample_grid(128);
  ASSERT_EQ(grid.size(), 10u);
  for (const auto& z : grid) {
    const double im = z.value().imag().to_double();
    const double re = z.value().real().to_double();
    EXPECT_GE(im, 0.25);
    EXPECT_LE(im, 4.0);
    EXPECT_GT(re, -0.4);
    EXPECT_LE(re, 1.0);
  }
}

TEST(Checks, GridPassesAtBothPrecisions) {
  for (mpfr_prec_t prec : {128, 256}) {
    const double tol = prec == 128 ? 1e-25 : 1e-50;
    for (const auto& z : sample_grid(prec)) {
      for (auto k : {CheckKind::kInversion, CheckKind::kTranslation, CheckKind::kBerndt, CheckKind::kH1StarTranslation,
                     CheckKind::kH1StarInversion, CheckKind::kEtaInversion}) {
        for (int t : {1, 2, 3}) {
          if (t > 1 && k != CheckKind::kInversion && k != CheckKind::kTranslation) continue;
          const auto c = run_check(k, t, z, prec);
          EXPECT_TRUE(c.within_budget()) << to_string(k) << " t=" << t;
          EXPECT_LT(bound(c), tol) << to_string(k) << " t=" << t;
        }
      }
    }
  }
}

TEST(Checks, PrecisionMonotonicity) {
  testing::Gen gen(99);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational re(gen.integer(-100, 100), 100);
    const Rational im(gen.integer(20, 500), 100);
    for (auto k : {CheckKind::kInversion, CheckKind::kTranslation, CheckKind::kBerndt, CheckKind::kH1StarTranslation,
                   CheckKind::kH1StarInversion, CheckKind::kEtaInversion}) {
      const auto lo = run_check(k, 2, UpperHalfPoint(C::from_rational(re, im, 128)), 128);
      const auto hi = run_check(k, 2, UpperHalfPoint(C::from_rational(re, im, 256)), 256);
      EXPECT_TRUE(lo.within_budget());
      EXPECT_TRUE(hi.within_budget());
      const bool shrinks = hi.magnitude_bound() < lo.magnitude_bound();
      const bool below_budget = hi.magnitude_bound() < ErrorBound::pow2(-200);
      EXPECT_TRUE(shrinks || below_budget) << to_string(k) << " at " << re.get_str() << "+" << im.get_str() << "i";
    }
  }
}

TEST(Checks, ConcurrentEvaluationIsDeterministic) {
  const auto reference = eval_M_t(2, pt("0.25+0.4i", 192), 192);
  std::vector<std::jthread> workers;
  std::vector<int> same(8, 0);
  for (std::size_t w = 0; w < same.size(); ++w) {
    workers.emplace_back([&, w] {
      const auto v = eval_M_t(2, pt("0.25+0.4i", 192), 192);
      same[w] = v.real() == reference.real() && v.imag() == reference.imag();
    });
  }
  workers.clear();
  for (int s : same) EXPECT_TRUE(s);
}

}  // namespace
}  // namespace hooklab
