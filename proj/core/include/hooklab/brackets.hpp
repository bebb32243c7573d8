#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hooklab/partition.hpp"
#include "hooklab/qseries.hpp"
#include "hooklab/rational.hpp"

namespace hooklab {

inline constexpr std::size_t kDefaultVerificationOrder = 40;

struct Discrepancy {
  std::size_t exponent;
  Rational lhs;
  Rational rhs;
};

// Outcome of comparing a partition-sum side against a product side.
// equal holds iff every coefficient up to order agrees exactly; otherwise
// first_discrepancy names the smallest failing exponent.
struct BracketReport {
  std::string statistic;
  std::vector<Rational> parameters;
  std::size_t order = 0;
  RationalSeries lhs{0};
  RationalSeries rhs{0};
  bool equal = false;
  std::optional<Discrepancy> first_discrepancy;
  std::string note;
};

BracketReport compare_series(std::string statistic, std::vector<Rational> parameters,
                             RationalSeries lhs, RationalSeries rhs);

// sum over |lambda| <= order of f(lambda) q^|lambda|. For f = f_t this is H_t.
// Throws ResourceLimitError when order exceeds cap.
RationalSeries weighted_sum(const PartitionStatistic& f, std::size_t order,
                            int cap = kDefaultEnumerationCap);

// <f>_q = weighted_sum(f) * prod (1 - q^n).
RationalSeries q_bracket(const PartitionStatistic& f, std::size_t order,
                         int cap = kDefaultEnumerationCap);

// <f_t>_q against sigma_{-1} series dilated by q -> q^t.
BracketReport verify_theorem1(int t, std::size_t order, int cap = kDefaultEnumerationCap);

enum class HanForm {
  // sum_lambda q^|lambda| F_{t,y,w}(lambda)
  //   = prod (1-q^{tn})^t / ((1-(y q^t)^n)^{t-w} (1-q^n))
  kGeneratingFunction,
  // <F_{t,y,w}>_q = prod (1-q^{tn})^t / (1-(y q^t)^n)^{t-w}
  kBracket,
};

// Product side of Han's identity for the given form.
RationalSeries han_product_side(int t, const Rational& y, const Rational& w, std::size_t order,
                                HanForm form = HanForm::kGeneratingFunction);

BracketReport verify_han(int t, const Rational& y, const Rational& w, std::size_t order,
                         HanForm form = HanForm::kGeneratingFunction,
                         int cap = kDefaultEnumerationCap);

// Exact coefficient of w^1 in sum_lambda q^|lambda| F_{t,1,w}(lambda), found by
// Lagrange interpolation of the partition sums at w = 0, 1, ..., order/t
// (each coefficient of q^n is a polynomial in w of degree <= n/t).
RationalSeries han_linear_coefficient(int t, std::size_t order, int cap = kDefaultEnumerationCap);

// <D_s>_q against prod (1 - q^n)^s; both sides carry q-offset 0.
BracketReport verify_nekrasov_okounkov(const Rational& s, std::size_t order,
                                       int cap = kDefaultEnumerationCap);

// <|.|>_q against sum sigma_1(n) q^n.
BracketReport verify_size_bracket(std::size_t order, int cap = kDefaultEnumerationCap);

// 1/prod(1-q^n) against exp(sum q^n / (n (1-q^n))).
BracketReport verify_exp_identity(std::size_t order);

}  // namespace hooklab
