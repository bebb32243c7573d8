#include "hooklab/brackets.hpp"

#include <algorithm>
#include <thread>
#include <utility>

#include "hooklab/errors.hpp"

namespace hooklab {

BracketReport compare_series(std::string statistic, std::vector<Rational> parameters,
                             RationalSeries lhs, RationalSeries rhs) {
  BracketReport report;
  report.statistic = std::move(statistic);
  report.parameters = std::move(parameters);
  report.order = std::min(lhs.order(), rhs.order());
  report.equal = lhs.q_offset() == rhs.q_offset();
  for (std::size_t n = 0; n <= report.order && report.equal; ++n) {
    if (lhs[n] != rhs[n]) {
      report.equal = false;
      report.first_discrepancy = Discrepancy{n, lhs[n], rhs[n]};
    }
  }
  if (!report.equal && !report.first_discrepancy) {
    report.note = "q-offsets differ";
  }
  report.lhs = lhs.truncated(report.order).with_offset(lhs.q_offset());
  report.rhs = rhs.truncated(report.order).with_offset(rhs.q_offset());
  return report;
}

RationalSeries weighted_sum(const PartitionStatistic& f, std::size_t order, int cap) {
  if (order > static_cast<std::size_t>(cap)) {
    throw ResourceLimitError("weighted sum to order " + std::to_string(order) +
                             " exceeds the enumeration cap " + std::to_string(cap));
  }
  RationalSeries out(order);
  auto sweep = [&](std::size_t first, std::size_t stride) {
    for (std::size_t n = first; n <= order; n += stride) {
      Rational acc = 0;
      for_each_partition(static_cast<int>(n), [&](const Partition& p) { acc += f(p); }, cap);
      out[n] = std::move(acc);
    }
  };
  // Each coefficient is owned by one worker, so the result does not depend on
  // the schedule.
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(order / 8, 1));
  if (workers == 1) {
    sweep(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(sweep, w, workers);
    }
  }
  return out;
}

RationalSeries q_bracket(const PartitionStatistic& f, std::size_t order, int cap) {
  return weighted_sum(f, order, cap) * euler_product(order);
}

BracketReport verify_theorem1(int t, std::size_t order, int cap) {
  auto lhs = q_bracket(statistics::f_t(t), order, cap);
  auto rhs = substitute_qt(sigma_series(-1, std::max<std::size_t>(order, 1)), t).truncated(order);
  return compare_series("f_t", {Rational(t)}, std::move(lhs), std::move(rhs));
}

RationalSeries han_product_side(int t, const Rational& y, const Rational& w, std::size_t order,
                                HanForm form) {
  if (t < 1) {
    throw DomainError("Han's identity needs t >= 1");
  }
  const RationalSeries euler = euler_product(order);
  const RationalSeries dilated = substitute_qt(euler, t);
  RationalSeries product = RationalSeries::one(order);
  for (int k = 0; k < t; ++k) {
    product = product * dilated;
  }
  // prod (1 - (y q^t)^n)^{w - t}
  const RationalSeries middle = substitute_qt(scale_q(euler, y), t);
  product = product * pow_rational(middle, w - t);
  if (form == HanForm::kGeneratingFunction) {
    product = product * invert(euler);
  }
  return product;
}

BracketReport verify_han(int t, const Rational& y, const Rational& w, std::size_t order,
                         HanForm form, int cap) {
  const auto stat = statistics::F_tyw(t, y, w);
  auto lhs = form == HanForm::kGeneratingFunction ? weighted_sum(stat, order, cap)
                                                  : q_bracket(stat, order, cap);
  auto rhs = han_product_side(t, y, w, order, form);
  auto report = compare_series(stat.name(), stat.parameters(), std::move(lhs), std::move(rhs));
  report.note = form == HanForm::kGeneratingFunction ? "generating-function form" : "q-bracket form";
  return report;
}

RationalSeries han_linear_coefficient(int t, std::size_t order, int cap) {
  if (t < 1) {
    throw DomainError("Han's identity needs t >= 1");
  }
  const long degree = static_cast<long>(order) / t;
  // derivative at 0 of the Lagrange basis polynomial for node k on {0..degree}
  auto basis_slope = [degree](long k) {
    Rational slope = 1;
    if (k == 0) {
      Rational harmonic = 0;
      for (long j = 1; j <= degree; ++j) {
        harmonic += Rational(1, static_cast<unsigned long>(j));
      }
      return Rational(-harmonic);
    }
    for (long j = 0; j <= degree; ++j) {
      if (j == k) {
        continue;
      }
      if (j != 0) {
        slope *= -j;
      }
      slope /= (k - j);
    }
    return slope;
  };
  RationalSeries out(order);
  for (long k = 0; k <= degree; ++k) {
    const RationalSeries values = weighted_sum(statistics::F_tyw(t, 1, Rational(k)), order, cap);
    out = out + basis_slope(k) * values;
  }
  return out;
}

BracketReport verify_nekrasov_okounkov(const Rational& s, std::size_t order, int cap) {
  auto lhs = q_bracket(statistics::D_s(s), order, cap);
  auto rhs = pow_rational(euler_product(order), s);
  auto report = compare_series("D_s", {s}, std::move(lhs), std::move(rhs));
  report.note = "both sides carry q-offset 0; the eta^s form multiplies each by q^(" +
                to_string(Rational(s / 24)) + ")";
  return report;
}

BracketReport verify_size_bracket(std::size_t order, int cap) {
  auto lhs = q_bracket(statistics::size(), order, cap);
  auto rhs = order == 0 ? RationalSeries(0) : sigma_series(1, order);
  return compare_series("size", {}, std::move(lhs), std::move(rhs));
}

BracketReport verify_exp_identity(std::size_t order) {
  auto lhs = invert(euler_product(order));
  auto rhs = exp_series(lambert_series(1, order));
  return compare_series("exp_identity", {}, std::move(lhs), std::move(rhs));
}

}  // namespace hooklab
