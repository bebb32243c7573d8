#include "hooklab/qseries.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hooklab/errors.hpp"

namespace hooklab {

RationalSeries::RationalSeries(std::size_t order, Rational q_offset)
    : coeffs_(order + 1, Rational(0)), q_offset_(std::move(q_offset)) {}

RationalSeries::RationalSeries(std::vector<Rational> coeffs, Rational q_offset)
    : coeffs_(std::move(coeffs)), q_offset_(std::move(q_offset)) {
  if (coeffs_.empty()) {
    throw PreconditionError("a series needs at least the constant coefficient");
  }
  for (auto& c : coeffs_) {
    c.canonicalize();
  }
  q_offset_.canonicalize();
}

RationalSeries RationalSeries::one(std::size_t order) {
  RationalSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

RationalSeries RationalSeries::truncated(std::size_t order) const {
  RationalSeries out(order, q_offset_);
  std::copy_n(coeffs_.begin(), std::min(order + 1, coeffs_.size()), out.coeffs_.begin());
  return out;
}

RationalSeries RationalSeries::with_offset(Rational q_offset) const {
  RationalSeries out = *this;
  out.q_offset_ = std::move(q_offset);
  return out;
}

bool RationalSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

namespace {

void require_offsets_match(const RationalSeries& a, const RationalSeries& b) {
  if (a.q_offset() != b.q_offset()) {
    throw PreconditionError("cannot add series with q-offsets " + to_string(a.q_offset()) +
                            " and " + to_string(b.q_offset()));
  }
}

void require_zero_offset(const RationalSeries& a, const char* op) {
  if (a.q_offset() != 0) {
    throw PreconditionError(std::string(op) + " needs a series without q-offset");
  }
}

}  // namespace

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  require_offsets_match(a, b);
  const std::size_t order = std::min(a.order(), b.order());
  RationalSeries out(order, a.q_offset());
  for (std::size_t n = 0; n <= order; ++n) {
    out[n] = a[n] + b[n];
  }
  return out;
}

RationalSeries operator-(const RationalSeries& a) {
  RationalSeries out = a;
  for (std::size_t n = 0; n <= out.order(); ++n) {
    out[n] = -out[n];
  }
  return out;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) { return a + (-b); }

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  RationalSeries out(order, a.q_offset() + b.q_offset());
  Rational term;
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (b[j] == 0) {
        continue;
      }
      term = a[i] * b[j];
      out[i + j] += term;
    }
  }
  return out;
}

RationalSeries operator*(const Rational& c, const RationalSeries& a) {
  RationalSeries out = a;
  for (std::size_t n = 0; n <= out.order(); ++n) {
    out[n] *= c;
  }
  return out;
}

RationalSeries invert(const RationalSeries& a) {
  if (a[0] == 0) {
    throw PreconditionError("cannot invert a series with zero constant term");
  }
  const std::size_t order = a.order();
  RationalSeries out(order, -a.q_offset());
  const Rational inv0 = 1 / a[0];
  out[0] = inv0;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] != 0) {
        acc += a[k] * out[n - k];
      }
    }
    out[n] = -acc * inv0;
  }
  return out;
}

// b = exp(a) satisfies b' = a' b, i.e. n b_n = sum_{k=1}^n k a_k b_{n-k}.
RationalSeries exp_series(const RationalSeries& a) {
  require_zero_offset(a, "exp_series");
  if (a[0] != 0) {
    throw PreconditionError("exp_series needs a zero constant term");
  }
  const std::size_t order = a.order();
  RationalSeries out(order);
  out[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k] != 0) {
        acc += Rational(static_cast<long>(k)) * a[k] * out[n - k];
      }
    }
    out[n] = acc / static_cast<long>(n);
  }
  return out;
}

// a = log(b) with b_0 = 1: n a_n = n b_n - sum_{k=1}^{n-1} k a_k b_{n-k}.
RationalSeries log_series(const RationalSeries& b) {
  require_zero_offset(b, "log_series");
  if (b[0] != 1) {
    throw PreconditionError("log_series needs constant term 1");
  }
  const std::size_t order = b.order();
  RationalSeries out(order);
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = Rational(static_cast<long>(n)) * b[n];
    for (std::size_t k = 1; k < n; ++k) {
      if (out[k] != 0 && b[n - k] != 0) {
        acc -= Rational(static_cast<long>(k)) * out[k] * b[n - k];
      }
    }
    out[n] = acc / static_cast<long>(n);
  }
  return out;
}

RationalSeries pow_rational(const RationalSeries& a, const Rational& s) {
  require_zero_offset(a, "pow_rational");
  if (a[0] != 1) {
    throw PreconditionError("pow_rational needs constant term 1");
  }
  return exp_series(s * log_series(a));
}

RationalSeries substitute_qt(const RationalSeries& a, int t) {
  require_zero_offset(a, "substitute_qt");
  if (t < 1) {
    throw DomainError("substitute_qt needs a positive dilation");
  }
  const std::size_t step = static_cast<std::size_t>(t);
  RationalSeries out(a.order());
  for (std::size_t n = 0; n * step <= a.order(); ++n) {
    out[n * step] = a[n];
  }
  return out;
}

RationalSeries scale_q(const RationalSeries& a, const Rational& y) {
  RationalSeries out = a;
  Rational power = 1;
  for (std::size_t n = 0; n <= out.order(); ++n) {
    out[n] *= power;
    power *= y;
  }
  return out;
}

RationalSeries euler_product(std::size_t order) {
  RationalSeries out = RationalSeries::one(order);
  // multiply in (1 - q^m) for m = 1..order, in place from the top down
  for (std::size_t m = 1; m <= order; ++m) {
    for (std::size_t n = order; n >= m; --n) {
      if (out[n - m] != 0) {
        out[n] -= out[n - m];
      }
      if (n == m) {
        break;
      }
    }
  }
  return out;
}

RationalSeries sigma_series(int v, std::size_t order) {
  if (order < 1) {
    throw DomainError("sigma_series needs order >= 1");
  }
  RationalSeries out(order);
  for (std::size_t n = 1; n <= order; ++n) {
    Rational sum = 0;
    for (std::size_t d = 1; d * d <= n; ++d) {
      if (n % d != 0) {
        continue;
      }
      const std::size_t e = n / d;
      for (std::size_t div : {d, e}) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), div, static_cast<unsigned long>(v < 0 ? -v : v));
        sum += v < 0 ? Rational(1, p) : Rational(p);
        if (d == e) {
          break;
        }
      }
    }
    out[n] = sum;
  }
  return out;
}

RationalSeries lambert_series(int t, std::size_t order) {
  if (t < 1) {
    throw DomainError("lambert_series needs t >= 1");
  }
  const std::size_t step = static_cast<std::size_t>(t);
  RationalSeries out(order);
  // q^{tn}/(n(1-q^{tn})) = (1/n) * sum_{k>=1} q^{tnk}
  for (std::size_t n = 1; step * n <= order; ++n) {
    const Rational inv_n(1, static_cast<unsigned long>(n));
    for (std::size_t e = step * n; e <= order; e += step * n) {
      out[e] += inv_n;
    }
  }
  return out;
}

RationalSeries eta_expansion(std::size_t order) {
  return euler_product(order).with_offset(Rational(1, 24));
}

}  // namespace hooklab
