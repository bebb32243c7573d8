#include "hooklab/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "hooklab/errors.hpp"

namespace hooklab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw DomainError("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be nonincreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string to_string(const Partition& p) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < p.length(); ++i) {
    out << (i ? "," : "") << p.parts()[i];
  }
  out << ')';
  return out.str();
}

FerrersDiagram::FerrersDiagram(const Partition& p) : partition_(p) {
  const auto rows = p.parts();
  columns_.assign(rows.empty() ? 0 : static_cast<std::size_t>(rows.front()), 0);
  for (int row : rows) {
    for (int j = 0; j < row; ++j) {
      ++columns_[static_cast<std::size_t>(j)];
    }
  }
}

int FerrersDiagram::hook(std::size_t row, std::size_t column) const {
  const auto rows = partition_.parts();
  if (row < 1 || row > rows.size() || column < 1 ||
      column > static_cast<std::size_t>(rows[row - 1])) {
    throw DomainError("cell (" + std::to_string(row) + "," + std::to_string(column) +
                      ") lies outside the diagram of " + to_string(partition_));
  }
  const int i = static_cast<int>(row);
  const int j = static_cast<int>(column);
  return (rows[row - 1] - i) + (columns_[column - 1] - j) + 1;
}

HookMultiset::HookMultiset(Partition source, int divisor_filter, std::vector<int> entries)
    : source_(std::move(source)), divisor_filter_(divisor_filter), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
}

PartitionGenerator::PartitionGenerator(int n, int cap) {
  if (n < 0) {
    throw DomainError("cannot enumerate partitions of a negative integer");
  }
  if (n > cap) {
    throw ResourceLimitError("enumerating partitions of " + std::to_string(n) +
                             " exceeds the enumeration cap " + std::to_string(cap));
  }
  if (n > 0) {
    current_.parts_.push_back(n);
    current_.size_ = n;
  }
}

void PartitionGenerator::advance() {
  auto& a = current_.parts_;
  int remainder = 0;
  while (!a.empty() && a.back() == 1) {
    a.pop_back();
    ++remainder;
  }
  if (a.empty()) {
    done_ = true;
    return;
  }
  const int largest = --a.back();
  ++remainder;
  while (remainder > 0) {
    const int part = std::min(largest, remainder);
    a.push_back(part);
    remainder -= part;
  }
}

std::vector<Partition> enumerate_partitions(int n, int cap) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, cap);
  return out;
}

Partition conjugate(const Partition& p) {
  FerrersDiagram diagram(p);
  const auto cols = diagram.column_counts();
  return Partition(std::vector<int>(cols.begin(), cols.end()));
}

int hook_number(const Partition& p, std::size_t i, std::size_t j) {
  return FerrersDiagram(p).hook(i, j);
}

namespace {

void require_positive_t(int t) {
  if (t < 1) {
    throw DomainError("hook divisor t must be a positive integer");
  }
}

// Multiplicity of every t-hook of p, keyed by hook value.
std::map<int, unsigned long> t_hook_counts(const Partition& p, int t) {
  std::map<int, unsigned long> counts;
  FerrersDiagram(p).for_each_hook([&](int h) {
    if (h % t == 0) {
      ++counts[h];
    }
  });
  return counts;
}

// ((1 - c/h^2))^m as an exact rational.
Rational one_minus_over_square_pow(const Rational& c, int h, unsigned long m) {
  const mpz_class h2 = mpz_class(h) * h;
  mpz_class num = c.get_den() * h2 - c.get_num();
  mpz_class den = c.get_den() * h2;
  mpz_pow_ui(num.get_mpz_t(), num.get_mpz_t(), m);
  mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), m);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

HookMultiset hook_multiset(const Partition& p, int t) {
  require_positive_t(t);
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(p.size()));
  FerrersDiagram(p).for_each_hook([&](int h) {
    if (h % t == 0) {
      entries.push_back(h);
    }
  });
  return HookMultiset(p, t, std::move(entries));
}

Rational stat_f_t(const Partition& p, int t) {
  require_positive_t(t);
  Rational sum = 0;
  for (const auto& [h, m] : t_hook_counts(p, t)) {
    Rational term(mpz_class(m), mpz_class(h) * h);
    term.canonicalize();
    sum += term;
  }
  return sum * t;
}

Rational stat_D_s(const Partition& p, const Rational& s) {
  Rational product = 1;
  for (const auto& [h, m] : t_hook_counts(p, 1)) {
    product *= one_minus_over_square_pow(s, h, m);
  }
  return product;
}

Rational stat_F_tyw(const Partition& p, int t, const Rational& y, const Rational& w) {
  require_positive_t(t);
  const Rational tw = w * t;
  Rational product = 1;
  unsigned long hooks = 0;
  for (const auto& [h, m] : t_hook_counts(p, t)) {
    product *= one_minus_over_square_pow(tw, h, m);
    hooks += m;
  }
  // y^#H_t factored out of every term
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), y.get_num_mpz_t(), hooks);
  mpz_pow_ui(den.get_mpz_t(), y.get_den_mpz_t(), hooks);
  return product * Rational(num, den);
}

PartitionStatistic::PartitionStatistic(std::string name, std::vector<Rational> parameters,
                                       Evaluator evaluate)
    : name_(std::move(name)), parameters_(std::move(parameters)), evaluate_(std::move(evaluate)) {}

namespace statistics {

PartitionStatistic size() {
  return {"size", {}, [](const Partition& p) { return Rational(p.size()); }};
}

PartitionStatistic constant(const Rational& c) {
  return {"constant", {c}, [c](const Partition&) { return c; }};
}

PartitionStatistic f_t(int t) {
  require_positive_t(t);
  return {"f_t", {Rational(t)}, [t](const Partition& p) { return stat_f_t(p, t); }};
}

PartitionStatistic D_s(const Rational& s) {
  return {"D_s", {s}, [s](const Partition& p) { return stat_D_s(p, s); }};
}

PartitionStatistic F_tyw(int t, const Rational& y, const Rational& w) {
  require_positive_t(t);
  return {"F_tyw", {Rational(t), y, w},
          [t, y, w](const Partition& p) { return stat_F_tyw(p, t, y, w); }};
}

PartitionStatistic linear_combination(const Rational& alpha, PartitionStatistic f,
                                      const Rational& beta, PartitionStatistic g) {
  std::string name = "linear(" + f.name() + "," + g.name() + ")";
  std::vector<Rational> params{alpha, beta};
  return {std::move(name), std::move(params),
          [alpha, beta, f = std::move(f), g = std::move(g)](const Partition& p) -> Rational {
            return alpha * f(p) + beta * g(p);
          }};
}

}  // namespace statistics

}  // namespace hooklab
