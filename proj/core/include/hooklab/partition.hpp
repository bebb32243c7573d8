#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hooklab/rational.hpp"

namespace hooklab {

// Largest n for which enumeration is allowed unless a caller overrides it.
// p(80) is about 1.5e7.
inline constexpr int kDefaultEnumerationCap = 80;

// A nonincreasing sequence of positive integers. The empty sequence is the
// unique partition of 0.
class Partition {
 public:
  Partition() = default;
  // Throws DomainError unless parts is nonincreasing and strictly positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  // Number of parts (rows of the Ferrers diagram).
  std::size_t length() const { return parts_.size(); }
  // |lambda|.
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  friend class PartitionGenerator;

  std::vector<int> parts_;
  int size_ = 0;
};

// "(4,3,1)"; the empty partition prints as "()".
std::string to_string(const Partition& p);

// Ferrers-Young diagram with the column counts computed once, so repeated
// hook queries on one partition do not recompute the conjugate.
class FerrersDiagram {
 public:
  explicit FerrersDiagram(const Partition& p);

  const Partition& partition() const { return partition_; }
  std::span<const int> column_counts() const { return columns_; }

  // 1-based (row, column). Throws DomainError outside the diagram.
  int hook(std::size_t row, std::size_t column) const;

  // Calls visit(h) for the hook number of every cell.
  template <typename Visit>
  void for_each_hook(Visit&& visit) const {
    const auto rows = partition_.parts();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const int row = rows[i];
      for (int j = 0; j < row; ++j) {
        // arm + leg + 1, 0-based
        visit((row - j - 1) + (columns_[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1);
      }
    }
  }

 private:
  Partition partition_;
  std::vector<int> columns_;
};

// Multiset of the hook numbers of a partition that are divisible by t,
// stored sorted ascending.
class HookMultiset {
 public:
  HookMultiset(Partition source, int divisor_filter, std::vector<int> entries);

  const Partition& source() const { return source_; }
  int divisor_filter() const { return divisor_filter_; }
  const std::vector<int>& entries() const& { return entries_; }
  std::vector<int> entries() && { return std::move(entries_); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  Partition source_;
  int divisor_filter_;
  std::vector<int> entries_;
};

// Streams the partitions of n in lexicographically descending order without
// materialising the list.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(int n, int cap = kDefaultEnumerationCap);

  const Partition& current() const { return current_; }
  bool done() const { return done_; }
  void advance();

 private:
  Partition current_;
  bool done_ = false;
};

// All p(n) partitions of n, lexicographically descending:
// 4 -> (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
// Throws DomainError for n < 0 and ResourceLimitError for n > cap.
std::vector<Partition> enumerate_partitions(int n, int cap = kDefaultEnumerationCap);

template <typename Visit>
void for_each_partition(int n, Visit&& visit, int cap = kDefaultEnumerationCap) {
  for (PartitionGenerator gen(n, cap); !gen.done(); gen.advance()) {
    visit(gen.current());
  }
}

Partition conjugate(const Partition& p);

// h(i,j) = (lambda_i - i) + (lambda'_j - j) + 1 with 1-based i, j.
int hook_number(const Partition& p, std::size_t i, std::size_t j);

// Hook numbers of p divisible by t (t = 1 gives the full multiset).
// Throws DomainError for t < 1.
HookMultiset hook_multiset(const Partition& p, int t);

// f_t(lambda) = t * sum over t-hooks h of 1/h^2.
Rational stat_f_t(const Partition& p, int t);

// D_s(lambda) = prod over all hooks h of (1 - s/h^2).
Rational stat_D_s(const Partition& p, const Rational& s);

// F_{t,y,w}(lambda) = prod over t-hooks h of (y - t*y*w/h^2).
Rational stat_F_tyw(const Partition& p, int t, const Rational& y, const Rational& w);

// A named, deterministic map from partitions to exact rationals.
class PartitionStatistic {
 public:
  using Evaluator = std::function<Rational(const Partition&)>;

  PartitionStatistic(std::string name, std::vector<Rational> parameters, Evaluator evaluate);

  const std::string& name() const { return name_; }
  const std::vector<Rational>& parameters() const { return parameters_; }
  Rational operator()(const Partition& p) const { return evaluate_(p); }

 private:
  std::string name_;
  std::vector<Rational> parameters_;
  Evaluator evaluate_;
};

namespace statistics {

PartitionStatistic size();
PartitionStatistic constant(const Rational& c);
PartitionStatistic f_t(int t);
PartitionStatistic D_s(const Rational& s);
PartitionStatistic F_tyw(int t, const Rational& y, const Rational& w);
// alpha*f + beta*g
PartitionStatistic linear_combination(const Rational& alpha, PartitionStatistic f,
                                      const Rational& beta, PartitionStatistic g);

}  // namespace statistics

}  // namespace hooklab
