#include "linext/stats.hpp"

#include "linext/errors.hpp"

namespace linext::stats {

using counting::BigCount;
using counting::Limits;

Rat prob_event(const Poset& p, const counting::EventSpec& ev, counting::Path path,
               const Limits& lim) {
  BigInt total = counting::count(p, lim);
  if (total.is_zero()) throw EmptyPoset("prob_event: poset has no linear extensions");
  return Rat(counting::count_event(p, ev, path, lim), total);
}

std::vector<Rat> value_distribution(const Poset& p, int x, const Limits& lim) {
  auto counts = counting::value_counts(p, x, lim);
  BigInt total(0);
  for (const auto& c : counts) total += c;
  std::vector<Rat> out;
  out.reserve(counts.size());
  for (const auto& c : counts) out.emplace_back(c, total);
  return out;
}

Rat prob_less(const Poset& p, int x, int y, const Limits& lim) {
  auto grid = counting::joint_value_counts(p, x, y, lim);
  int n = p.size();
  BigInt hits(0), total(0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      total += grid[i][j];
      if (i < j) hits += grid[i][j];
    }
  }
  return Rat(hits, total);
}

BigInt sum_value(const Poset& p, int x, const Limits& lim) {
  auto counts = counting::value_counts(p, x, lim);
  BigInt s(0);
  for (int k = 1; k <= p.size(); ++k) s += BigInt(k) * counts[k - 1];
  return s;
}

BigInt sum_value_square(const Poset& p, int x, const Limits& lim) {
  auto counts = counting::value_counts(p, x, lim);
  BigInt s(0);
  for (int k = 1; k <= p.size(); ++k) s += BigInt(1LL * k * k) * counts[k - 1];
  return s;
}

BigInt sum_value_product(const Poset& p, int x, int y, const Limits& lim) {
  if (x == y) return sum_value_square(p, x, lim);
  auto grid = counting::joint_value_counts(p, x, y, lim);
  BigInt s(0);
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = 1; j <= p.size(); ++j) {
      if (!grid[i - 1][j - 1].is_zero()) s += BigInt(1LL * i * j) * grid[i - 1][j - 1];
    }
  }
  return s;
}

BigInt sum_min_value(const Poset& p, int x, int y, const Limits& lim) {
  if (x == y) return sum_value(p, x, lim);
  auto grid = counting::joint_value_counts(p, x, y, lim);
  BigInt s(0);
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = 1; j <= p.size(); ++j) {
      if (!grid[i - 1][j - 1].is_zero()) s += BigInt(std::min(i, j)) * grid[i - 1][j - 1];
    }
  }
  return s;
}

BigInt sum_fmin(const Poset& p, Mask a, const Limits& lim) {
  auto counts = counting::fmin_counts(p, a, lim);
  BigInt s(0);
  for (int k = 1; k <= p.size(); ++k) s += BigInt(k) * counts[k - 1];
  return s;
}

BigInt sum_fmin_product(const Poset& p, Mask a, Mask b, const Limits& lim) {
  auto grid = counting::joint_fmin_counts(p, a, b, lim);
  BigInt s(0);
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = 1; j <= p.size(); ++j) {
      if (!grid[i - 1][j - 1].is_zero()) s += BigInt(1LL * i * j) * grid[i - 1][j - 1];
    }
  }
  return s;
}

Rat expectation(const Poset& p, const Expr& e, const Limits& lim) {
  BigInt total = counting::count(p, lim);
  if (total.is_zero()) throw EmptyPoset("expectation: poset has no linear extensions");
  switch (e.kind) {
    case Expr::Kind::Value:
      return Rat(sum_value(p, e.x, lim), total);
    case Expr::Kind::ValueSquare:
      return Rat(sum_value_square(p, e.x, lim), total);
    case Expr::Kind::ValueProduct:
      return Rat(sum_value_product(p, e.x, e.y, lim), total);
    case Expr::Kind::MinValue:
      return Rat(sum_min_value(p, e.x, e.y, lim), total);
    case Expr::Kind::FminSet:
      return Rat(sum_fmin(p, e.a, lim), total);
    case Expr::Kind::FminProduct:
      return Rat(sum_fmin_product(p, e.a, e.b, lim), total);
    case Expr::Kind::FminUnion:
      return Rat(sum_fmin(p, e.a | e.b, lim), total);
  }
  throw RangeError("expectation: unknown expression");
}

Rat covariance(const Poset& p, int x, int y, const Limits& lim) {
  return expectation(p, Expr::value_product(x, y), lim) -
         expectation(p, Expr::value(x), lim) * expectation(p, Expr::value(y), lim);
}

std::optional<Rat> expect_value_given_greater(const Poset& p, int x, int y,
                                              const Limits& lim) {
  auto grid = counting::joint_value_counts(p, x, y, lim);
  BigInt cond_total(0), cond_sum(0);
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = 1; j <= p.size(); ++j) {
      if (i > j && !grid[i - 1][j - 1].is_zero()) {
        cond_total += grid[i - 1][j - 1];
        cond_sum += BigInt(i) * grid[i - 1][j - 1];
      }
    }
  }
  if (cond_total.is_zero()) return std::nullopt;
  return Rat(cond_sum, cond_total);
}

}  // namespace linext::stats
