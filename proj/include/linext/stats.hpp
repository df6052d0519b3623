#pragma once

#include <optional>
#include <vector>

#include "linext/counting.hpp"
#include "linext/poset.hpp"
#include "linext/rational.hpp"

namespace linext::stats {

/// Probability of an event under the uniform random linear extension.
Rat prob_event(const Poset& p, const counting::EventSpec& ev,
               counting::Path path = counting::Path::Auto,
               const counting::Limits& lim = {});

/// Distribution of f(x): entry k-1 is Pr[f(x) = k]; sums to 1 exactly.
std::vector<Rat> value_distribution(const Poset& p, int x,
                                    const counting::Limits& lim = {});

/// Pr[f(x) < f(y)].
Rat prob_less(const Poset& p, int x, int y, const counting::Limits& lim = {});

/// Expressions with exact expectations.
struct Expr {
  enum class Kind { Value, ValueSquare, ValueProduct, MinValue, FminSet, FminProduct, FminUnion };
  Kind kind;
  int x = -1, y = -1;
  Mask a = 0, b = 0;

  static Expr value(int x) { return {Kind::Value, x, -1, 0, 0}; }
  static Expr value_square(int x) { return {Kind::ValueSquare, x, -1, 0, 0}; }
  static Expr value_product(int x, int y) { return {Kind::ValueProduct, x, y, 0, 0}; }
  static Expr min_value(int x, int y) { return {Kind::MinValue, x, y, 0, 0}; }
  static Expr fmin(Mask a) { return {Kind::FminSet, -1, -1, a, 0}; }
  static Expr fmin_product(Mask a, Mask b) { return {Kind::FminProduct, -1, -1, a, b}; }
  static Expr fmin_union(Mask a, Mask b) { return {Kind::FminUnion, -1, -1, a, b}; }
};

Rat expectation(const Poset& p, const Expr& e, const counting::Limits& lim = {});

/// Cov(f(x), f(y)) = E[f(x)f(y)] - E[f(x)]E[f(y)].
Rat covariance(const Poset& p, int x, int y, const counting::Limits& lim = {});

/// E[f(x) | f(x) > f(y)]; empty when the conditioning event has probability
/// zero (never happens for incomparable x, y).
std::optional<Rat> expect_value_given_greater(const Poset& p, int x, int y,
                                              const counting::Limits& lim = {});

// Integer building blocks shared with the inequality checks: sums over all
// linear extensions of the stated statistic.
BigInt sum_value(const Poset& p, int x, const counting::Limits& lim = {});
BigInt sum_value_square(const Poset& p, int x, const counting::Limits& lim = {});
BigInt sum_value_product(const Poset& p, int x, int y, const counting::Limits& lim = {});
BigInt sum_min_value(const Poset& p, int x, int y, const counting::Limits& lim = {});
BigInt sum_fmin(const Poset& p, Mask a, const counting::Limits& lim = {});
BigInt sum_fmin_product(const Poset& p, Mask a, Mask b, const counting::Limits& lim = {});

}  // namespace linext::stats
