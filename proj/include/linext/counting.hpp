#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "linext/bigint.hpp"
#include "linext/poset.hpp"

namespace linext::counting {

/// Nonnegative exact count.
using BigCount = BigInt;

struct Limits {
  int enum_cap = 12;                        // max n for explicit enumeration
  std::size_t ideal_budget = std::size_t{1} << 22;  // max downsets per DP
};

enum class Path { Auto, Fast, Reference };

/// The lattice of downsets (order ideals) of a poset, grouped by size.
/// Linear extensions are in bijection with maximal chains of this lattice,
/// which is what every DP below walks.
class IdealLattice {
 public:
  static IdealLattice build(const Poset& p, const Limits& lim = {});

  const Poset& poset() const { return *p_; }
  const std::vector<Mask>& ideals() const { return ideals_; }
  std::size_t size() const { return ideals_.size(); }
  std::size_t index_of(Mask s) const { return index_.at(s); }

  /// Elements addable to the ideal s.
  Mask available(Mask s) const;

  /// Chain counts from the empty ideal.
  std::vector<BigCount> forward() const;
  /// Chain counts to the full ideal.
  std::vector<BigCount> backward() const;

  /// Forward counts where element e may be assigned value t=|S|+1 only if
  /// filter(t, e) holds.
  std::vector<BigCount> forward_filtered(
      const std::function<bool(int, int)>& filter) const;

 private:
  const Poset* p_ = nullptr;
  Poset owned_;
  std::vector<Mask> ideals_;
  std::unordered_map<Mask, std::size_t> index_;
};

/// Number of downsets; guards the same budget the DPs use.
std::size_t ideal_count(const Poset& p, const Limits& lim = {});

/// e(P), the number of linear extensions.
BigCount count(const Poset& p, const Limits& lim = {});

/// e_k(P) for k = 1..n (index k-1), anchored at `anchor`.
std::vector<BigCount> value_counts(const Poset& p, int anchor, const Limits& lim = {});

/// e_k(P): extensions with f(anchor) = k. Throws RangeError unless 1<=k<=n.
BigCount count_with_value(const Poset& p, int anchor, int k, const Limits& lim = {});

/// Visits every linear extension exactly once as an element->value map,
/// ordered lexicographically by the value sequence f^-1(1),...,f^-1(n).
/// Throws CapExceeded when n exceeds the enumeration cap.
void enumerate(const Poset& p, const std::function<void(const std::vector<int>&)>& visit,
               const Limits& lim = {});

/// One event over a random linear extension, built from the clause shapes
/// the checks need: an anchored value, exact low/high values, membership of
/// a value in an element set, and f_min constraints.
struct EventSpec {
  struct Fixed {
    int elem;
    int value;  // absolute value in 1..n
  };
  struct Member {
    int value;      // absolute value in 1..n
    Mask set;
    bool negated = false;  // true: value not attained inside `set`
  };
  struct MinConstraint {
    Mask set;
    int k;
    bool greater = false;  // false: f_min(set) = k; true: f_min(set) > k
  };

  std::optional<std::pair<int, int>> anchor;  // (element, value)
  std::vector<Fixed> fixed;
  std::vector<Member> members;
  std::vector<MinConstraint> mins;

  bool holds(const std::vector<int>& extension) const;

  // Convenience builders.
  EventSpec& with_anchor(int a, int k);
  EventSpec& with_value(int elem, int value);
  EventSpec& with_member(int value, Mask set, bool negated = false);
  EventSpec& with_min(Mask set, int k, bool greater = false);
};

/// Number of extensions satisfying the event. The fast path works by poset
/// surgery (peeling forced minima/maxima) plus disjoint decomposition of
/// membership clauses; the reference path filters the full enumeration.
/// Inconsistent events simply count zero. Path::Auto prefers the fast path
/// whenever the event's shape supports it.
BigCount count_event(const Poset& p, const EventSpec& ev, Path path = Path::Auto,
                     const Limits& lim = {});

/// |{f : f_min(A) = k}|.
BigCount fmin_count(const Poset& p, Mask a, int k, Path path = Path::Auto,
                    const Limits& lim = {});
/// Distribution of f_min(A) as counts indexed k-1 = 0..n-1.
std::vector<BigCount> fmin_counts(const Poset& p, Mask a, const Limits& lim = {});

/// |{f : f(y)-f(x) = k, f(z)-f(y) = l}| for distinct x,y,z and k,l >= 1.
BigCount cross_product_count(const Poset& p, int x, int y, int z, int k, int l,
                             Path path = Path::Auto, const Limits& lim = {});

/// Joint counts |{f : f(x)=i, f(y)=j}| as an n x n grid (indices i-1, j-1).
std::vector<std::vector<BigCount>> joint_value_counts(const Poset& p, int x, int y,
                                                      const Limits& lim = {});

/// Joint counts |{f : f_min(A)=i, f_min(B)=j}| as an n x n grid.
std::vector<std::vector<BigCount>> joint_fmin_counts(const Poset& p, Mask a, Mask b,
                                                     const Limits& lim = {});

}  // namespace linext::counting
