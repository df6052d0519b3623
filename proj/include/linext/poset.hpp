#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace linext {

/// Subsets of poset elements are bitmasks over 0..n-1.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }

template <typename F>
inline void for_each_bit(Mask m, F&& f) {
  while (m) {
    int b = __builtin_ctzll(m);
    m &= m - 1;
    f(b);
  }
}

std::vector<int> mask_to_list(Mask m);
Mask list_to_mask(const std::vector<int>& xs);

/// Finite strict partial order on elements 0..n-1, stored transitively
/// closed. Values are immutable after construction and cheap to copy, so
/// they can be shared freely across threads.
class Poset {
 public:
  static constexpr int kMaxElements = 63;

  Poset() = default;

  /// Transitive closure of the given generating pairs (i precedes j).
  /// Throws CycleError if the closure would relate an element to itself,
  /// RangeError on out-of-range input.
  static Poset from_relations(int n, const std::vector<std::pair<int, int>>& relations);

  static Poset chain(int n);
  static Poset antichain(int n);

  /// Fence of height two on elements x1,y1,x2,y2,... (even indices are the
  /// minima): x1 < y1 > x2 < y2 > x3 < ...
  static Poset zigzag(int n);

  /// Two-dimensional poset of a permutation given as values sigma(1..n):
  /// position i precedes position j iff i < j and sigma(i) < sigma(j).
  static Poset from_permutation(const std::vector<int>& sigma);

  static Poset parallel_sum(const Poset& p, const Poset& q);
  static Poset linear_sum(const Poset& p, const Poset& q);

  Poset dual() const;

  /// Induced subposet on the complement of `removed`; surviving elements are
  /// relabeled by order-preserving compaction.
  Poset deleted(Mask removed) const;

  /// New index of `elem` after deleting `removed` (elem must survive).
  static int compact_index(Mask removed, int elem);
  /// Mask over the compacted element set.
  static Mask compact_mask(Mask removed, Mask subset);

  int size() const { return n_; }
  Mask all() const { return n_ == 0 ? 0 : (~Mask{0} >> (64 - n_)); }

  bool less(int i, int j) const { return (above_[i] >> j) & 1; }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }

  /// Strictly above / below i.
  Mask above(int i) const { return above_[i]; }
  Mask below(int i) const { return below_[i]; }

  Mask minimals() const;
  Mask maximals() const;

  /// Upper order ideal generated by b (includes b).
  Mask up_ideal(int b) const { return above_[b] | (Mask{1} << b); }
  /// Union of up-ideals over the members of a.
  Mask up_closure(Mask a) const;
  /// For a within the minimals: up_closure(a) minus the up-closure of the
  /// complementary minimal elements.
  Mask natural_closure(Mask a) const;

  /// Elements covering x.
  Mask covers_of(int x) const;
  /// Elements that cover x and cover nothing else.
  Mask unique_covers(int x) const;

  bool is_chain() const;

  /// Canonical byte string: equal iff posets are isomorphic. Minimizes the
  /// relation-matrix encoding over element orders, pruned by an invariant
  /// partition refinement. Intended for small n (the generators cap at 8).
  std::string canonical_form() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  /// Generating pairs (the cover relation).
  std::vector<std::pair<int, int>> cover_pairs() const;
  /// All related pairs (the full closed relation).
  std::vector<std::pair<int, int>> relation_pairs() const;

  bool operator==(const Poset& o) const { return n_ == o.n_ && above_ == o.above_; }

 private:
  int n_ = 0;
  std::vector<Mask> above_, below_;
  std::vector<std::string> labels_;

  static Poset from_closed(int n, std::vector<Mask> above);
  friend class PosetBuilder;
};

}  // namespace linext
