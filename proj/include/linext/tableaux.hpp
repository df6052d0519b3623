#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "linext/bigint.hpp"
#include "linext/poset.hpp"
#include "linext/prng.hpp"
#include "linext/rational.hpp"
#include "linext/verdict.hpp"

namespace linext::tableaux {

/// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition parse(std::string_view csv);  // "4,3,1"; "" is empty

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int part(int row) const {  // 0-based; 0 beyond the last row
    return row < rows() ? parts_[row] : 0;
  }

  Partition conjugate() const;
  bool self_conjugate() const { return *this == conjugate(); }
  bool contains(const Partition& inner) const;

  static Partition sum(const Partition& a, const Partition& b);
  static Partition union_(const Partition& a, const Partition& b);
  /// Odd- and even-indexed parts of the sorted union of the two part lists.
  static std::pair<Partition, Partition> alternating_split(const Partition& a,
                                                           const Partition& b);
  /// Halves every part; all parts must be even.
  Partition halved() const;
  bool all_parts_even() const;

  std::string to_string() const;
  bool operator==(const Partition& o) const = default;
  std::strong_ordering operator<=>(const Partition& o) const = default;

 private:
  std::vector<int> parts_;
};

/// 1-based (row, col) matching the usual matrix convention for diagrams.
struct Cell {
  int row = 0, col = 0;
  bool operator==(const Cell& o) const = default;
  std::strong_ordering operator<=>(const Cell& o) const = default;
};

/// Skew diagram outer/inner with inner contained in outer.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition outer, Partition inner = Partition());
  static SkewShape parse(std::string_view text);  // "10,9,9/4,3" or "4,3,1"

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool straight() const { return inner_.rows() == 0; }
  int cells() const { return outer_.size() - inner_.size(); }

  bool contains(Cell c) const;
  std::vector<Cell> cell_list() const;  // row-major
  std::vector<Cell> corners() const;
  /// Cells whose right or lower neighbor is outside the diagram.
  std::vector<Cell> boundary() const;

  /// Diagram minus the given cells, when the result is again a skew diagram
  /// (rows stay contiguous and nested); otherwise nullopt.
  std::optional<SkewShape> removed(const std::vector<Cell>& cells) const;

  /// Cell poset: (i,j) precedes (i',j') iff i<=i' and j<=j'. Linear
  /// extensions are exactly the standard tableaux of this shape.
  Poset to_poset() const;

  std::string to_string() const;
  bool operator==(const SkewShape& o) const = default;

 private:
  Partition outer_, inner_;
};

/// Number of standard Young tableaux: the hook-length formula for straight
/// shapes, the factorial-reciprocal determinant (evaluated in exact
/// rationals) for skew ones. Throws NonIntegralDeterminant if the determinant
/// route produces a non-integer, which would indicate a bug.
BigInt syt_count(const SkewShape& shape);
BigInt syt_count_hook(const Partition& lambda);
BigInt syt_count_det(const SkewShape& shape);

/// Memo used by the shape sweeps; syt_count itself stays pure.
class SytCache {
 public:
  const BigInt& count(const SkewShape& shape);

 private:
  std::unordered_map<std::string, BigInt> memo_;
};

/// p(x) = |SYT(lambda - x)| / |SYT(lambda)| over the corners of lambda.
std::map<Cell, Rat> corner_distribution(const Partition& lambda);

/// One hook walk: uniform start cell, uniform jumps within the current hook,
/// stops at a corner. Deterministic given the generator state.
Cell hook_walk_sample(const Partition& lambda, SplitMix64& rng);

/// Boundary squares adjacent to (directly left of or directly above) a
/// corner whose removal together with the corner keeps the diagram skew.
std::vector<Cell> adjacent_removable(const SkewShape& shape, Cell corner);

// Instance evaluators for the tableau inequalities.
ineq::Verdict check_corner_lc(const SkewShape&, Cell x, Cell y, Cell v, Cell w, SytCache&);
ineq::Verdict check_self_conj(const SkewShape&, Cell x, Cell v, SytCache&);
ineq::Verdict check_hook_lc(const Partition& lambda, int a, int b, SytCache&);
ineq::Verdict check_three(const SkewShape&, Cell x, Cell y, Cell z, Cell u, SytCache&);
ineq::Verdict check_okounkov(const SkewShape&, const SkewShape&, SytCache&);
ineq::Verdict check_fflp(const SkewShape&, const SkewShape&, SytCache&);
ineq::Verdict check_fflp_corners(const SkewShape&, Cell x, Cell y, SytCache&);

inline const std::vector<std::string>& syt_check_ids() {
  static const std::vector<std::string> ids = {
      "yt-corner-lc", "yt-self-conj", "yt-hook-lc", "yt-three",
      "okounkov",     "fflp",         "fflp-corners"};
  return ids;
}

/// All admissible instances of a single-shape check on the given shape
/// (okounkov/fflp take the pair evaluators above instead).
std::vector<ineq::Verdict> sweep_syt_check(const std::string& id, const SkewShape& shape,
                                           SytCache& cache);

}  // namespace linext::tableaux
