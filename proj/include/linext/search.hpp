#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linext/inequalities.hpp"
#include "linext/poset.hpp"

namespace linext::search {

struct GeneratorSpec {
  enum class Kind { Exhaustive, RandomBipartite, RandomKDim, FromFile };
  Kind kind = Kind::Exhaustive;
  int n = 5;
  double edge_prob = 0.5;      // RandomBipartite
  int orders = 2;              // RandomKDim: number of intersected linear orders
  std::uint64_t seed = 1;
  int count = 100;             // number of random posets to draw
  std::string path;            // FromFile: JSONL of poset documents

  std::string describe() const;
};

inline constexpr int kExhaustiveCap = 8;

/// One poset per isomorphism class on n elements, built by extending the
/// (n-1)-element representatives with every admissible downset/upset pair
/// and deduplicating by canonical form. Deterministic order (sorted by
/// canonical string). Throws CapExceeded above the structural cap.
std::vector<Poset> exhaustive_posets(int n);

/// Materializes the generator's stream (deterministic given the spec).
std::vector<Poset> generate(const GeneratorSpec& spec);

/// A confirmed counterexample candidate: the failing instance, re-verified
/// against the enumeration path before it is ever persisted.
struct Discovery {
  std::string check_id;
  Poset poset;
  ineq::CheckParams params;
  Rat lhs, rhs;
  bool verified_by_oracle = false;
  std::string generator;
  std::uint64_t seed = 0;

  nlohmann::json to_json() const;
};

struct HuntConfig {
  std::vector<std::string> checks;
  GeneratorSpec gen;
  ineq::SweepLimits limits;
  int workers = 1;
  std::optional<long> budget_posets;   // stop after this many posets
  std::optional<double> budget_secs;   // wall-clock budget (breaks determinism)
  std::string out_path;                // append-only JSONL; empty = no file
};

struct HuntResult {
  long processed = 0;
  std::map<std::string, ineq::SweepCounts> histogram;
  std::vector<Discovery> discoveries;
  bool proved_failure = false;  // a non-conjecture check failed: internal bug
  double wall_secs = 0.0;       // reporting only; never serialized to stdout
  nlohmann::json manifest;

  nlohmann::json to_json() const;  // deterministic (no timing)
  int exit_code() const;           // 0 clean, 2 proved failure, 3 discoveries
};

/// Sweeps every generated poset with the chosen checks. A Fails verdict on a
/// conjecture-flagged check is re-verified with the enumeration path,
/// shrunk, and persisted; a Fails on a proved check stops the hunt and is
/// reported as an internal bug.
HuntResult hunt(const HuntConfig& config);

/// Greedily deletes elements and shrinks subset/integer parameters while the
/// enumeration-verified violation persists.
Discovery shrink(const Discovery& d, const counting::Limits& lim = {});

}  // namespace linext::search
