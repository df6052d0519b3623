#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linext/atlas.hpp"
#include "linext/counting.hpp"
#include "linext/poset.hpp"
#include "linext/verdict.hpp"

namespace linext::ineq {

/// Named parameter bindings for a check instance.
struct CheckParams {
  std::optional<int> x, y, z, a, u, v, w;
  std::optional<Mask> A, B, C;
  std::optional<int> k, l;

  nlohmann::json to_json() const;
  static CheckParams from_json(const nlohmann::json& j);
};

struct SweepLimits {
  int exhaustive_subset_max_n = 6;  // sweep all subsets up to this poset size
  int random_subsets = 512;         // seeded samples per poset beyond it
  std::uint64_t seed = 1;
};

/// Per-poset evaluation context: caches deletion counts, anchored
/// distributions, joint grids and atlas matrices across the bindings of a
/// sweep. Confined to one thread.
class Engine {
 public:
  explicit Engine(const Poset& p, counting::Path path = counting::Path::Auto,
                  counting::Limits lim = {});

  const Poset& poset() const { return p_; }
  counting::Path path() const { return path_; }
  const counting::Limits& limits() const { return lim_; }

  const BigInt& total();
  const BigInt& count_without(Mask removed);
  const std::vector<BigInt>& anchored(int anchor);
  /// Anchored counts of P minus `removed`; `anchor` in original coordinates.
  const std::vector<BigInt>& anchored_without(Mask removed, int anchor);
  BigInt event(const counting::EventSpec& ev);
  const std::vector<BigInt>& fmin_dist(Mask a);
  const std::vector<std::vector<BigInt>>& joint_values(int x, int y);
  const std::vector<std::vector<BigInt>>& joint_fmin(Mask a, Mask b);
  const atlas::AtlasMatrix& atlas_matrix(int anchor, int k);
  BigInt cross(int x, int y, int z, int k, int l);
  const std::vector<Mask>& upper_ideals();

 private:
  Poset p_;
  counting::Path path_;
  counting::Limits lim_;
  std::optional<BigInt> total_;
  std::map<Mask, BigInt> del_;
  std::map<int, std::vector<BigInt>> anchored_;
  std::map<std::pair<Mask, int>, std::vector<BigInt>> anchored_del_;
  std::map<Mask, std::vector<BigInt>> fmin_;
  std::map<std::pair<int, int>, std::vector<std::vector<BigInt>>> jointv_;
  std::map<std::pair<Mask, Mask>, std::vector<std::vector<BigInt>>> jointf_;
  std::map<std::pair<int, int>, atlas::AtlasMatrix> atlas_;
  std::optional<std::vector<Mask>> upsets_;
};

struct CheckInfo {
  std::string id;
  bool conjecture = false;  // a Fails verdict is a candidate discovery
  bool hidden = false;      // excluded from default sweeps (harness checks)
  std::string statement;
};

const std::vector<CheckInfo>& registry();
const CheckInfo& check_info(const std::string& id);  // throws UnknownCheck

/// Evaluate one check instance exactly. Throws UnknownCheck /
/// PreconditionViolated.
Verdict check(const std::string& id, const Poset& p, const CheckParams& params,
              counting::Path path = counting::Path::Auto);
Verdict check(Engine& eng, const std::string& id, const CheckParams& params);

/// Enumerate every admissible binding of a check on p (deterministic order).
void bind_check(const std::string& id, const Poset& p, const SweepLimits& limits,
                const std::function<void(const CheckParams&)>& emit);

struct SweepCounts {
  std::int64_t holds = 0, equality = 0, fails = 0, vacuous = 0;
  std::int64_t total() const { return holds + equality + fails + vacuous; }
};

struct SweepResult {
  std::map<std::string, SweepCounts> counts;
  std::vector<Verdict> exceptions;  // every verdict with status != Holds
  bool proved_failure = false;      // a non-conjecture check failed
};

/// Run the given checks (default: all non-hidden) over all their admissible
/// bindings on p.
SweepResult sweep(const Poset& p, const std::vector<std::string>& ids = {},
                  const SweepLimits& limits = {},
                  counting::Path path = counting::Path::Auto);

}  // namespace linext::ineq
