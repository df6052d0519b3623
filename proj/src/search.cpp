#include "linext/search.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <thread>

#include "linext/counting.hpp"
#include "linext/errors.hpp"
#include "linext/json_io.hpp"
#include "linext/prng.hpp"
#include "linext/version.hpp"

namespace linext::search {

std::string GeneratorSpec::describe() const {
  switch (kind) {
    case Kind::Exhaustive:
      return "exhaustive{n=" + std::to_string(n) + "}";
    case Kind::RandomBipartite:
      return "bipartite{n=" + std::to_string(n) + ",p=" + std::to_string(edge_prob) +
             ",count=" + std::to_string(count) + "}";
    case Kind::RandomKDim:
      return "kdim{n=" + std::to_string(n) + ",k=" + std::to_string(orders) +
             ",count=" + std::to_string(count) + "}";
    case Kind::FromFile:
      return "file{" + path + "}";
  }
  return "?";
}

std::vector<Poset> exhaustive_posets(int n) {
  if (n < 0 || n > kExhaustiveCap) throw CapExceeded("exhaustive_posets: n above cap");
  std::vector<Poset> reps{Poset::antichain(0)};
  for (int size = 1; size <= n; ++size) {
    // Representatives keyed (and finally ordered) by canonical form.
    std::map<std::string, Poset> next;
    for (const Poset& p : reps) {
      auto lat = counting::IdealLattice::build(p);
      auto dual_lat = counting::IdealLattice::build(p.dual());
      for (Mask down : lat.ideals()) {
        // Every element of the upset must already sit above every element
        // of the downset, otherwise the extension would change p itself.
        Mask allowed = p.all();
        for_each_bit(down, [&](int d) { allowed &= p.above(d); });
        for (Mask up : dual_lat.ideals()) {
          if ((up & ~allowed) != 0) continue;
          std::vector<std::pair<int, int>> rel = p.relation_pairs();
          int z = size - 1;
          for_each_bit(down, [&](int d) { rel.emplace_back(d, z); });
          for_each_bit(up, [&](int u) { rel.emplace_back(z, u); });
          Poset q = Poset::from_relations(size, rel);
          std::string canon = q.canonical_form();
          next.emplace(std::move(canon), std::move(q));
        }
      }
    }
    reps.clear();
    for (auto& [canon, q] : next) reps.push_back(std::move(q));
  }
  return reps;
}

namespace {

Poset random_kdim(int n, int orders, SplitMix64& rng) {
  std::vector<std::vector<int>> position(orders, std::vector<int>(n));
  for (auto& pos : position) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    }
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
  }
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      bool before = true;
      for (const auto& pos : position) before = before && pos[i] < pos[j];
      if (before) rel.emplace_back(i, j);
    }
  }
  return Poset::from_relations(n, rel);
}

Poset random_bipartite(int n, double p, SplitMix64& rng) {
  int bottom = (n + 1) / 2;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < bottom; ++i) {
    for (int j = bottom; j < n; ++j) {
      if (rng.chance(p)) rel.emplace_back(i, j);
    }
  }
  return Poset::from_relations(n, rel);
}

}  // namespace

std::vector<Poset> generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::Exhaustive:
      return exhaustive_posets(spec.n);
    case GeneratorSpec::Kind::RandomKDim: {
      SplitMix64 rng(spec.seed);
      std::vector<Poset> out;
      for (int i = 0; i < spec.count; ++i) out.push_back(random_kdim(spec.n, spec.orders, rng));
      return out;
    }
    case GeneratorSpec::Kind::RandomBipartite: {
      SplitMix64 rng(spec.seed);
      std::vector<Poset> out;
      for (int i = 0; i < spec.count; ++i)
        out.push_back(random_bipartite(spec.n, spec.edge_prob, rng));
      return out;
    }
    case GeneratorSpec::Kind::FromFile: {
      std::ifstream in(spec.path);
      if (!in) throw RangeError("generate: cannot open " + spec.path);
      std::vector<Poset> out;
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(io::poset_from_json(nlohmann::json::parse(line)));
      }
      return out;
    }
  }
  return {};
}

nlohmann::json Discovery::to_json() const {
  nlohmann::json j;
  j["type"] = "discovery";
  j["check_id"] = check_id;
  j["poset"] = io::poset_to_json(poset);
  j["params"] = params.to_json();
  j["lhs"] = lhs.to_string();
  j["rhs"] = rhs.to_string();
  j["verified_by_oracle"] = verified_by_oracle;
  j["generator"] = generator;
  j["seed"] = seed;
  return j;
}

nlohmann::json HuntResult::to_json() const {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [id, c] : histogram) {
    hist[id] = {{"holds", c.holds},
                {"equality", c.equality},
                {"fails", c.fails},
                {"vacuous", c.vacuous}};
  }
  nlohmann::json ds = nlohmann::json::array();
  for (const auto& d : discoveries) ds.push_back(d.to_json());
  return nlohmann::json{{"manifest", manifest},
                        {"processed", processed},
                        {"histogram", hist},
                        {"discoveries", ds},
                        {"proved_failure", proved_failure}};
}

int HuntResult::exit_code() const {
  if (proved_failure) return 2;
  return discoveries.empty() ? 0 : 3;
}

namespace {

// Oracle re-check: rerun the instance with the pure enumeration path.
bool oracle_confirms_failure(const std::string& id, const Poset& p,
                             const ineq::CheckParams& params) {
  ineq::Verdict v = ineq::check(id, p, params, counting::Path::Reference);
  return v.status == ineq::Status::Fails;
}

struct PosetOutcome {
  ineq::SweepResult sweep;
};

}  // namespace

Discovery shrink(const Discovery& d, const counting::Limits& lim) {
  (void)lim;
  Discovery cur = d;
  bool progress = true;
  auto still_fails = [&](const Poset& p, const ineq::CheckParams& ps) {
    try {
      return oracle_confirms_failure(cur.check_id, p, ps);
    } catch (const PreconditionViolated&) {
      return false;
    } catch (const RangeError&) {
      return false;
    } catch (const CapExceeded&) {
      return false;  // candidate too large to re-verify; keep the current one
    }
  };
  auto remap_elem = [](std::optional<int>& e, Mask removed) {
    if (e) e = Poset::compact_index(removed, *e);
  };
  while (progress) {
    progress = false;
    // Drop elements not referenced by the binding, highest index first so
    // earlier references stay valid.
    for (int v = cur.poset.size() - 1; v >= 0; --v) {
      Mask bit = Mask{1} << v;
      const auto& ps = cur.params;
      auto used = [&](const std::optional<int>& e) { return e && *e == v; };
      if (used(ps.x) || used(ps.y) || used(ps.z) || used(ps.a) || used(ps.u) || used(ps.v) ||
          used(ps.w))
        continue;
      if ((ps.A && (*ps.A >> v) & 1) || (ps.B && (*ps.B >> v) & 1) || (ps.C && (*ps.C >> v) & 1))
        continue;
      Poset smaller = cur.poset.deleted(bit);
      ineq::CheckParams moved = cur.params;
      remap_elem(moved.x, bit);
      remap_elem(moved.y, bit);
      remap_elem(moved.z, bit);
      remap_elem(moved.a, bit);
      remap_elem(moved.u, bit);
      remap_elem(moved.v, bit);
      remap_elem(moved.w, bit);
      if (moved.A) moved.A = Poset::compact_mask(bit, *moved.A);
      if (moved.B) moved.B = Poset::compact_mask(bit, *moved.B);
      if (moved.C) moved.C = Poset::compact_mask(bit, *moved.C);
      if (still_fails(smaller, moved)) {
        cur.poset = std::move(smaller);
        cur.params = moved;
        progress = true;
        break;
      }
    }
    if (progress) continue;
    // Shrink subset parameters one element at a time.
    for (auto* set : {&cur.params.A, &cur.params.B, &cur.params.C}) {
      if (!*set) continue;
      for (int v : mask_to_list(**set)) {
        ineq::CheckParams trial = cur.params;
        Mask reduced = **set & ~(Mask{1} << v);
        if (reduced == 0) continue;
        if (set == &cur.params.A) trial.A = reduced;
        if (set == &cur.params.B) trial.B = reduced;
        if (set == &cur.params.C) trial.C = reduced;
        if (still_fails(cur.poset, trial)) {
          cur.params = trial;
          progress = true;
          break;
        }
      }
      if (progress) break;
    }
    if (progress) continue;
    // Decrease integer parameters.
    for (auto* num : {&cur.params.k, &cur.params.l}) {
      if (!*num || **num <= 1) continue;
      ineq::CheckParams trial = cur.params;
      if (num == &cur.params.k) trial.k = **num - 1;
      if (num == &cur.params.l) trial.l = **num - 1;
      if (still_fails(cur.poset, trial)) {
        cur.params = trial;
        progress = true;
        break;
      }
    }
  }
  // Record the final exact sides.
  try {
    ineq::Verdict v = ineq::check(cur.check_id, cur.poset, cur.params, counting::Path::Reference);
    cur.lhs = v.lhs;
    cur.rhs = v.rhs;
    cur.verified_by_oracle = v.status == ineq::Status::Fails;
  } catch (const CapExceeded&) {
    cur.verified_by_oracle = false;  // witness too large for the oracle
  }
  return cur;
}

HuntResult hunt(const HuntConfig& config) {
  auto start = std::chrono::steady_clock::now();
  HuntResult result;
  // Worker count deliberately stays out of the manifest: results are
  // independent of scheduling, and reruns must compare byte-identical.
  result.manifest = {{"generator", config.gen.describe()},
                     {"seed", config.gen.seed},
                     {"checks", config.checks},
                     {"version", kVersion}};

  std::vector<Poset> posets = generate(config.gen);
  long budget = config.budget_posets.value_or(static_cast<long>(posets.size()));
  long todo = std::min<long>(budget, static_cast<long>(posets.size()));

  std::vector<PosetOutcome> outcomes(static_cast<std::size_t>(todo));
  std::vector<char> done(static_cast<std::size_t>(todo), 0);
  std::atomic<long> next_index{0};

  auto worker = [&]() {
    for (;;) {
      if (config.budget_secs) {
        // Wall-clock budgets terminate normally but truncate the stream, so
        // they trade reproducibility for time; count budgets do not.
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > *config.budget_secs) return;
      }
      long i = next_index.fetch_add(1);
      if (i >= todo) return;
      outcomes[static_cast<std::size_t>(i)].sweep =
          ineq::sweep(posets[static_cast<std::size_t>(i)], config.checks, config.limits,
                      counting::Path::Auto);
      done[static_cast<std::size_t>(i)] = 1;
    }
  };
  int workers = std::max(1, config.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  // Aggregate the longest fully-processed prefix (the whole stream unless a
  // time budget cut in).
  long processed = 0;
  while (processed < todo && done[static_cast<std::size_t>(processed)]) ++processed;

  // Deterministic aggregation in stream order.
  for (long i = 0; i < processed; ++i) {
    const auto& sw = outcomes[static_cast<std::size_t>(i)].sweep;
    for (const auto& [id, counts] : sw.counts) {
      auto& agg = result.histogram[id];
      agg.holds += counts.holds;
      agg.equality += counts.equality;
      agg.fails += counts.fails;
      agg.vacuous += counts.vacuous;
    }
    for (const auto& v : sw.exceptions) {
      if (v.status != ineq::Status::Fails) continue;
      const auto& info = ineq::check_info(v.check_id);
      ineq::CheckParams params = ineq::CheckParams::from_json(v.witness.at("params"));
      const Poset& p = posets[static_cast<std::size_t>(i)];
      if (!info.conjecture) {
        result.proved_failure = true;
        continue;
      }
      bool confirmed = false;
      try {
        confirmed = oracle_confirms_failure(v.check_id, p, params);
      } catch (const CapExceeded&) {
        // Too large for the enumeration oracle; never persisted unverified.
        continue;
      }
      if (!confirmed) {
        // Fast path and enumeration disagree: a counting defect, not a
        // discovery.
        result.proved_failure = true;
        continue;
      }
      Discovery d;
      d.check_id = v.check_id;
      d.poset = p;
      d.params = params;
      d.lhs = v.lhs;
      d.rhs = v.rhs;
      d.verified_by_oracle = true;
      d.generator = config.gen.describe();
      d.seed = config.gen.seed;
      result.discoveries.push_back(shrink(d));
    }
  }
  result.processed = processed;

  if (!config.out_path.empty()) {
    int fd = ::open(config.out_path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (fd < 0) throw RangeError("hunt: cannot open " + config.out_path);
    auto write_line = [&](const nlohmann::json& j) {
      std::string line = j.dump() + "\n";
      ssize_t ignored = ::write(fd, line.data(), line.size());
      (void)ignored;
      ::fsync(fd);
    };
    nlohmann::json head = result.manifest;
    head["type"] = "manifest";
    write_line(head);
    for (const auto& d : result.discoveries) write_line(d.to_json());
    ::close(fd);
  }

  result.wall_secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace linext::search
