#include "linext/poset.hpp"

#include <algorithm>
#include <cstring>
#include <map>

#include "linext/errors.hpp"

namespace linext {

std::vector<int> mask_to_list(Mask m) {
  std::vector<int> out;
  for_each_bit(m, [&](int b) { out.push_back(b); });
  return out;
}

Mask list_to_mask(const std::vector<int>& xs) {
  Mask m = 0;
  for (int x : xs) m |= Mask{1} << x;
  return m;
}

Poset Poset::from_closed(int n, std::vector<Mask> above) {
  Poset p;
  p.n_ = n;
  p.above_ = std::move(above);
  p.below_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for_each_bit(p.above_[i], [&](int j) { p.below_[j] |= Mask{1} << i; });
  }
  return p;
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& relations) {
  if (n < 0 || n > kMaxElements) throw RangeError("Poset: size out of range");
  std::vector<Mask> above(n, 0);
  for (auto [i, j] : relations) {
    if (i < 0 || i >= n || j < 0 || j >= n) throw RangeError("Poset: relation out of range");
    if (i == j) throw CycleError("Poset: element related to itself");
    above[i] |= Mask{1} << j;
  }
  // Warshall closure on bit rows.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if ((above[i] >> k) & 1) above[i] |= above[k];
    }
  }
  for (int i = 0; i < n; ++i) {
    if ((above[i] >> i) & 1) throw CycleError("Poset: relations contain a cycle");
  }
  return from_closed(n, std::move(above));
}

Poset Poset::chain(int n) {
  if (n < 0 || n > kMaxElements) throw RangeError("Poset: size out of range");
  std::vector<Mask> above(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) above[i] |= Mask{1} << j;
  }
  return from_closed(n, std::move(above));
}

Poset Poset::antichain(int n) {
  if (n < 0 || n > kMaxElements) throw RangeError("Poset: size out of range");
  return from_closed(n, std::vector<Mask>(n, 0));
}

Poset Poset::zigzag(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int j = 1; j < n; j += 2) {
    rel.emplace_back(j - 1, j);
    if (j + 1 < n) rel.emplace_back(j + 1, j);
  }
  return from_relations(n, rel);
}

Poset Poset::from_permutation(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[v]) throw RangeError("Poset: not a permutation of 1..n");
    seen[v] = true;
  }
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (sigma[i] < sigma[j]) rel.emplace_back(i, j);
    }
  }
  return from_relations(n, rel);
}

Poset Poset::parallel_sum(const Poset& p, const Poset& q) {
  int n = p.n_ + q.n_;
  if (n > kMaxElements) throw RangeError("Poset: size out of range");
  std::vector<Mask> above(n, 0);
  for (int i = 0; i < p.n_; ++i) above[i] = p.above_[i];
  for (int i = 0; i < q.n_; ++i) above[p.n_ + i] = q.above_[i] << p.n_;
  return from_closed(n, std::move(above));
}

Poset Poset::linear_sum(const Poset& p, const Poset& q) {
  Poset out = parallel_sum(p, q);
  Mask upper = out.all() & ~((Mask{1} << p.n_) - 1);
  for (int i = 0; i < p.n_; ++i) out.above_[i] |= upper;
  for (int j = p.n_; j < out.n_; ++j) out.below_[j] |= (Mask{1} << p.n_) - 1;
  return out;
}

Poset Poset::dual() const {
  Poset out;
  out.n_ = n_;
  out.above_ = below_;
  out.below_ = above_;
  out.labels_ = labels_;
  return out;
}

int Poset::compact_index(Mask removed, int elem) {
  return elem - popcount(removed & ((Mask{1} << elem) - 1));
}

Mask Poset::compact_mask(Mask removed, Mask subset) {
  Mask out = 0;
  for_each_bit(subset & ~removed, [&](int b) {
    out |= Mask{1} << compact_index(removed, b);
  });
  return out;
}

Poset Poset::deleted(Mask removed) const {
  removed &= all();
  int m = n_ - popcount(removed);
  std::vector<Mask> above(m, 0);
  for (int i = 0; i < n_; ++i) {
    if ((removed >> i) & 1) continue;
    above[compact_index(removed, i)] = compact_mask(removed, above_[i]);
  }
  return from_closed(m, std::move(above));
}

Mask Poset::minimals() const {
  Mask out = 0;
  for (int i = 0; i < n_; ++i) {
    if (below_[i] == 0) out |= Mask{1} << i;
  }
  return out;
}

Mask Poset::maximals() const {
  Mask out = 0;
  for (int i = 0; i < n_; ++i) {
    if (above_[i] == 0) out |= Mask{1} << i;
  }
  return out;
}

Mask Poset::up_closure(Mask a) const {
  Mask out = 0;
  for_each_bit(a & all(), [&](int b) { out |= up_ideal(b); });
  return out;
}

Mask Poset::natural_closure(Mask a) const {
  Mask b = minimals() & ~a;
  return up_closure(a) & ~up_closure(b);
}

Mask Poset::covers_of(int x) const {
  Mask out = 0;
  for_each_bit(above_[x], [&](int y) {
    if ((below_[y] & above_[x]) == 0) out |= Mask{1} << y;
  });
  return out;
}

Mask Poset::unique_covers(int x) const {
  Mask out = 0;
  for_each_bit(covers_of(x), [&](int y) {
    // Lower covers of y: minimal elements of below(y).
    Mask lower = 0;
    for_each_bit(below_[y], [&](int z) {
      if ((above_[z] & below_[y]) == 0) lower |= Mask{1} << z;
    });
    if (lower == (Mask{1} << x)) out |= Mask{1} << y;
  });
  return out;
}

bool Poset::is_chain() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (!comparable(i, j)) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for_each_bit(covers_of(i), [&](int j) { out.emplace_back(i, j); });
  }
  return out;
}

std::vector<std::pair<int, int>> Poset::relation_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for_each_bit(above_[i], [&](int j) { out.emplace_back(i, j); });
  }
  return out;
}

namespace {

// Isomorphism-invariant partition refinement used to restrict the canonical
// search: elements can only map to elements with the same signature.
// Signatures are re-ranked to small ids every round so they stay short.
std::vector<int> refine_classes(const Poset& p, std::vector<std::vector<int>>* blocks) {
  int n = p.size();
  std::vector<std::string> key(n);
  for (int i = 0; i < n; ++i) {
    key[i] = std::to_string(popcount(p.below(i))) + "," + std::to_string(popcount(p.above(i)));
  }
  std::vector<int> id(n, 0);
  std::size_t classes = 0;
  for (int round = 0; round <= n; ++round) {
    std::map<std::string, int> rank;
    for (int i = 0; i < n; ++i) rank.emplace(key[i], 0);
    int next_id = 0;
    for (auto& [k, r] : rank) r = next_id++;
    for (int i = 0; i < n; ++i) id[i] = rank.at(key[i]);
    if (rank.size() == classes) break;  // stable partition
    classes = rank.size();
    for (int i = 0; i < n; ++i) {
      std::vector<int> lo, hi;
      for_each_bit(p.below(i), [&](int j) { lo.push_back(id[j]); });
      for_each_bit(p.above(i), [&](int j) { hi.push_back(id[j]); });
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      std::string next = std::to_string(id[i]) + "|";
      for (int v : lo) next += std::to_string(v) + ",";
      next += "|";
      for (int v : hi) next += std::to_string(v) + ",";
      key[i] = std::move(next);
    }
  }
  std::vector<int> cls(n);
  blocks->clear();
  std::map<int, std::vector<int>> by_id;
  for (int i = 0; i < n; ++i) by_id[id[i]].push_back(i);
  int out_id = 0;
  for (auto& [k, members] : by_id) {
    for (int v : members) cls[v] = out_id;
    blocks->push_back(members);
    ++out_id;
  }
  return cls;
}

struct CanonSearch {
  const Poset& p;
  int n;
  std::vector<int> pos_class;  // class id required at each position
  std::vector<int> perm;
  Mask used = 0;
  std::vector<std::uint8_t> cur, best;
  bool have_best = false;
  const std::vector<int>& cls;

  CanonSearch(const Poset& poset, const std::vector<int>& classes,
              const std::vector<std::vector<int>>& blocks)
      : p(poset), n(poset.size()), cls(classes) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (std::size_t i = 0; i < blocks[b].size(); ++i) pos_class.push_back(static_cast<int>(b));
    }
  }

  // `tight` = the current prefix equals the incumbent's prefix, so new
  // segments still need comparing; false = already strictly smaller.
  // Returns whether the incumbent was replaced somewhere below, which makes
  // the path prefix equal to the new incumbent for later siblings.
  bool dfs(int t, bool tight) {
    if (t == n) {
      if (!have_best || !tight) {
        best = cur;
        have_best = true;
        return true;
      }
      return false;
    }
    bool updated = false;
    for (int e = 0; e < n; ++e) {
      if ((used >> e) & 1) continue;
      if (cls[e] != pos_class[t]) continue;
      std::size_t mark = cur.size();
      for (int i = 0; i < t; ++i) {
        cur.push_back(p.less(perm[i], e) ? 1 : 0);
        cur.push_back(p.less(e, perm[i]) ? 1 : 0);
      }
      bool child_tight = tight || updated;
      bool prune = false;
      if (have_best && child_tight) {
        int c = std::memcmp(cur.data() + mark, best.data() + mark, cur.size() - mark);
        if (c > 0) prune = true;
        if (c < 0) child_tight = false;
      }
      if (!prune) {
        perm.push_back(e);
        used |= Mask{1} << e;
        updated = dfs(t + 1, have_best && child_tight) || updated;
        used &= ~(Mask{1} << e);
        perm.pop_back();
      }
      cur.resize(mark);
    }
    return updated;
  }
};

}  // namespace

std::string Poset::canonical_form() const {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cls = refine_classes(*this, &blocks);
  CanonSearch search(*this, cls, blocks);
  search.cur.reserve(static_cast<std::size_t>(n_) * (n_ - 1));
  search.dfs(0, false);

  std::string out;
  out.push_back(static_cast<char>(n_));
  // Class sizes are isomorphism-invariant; including them keeps distinct
  // refinements distinct even when the packed bits coincide.
  for (auto& b : blocks) out.push_back(static_cast<char>(b.size()));
  out.push_back('|');
  std::uint8_t acc = 0;
  int nbits = 0;
  for (std::uint8_t bit : search.best) {
    acc = static_cast<std::uint8_t>((acc << 1) | bit);
    if (++nbits == 8) {
      out.push_back(static_cast<char>(acc));
      acc = 0;
      nbits = 0;
    }
  }
  if (nbits) out.push_back(static_cast<char>(acc << (8 - nbits)));
  return out;
}

}  // namespace linext
