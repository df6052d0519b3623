#include "linext/counting.hpp"

#include <algorithm>

#include "linext/errors.hpp"

namespace linext::counting {

namespace {

Mask available_in(const Poset& p, Mask s) {
  Mask out = 0;
  Mask rest = p.all() & ~s;
  for_each_bit(rest, [&](int e) {
    if ((p.below(e) & ~s) == 0) out |= Mask{1} << e;
  });
  return out;
}

}  // namespace

IdealLattice IdealLattice::build(const Poset& p, const Limits& lim) {
  IdealLattice lat;
  lat.owned_ = p;
  lat.p_ = &lat.owned_;
  std::vector<Mask> layer{0};
  lat.ideals_.push_back(0);
  lat.index_.emplace(0, 0);
  while (!layer.empty()) {
    std::vector<Mask> next;
    for (Mask s : layer) {
      for_each_bit(available_in(p, s), [&](int e) { next.push_back(s | (Mask{1} << e)); });
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (Mask s : next) {
      if (lat.ideals_.size() >= lim.ideal_budget)
        throw CapExceeded("counting: downset budget exceeded");
      lat.index_.emplace(s, lat.ideals_.size());
      lat.ideals_.push_back(s);
    }
    layer = std::move(next);
  }
  return lat;
}

Mask IdealLattice::available(Mask s) const { return available_in(*p_, s); }

std::vector<BigCount> IdealLattice::forward() const {
  std::vector<BigCount> f(ideals_.size());
  f[0] = BigCount(1);
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    if (f[i].is_zero()) continue;
    for_each_bit(available(ideals_[i]), [&](int e) {
      f[index_.at(ideals_[i] | (Mask{1} << e))] += f[i];
    });
  }
  return f;
}

std::vector<BigCount> IdealLattice::backward() const {
  std::vector<BigCount> g(ideals_.size());
  g.back() = BigCount(1);
  for (std::size_t i = ideals_.size(); i-- > 0;) {
    Mask avail = available(ideals_[i]);
    for_each_bit(avail, [&](int e) {
      g[i] += g[index_.at(ideals_[i] | (Mask{1} << e))];
    });
    if (avail == 0 && ideals_[i] != p_->all()) g[i] = BigCount(0);
  }
  return g;
}

std::vector<BigCount> IdealLattice::forward_filtered(
    const std::function<bool(int, int)>& filter) const {
  std::vector<BigCount> f(ideals_.size());
  f[0] = BigCount(1);
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    if (f[i].is_zero()) continue;
    int t = popcount(ideals_[i]) + 1;
    for_each_bit(available(ideals_[i]), [&](int e) {
      if (filter(t, e)) f[index_.at(ideals_[i] | (Mask{1} << e))] += f[i];
    });
  }
  return f;
}

std::size_t ideal_count(const Poset& p, const Limits& lim) {
  return IdealLattice::build(p, lim).size();
}

BigCount count(const Poset& p, const Limits& lim) {
  auto lat = IdealLattice::build(p, lim);
  return lat.forward().back();
}

std::vector<BigCount> value_counts(const Poset& p, int anchor, const Limits& lim) {
  int n = p.size();
  if (anchor < 0 || anchor >= n) throw RangeError("value_counts: anchor out of range");
  auto lat = IdealLattice::build(p, lim);
  auto fwd = lat.forward();
  auto bwd = lat.backward();
  std::vector<BigCount> out(n);
  Mask abit = Mask{1} << anchor;
  const auto& ideals = lat.ideals();
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    Mask s = ideals[i];
    if (s & abit) continue;
    if ((p.below(anchor) & ~s) != 0) continue;
    int k = popcount(s) + 1;
    out[k - 1] += fwd[i] * bwd[lat.index_of(s | abit)];
  }
  return out;
}

BigCount count_with_value(const Poset& p, int anchor, int k, const Limits& lim) {
  if (k < 1 || k > p.size()) throw RangeError("count_with_value: value out of range");
  return value_counts(p, anchor, lim)[k - 1];
}

namespace {

void enumerate_rec(const Poset& p, Mask placed, std::vector<int>& f, int depth,
                   const std::function<void(const std::vector<int>&)>& visit) {
  if (depth == p.size()) {
    visit(f);
    return;
  }
  for_each_bit(available_in(p, placed), [&](int e) {
    f[e] = depth + 1;
    enumerate_rec(p, placed | (Mask{1} << e), f, depth + 1, visit);
    f[e] = 0;
  });
}

}  // namespace

void enumerate(const Poset& p, const std::function<void(const std::vector<int>&)>& visit,
               const Limits& lim) {
  if (p.size() > lim.enum_cap) throw CapExceeded("enumerate: poset above enumeration cap");
  std::vector<int> f(p.size(), 0);
  enumerate_rec(p, 0, f, 0, visit);
}

bool EventSpec::holds(const std::vector<int>& f) const {
  int n = static_cast<int>(f.size());
  if (anchor && f[anchor->first] != anchor->second) return false;
  for (const auto& fx : fixed) {
    if (f[fx.elem] != fx.value) return false;
  }
  for (const auto& m : members) {
    if (m.value < 1 || m.value > n) return false;
    int holder = -1;
    for (int e = 0; e < n; ++e) {
      if (f[e] == m.value) {
        holder = e;
        break;
      }
    }
    bool inside = holder >= 0 && ((m.set >> holder) & 1);
    if (inside == m.negated) return false;
  }
  for (const auto& mc : mins) {
    int mn = n + 1;
    for_each_bit(mc.set, [&](int e) { mn = std::min(mn, f[e]); });
    if (mc.greater ? (mn <= mc.k) : (mn != mc.k)) return false;
  }
  return true;
}

EventSpec& EventSpec::with_anchor(int a, int k) {
  anchor = {a, k};
  return *this;
}
EventSpec& EventSpec::with_value(int elem, int value) {
  fixed.push_back({elem, value});
  return *this;
}
EventSpec& EventSpec::with_member(int value, Mask set, bool negated) {
  members.push_back({value, set, negated});
  return *this;
}
EventSpec& EventSpec::with_min(Mask set, int k, bool greater) {
  mins.push_back({set, k, greater});
  return *this;
}

namespace {

// Elements pinned to specific values, in current coordinates. v1/v2 carry
// values 1 and 2 counted from the bottom, top/top2 the top two values.
struct Roles {
  int v1 = -1, v2 = -1, top = -1, top2 = -1;
  int anchor = -1;
  int k = 0;
};

BigCount reference_count(const Poset& p, const EventSpec& ev, const Limits& lim) {
  BigCount total(0);
  enumerate(p, [&](const std::vector<int>& f) {
    if (ev.holds(f)) total += BigCount(1);
  }, lim);
  return total;
}

BigCount atomic_count(const Poset& p, Roles r, const Limits& lim);

int remap(Mask removed, int elem) {
  return elem < 0 ? -1 : Poset::compact_index(removed, elem);
}

BigCount atomic_count_expand_v1(const Poset& p, Roles r, const Limits& lim) {
  // Value 1 unconstrained but value 2 pinned: split on the element taking
  // value 1 (always a minimal element).
  BigCount total(0);
  for_each_bit(p.minimals(), [&](int x) {
    if (x == r.v2 || x == r.top || x == r.top2) return;
    if (r.anchor >= 0 && x == r.anchor) return;  // k==1 handled before expansion
    Roles rr = r;
    rr.v1 = x;
    total += atomic_count(p, rr, lim);
  });
  return total;
}

BigCount atomic_count_expand_top(const Poset& p, Roles r, const Limits& lim) {
  BigCount total(0);
  for_each_bit(p.maximals(), [&](int x) {
    if (x == r.v1 || x == r.v2 || x == r.top2) return;
    if (r.anchor >= 0 && x == r.anchor) return;  // k==n handled before expansion
    Roles rr = r;
    rr.top = x;
    total += atomic_count(p, rr, lim);
  });
  return total;
}

BigCount atomic_count(const Poset& p, Roles r, const Limits& lim) {
  int n = p.size();
  if (n <= 3) {
    // Too small for the low/high roles to be disjoint; enumerate directly.
    BigCount total(0);
    enumerate(p, [&](const std::vector<int>& f) {
      if (r.v1 >= 0 && f[r.v1] != 1) return;
      if (r.v2 >= 0 && f[r.v2] != 2) return;
      if (r.top >= 0 && f[r.top] != n) return;
      if (r.top2 >= 0 && f[r.top2] != n - 1) return;
      if (r.anchor >= 0 && f[r.anchor] != r.k) return;
      total += BigCount(1);
    }, lim);
    return total;
  }

  if (r.anchor >= 0 && (r.k < 1 || r.k > n)) return BigCount(0);

  // Merge or reject the anchor against pinned roles.
  if (r.anchor >= 0) {
    if (r.anchor == r.v1) {
      if (r.k != 1) return BigCount(0);
      r.anchor = -1;
    } else if (r.anchor == r.v2) {
      if (r.k != 2) return BigCount(0);
      r.anchor = -1;
    } else if (r.anchor == r.top) {
      if (r.k != n) return BigCount(0);
      r.anchor = -1;
    } else if (r.anchor == r.top2) {
      if (r.k != n - 1) return BigCount(0);
      r.anchor = -1;
    } else {
      if (r.v1 >= 0 && r.k == 1) return BigCount(0);
      if (r.v2 >= 0 && r.k == 2) return BigCount(0);
      if (r.top >= 0 && r.k == n) return BigCount(0);
      if (r.top2 >= 0 && r.k == n - 1) return BigCount(0);
    }
  }
  // Distinct values need distinct elements (n >= 4 keeps low/high apart).
  if (r.v1 >= 0 && (r.v1 == r.v2 || r.v1 == r.top || r.v1 == r.top2)) return BigCount(0);
  if (r.v2 >= 0 && (r.v2 == r.top || r.v2 == r.top2)) return BigCount(0);
  if (r.top >= 0 && r.top == r.top2) return BigCount(0);

  if (r.v1 >= 0) {
    if (p.below(r.v1) != 0) return BigCount(0);
    Mask rm = Mask{1} << r.v1;
    Roles rr;
    rr.v1 = remap(rm, r.v2);
    rr.top = remap(rm, r.top);
    rr.top2 = remap(rm, r.top2);
    rr.anchor = remap(rm, r.anchor);
    rr.k = r.k - 1;
    return atomic_count(p.deleted(rm), rr, lim);
  }
  if (r.v2 >= 0) {
    if (r.anchor >= 0 && r.k == 1) {
      Roles rr = r;
      rr.v1 = r.anchor;
      rr.anchor = -1;
      return atomic_count(p, rr, lim);
    }
    return atomic_count_expand_v1(p, r, lim);
  }
  if (r.top >= 0) {
    if (p.above(r.top) != 0) return BigCount(0);
    Mask rm = Mask{1} << r.top;
    Roles rr;
    rr.top = remap(rm, r.top2);
    rr.anchor = remap(rm, r.anchor);
    rr.k = r.k;
    return atomic_count(p.deleted(rm), rr, lim);
  }
  if (r.top2 >= 0) {
    if (r.anchor >= 0 && r.k == n) {
      Roles rr = r;
      rr.top = r.anchor;
      rr.anchor = -1;
      return atomic_count(p, rr, lim);
    }
    return atomic_count_expand_top(p, r, lim);
  }
  if (r.anchor >= 0) return value_counts(p, r.anchor, lim)[r.k - 1];
  return count(p, lim);
}

// The surgical path handles events whose clauses pin or constrain only the
// values 1, 2, n-1, n, plus an optional anchor; or a single f_min clause.
bool fast_supported(const Poset& p, const EventSpec& ev) {
  if (!ev.mins.empty()) {
    return ev.mins.size() == 1 && ev.fixed.empty() && ev.members.empty() && !ev.anchor;
  }
  int n = p.size();
  auto ok_value = [&](int v) { return v == 1 || v == 2 || v == n || v == n - 1; };
  for (const auto& fx : ev.fixed) {
    if (!ok_value(fx.value)) return false;
  }
  for (const auto& m : ev.members) {
    if (!ok_value(m.value)) return false;
  }
  return true;
}

BigCount fmin_eq_fast(const Poset& p, Mask a, int k, const Limits& lim);
BigCount fmin_gt_fast(const Poset& p, Mask a, int k, const Limits& lim);

BigCount fast_count(const Poset& p, const EventSpec& ev, const Limits& lim) {
  int n = p.size();
  if (!ev.mins.empty()) {
    const auto& mc = ev.mins.front();
    Mask a = mc.set & p.all();
    if (a == 0) {
      // min over the empty set is +infinity: never equal, always greater.
      return mc.greater ? count(p, lim) : BigCount(0);
    }
    return mc.greater ? fmin_gt_fast(p, a, mc.k, lim) : fmin_eq_fast(p, a, mc.k, lim);
  }
  if (n < 4) return reference_count(p, ev, lim);

  // Candidate element sets per constrained value.
  constexpr int kValues = 4;  // roles: 1, 2, n-1, n
  Mask cand[kValues];
  bool constrained[kValues] = {false, false, false, false};
  std::fill(cand, cand + kValues, p.all());
  auto role_of = [&](int v) -> int {
    if (v == 1) return 0;
    if (v == 2) return 1;
    if (v == n - 1) return 2;
    return 3;  // v == n
  };
  for (const auto& fx : ev.fixed) {
    int ro = role_of(fx.value);
    cand[ro] &= Mask{1} << fx.elem;
    constrained[ro] = true;
  }
  for (const auto& m : ev.members) {
    int ro = role_of(m.value);
    cand[ro] &= m.negated ? ~m.set : m.set;
    cand[ro] &= p.all();
    constrained[ro] = true;
  }

  std::vector<int> picks[kValues];
  for (int ro = 0; ro < kValues; ++ro) {
    picks[ro] = constrained[ro] ? mask_to_list(cand[ro]) : std::vector<int>{-1};
  }
  BigCount total(0);
  for (int e1 : picks[0]) {
    for (int e2 : picks[1]) {
      if (e2 >= 0 && e2 == e1) continue;
      for (int e3 : picks[2]) {
        if (e3 >= 0 && (e3 == e1 || e3 == e2)) continue;
        for (int e4 : picks[3]) {
          if (e4 >= 0 && (e4 == e1 || e4 == e2 || e4 == e3)) continue;
          Roles r;
          r.v1 = e1;
          r.v2 = e2;
          r.top2 = e3;
          r.top = e4;
          if (ev.anchor) {
            r.anchor = ev.anchor->first;
            r.k = ev.anchor->second;
          }
          total += atomic_count(p, r, lim);
        }
      }
    }
  }
  return total;
}

BigCount fmin_eq_fast(const Poset& p, Mask a, int k, const Limits& lim) {
  int n = p.size();
  if (k < 1 || k > n) return BigCount(0);
  auto lat = IdealLattice::build(p, lim);
  auto bwd = lat.backward();
  auto fwd = lat.forward_filtered([&](int, int e) { return ((a >> e) & 1) == 0; });
  BigCount total(0);
  const auto& ideals = lat.ideals();
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    Mask s = ideals[i];
    if (popcount(s) != k - 1 || (s & a)) continue;
    if (fwd[i].is_zero()) continue;
    for_each_bit(lat.available(s) & a, [&](int e) {
      total += fwd[i] * bwd[lat.index_of(s | (Mask{1} << e))];
    });
  }
  return total;
}

BigCount fmin_gt_fast(const Poset& p, Mask a, int k, const Limits& lim) {
  int n = p.size();
  if (k <= 0) return count(p, lim);
  if (k >= n) return BigCount(0);  // a nonempty, so f_min(a) <= n
  auto lat = IdealLattice::build(p, lim);
  auto bwd = lat.backward();
  auto fwd = lat.forward_filtered([&](int t, int e) {
    return t > k || ((a >> e) & 1) == 0;
  });
  BigCount total(0);
  const auto& ideals = lat.ideals();
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    Mask s = ideals[i];
    if (popcount(s) != k || (s & a)) continue;
    total += fwd[i] * bwd[i];
  }
  return total;
}

}  // namespace

BigCount count_event(const Poset& p, const EventSpec& ev, Path path, const Limits& lim) {
  switch (path) {
    case Path::Reference:
      return reference_count(p, ev, lim);
    case Path::Fast:
      if (!fast_supported(p, ev)) return reference_count(p, ev, lim);
      return fast_count(p, ev, lim);
    case Path::Auto:
    default:
      if (fast_supported(p, ev)) return fast_count(p, ev, lim);
      return reference_count(p, ev, lim);
  }
}

BigCount fmin_count(const Poset& p, Mask a, int k, Path path, const Limits& lim) {
  EventSpec ev;
  ev.with_min(a, k);
  return count_event(p, ev, path, lim);
}

std::vector<BigCount> fmin_counts(const Poset& p, Mask a, const Limits& lim) {
  int n = p.size();
  std::vector<BigCount> out(n);
  auto lat = IdealLattice::build(p, lim);
  auto bwd = lat.backward();
  auto fwd = lat.forward_filtered([&](int, int e) { return ((a >> e) & 1) == 0; });
  const auto& ideals = lat.ideals();
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    Mask s = ideals[i];
    if (s & a) continue;
    if (fwd[i].is_zero()) continue;
    int k = popcount(s) + 1;
    for_each_bit(lat.available(s) & a, [&](int e) {
      out[k - 1] += fwd[i] * bwd[lat.index_of(s | (Mask{1} << e))];
    });
  }
  return out;
}

BigCount cross_product_count(const Poset& p, int x, int y, int z, int k, int l,
                             Path path, const Limits& lim) {
  int n = p.size();
  if (x == y || y == z || x == z) throw RangeError("cross_product_count: elements not distinct");
  if (x < 0 || x >= n || y < 0 || y >= n || z < 0 || z >= n)
    throw RangeError("cross_product_count: element out of range");
  if (k < 1 || l < 1) throw RangeError("cross_product_count: gaps must be positive");
  if (path == Path::Reference) {
    BigCount total(0);
    enumerate(p, [&](const std::vector<int>& f) {
      if (f[y] - f[x] == k && f[z] - f[y] == l) total += BigCount(1);
    }, lim);
    return total;
  }
  BigCount total(0);
  auto lat = IdealLattice::build(p, lim);
  for (int v = 1; v + k + l <= n; ++v) {
    auto fwd = lat.forward_filtered([&](int t, int e) {
      if (e == x) return t == v;
      if (e == y) return t == v + k;
      if (e == z) return t == v + k + l;
      return t != v && t != v + k && t != v + k + l;
    });
    total += fwd.back();
  }
  return total;
}

std::vector<std::vector<BigCount>> joint_value_counts(const Poset& p, int x, int y,
                                                      const Limits& lim) {
  int n = p.size();
  if (x < 0 || x >= n || y < 0 || y >= n || x == y)
    throw RangeError("joint_value_counts: bad elements");
  auto lat = IdealLattice::build(p, lim);
  std::vector<std::vector<BigCount>> grid(n, std::vector<BigCount>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      auto fwd = lat.forward_filtered([&](int t, int e) {
        if (e == x) return t == i;
        if (e == y) return t == j;
        return t != i && t != j;
      });
      grid[i - 1][j - 1] = fwd.back();
    }
  }
  return grid;
}

std::vector<std::vector<BigCount>> joint_fmin_counts(const Poset& p, Mask a, Mask b,
                                                     const Limits& lim) {
  int n = p.size();
  a &= p.all();
  b &= p.all();
  if (a == 0 || b == 0) throw RangeError("joint_fmin_counts: empty set");
  auto lat = IdealLattice::build(p, lim);
  std::vector<std::vector<BigCount>> grid(n, std::vector<BigCount>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      auto fwd = lat.forward_filtered([&](int t, int e) {
        bool in_a = (a >> e) & 1;
        bool in_b = (b >> e) & 1;
        if (in_a && t < i) return false;
        if (t == i && !in_a) return false;
        if (in_b && t < j) return false;
        if (t == j && !in_b) return false;
        return true;
      });
      grid[i - 1][j - 1] = fwd.back();
    }
  }
  return grid;
}

}  // namespace linext::counting
