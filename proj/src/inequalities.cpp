#include "linext/inequalities.hpp"

#include <algorithm>

#include "linext/errors.hpp"
#include "linext/json_io.hpp"
#include "linext/prng.hpp"
#include "linext/sequences.hpp"

namespace linext::ineq {

using counting::EventSpec;

nlohmann::json CheckParams::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  auto put = [&](const char* name, const std::optional<int>& v) {
    if (v) j[name] = *v;
  };
  put("x", x);
  put("y", y);
  put("z", z);
  put("a", a);
  put("u", u);
  put("v", v);
  put("w", w);
  if (A) j["A"] = io::mask_to_json(*A);
  if (B) j["B"] = io::mask_to_json(*B);
  if (C) j["C"] = io::mask_to_json(*C);
  put("k", k);
  put("l", l);
  return j;
}

CheckParams CheckParams::from_json(const nlohmann::json& j) {
  CheckParams p;
  auto get = [&](const char* name, std::optional<int>& v) {
    if (j.contains(name)) v = j.at(name).get<int>();
  };
  get("x", p.x);
  get("y", p.y);
  get("z", p.z);
  get("a", p.a);
  get("u", p.u);
  get("v", p.v);
  get("w", p.w);
  if (j.contains("A")) p.A = io::mask_from_json(j.at("A"));
  if (j.contains("B")) p.B = io::mask_from_json(j.at("B"));
  if (j.contains("C")) p.C = io::mask_from_json(j.at("C"));
  get("k", p.k);
  get("l", p.l);
  return p;
}

namespace {

// Enumeration-backed versions of the count kernels; the reference route the
// oracle verification insists on.
BigInt ref_count(const Poset& p, const counting::Limits& lim) {
  BigInt total(0);
  counting::enumerate(p, [&](const std::vector<int>&) { total += BigInt(1); }, lim);
  return total;
}

std::vector<BigInt> ref_value_counts(const Poset& p, int anchor, const counting::Limits& lim) {
  std::vector<BigInt> out(p.size());
  counting::enumerate(p, [&](const std::vector<int>& f) { out[f[anchor] - 1] += BigInt(1); },
                      lim);
  return out;
}

std::vector<BigInt> ref_fmin_counts(const Poset& p, Mask a, const counting::Limits& lim) {
  int n = p.size();
  std::vector<BigInt> out(n);
  counting::enumerate(p, [&](const std::vector<int>& f) {
    int mn = n + 1;
    for_each_bit(a, [&](int e) { mn = std::min(mn, f[e]); });
    if (mn <= n) out[mn - 1] += BigInt(1);
  }, lim);
  return out;
}

std::vector<std::vector<BigInt>> ref_joint_values(const Poset& p, int x, int y,
                                                  const counting::Limits& lim) {
  int n = p.size();
  std::vector<std::vector<BigInt>> grid(n, std::vector<BigInt>(n));
  counting::enumerate(p, [&](const std::vector<int>& f) {
    grid[f[x] - 1][f[y] - 1] += BigInt(1);
  }, lim);
  return grid;
}

std::vector<std::vector<BigInt>> ref_joint_fmin(const Poset& p, Mask a, Mask b,
                                                const counting::Limits& lim) {
  int n = p.size();
  std::vector<std::vector<BigInt>> grid(n, std::vector<BigInt>(n));
  counting::enumerate(p, [&](const std::vector<int>& f) {
    int ma = n + 1, mb = n + 1;
    for_each_bit(a, [&](int e) { ma = std::min(ma, f[e]); });
    for_each_bit(b, [&](int e) { mb = std::min(mb, f[e]); });
    grid[ma - 1][mb - 1] += BigInt(1);
  }, lim);
  return grid;
}

}  // namespace

Engine::Engine(const Poset& p, counting::Path path, counting::Limits lim)
    : p_(p), path_(path), lim_(lim) {}

const BigInt& Engine::total() {
  if (!total_) {
    total_ = path_ == counting::Path::Reference ? ref_count(p_, lim_)
                                                : counting::count(p_, lim_);
  }
  return *total_;
}

const BigInt& Engine::count_without(Mask removed) {
  auto it = del_.find(removed);
  if (it != del_.end()) return it->second;
  Poset q = p_.deleted(removed);
  BigInt value = path_ == counting::Path::Reference ? ref_count(q, lim_)
                                                    : counting::count(q, lim_);
  return del_.emplace(removed, std::move(value)).first->second;
}

const std::vector<BigInt>& Engine::anchored(int anchor) {
  auto it = anchored_.find(anchor);
  if (it != anchored_.end()) return it->second;
  auto value = path_ == counting::Path::Reference
                   ? ref_value_counts(p_, anchor, lim_)
                   : counting::value_counts(p_, anchor, lim_);
  return anchored_.emplace(anchor, std::move(value)).first->second;
}

const std::vector<BigInt>& Engine::anchored_without(Mask removed, int anchor) {
  auto key = std::make_pair(removed, anchor);
  auto it = anchored_del_.find(key);
  if (it != anchored_del_.end()) return it->second;
  Poset q = p_.deleted(removed);
  int a2 = Poset::compact_index(removed, anchor);
  auto value = path_ == counting::Path::Reference
                   ? ref_value_counts(q, a2, lim_)
                   : counting::value_counts(q, a2, lim_);
  return anchored_del_.emplace(key, std::move(value)).first->second;
}

BigInt Engine::event(const EventSpec& ev) { return counting::count_event(p_, ev, path_, lim_); }

const std::vector<BigInt>& Engine::fmin_dist(Mask a) {
  auto it = fmin_.find(a);
  if (it != fmin_.end()) return it->second;
  auto value = path_ == counting::Path::Reference ? ref_fmin_counts(p_, a, lim_)
                                                  : counting::fmin_counts(p_, a, lim_);
  return fmin_.emplace(a, std::move(value)).first->second;
}

const std::vector<std::vector<BigInt>>& Engine::joint_values(int x, int y) {
  auto key = std::make_pair(x, y);
  auto it = jointv_.find(key);
  if (it != jointv_.end()) return it->second;
  auto value = path_ == counting::Path::Reference
                   ? ref_joint_values(p_, x, y, lim_)
                   : counting::joint_value_counts(p_, x, y, lim_);
  return jointv_.emplace(key, std::move(value)).first->second;
}

const std::vector<std::vector<BigInt>>& Engine::joint_fmin(Mask a, Mask b) {
  auto key = std::make_pair(a, b);
  auto it = jointf_.find(key);
  if (it != jointf_.end()) return it->second;
  auto value = path_ == counting::Path::Reference
                   ? ref_joint_fmin(p_, a, b, lim_)
                   : counting::joint_fmin_counts(p_, a, b, lim_);
  return jointf_.emplace(key, std::move(value)).first->second;
}

const atlas::AtlasMatrix& Engine::atlas_matrix(int anchor, int k) {
  auto key = std::make_pair(anchor, k);
  auto it = atlas_.find(key);
  if (it != atlas_.end()) return it->second;
  return atlas_.emplace(key, atlas::build_atlas(p_, anchor, k, path_, lim_)).first->second;
}

BigInt Engine::cross(int x, int y, int z, int k, int l) {
  return counting::cross_product_count(p_, x, y, z, k, l, path_, lim_);
}

const std::vector<Mask>& Engine::upper_ideals() {
  if (!upsets_) {
    auto lat = counting::IdealLattice::build(p_.dual(), lim_);
    upsets_ = lat.ideals();  // downsets of the dual are the upsets of p
    std::sort(upsets_->begin(), upsets_->end());
  }
  return *upsets_;
}

namespace {

int require(const std::optional<int>& v, const char* what) {
  if (!v) throw PreconditionViolated(std::string("missing parameter ") + what);
  return *v;
}

Mask require_mask(const std::optional<Mask>& v, const char* what) {
  if (!v) throw PreconditionViolated(std::string("missing parameter ") + what);
  return *v;
}

void need(bool cond, const char* what) {
  if (!cond) throw PreconditionViolated(what);
}

nlohmann::json witness_for(Engine& e, const std::string& id, const CheckParams& params) {
  nlohmann::json w;
  w["poset"] = io::poset_to_json(e.poset());
  w["params"] = params.to_json();
  (void)id;
  return w;
}

Verdict verdict_cmp(const std::string& id, Rat lhs, Rat rhs, bool le, nlohmann::json witness) {
  Verdict v;
  v.check_id = id;
  v.relation = le ? "<=" : ">=";
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  v.status = status_of(v.lhs, v.rhs, le);
  v.witness = std::move(witness);
  return v;
}

Verdict verdict_vacuous(const std::string& id, nlohmann::json witness, const char* relation = "<=") {
  Verdict v;
  v.check_id = id;
  v.relation = relation;
  v.status = Status::Vacuous;
  v.witness = std::move(witness);
  return v;
}

// Sandwich lo <= value <= hi; `strict_hi` makes equality at the top a
// failure.
Verdict verdict_sandwich(const std::string& id, Rat value, Rat lo, Rat hi, bool strict_hi,
                         nlohmann::json witness) {
  Verdict v;
  v.check_id = id;
  v.relation = "sandwich";
  v.lhs = std::move(value);
  v.rhs = hi;
  v.witness = std::move(witness);
  v.witness["lo"] = lo.to_string();
  v.witness["hi"] = hi.to_string();
  auto clo = v.lhs <=> lo;
  auto chi = v.lhs <=> v.rhs;
  if (clo < 0 || chi > 0 || (strict_hi && chi == 0)) {
    v.status = Status::Fails;
  } else if (clo == 0 || chi == 0) {
    v.status = Status::Equality;
  } else {
    v.status = Status::Holds;
  }
  return v;
}

EventSpec member_event(std::initializer_list<EventSpec::Member> members,
                       std::optional<std::pair<int, int>> anchor = std::nullopt) {
  EventSpec ev;
  for (const auto& m : members) ev.members.push_back(m);
  if (anchor) ev.anchor = anchor;
  return ev;
}

// ---- individual evaluators ----------------------------------------------

Verdict eval_corr_del(Engine& e, const CheckParams& ps, bool lower) {
  const Poset& p = e.poset();
  int n = p.size();
  int x = require(ps.x, "x"), y = require(ps.y, "y");
  need(n > 2, "corr-del: need n > 2");
  need(x != y, "corr-del: x and y must be distinct");
  Mask mins = p.minimals();
  need(((mins >> x) & 1) && ((mins >> y) & 1), "corr-del: x, y must be minimal");
  Mask xy = (Mask{1} << x) | (Mask{1} << y);
  Rat ratio(e.total() * e.count_without(xy),
            e.count_without(Mask{1} << x) * e.count_without(Mask{1} << y));
  auto w = witness_for(e, "", ps);
  if (lower)
    return verdict_cmp("corr-del-lower", std::move(ratio), Rat(n, n - 1), false, std::move(w));
  return verdict_cmp("corr-del-upper", std::move(ratio), Rat(2), true, std::move(w));
}

Verdict eval_corr_del_strong(Engine& e, const CheckParams& ps) {
  const Poset& p = e.poset();
  int n = p.size();
  int a = require(ps.a, "a"), x = require(ps.x, "x"), y = require(ps.y, "y");
  int k = require(ps.k, "k");
  need(n > 2, "corr-del-strong: need n > 2");
  need(k >= 1 && k <= n - 2, "corr-del-strong: need 1 <= k <= n-2");
  need(x != y && x != a && y != a, "corr-del-strong: elements must be distinct");
  Mask abit = Mask{1} << a;
  Poset rest = p.deleted(abit);
  Mask rest_mins = rest.minimals();
  need((rest_mins >> Poset::compact_index(abit, x)) & 1, "corr-del-strong: x not minimal in P-a");
  need((rest_mins >> Poset::compact_index(abit, y)) & 1, "corr-del-strong: y not minimal in P-a");
  Mask mx = Mask{1} << x, my = Mask{1} << y;
  const BigInt& ek = e.anchored(a)[k - 1];
  const BigInt& ek_xy = e.anchored_without(mx | my, a)[k - 1];
  const BigInt& ek_x = e.anchored_without(mx, a)[k - 1];
  const BigInt& ek_y = e.anchored_without(my, a)[k - 1];
  return verdict_cmp("corr-del-strong", Rat(ek * ek_xy), Rat(BigInt(2) * ek_x * ek_y), true,
                     witness_for(e, "", ps));
}

BigInt anchored_sum(Engine& e, int x, int power) {
  const auto& ek = e.anchored(x);
  BigInt s(0);
  for (int k = 1; k <= e.poset().size(); ++k) {
    long long w = power == 2 ? 1LL * k * k : k;
    s += BigInt(w) * ek[k - 1];
  }
  return s;
}

Verdict eval_cov_upper(Engine& e, const CheckParams& ps) {
  const Poset& p = e.poset();
  int n = p.size();
  int x = require(ps.x, "x"), y = require(ps.y, "y");
  BigInt sx = anchored_sum(e, x, 1);
  BigInt sy = x == y ? sx : anchored_sum(e, y, 1);
  BigInt sxy(0), smin(0);
  if (x == y) {
    sxy = anchored_sum(e, x, 2);
    smin = sx;
  } else {
    const auto& grid = e.joint_values(x, y);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const BigInt& c = grid[i - 1][j - 1];
        if (c.is_zero()) continue;
        sxy += BigInt(1LL * i * j) * c;
        smin += BigInt(std::min(i, j)) * c;
      }
    }
  }
  Rat lhs(e.total() * (sxy + smin), sx * sy);
  return verdict_cmp("cov-upper", std::move(lhs), Rat(2), true, witness_for(e, "", ps));
}

Verdict eval_stanley(Engine& e, const CheckParams& ps, const std::string& id, bool reversed) {
  int n = e.poset().size();
  int x = require(ps.x, "x"), k = require(ps.k, "k");
  need(k >= 2 && k <= n - 1, "stanley: need 2 <= k <= n-1");
  const auto& ek = e.anchored(x);
  Rat lhs(ek[k - 1] * ek[k - 1]);
  Rat rhs(ek[k - 2] * ek[k]);
  return verdict_cmp(id, std::move(lhs), std::move(rhs), reversed, witness_for(e, "", ps));
}

Verdict eval_stanley_cdf(Engine& e, const CheckParams& ps) {
  int n = e.poset().size();
  int x = require(ps.x, "x"), k = require(ps.k, "k");
  need(k >= 1 && k <= n - 1, "stanley-cdf: need 1 <= k <= n-1");
  const auto& ek = e.anchored(x);
  auto tail = [&](int j) {  // |{f(x) > j}|
    BigInt s(0);
    for (int v = j + 1; v <= n; ++v) s += ek[v - 1];
    return s;
  };
  BigInt ck = tail(k);
  return verdict_cmp("stanley-cdf", Rat(ck * ck), Rat(tail(k - 1) * tail(k + 1)), false,
                     witness_for(e, "", ps));
}

Verdict eval_stanley_first2(Engine& e, const CheckParams& ps) {
  int n = e.poset().size();
  int x = require(ps.x, "x");
  need(n >= 1, "stanley-first2: empty poset");
  const auto& ek = e.anchored(x);
  BigInt above1 = e.total() - ek[0];
  BigInt e2 = n >= 2 ? ek[1] : BigInt(0);
  return verdict_cmp("stanley-first2", Rat(ek[0] * above1), Rat(e2 * e.total()), true,
                     witness_for(e, "", ps));
}

Verdict eval_ext_stanley(Engine& e, const CheckParams& ps) {
  int n = e.poset().size();
  Mask a = require_mask(ps.A, "A") & e.poset().all();
  int k = require(ps.k, "k");
  need(a != 0, "ext-stanley-conj: A must be nonempty");
  need(k >= 2 && k <= n - 1, "ext-stanley-conj: need 2 <= k <= n-1");
  const auto& d = e.fmin_dist(a);
  return verdict_cmp("ext-stanley-conj", Rat(d[k - 1] * d[k - 1]), Rat(d[k - 2] * d[k]), false,
                     witness_for(e, "", ps));
}

Verdict eval_subset_ext(Engine& e, const CheckParams& ps, int which) {
  const Poset& p = e.poset();
  Mask a = require_mask(ps.A, "A") & p.all();
  need(a != 0, "subset check: A must be nonempty");
  need(p.size() >= 2, "subset check: need n >= 2");
  BigInt not1 = e.event(member_event({{1, a, true}}));
  if (which == 1) {
    BigInt not12 = e.event(member_event({{1, a, true}, {2, a, true}}));
    return verdict_cmp("subset-ext1", Rat(not1 * not1), Rat(not12 * e.total()), false,
                       witness_for(e, "", ps));
  }
  BigInt in1 = e.total() - not1;
  BigInt swap2 = e.event(member_event({{1, a, true}, {2, a, false}}));
  return verdict_cmp("subset-ext2", Rat(in1 * not1), Rat(swap2 * e.total()), true,
                     witness_for(e, "", ps));
}

Verdict eval_subset_two(Engine& e, const CheckParams& ps) {
  const Poset& p = e.poset();
  Mask a = require_mask(ps.A, "A") & p.all();
  need(a != 0, "subset-two: A must be nonempty");
  need(p.size() >= 2, "subset-two: need n >= 2");
  BigInt mixed = e.event(member_event({{1, a, false}, {2, a, true}}));
  BigInt both = e.event(member_event({{1, a, false}, {2, a, false}}));
  BigInt neither = e.event(member_event({{1, a, true}, {2, a, true}}));
  return verdict_cmp("subset-two", Rat(mixed * mixed), Rat(both * neither), false,
                     witness_for(e, "", ps));
}

BigInt fmin_sum(Engine& e, Mask a) {
  const auto& d = e.fmin_dist(a);
  BigInt s(0);
  for (int k = 1; k <= e.poset().size(); ++k) s += BigInt(k) * d[k - 1];
  return s;
}

Verdict eval_multi_cov(Engine& e, const CheckParams& ps) {
  const Poset& p = e.poset();
  int n = p.size();
  Mask a = require_mask(ps.A, "A") & p.all();
  Mask b = require_mask(ps.B, "B") & p.all();
  need(a != 0 && b != 0, "multi-cov: subsets must be nonempty");
  const auto& grid = e.joint_fmin(a, b);
  BigInt sab(0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const BigInt& c = grid[i - 1][j - 1];
      if (!c.is_zero()) sab += BigInt(1LL * i * j) * c;
    }
  }
  BigInt su = fmin_sum(e, a | b);
  BigInt sa = fmin_sum(e, a);
  BigInt sb = fmin_sum(e, b);
  return verdict_cmp("multi-cov", Rat(e.total() * (sab + su), sa * sb), Rat(2), true,
                     witness_for(e, "", ps));
}

Verdict eval_disjoint_lc(Engine& e, const CheckParams& ps) {
  const Poset& p = e.poset();
  Mask a = require_mask(ps.A, "A"), b = require_mask(ps.B, "B");
  Mask mins = p.minimals();
  need(a != 0 && b != 0, "disjoint-lc: subsets must be nonempty");
  need((a & b) == 0, "disjoint-lc: subsets must be disjoint");
  need((a | b) == ((a | b) & mins), "disjoint-lc: subsets must be minimal elements");
  BigInt nab = e.event(member_event({{1, a, false}, {2, b, false}}));
  BigInt na = e.event(member_event({{1, a, false}, {2, p.up_closure(a), false}}));
  BigInt nb = e.event(member_event({{1, b, false}, {2, p.up_closure(b), false}}));
  return verdict_cmp("disjoint-lc", Rat(nab * nab), Rat(na * nb), false, witness_for(e, "", ps));
}

struct ThreeCounts {
  BigInt self_c, ab, ac, bc;
};

ThreeCounts three_counts(Engine& e, Mask a, Mask b, Mask c) {
  const Poset& p = e.poset();
  ThreeCounts t;
  t.self_c = e.event(member_event({{1, c, false}, {2, p.up_closure(c), false}}));
  t.ab = e.event(member_event({{1, a, false}, {2, b, false}}));
  t.ac = e.event(member_event({{1, a, false}, {2, c, false}}));
  t.bc = e.event(member_event({{1, b, false}, {2, c, false}}));
  return t;
}

void need_disjoint_minimal_triple(const Poset& p, Mask a, Mask b, Mask c) {
  need(a != 0 && b != 0 && c != 0, "three-subset check: subsets must be nonempty");
  need((a & b) == 0 && (a & c) == 0 && (b & c) == 0, "three-subset check: subsets must be disjoint");
  Mask mins = p.minimals();
  need(((a | b | c) & ~mins) == 0, "three-subset check: subsets must be minimal elements");
}

Verdict eval_three_half(Engine& e, const CheckParams& ps) {
  const Poset& p = e.poset();
  Mask a = require_mask(ps.A, "A"), b = require_mask(ps.B, "B"), c = require_mask(ps.C, "C");
  need_disjoint_minimal_triple(p, a, b, c);
  ThreeCounts t = three_counts(e, a, b, c);
  auto w = witness_for(e, "", ps);
  BigInt den = t.ac * t.bc;
  if (den.is_zero()) return verdict_vacuous("three-half", std::move(w));
  return verdict_cmp("three-half", Rat(t.self_c * t.ab, den), Rat(2), true, std::move(w));
}

Verdict eval_three_perm(Engine& e, const CheckParams& ps) {
  const Poset& p = e.poset();
  Mask a = require_mask(ps.A, "A"), b = require_mask(ps.B, "B"), c = require_mask(ps.C, "C");
  need_disjoint_minimal_triple(p, a, b, c);
  auto w = witness_for(e, "", ps);
  std::optional<Rat> best;
  nlohmann::json satisfied = nlohmann::json::array();
  const char* names[3] = {"C", "A", "B"};
  Mask pivots[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
  for (int i = 0; i < 3; ++i) {
    ThreeCounts t = three_counts(e, pivots[i][0], pivots[i][1], pivots[i][2]);
    BigInt den = t.ac * t.bc;
    if (den.is_zero()) continue;
    Rat ratio(t.self_c * t.ab, den);
    if (ratio <= Rat(1)) satisfied.push_back(names[i]);
    if (!best || ratio < *best) best = ratio;
  }
  w["satisfied_pivots"] = satisfied;
  if (!best) return verdict_vacuous("three-perm", std::move(w));
  return verdict_cmp("three-perm", *best, Rat(1), true, std::move(w));
}

Verdict eval_second_moment(Engine& e, const CheckParams& ps) {
  int x = require(ps.x, "x");
  BigInt s1 = anchored_sum(e, x, 1);
  BigInt s2 = anchored_sum(e, x, 2);
  return verdict_sandwich("second-moment", Rat(e.total() * s2, s1 * s1), Rat(1), Rat(2),
                          /*strict_hi=*/true, witness_for(e, "", ps));
}

Verdict eval_unique_cover_lc(Engine& e, const CheckParams& ps) {
  const Poset& p = e.poset();
  int x = require(ps.x, "x"), y = require(ps.y, "y");
  int v = require(ps.v, "v"), w_ = require(ps.w, "w");
  need(x != y, "unique-cover-lc: x and y must be distinct");
  Mask mins = p.minimals();
  need(((mins >> x) & 1) && ((mins >> y) & 1), "unique-cover-lc: x, y must be minimal");
  need((p.unique_covers(x) >> v) & 1, "unique-cover-lc: v must be a unique cover of x");
  need((p.unique_covers(y) >> w_) & 1, "unique-cover-lc: w must be a unique cover of y");
  BigInt exy = e.count_without((Mask{1} << x) | (Mask{1} << y));
  BigInt exv = e.count_without((Mask{1} << x) | (Mask{1} << v));
  BigInt eyw = e.count_without((Mask{1} << y) | (Mask{1} << w_));
  return verdict_cmp("unique-cover-lc", Rat(exy * exy), Rat(exv * eyw), false,
                     witness_for(e, "", ps));
}

Verdict eval_unique_cover_three(Engine& e, const CheckParams& ps) {
  const Poset& p = e.poset();
  int x = require(ps.x, "x"), y = require(ps.y, "y"), z = require(ps.z, "z");
  int u = require(ps.u, "u");
  need(x != y && x != z && y != z, "unique-cover-three: elements must be distinct");
  Mask mins = p.minimals();
  need(((mins >> x) & 1) && ((mins >> y) & 1) && ((mins >> z) & 1),
       "unique-cover-three: x, y, z must be minimal");
  need((p.unique_covers(z) >> u) & 1, "unique-cover-three: u must be a unique cover of z");
  BigInt euz = e.count_without((Mask{1} << u) | (Mask{1} << z));
  BigInt exy = e.count_without((Mask{1} << x) | (Mask{1} << y));
  BigInt exz = e.count_without((Mask{1} << x) | (Mask{1} << z));
  BigInt eyz = e.count_without((Mask{1} << y) | (Mask{1} << z));
  return verdict_cmp("unique-cover-three", Rat(euz * exy), Rat(BigInt(2) * exz * eyz), true,
                     witness_for(e, "", ps));
}

Verdict eval_fishburn(Engine& e, const CheckParams& ps) {
  const Poset& p = e.poset();
  Mask a = require_mask(ps.A, "A") & p.all();
  Mask b = require_mask(ps.B, "B") & p.all();
  need(p.up_closure(a) == a, "fishburn: A must be an upper ideal");
  need(p.up_closure(b) == b, "fishburn: B must be an upper ideal");
  auto e_of = [&](Mask s) { return e.count_without(p.all() & ~s); };
  BigInt eu = e_of(a | b), ei = e_of(a & b), ea = e_of(a), eb = e_of(b);
  auto fact = [&](Mask s) { return sequences::factorial(popcount(s)); };
  Rat lhs(fact(a | b) * fact(a & b), fact(a) * fact(b));
  Rat rhs(eu * ei, ea * eb);
  return verdict_cmp("fishburn", std::move(lhs), std::move(rhs), true, witness_for(e, "", ps));
}

Verdict eval_winkler(Engine& e, const CheckParams& ps) {
  const Poset& p = e.poset();
  int x = require(ps.x, "x"), y = require(ps.y, "y");
  need(x != y && !p.comparable(x, y), "winkler: x and y must be incomparable");
  const auto& grid = e.joint_values(x, y);
  int n = p.size();
  BigInt cond_total(0), cond_sum(0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      cond_total += grid[i - 1][j - 1];
      cond_sum += BigInt(i) * grid[i - 1][j - 1];
    }
  }
  auto w = witness_for(e, "", ps);
  if (cond_total.is_zero()) return verdict_vacuous("winkler", std::move(w));
  BigInt sx = anchored_sum(e, x, 1);
  // E[f(x)] <= E[f(x) | f(x) > f(y)], cross-multiplied.
  return verdict_cmp("winkler", Rat(sx * cond_total), Rat(cond_sum * e.total()), true,
                     std::move(w));
}

Verdict eval_cpc(Engine& e, const CheckParams& ps) {
  int x = require(ps.x, "x"), y = require(ps.y, "y"), z = require(ps.z, "z");
  int k = require(ps.k, "k"), l = require(ps.l, "l");
  need(k >= 1 && l >= 1, "cpc-conj: need k, l >= 1");
  BigInt f_kl = e.cross(x, y, z, k, l);
  BigInt f_k1l1 = e.cross(x, y, z, k + 1, l + 1);
  BigInt f_k1l = e.cross(x, y, z, k + 1, l);
  BigInt f_kl1 = e.cross(x, y, z, k, l + 1);
  return verdict_cmp("cpc-conj", Rat(f_kl * f_k1l1), Rat(f_k1l * f_kl1), true,
                     witness_for(e, "", ps));
}

Verdict eval_reverse(Engine& e, const CheckParams& ps, bool upper) {
  const Poset& p = e.poset();
  int n = p.size();
  int x = require(ps.x, "x"), y = require(ps.y, "y");
  need(n >= 2, "reverse: need n >= 2");
  need(x != y, "reverse: x and y must be distinct");
  need((p.minimals() >> x) & 1, "reverse: x must be minimal");
  need((p.maximals() >> y) & 1, "reverse: y must be maximal");
  Mask xy = (Mask{1} << x) | (Mask{1} << y);
  Rat ratio(e.total() * e.count_without(xy),
            e.count_without(Mask{1} << x) * e.count_without(Mask{1} << y));
  auto w = witness_for(e, "", ps);
  if (upper)
    return verdict_cmp("reverse-upper", std::move(ratio), Rat(n, n - 1), true, std::move(w));
  return verdict_cmp("reverse-conj", std::move(ratio), Rat(1, 2), false, std::move(w));
}

Verdict eval_log_petrov(Engine& e, const CheckParams& ps) {
  int x = require(ps.x, "x");
  BigInt s1 = anchored_sum(e, x, 1);
  BigInt s2 = anchored_sum(e, x, 2);
  return verdict_cmp("log-petrov", Rat(e.total() * s2), Rat(BigInt(2) * s1 * s1), true,
                     witness_for(e, "", ps));
}

Verdict eval_lemma_nform_cdf(Engine& e, const CheckParams& ps) {
  const Poset& p = e.poset();
  int n = p.size();
  int a = require(ps.a, "a"), k = require(ps.k, "k");
  Mask set = require_mask(ps.A, "A") & p.all();
  need(n >= 3, "lemma-nform-cdf: need n >= 3");
  need(k >= 3 && k <= n, "lemma-nform-cdf: need 3 <= k <= n");
  need(set != 0 && ((set >> a) & 1) == 0, "lemma-nform-cdf: A must be nonempty within X-a");
  auto anchored = std::make_pair(a, k);
  BigInt mixed = e.event(member_event({{1, set, true}, {2, set, false}}, anchored));
  BigInt closure = e.event(member_event({{1, set, false}, {2, p.up_closure(set), false}}, anchored));
  BigInt neither = e.event(member_event({{1, set, true}, {2, set, true}}, anchored));
  return verdict_cmp("lemma-nform-cdf", Rat(mixed * mixed), Rat(closure * neither), false,
                     witness_for(e, "", ps));
}

Verdict eval_lemma_yinyang(Engine& e, const CheckParams& ps) {
  const Poset& p = e.poset();
  int n = p.size();
  int a = require(ps.a, "a"), k = require(ps.k, "k");
  Mask set = require_mask(ps.A, "A") & p.all();
  need(n >= 3, "lemma-yinyang: need n >= 3");
  need(k >= 3 && k <= n, "lemma-yinyang: need 3 <= k <= n");
  need(set != 0 && ((set >> a) & 1) == 0, "lemma-yinyang: A must be nonempty within X-a");
  auto anchored = std::make_pair(a, k);
  BigInt in1 = e.event(member_event({{1, set, false}}, anchored));
  BigInt closure = e.event(member_event({{1, set, false}, {2, p.up_closure(set), false}}, anchored));
  const BigInt& ek = e.anchored(a)[k - 1];
  return verdict_cmp("lemma-yinyang", Rat(in1 * in1), Rat(closure * ek), false,
                     witness_for(e, "", ps));
}

Verdict eval_lemma_interpret(Engine& e, const CheckParams& ps) {
  const Poset& p = e.poset();
  int n = p.size();
  int a = require(ps.a, "a"), k = require(ps.k, "k");
  Mask sets[3] = {require_mask(ps.A, "A"), require_mask(ps.B, "B"), require_mask(ps.C, "C")};
  need(n >= 3, "lemma-interpret: need n >= 3");
  need(k >= 2 && k <= n - 1, "lemma-interpret: need 2 <= k <= n-1");
  Mask abit = Mask{1} << a;
  Poset rest = p.deleted(abit);
  Mask rest_mins = 0;
  for_each_bit(p.all() & ~abit, [&](int v) {
    if (rest.below(Poset::compact_index(abit, v)) == 0) rest_mins |= Mask{1} << v;
  });
  need((sets[0] | sets[1] | sets[2]) == ((sets[0] | sets[1] | sets[2]) & rest_mins),
       "lemma-interpret: subsets must be minimal in P-a");
  need(sets[0] && sets[1] && sets[2], "lemma-interpret: subsets must be nonempty");
  need((sets[0] & sets[1]) == 0 && (sets[0] & sets[2]) == 0 && (sets[1] & sets[2]) == 0,
       "lemma-interpret: subsets must be disjoint");
  const auto& am = e.atlas_matrix(a, k);
  std::vector<BigInt> chi[3] = {atlas::indicator_down(am, sets[0]),
                                atlas::indicator_down(am, sets[1]),
                                atlas::indicator_down(am, sets[2])};
  int matches = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      BigInt got = atlas::bilinear(am.m, chi[i], chi[j]);
      EventSpec ev;
      ev.with_anchor(a, k + 1).with_member(1, sets[i]);
      ev.with_member(2, i == j ? p.up_closure(sets[i]) : sets[j]);
      if (got == e.event(ev)) ++matches;
    }
  }
  Verdict v;
  v.check_id = "lemma-interpret";
  v.relation = "eq";
  v.lhs = Rat(matches);
  v.rhs = Rat(9);
  v.status = matches == 9 ? Status::Equality : Status::Fails;
  v.witness = witness_for(e, "", ps);
  return v;
}

Verdict eval_bruhat_bounds(Engine& e, const CheckParams& ps) {
  const Poset& p = e.poset();
  int n = p.size();
  int x = require(ps.x, "x"), y = require(ps.y, "y");
  need(n > 2, "bruhat-bounds: need n > 2");
  need(x != y, "bruhat-bounds: x and y must be distinct");
  Mask mins = p.minimals();
  need(((mins >> x) & 1) && ((mins >> y) & 1), "bruhat-bounds: x, y must be minimal");
  // Pr[f(x)=1, f(y)=2] / (Pr[f(x)=1] Pr[f(y)=1]) as deletion counts.
  Mask xy = (Mask{1} << x) | (Mask{1} << y);
  Rat ratio(e.total() * e.count_without(xy),
            e.count_without(Mask{1} << x) * e.count_without(Mask{1} << y));
  return verdict_sandwich("bruhat-bounds", std::move(ratio), Rat(n, n - 1), Rat(2),
                          /*strict_hi=*/false, witness_for(e, "", ps));
}

Verdict eval_demo_anti_stanley(Engine& e, const CheckParams& ps) {
  // Deliberately false statement used to exercise the discovery pipeline.
  Verdict v = eval_stanley(e, ps, "demo-anti-stanley", true);
  v.check_id = "demo-anti-stanley";
  return v;
}

// ---- registry -------------------------------------------------------------

struct CheckDef {
  CheckInfo info;
  Verdict (*eval)(Engine&, const CheckParams&);
};

Verdict eval_corr_del_lower(Engine& e, const CheckParams& ps) { return eval_corr_del(e, ps, true); }
Verdict eval_corr_del_upper(Engine& e, const CheckParams& ps) { return eval_corr_del(e, ps, false); }
Verdict eval_stanley_plain(Engine& e, const CheckParams& ps) {
  return eval_stanley(e, ps, "stanley", false);
}
Verdict eval_subset_ext1(Engine& e, const CheckParams& ps) { return eval_subset_ext(e, ps, 1); }
Verdict eval_subset_ext2(Engine& e, const CheckParams& ps) { return eval_subset_ext(e, ps, 2); }
Verdict eval_reverse_upper(Engine& e, const CheckParams& ps) { return eval_reverse(e, ps, true); }
Verdict eval_reverse_conj(Engine& e, const CheckParams& ps) { return eval_reverse(e, ps, false); }

const std::vector<CheckDef>& defs() {
  static const std::vector<CheckDef> table = {
      {{"corr-del-lower", false, false,
        "n/(n-1) <= e(P) e(P-x-y) / (e(P-x) e(P-y)) for distinct minimal x, y"},
       eval_corr_del_lower},
      {{"corr-del-upper", false, false,
        "e(P) e(P-x-y) / (e(P-x) e(P-y)) <= 2 for distinct minimal x, y"},
       eval_corr_del_upper},
      {{"corr-del-strong", false, false,
        "e_k(P) e_k(P-x-y) <= 2 e_k(P-x) e_k(P-y), anchor a, x, y minimal in P-a"},
       eval_corr_del_strong},
      {{"cov-upper", false, false,
        "(E[f(x)f(y)] + E[min(f(x),f(y))]) / (E[f(x)] E[f(y)]) <= 2"},
       eval_cov_upper},
      {{"stanley", false, false, "e_k(P)^2 >= e_{k-1}(P) e_{k+1}(P)"}, eval_stanley_plain},
      {{"stanley-cdf", false, false, "Pr[f(x)>k]^2 >= Pr[f(x)>k-1] Pr[f(x)>k+1]"},
       eval_stanley_cdf},
      {{"stanley-first2", false, false, "Pr[f(x)=1] Pr[f(x)>1] <= Pr[f(x)=2]"},
       eval_stanley_first2},
      {{"ext-stanley-conj", true, false,
        "Pr[f_min(A)=k]^2 >= Pr[f_min(A)=k-1] Pr[f_min(A)=k+1]"},
       eval_ext_stanley},
      {{"subset-ext1", false, false, "Pr[1 not in f(A)]^2 >= Pr[1,2 not in f(A)]"},
       eval_subset_ext1},
      {{"subset-ext2", false, false,
        "Pr[1 in f(A)] Pr[1 not in f(A)] <= Pr[1 not in f(A), 2 in f(A)]"},
       eval_subset_ext2},
      {{"subset-two", false, false,
        "Pr[1 in f(A), 2 not in f(A)]^2 >= Pr[1,2 in f(A)] Pr[1,2 not in f(A)]"},
       eval_subset_two},
      {{"multi-cov", false, false,
        "(E[f_min(A) f_min(B)] + E[f_min(A u B)]) / (E[f_min(A)] E[f_min(B)]) <= 2"},
       eval_multi_cov},
      {{"disjoint-lc", false, false,
        "Pr[1 in f(A), 2 in f(B)]^2 >= Pr[1 in f(A), 2 in f(A^)] Pr[1 in f(B), 2 in f(B^)]"},
       eval_disjoint_lc},
      {{"three-half", false, false,
        "Pr[1 in f(C), 2 in f(C^)] Pr[1 in f(A), 2 in f(B)] over the cross terms <= 2"},
       eval_three_half},
      {{"three-perm", false, false,
        "some pivot among A, B, C brings the three-subset ratio down to 1"},
       eval_three_perm},
      {{"second-moment", false, false, "1 <= E[f(x)^2] / E[f(x)]^2 < 2"}, eval_second_moment},
      {{"unique-cover-lc", false, false,
        "e(P-x-y)^2 >= e(P-x-v) e(P-y-w) for unique covers v of x, w of y"},
       eval_unique_cover_lc},
      {{"unique-cover-three", false, false,
        "e(P-u-z) e(P-x-y) <= 2 e(P-x-z) e(P-y-z) for a unique cover u of z"},
       eval_unique_cover_three},
      {{"fishburn", false, false,
        "|AuB|! |AnB|! / (|A|! |B|!) <= e(AuB) e(AnB) / (e(A) e(B)) for upper ideals"},
       eval_fishburn},
      {{"winkler", false, false, "E[f(x)] <= E[f(x) | f(x) > f(y)] for incomparable x, y"},
       eval_winkler},
      {{"cpc-conj", true, false, "F(k,l) F(k+1,l+1) <= F(k+1,l) F(k,l+1)"}, eval_cpc},
      {{"reverse-upper", false, false,
        "e(P) e(P-x-y) / (e(P-x) e(P-y)) <= n/(n-1) for x minimal, y maximal"},
       eval_reverse_upper},
      {{"reverse-conj", true, false,
        "e(P) e(P-x-y) / (e(P-x) e(P-y)) >= 1/2 for x minimal, y maximal"},
       eval_reverse_conj},
      {{"log-petrov", false, false, "E[f(x)^2] <= 2 E[f(x)]^2"}, eval_log_petrov},
      {{"lemma-nform-cdf", false, false,
        "N_k(1 not in f(A), 2 in f(A))^2 >= N_k(1 in f(A), 2 in f(A^)) N_k(1,2 not in f(A))"},
       eval_lemma_nform_cdf},
      {{"lemma-yinyang", false, false,
        "N_k(1 in f(A))^2 >= N_k(1 in f(A), 2 in f(A^)) e_k(P)"},
       eval_lemma_yinyang},
      {{"lemma-interpret", false, false,
        "pairings of the anchored matrix match the counted events"},
       eval_lemma_interpret},
      {{"bruhat-bounds", false, false,
        "n/(n-1) <= Pr[f(x)=1, f(y)=2] / (Pr[f(x)=1] Pr[f(y)=1]) <= 2"},
       eval_bruhat_bounds},
      {{"demo-anti-stanley", true, true,
        "e_k(P)^2 <= e_{k-1}(P) e_{k+1}(P) (deliberately false; harness demo)"},
       eval_demo_anti_stanley},
  };
  return table;
}

const CheckDef& find_def(const std::string& id) {
  for (const auto& def : defs()) {
    if (def.info.id == id) return def;
  }
  throw UnknownCheck("unknown check id: " + id);
}

}  // namespace

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& def : defs()) out.push_back(def.info);
    return out;
  }();
  return infos;
}

const CheckInfo& check_info(const std::string& id) { return find_def(id).info; }

Verdict check(Engine& eng, const std::string& id, const CheckParams& params) {
  return find_def(id).eval(eng, params);
}

Verdict check(const std::string& id, const Poset& p, const CheckParams& params,
              counting::Path path) {
  Engine eng(p, path);
  return check(eng, id, params);
}

// ---- binding enumeration ---------------------------------------------------

namespace {

std::vector<Mask> nonempty_subsets(Mask universe) {
  std::vector<Mask> out;
  for (Mask s = universe; s != 0; s = (s - 1) & universe) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> sweep_subsets(const Poset& p, Mask universe, const SweepLimits& lim,
                                std::uint64_t salt) {
  if (universe == 0) return {};
  if (p.size() <= lim.exhaustive_subset_max_n) return nonempty_subsets(universe);
  // Larger posets: a deterministic seeded sample of distinct subsets.
  SplitMix64 rng(lim.seed ^ salt);
  std::vector<Mask> out;
  int attempts = lim.random_subsets * 4;
  while (static_cast<int>(out.size()) < lim.random_subsets && attempts-- > 0) {
    Mask s = rng.next() & universe;
    if (s) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

using Emit = std::function<void(const CheckParams&)>;

void bind_minimal_pairs(const Poset& p, const Emit& emit, bool need_n3) {
  int n = p.size();
  if (need_n3 && n <= 2) return;
  auto mins = mask_to_list(p.minimals());
  for (std::size_t i = 0; i < mins.size(); ++i) {
    for (std::size_t j = i + 1; j < mins.size(); ++j) {
      CheckParams ps;
      ps.x = mins[i];
      ps.y = mins[j];
      emit(ps);
    }
  }
}

void bind_element_k(const Poset& p, const Emit& emit, int klo_off, int khi_off) {
  int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int k = klo_off; k <= n - khi_off; ++k) {
      CheckParams ps;
      ps.x = x;
      ps.k = k;
      emit(ps);
    }
  }
}

void bind_elements(const Poset& p, const Emit& emit) {
  for (int x = 0; x < p.size(); ++x) {
    CheckParams ps;
    ps.x = x;
    emit(ps);
  }
}

void bind_corr_del_strong(const Poset& p, const Emit& emit) {
  int n = p.size();
  if (n <= 2) return;
  for (int a = 0; a < n; ++a) {
    Mask abit = Mask{1} << a;
    Poset rest = p.deleted(abit);
    auto mins_rest = mask_to_list(rest.minimals());
    for (std::size_t i = 0; i < mins_rest.size(); ++i) {
      for (std::size_t j = i + 1; j < mins_rest.size(); ++j) {
        // Translate back to original coordinates.
        int x = mask_to_list(p.all() & ~abit)[mins_rest[i]];
        int y = mask_to_list(p.all() & ~abit)[mins_rest[j]];
        for (int k = 1; k <= n - 2; ++k) {
          CheckParams ps;
          ps.a = a;
          ps.x = x;
          ps.y = y;
          ps.k = k;
          emit(ps);
        }
      }
    }
  }
}

void bind_subsets_k(const Poset& p, const SweepLimits& lim, const Emit& emit) {
  int n = p.size();
  for (Mask a : sweep_subsets(p, p.all(), lim, 0x5eb5e75)) {
    for (int k = 2; k <= n - 1; ++k) {
      CheckParams ps;
      ps.A = a;
      ps.k = k;
      emit(ps);
    }
  }
}

void bind_subsets(const Poset& p, const SweepLimits& lim, const Emit& emit) {
  for (Mask a : sweep_subsets(p, p.all(), lim, 0x5eb5e7)) {
    CheckParams ps;
    ps.A = a;
    emit(ps);
  }
}

void bind_subset_pairs(const Poset& p, const SweepLimits& lim, const Emit& emit) {
  auto subsets = sweep_subsets(p, p.all(), lim, 0xa11a);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i; j < subsets.size(); ++j) {
      CheckParams ps;
      ps.A = subsets[i];
      ps.B = subsets[j];
      emit(ps);
    }
  }
}

void bind_disjoint_minimal_pairs(const Poset& p, const SweepLimits& lim, const Emit& emit) {
  Mask mins = p.minimals();
  for (Mask a : sweep_subsets(p, mins, lim, 0xd15)) {
    for (Mask b : sweep_subsets(p, mins & ~a, lim, 0xd16)) {
      if (b < a) continue;  // unordered
      CheckParams ps;
      ps.A = a;
      ps.B = b;
      emit(ps);
    }
  }
}

void bind_disjoint_minimal_triples(const Poset& p, const SweepLimits& lim, const Emit& emit,
                                   bool ordered_pivot) {
  Mask mins = p.minimals();
  for (Mask a : sweep_subsets(p, mins, lim, 0xe17)) {
    for (Mask b : sweep_subsets(p, mins & ~a, lim, 0xe18)) {
      if (b < a) continue;
      for (Mask c : sweep_subsets(p, mins & ~a & ~b, lim, 0xe19)) {
        if (ordered_pivot) {
          // {A,B} unordered, C distinguished: rotate each set through C.
          Mask trio[3] = {a, b, c};
          for (int pivot = 0; pivot < 3; ++pivot) {
            CheckParams ps;
            ps.C = trio[pivot];
            ps.A = std::min(trio[(pivot + 1) % 3], trio[(pivot + 2) % 3]);
            ps.B = std::max(trio[(pivot + 1) % 3], trio[(pivot + 2) % 3]);
            emit(ps);
          }
        } else {
          if (c < b) continue;  // fully unordered
          CheckParams ps;
          ps.A = a;
          ps.B = b;
          ps.C = c;
          emit(ps);
        }
      }
    }
  }
}

void bind_all_pairs(const Poset& p, const Emit& emit, bool include_equal) {
  int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int y = include_equal ? x : x + 1; y < n; ++y) {
      CheckParams ps;
      ps.x = x;
      ps.y = y;
      emit(ps);
    }
  }
}

void bind_unique_cover_lc(const Poset& p, const Emit& emit) {
  auto mins = mask_to_list(p.minimals());
  for (std::size_t i = 0; i < mins.size(); ++i) {
    for (std::size_t j = i + 1; j < mins.size(); ++j) {
      for (int v : mask_to_list(p.unique_covers(mins[i]))) {
        for (int w : mask_to_list(p.unique_covers(mins[j]))) {
          CheckParams ps;
          ps.x = mins[i];
          ps.y = mins[j];
          ps.v = v;
          ps.w = w;
          emit(ps);
        }
      }
    }
  }
}

void bind_unique_cover_three(const Poset& p, const Emit& emit) {
  auto mins = mask_to_list(p.minimals());
  for (std::size_t i = 0; i < mins.size(); ++i) {
    for (std::size_t j = i + 1; j < mins.size(); ++j) {
      for (int z : mins) {
        if (z == mins[i] || z == mins[j]) continue;
        for (int u : mask_to_list(p.unique_covers(z))) {
          CheckParams ps;
          ps.x = mins[i];
          ps.y = mins[j];
          ps.z = z;
          ps.u = u;
          emit(ps);
        }
      }
    }
  }
}

void bind_fishburn(const Poset& p, const SweepLimits& lim, const Emit& emit) {
  // Upper ideals (including empty); exhaustive only for small posets.
  Engine eng(p);
  const auto& ups = eng.upper_ideals();
  if (p.size() <= lim.exhaustive_subset_max_n) {
    for (std::size_t i = 0; i < ups.size(); ++i) {
      for (std::size_t j = i; j < ups.size(); ++j) {
        CheckParams ps;
        ps.A = ups[i];
        ps.B = ups[j];
        emit(ps);
      }
    }
  } else {
    SplitMix64 rng(lim.seed ^ 0xf15b);
    for (int t = 0; t < lim.random_subsets; ++t) {
      CheckParams ps;
      ps.A = ups[rng.below(ups.size())];
      ps.B = ups[rng.below(ups.size())];
      emit(ps);
    }
  }
}

void bind_incomparable_pairs(const Poset& p, const Emit& emit) {
  int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && !p.comparable(x, y)) {
        CheckParams ps;
        ps.x = x;
        ps.y = y;
        emit(ps);
      }
    }
  }
}

void bind_cpc(const Poset& p, const Emit& emit) {
  int n = p.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (x == y || y == z || x == z) continue;
        // k+l <= n-3 keeps the shifted count F(k+1, l+1) attainable.
        for (int k = 1; k + 1 + 3 <= n; ++k) {
          for (int l = 1; k + l + 3 <= n; ++l) {
            CheckParams ps;
            ps.x = x;
            ps.y = y;
            ps.z = z;
            ps.k = k;
            ps.l = l;
            emit(ps);
          }
        }
      }
    }
  }
}

void bind_reverse(const Poset& p, const Emit& emit) {
  if (p.size() < 2) return;
  for (int x : mask_to_list(p.minimals())) {
    for (int y : mask_to_list(p.maximals())) {
      if (x == y) continue;
      CheckParams ps;
      ps.x = x;
      ps.y = y;
      emit(ps);
    }
  }
}

void bind_anchored_subsets(const Poset& p, const SweepLimits& lim, const Emit& emit,
                           int klo, int khi_off) {
  int n = p.size();
  if (n < 3) return;
  for (int a = 0; a < n; ++a) {
    for (Mask set : sweep_subsets(p, p.all() & ~(Mask{1} << a), lim, 0xabc0 + a)) {
      for (int k = klo; k <= n - khi_off; ++k) {
        CheckParams ps;
        ps.a = a;
        ps.A = set;
        ps.k = k;
        emit(ps);
      }
    }
  }
}

void bind_lemma_interpret(const Poset& p, const SweepLimits& lim, const Emit& emit) {
  int n = p.size();
  if (n < 3) return;
  for (int a = 0; a < n; ++a) {
    Mask abit = Mask{1} << a;
    Poset rest = p.deleted(abit);
    Mask rest_mins = 0;
    for_each_bit(p.all() & ~abit, [&](int v) {
      if (rest.below(Poset::compact_index(abit, v)) == 0) rest_mins |= Mask{1} << v;
    });
    for (Mask s1 : sweep_subsets(p, rest_mins, lim, 0x1e77)) {
      for (Mask s2 : sweep_subsets(p, rest_mins & ~s1, lim, 0x1e78)) {
        if (s2 < s1) continue;
        for (Mask s3 : sweep_subsets(p, rest_mins & ~s1 & ~s2, lim, 0x1e79)) {
          if (s3 < s2) continue;
          for (int k = 2; k <= n - 1; ++k) {
            CheckParams ps;
            ps.a = a;
            ps.A = s1;
            ps.B = s2;
            ps.C = s3;
            ps.k = k;
            emit(ps);
          }
        }
      }
    }
  }
}

}  // namespace

void bind_check(const std::string& id, const Poset& p, const SweepLimits& limits,
                const Emit& emit) {
  find_def(id);  // validate
  int n = p.size();
  if (id == "corr-del-lower" || id == "corr-del-upper") {
    bind_minimal_pairs(p, emit, /*need_n3=*/true);
  } else if (id == "bruhat-bounds") {
    bind_minimal_pairs(p, emit, /*need_n3=*/true);
  } else if (id == "corr-del-strong") {
    bind_corr_del_strong(p, emit);
  } else if (id == "cov-upper") {
    bind_all_pairs(p, emit, /*include_equal=*/true);
  } else if (id == "stanley" || id == "demo-anti-stanley") {
    bind_element_k(p, emit, 2, 1);
  } else if (id == "stanley-cdf") {
    bind_element_k(p, emit, 1, 1);
  } else if (id == "stanley-first2" || id == "second-moment" || id == "log-petrov") {
    bind_elements(p, emit);
  } else if (id == "ext-stanley-conj") {
    bind_subsets_k(p, limits, emit);
  } else if (id == "subset-ext1" || id == "subset-ext2" || id == "subset-two") {
    if (n >= 2) bind_subsets(p, limits, emit);
  } else if (id == "multi-cov") {
    bind_subset_pairs(p, limits, emit);
  } else if (id == "disjoint-lc") {
    bind_disjoint_minimal_pairs(p, limits, emit);
  } else if (id == "three-half") {
    bind_disjoint_minimal_triples(p, limits, emit, /*ordered_pivot=*/true);
  } else if (id == "three-perm") {
    bind_disjoint_minimal_triples(p, limits, emit, /*ordered_pivot=*/false);
  } else if (id == "unique-cover-lc") {
    bind_unique_cover_lc(p, emit);
  } else if (id == "unique-cover-three") {
    bind_unique_cover_three(p, emit);
  } else if (id == "fishburn") {
    bind_fishburn(p, limits, emit);
  } else if (id == "winkler") {
    bind_incomparable_pairs(p, emit);
  } else if (id == "cpc-conj") {
    bind_cpc(p, emit);
  } else if (id == "reverse-upper" || id == "reverse-conj") {
    bind_reverse(p, emit);
  } else if (id == "lemma-nform-cdf" || id == "lemma-yinyang") {
    bind_anchored_subsets(p, limits, emit, 3, 0);
  } else if (id == "lemma-interpret") {
    bind_lemma_interpret(p, limits, emit);
  }
}

SweepResult sweep(const Poset& p, const std::vector<std::string>& ids, const SweepLimits& limits,
                  counting::Path path) {
  std::vector<std::string> selected = ids;
  if (selected.empty()) {
    for (const auto& info : registry()) {
      if (!info.hidden) selected.push_back(info.id);
    }
  }
  SweepResult result;
  Engine eng(p, path);
  for (const auto& id : selected) {
    const CheckInfo& info = check_info(id);
    SweepCounts& counts = result.counts[id];
    bind_check(id, p, limits, [&](const CheckParams& ps) {
      Verdict v = check(eng, id, ps);
      switch (v.status) {
        case Status::Holds: ++counts.holds; break;
        case Status::Equality: ++counts.equality; break;
        case Status::Fails: ++counts.fails; break;
        case Status::Vacuous: ++counts.vacuous; break;
      }
      if (v.status != Status::Holds) result.exceptions.push_back(std::move(v));
      if (counts.fails > 0 && !info.conjecture) result.proved_failure = true;
    });
  }
  return result;
}

}  // namespace linext::ineq
