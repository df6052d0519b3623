#include <doctest.h>

#include "linext/counting.hpp"
#include "linext/errors.hpp"
#include "linext/poset.hpp"
#include "linext/prng.hpp"
#include "linext/search.hpp"
#include "linext/sequences.hpp"
#include "oracles.hpp"

using namespace linext;
using counting::EventSpec;
using counting::Path;

namespace {

std::vector<Poset> random_posets(int n, int count, std::uint64_t seed) {
  search::GeneratorSpec spec;
  spec.kind = search::GeneratorSpec::Kind::RandomKDim;
  spec.n = n;
  spec.orders = 2 + static_cast<int>(seed % 2);
  spec.seed = seed;
  spec.count = count;
  return search::generate(spec);
}

}  // namespace

TEST_SUITE("counting") {

TEST_CASE("enumerate basics") {
  int count = 0;
  counting::enumerate(Poset::chain(3), [&](const std::vector<int>&) { ++count; });
  CHECK(count == 1);

  std::vector<std::vector<int>> seen;
  counting::enumerate(Poset::antichain(3), [&](const std::vector<int>& f) { seen.push_back(f); });
  CHECK(seen.size() == 6);
  // Lexicographic by the value sequence: the identity assignment first.
  CHECK(seen.front() == std::vector<int>{1, 2, 3});
  CHECK(seen.back() == std::vector<int>{3, 2, 1});

  count = 0;
  counting::enumerate(Poset::zigzag(4), [&](const std::vector<int>&) { ++count; });
  CHECK(count == 5);

  counting::Limits tight;
  tight.enum_cap = 3;
  CHECK_THROWS_AS(counting::enumerate(Poset::chain(4), [](const std::vector<int>&) {}, tight),
                  CapExceeded);
}

TEST_CASE("count basics") {
  CHECK(counting::count(Poset::antichain(5)) == sequences::factorial(5));
  CHECK(counting::count(Poset::chain(9)) == BigInt(1));
  CHECK(counting::count(Poset::antichain(0)) == BigInt(1));
  auto e = sequences::euler_numbers(10);
  for (int n = 0; n <= 10; ++n) {
    CHECK(counting::count(Poset::zigzag(n)) == e[n]);
  }
}

TEST_CASE("count_with_value basics") {
  Poset a3 = Poset::antichain(3);
  for (int a = 0; a < 3; ++a) {
    for (int k = 1; k <= 3; ++k) CHECK(counting::count_with_value(a3, a, k) == BigInt(2));
  }
  Poset c3 = Poset::chain(3);
  CHECK(counting::count_with_value(c3, 0, 1) == BigInt(1));
  CHECK(counting::count_with_value(c3, 0, 2) == BigInt(0));
  CHECK_THROWS_AS(counting::count_with_value(c3, 0, 4), RangeError);

  for (const Poset& p : random_posets(7, 10, 99)) {
    for (int a = 0; a < p.size(); ++a) {
      BigInt sum(0);
      for (const auto& c : counting::value_counts(p, a)) sum += c;
      CHECK(sum == counting::count(p));
    }
  }
}

TEST_CASE("anchored counts dualize") {
  for (const Poset& p : random_posets(6, 10, 123)) {
    Poset d = p.dual();
    int n = p.size();
    for (int a = 0; a < n; ++a) {
      auto ek = counting::value_counts(p, a);
      auto dk = counting::value_counts(d, a);
      for (int k = 1; k <= n; ++k) CHECK(ek[k - 1] == dk[n - k]);
    }
  }
}

TEST_CASE("deletion recurrence") {
  for (const Poset& p : random_posets(7, 10, 7)) {
    BigInt sum(0);
    for_each_bit(p.minimals(), [&](int x) {
      sum += counting::count(p.deleted(Mask{1} << x));
    });
    CHECK(sum == counting::count(p));
  }
}

TEST_CASE("count_event examples") {
  Poset a3 = Poset::antichain(3);
  EventSpec ev;
  ev.with_value(0, 1).with_value(1, 2);
  CHECK(counting::count_event(a3, ev) == BigInt(1));

  Poset c2 = Poset::chain(2);
  EventSpec ev2;
  ev2.with_value(1, 1);
  CHECK(counting::count_event(c2, ev2) == BigInt(0));

  Poset p = Poset::parallel_sum(Poset::chain(2), Poset::antichain(1));
  EventSpec ev3;
  ev3.with_member(1, Mask{1} << 2);
  CHECK(counting::count_event(p, ev3) == BigInt(1));
  CHECK(counting::count(p) == BigInt(3));
}

TEST_CASE("inconsistent events count zero") {
  Poset a4 = Poset::antichain(4);
  EventSpec ev;
  ev.with_value(0, 1).with_value(1, 1);
  CHECK(counting::count_event(a4, ev, Path::Fast) == BigInt(0));
  CHECK(counting::count_event(a4, ev, Path::Reference) == BigInt(0));
  EventSpec ev2;
  ev2.with_anchor(0, 2).with_value(1, 2);
  CHECK(counting::count_event(a4, ev2, Path::Fast) == BigInt(0));
}

TEST_CASE("fmin counts") {
  Poset a2 = Poset::antichain(2);
  CHECK(counting::fmin_count(a2, 0b01, 1) == BigInt(1));
  CHECK(counting::fmin_count(a2, 0b01, 2) == BigInt(1));
  for (const Poset& p : random_posets(6, 6, 55)) {
    Mask all = p.all();
    auto d = counting::fmin_counts(p, all);
    CHECK(d[0] == counting::count(p));  // everything hits at value 1
    for (int k = 2; k <= p.size(); ++k) CHECK(d[k - 1].is_zero());
    // Singletons reduce to the anchored counts.
    for (int x = 0; x < p.size(); ++x) {
      auto single = counting::fmin_counts(p, Mask{1} << x);
      auto ek = counting::value_counts(p, x);
      for (int k = 1; k <= p.size(); ++k) CHECK(single[k - 1] == ek[k - 1]);
    }
  }
}

TEST_CASE("cross product counts") {
  Poset c3 = Poset::chain(3);
  CHECK(counting::cross_product_count(c3, 0, 1, 2, 1, 1) == BigInt(1));
  Poset a3 = Poset::antichain(3);
  CHECK(counting::cross_product_count(a3, 0, 1, 2, 1, 1) == BigInt(1));
  CHECK_THROWS_AS(counting::cross_product_count(a3, 0, 0, 2, 1, 1), RangeError);
  CHECK_THROWS_AS(counting::cross_product_count(a3, 0, 1, 2, 0, 1), RangeError);

  for (const Poset& p : random_posets(6, 5, 31)) {
    int n = p.size();
    // Summing over all gaps recovers the one-sided order count.
    BigInt total(0);
    for (int k = 1; k < n; ++k) {
      for (int l = 1; k + l < n; ++l) total += counting::cross_product_count(p, 0, 1, 2, k, l);
    }
    BigInt direct = oracles::count_filtered(
        p, [](const std::vector<int>& f) { return f[0] < f[1] && f[1] < f[2]; });
    CHECK(total == direct);
  }
}

TEST_CASE("ideal budget guard") {
  CHECK(counting::ideal_count(Poset::antichain(5)) == 32);
  CHECK(counting::ideal_count(Poset::chain(6)) == 7);
  counting::Limits tiny;
  tiny.ideal_budget = 10;
  CHECK_THROWS_AS(counting::count(Poset::antichain(6), tiny), CapExceeded);
}

TEST_CASE("oracle equivalence on every small poset") {
  SplitMix64 rng(2024);
  for (int n = 0; n <= 6; ++n) {
    for (const Poset& p : search::exhaustive_posets(n)) {
      auto exts = oracles::all_extensions(p);
      CHECK(counting::count(p) == BigInt(static_cast<long long>(exts.size())));
      for (int a = 0; a < n; ++a) {
        auto ek = counting::value_counts(p, a);
        for (int k = 1; k <= n; ++k) {
          long long want = 0;
          for (const auto& f : exts) want += f[a] == k;
          CHECK(ek[k - 1] == BigInt(want));
        }
      }
      // A battery of anchored membership events through both paths.
      for (int trial = 0; trial < 8; ++trial) {
        EventSpec ev;
        if (n >= 1 && (rng.next() & 1)) {
          int a = static_cast<int>(rng.below(n));
          int k = 1 + static_cast<int>(rng.below(n));
          ev.with_anchor(a, k);
        }
        if (n >= 1) {
          Mask s1 = rng.next() & p.all();
          if (s1) ev.with_member(1, s1, rng.next() & 1);
          Mask s2 = rng.next() & p.all();
          if (s2 && (rng.next() & 1)) ev.with_member(2, s2, rng.next() & 1);
        }
        BigInt fast = counting::count_event(p, ev, Path::Fast);
        BigInt ref = counting::count_event(p, ev, Path::Reference);
        CHECK(fast == ref);
      }
      // f_min distributions against the brute force.
      for (Mask a = 1; a <= p.all(); a = (a << 1) | 1) {
        auto d = counting::fmin_counts(p, a);
        for (int k = 1; k <= n; ++k) {
          BigInt want = oracles::count_filtered(p, [&](const std::vector<int>& f) {
            int mn = n + 1;
            for_each_bit(a, [&](int e) { mn = std::min(mn, f[e]); });
            return mn == k;
          });
          CHECK(d[k - 1] == want);
          CHECK(counting::fmin_count(p, a, k, Path::Fast) == want);
        }
      }
    }
  }
}

TEST_CASE("oracle equivalence on random posets of size 7 and 8") {
  int checked = 0;
  for (int n : {7, 8}) {
    for (const Poset& p : random_posets(n, 12, 1000 + n)) {
      auto exts = oracles::all_extensions(p);
      CHECK(counting::count(p) == BigInt(static_cast<long long>(exts.size())));
      SplitMix64 rng(n * 977 + checked);
      for (int trial = 0; trial < 4; ++trial) {
        EventSpec ev;
        int a = static_cast<int>(rng.below(n));
        ev.with_anchor(a, 1 + static_cast<int>(rng.below(n)));
        Mask s = rng.next() & p.all();
        if (s) ev.with_member(1, s);
        Mask s2 = rng.next() & p.all();
        if (s2) ev.with_member(2, s2, true);
        CHECK(counting::count_event(p, ev, Path::Fast) ==
              counting::count_event(p, ev, Path::Reference));
      }
      int x = 0, y = 1, z = 2;
      CHECK(counting::cross_product_count(p, x, y, z, 1, 1, Path::Fast) ==
            counting::cross_product_count(p, x, y, z, 1, 1, Path::Reference));
      ++checked;
    }
  }
  CHECK(checked == 24);
}

TEST_CASE("joint grids match brute force") {
  for (const Poset& p : random_posets(6, 6, 500)) {
    int n = p.size();
    auto grid = counting::joint_value_counts(p, 0, 1);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        BigInt want = oracles::count_filtered(
            p, [&](const std::vector<int>& f) { return f[0] == i && f[1] == j; });
        CHECK(grid[i - 1][j - 1] == want);
      }
    }
    Mask a = 0b011, b = 0b110;
    auto fgrid = counting::joint_fmin_counts(p, a, b);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        BigInt want = oracles::count_filtered(p, [&](const std::vector<int>& f) {
          int ma = n + 1, mb = n + 1;
          for_each_bit(a, [&](int e) { ma = std::min(ma, f[e]); });
          for_each_bit(b, [&](int e) { mb = std::min(mb, f[e]); });
          return ma == i && mb == j;
        });
        CHECK(fgrid[i - 1][j - 1] == want);
      }
    }
  }
}

TEST_CASE("natural closure preserves the low-value event") {
  // Pr[1 in f(A), 2 in f(A up)] = Pr[1 in f(A), 2 in f(A natural)] for
  // subsets of the minima.
  for (int n = 1; n <= 6; ++n) {
    for (const Poset& p : search::exhaustive_posets(n)) {
      Mask mins = p.minimals();
      for (Mask a = mins; a != 0; a = (a - 1) & mins) {
        EventSpec up, natural;
        up.with_member(1, a).with_member(2, p.up_closure(a));
        natural.with_member(1, a).with_member(2, p.natural_closure(a));
        CHECK(counting::count_event(p, up) == counting::count_event(p, natural));
      }
    }
  }
}

}  // TEST_SUITE
