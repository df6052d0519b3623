#include <doctest.h>

#include "linext/counting.hpp"
#include "linext/errors.hpp"
#include "linext/poset.hpp"
#include "linext/prng.hpp"
#include "linext/rational.hpp"
#include "linext/sequences.hpp"

using namespace linext;
namespace seq = linext::sequences;

TEST_SUITE("sequences") {

TEST_CASE("alternating permutation counts") {
  auto e = seq::euler_numbers(7);
  const char* want[] = {"1", "1", "1", "2", "5", "16", "61", "272"};
  for (int i = 0; i <= 7; ++i) CHECK(e[i].to_string() == want[i]);
  CHECK(seq::euler_number(12).to_string() == "2702765");
}

TEST_CASE("zigzag extension counts match the sequence") {
  auto e = seq::euler_numbers(10);
  for (int n = 0; n <= 10; ++n) CHECK(counting::count(Poset::zigzag(n)) == e[n]);
}

TEST_CASE("entringer rows against the triangle oracle") {
  auto tri = seq::boustrophedon_triangle(12);
  for (int n = 1; n <= 12; ++n) {
    BigInt sum(0);
    for (int k = 1; k <= n; ++k) {
      BigInt v = seq::entringer(n, k);
      // The triangle entry T(n-1, n-k) counts the same refinement.
      BigInt want = (n - k <= n - 1) ? tri[n - 1][n - k] : BigInt(0);
      CHECK(v == want);
      sum += v;
    }
    CHECK(sum == seq::euler_number(n));
  }
}

TEST_CASE("closed form prefix sums") {
  // The alternating sum gives the running totals for k <= n-1.
  for (int n = 2; n <= 12; ++n) {
    BigInt running(0);
    for (int k = 1; k <= n - 1; ++k) {
      running += seq::entringer(n, k);
      CHECK(seq::entringer_prefix(n, k) == running);
    }
  }
  CHECK_THROWS_AS(seq::entringer_prefix(4, 4), RangeError);
}

TEST_CASE("refinement matches the zigzag anchored counts") {
  for (int n = 1; n <= 9; ++n) {
    auto ek = counting::value_counts(Poset::zigzag(n), 0);
    for (int k = 1; k <= n; ++k) CHECK(ek[k - 1] == seq::entringer(n, k));
  }
}

TEST_CASE("entringer log-concavity") {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 2; k <= n - 1; ++k) {
      CHECK(seq::entringer(n, k) * seq::entringer(n, k) >=
            seq::entringer(n, k - 1) * seq::entringer(n, k + 1));
    }
  }
}

TEST_CASE("subset-count polynomials match the zigzag events") {
  for (int n = 1; n <= 9; n += 2) {
    int m = (n - 1) / 2;
    Poset z = Poset::zigzag(n);
    BigInt total = counting::count(z);
    CHECK(seq::fgh_polynomials(n, m + 1).f == total);  // full minima set
    for (int k = 0; k <= m + 1; ++k) {
      auto fgh = seq::fgh_polynomials(n, k);
      Mask a = 0;
      for (int i = 1; i <= k; ++i) a |= Mask{1} << (2 * i - 2);  // {x_1..x_k}
      counting::EventSpec in1, g_ev, h_ev;
      if (a) {
        in1.with_member(1, a);
        CHECK(counting::count_event(z, in1) == fgh.f);
      } else {
        CHECK(fgh.f.is_zero());
      }
      g_ev.with_member(1, a, true).with_member(2, a);
      CHECK(counting::count_event(z, g_ev) == fgh.g);
      if (a) {
        h_ev.with_member(1, a).with_member(2, a);
        CHECK(counting::count_event(z, h_ev) == fgh.h);
      } else {
        CHECK(fgh.h.is_zero());
      }
    }
  }
}

TEST_CASE("polynomial inequalities for the subset counts") {
  for (int n = 1; n <= 13; n += 2) {
    int m = (n - 1) / 2;
    BigInt en = seq::euler_number(n);
    for (int k = 1; k <= m + 1; ++k) {
      auto fgh = seq::fgh_polynomials(n, k);
      auto fgh_c = seq::fgh_polynomials(n, m - k + 1);
      // degree four
      CHECK(fgh.f * fgh_c.f <= en * fgh.g);
      // degree six
      CHECK(fgh.g * fgh.g >= fgh.h * fgh_c.h);
    }
  }
}

TEST_CASE("log-concavity recognition") {
  using V = std::vector<BigInt>;
  CHECK(seq::is_log_concave(V{1, 1, 1, 1}));
  CHECK(seq::is_log_concave(V{1, 3, 4, 3, 1}));
  CHECK(!seq::is_log_concave(V{1, 0, 1}));        // internal zero
  CHECK(!seq::is_log_concave(V{1, 0, 0, 1}));     // gap
  CHECK(!seq::is_log_concave(V{1, 2, 5}));        // 4 < 5
  CHECK(seq::is_log_concave(V{0, 0, 2, 4, 4, 1, 0}));
  CHECK_THROWS_AS(seq::suffix_sums_log_concave(V{1, 2, 5}), NotLogConcave);
}

TEST_CASE("log-concavity lemmas on structured input") {
  using V = std::vector<BigInt>;
  V uniform(12, BigInt(1));
  CHECK(seq::suffix_sums_log_concave(uniform));
  CHECK(seq::first_two_lemma(uniform));
  CHECK(seq::second_moment_lemma(uniform));

  // Truncated geometric with ratio q = a/b: p_k = a^k b^(n-k).
  for (auto [a, b] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{9, 10}, std::pair{99, 100}}) {
    V p;
    int n = 18;
    for (int k = 0; k < n; ++k) {
      p.push_back(BigInt::pow(BigInt(a), k) * BigInt::pow(BigInt(b), n - k));
    }
    CHECK(seq::suffix_sums_log_concave(p));
    CHECK(seq::first_two_lemma(p));
    CHECK(seq::second_moment_lemma(p));
  }
}

TEST_CASE("log-concavity lemmas on random sequences") {
  SplitMix64 rng(99);
  int accepted = 0;
  while (accepted < 10000) {
    std::vector<BigInt> p;
    if (rng.next() & 1) {
      // Constructive: exponentials of a random concave integer sequence.
      int len = 2 + static_cast<int>(rng.below(19));
      int slope = 3 - static_cast<int>(rng.below(7));
      int cur = 0;
      std::vector<int> expo;
      for (int i = 0; i < len; ++i) {
        expo.push_back(cur);
        cur += slope;
        if (rng.next() & 1) slope -= static_cast<int>(rng.below(3));
      }
      int mn = *std::min_element(expo.begin(), expo.end());
      for (int v : expo) p.push_back(BigInt::pow(BigInt(2), static_cast<unsigned>(v - mn)));
    } else {
      // Rejection sampling over short random tuples.
      int len = 2 + static_cast<int>(rng.below(5));
      for (int i = 0; i < len; ++i) p.push_back(BigInt(1 + static_cast<long long>(rng.below(30))));
      if (!seq::is_log_concave(p)) continue;
    }
    ++accepted;
    CHECK(seq::suffix_sums_log_concave(p));
    CHECK(seq::first_two_lemma(p));
    CHECK(seq::second_moment_lemma(p));
  }
}

TEST_CASE("second moment ratio approaches two from below") {
  // Truncated geometrics with ratio q = (D-1)/D and run length scaled as
  // 24 D: the ratio climbs toward 2 but never reaches it.
  using V = std::vector<BigInt>;
  Rat prev(0);
  for (int denom : {2, 4, 16, 64}) {
    V p;
    int n = 24 * denom;
    for (int k = 0; k < n; ++k) {
      p.push_back(BigInt::pow(BigInt(denom - 1), static_cast<unsigned>(k)) *
                  BigInt::pow(BigInt(denom), static_cast<unsigned>(n - k)));
    }
    BigInt s0(0), s1(0), s2(0);
    for (int k = 0; k < n; ++k) {
      s0 += p[k];
      s1 += BigInt(k + 1) * p[k];
      s2 += BigInt(1LL * (k + 1) * (k + 1)) * p[k];
    }
    Rat ratio(s0 * s2, s1 * s1);
    CHECK(ratio < Rat(2));
    CHECK(ratio > prev);
    prev = ratio;
  }
  CHECK(prev > Rat(63, 32));  // within 1/32 of the bound
}

}  // TEST_SUITE
