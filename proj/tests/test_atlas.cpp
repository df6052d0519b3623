#include <doctest.h>

#include "linext/atlas.hpp"
#include "linext/counting.hpp"
#include "linext/errors.hpp"
#include "linext/poset.hpp"
#include "linext/prng.hpp"
#include "linext/search.hpp"
#include "oracles.hpp"

using namespace linext;
using namespace linext::atlas;

namespace {

IntMatrix random_symmetric(SplitMix64& rng, int d, int span) {
  IntMatrix m;
  m.d = d;
  m.a.assign(static_cast<std::size_t>(d) * d, BigInt(0));
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      long long v = static_cast<long long>(rng.below(2 * span + 1)) - span;
      m.at(i, j) = BigInt(v);
      m.at(j, i) = BigInt(v);
    }
  }
  return m;
}

std::vector<BigInt> random_nonneg_vector(SplitMix64& rng, int d, int span) {
  std::vector<BigInt> v(d);
  for (int i = 0; i < d; ++i) v[i] = BigInt(static_cast<long long>(rng.below(span + 1)));
  return v;
}

}  // namespace

TEST_SUITE("atlas") {

TEST_CASE("characteristic polynomial against determinant interpolation") {
  SplitMix64 rng(321);
  for (int d = 1; d <= 6; ++d) {
    for (int t = 0; t < 30; ++t) {
      IntMatrix m = random_symmetric(rng, d, 9);
      auto coeffs = char_poly(m);
      auto oracle = oracles::char_poly_interpolated(m);
      REQUIRE(coeffs.size() == oracle.size());
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        CHECK(Rat(coeffs[i]) == oracle[i]);
      }
    }
  }
}

TEST_CASE("positive eigenvalue counts by congruence invariance") {
  // S^T D S has the inertia of D for any invertible S.
  SplitMix64 rng(654);
  for (int t = 0; t < 60; ++t) {
    int d = 2 + static_cast<int>(rng.below(4));
    std::vector<int> diag(d);
    int pos = 0;
    for (int i = 0; i < d; ++i) {
      int r = static_cast<int>(rng.below(3));
      diag[i] = r - 1;  // -1, 0, 1
      pos += diag[i] > 0;
    }
    // Random unimodular S from row operations on the identity.
    std::vector<std::vector<long long>> s(d, std::vector<long long>(d, 0));
    for (int i = 0; i < d; ++i) s[i][i] = 1;
    for (int ops = 0; ops < 3 * d; ++ops) {
      int i = static_cast<int>(rng.below(d)), j = static_cast<int>(rng.below(d));
      if (i == j) continue;
      long long c = static_cast<long long>(rng.below(5)) - 2;
      for (int col = 0; col < d; ++col) s[i][col] += c * s[j][col];
    }
    IntMatrix m;
    m.d = d;
    m.a.assign(static_cast<std::size_t>(d) * d, BigInt(0));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        long long acc = 0;
        for (int l = 0; l < d; ++l) acc += s[l][i] * diag[l] * s[l][j];
        m.at(i, j) = BigInt(acc);
      }
    }
    auto rep = check_hyp(m);
    CHECK(rep.positive_eigenvalues == pos);
    CHECK(rep.is_hyperbolic == (pos <= 1));
  }
}

TEST_CASE("check_hyp examples") {
  IntMatrix swap2;
  swap2.d = 2;
  swap2.a = {BigInt(0), BigInt(1), BigInt(1), BigInt(0)};
  auto rep = check_hyp(swap2);
  CHECK(rep.positive_eigenvalues == 1);
  CHECK(rep.is_hyperbolic);

  IntMatrix id2;
  id2.d = 2;
  id2.a = {BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
  rep = check_hyp(id2);
  CHECK(rep.positive_eigenvalues == 2);
  CHECK(!rep.is_hyperbolic);

  IntMatrix bad;
  bad.d = 2;
  bad.a = {BigInt(0), BigInt(1), BigInt(2), BigInt(0)};
  CHECK_THROWS_AS(check_hyp(bad), NotSymmetric);
}

TEST_CASE("anchored matrix entries against brute force") {
  Poset a3 = Poset::antichain(3);
  auto am = build_atlas(a3, 0, 2);
  REQUIRE(am.d == 4);
  auto exts = oracles::all_extensions(a3);
  auto count_pin = [&](int anchor_value, std::vector<std::pair<int, int>> pins) {
    long long c = 0;
    for (const auto& f : exts) {
      if (f[0] != anchor_value) continue;
      bool ok = true;
      for (auto [e, v] : pins) ok = ok && f[e] == v;
      c += ok;
    }
    return BigInt(c);
  };
  int x = 1, y = 2, n = 3;
  CHECK(am.m.at(am.down_pos(x), am.down_pos(y)) == count_pin(3, {{x, 1}, {y, 2}}));
  CHECK(am.m.at(am.up_pos(x), am.up_pos(y)) == count_pin(1, {{x, n}, {y, n - 1}}));
  CHECK(am.m.at(am.down_pos(x), am.up_pos(y)) == count_pin(2, {{x, 1}, {y, n}}));
  CHECK(am.m.at(am.down_pos(x), am.down_pos(x)) ==
        count_pin(3, {{x, 1}}) - count_pin(3, {{x, 2}}));
  CHECK(am.m.symmetric());
  CHECK_THROWS_AS(build_atlas(a3, 0, 1), RangeError);
  CHECK_THROWS_AS(build_atlas(a3, 0, 3), RangeError);
}

TEST_CASE("hyperbolicity and row identities on every small poset") {
  for (int n = 3; n <= 5; ++n) {
    for (const Poset& p : search::exhaustive_posets(n)) {
      for (int a = 0; a < n; ++a) {
        for (int k = 2; k <= n - 1; ++k) {
          auto am = build_atlas(p, a, k);
          auto rep = check_hyp(am.m);
          CHECK(rep.is_hyperbolic);
          CHECK(check_row_identities(p, a, k));
          // Zero or one positive eigenvalue, and zero only when the whole
          // matrix vanishes.
          if (rep.positive_eigenvalues == 0) {
            bool all_zero = true;
            for (const auto& v : am.m.a) all_zero = all_zero && v.is_zero();
            CHECK(all_zero);
          }
        }
      }
    }
  }
}

TEST_CASE("pairings reproduce the anchored deletion counts") {
  for (int n = 3; n <= 5; ++n) {
    for (const Poset& p : search::exhaustive_posets(n)) {
      for (int a = 0; a < n; ++a) {
        Mask abit = Mask{1} << a;
        Mask mins = p.minimals() & ~abit;
        for (int k = 2; k <= n - 1; ++k) {
          auto am = build_atlas(p, a, k);
          auto z_up = indicator_up(am, p.all() & ~abit);
          auto mins_list = mask_to_list(mins);
          for (std::size_t i = 0; i < mins_list.size(); ++i) {
            for (std::size_t j = i + 1; j < mins_list.size(); ++j) {
              int x = mins_list[i], y = mins_list[j];
              auto cx = indicator_down(am, Mask{1} << x);
              auto cy = indicator_down(am, Mask{1} << y);
              Poset no_xy = p.deleted((Mask{1} << x) | (Mask{1} << y));
              Poset no_x = p.deleted(Mask{1} << x);
              int a_xy = Poset::compact_index((Mask{1} << x) | (Mask{1} << y), a);
              int a_x = Poset::compact_index(Mask{1} << x, a);
              CHECK(bilinear(am.m, cx, cy) ==
                    counting::count_with_value(no_xy, a_xy, k - 1));
              CHECK(bilinear(am.m, cx, z_up) ==
                    counting::count_with_value(no_x, a_x, k - 1));
            }
          }
          CHECK(bilinear(am.m, z_up, z_up) == counting::count_with_value(p, a, k - 1));
        }
      }
    }
  }
}

TEST_CASE("bilinear shape checks") {
  Poset a4 = Poset::antichain(4);
  auto am = build_atlas(a4, 0, 2);
  std::vector<BigInt> e0(am.d, BigInt(0)), e1(am.d, BigInt(0));
  e0[0] = BigInt(1);
  e1[1] = BigInt(1);
  CHECK(bilinear(am.m, e0, e1) == am.m.at(0, 1));
  CHECK(bilinear(am.m, e1, e0) == am.m.at(0, 1));
  std::vector<BigInt> short_vec(am.d - 1, BigInt(0));
  CHECK_THROWS_AS(bilinear(am.m, short_vec, e0), DimensionMismatch);
}

TEST_CASE("hyperbolic pairing inequalities at scale") {
  // Every anchored matrix on up to four elements against a thousand random
  // nonnegative triples, plus sampled larger instances.
  SplitMix64 rng(4242);
  auto hammer = [&](const IntMatrix& m, int triples) {
    long bad = 0;
    for (int t = 0; t < triples; ++t) {
      auto x = random_nonneg_vector(rng, m.d, 5);
      auto y = random_nonneg_vector(rng, m.d, 5);
      auto z = random_nonneg_vector(rng, m.d, 5);
      bad += lemma_quart(m, x, y, z).status == ineq::Status::Fails;
      bad += lemma_tri(m, x, y, z).status == ineq::Status::Fails;
      bad += lemma_half(m, x, y, z).status == ineq::Status::Fails;
      bad += lemma_two_of_three(m, x, y, z).status == ineq::Status::Fails;
      bad += shephard_det(m, x, y, z).status == ineq::Status::Fails;
    }
    CHECK(bad == 0);
  };
  for (int n = 3; n <= 4; ++n) {
    for (const Poset& p : search::exhaustive_posets(n)) {
      for (int a = 0; a < n; ++a) {
        for (int k = 2; k <= n - 1; ++k) hammer(build_atlas(p, a, k).m, 1000);
      }
    }
  }
  auto five = search::exhaustive_posets(5);
  auto six = search::exhaustive_posets(6);
  for (int t = 0; t < 12; ++t) {
    const Poset& p5 = five[rng.below(five.size())];
    hammer(build_atlas(p5, static_cast<int>(rng.below(5)),
                       2 + static_cast<int>(rng.below(3)))
               .m,
           1000);
    const Poset& p6 = six[rng.below(six.size())];
    hammer(build_atlas(p6, static_cast<int>(rng.below(6)),
                       2 + static_cast<int>(rng.below(4)))
               .m,
           1000);
  }
}

TEST_CASE("hyperbolic pairing inequalities on anchored matrices") {
  SplitMix64 rng(777);
  for (int n = 3; n <= 5; ++n) {
    for (const Poset& p : search::exhaustive_posets(n)) {
      for (int a = 0; a < n; ++a) {
        for (int k = 2; k <= n - 1; ++k) {
          auto am = build_atlas(p, a, k);
          for (int t = 0; t < 40; ++t) {
            auto x = random_nonneg_vector(rng, am.d, 4);
            auto y = random_nonneg_vector(rng, am.d, 4);
            auto z = random_nonneg_vector(rng, am.d, 4);
            CHECK(lemma_quart(am.m, x, y, z).status != ineq::Status::Fails);
            CHECK(lemma_tri(am.m, x, y, z).status != ineq::Status::Fails);
            CHECK(lemma_half(am.m, x, y, z).status != ineq::Status::Fails);
            CHECK(lemma_two_of_three(am.m, x, y, z).status != ineq::Status::Fails);
            CHECK(shephard_det(am.m, x, y, z).status != ineq::Status::Fails);
          }
          // The reverse Cauchy-Schwarz shape on signed vectors.
          for (int t = 0; t < 20; ++t) {
            std::vector<BigInt> u(am.d), v(am.d);
            for (int i = 0; i < am.d; ++i) {
              u[i] = BigInt(static_cast<long long>(rng.below(7)) - 3);
              v[i] = BigInt(static_cast<long long>(rng.below(7)) - 3);
            }
            BigInt vv = bilinear(am.m, v, v);
            if (vv.sign() >= 0) {
              BigInt uv = bilinear(am.m, u, v);
              BigInt uu = bilinear(am.m, u, u);
              CHECK(uv * uv >= uu * vv);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("degenerate pairings collapse to equalities") {
  Poset a4 = Poset::antichain(4);
  auto am = build_atlas(a4, 0, 2);
  SplitMix64 rng(13);
  auto x = random_nonneg_vector(rng, am.d, 3);
  auto quart = lemma_quart(am.m, x, x, x);
  CHECK(quart.status == ineq::Status::Equality);
  auto shep = shephard_det(am.m, x, x, x);
  CHECK(shep.status == ineq::Status::Equality);  // det of a rank-1 pairing

  // lemma-tri with z <- x collapses to the reverse Cauchy-Schwarz form:
  // when <x,Mx> > 0 it forces <x,My>^2 >= <x,Mx><y,My>.
  auto y = random_nonneg_vector(rng, am.d, 3);
  auto tri = lemma_tri(am.m, x, y, x);
  CHECK(tri.status != ineq::Status::Fails);
  BigInt xx = bilinear(am.m, x, x), yy = bilinear(am.m, y, y), xy = bilinear(am.m, x, y);
  if (xx.sign() > 0) CHECK(xy * xy >= xx * yy);
}

TEST_CASE("half lemma on the two-dimensional swap") {
  IntMatrix m;
  m.d = 2;
  m.a = {BigInt(0), BigInt(1), BigInt(1), BigInt(0)};
  std::vector<BigInt> x{BigInt(1), BigInt(0)}, y{BigInt(0), BigInt(1)}, z{BigInt(1), BigInt(1)};
  // Pairings: <z,Mz> = 2, <x,My> = <x,Mz> = <y,Mz> = 1, so 2 <= 2.
  auto v = lemma_half(m, x, y, z);
  CHECK(v.lhs == Rat(2));
  CHECK(v.rhs == Rat(2));
  CHECK(v.status == ineq::Status::Equality);
}

}  // TEST_SUITE
