#include <doctest.h>

#include <set>

#include "linext/errors.hpp"
#include "linext/poset.hpp"
#include "linext/prng.hpp"
#include "linext/search.hpp"
#include "oracles.hpp"

using namespace linext;

TEST_SUITE("poset") {

TEST_CASE("from_relations applies the closure") {
  Poset a3 = Poset::from_relations(3, {});
  CHECK(a3.relation_pairs().empty());

  Poset c3 = Poset::from_relations(3, {{0, 1}, {1, 2}});
  CHECK(c3.less(0, 2));  // forced by transitivity
  CHECK(c3.relation_pairs().size() == 3);

  CHECK_THROWS_AS(Poset::from_relations(2, {{0, 1}, {1, 0}}), CycleError);
  CHECK_THROWS_AS(Poset::from_relations(2, {{0, 2}}), RangeError);
}

TEST_CASE("closure is idempotent") {
  SplitMix64 rng(11);
  for (int t = 0; t < 20; ++t) {
    search::GeneratorSpec spec;
    spec.kind = search::GeneratorSpec::Kind::RandomKDim;
    spec.n = 6;
    spec.orders = 2;
    spec.seed = rng.next();
    spec.count = 1;
    Poset p = search::generate(spec)[0];
    Poset again = Poset::from_relations(p.size(), p.relation_pairs());
    CHECK(again == p);
  }
}

TEST_CASE("chain and antichain") {
  CHECK(Poset::chain(1) == Poset::antichain(1));
  CHECK(Poset::chain(3).relation_pairs().size() == 3);
  CHECK(Poset::antichain(4).relation_pairs().empty());
  CHECK(Poset::chain(0).size() == 0);
}

TEST_CASE("dual") {
  CHECK(Poset::antichain(3).dual() == Poset::antichain(3));
  Poset c3 = Poset::chain(3);
  CHECK(c3.dual().less(2, 0));
  SplitMix64 rng(5);
  for (int t = 0; t < 20; ++t) {
    search::GeneratorSpec spec;
    spec.kind = search::GeneratorSpec::Kind::RandomBipartite;
    spec.n = 7;
    spec.edge_prob = 0.4;
    spec.seed = rng.next();
    spec.count = 1;
    Poset p = search::generate(spec)[0];
    CHECK(p.dual().dual() == p);
    CHECK(p.maximals() == p.dual().minimals());
  }
}

TEST_CASE("delete") {
  CHECK(Poset::chain(3).deleted(Mask{1} << 1) == Poset::chain(2));
  Poset p = Poset::zigzag(5);
  CHECK(p.deleted(0) == p);
  CHECK(Poset::antichain(4).deleted(0b101) == Poset::antichain(2));
}

TEST_CASE("delete commutes with dual") {
  SplitMix64 rng(17);
  for (int t = 0; t < 30; ++t) {
    search::GeneratorSpec spec;
    spec.kind = search::GeneratorSpec::Kind::RandomKDim;
    spec.n = 6;
    spec.orders = 3;
    spec.seed = rng.next();
    spec.count = 1;
    Poset p = search::generate(spec)[0];
    Mask removed = rng.next() & p.all();
    CHECK(p.deleted(removed).dual() == p.dual().deleted(removed));
  }
}

TEST_CASE("sums") {
  CHECK(Poset::parallel_sum(Poset::antichain(1), Poset::antichain(1)) == Poset::antichain(2));
  CHECK(Poset::linear_sum(Poset::chain(2), Poset::chain(2)) == Poset::chain(4));
  Poset tight = Poset::linear_sum(Poset::antichain(2), Poset::chain(2));
  CHECK(tight.minimals() == 0b0011);
  CHECK(tight.less(0, 2));
  CHECK(tight.less(1, 3));
  CHECK(!tight.comparable(0, 1));
}

TEST_CASE("minimals and maximals") {
  CHECK(Poset::chain(3).minimals() == 0b001);
  CHECK(Poset::antichain(3).minimals() == 0b111);
  CHECK(Poset::chain(3).maximals() == 0b100);
}

TEST_CASE("up ideals and closures") {
  Poset c3 = Poset::chain(3);
  CHECK(c3.up_ideal(1) == 0b110);
  CHECK(c3.up_closure(c3.minimals()) == c3.all());
  CHECK(c3.up_closure(0) == 0);
  Poset z5 = Poset::zigzag(5);
  CHECK(z5.up_closure(z5.minimals()) == z5.all());

  SplitMix64 rng(23);
  for (int t = 0; t < 30; ++t) {  // monotone
    search::GeneratorSpec spec;
    spec.kind = search::GeneratorSpec::Kind::RandomKDim;
    spec.n = 7;
    spec.orders = 2;
    spec.seed = rng.next();
    spec.count = 1;
    Poset p = search::generate(spec)[0];
    Mask b = rng.next() & p.all();
    Mask a = rng.next() & b;
    CHECK((p.up_closure(a) & ~p.up_closure(b)) == 0);
  }
}

TEST_CASE("natural closure") {
  Poset a3 = Poset::antichain(3);
  CHECK(a3.natural_closure(0b001) == 0b001);
  CHECK(a3.natural_closure(0) == 0);
  Poset z5 = Poset::zigzag(5);
  CHECK(z5.natural_closure(z5.minimals()) == z5.all());
}

TEST_CASE("unique covers") {
  CHECK(Poset::chain(3).unique_covers(0) == 0b010);
  CHECK(Poset::antichain(3).unique_covers(0) == 0);
  Poset v = Poset::from_relations(3, {{0, 2}, {1, 2}});
  CHECK(v.unique_covers(0) == 0);  // 2 covers both minima
}

TEST_CASE("permutation posets") {
  CHECK(Poset::from_permutation({1, 2, 3, 4}) == Poset::chain(4));
  CHECK(Poset::from_permutation({4, 3, 2, 1}) == Poset::antichain(4));
  Poset p = Poset::from_permutation({2, 1, 3});
  CHECK(p.minimals() == 0b011);
  CHECK_THROWS_AS(Poset::from_permutation({1, 1, 2}), RangeError);
  // The upper-bound witness: (2,1,3,...,n) gives two incomparable minima
  // below a chain.
  Poset q = Poset::from_permutation({2, 1, 3, 4});
  CHECK(oracles::isomorphic(q, Poset::linear_sum(Poset::antichain(2), Poset::chain(2))));
}

TEST_CASE("zigzag") {
  CHECK(Poset::zigzag(2) == Poset::chain(2));
  Poset z3 = Poset::zigzag(3);
  CHECK(z3.minimals() == 0b101);
  CHECK(z3.maximals() == 0b010);
  CHECK(oracles::count_extensions(Poset::zigzag(4)).to_string() == "5");
}

TEST_CASE("canonical form separates isomorphism classes") {
  Poset c3 = Poset::from_relations(3, {{0, 1}, {1, 2}});
  Poset c3_relabeled = Poset::from_relations(3, {{2, 0}, {0, 1}});
  CHECK(c3.canonical_form() == c3_relabeled.canonical_form());
  CHECK(c3.canonical_form() != Poset::antichain(3).canonical_form());

  // Brute force: classify all labeled posets on 3 elements into isomorphism
  // classes, then check the canonical strings agree with the classes.
  auto labeled = oracles::all_labeled_posets(3);
  CHECK(labeled.size() == 19);  // labeled posets on 3 elements
  std::set<std::string> canon;
  std::vector<Poset> reps;
  for (const Poset& p : labeled) {
    canon.insert(p.canonical_form());
    bool seen = false;
    for (const Poset& r : reps) seen = seen || oracles::isomorphic(p, r);
    if (!seen) reps.push_back(p);
  }
  CHECK(canon.size() == 5);
  CHECK(reps.size() == 5);

  for (const Poset& p : labeled) {
    for (const Poset& q : labeled) {
      CHECK((p.canonical_form() == q.canonical_form()) == oracles::isomorphic(p, q));
    }
  }
}

TEST_CASE("labels survive the constructors that keep elements") {
  Poset p = Poset::antichain(2);
  p.set_labels({"left", "right"});
  CHECK(p.dual().labels()[0] == "left");
}

}  // TEST_SUITE
