#include <doctest.h>

#include <random>

#include "linext/bigint.hpp"
#include "linext/prng.hpp"
#include "linext/rational.hpp"

using linext::BigInt;
using linext::Rat;
using linext::SplitMix64;

namespace {

BigInt random_bigint(SplitMix64& rng, int limbs) {
  BigInt out(0);
  BigInt shift = BigInt::from_string("4294967296");
  for (int i = 0; i < limbs; ++i) {
    out = out * shift + BigInt(static_cast<long long>(rng.next() & 0xFFFFFFFFull));
  }
  if (rng.next() & 1) out = -out;
  return out;
}

}  // namespace

TEST_SUITE("bigint") {

TEST_CASE("small value round trips") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-1).to_string() == "-1");
  CHECK(BigInt(123456789).to_string() == "123456789");
  CHECK(BigInt::from_string("-987654321098765432109876543210").to_string() ==
        "-987654321098765432109876543210");
  CHECK(BigInt::from_string("0000123").to_string() == "123");
}

TEST_CASE("arithmetic matches 64-bit reference") {
  SplitMix64 rng(42);
  for (int t = 0; t < 2000; ++t) {
    long long a = static_cast<long long>(rng.next() % 2000001) - 1000000;
    long long b = static_cast<long long>(rng.next() % 2000001) - 1000000;
    CHECK((BigInt(a) + BigInt(b)).to_string() == std::to_string(a + b));
    CHECK((BigInt(a) - BigInt(b)).to_string() == std::to_string(a - b));
    CHECK((BigInt(a) * BigInt(b)).to_string() == std::to_string(a * b));
    if (b != 0) {
      CHECK((BigInt(a) / BigInt(b)).to_string() == std::to_string(a / b));
      CHECK((BigInt(a) % BigInt(b)).to_string() == std::to_string(a % b));
    }
    CHECK((BigInt(a) <=> BigInt(b)) == (a <=> b));
  }
}

TEST_CASE("division invariant on wide operands") {
  SplitMix64 rng(7);
  for (int t = 0; t < 1500; ++t) {
    BigInt a = random_bigint(rng, 1 + static_cast<int>(rng.next() % 6));
    BigInt b = random_bigint(rng, 1 + static_cast<int>(rng.next() % 4));
    if (b.is_zero()) continue;
    auto [q, r] = BigInt::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    if (!r.is_zero()) CHECK(r.sign() == a.sign());
  }
}

TEST_CASE("division add-back corner cases") {
  // Divisors with saturated top limbs exercise the qhat correction.
  BigInt base32 = BigInt::from_string("4294967296");
  BigInt b = base32 * base32 - BigInt(1);
  BigInt a = (b * b) * base32 + (b - BigInt(2));
  auto [q, r] = BigInt::divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r < b);

  BigInt x = BigInt::from_string("340282366920938463463374607431768211455");  // 2^128-1
  BigInt y = BigInt::from_string("18446744073709551616");                    // 2^64
  auto [q2, r2] = BigInt::divmod(x, y);
  CHECK(q2.to_string() == "18446744073709551615");
  CHECK(r2.to_string() == "18446744073709551615");
}

TEST_CASE("gcd and divexact") {
  BigInt a = BigInt::from_string("123456789123456789123456789");
  BigInt b = BigInt::from_string("987654321987654321");
  BigInt g = BigInt::gcd(a, b);
  CHECK((a % g).is_zero());
  CHECK((b % g).is_zero());
  CHECK(BigInt::gcd(BigInt(0), b) == b);
  CHECK(BigInt::divexact(a * b, b) == a);
  CHECK_THROWS(BigInt::divexact(BigInt(7), BigInt(2)));
}

TEST_CASE("pow") {
  CHECK(BigInt::pow(BigInt(2), 100).to_string() == "1267650600228229401496703205376");
  CHECK(BigInt::pow(BigInt(-3), 3) == BigInt(-27));
  CHECK(BigInt::pow(BigInt(5), 0) == BigInt(1));
}

TEST_CASE("rationals reduce and compare") {
  Rat half(1, 2);
  Rat third(2, 6);
  CHECK(third.to_string() == "1/3");
  CHECK(half > third);
  CHECK((half + third).to_string() == "5/6");
  CHECK((half * third).to_string() == "1/6");
  CHECK((half - half).to_string() == "0/1");
  CHECK(Rat(-4, -6).to_string() == "2/3");
  CHECK(Rat(4, -6).to_string() == "-2/3");
  CHECK(Rat(BigInt(2)).to_string() == "2/1");
  CHECK_THROWS(Rat(BigInt(1), BigInt(0)));
  CHECK((Rat(7, 3) / Rat(7, 3)).to_string() == "1/1");
}

}  // TEST_SUITE
