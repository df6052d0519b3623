#pragma once

#include <compare>
#include <string>

#include "linext/bigint.hpp"

namespace linext {

/// Exact rational: reduced, denominator > 0.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(BigInt n) : num_(std::move(n)), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(BigInt n, BigInt d);
  Rat(long long n, long long d) : Rat(BigInt(n), BigInt(d)) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const;

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Rat& o) const;

  /// "num/den", always with the denominator ("3/2", "2/1", "-1/4").
  std::string to_string() const;

  double to_double() const;

 private:
  BigInt num_, den_;
  void reduce();
};

}  // namespace linext
