#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace linext {

/// Arbitrary-precision signed integer (sign + base-2^32 magnitude).
///
/// All counting in this library is exact; BigInt is the only integer type
/// that crosses module boundaries. Division truncates toward zero, as the
/// built-in integer types do.
class BigInt {
 public:
  BigInt() = default;
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}
  BigInt(long long v);
  BigInt(unsigned long long v);

  static BigInt from_string(std::string_view s);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);

  /// Quotient and remainder, truncated toward zero; remainder has the
  /// dividend's sign. Divisor must be nonzero.
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);

  /// Exact division: asserts the remainder is zero.
  static BigInt divexact(const BigInt& a, const BigInt& b);

  static BigInt gcd(const BigInt& a, const BigInt& b);
  static BigInt pow(const BigInt& base, unsigned exp);

  bool operator==(const BigInt& o) const = default;
  std::strong_ordering operator<=>(const BigInt& o) const;

  std::string to_string() const;

  /// Number of decimal digits of the magnitude (1 for zero).
  std::size_t digit_count() const;

 private:
  int sign_ = 0;                    // -1, 0, +1
  std::vector<std::uint32_t> mag_;  // little-endian limbs, no leading zeros

  void normalize();
  static int cmp_mag(const std::vector<std::uint32_t>& a,
                     const std::vector<std::uint32_t>& b);
};

inline BigInt operator*(long long a, const BigInt& b) { return BigInt(a) * b; }
inline BigInt operator*(const BigInt& a, long long b) { return a * BigInt(b); }

}  // namespace linext
