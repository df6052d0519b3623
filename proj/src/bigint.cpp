#include "linext/bigint.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace linext {

namespace {

using Limbs = std::vector<std::uint32_t>;
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;

void trim(Limbs& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int cmp(const Limbs& a, const Limbs& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Limbs add(const Limbs& a, const Limbs& b) {
  const Limbs& lo = a.size() < b.size() ? a : b;
  const Limbs& hi = a.size() < b.size() ? b : a;
  Limbs out(hi.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
    out[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  out[hi.size()] = static_cast<std::uint32_t>(carry);
  trim(out);
  return out;
}

// Requires a >= b.
Limbs sub(const Limbs& a, const Limbs& b) {
  Limbs out(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                     (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<std::uint32_t>(d);
  }
  assert(borrow == 0);
  trim(out);
  return out;
}

Limbs mul(const Limbs& a, const Limbs& b) {
  if (a.empty() || b.empty()) return {};
  Limbs out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = out[i + j] + ai * b[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    out[i + b.size()] = static_cast<std::uint32_t>(carry);
  }
  trim(out);
  return out;
}

// Division by a single limb; returns quotient, sets rem.
Limbs div_small(const Limbs& a, std::uint32_t d, std::uint32_t& rem) {
  Limbs q(a.size(), 0);
  std::uint64_t r = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    std::uint64_t cur = (r << 32) | a[i];
    q[i] = static_cast<std::uint32_t>(cur / d);
    r = cur % d;
  }
  rem = static_cast<std::uint32_t>(r);
  trim(q);
  return q;
}

// Knuth algorithm D. Requires b.size() >= 2 and |a| >= |b|.
std::pair<Limbs, Limbs> divmod_knuth(const Limbs& a, const Limbs& b) {
  const int n = static_cast<int>(b.size());
  const int m = static_cast<int>(a.size()) - n;
  const int s = std::countl_zero(b[n - 1]);

  Limbs vn(n), un(a.size() + 1);
  for (int i = n - 1; i > 0; --i)
    vn[i] = (b[i] << s) | (s ? (b[i - 1] >> (32 - s)) : 0);
  vn[0] = b[0] << s;
  un[a.size()] = s ? (a[a.size() - 1] >> (32 - s)) : 0;
  for (std::size_t i = a.size() - 1; i > 0; --i)
    un[i] = (a[i] << s) | (s ? (a[i - 1] >> (32 - s)) : 0);
  un[0] = a[0] << s;

  Limbs q(m + 1, 0);
  for (int j = m; j >= 0; --j) {
    std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) + un[j + n - 1];
    std::uint64_t qhat = num / vn[n - 1];
    std::uint64_t rhat = num % vn[n - 1];
    while (qhat >= kBase ||
           qhat * vn[n - 2] > (rhat << 32) + un[j + n - 2]) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= kBase) break;
    }
    std::int64_t k = 0;
    std::int64_t t = 0;
    for (int i = 0; i < n; ++i) {
      std::uint64_t p = qhat * vn[i];
      t = static_cast<std::int64_t>(un[i + j]) - k -
          static_cast<std::int64_t>(p & 0xFFFFFFFFu);
      un[i + j] = static_cast<std::uint32_t>(t);
      k = static_cast<std::int64_t>(p >> 32) - (t >> 32);
    }
    t = static_cast<std::int64_t>(un[j + n]) - k;
    un[j + n] = static_cast<std::uint32_t>(t);
    q[j] = static_cast<std::uint32_t>(qhat);
    if (t < 0) {
      --q[j];
      std::uint64_t carry = 0;
      for (int i = 0; i < n; ++i) {
        std::uint64_t sum = static_cast<std::uint64_t>(un[i + j]) + vn[i] + carry;
        un[i + j] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
      }
      un[j + n] = static_cast<std::uint32_t>(un[j + n] + carry);
    }
  }

  Limbs r(n, 0);
  for (int i = 0; i < n - 1; ++i)
    r[i] = (un[i] >> s) | (s ? (static_cast<std::uint64_t>(un[i + 1]) << (32 - s)) : 0);
  r[n - 1] = un[n - 1] >> s;
  trim(q);
  trim(r);
  return {std::move(q), std::move(r)};
}

std::pair<Limbs, Limbs> divmod_mag(const Limbs& a, const Limbs& b) {
  if (b.empty()) throw std::domain_error("BigInt: division by zero");
  if (cmp(a, b) < 0) return {{}, a};
  if (b.size() == 1) {
    std::uint32_t rem = 0;
    Limbs q = div_small(a, b[0], rem);
    Limbs r;
    if (rem) r.push_back(rem);
    return {std::move(q), std::move(r)};
  }
  return divmod_knuth(a, b);
}

}  // namespace

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  // Avoid overflow on LLONG_MIN by working in unsigned space.
  unsigned long long u = v < 0 ? ~static_cast<unsigned long long>(v) + 1 : static_cast<unsigned long long>(v);
  while (u) {
    mag_.push_back(static_cast<std::uint32_t>(u));
    u >>= 32;
  }
}

BigInt::BigInt(unsigned long long v) {
  if (v == 0) return;
  sign_ = 1;
  while (v) {
    mag_.push_back(static_cast<std::uint32_t>(v));
    v >>= 32;
  }
}

void BigInt::normalize() {
  trim(mag_);
  if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const Limbs& a, const Limbs& b) { return cmp(a, b); }

BigInt BigInt::from_string(std::string_view s) {
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i >= s.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt out;
  BigInt chunk_scale(1000000000LL);
  while (i < s.size()) {
    std::size_t take = std::min<std::size_t>(9, s.size() - i);
    long long chunk = 0;
    for (std::size_t j = 0; j < take; ++j, ++i) {
      char c = s[i];
      if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
      chunk = chunk * 10 + (c - '0');
    }
    long long scale = 1;
    for (std::size_t j = 0; j < take; ++j) scale *= 10;
    out = out * BigInt(scale) + BigInt(chunk);
  }
  (void)chunk_scale;
  if (neg && !out.is_zero()) out.sign_ = -1;
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  if (out.sign_ < 0) out.sign_ = 1;
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  BigInt out;
  if (a.sign_ == b.sign_) {
    out.mag_ = add(a.mag_, b.mag_);
    out.sign_ = a.sign_;
  } else {
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      out.mag_ = sub(a.mag_, b.mag_);
      out.sign_ = a.sign_;
    } else {
      out.mag_ = sub(b.mag_, a.mag_);
      out.sign_ = b.sign_;
    }
  }
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  BigInt out;
  out.mag_ = mul(a.mag_, b.mag_);
  out.sign_ = a.sign_ * b.sign_;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& o) { return *this = *this + o; }
BigInt& BigInt::operator-=(const BigInt& o) { return *this = *this - o; }
BigInt& BigInt::operator*=(const BigInt& o) { return *this = *this * o; }

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
  auto [qm, rm] = divmod_mag(a.mag_, b.mag_);
  BigInt q, r;
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  return {std::move(q), std::move(r)};
}

BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).first; }
BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).second; }

BigInt BigInt::divexact(const BigInt& a, const BigInt& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("BigInt::divexact: not divisible");
  return q;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a.abs(), y = b.abs();
  while (!y.is_zero()) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

BigInt BigInt::pow(const BigInt& base, unsigned exp) {
  BigInt out(1);
  BigInt b = base;
  while (exp) {
    if (exp & 1) out *= b;
    b *= b;
    exp >>= 1;
  }
  return out;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
  if (sign_ != o.sign_) return sign_ <=> o.sign_;
  int c = cmp_mag(mag_, o.mag_) * sign_;
  return c <=> 0;
}

std::string BigInt::to_string() const {
  if (sign_ == 0) return "0";
  Limbs work = mag_;
  std::string digits;
  while (!work.empty()) {
    std::uint32_t rem = 0;
    work = div_small(work, 1000000000u, rem);
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

std::size_t BigInt::digit_count() const {
  std::string s = to_string();
  return s.size() - (sign_ < 0 ? 1 : 0);
}

}  // namespace linext
