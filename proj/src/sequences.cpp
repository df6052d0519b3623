#include "linext/sequences.hpp"

#include <mutex>

#include "linext/errors.hpp"

namespace linext::sequences {

BigInt factorial(int n) {
  if (n < 0) throw RangeError("factorial: negative argument");
  static std::mutex mu;
  static std::vector<BigInt> table{BigInt(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= n) {
    table.push_back(table.back() * BigInt(static_cast<long long>(table.size())));
  }
  return table[n];
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  return BigInt::divexact(factorial(n), factorial(k) * factorial(n - k));
}

BigInt multinomial2(int n, int a, int b) {
  if (a < 0 || b < 0 || a + b > n) return BigInt(0);
  return BigInt::divexact(factorial(n), factorial(a) * factorial(b) * factorial(n - a - b));
}

std::vector<std::vector<BigInt>> boustrophedon_triangle(int upto) {
  std::vector<std::vector<BigInt>> t(upto + 1);
  t[0] = {BigInt(1)};
  for (int m = 1; m <= upto; ++m) {
    t[m].assign(m + 1, BigInt(0));
    for (int k = 1; k <= m; ++k) t[m][k] = t[m][k - 1] + t[m - 1][m - k];
  }
  return t;
}

std::vector<BigInt> euler_numbers(int upto) {
  if (upto < 0) throw RangeError("euler_numbers: negative bound");
  auto t = boustrophedon_triangle(upto);
  std::vector<BigInt> out(upto + 1);
  for (int m = 0; m <= upto; ++m) out[m] = t[m][m];
  return out;
}

BigInt euler_number(int n) { return euler_numbers(n)[n]; }

BigInt entringer_prefix(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw RangeError("entringer_prefix: out of domain");
  auto e = euler_numbers(n);
  BigInt out(0);
  for (int i = 0; 2 * i + 1 <= k; ++i) {
    BigInt term = binomial(k, 2 * i + 1) * e[n - 2 * i - 1];
    out += (i % 2 == 0) ? term : -term;
  }
  return out;
}

BigInt entringer(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw RangeError("entringer: out of domain");
  if (k == n) {
    if (n == 1) return BigInt(1);
    // The closed form's validity stops at k = n-1; the last entry is pinned
    // by the row total, and equals 0 for n >= 2.
    return euler_number(n) - entringer_prefix(n, n - 1);
  }
  return entringer_prefix(n, k) - (k >= 2 ? entringer_prefix(n, k - 1) : BigInt(0));
}

Fgh fgh_polynomials(int n, int k) {
  if (n < 1 || n % 2 == 0) throw RangeError("fgh_polynomials: n must be odd");
  int m = (n - 1) / 2;
  if (k < 0 || k > m + 1) throw RangeError("fgh_polynomials: k out of range");
  auto e = euler_numbers(n);
  Fgh out{BigInt(0), BigInt(0), BigInt(0)};
  for (int i = 1; i <= k; ++i) {
    out.f += binomial(n - 1, 2 * i - 2) * e[2 * i - 2] * e[n - 2 * i + 1];
    for (int j = k + 1; j <= m + 1; ++j) {
      out.g += multinomial2(n - 2, 2 * i - 2, 2 * j - 2 * i - 1) * e[2 * i - 2] *
               e[2 * j - 2 * i - 1] * e[n - 2 * j + 1];
    }
    for (int j = i + 1; j <= k; ++j) {
      out.h += BigInt(2) * multinomial2(n - 2, 2 * i - 2, 2 * j - 2 * i - 1) *
               e[2 * i - 2] * e[2 * j - 2 * i - 1] * e[n - 2 * j + 1];
    }
  }
  return out;
}

bool is_log_concave(const std::vector<BigInt>& p) {
  int n = static_cast<int>(p.size());
  for (const auto& v : p) {
    if (v.sign() < 0) return false;
  }
  int first = -1, last = -1;
  for (int i = 0; i < n; ++i) {
    if (!p[i].is_zero()) {
      if (first < 0) first = i;
      last = i;
    }
  }
  for (int i = first >= 0 ? first : 0; i >= 0 && i <= last; ++i) {
    if (p[i].is_zero()) return false;  // internal zero
  }
  for (int i = 1; i + 1 < n; ++i) {
    if (p[i] * p[i] < p[i - 1] * p[i + 1]) return false;
  }
  return true;
}

namespace {

void require_log_concave(const std::vector<BigInt>& p) {
  if (!is_log_concave(p))
    throw NotLogConcave("sequence is not log-concave with contiguous support");
}

}  // namespace

bool suffix_sums_log_concave(const std::vector<BigInt>& p) {
  require_log_concave(p);
  std::vector<BigInt> s(p.size());
  BigInt acc(0);
  for (std::size_t i = p.size(); i-- > 0;) {
    acc += p[i];
    s[i] = acc;
  }
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] * s[i] < s[i - 1] * s[i + 1]) return false;
  }
  return true;
}

bool first_two_lemma(const std::vector<BigInt>& p) {
  require_log_concave(p);
  if (p.size() < 2) return true;
  BigInt total(0);
  for (const auto& v : p) total += v;
  return p[0] * (total - p[0]) <= p[1] * total;
}

bool second_moment_lemma(const std::vector<BigInt>& p) {
  require_log_concave(p);
  BigInt s0(0), s1(0), s2(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    long long k = static_cast<long long>(i) + 1;
    s0 += p[i];
    s1 += BigInt(k) * p[i];
    s2 += BigInt(k * k) * p[i];
  }
  return s0 * s2 <= BigInt(2) * s1 * s1;
}

}  // namespace linext::sequences
