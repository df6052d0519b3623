#pragma once

#include <vector>

#include "linext/bigint.hpp"

namespace linext::sequences {

BigInt factorial(int n);
BigInt binomial(int n, int k);
/// n! / (a! b! (n-a-b)!).
BigInt multinomial2(int n, int a, int b);

/// E_0..E_n (numbers of alternating permutations) by the boustrophedon
/// (Seidel) triangle; no floating point anywhere.
std::vector<BigInt> euler_numbers(int upto);
BigInt euler_number(int n);

/// Seidel triangle rows T(0..upto), row m having entries T(m,0..m) with
/// T(m,k) = T(m,k-1) + T(m-1,m-k) and T(m,m) = E_m. Serves as the
/// independent oracle for the closed forms below.
std::vector<std::vector<BigInt>> boustrophedon_triangle(int upto);

/// Closed-form alternating sum  sum_i (-1)^i C(k,2i+1) E_{n-2i-1}.
/// For 0 <= k <= n-1 this equals the number of up-down alternating
/// permutations of [n] with first entry <= k (a prefix sum of entringer()).
BigInt entringer_prefix(int n, int k);

/// E_{n,k}: up-down alternating permutations of [n] with first entry k;
/// equivalently the number of linear extensions of the n-element zigzag
/// with f(x_1) = k. Computed by differencing entringer_prefix; rows sum
/// to E_n and are log-concave in k.
BigInt entringer(int n, int k);

struct Fgh {
  BigInt f, g, h;
};

/// The three zigzag subset-count polynomials for odd n = 2m+1 and
/// 0 <= k <= m+1 (value 0 gives empty sums). With A = {x_1..x_k} among the
/// zigzag minima: F_n(k) counts extensions with 1 in f(A), G_n(k) those with
/// 1 not in f(A) and 2 in f(A), H_n(k) those with both 1,2 in f(A).
Fgh fgh_polynomials(int n, int k);

/// Log-concavity with contiguous support for a nonnegative sequence
/// (1-indexed conceptually; input is 0-based).
bool is_log_concave(const std::vector<BigInt>& p);

/// For log-concave input, verifies that the suffix sums s_k = p_k+...+p_n
/// are again log-concave. Throws NotLogConcave on invalid input.
bool suffix_sums_log_concave(const std::vector<BigInt>& p);

/// For log-concave input, verifies p_1 (p_2+...+p_n) <= p_2 (p_1+...+p_n).
/// With probabilities this is exactly Pr[Z=1] Pr[Z>1] <= Pr[Z=2].
bool first_two_lemma(const std::vector<BigInt>& p);

/// For log-concave input, verifies (sum p_i)(sum i^2 p_i) <= 2 (sum i p_i)^2.
bool second_moment_lemma(const std::vector<BigInt>& p);

}  // namespace linext::sequences
