#pragma once

#include <vector>

#include "linext/bigint.hpp"
#include "linext/counting.hpp"
#include "linext/poset.hpp"
#include "linext/verdict.hpp"

namespace linext::atlas {

/// Symmetric integer matrix with exact entries.
struct IntMatrix {
  int d = 0;
  std::vector<BigInt> a;  // row-major, d*d

  const BigInt& at(int i, int j) const { return a[static_cast<std::size_t>(i) * d + j]; }
  BigInt& at(int i, int j) { return a[static_cast<std::size_t>(i) * d + j]; }
  bool symmetric() const;
};

/// The 2(n-1)-dimensional anchored count matrix of a poset: two copies of
/// the ground set minus the anchor ("down" positions 0..n-2 and "up"
/// positions n-1..2n-3, both indexing `elems`), with blocks filled by the
/// counts of extensions that pin the extreme values and give the anchor the
/// value k+1, k, or k-1 as appropriate.
struct AtlasMatrix {
  int n = 0;
  int anchor = -1;
  int k = 0;
  int d = 0;
  std::vector<int> elems;  // poset elements except the anchor, ascending
  Mask min_down = 0;       // minimals of P - anchor (poset coordinates)
  Mask max_up = 0;         // maximals of P - anchor
  IntMatrix m;

  int down_pos(int elem) const;  // position of elem's down copy
  int up_pos(int elem) const;
};

/// Builds M(P, anchor, k) for 2 <= k <= n-1. Asserts at build time that each
/// signed diagonal entry equals its nonnegative count form (a mismatch would
/// mean a counting bug).
AtlasMatrix build_atlas(const Poset& p, int anchor, int k,
                        counting::Path path = counting::Path::Auto,
                        const counting::Limits& lim = {});

/// Coefficients c[0..d] of det(xI - M), c[d] = 1, by the exact
/// Faddeev-LeVerrier recurrence (integer divisions are exact).
std::vector<BigInt> char_poly(const IntMatrix& m);

/// Positive roots (with multiplicity) of a real-rooted integer polynomial:
/// strip zero roots, then count sign variations of the coefficients.
int count_positive_roots(const std::vector<BigInt>& coeffs);

struct HypReport {
  bool is_hyperbolic = false;
  int positive_eigenvalues = 0;
  std::vector<BigInt> char_poly;
};

/// Exact test for "at most one positive eigenvalue". Throws NotSymmetric.
HypReport check_hyp(const IntMatrix& m);

BigInt bilinear(const IntMatrix& m, const std::vector<BigInt>& u,
                const std::vector<BigInt>& v);

/// Characteristic vector (over the matrix index space) of a set of down or
/// up copies.
std::vector<BigInt> indicator_down(const AtlasMatrix& m, Mask elems);
std::vector<BigInt> indicator_up(const AtlasMatrix& m, Mask elems);

/// The four row-sum identities tying matrix rows to anchored counts; true
/// when all hold exactly for every applicable row.
bool check_row_identities(const Poset& p, int anchor, int k,
                          counting::Path path = counting::Path::Auto,
                          const counting::Limits& lim = {});

// Hyperbolic-matrix consequences, evaluated exactly on integer vectors.
ineq::Verdict lemma_quart(const IntMatrix& m, const std::vector<BigInt>& x,
                          const std::vector<BigInt>& y, const std::vector<BigInt>& z);
ineq::Verdict lemma_tri(const IntMatrix& m, const std::vector<BigInt>& x,
                        const std::vector<BigInt>& y, const std::vector<BigInt>& z);
ineq::Verdict lemma_half(const IntMatrix& m, const std::vector<BigInt>& x,
                         const std::vector<BigInt>& y, const std::vector<BigInt>& z);
/// At least two of the three cyclic comparisons must hold.
ineq::Verdict lemma_two_of_three(const IntMatrix& m, const std::vector<BigInt>& x,
                                 const std::vector<BigInt>& y, const std::vector<BigInt>& z);
/// det of the 3x3 pairing matrix is nonnegative.
ineq::Verdict shephard_det(const IntMatrix& m, const std::vector<BigInt>& x,
                           const std::vector<BigInt>& y, const std::vector<BigInt>& z);

}  // namespace linext::atlas
