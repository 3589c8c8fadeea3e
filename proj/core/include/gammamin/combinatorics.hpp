#pragma once

#include <span>
#include <vector>

#include "gammamin/bigreal.hpp"
#include "gammamin/precision.hpp"
#include "gammamin/rational.hpp"

namespace gammamin {

// Ordered tuple (l_1..l_n) of non-negative integers with sum n-1. Indexes one
// term of the multinomial expansion of the (n-1)-th derivative of an n-th
// power of the inversion kernel.
struct Composition {
  std::vector<int> parts;

  bool operator==(const Composition&) const = default;
};

// Multiplicity form (k_1..k_m) of an integer partition: sum_j j*k_j = m.
// Indexes one term of the reciprocal-derivative sum of order m.
struct BellPartition {
  std::vector<int> counts;  // counts[j-1] = k_j for j = 1..m

  int order() const;        // m = sum_j j*k_j
  int total_parts() const;  // K = sum_j k_j
  // Bookkeeping index k_0 = k_2 + 2 k_3 + ... = sum_{j>=2} (j-1) k_j.
  int k0() const;

  bool operator==(const BellPartition&) const = default;
};

// All n-tuples of non-negative integers summing to n-1, in lexicographic
// order; there are C(2n-2, n-1) of them.
std::vector<Composition> enumerate_compositions(int n);

// All (k_1..k_m) with sum_j j*k_j = m, in lexicographic order; there are
// p(m) of them (the partition numbers 1, 2, 3, 5, 7, 11, ...).
std::vector<BellPartition> enumerate_bell_partitions(int m);

// (n-1)! / (l_1! l_2! ... l_n!), exact; parts must sum to n_minus_1.
Integer multinomial(int n_minus_1, const Composition& parts);

// m-th derivative of 1/g at a point, from g_derivs = {g, g', ..., g^{(m)}}
// evaluated there (g != 0), via the partition sum
//   sum over (k_1..k_m):  m! (-1)^K K! / g^{K+1} * prod_j (g^{(j)}/j!)^{k_j} / k_j!
// with K = sum k_j. Equals m! times the h^m coefficient of the series 1/g.
BigReal reciprocal_derivative(std::span<const BigReal> g_derivs, int m);

// Derivative values [L(a), L'(a), ..., L^{(max_order)}(a)] of the inversion
// kernel L = 1/M, where M is the digamma slope series about a > 0, computed
// through reciprocal_derivative on the derivatives of M.
std::vector<BigReal> kernel_derivatives(const BigReal& a, int max_order,
                                        const PrecisionConfig& cfg = {});

// (L^n)^{(n-1)}(a) from the kernel derivative values:
//   sum over compositions (l_1..l_n), sum l_i = n-1, of
//   multinomial(n-1; l) * prod_i L^{(l_i)}(a).
// Terms are grouped by the multiset of the l_i (a partition of n-1 in
// multiplicity form), which keeps the cost at p(n-1) products instead of
// C(2n-2, n-1). The ungrouped sum is kept as a test oracle.
BigReal kernel_power_derivative(std::span<const BigReal> kernel_derivs, int n);

}  // namespace gammamin
