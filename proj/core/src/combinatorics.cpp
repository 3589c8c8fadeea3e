#include "gammamin/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

#include "gammamin/errors.hpp"
#include "gammamin/specfun.hpp"

namespace gammamin {

int BellPartition::order() const {
  int m = 0;
  for (size_t j = 0; j < counts.size(); ++j) {
    m += static_cast<int>(j + 1) * counts[j];
  }
  return m;
}

int BellPartition::total_parts() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

int BellPartition::k0() const {
  int k = 0;
  for (size_t j = 2; j <= counts.size(); ++j) {
    k += static_cast<int>(j - 1) * counts[j - 1];
  }
  return k;
}

std::vector<Composition> enumerate_compositions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_compositions: n must be >= 1");
  std::vector<Composition> out;
  std::vector<int> parts(static_cast<size_t>(n), 0);
  // Lexicographic: position 0 runs slowest, each position takes 0..remainder.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      parts[static_cast<size_t>(pos)] = remaining;
      out.push_back(Composition{parts});
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      parts[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, n - 1);
  return out;
}

std::vector<BellPartition> enumerate_bell_partitions(int m) {
  if (m < 1) throw std::invalid_argument("enumerate_bell_partitions: m must be >= 1");
  std::vector<BellPartition> out;
  std::vector<int> counts(static_cast<size_t>(m), 0);
  // Lexicographic in (k_1, k_2, ...): k_j takes 0..remaining/j.
  auto rec = [&](auto&& self, int j, int remaining) -> void {
    if (j == m) {
      counts[static_cast<size_t>(j - 1)] = remaining / j;
      if (remaining % j == 0) out.push_back(BellPartition{counts});
      counts[static_cast<size_t>(j - 1)] = 0;
      return;
    }
    for (int kj = 0; kj * j <= remaining; ++kj) {
      counts[static_cast<size_t>(j - 1)] = kj;
      self(self, j + 1, remaining - kj * j);
    }
    counts[static_cast<size_t>(j - 1)] = 0;
  };
  rec(rec, 1, m);
  return out;
}

Integer multinomial(int n_minus_1, const Composition& parts) {
  if (n_minus_1 < 0) throw std::invalid_argument("multinomial: negative order");
  int sum = 0;
  for (int p : parts.parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
  }
  if (sum != n_minus_1) {
    throw std::invalid_argument("multinomial: parts must sum to the stated order");
  }
  Integer result = factorial(static_cast<unsigned long>(n_minus_1));
  for (int p : parts.parts) {
    if (p > 1) {
      mpz_divexact(result.get_mpz_t(), result.get_mpz_t(),
                   factorial(static_cast<unsigned long>(p)).get_mpz_t());
    }
  }
  return result;
}

BigReal reciprocal_derivative(std::span<const BigReal> g_derivs, int m) {
  if (m < 0) throw std::invalid_argument("reciprocal_derivative: negative order");
  if (g_derivs.size() < static_cast<size_t>(m) + 1) {
    throw std::invalid_argument("reciprocal_derivative: need derivatives up to order m");
  }
  const BigReal& g0 = g_derivs[0];
  if (g0.is_zero()) throw DomainError("reciprocal_derivative: g vanishes at the point");
  if (m == 0) return 1L / g0;

  int prec = g0.precision();
  for (int j = 1; j <= m; ++j) prec = std::min(prec, g_derivs[static_cast<size_t>(j)].precision());

  const Integer m_fact = factorial(static_cast<unsigned long>(m));
  BigReal total(0, prec);
  for (const BellPartition& bp : enumerate_bell_partitions(m)) {
    const int parts_total = bp.total_parts();
    // Exact weight m! (-1)^K K! / prod_j ((j!)^{k_j} k_j!).
    Rational weight(m_fact * factorial(static_cast<unsigned long>(parts_total)));
    if (parts_total % 2 != 0) weight = -weight;
    BigReal value = BigReal::from_rational(weight, prec);
    for (int j = 1; j <= m; ++j) {
      const int kj = bp.counts[static_cast<size_t>(j - 1)];
      if (kj == 0) continue;
      Rational denom(factorial(static_cast<unsigned long>(j)));
      Rational factor = Rational(1) / (Rational(factorial(static_cast<unsigned long>(kj))));
      for (int rep = 0; rep < kj; ++rep) factor /= denom;
      value = value * BigReal::from_rational(factor, prec);
      value = value * g_derivs[static_cast<size_t>(j)].pow_int(kj);
    }
    value = value / g0.pow_int(parts_total + 1);
    total = total + value;
  }
  return total;
}

std::vector<BigReal> kernel_derivatives(const BigReal& a, int max_order,
                                        const PrecisionConfig& cfg) {
  cfg.validate();
  if (a.sign() <= 0) throw DomainError("kernel_derivatives: anchor must be > 0");
  if (max_order < 0) throw std::invalid_argument("kernel_derivatives: negative order");

  // M^{(j)}(a) = j! m_j = psi^{(j+1)}(a) / (j+1).
  std::vector<BigReal> slope_derivs;
  slope_derivs.reserve(static_cast<size_t>(max_order) + 1);
  for (int j = 0; j <= max_order; ++j) {
    slope_derivs.push_back(polygamma(j + 1, a, cfg.inner()) / static_cast<long>(j + 1));
  }

  std::vector<BigReal> out;
  out.reserve(static_cast<size_t>(max_order) + 1);
  for (int j = 0; j <= max_order; ++j) {
    out.push_back(reciprocal_derivative(slope_derivs, j).round_to(cfg.digits));
  }
  return out;
}

BigReal kernel_power_derivative(std::span<const BigReal> kernel_derivs, int n) {
  if (n < 1) throw std::invalid_argument("kernel_power_derivative: n must be >= 1");
  if (kernel_derivs.size() < static_cast<size_t>(n)) {
    throw std::invalid_argument("kernel_power_derivative: insufficient derivative data");
  }
  if (n == 1) return kernel_derivs[0];

  int prec = kernel_derivs[0].precision();
  for (int j = 1; j < n; ++j) prec = std::min(prec, kernel_derivs[static_cast<size_t>(j)].precision());

  // Compositions grouped by the multiset of their entries: a partition of n-1
  // with K non-zero parts leaves n-K zero slots, and the number of orderings
  // is n! / ((n-K)! prod_j k_j!).
  const Integer n_fact = factorial(static_cast<unsigned long>(n));
  const Integer nm1_fact = factorial(static_cast<unsigned long>(n) - 1);
  BigReal total(0, prec);
  for (const BellPartition& bp : enumerate_bell_partitions(n - 1)) {
    const int parts_total = bp.total_parts();
    const int zeros = n - parts_total;

    Integer orderings = n_fact;
    mpz_divexact(orderings.get_mpz_t(), orderings.get_mpz_t(),
                 factorial(static_cast<unsigned long>(zeros)).get_mpz_t());
    Integer multi = nm1_fact;  // (n-1)! / prod_i l_i!
    BigReal value = kernel_derivs[0].pow_int(zeros);
    for (int j = 1; j <= n - 1; ++j) {
      const int kj = bp.counts[static_cast<size_t>(j - 1)];
      if (kj == 0) continue;
      mpz_divexact(orderings.get_mpz_t(), orderings.get_mpz_t(),
                   factorial(static_cast<unsigned long>(kj)).get_mpz_t());
      const Integer j_fact = factorial(static_cast<unsigned long>(j));
      for (int rep = 0; rep < kj; ++rep) {
        mpz_divexact(multi.get_mpz_t(), multi.get_mpz_t(), j_fact.get_mpz_t());
      }
      value = value * kernel_derivs[static_cast<size_t>(j)].pow_int(kj);
    }
    total = total + value * BigReal::from_integer(orderings * multi, prec);
  }
  return total;
}

}  // namespace gammamin
