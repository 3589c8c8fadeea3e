#include <mutex>
#include <vector>

#include "gammamin/errors.hpp"
#include "gammamin/rational.hpp"
#include "gammamin/specfun.hpp"

namespace gammamin {

namespace {

// Append-only cache of B_0, B_1, B_2, ... keyed by index. Entries are never
// mutated once written; reads take the same lock as the extending writer so
// the container is free to reallocate.
class BernoulliCache {
 public:
  std::vector<Rational> take(int max_index) {
    std::lock_guard<std::mutex> lock(mutex_);
    extend(max_index);
    return std::vector<Rational>(values_.begin(), values_.begin() + max_index + 1);
  }

 private:
  void extend(int max_index) {
    if (values_.empty()) {
      values_.emplace_back(1);  // B_0
    }
    for (int m = static_cast<int>(values_.size()); m <= max_index; ++m) {
      // sum_{j=0}^{m} C(m+1, j) B_j = 0  for m >= 1.
      Rational sum(0);
      for (int j = 0; j < m; ++j) {
        sum += Rational(binomial(static_cast<unsigned long>(m) + 1,
                                 static_cast<unsigned long>(j))) *
               values_[static_cast<size_t>(j)];
      }
      Rational b = -sum / Rational(static_cast<long>(m) + 1);
      b.canonicalize();
      values_.push_back(b);
    }
  }

  std::mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliCache& cache() {
  static BernoulliCache instance;
  return instance;
}

}  // namespace

std::vector<Rational> bernoulli_numbers(int count) {
  if (count < 1) throw DomainError("bernoulli_numbers: count must be >= 1");
  return cache().take(2 * count);
}

}  // namespace gammamin
