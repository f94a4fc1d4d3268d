#include "teicp/multiset.hpp"

#include <algorithm>
#include <stdexcept>

namespace teicp {

namespace {

// Double-precision estimate of C(n, k), used only as an allocation guard.
double binomial_estimate(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
  return r;
}

constexpr double kMaxCanonicalEntries = 5e7;

}  // namespace

MultisetIndexer::MultisetIndexer(int dim, int length) : dim_(dim), length_(length) {
  if (dim < 1) throw std::invalid_argument("MultisetIndexer: dim must be >= 1");
  if (length < 1) throw std::invalid_argument("MultisetIndexer: length must be >= 1");
  if (binomial_estimate(dim + length - 1, length) > kMaxCanonicalEntries)
    throw std::invalid_argument("MultisetIndexer: canonical storage too large");

  const int rows = dim + length;  // a in [0, dim+length-1]
  binom_.assign(static_cast<std::size_t>(rows) * (length + 1), 0);
  for (int a = 0; a < rows; ++a) {
    binom_[static_cast<std::size_t>(a) * (length + 1)] = 1;
    for (int k = 1; k <= std::min(a, length); ++k) {
      const std::size_t up = static_cast<std::size_t>(a - 1) * (length + 1) + k;
      binom_[static_cast<std::size_t>(a) * (length + 1) + k] =
          binom_[up] + binom_[up - 1];
    }
  }
  size_ = static_cast<std::size_t>(
      binom_[static_cast<std::size_t>(dim + length - 1) * (length + 1) + length]);
}

std::size_t MultisetIndexer::rank(std::span<const int> sorted) const {
  // Map i_1 <= ... <= i_L to the strictly increasing j_k = i_k + k - 1 and
  // accumulate the colex rank sum C(j_k - 1, k).
  std::size_t r = 0;
  for (int k = 1; k <= length_; ++k) {
    const int a = sorted[k - 1] + k - 2;
    r += binom_[static_cast<std::size_t>(a) * (length_ + 1) + k];
  }
  return r;
}

void MultisetIndexer::first(std::vector<int>& t) const {
  t.assign(length_, 1);
}

bool MultisetIndexer::next(std::vector<int>& t) const {
  for (int pos = length_ - 1; pos >= 0; --pos) {
    if (t[pos] < dim_) {
      const int v = t[pos] + 1;
      for (int q = pos; q < length_; ++q) t[q] = v;
      return true;
    }
  }
  return false;
}

std::uint64_t MultisetIndexer::permutation_count(std::span<const int> sorted) {
  const int len = static_cast<int>(sorted.size());
  std::uint64_t fact = 1;
  for (int i = 2; i <= len; ++i) fact *= static_cast<std::uint64_t>(i);
  std::uint64_t denom = 1;
  int run = 1;
  for (int i = 1; i < len; ++i) {
    if (sorted[i] == sorted[i - 1]) {
      ++run;
      denom *= static_cast<std::uint64_t>(run);
    } else {
      run = 1;
    }
  }
  return fact / denom;
}

void sorted_insert(std::vector<int>& tuple, int value) {
  tuple.insert(std::upper_bound(tuple.begin(), tuple.end(), value), value);
}

}  // namespace teicp
