#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace teicp {

/// Flat indexing of non-decreasing index tuples (multisets) of a fixed
/// length over {1,...,dim}. Tuples are ranked in colexicographic order,
/// so a tensor symmetric in `length` indices stores one value per rank.
class MultisetIndexer {
 public:
  MultisetIndexer(int dim, int length);

  int dim() const { return dim_; }
  int length() const { return length_; }

  /// Number of distinct non-decreasing tuples, C(dim+length-1, length).
  std::size_t size() const { return size_; }

  /// Rank of a sorted non-decreasing tuple with 1-based indices.
  std::size_t rank(std::span<const int> sorted) const;

  /// Resets `t` to the first tuple (1,1,...,1).
  void first(std::vector<int>& t) const;

  /// Advances `t` to the next non-decreasing tuple; false past the last.
  bool next(std::vector<int>& t) const;

  /// Number of distinct permutations of a sorted tuple: L! / prod(mult_k!).
  static std::uint64_t permutation_count(std::span<const int> sorted);

 private:
  int dim_;
  int length_;
  std::size_t size_;
  // binom_[a * (length_+1) + k] = C(a, k), a in [0, dim+length-1].
  std::vector<std::uint64_t> binom_;
};

/// Inserts `value` into the sorted buffer `tuple` keeping it sorted.
void sorted_insert(std::vector<int>& tuple, int value);

}  // namespace teicp
