#pragma once

#include <span>
#include <vector>

#include "teicp/multiset.hpp"
#include "teicp/types.hpp"

namespace teicp {

class GeneralTensor;

/// Order-m, dimension-n real symmetric tensor with canonical dense storage:
/// one value per non-decreasing index tuple. Lookups with arbitrary index
/// order resolve through sorting, so the implied full tensor is invariant
/// under all index permutations.
class SymmetricTensor {
 public:
  SymmetricTensor(int order, int dim);

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t entry_count() const { return full_.size(); }

  /// Entry for any index tuple (1-based); indices are sorted internally.
  double entry(std::span<const int> idx) const;
  void set_entry(std::span<const int> idx, double value);

  /// A x^{m-1}. Each canonical entry contributes with the multinomial
  /// multiplicity of its trailing indices.
  Vector apply(const Vector& x) const;

  /// A x^m, accumulated directly over canonical entries.
  double scalar(const Vector& x) const;

  /// Dense expansion (size-guarded); useful for oracle comparisons.
  GeneralTensor dense() const;

  /// Visits every canonical (sorted tuple, value) pair in rank order.
  template <typename Fn>
  void for_each_canonical(Fn&& fn) const {
    std::vector<int> t;
    full_.first(t);
    std::size_t r = 0;
    do {
      fn(std::span<const int>(t), vals_[r++]);
    } while (full_.next(t));
  }

 private:
  int order_, dim_;
  MultisetIndexer full_;
  std::vector<double> vals_;
};

/// Order-m, dimension-n real tensor with no symmetry assumed; dense
/// row-major storage of all n^m entries.
class GeneralTensor {
 public:
  GeneralTensor(int order, int dim);

  int order() const { return order_; }
  int dim() const { return dim_; }

  double entry(std::span<const int> idx) const { return vals_[flat(idx)]; }
  void set_entry(std::span<const int> idx, double value) { vals_[flat(idx)] = value; }

  const std::vector<double>& values() const { return vals_; }
  std::vector<double>& values() { return vals_; }

  Vector apply(const Vector& x) const;
  double scalar(const Vector& x) const;

 private:
  std::size_t flat(std::span<const int> idx) const;

  int order_, dim_;
  std::vector<double> vals_;
};

/// Tensor symmetric in its trailing m-1 indices. This is the form the
/// solver consumes: the vector field A x^{m-1} and its exact Jacobian are
/// well defined, and any general tensor maps to a unique semi-symmetric
/// tensor with the same vector field.
class SemiSymmetricTensor {
 public:
  SemiSymmetricTensor(int order, int dim);

  static SemiSymmetricTensor from_symmetric(const SymmetricTensor& a);

  int order() const { return order_; }
  int dim() const { return dim_; }

  /// Entry a_{i,beta} with 1-based leading index i and trailing tuple beta
  /// (any order; sorted internally).
  double entry(int i, std::span<const int> trailing) const;
  void set_entry(int i, std::span<const int> trailing, double value);

  /// A x^{m-1}.
  Vector apply(const Vector& x) const;

  /// d(A x^{m-1})/dx = (m-1) A x^{m-2} as an n-by-n matrix.
  Matrix jacobian(const Vector& x) const;

  /// A x^m = x^T (A x^{m-1}).
  double scalar(const Vector& x) const;

 private:
  int order_, dim_;
  MultisetIndexer trail_;
  std::vector<double> vals_;  // dim_ rows of trail_.size() values
};

/// The unique semi-symmetric tensor with the same vector field as `a`,
/// obtained by averaging over permutations of the trailing indices. The
/// first index is not mixed in.
SemiSymmetricTensor semi_symmetrize(const GeneralTensor& a);

/// Positive definite map x -> B x^{m-1} with analytic Jacobian. Immutable
/// after construction; safe to share across concurrent solves.
class TensorOperator {
 public:
  virtual ~TensorOperator() = default;
  virtual int order() const = 0;
  virtual int dim() const = 0;
  virtual Vector apply(const Vector& x) const = 0;
  virtual Matrix jacobian(const Vector& x) const = 0;
  virtual double scalar(const Vector& x) const = 0;  // B x^m
};

/// B x^{m-1} = ||x||^{m-2} x, the operator form of the identity tensor:
/// it acts as the identity on the unit sphere. Requires even order.
class UnitSphereIdentityOperator final : public TensorOperator {
 public:
  UnitSphereIdentityOperator(int order, int dim);
  int order() const override { return order_; }
  int dim() const override { return dim_; }
  Vector apply(const Vector& x) const override;
  Matrix jacobian(const Vector& x) const override;
  double scalar(const Vector& x) const override;  // ||x||^m

 private:
  int order_, dim_;
};

/// (B x^{m-1})_i = x_i^{m-1}, the diagonal tensor with unit diagonal.
/// Odd orders are permitted; positive definiteness then holds only on the
/// nonnegative orthant, which is where the nonnegative problems live.
class DiagonalIdentityOperator final : public TensorOperator {
 public:
  DiagonalIdentityOperator(int order, int dim);
  int order() const override { return order_; }
  int dim() const override { return dim_; }
  Vector apply(const Vector& x) const override;
  Matrix jacobian(const Vector& x) const override;  // diag((m-1) x_i^{m-2})
  double scalar(const Vector& x) const override;    // sum x_i^m

 private:
  int order_, dim_;
};

/// Adapter exposing an explicit (semi-symmetric) tensor through the
/// operator interface. Positive definiteness is the caller's contract.
class ExplicitTensorOperator final : public TensorOperator {
 public:
  explicit ExplicitTensorOperator(SemiSymmetricTensor b) : b_(std::move(b)) {}
  int order() const override { return b_.order(); }
  int dim() const override { return b_.dim(); }
  Vector apply(const Vector& x) const override { return b_.apply(x); }
  Matrix jacobian(const Vector& x) const override { return b_.jacobian(x); }
  double scalar(const Vector& x) const override { return b_.scalar(x); }
  const SemiSymmetricTensor& tensor() const { return b_; }

 private:
  SemiSymmetricTensor b_;
};

}  // namespace teicp
