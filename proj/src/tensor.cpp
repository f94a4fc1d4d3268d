#include "teicp/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace teicp {

namespace {

void check_order_dim(int order, int dim) {
  if (order < 2) throw std::invalid_argument("tensor order must be >= 2");
  if (dim < 1) throw std::invalid_argument("tensor dim must be >= 1");
}

void check_vector_dim(const Vector& x, int dim, const char* what) {
  if (x.size() != dim) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

std::vector<int> sorted_copy(std::span<const int> idx, int order, int dim) {
  if (static_cast<int>(idx.size()) != order)
    throw std::invalid_argument("index tuple length does not match tensor order");
  std::vector<int> s(idx.begin(), idx.end());
  for (int v : s)
    if (v < 1 || v > dim) throw std::out_of_range("tensor index out of range");
  std::sort(s.begin(), s.end());
  return s;
}

constexpr double kMaxDenseEntries = 5e7;

}  // namespace

// ---------------------------------------------------------------------------
// SymmetricTensor

SymmetricTensor::SymmetricTensor(int order, int dim)
    : order_(order), dim_(dim), full_((check_order_dim(order, dim), dim), order) {
  vals_.assign(full_.size(), 0.0);
}

double SymmetricTensor::entry(std::span<const int> idx) const {
  const auto s = sorted_copy(idx, order_, dim_);
  return vals_[full_.rank(s)];
}

void SymmetricTensor::set_entry(std::span<const int> idx, double value) {
  const auto s = sorted_copy(idx, order_, dim_);
  vals_[full_.rank(s)] = value;
}

Vector SymmetricTensor::apply(const Vector& x) const {
  check_vector_dim(x, dim_, "SymmetricTensor::apply");
  Vector out = Vector::Zero(dim_);
  const MultisetIndexer trail(dim_, order_ - 1);
  std::vector<int> beta;
  std::vector<int> key(order_);
  trail.first(beta);
  do {
    double mono = 1.0;
    for (int b : beta) mono *= x[b - 1];
    const double weight =
        static_cast<double>(MultisetIndexer::permutation_count(beta)) * mono;
    if (weight == 0.0) continue;
    for (int i = 1; i <= dim_; ++i) {
      key.assign(beta.begin(), beta.end());
      sorted_insert(key, i);
      out[i - 1] += vals_[full_.rank(key)] * weight;
    }
  } while (trail.next(beta));
  return out;
}

double SymmetricTensor::scalar(const Vector& x) const {
  check_vector_dim(x, dim_, "SymmetricTensor::scalar");
  double acc = 0.0;
  std::vector<int> t;
  full_.first(t);
  std::size_t r = 0;
  do {
    const double v = vals_[r++];
    if (v == 0.0) continue;
    double mono = 1.0;
    for (int i : t) mono *= x[i - 1];
    acc += v * static_cast<double>(MultisetIndexer::permutation_count(t)) * mono;
  } while (full_.next(t));
  return acc;
}

GeneralTensor SymmetricTensor::dense() const {
  GeneralTensor out(order_, dim_);
  std::vector<int> idx(order_, 1);
  std::vector<int> sorted(order_);
  for (;;) {
    sorted.assign(idx.begin(), idx.end());
    std::sort(sorted.begin(), sorted.end());
    out.set_entry(idx, vals_[full_.rank(sorted)]);
    int pos = order_ - 1;
    while (pos >= 0 && idx[pos] == dim_) idx[pos--] = 1;
    if (pos < 0) break;
    ++idx[pos];
  }
  return out;
}

// ---------------------------------------------------------------------------
// GeneralTensor

GeneralTensor::GeneralTensor(int order, int dim) : order_(order), dim_(dim) {
  check_order_dim(order, dim);
  double size = 1.0;
  for (int k = 0; k < order; ++k) size *= dim;
  if (size > kMaxDenseEntries)
    throw std::invalid_argument("GeneralTensor: dense storage too large");
  vals_.assign(static_cast<std::size_t>(size), 0.0);
}

std::size_t GeneralTensor::flat(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != order_)
    throw std::invalid_argument("index tuple length does not match tensor order");
  std::size_t f = 0;
  for (int v : idx) {
    if (v < 1 || v > dim_) throw std::out_of_range("tensor index out of range");
    f = f * dim_ + static_cast<std::size_t>(v - 1);
  }
  return f;
}

Vector GeneralTensor::apply(const Vector& x) const {
  check_vector_dim(x, dim_, "GeneralTensor::apply");
  Vector out = Vector::Zero(dim_);
  std::size_t trail_count = 1;
  for (int k = 1; k < order_; ++k) trail_count *= static_cast<std::size_t>(dim_);
  for (std::size_t tr = 0; tr < trail_count; ++tr) {
    double mono = 1.0;
    std::size_t digits = tr;
    for (int k = 1; k < order_; ++k) {
      mono *= x[digits % static_cast<std::size_t>(dim_)];
      digits /= static_cast<std::size_t>(dim_);
    }
    if (mono == 0.0) continue;
    for (int i = 0; i < dim_; ++i)
      out[i] += vals_[static_cast<std::size_t>(i) * trail_count + tr] * mono;
  }
  return out;
}

double GeneralTensor::scalar(const Vector& x) const {
  return x.dot(apply(x));
}

// ---------------------------------------------------------------------------
// SemiSymmetricTensor

SemiSymmetricTensor::SemiSymmetricTensor(int order, int dim)
    : order_(order), dim_(dim), trail_((check_order_dim(order, dim), dim), order - 1) {
  vals_.assign(static_cast<std::size_t>(dim_) * trail_.size(), 0.0);
}

SemiSymmetricTensor SemiSymmetricTensor::from_symmetric(const SymmetricTensor& a) {
  SemiSymmetricTensor out(a.order(), a.dim());
  std::vector<int> beta;
  std::vector<int> key(a.order());
  out.trail_.first(beta);
  std::size_t r = 0;
  do {
    for (int i = 1; i <= a.dim(); ++i) {
      key.assign(beta.begin(), beta.end());
      sorted_insert(key, i);
      out.vals_[static_cast<std::size_t>(i - 1) * out.trail_.size() + r] = a.entry(key);
    }
    ++r;
  } while (out.trail_.next(beta));
  return out;
}

double SemiSymmetricTensor::entry(int i, std::span<const int> trailing) const {
  if (i < 1 || i > dim_) throw std::out_of_range("leading index out of range");
  const auto s = sorted_copy(trailing, order_ - 1, dim_);
  return vals_[static_cast<std::size_t>(i - 1) * trail_.size() + trail_.rank(s)];
}

void SemiSymmetricTensor::set_entry(int i, std::span<const int> trailing, double value) {
  if (i < 1 || i > dim_) throw std::out_of_range("leading index out of range");
  const auto s = sorted_copy(trailing, order_ - 1, dim_);
  vals_[static_cast<std::size_t>(i - 1) * trail_.size() + trail_.rank(s)] = value;
}

Vector SemiSymmetricTensor::apply(const Vector& x) const {
  check_vector_dim(x, dim_, "SemiSymmetricTensor::apply");
  Vector out = Vector::Zero(dim_);
  std::vector<int> beta;
  trail_.first(beta);
  std::size_t r = 0;
  const std::size_t t = trail_.size();
  do {
    double mono = 1.0;
    for (int b : beta) mono *= x[b - 1];
    const double weight =
        static_cast<double>(MultisetIndexer::permutation_count(beta)) * mono;
    if (weight != 0.0) {
      for (int i = 0; i < dim_; ++i)
        out[i] += vals_[static_cast<std::size_t>(i) * t + r] * weight;
    }
    ++r;
  } while (trail_.next(beta));
  return out;
}

Matrix SemiSymmetricTensor::jacobian(const Vector& x) const {
  check_vector_dim(x, dim_, "SemiSymmetricTensor::jacobian");
  Matrix jac = Matrix::Zero(dim_, dim_);
  std::vector<int> beta;
  trail_.first(beta);
  std::size_t r = 0;
  const std::size_t t = trail_.size();
  const int len = order_ - 1;
  do {
    const double count =
        static_cast<double>(MultisetIndexer::permutation_count(beta));
    // d(x^beta)/dx_j = mult_j(beta) * prod over beta with one j removed.
    for (int pos = 0; pos < len;) {
      const int j = beta[pos];
      int mult = 1;
      while (pos + mult < len && beta[pos + mult] == j) ++mult;
      double reduced = 1.0;
      for (int q = 0; q < len; ++q)
        if (q != pos) reduced *= x[beta[q] - 1];
      const double d = count * static_cast<double>(mult) * reduced;
      if (d != 0.0) {
        for (int i = 0; i < dim_; ++i)
          jac(i, j - 1) += vals_[static_cast<std::size_t>(i) * t + r] * d;
      }
      pos += mult;
    }
    ++r;
  } while (trail_.next(beta));
  return jac;
}

double SemiSymmetricTensor::scalar(const Vector& x) const {
  return x.dot(apply(x));
}

SemiSymmetricTensor semi_symmetrize(const GeneralTensor& a) {
  const int m = a.order();
  const int n = a.dim();
  SemiSymmetricTensor out(m, n);
  const MultisetIndexer trail(n, m - 1);
  std::vector<double> sums(static_cast<std::size_t>(n) * trail.size(), 0.0);
  std::vector<std::uint64_t> counts(trail.size(), 0);

  std::vector<int> idx(m, 1);
  std::vector<int> sorted(m - 1);
  const auto& vals = a.values();
  std::size_t trail_count = 1;
  for (int k = 1; k < m; ++k) trail_count *= static_cast<std::size_t>(n);
  std::size_t flat = 0;
  for (int i = 0; i < n; ++i) {
    // idx[1..m-1] runs over all trailing tuples in row-major order.
    std::fill(idx.begin() + 1, idx.end(), 1);
    for (std::size_t tr = 0; tr < trail_count; ++tr, ++flat) {
      sorted.assign(idx.begin() + 1, idx.end());
      std::sort(sorted.begin(), sorted.end());
      const std::size_t r = trail.rank(sorted);
      sums[static_cast<std::size_t>(i) * trail.size() + r] += vals[flat];
      if (i == 0) ++counts[r];
      int pos = m - 1;
      while (pos >= 1 && idx[pos] == n) idx[pos--] = 1;
      if (pos >= 1) ++idx[pos];
    }
  }

  std::vector<int> beta;
  trail.first(beta);
  std::size_t r = 0;
  do {
    for (int i = 1; i <= n; ++i)
      out.set_entry(i, beta,
                    sums[static_cast<std::size_t>(i - 1) * trail.size() + r] /
                        static_cast<double>(counts[r]));
    ++r;
  } while (trail.next(beta));
  return out;
}

// ---------------------------------------------------------------------------
// Structured operators

UnitSphereIdentityOperator::UnitSphereIdentityOperator(int order, int dim)
    : order_(order), dim_(dim) {
  check_order_dim(order, dim);
  if (order % 2 != 0)
    throw std::invalid_argument("UnitSphereIdentityOperator requires even order");
}

Vector UnitSphereIdentityOperator::apply(const Vector& x) const {
  check_vector_dim(x, dim_, "UnitSphereIdentityOperator::apply");
  if (order_ == 2) return x;
  return std::pow(x.norm(), order_ - 2) * x;
}

Matrix UnitSphereIdentityOperator::jacobian(const Vector& x) const {
  check_vector_dim(x, dim_, "UnitSphereIdentityOperator::jacobian");
  if (order_ == 2) return Matrix::Identity(dim_, dim_);
  const double nrm = x.norm();
  Matrix jac = std::pow(nrm, order_ - 2) * Matrix::Identity(dim_, dim_);
  if (order_ == 4) {
    jac += 2.0 * x * x.transpose();
  } else if (nrm > 0.0) {
    jac += (order_ - 2) * std::pow(nrm, order_ - 4) * x * x.transpose();
  }
  return jac;
}

double UnitSphereIdentityOperator::scalar(const Vector& x) const {
  check_vector_dim(x, dim_, "UnitSphereIdentityOperator::scalar");
  return std::pow(x.norm(), order_);
}

DiagonalIdentityOperator::DiagonalIdentityOperator(int order, int dim)
    : order_(order), dim_(dim) {
  check_order_dim(order, dim);
}

Vector DiagonalIdentityOperator::apply(const Vector& x) const {
  check_vector_dim(x, dim_, "DiagonalIdentityOperator::apply");
  Vector out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = std::pow(x[i], order_ - 1);
  return out;
}

Matrix DiagonalIdentityOperator::jacobian(const Vector& x) const {
  check_vector_dim(x, dim_, "DiagonalIdentityOperator::jacobian");
  Matrix jac = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    jac(i, i) = (order_ - 1) * std::pow(x[i], order_ - 2);
  return jac;
}

double DiagonalIdentityOperator::scalar(const Vector& x) const {
  check_vector_dim(x, dim_, "DiagonalIdentityOperator::scalar");
  double acc = 0.0;
  for (int i = 0; i < dim_; ++i) acc += std::pow(x[i], order_);
  return acc;
}

}  // namespace teicp
