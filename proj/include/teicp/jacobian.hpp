#pragma once

#include <vector>

#include "teicp/residual.hpp"
#include "teicp/types.hpp"

namespace teicp {

/// Classification tolerance: components within this distance of zero are
/// treated as exactly zero when routing rows. Kept essentially at rounding
/// level; points merely near the kinks are the line search's business.
inline constexpr double kClassifyZeroTol = 1e-12;

/// Sign partition of [n] driving the row formulas. 0-based indices.
///   S1: x_i = 0, F_i = 0     S2: x_i = 0, F_i > 0
///   S3: x_i > 0, F_i = 0     S4: x_i > 0, F_i > 0
/// c_i = 1 on S1, S2, S3 and 0 elsewhere. Components with negative x_i or
/// F_i fall in no set and take the generic row.
struct IndexPartition {
  std::vector<int> s1, s2, s3, s4;
  Vector c;
};

IndexPartition classify(const Iterate& z, const Vector& f, double tol_zero = kClassifyZeroTol);

/// Jacobian of F(x,t) = (t^2 B - A) x^{m-1} as the n-by-(n+1) block
/// [(m-1)(t^2 B - A) x^{m-2} | 2 t B x^{m-1}].
Matrix jacobian_F(const Problem& p, const Iterate& z);

/// One element V of the generalized Jacobian of Phi at z, row by row from
/// the partition. tau = 1 gives the plain Fischer-Burmeister element.
Matrix assemble_V(const Problem& p, const Iterate& z, double tau);

/// Bordered matrix G = (V ; 2 x^T, 0).
Matrix assemble_G(const Matrix& v, const Vector& x);

/// kappa(G) = sigma_max / sigma_min from a full SVD; +inf when singular.
double condition_estimate(const Matrix& g);

/// Everything the Newton step needs at one iterate.
struct JacobianAssembly {
  Matrix V;
  Matrix G;
  IndexPartition partition;
  double condition_estimate = 1.0;
  /// Rows in S3 whose directional derivative along c vanished; the
  /// B-subdifferential membership claim does not cover them, so the solver
  /// surfaces the count as a diagnostic.
  int s3_degenerate_count = 0;
};

JacobianAssembly assemble(const Problem& p, const Iterate& z, double tau);

}  // namespace teicp
