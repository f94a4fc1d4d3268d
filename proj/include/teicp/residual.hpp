#pragma once

#include <memory>

#include "teicp/ncp.hpp"
#include "teicp/tensor.hpp"
#include "teicp/types.hpp"

namespace teicp {

/// Solver state z = (x, t) in R^{n+1}. lambda is always reported as t^2;
/// the unit-norm constraint on x lives in the residual, not in the type.
struct Iterate {
  Vector x;
  double t = 0.0;
};

/// Packs z = (x, t) into a flat (n+1)-vector and back.
Vector to_z(const Iterate& it);
Iterate from_z(const Vector& z);

/// A complementarity eigenvalue instance: semi-symmetric A, positive
/// definite operator B of matching order/dimension, and the NCP function
/// used in the reformulation (min is valid as a function but is rejected
/// here: its merit function is not continuously differentiable, so the
/// damped Newton iteration has no descent guarantee with it).
class Problem {
 public:
  Problem(SemiSymmetricTensor a, std::shared_ptr<const TensorOperator> b, NcpKind ncp);

  const SemiSymmetricTensor& A() const { return a_; }
  const TensorOperator& B() const { return *b_; }
  std::shared_ptr<const TensorOperator> B_ptr() const { return b_; }
  const NcpKind& ncp() const { return ncp_; }
  int order() const { return a_.order(); }
  int dim() const { return a_.dim(); }

 private:
  SemiSymmetricTensor a_;
  std::shared_ptr<const TensorOperator> b_;
  NcpKind ncp_;
};

/// F(x,t) = (t^2 B - A) x^{m-1}.
Vector eval_F(const Problem& p, const Iterate& z);

/// H(z) = (phi(x_i, F_i(z)); x^T x - 1) in R^{n+1}.
Vector eval_H(const Problem& p, const Iterate& z);

/// Merit function Psi(z) = 0.5 ||H(z)||^2.
double eval_Psi(const Problem& p, const Iterate& z);

/// Gradient of Psi: G^T H(z) for any G in the generalized Jacobian of H
/// at z (the zero components of H cancel the multivalued rows, so the
/// product does not depend on the selection).
Vector grad_Psi(const Problem& p, const Iterate& z, const Matrix& G);

}  // namespace teicp
