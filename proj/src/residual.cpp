#include "teicp/residual.hpp"

#include <stdexcept>

namespace teicp {

Vector to_z(const Iterate& it) {
  Vector z(it.x.size() + 1);
  z.head(it.x.size()) = it.x;
  z[it.x.size()] = it.t;
  return z;
}

Iterate from_z(const Vector& z) {
  Iterate it;
  it.x = z.head(z.size() - 1);
  it.t = z[z.size() - 1];
  return it;
}

Problem::Problem(SemiSymmetricTensor a, std::shared_ptr<const TensorOperator> b, NcpKind ncp)
    : a_(std::move(a)), b_(std::move(b)), ncp_(ncp) {
  if (!b_) throw std::invalid_argument("Problem: operator B is required");
  if (a_.order() != b_->order() || a_.dim() != b_->dim())
    throw std::invalid_argument("Problem: A and B must share order and dimension");
  if (ncp_.family == NcpFamily::Min)
    throw std::invalid_argument("Problem: the min NCP function is not usable by the solver");
}

Vector eval_F(const Problem& p, const Iterate& z) {
  return z.t * z.t * p.B().apply(z.x) - p.A().apply(z.x);
}

Vector eval_H(const Problem& p, const Iterate& z) {
  const int n = p.dim();
  if (z.x.size() != n) throw std::invalid_argument("eval_H: dimension mismatch");
  const Vector f = eval_F(p, z);
  Vector h(n + 1);
  for (int i = 0; i < n; ++i) h[i] = ncp_eval(p.ncp(), z.x[i], f[i]);
  h[n] = z.x.squaredNorm() - 1.0;
  return h;
}

double eval_Psi(const Problem& p, const Iterate& z) {
  return 0.5 * eval_H(p, z).squaredNorm();
}

Vector grad_Psi(const Problem& p, const Iterate& z, const Matrix& G) {
  return G.transpose() * eval_H(p, z);
}

}  // namespace teicp
