#include "teicp/jacobian.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace teicp {

namespace {

Matrix build_rows(const Iterate& z, const Vector& f, const IndexPartition& part,
                  const Matrix& jf, double tau) {
  const int n = static_cast<int>(z.x.size());
  Matrix v = Matrix::Zero(n, n + 1);
  std::vector<char> done(n, 0);

  for (int i : part.s1) {
    const double g = jf.row(i).head(n).dot(part.c);
    const double r = std::hypot(part.c[i], g);
    v.row(i) = tau * (1.0 + g / r) * jf.row(i);
    v(i, i) += tau * (1.0 + part.c[i] / r);
    done[i] = 1;
  }
  for (int i : part.s3) {
    const double g = jf.row(i).head(n).dot(part.c);
    const double w = g < 0.0 ? tau + (1.0 - tau) * z.x[i] : tau;
    v.row(i) = w * jf.row(i);
    done[i] = 1;
  }
  for (int i : part.s4) {
    const double r = std::hypot(z.x[i], f[i]);
    v.row(i) = (tau * (1.0 - f[i] / r) + (1.0 - tau) * z.x[i]) * jf.row(i);
    v(i, i) += tau * (1.0 - z.x[i] / r) + (1.0 - tau) * f[i];
    done[i] = 1;
  }
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;  // S2 and all negative components
    const double r = std::hypot(z.x[i], f[i]);
    v.row(i) = tau * (1.0 - f[i] / r) * jf.row(i);
    v(i, i) += tau * (1.0 - z.x[i] / r);
  }
  return v;
}

}  // namespace

IndexPartition classify(const Iterate& z, const Vector& f, double tol_zero) {
  if (tol_zero <= 0.0) throw std::invalid_argument("classify: tol_zero must be positive");
  const int n = static_cast<int>(z.x.size());
  IndexPartition part;
  part.c = Vector::Zero(n);
  for (int i = 0; i < n; ++i) {
    const bool x_zero = std::abs(z.x[i]) <= tol_zero;
    const bool x_pos = z.x[i] > tol_zero;
    const bool f_zero = std::abs(f[i]) <= tol_zero;
    const bool f_pos = f[i] > tol_zero;
    if (x_zero && f_zero) {
      part.s1.push_back(i);
      part.c[i] = 1.0;
    } else if (x_zero && f_pos) {
      part.s2.push_back(i);
      part.c[i] = 1.0;
    } else if (x_pos && f_zero) {
      part.s3.push_back(i);
      part.c[i] = 1.0;
    } else if (x_pos && f_pos) {
      part.s4.push_back(i);
    }
  }
  return part;
}

Matrix jacobian_F(const Problem& p, const Iterate& z) {
  const int n = p.dim();
  Matrix jf(n, n + 1);
  jf.leftCols(n) = z.t * z.t * p.B().jacobian(z.x) - p.A().jacobian(z.x);
  jf.col(n) = 2.0 * z.t * p.B().apply(z.x);
  return jf;
}

Matrix assemble_V(const Problem& p, const Iterate& z, double tau) {
  if (!(tau > 0.0 && tau <= 1.0))
    throw std::invalid_argument("assemble_V: tau must lie in (0,1]");
  const Vector f = eval_F(p, z);
  return build_rows(z, f, classify(z, f), jacobian_F(p, z), tau);
}

Matrix assemble_G(const Matrix& v, const Vector& x) {
  const auto n = v.rows();
  if (v.cols() != n + 1 || x.size() != n)
    throw std::invalid_argument("assemble_G: shape mismatch");
  Matrix g(n + 1, n + 1);
  g.topRows(n) = v;
  g.row(n).head(n) = 2.0 * x.transpose();
  g(n, n) = 0.0;
  return g;
}

double condition_estimate(const Matrix& g) {
  if (g.rows() != g.cols())
    throw std::invalid_argument("condition_estimate: matrix must be square");
  Eigen::JacobiSVD<Matrix> svd(g);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return smax / smin;
}

JacobianAssembly assemble(const Problem& p, const Iterate& z, double tau) {
  if (!(tau > 0.0 && tau <= 1.0))
    throw std::invalid_argument("assemble: tau must lie in (0,1]");
  JacobianAssembly out;
  const Vector f = eval_F(p, z);
  out.partition = classify(z, f);
  const Matrix jf = jacobian_F(p, z);
  out.V = build_rows(z, f, out.partition, jf, tau);
  out.G = assemble_G(out.V, z.x);
  out.condition_estimate = condition_estimate(out.G);
  for (int i : out.partition.s3) {
    const double g = jf.row(i).head(p.dim()).dot(out.partition.c);
    if (std::abs(g) <= kClassifyZeroTol) ++out.s3_degenerate_count;
  }
  return out;
}

}  // namespace teicp
