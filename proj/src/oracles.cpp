#include "teicp/oracles.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace teicp {
namespace oracles {

Vector naive_apply(const GeneralTensor& a, const Vector& x) {
  const int m = a.order();
  const int n = a.dim();
  if (x.size() != n) throw std::invalid_argument("naive_apply: dimension mismatch");
  if (std::pow(static_cast<double>(n), m) > 1e7)
    throw std::invalid_argument("naive_apply: instance too large for brute force");

  Vector out(n);
  std::vector<int> idx(m);
  for (int i = 1; i <= n; ++i) {
    double acc = 0.0;
    std::fill(idx.begin(), idx.end(), 1);
    idx[0] = i;
    for (;;) {
      double term = a.entry(idx);
      for (int k = 1; k < m; ++k) term *= x[idx[k] - 1];
      acc += term;
      int pos = m - 1;
      while (pos >= 1 && idx[pos] == n) idx[pos--] = 1;
      if (pos < 1) break;
      ++idx[pos];
    }
    out[i - 1] = acc;
  }
  return out;
}

namespace {

Matrix submatrix(const Matrix& a, const std::vector<int>& support) {
  const int k = static_cast<int>(support.size());
  Matrix s(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) s(r, c) = a(support[r], support[c]);
  return s;
}

}  // namespace

std::vector<ParetoSolution> matrix_pareto_enumerate(const Matrix& a, const Matrix& b,
                                                    double pos_tol) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n || b.rows() != n || b.cols() != n)
    throw std::invalid_argument("matrix_pareto_enumerate: square matrices of equal size required");
  if (n > 12) throw std::invalid_argument("matrix_pareto_enumerate: n must be <= 12");

  std::vector<ParetoSolution> found;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) support.push_back(i);

    const Matrix ajj = submatrix(a, support);
    const Matrix bjj = submatrix(b, support);
    Eigen::GeneralizedEigenSolver<Matrix> ges(ajj, bjj, true);
    if (ges.info() != Eigen::Success) continue;

    const auto alphas = ges.alphas();
    const auto betas = ges.betas();
    for (int e = 0; e < alphas.size(); ++e) {
      if (std::abs(betas[e]) < 1e-12) continue;  // infinite eigenvalue
      const std::complex<double> lam_c = alphas[e] / betas[e];
      if (std::abs(lam_c.imag()) > 1e-9 * std::max(1.0, std::abs(lam_c.real()))) continue;
      const double lambda = lam_c.real();
      if (lambda <= pos_tol) continue;

      Eigen::VectorXcd vc = ges.eigenvectors().col(e);
      if (vc.imag().norm() > 1e-9 * std::max(1.0, vc.real().norm())) continue;
      Vector v = vc.real();
      // Sign-normalize toward positivity on the support.
      int arg_max = 0;
      v.cwiseAbs().maxCoeff(&arg_max);
      if (v[arg_max] < 0.0) v = -v;
      v /= v.norm();
      if (v.minCoeff() < pos_tol) continue;  // not strictly positive on J

      ParetoSolution sol;
      sol.lambda = lambda;
      sol.support = support;
      sol.x = Vector::Zero(n);
      for (int r = 0; r < static_cast<int>(support.size()); ++r) sol.x[support[r]] = v[r];
      sol.w = (lambda * b - a) * sol.x;
      if (sol.w.minCoeff() < -pos_tol) continue;  // violates w >= 0 off J

      const bool duplicate =
          std::any_of(found.begin(), found.end(), [&](const ParetoSolution& s) {
            return std::abs(s.lambda - sol.lambda) <= 1e-9 &&
                   (s.x - sol.x).lpNorm<Eigen::Infinity>() <= 1e-7;
          });
      if (!duplicate) found.push_back(std::move(sol));
    }
  }

  std::sort(found.begin(), found.end(), [](const ParetoSolution& l, const ParetoSolution& r) {
    return l.lambda < r.lambda;
  });
  return found;
}

PowerMethodResult nonneg_power_method(const GeneralTensor& a, double tol, int max_iter) {
  const int m = a.order();
  const int n = a.dim();
  for (double v : a.values())
    if (v < 0.0) throw std::invalid_argument("nonneg_power_method: tensor has negative entries");

  // Independent contraction over the dense entries.
  std::size_t trail_count = 1;
  for (int k = 1; k < m; ++k) trail_count *= static_cast<std::size_t>(n);
  const auto& vals = a.values();
  const auto contract = [&](const Vector& x) {
    Vector y = Vector::Zero(n);
    for (std::size_t tr = 0; tr < trail_count; ++tr) {
      double mono = 1.0;
      std::size_t digits = tr;
      for (int k = 1; k < m; ++k) {
        mono *= x[digits % static_cast<std::size_t>(n)];
        digits /= static_cast<std::size_t>(n);
      }
      for (int i = 0; i < n; ++i)
        y[i] += vals[static_cast<std::size_t>(i) * trail_count + tr] * mono;
    }
    return y;
  };

  PowerMethodResult res;
  Vector x = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int it = 1; it <= max_iter; ++it) {
    const Vector y = contract(x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int i = 0; i < n; ++i) {
      const double ratio = y[i] / std::pow(x[i], m - 1);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    res.iterations = it;
    if (hi - lo <= tol * std::max(1.0, hi)) {
      res.lambda = 0.5 * (lo + hi);
      res.x = x;
      return res;
    }
    Vector next(n);
    for (int i = 0; i < n; ++i) next[i] = std::pow(y[i], 1.0 / (m - 1));
    x = next / next.norm();
  }
  throw std::runtime_error("nonneg_power_method: iteration budget exhausted");
}

}  // namespace oracles
}  // namespace teicp
