#pragma once

#include <vector>

#include "teicp/tensor.hpp"
#include "teicp/types.hpp"

namespace teicp {
namespace oracles {

/// Brute-force evaluation of (A x^{m-1})_i by summing all n^{m-1} terms per
/// component, independent of the canonical-storage contraction it checks.
/// Guarded to n^m <= 1e7.
Vector naive_apply(const GeneralTensor& a, const Vector& x);

/// One complementarity eigenpair found by support enumeration.
struct ParetoSolution {
  double lambda = 0.0;
  Vector x;                  // ||x|| = 1, zero off the support
  Vector w;                  // (lambda B - A) x
  std::vector<int> support;  // 0-based, strictly positive components
};

/// All solutions of the matrix (order-2) problem by enumerating the 2^n - 1
/// nonempty supports and solving the generalized eigenproblem of each pair
/// of principal submatrices. Keeps real eigenpairs with lambda > 0 whose
/// eigenvector is strictly positive on the support (boundary-degenerate
/// vectors belong to a smaller support) and whose w is nonnegative off it.
/// Requires n <= 12.
std::vector<ParetoSolution> matrix_pareto_enumerate(const Matrix& a, const Matrix& b,
                                                    double pos_tol = 1e-9);

struct PowerMethodResult {
  double lambda = 0.0;
  Vector x;  // positive, ||x|| = 1
  int iterations = 0;
};

/// Largest H-eigenvalue of an irreducible nonnegative tensor by the
/// componentwise power iteration y = A x^{m-1}, x <- y^{1/(m-1)} normalized.
/// lambda is bracketed by min/max of y_i / x_i^{m-1}; iteration stops when
/// the bracket width drops below tol relative to the eigenvalue scale.
PowerMethodResult nonneg_power_method(const GeneralTensor& a, double tol = 1e-10,
                                      int max_iter = 10000);

}  // namespace oracles
}  // namespace teicp
