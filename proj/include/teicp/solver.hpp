#pragma once

#include <string>
#include <vector>

#include "teicp/jacobian.hpp"
#include "teicp/residual.hpp"
#include "teicp/types.hpp"

namespace teicp {

enum class SolveStatus {
  Solution,               // ||H|| <= eps with |t| above the degeneracy gate
  StationaryNotSolution,  // line search stalled or the gradient vanished
  MaxIterations,
  DegenerateT,            // ||H|| <= eps but t ~ 0: a lambda = 0 point
};

std::string to_string(SolveStatus s);

struct SolverConfig {
  double eps = 1e-6;        // residual tolerance on ||H||
  double rho = 1e-10;       // descent-test coefficient
  double p = 2.1;           // descent-test exponent, > 2
  double beta = 1e-4;       // Armijo slope fraction, in (0, 1/2)
  double tau = 0.95;        // penalized FB weight used when building problems
  int max_iter = 1000;
  double kappa_max = 1e10;  // ill-conditioning threshold on kappa(G)
  double min_step = 0x1p-50;  // smallest Armijo step before declaring failure
};

struct IterationRecord {
  double lambda;   // t^2 after the step
  Vector x;
  double residual; // ||H|| after the step
  double alpha;    // accepted step length
};

struct SolveReport {
  SolveStatus status = SolveStatus::MaxIterations;
  double lambda = 0.0;
  Vector x;
  Vector w;
  int iterations = 0;
  std::vector<double> residual_history;  // ||H(z_k)||, starting at z_0
  std::vector<double> step_history;      // alpha_k per accepted step
  int fallback_count = 0;                // gradient steps taken
  int s3_degeneracy_events = 0;
  std::vector<IterationRecord> trace;    // per-step state for table output
};

struct NewtonDirection {
  Vector d;
  bool used_fallback = false;
};

/// Direction for one step: solves G d = -H by partial-pivoted LU; falls
/// back to -grad Psi when G is ill-conditioned, the solve degenerates, or
/// the descent test grad^T d <= -rho ||d||^p fails.
NewtonDirection newton_direction(const Problem& p, const Iterate& z, const SolverConfig& cfg);

struct LineSearchResult {
  bool ok = false;
  double alpha = 0.0;
};

/// Smallest alpha = 2^-i with Psi(z + alpha d) <= psi0 + beta alpha dir_deriv.
/// dir_deriv must be negative; failure below cfg.min_step reports !ok.
LineSearchResult line_search(const Problem& p, const Iterate& z, const Vector& d,
                             double psi0, double dir_deriv, const SolverConfig& cfg);

SolveReport solve(const Problem& p, const Iterate& z0, const SolverConfig& cfg = {});

struct Certification {
  bool ok = false;
  double min_x = 0.0;
  double min_w = 0.0;
  double complementarity = 0.0;  // |x^T w|
  double norm_error = 0.0;       // | ||x|| - 1 |
  double lambda = 0.0;
};

/// Checks the complementarity conditions 0 <= x  _|_  (lambda B - A) x^{m-1} >= 0
/// together with lambda > 0 and ||x|| = 1, all at the given tolerance.
Certification certify_solution(const Problem& p, double lambda, const Vector& x,
                               double tol = 1e-6);

}  // namespace teicp
