#pragma once

#include <vector>

#include "teicp/rng.hpp"
#include "teicp/solver.hpp"
#include "teicp/tensor.hpp"

namespace teicp {
namespace harness {

/// Random symmetric tensor: each canonical entry is the symmetrized mean of
/// independent uniform [-1, 1] draws, one per distinct permutation of its
/// index tuple; the leading diagonal entry a_{1...1} is then reset to 0.5
/// so the problem is solvable.
SymmetricTensor random_symmetric_instance(int order, int dim, Rng& rng);

/// Dense tensor with i.i.d. uniform (0, 1) entries, no symmetrization.
GeneralTensor random_nonneg_instance(int order, int dim, Rng& rng);

/// Start with x uniform (0,1) componentwise then normalized to the unit
/// sphere, and t standard normal (resampled in the measure-zero case t = 0).
Iterate random_start(int dim, Rng& rng);

/// x = e/||e|| with t matched to the generalized Rayleigh quotient,
/// t = sqrt(A x^m / B x^m). Falls back to t = 1 when the quotient is not
/// positive (only possible for sign-indefinite A).
Iterate canonical_start(const Problem& p);

struct DistinctSolution {
  double lambda = 0.0;
  Vector x;
  Vector w;
  int hit_count = 0;
  double mean_iterations = 0.0;
  double mean_time_s = 0.0;
};

struct MultistartReport {
  std::vector<DistinctSolution> distinct_solutions;
  int failure_count = 0;
  int total_starts = 0;
  // Failure taxonomy; the three buckets sum to failure_count.
  int stationary_count = 0;
  int max_iterations_count = 0;
  int degenerate_t_count = 0;
};

/// Dedup thresholds matching four-decimal reporting precision.
inline constexpr double kClusterLambdaTol = 1e-4;
inline constexpr double kClusterXTol = 1e-3;

/// Runs `starts` solves from random starts and clusters the solutions:
/// two solutions coincide when |lambda1 - lambda2| <= 1e-4 and
/// ||x1 - x2||_inf <= 1e-3. Deterministic for a fixed seed.
MultistartReport multistart(const Problem& p, int starts, const SolverConfig& cfg, Rng& rng);

struct SuccessRateTable {
  int order = 0;
  int dim = 0;
  std::vector<int> budgets;
  std::vector<double> rates;  // fraction of instances solved within budget
  int instances = 0;
};

/// For each random symmetric instance, records the first start index that
/// produced a solution; an instance counts as a success for budget b when
/// that index is <= b. Budgets share one nested stream of starts, so the
/// rate is nondecreasing in the budget by construction.
SuccessRateTable success_rate_experiment(int order, int dim, std::vector<int> budgets,
                                         int instances, const SolverConfig& cfg, Rng& rng);

struct NonnegSample {
  double lambda = 0.0;
  int iterations = 0;
  bool success = false;
  double time_s = 0.0;
};

struct NonnegExperiment {
  int order = 0;
  int dim = 0;
  int success_count = 0;
  double mean_iterations = 0.0;
  double mean_lambda = 0.0;
  double mean_time_s = 0.0;
  std::vector<NonnegSample> samples;
};

/// Random nonnegative instances with B the diagonal identity, solved from
/// the canonical start. Success requires a certified solution with strictly
/// positive eigenvector (the unique-solution regime for irreducible
/// nonnegative tensors).
NonnegExperiment nonneg_experiment(int order, int dim, int samples,
                                   const SolverConfig& cfg, Rng& rng);

}  // namespace harness
}  // namespace teicp
