#include "teicp/solver.hpp"

#include <Eigen/LU>

#include <cmath>
#include <stdexcept>

namespace teicp {

namespace {

constexpr double kDegenerateTGate = 1e-8;

struct DirectionChoice {
  Vector d;
  double dir_deriv = 0.0;  // grad^T d
  bool used_fallback = false;
};

DirectionChoice choose_direction(const JacobianAssembly& ja, const Vector& h,
                                 const Vector& grad, const SolverConfig& cfg) {
  DirectionChoice out;
  bool newton_ok = false;
  if (ja.condition_estimate < cfg.kappa_max) {
    Vector d = ja.G.partialPivLu().solve(-h);
    if (d.allFinite() && d.squaredNorm() > 0.0) {
      const double gd = grad.dot(d);
      if (gd <= -cfg.rho * std::pow(d.norm(), cfg.p)) {
        out.d = std::move(d);
        out.dir_deriv = gd;
        newton_ok = true;
      }
    }
  }
  if (!newton_ok) {
    out.d = -grad;
    out.dir_deriv = -grad.squaredNorm();
    out.used_fallback = true;
  }
  return out;
}

}  // namespace

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solution: return "solution";
    case SolveStatus::StationaryNotSolution: return "stationary_not_solution";
    case SolveStatus::MaxIterations: return "max_iterations";
    case SolveStatus::DegenerateT: return "degenerate_t";
  }
  return "unknown";
}

NewtonDirection newton_direction(const Problem& p, const Iterate& z, const SolverConfig& cfg) {
  const JacobianAssembly ja = assemble(p, z, assembly_tau(p.ncp()));
  const Vector h = eval_H(p, z);
  const Vector grad = ja.G.transpose() * h;
  DirectionChoice choice = choose_direction(ja, h, grad, cfg);
  return {std::move(choice.d), choice.used_fallback};
}

LineSearchResult line_search(const Problem& p, const Iterate& z, const Vector& d,
                             double psi0, double dir_deriv, const SolverConfig& cfg) {
  if (!(dir_deriv < 0.0))
    throw std::invalid_argument("line_search: direction is not a descent direction");
  const Vector z0 = to_z(z);
  double alpha = 1.0;
  while (alpha >= cfg.min_step) {
    const Iterate trial = from_z(z0 + alpha * d);
    const double psi = eval_Psi(p, trial);
    if (psi <= psi0 + cfg.beta * alpha * dir_deriv) return {true, alpha};
    alpha *= 0.5;
  }
  return {false, alpha};
}

SolveReport solve(const Problem& p, const Iterate& z0, const SolverConfig& cfg) {
  SolveReport rep;
  Iterate z = z0;
  Vector h = eval_H(p, z);
  double resid = h.norm();
  rep.residual_history.push_back(resid);

  const double tau = assembly_tau(p.ncp());
  int k = 0;
  while (true) {
    if (resid <= cfg.eps) {
      rep.status = std::abs(z.t) > kDegenerateTGate ? SolveStatus::Solution
                                                    : SolveStatus::DegenerateT;
      break;
    }
    if (k >= cfg.max_iter) {
      rep.status = SolveStatus::MaxIterations;
      break;
    }

    const JacobianAssembly ja = assemble(p, z, tau);
    rep.s3_degeneracy_events += ja.s3_degenerate_count;
    const Vector grad = ja.G.transpose() * h;
    DirectionChoice choice = choose_direction(ja, h, grad, cfg);
    if (choice.used_fallback) {
      ++rep.fallback_count;
      if (choice.dir_deriv == 0.0) {
        // Stationary point of the merit function that is not a root.
        rep.status = SolveStatus::StationaryNotSolution;
        break;
      }
    }

    const double psi0 = 0.5 * resid * resid;
    const LineSearchResult ls = line_search(p, z, choice.d, psi0, choice.dir_deriv, cfg);
    if (!ls.ok) {
      rep.status = SolveStatus::StationaryNotSolution;
      break;
    }

    z = from_z(to_z(z) + ls.alpha * choice.d);
    h = eval_H(p, z);
    const double next = h.norm();
    // Armijo acceptance forces a strict merit decrease, hence a monotone
    // residual history; a violation means the step logic is broken.
    if (next > resid)
      throw std::logic_error("solve: residual increased along an accepted step");
    resid = next;
    ++k;
    rep.residual_history.push_back(resid);
    rep.step_history.push_back(ls.alpha);
    rep.trace.push_back({z.t * z.t, z.x, resid, ls.alpha});
  }

  rep.iterations = k;
  rep.lambda = z.t * z.t;
  rep.x = z.x;
  rep.w = eval_F(p, z);
  return rep;
}

Certification certify_solution(const Problem& p, double lambda, const Vector& x, double tol) {
  Certification cert;
  cert.lambda = lambda;
  if (lambda <= 0.0) return cert;
  const double t = std::sqrt(lambda);
  const Vector w = eval_F(p, {x, t});
  cert.min_x = x.minCoeff();
  cert.min_w = w.minCoeff();
  cert.complementarity = std::abs(x.dot(w));
  cert.norm_error = std::abs(x.norm() - 1.0);
  cert.ok = cert.min_x >= -tol && cert.min_w >= -tol && cert.complementarity <= tol &&
            cert.norm_error <= tol;
  return cert;
}

}  // namespace teicp
