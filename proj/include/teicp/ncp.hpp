#pragma once

#include <utility>

namespace teicp {

enum class NcpFamily { Min, FischerBurmeister, PenalizedFB };

/// Choice of NCP function: phi(a,b) = 0 iff a >= 0, b >= 0, ab = 0.
/// The penalized Fischer-Burmeister variant carries its weight tau in (0,1).
struct NcpKind {
  NcpFamily family = NcpFamily::PenalizedFB;
  double tau = 0.95;  // only meaningful for PenalizedFB

  static NcpKind min() { return {NcpFamily::Min, 0.0}; }
  static NcpKind fischer_burmeister() { return {NcpFamily::FischerBurmeister, 0.0}; }
  static NcpKind penalized_fb(double tau);
};

/// Weight used when building generalized-Jacobian rows: 1 collapses the
/// penalized formulas to the plain Fischer-Burmeister case.
double assembly_tau(const NcpKind& kind);

/// Selection of a single element at the nonsmooth points. The defaults fix
/// a deterministic element: (sigma, eta) = (0, 0) at the origin, subgradient
/// 0 for x_+ at x = 0, and the midpoint for the min-function tie a = b.
struct SubgradientSelection {
  double sigma = 0.0;       // origin selection, ||(sigma, eta)|| <= 1
  double eta = 0.0;
  double plus_at_zero = 0.0;  // element of [0,1]
  double min_tie = 0.5;       // element of [0,1] for phi_min at a = b
};

double ncp_eval(const NcpKind& kind, double a, double b);

/// An element (v_a, v_b) of the generalized gradient of phi at (a, b).
std::pair<double, double> ncp_subgradient(const NcpKind& kind, double a, double b,
                                          const SubgradientSelection& sel = {});

}  // namespace teicp
