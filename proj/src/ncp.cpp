#include "teicp/ncp.hpp"

#include <cmath>
#include <stdexcept>

namespace teicp {

namespace {

double fb(double a, double b) { return (a + b) - std::hypot(a, b); }

double plus(double x) { return x > 0.0 ? x : 0.0; }

double plus_subgradient(double x, const SubgradientSelection& sel) {
  if (x < 0.0) return 0.0;
  if (x > 0.0) return 1.0;
  return sel.plus_at_zero;
}

std::pair<double, double> fb_subgradient(double a, double b,
                                         const SubgradientSelection& sel) {
  const double r = std::hypot(a, b);
  if (r > 0.0) return {1.0 - a / r, 1.0 - b / r};
  return {1.0 - sel.sigma, 1.0 - sel.eta};
}

}  // namespace

NcpKind NcpKind::penalized_fb(double tau) {
  if (!(tau > 0.0 && tau < 1.0))
    throw std::invalid_argument("penalized FB weight must lie strictly in (0,1)");
  return {NcpFamily::PenalizedFB, tau};
}

double assembly_tau(const NcpKind& kind) {
  return kind.family == NcpFamily::PenalizedFB ? kind.tau : 1.0;
}

double ncp_eval(const NcpKind& kind, double a, double b) {
  switch (kind.family) {
    case NcpFamily::Min:
      return a - plus(a - b);
    case NcpFamily::FischerBurmeister:
      return fb(a, b);
    case NcpFamily::PenalizedFB:
      return kind.tau * fb(a, b) + (1.0 - kind.tau) * plus(a) * plus(b);
  }
  return 0.0;
}

std::pair<double, double> ncp_subgradient(const NcpKind& kind, double a, double b,
                                          const SubgradientSelection& sel) {
  switch (kind.family) {
    case NcpFamily::Min: {
      if (a < b) return {1.0, 0.0};
      if (a > b) return {0.0, 1.0};
      return {1.0 - sel.min_tie, sel.min_tie};
    }
    case NcpFamily::FischerBurmeister:
      return fb_subgradient(a, b, sel);
    case NcpFamily::PenalizedFB: {
      const auto [va, vb] = fb_subgradient(a, b, sel);
      if (a == 0.0 && b == 0.0) return {kind.tau * va, kind.tau * vb};
      const double pa = plus(b) * plus_subgradient(a, sel);
      const double pb = plus(a) * plus_subgradient(b, sel);
      return {kind.tau * va + (1.0 - kind.tau) * pa,
              kind.tau * vb + (1.0 - kind.tau) * pb};
    }
  }
  return {0.0, 0.0};
}

}  // namespace teicp
