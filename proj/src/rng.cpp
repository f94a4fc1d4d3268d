#include "teicp/rng.hpp"

#include <cmath>
#include <numbers>

namespace teicp {

double Rng::uniform01() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::uniform_open01() {
  double u;
  do {
    u = uniform01();
  } while (u == 0.0);
  return u;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double Rng::normal() {
  const double u1 = uniform_open01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace teicp
