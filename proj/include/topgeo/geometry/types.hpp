#ifndef TOPGEO_GEOMETRY_TYPES_HPP
#define TOPGEO_GEOMETRY_TYPES_HPP

#include <cmath>

#include "topgeo/core/errors.hpp"
#include "topgeo/core/mat.hpp"
#include "topgeo/lorentz/euler.hpp"

namespace topgeo {

// point q = (x^mu, theta^alpha) in the 10-D configuration space
struct ConfigPoint {
  Vec<double, 4> x{};
  lorentz::EulerAngles theta{};

  Vec<double, 10> coords() const {
    Vec<double, 10> q{};
    for (int i = 0; i < 4; ++i) q[i] = x[i];
    for (int i = 0; i < 6; ++i) q[4 + i] = theta[i];
    return q;
  }

  static ConfigPoint from(const double* q) {
    ConfigPoint p;
    for (int i = 0; i < 4; ++i) p.x[i] = q[i];
    for (int i = 0; i < 6; ++i) p.theta[i] = q[4 + i];
    return p;
  }

  bool finite() const {
    for (double v : x)
      if (!std::isfinite(v)) return false;
    return theta.finite();
  }
};

inline constexpr int kDim = 10;

struct PhysicalConstants {
  double hbar = 1.0;
  double c = 1.0;
  double m = 1.0;   // mass
  double e = 0.0;   // charge
  double a = 1.0;   // top length scale
  int n = kDim;

  // (n-2)/(4(n-1)); overridable for the guard tests that must fail
  double gamma2 = 2.0 / 9.0;

  double gamma2_exact() const { return double(n - 2) / (4.0 * (n - 1)); }
};

}  // namespace topgeo

#endif
