#ifndef TOPGEO_GEOMETRY_CLOSED_FORM_HPP
#define TOPGEO_GEOMETRY_CLOSED_FORM_HPP

#include "topgeo/core/mat.hpp"
#include "topgeo/lorentz/euler.hpp"

namespace topgeo::geom {

// Scalar curvature of the group block from structure constants alone, no
// coordinates: for a bi-invariant metric kappa on a Lie group,
// Ric(X,Y) = -B(X,Y)/4 with B the Killing form, so R = -kappa^{ab} B_ab / 4.
inline double group_scalar_curvature_closed_form(double a_len, double sign) {
  const auto& gen = lorentz::generators4();

  // structure constants [G_a, G_b] = C^c_{ab} G_c via the basis readout
  auto comp = [](const Mat<double, 4, 4>& m, int c) {
    switch (c) {
      case 0: return m(3, 2);
      case 1: return m(1, 3);
      case 2: return m(2, 1);
      case 3: return m(0, 1);
      case 4: return m(0, 2);
      default: return m(0, 3);
    }
  };
  double cst[6][6][6];
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      auto br = gen[a] * gen[b] - gen[b] * gen[a];
      for (int c = 0; c < 6; ++c) cst[c][a][b] = comp(br, c);
    }

  // Killing form B_ab = C^c_{ad} C^d_{bc}
  Mat<double, 6, 6> bform;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      double s = 0.0;
      for (int c = 0; c < 6; ++c)
        for (int d = 0; d < 6; ++d) s += cst[c][a][d] * cst[d][b][c];
      bform(a, b) = s;
    }

  // invariant metric in the generator frame: kappa_ab = sign a^2 tr(G_a G_b)
  Mat<double, 6, 6> kappa;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      double tr = 0.0;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) tr += gen[a](r, c) * gen[b](c, r);
      kappa(a, b) = sign * a_len * a_len * tr;
    }

  auto kinv = inverse(kappa);
  double r = 0.0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) r += kinv(a, b) * (-0.25) * bform(a, b);
  return r;
}

// full configuration space: flat block contributes nothing
inline double config_scalar_curvature_closed_form(double a_len, double sign) {
  return group_scalar_curvature_closed_form(a_len, sign);
}

}  // namespace topgeo::geom

#endif
