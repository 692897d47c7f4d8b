#ifndef TOPGEO_LORENTZ_EULER_HPP
#define TOPGEO_LORENTZ_EULER_HPP

#include <array>
#include <cmath>

#include "topgeo/core/cx.hpp"
#include "topgeo/core/dual.hpp"
#include "topgeo/core/errors.hpp"
#include "topgeo/core/mat.hpp"

namespace topgeo::lorentz {

// Six Euler angles on SO(3,1): theta[0..2] rotations, theta[3..5] boost rapidities.
struct EulerAngles {
  Vec<double, 6> theta{};

  double& operator[](int i) { return theta[i]; }
  const double& operator[](int i) const { return theta[i]; }

  bool finite() const {
    for (double t : theta)
      if (!std::isfinite(t)) return false;
    return true;
  }
};

inline constexpr Mat<double, 4, 4> minkowski() {
  Mat<double, 4, 4> g;
  g(0, 0) = -1.0;
  g(1, 1) = g(2, 2) = g(3, 3) = 1.0;
  return g;
}

// Real so(3,1) generators acting on vectors. J3 rotates x into y; K1 mixes t and x.
// Basis order {J1,J2,J3,K1,K2,K3} matches the angle ordering.
inline const std::array<Mat<double, 4, 4>, 6>& generators4() {
  static const std::array<Mat<double, 4, 4>, 6> gen = [] {
    std::array<Mat<double, 4, 4>, 6> g{};
    g[0](3, 2) = 1.0;
    g[0](2, 3) = -1.0;
    g[1](1, 3) = 1.0;
    g[1](3, 1) = -1.0;
    g[2](2, 1) = 1.0;
    g[2](1, 2) = -1.0;
    g[3](0, 1) = 1.0;
    g[3](1, 0) = 1.0;
    g[4](0, 2) = 1.0;
    g[4](2, 0) = 1.0;
    g[5](0, 3) = 1.0;
    g[5](3, 0) = 1.0;
    return g;
  }();
  return gen;
}

// exp(t * generators4()[axis]) in closed form
template <class S>
Mat<S, 4, 4> factor(int axis, const S& t) {
  auto m = Mat<S, 4, 4>::identity();
  if (axis < 3) {
    S c = cos(t), s = sin(t);
    // plane of rotation for J1,J2,J3: (2,3)->(y,z), (3,1), (1,2)
    static constexpr int plane[3][2] = {{2, 3}, {3, 1}, {1, 2}};
    int i = plane[axis][0], j = plane[axis][1];
    m(i, i) = c;
    m(j, j) = c;
    m(j, i) = s;
    m(i, j) = -s;
  } else {
    S ch = cosh(t), sh = sinh(t);
    int k = axis - 2;
    m(0, 0) = ch;
    m(k, k) = ch;
    m(0, k) = sh;
    m(k, 0) = sh;
  }
  return m;
}

// Lambda(theta) = prod_a exp(theta^a G_a), jet-capable
template <class S>
Mat<S, 4, 4> lorentz_matrix(const S* theta) {
  Mat<S, 4, 4> m = factor(0, theta[0]);
  for (int a = 1; a < 6; ++a) m = m * factor(a, theta[a]);
  return m;
}

template <class S>
Mat<S, 4, 4> lorentz_matrix_inverse(const S* theta) {
  Mat<S, 4, 4> m = factor(5, -theta[5]);
  for (int a = 4; a >= 0; --a) m = m * factor(a, -theta[a]);
  return m;
}

inline Mat<double, 4, 4> lorentz_from_euler(const EulerAngles& ang) {
  if (!ang.finite()) throw DomainError("non-finite Euler angles");
  return lorentz_matrix(ang.theta.data());
}

// max |Lambda^T G Lambda - G|
inline double orthogonality_defect(const Mat<double, 4, 4>& lam) {
  auto g = minkowski();
  return max_abs(lam.transposed() * g * lam - g);
}

// ---------------------------------------------------------------------------
// SL(2,C) double cover. Rotations exp(-i t sigma_k/2), boosts exp(+t sigma_k/2);
// with these signs A sigma_a A^dag = Lambda^mu_a sigma_mu factor by factor.

template <class S>
using CMat2 = Mat<Cx<S>, 2, 2>;

template <class S>
CMat2<S> sl2c_factor(int axis, const S& t) {
  CMat2<S> m;
  if (axis < 3) {
    S c = cos(t * 0.5), s = sin(t * 0.5);
    Cx<S> ms = {S(0.0), -s};  // -i sin(t/2)
    switch (axis) {
      case 0:  // sigma_x
        m(0, 0) = Cx<S>(c);
        m(1, 1) = Cx<S>(c);
        m(0, 1) = ms;
        m(1, 0) = ms;
        break;
      case 1:  // sigma_y
        m(0, 0) = Cx<S>(c);
        m(1, 1) = Cx<S>(c);
        m(0, 1) = Cx<S>(-s);
        m(1, 0) = Cx<S>(s);
        break;
      default:  // sigma_z
        m(0, 0) = {c, -s};
        m(1, 1) = {c, s};
        break;
    }
  } else {
    S ch = cosh(t * 0.5), sh = sinh(t * 0.5);
    switch (axis - 3) {
      case 0:
        m(0, 0) = Cx<S>(ch);
        m(1, 1) = Cx<S>(ch);
        m(0, 1) = Cx<S>(sh);
        m(1, 0) = Cx<S>(sh);
        break;
      case 1:
        m(0, 0) = Cx<S>(ch);
        m(1, 1) = Cx<S>(ch);
        m(0, 1) = {S(0.0), -sh};
        m(1, 0) = {S(0.0), sh};
        break;
      default:
        m(0, 0) = Cx<S>(ch + sh);
        m(1, 1) = Cx<S>(ch - sh);
        break;
    }
  }
  return m;
}

template <class S>
CMat2<S> sl2c_matrix(const S* theta) {
  CMat2<S> m = sl2c_factor(0, theta[0]);
  for (int a = 1; a < 6; ++a) m = m * sl2c_factor(a, theta[a]);
  return m;
}

template <class S>
CMat2<S> sl2c_matrix_inverse(const S* theta) {
  CMat2<S> m = sl2c_factor(5, -theta[5]);
  for (int a = 4; a >= 0; --a) m = m * sl2c_factor(a, -theta[a]);
  return m;
}

inline Mat<Cxd, 2, 2> sl2c_from_euler(const EulerAngles& ang) {
  if (!ang.finite()) throw DomainError("non-finite Euler angles");
  return sl2c_matrix(ang.theta.data());
}

// ---------------------------------------------------------------------------
// Invariant frame: Omega_alpha = (d_alpha Lambda) Lambda^{-1} = Ad(prefix_alpha) G_alpha,
// xi^a_alpha its expansion in the generator basis.

template <class S>
struct Frame {
  std::array<Mat<S, 4, 4>, 6> omega;
  Mat<S, 6, 6> xi;  // xi(a, alpha)
};

template <class S>
Frame<S> frame(const S* theta) {
  Frame<S> f;
  auto pref = Mat<S, 4, 4>::identity();
  auto ipref = Mat<S, 4, 4>::identity();
  const auto& gen = generators4();
  for (int a = 0; a < 6; ++a) {
    Mat<S, 4, 4> ga;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) ga(i, j) = S(gen[a](i, j));
    f.omega[a] = pref * ga * ipref;
    pref = pref * factor(a, theta[a]);
    ipref = factor(a, -theta[a]) * ipref;
  }
  // generator-basis readout: rotation coefficients from the spatial skew block,
  // boost coefficients from the 0k symmetric block
  for (int a = 0; a < 6; ++a) {
    const auto& om = f.omega[a];
    f.xi(0, a) = om(3, 2);
    f.xi(1, a) = om(1, 3);
    f.xi(2, a) = om(2, 1);
    f.xi(3, a) = om(0, 1);
    f.xi(4, a) = om(0, 2);
    f.xi(5, a) = om(0, 3);
  }
  return f;
}

struct InvariantFrame {
  std::array<Mat<double, 4, 4>, 6> omega;
  Mat<double, 6, 6> xi;
  double det_xi = 0.0;
};

inline InvariantFrame invariant_frame(const EulerAngles& ang, double det_tol = 1e-10) {
  if (!ang.finite()) throw DomainError("non-finite Euler angles");
  auto f = frame(ang.theta.data());
  InvariantFrame out{f.omega, f.xi, determinant(f.xi)};
  if (std::abs(out.det_xi) < det_tol) throw SingularChart(out.det_xi);
  return out;
}

// ---------------------------------------------------------------------------
// Group-block metric g_alphabeta = sign * a^2 * tr(Omega_alpha Omega_beta).
// Default sign = -1 makes the rotation block positive-definite, diag(+2a^2)
// at the identity, matching the stated (+,+,+,-,-,-) signature; sign = +1 is
// the literal trace form (rotations negative).

inline constexpr double kDefaultSign = -1.0;

template <class S>
Mat<S, 6, 6> group_metric(const S* theta, double a_len, double sign = kDefaultSign) {
  auto f = frame(theta);
  Mat<S, 6, 6> g;
  double s_a2 = sign * a_len * a_len;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      S tr = S(0.0);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) tr = tr + f.omega[i](r, c) * f.omega[j](c, r);
      g(i, j) = tr * s_a2;
      g(j, i) = g(i, j);
    }
  return g;
}

inline Mat<double, 6, 6> group_metric(const EulerAngles& ang, double a_len,
                                      double sign = kDefaultSign) {
  invariant_frame(ang);  // SingularChart propagates
  return group_metric(ang.theta.data(), a_len, sign);
}

// ---------------------------------------------------------------------------
// Left translation Lambda -> exp(X) Lambda in the Euler chart. Used by the
// bi-invariance checks; continuation along exp(tX) plus a Gauss-Newton polish.

inline Mat<double, 4, 4> exp_so31(const Vec<double, 6>& x_coeffs, int terms = 30) {
  Mat<double, 4, 4> xm;
  const auto& gen = generators4();
  for (int a = 0; a < 6; ++a) xm = xm + gen[a] * x_coeffs[a];
  auto out = Mat<double, 4, 4>::identity();
  auto pow = Mat<double, 4, 4>::identity();
  double fact = 1.0;
  for (int k = 1; k <= terms; ++k) {
    pow = pow * xm;
    fact *= k;
    out = out + pow * (1.0 / fact);
  }
  return out;
}

// Ad(h) in the generator basis: (Ad h) G_b = h G_b h^{-1} = sum_a Ad(a,b) G_a
inline Mat<double, 6, 6> adjoint_matrix(const Mat<double, 4, 4>& h) {
  auto g = minkowski();
  auto hinv = g * h.transposed() * g;  // Lorentz inverse
  Mat<double, 6, 6> ad;
  const auto& gen = generators4();
  for (int b = 0; b < 6; ++b) {
    auto m = h * gen[b] * hinv;
    ad(0, b) = m(3, 2);
    ad(1, b) = m(1, 3);
    ad(2, b) = m(2, 1);
    ad(3, b) = m(0, 1);
    ad(4, b) = m(0, 2);
    ad(5, b) = m(0, 3);
  }
  return ad;
}

// Solve Lambda(theta') = exp(X) Lambda(theta). Throws SingularChart if the
// continuation path crosses a chart degeneracy.
inline EulerAngles left_translate_angles(const Vec<double, 6>& x_coeffs, const EulerAngles& start,
                                         int rk_steps = 64) {
  EulerAngles th = start;
  auto deriv = [&x_coeffs](const EulerAngles& cur) {
    auto f = frame(cur.theta.data());
    Lu<6> lu(f.xi);
    if (lu.singular || std::abs(lu.det()) < 1e-10) throw SingularChart(lu.det());
    return lu.solve(x_coeffs);
  };
  double h = 1.0 / rk_steps;
  for (int s = 0; s < rk_steps; ++s) {
    auto add = [&th](const Vec<double, 6>& d, double w) {
      EulerAngles out = th;
      for (int i = 0; i < 6; ++i) out[i] += w * d[i];
      return out;
    };
    auto k1 = deriv(th);
    auto k2 = deriv(add(k1, 0.5 * h));
    auto k3 = deriv(add(k2, 0.5 * h));
    auto k4 = deriv(add(k3, h));
    for (int i = 0; i < 6; ++i) th[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  // Gauss-Newton polish on vec(Lambda(theta') - target)
  auto target = exp_so31(x_coeffs) * lorentz_matrix(start.theta.data());
  for (int it = 0; it < 8; ++it) {
    // residual and Jacobian via duals
    Mat<double, 6, 6> jtj;
    Vec<double, 6> jtr{};
    double rnorm = 0.0;
    std::array<Mat<double, 4, 4>, 6> cols;
    auto lam = lorentz_matrix(th.theta.data());
    for (int d = 0; d < 6; ++d) {
      Dual<double> q[6];
      for (int i = 0; i < 6; ++i) q[i] = {th[i], i == d ? 1.0 : 0.0};
      auto lj = lorentz_matrix(q);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) cols[d](i, j) = lj(i, j).b;
    }
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double r = lam(i, j) - target(i, j);
        rnorm += r * r;
        for (int d = 0; d < 6; ++d) jtr[d] += cols[d](i, j) * r;
        for (int d = 0; d < 6; ++d)
          for (int e = 0; e < 6; ++e) jtj(d, e) += cols[d](i, j) * cols[e](i, j);
      }
    if (rnorm < 1e-28) break;
    Lu<6> lu(jtj);
    if (lu.singular) break;
    auto step = lu.solve(jtr);
    for (int i = 0; i < 6; ++i) th[i] -= step[i];
  }
  return th;
}

}  // namespace topgeo::lorentz

#endif
