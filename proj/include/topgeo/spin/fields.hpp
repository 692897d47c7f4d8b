#ifndef TOPGEO_SPIN_FIELDS_HPP
#define TOPGEO_SPIN_FIELDS_HPP

#include "topgeo/core/dual.hpp"
#include "topgeo/core/mat.hpp"
#include "topgeo/geometry/types.hpp"
#include "topgeo/lorentz/euler.hpp"

namespace topgeo::spin {

// External electromagnetic data. Conventions, fixed here once:
//   A_mu = (-phi_scalar, A_spatial),  F_mn = d_m A_n - d_n A_m,
//   E_k = F_{k0},  H_k = (1/2) eps_{kij} F_{ij}.
// Uniform fields use A_0 = E.x, A = H x r / 2; the plane-wave kind is
// A_mu = eps_mu sin(k.x).
struct FieldConfig {
  enum class Kind { none, uniform, plane_wave };
  Kind kind = Kind::none;
  Vec<double, 3> e0{};   // uniform electric
  Vec<double, 3> h0{};   // uniform magnetic
  Vec<double, 4> eps{};  // plane-wave polarization (covariant components)
  Vec<double, 4> k{};    // plane-wave covector

  static FieldConfig none() { return {}; }
  static FieldConfig uniform(const Vec<double, 3>& e, const Vec<double, 3>& h) {
    FieldConfig f;
    f.kind = Kind::uniform;
    f.e0 = e;
    f.h0 = h;
    return f;
  }
  static FieldConfig plane_wave(const Vec<double, 4>& eps, const Vec<double, 4>& k) {
    FieldConfig f;
    f.kind = Kind::plane_wave;
    f.eps = eps;
    f.k = k;
    return f;
  }

  bool is_uniform() const { return kind != Kind::plane_wave; }

  template <class S>
  void a_mu(const S* x, S* out) const {
    switch (kind) {
      case Kind::none:
        for (int i = 0; i < 4; ++i) out[i] = S(0.0);
        break;
      case Kind::uniform:
        out[0] = x[1] * e0[0] + x[2] * e0[1] + x[3] * e0[2];
        out[1] = (x[3] * h0[1] - x[2] * h0[2]) * 0.5;
        out[2] = (x[1] * h0[2] - x[3] * h0[0]) * 0.5;
        out[3] = (x[2] * h0[0] - x[1] * h0[1]) * 0.5;
        break;
      case Kind::plane_wave: {
        S ph = x[0] * k[0] * 0.0;
        for (int i = 0; i < 4; ++i) ph = ph + x[i] * k[i];
        S s = sin(ph);
        for (int i = 0; i < 4; ++i) out[i] = s * eps[i];
        break;
      }
    }
  }

  // F_mn = d_m A_n - d_n A_m by exact differentiation of a_mu
  Mat<double, 4, 4> f_at(const Vec<double, 4>& x) const {
    Mat<double, 4, 4> f;
    Mat<double, 4, 4> da;
    for (int m = 0; m < 4; ++m) {
      Dual<double> xd[4], av[4];
      for (int i = 0; i < 4; ++i) xd[i] = {x[i], i == m ? 1.0 : 0.0};
      a_mu(xd, av);
      for (int n = 0; n < 4; ++n) da(m, n) = av[n].b;
    }
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) f(m, n) = da(m, n) - da(n, m);
    return f;
  }

  Vec<double, 3> electric_at(const Vec<double, 4>& x) const {
    auto f = f_at(x);
    return {f(1, 0), f(2, 0), f(3, 0)};
  }

  Vec<double, 3> magnetic_at(const Vec<double, 4>& x) const {
    auto f = f_at(x);
    return {f(2, 3), f(3, 1), f(1, 2)};
  }

  // the six group-direction field components F_a = (H, E) at x
  template <class S>
  void f6(const S* x, S* out) const {
    if (kind == Kind::uniform) {
      for (int i = 0; i < 3; ++i) {
        out[i] = S(h0[i]);
        out[3 + i] = S(e0[i]);
      }
      return;
    }
    if (kind == Kind::none) {
      for (int i = 0; i < 6; ++i) out[i] = S(0.0);
      return;
    }
    // derivatives of a_mu w.r.t. x with S-valued base point
    Mat<S, 4, 4> da;
    for (int m = 0; m < 4; ++m) {
      Dual<S> xd[4], av[4];
      for (int i = 0; i < 4; ++i) xd[i] = {x[i], S(i == m ? 1.0 : 0.0)};
      a_mu(xd, av);
      for (int n = 0; n < 4; ++n) da(m, n) = av[n].b;
    }
    out[0] = da(2, 3) - da(3, 2);
    out[1] = da(3, 1) - da(1, 3);
    out[2] = da(1, 2) - da(2, 1);
    out[3] = da(1, 0) - da(0, 1);
    out[4] = da(2, 0) - da(0, 2);
    out[5] = da(3, 0) - da(0, 3);
  }

  // covariant A_i on the configuration space: (A_mu(x), a xi^a_alpha(theta) F_a(x))
  template <class S>
  void a_cov(const S* q, double a_len, S* out) const {
    a_mu(q, out);
    if (kind == Kind::none) {
      for (int al = 0; al < 6; ++al) out[4 + al] = S(0.0);
      return;
    }
    S f[6];
    f6(q, f);
    auto fr = lorentz::frame(q + 4);
    for (int al = 0; al < 6; ++al) {
      S acc = S(0.0);
      for (int b = 0; b < 6; ++b) acc = acc + fr.xi(b, al) * f[b];
      out[4 + al] = acc * a_len;
    }
  }
};

inline Vec<double, 10> em_lift(const FieldConfig& fields, const ConfigPoint& q,
                               const PhysicalConstants& pc) {
  lorentz::invariant_frame(q.theta);  // SingularChart propagates
  auto qq = q.coords();
  Vec<double, 10> out{};
  fields.a_cov(qq.data(), pc.a, out.data());
  return out;
}

}  // namespace topgeo::spin

#endif
