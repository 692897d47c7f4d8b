#ifndef TOPGEO_WEYL_WEYL_HPP
#define TOPGEO_WEYL_WEYL_HPP

#include <vector>

#include "topgeo/geometry/jets.hpp"
#include "topgeo/geometry/metric.hpp"
#include "topgeo/geometry/types.hpp"

namespace topgeo::weyl {

using geom::CScalarJets;
using geom::MetricDerived;
using geom::MetricJets;
using geom::ScalarJets;

// ---- scalar field wrappers ----

template <int N>
struct PolyField {
  Poly<N> p;

  template <class S>
  S operator()(const S* q) const {
    return p.eval(q);
  }
};

template <class F>
struct LogField {
  F inner;

  template <class S>
  S operator()(const S* q) const {
    return log(inner(q));
  }
};

template <class F1, class F2>
struct SqrtProductField {  // sqrt(f1) * f2, the chi gauge rule with w = 1/2
  F1 f1;
  F2 f2;

  template <class S>
  S operator()(const S* q) const {
    return sqrt(f1(q)) * f2(q);
  }
};

struct UnitField {
  template <class S>
  S operator()(const S* q) const {
    (void)q;
    return S(1.0);
  }
};

// Weyl potential phi_i = d_i ln chi plus enough derivative data for the
// curvature forms. Curl-free by construction.
template <int N>
struct WeylPotential {
  Vec<double, N> phi{};
  Mat<double, N, N> dphi;  // dphi(k,i) = d_k phi_i, symmetric for exact potentials

  template <class F>
  static WeylPotential from_weyl_factor(const F& chi, const double* q) {
    auto lj = geom::scalar_jets<N>(LogField<F>{chi}, q);
    WeylPotential out;
    out.phi = lj.df;
    out.dphi = lj.d2f;
    return out;
  }
};

// Gamma_W^i_{jk} = {i,jk} - delta^i_j phi_k - delta^i_k phi_j + g_jk phi^i.
// This is the unique torsion-free connection with nabla g = 2 phi (x) g; it is
// gauge-invariant and its Ricci contraction reproduces the Weyl scalar below.
template <int N>
std::vector<double> weyl_connection(const MetricJets<N>& jets, const WeylPotential<N>& pot) {
  auto gam = geom::christoffel(jets);
  auto ginv = inverse(jets.g);
  Vec<double, N> phi_up{};
  for (int i = 0; i < N; ++i)
    for (int l = 0; l < N; ++l) phi_up[i] += ginv(i, l) * pot.phi[l];
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        double add = -((i == j) ? pot.phi[k] : 0.0) - ((i == k) ? pot.phi[j] : 0.0) +
                     jets.g(j, k) * phi_up[i];
        gam[std::size_t(i) * N * N + j * N + k] += add;
      }
  return gam;
}

template <int N>
struct WeylScalar {
  double value = 0.0;     // common value (phi form)
  double phi_form = 0.0;  // R + 2(n-1) div phi - (n-1)(n-2) phi.phi
  double chi_form = 0.0;  // R + 2(n-1) lap(chi)/chi - n(n-1) |dchi|^2/chi^2
  double base_scalar = 0.0;
};

template <class M, class F>
WeylScalar<M::dim> weyl_scalar_curvature(const M& metric, const F& chi, const double* q) {
  constexpr int N = M::dim;
  double c0 = value(chi(q));
  if (!(c0 > 0.0)) throw NonpositiveWeylFactor("chi <= 0");

  auto jets = geom::metric_jets(metric, q);
  MetricDerived<N> der(jets);
  double r = geom::curvature(jets).scalar;

  auto cj = geom::scalar_jets<N>(chi, q);
  auto lj = geom::scalar_jets<N>(LogField<F>{chi}, q);

  double div_phi = geom::laplace_beltrami(jets, der, lj);
  double lap_chi = geom::laplace_beltrami(jets, der, cj);
  double phi2 = 0.0, dchi2 = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      phi2 += der.ginv(i, j) * lj.df[i] * lj.df[j];
      dchi2 += der.ginv(i, j) * cj.df[i] * cj.df[j];
    }

  WeylScalar<N> out;
  out.base_scalar = r;
  out.phi_form = r + 2.0 * (N - 1) * div_phi - double(N - 1) * (N - 2) * phi2;
  out.chi_form = r + 2.0 * (N - 1) * lap_chi / cj.f - double(N) * (N - 1) * dchi2 / (cj.f * cj.f);
  out.value = out.phi_form;
  return out;
}

// scalar curvature assembled from an arbitrary (non-metric) connection:
// R = g^{jl} ( d_i Gam^i_{lj} - d_l Gam^i_{ij} + Gam^i_{im} Gam^m_{lj} - Gam^i_{lm} Gam^m_{ij} ).
// Needs connection derivatives, supplied by a callback evaluating the
// connection at shifted points (finite differences are fine here: this path is
// itself a cross-check of weyl_scalar_curvature).
template <int N, class ConnFn>
double scalar_from_connection(const Mat<double, N, N>& g, const ConnFn& conn, const double* q,
                              double h = 1e-5) {
  std::vector<double> gam = conn(q);
  std::vector<std::vector<double>> dgam(N);
  Vec<double, N> qp{};
  for (int i = 0; i < N; ++i) qp[i] = q[i];
  for (int k = 0; k < N; ++k) {
    qp[k] = q[k] + h;
    auto gp = conn(qp.data());
    qp[k] = q[k] - h;
    auto gm = conn(qp.data());
    qp[k] = q[k];
    dgam[k].resize(gp.size());
    for (std::size_t t = 0; t < gp.size(); ++t) dgam[k][t] = (gp[t] - gm[t]) / (2.0 * h);
  }
  auto at = [](const std::vector<double>& v, int i, int j, int k) {
    return v[std::size_t(i) * N * N + j * N + k];
  };
  auto ginv = inverse(g);
  double r = 0.0;
  for (int j = 0; j < N; ++j)
    for (int l = 0; l < N; ++l) {
      double ric = 0.0;
      for (int i = 0; i < N; ++i) {
        ric += at(dgam[i], i, l, j) - at(dgam[l], i, i, j);
        for (int m = 0; m < N; ++m)
          ric += at(gam, i, i, m) * at(gam, m, l, j) - at(gam, i, l, m) * at(gam, m, i, j);
      }
      r += ginv(j, l) * ric;
    }
  return r;
}

// ---- gauge transform (g, chi) -> (rho g, rho^{1/2} chi) ----

struct GaugeTransform {
  template <class M, class F, class R>
  static auto metric(const M& base, const R& rho) {
    return geom::ScaledMetric<M, R>{base, rho};
  }
  template <class F, class R>
  static auto weyl_factor(const F& chi, const R& rho) {
    return SqrtProductField<R, F>{rho, chi};
  }
};

template <class M, class F, class R>
auto gauge_transform(const M& metric, const F& chi, const R& rho, const double* q_check = nullptr) {
  if (q_check && !(value(rho(q_check)) > 0.0)) throw NonpositiveGauge("rho <= 0");
  return std::pair{geom::ScaledMetric<M, R>{metric, rho}, SqrtProductField<R, F>{rho, chi}};
}

// ---- co-covariant derivative D_i f = nabla^{Gamma_W}_i f - 2 w(f) phi_i f ----

template <int N>
Vec<double, N> co_covariant_scalar(const WeylPotential<N>& pot, const ScalarJets<N>& f, double w) {
  Vec<double, N> out{};
  for (int i = 0; i < N; ++i) out[i] = f.df[i] - 2.0 * w * pot.phi[i] * f.f;
  return out;
}

template <int N>
Mat<double, N, N> co_covariant_covector(const MetricJets<N>& jets, const WeylPotential<N>& pot,
                                        const Vec<double, N>& f, const Mat<double, N, N>& df,
                                        double w) {
  auto gam = weyl_connection(jets, pot);
  Mat<double, N, N> out;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      double v = df(i, j) - 2.0 * w * pot.phi[i] * f[j];
      for (int k = 0; k < N; ++k) v -= gam[std::size_t(k) * N * N + i * N + j] * f[k];
      out(i, j) = v;
    }
  return out;
}

// rank-2 covariant tensor, e.g. the metric itself (weight 1 under g -> rho g)
template <int N>
std::vector<double> co_covariant_tensor2(const MetricJets<N>& jets, const WeylPotential<N>& pot,
                                         const Mat<double, N, N>& f,
                                         const std::vector<double>& df, double w) {
  auto gam = weyl_connection(jets, pot);
  auto at_gam = [&gam](int i, int j, int k) { return gam[std::size_t(i) * N * N + j * N + k]; };
  std::vector<double> out(std::size_t(N) * N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        double v = df[std::size_t(i) * N * N + j * N + k] - 2.0 * w * pot.phi[i] * f(j, k);
        for (int l = 0; l < N; ++l)
          v -= at_gam(l, i, j) * f(l, k) + at_gam(l, i, k) * f(j, l);
        out[std::size_t(i) * N * N + j * N + k] = v;
      }
  return out;
}

// ---- quantum Lagrangian, both printed integrand forms ----

struct QuantumLagrangian {
  double value_eq4 = 0.0;   // -hbar sqrt(-gamma^2 Rbar gbar_ij qdot qdot)
  double value_eq16 = 0.0;  // -hbar sqrt(R_W g_ij qdot qdot)
  bool eq4_imaginary = false;
  bool eq16_imaginary = false;
  double radicand_eq4 = 0.0;
  double radicand_eq16 = 0.0;
  double radicand_ratio = 0.0;  // eq4 / eq16; analytically -gamma^2
};

template <class M, class F>
QuantumLagrangian lagrangian_quantum(const PhysicalConstants& pc, const M& metric, const F& chi,
                                     const double* q, const Vec<double, M::dim>& qdot) {
  constexpr int N = M::dim;
  auto ws = weyl_scalar_curvature(metric, chi, q);
  double c0 = value(chi(q));
  double rbar = c0 * c0 * ws.value;

  Mat<double, N, N> g;
  metric.eval(q, g);
  double gqq = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) gqq += g(i, j) * qdot[i] * qdot[j];
  double gbar_qq = gqq / (c0 * c0);

  QuantumLagrangian out;
  out.radicand_eq4 = -pc.gamma2 * rbar * gbar_qq;
  out.radicand_eq16 = ws.value * gqq;
  out.eq4_imaginary = out.radicand_eq4 < 0.0;
  out.eq16_imaginary = out.radicand_eq16 < 0.0;
  out.value_eq4 = out.eq4_imaginary ? 0.0 : -pc.hbar * std::sqrt(out.radicand_eq4);
  out.value_eq16 = out.eq16_imaginary ? 0.0 : -pc.hbar * std::sqrt(out.radicand_eq16);
  out.radicand_ratio = out.radicand_eq16 != 0.0 ? out.radicand_eq4 / out.radicand_eq16 : 0.0;
  return out;
}

}  // namespace topgeo::weyl

#endif
