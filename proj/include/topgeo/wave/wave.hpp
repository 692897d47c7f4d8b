#ifndef TOPGEO_WAVE_WAVE_HPP
#define TOPGEO_WAVE_WAVE_HPP

#include "topgeo/core/cx.hpp"
#include "topgeo/core/poly.hpp"
#include "topgeo/geometry/jets.hpp"
#include "topgeo/geometry/metric.hpp"
#include "topgeo/geometry/types.hpp"
#include "topgeo/spin/fields.hpp"
#include "topgeo/weyl/weyl.hpp"

namespace topgeo::wave {

using geom::CScalarJets;
using geom::MetricDerived;
using geom::MetricJets;
using spin::FieldConfig;

// action S and Weyl factor chi, both polynomial test fields
struct PotentialPair {
  Poly10 action;  // S(q), units of hbar
  Poly10 chi;     // dimensionless, kept positive

  template <class S>
  S action_at(const S* q) const {
    return action.eval(q);
  }
  template <class S>
  S chi_at(const S* q) const {
    return chi.eval(q);
  }
};

// psi = chi^{-(n-2)/2} e^{iS/hbar}; n = 10 means |psi| = chi^{-4}
struct WaveField {
  PotentialPair pair;
  double hbar = 1.0;

  template <class S>
  Cx<S> operator()(const S* q) const {
    S c = pair.chi_at(q);
    S amp = S(1.0) / (c * c * c * c);
    return amp * cis(pair.action_at(q) * (1.0 / hbar));
  }
};

inline WaveField psi_from_potentials(const PotentialPair& pair, const PhysicalConstants& pc) {
  return WaveField{pair, pc.hbar};
}

// pointwise inverse map: chi and the action gradient recovered from psi jets
struct PotentialsAt {
  double chi = 0.0;
  Vec<double, 10> grad_s{};
};

template <class PsiF>
PotentialsAt potentials_from_psi(const PsiF& psi, const double* q, const PhysicalConstants& pc,
                                 double amp_tol = 1e-300) {
  Cx<Dual<double>> dpsi[10];
  Cxd p0{};
  for (int k = 0; k < 10; ++k) {
    Dual<double> qj[10];
    for (int i = 0; i < 10; ++i) qj[i] = {q[i], i == k ? 1.0 : 0.0};
    dpsi[k] = psi(qj);
  }
  p0 = {dpsi[0].re.a, dpsi[0].im.a};
  double a2 = norm2(p0);
  if (!(a2 > amp_tol)) throw ZeroAmplitude("psi vanishes at evaluated point");
  PotentialsAt out;
  out.chi = std::pow(a2, -0.125);  // |psi|^{-1/4}
  for (int k = 0; k < 10; ++k) {
    // hbar Im(d_k psi / psi)
    Cxd d{dpsi[k].re.b, dpsi[k].im.b};
    out.grad_s[k] = pc.hbar * (d.im * p0.re - d.re * p0.im) / a2;
  }
  return out;
}

// ---------------------------------------------------------------------------
// residual building blocks

// p_i = d_i S - (e/c) A_i and its first derivatives
template <class SF>
geom::CovectorJets<10> momentum_jets(const SF& action, const FieldConfig& fields,
                                     const PhysicalConstants& pc, const double* q) {
  auto covec = [&](const auto* qq, auto* out) {
    using S = std::remove_cvref_t<decltype(qq[0])>;
    S a_cov[10];
    fields.a_cov(qq, pc.a, a_cov);
    // dS via one more dual level
    for (int i = 0; i < 10; ++i) {
      Dual<S> qd[10];
      for (int j = 0; j < 10; ++j) qd[j] = {qq[j], S(j == i ? 1.0 : 0.0)};
      out[i] = action(qd).b - a_cov[i] * (pc.e / pc.c);
    }
  };
  return geom::covector_jets<10>(covec, q);
}

// Hamilton-Jacobi residual: gbar^{ij} p_i p_j + hbar^2 gamma^2 Rbar, with
// gbar = chi^{-2} g and Rbar either chi^2 R_W(g, chi) or the scalar curvature
// of gbar computed directly (both supported; they agree).
enum class RbarMode { weyl_form, direct };

template <class SF, class CF>
double hj_residual(const SF& action, const CF& chi, const double* q, const FieldConfig& fields,
                   const PhysicalConstants& pc, const geom::ConfigMetric& metric,
                   RbarMode mode = RbarMode::weyl_form) {
  double c0 = value(chi(q));
  if (!(c0 > 0.0)) throw NonpositiveWeylFactor("chi <= 0");

  Mat<double, 10, 10> g;
  auto qv = q;
  metric.eval(qv, g);
  auto ginv = inverse(g);

  auto pj = momentum_jets(action, fields, pc, q);
  double p2 = 0.0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) p2 += ginv(i, j) * pj.a[i] * pj.a[j];
  double gbar_pp = c0 * c0 * p2;

  double rbar;
  if (mode == RbarMode::weyl_form) {
    auto ws = weyl::weyl_scalar_curvature(metric, chi, q);
    rbar = c0 * c0 * ws.value;
  } else {
    geom::ConformalMetric<geom::ConfigMetric, CF> gbar{metric, chi};
    rbar = geom::curvature(geom::metric_jets_generic(gbar, q)).scalar;
  }
  return gbar_pp + pc.hbar * pc.hbar * pc.gamma2 * rbar;
}

// continuity residual: covariant divergence of p w.r.t. gbar
template <class SF, class CF>
double continuity_residual(const SF& action, const CF& chi, const double* q,
                           const FieldConfig& fields, const PhysicalConstants& pc,
                           const geom::ConfigMetric& metric) {
  double c0 = value(chi(q));
  if (!(c0 > 0.0)) throw NonpositiveWeylFactor("chi <= 0");
  geom::ConformalMetric<geom::ConfigMetric, CF> gbarf{metric, chi};
  auto jets = geom::metric_jets(gbarf, q);
  MetricDerived<10> der(jets);
  auto pj = momentum_jets(action, fields, pc, q);
  return geom::divergence(der, pj.a, pj.da);
}

// fast path used by suites: polynomial chi routes through the dispatched kernels
template <class SF>
double continuity_residual(const SF& action, const geom::ConformalConfigMetric& gbar,
                           const double* q, const FieldConfig& fields,
                           const PhysicalConstants& pc) {
  auto jets = geom::metric_jets(gbar, q);
  MetricDerived<10> der(jets);
  auto pj = momentum_jets(action, fields, pc, q);
  return geom::divergence(der, pj.a, pj.da);
}

// ---------------------------------------------------------------------------
// linear wave operator on the plain metric with constant curvature term:
// g^{ij}(-ih nabla_i - (e/c)A_i)(-ih nabla_j - (e/c)A_j) psi + hbar^2 gamma^2 R psi

struct WaveOperatorParts {
  Cxd residual{};
  Cxd psi{};
};

template <int N, class PsiF, class AF>
WaveOperatorParts wave_operator(const MetricJets<N>& jets, const PsiF& psi, const AF& a_cov,
                                const double* q, double hbar, double e_over_c,
                                double curvature_term) {
  MetricDerived<N> der(jets);
  auto gam = geom::christoffel(jets);
  auto fj = geom::cscalar_jets<N>(psi, q);
  auto aj = geom::covector_jets<N>(a_cov, q);

  // covariant laplacian of a scalar
  Cxd lap{};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Cxd second = fj.d2f(i, j);
      for (int k = 0; k < N; ++k)
        second -= gam[std::size_t(k) * N * N + i * N + j] * fj.df[k];
      lap += der.ginv(i, j) * second;
    }
  double div_a = geom::divergence(der, aj.a, aj.da);
  Cxd a_dot_df{};
  double a_dot_a = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      a_dot_df += der.ginv(i, j) * aj.a[i] * fj.df[j];
      a_dot_a += der.ginv(i, j) * aj.a[i] * aj.a[j];
    }

  WaveOperatorParts out;
  out.psi = fj.f;
  out.residual = -hbar * hbar * lap +
                 itimes(Cxd{e_over_c * hbar, 0.0} * (div_a * fj.f + 2.0 * a_dot_df)) +
                 (e_over_c * e_over_c * a_dot_a + curvature_term) * fj.f;
  return out;
}

template <class PsiF>
Cxd wave_residual(const PsiF& psi, const double* q, const FieldConfig& fields,
                  const PhysicalConstants& pc, const geom::ConfigMetric& metric,
                  double scalar_curvature) {
  auto jets = geom::metric_jets(metric, q);
  auto a_cov = [&fields, &pc](const auto* qq, auto* out) { fields.a_cov(qq, pc.a, out); };
  return wave_operator<10>(jets, psi, a_cov, q, pc.hbar, pc.e / pc.c,
                           pc.hbar * pc.hbar * pc.gamma2 * scalar_curvature)
      .residual;
}

// ---------------------------------------------------------------------------
// conserved current j^i = Re[ psi^* g^{ij} (-ih d_j - (e/c) A_j) psi ]

template <class S, class PsiF>
void current_t(const PsiF& psi, const S* q, const FieldConfig& fields,
               const PhysicalConstants& pc, const geom::ConfigMetric& metric, S* out) {
  Mat<S, 10, 10> g;
  metric.eval(q, g);
  // metric is block diagonal; still invert numerically at value level only in
  // the scalar instantiation. For S = Dual the inverse must differentiate, so
  // use the closed block structure instead.
  Cx<S> psi0;
  Cx<S> dpsi[10];
  for (int k = 0; k < 10; ++k) {
    Dual<S> qd[10];
    for (int i = 0; i < 10; ++i) qd[i] = {q[i], S(i == k ? 1.0 : 0.0)};
    Cx<Dual<S>> p = psi(qd);
    if (k == 0) psi0 = {p.re.a, p.im.a};
    dpsi[k] = {p.re.b, p.im.b};
  }
  S a_cov[10];
  fields.a_cov(q, pc.a, a_cov);

  // covariant components first: t_j = Re[psi^* (-ih d_j psi - (e/c) A_j psi)]
  S t[10];
  for (int j = 0; j < 10; ++j) {
    Cx<S> v = itimes(dpsi[j]) * (-pc.hbar) - a_cov[j] * (pc.e / pc.c) * psi0;
    t[j] = psi0.re * v.re + psi0.im * v.im;  // Re(conj(psi0) * v)
  }
  // raise with the block inverse: Minkowski block and 6x6 group block
  out[0] = -t[0];
  out[1] = t[1];
  out[2] = t[2];
  out[3] = t[3];
  Mat<S, 6, 6> gth;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) gth(i, j) = g(4 + i, 4 + j);
  // 6x6 inverse via Gauss-Jordan on scalar ring S (division only by pivots,
  // valid away from chart singularities)
  Mat<S, 6, 6> inv = Mat<S, 6, 6>::identity();
  for (int col = 0; col < 6; ++col) {
    S piv = gth(col, col);
    for (int j = 0; j < 6; ++j) {
      gth(col, j) = gth(col, j) / piv;
      inv(col, j) = inv(col, j) / piv;
    }
    for (int r = 0; r < 6; ++r) {
      if (r == col) continue;
      S f = gth(r, col);
      for (int j = 0; j < 6; ++j) {
        gth(r, j) = gth(r, j) - f * gth(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  for (int i = 0; i < 6; ++i) {
    S acc = S(0.0);
    for (int j = 0; j < 6; ++j) acc = acc + inv(i, j) * t[4 + j];
    out[4 + i] = acc;
  }
}

template <class PsiF>
Vec<double, 10> current(const PsiF& psi, const double* q, const FieldConfig& fields,
                        const PhysicalConstants& pc, const geom::ConfigMetric& metric) {
  Vec<double, 10> out{};
  current_t(psi, q, fields, pc, metric, out.data());
  return out;
}

// (1/sqrt|g|) d_i ( sqrt|g| j^i )
template <class PsiF>
double current_divergence(const PsiF& psi, const double* q, const FieldConfig& fields,
                          const PhysicalConstants& pc, const geom::ConfigMetric& metric) {
  auto jets = geom::metric_jets(metric, q);
  MetricDerived<10> der(jets);
  double div = 0.0;
  Vec<double, 10> jval{};
  for (int k = 0; k < 10; ++k) {
    Dual<double> qd[10];
    for (int i = 0; i < 10; ++i) qd[i] = {q[i], i == k ? 1.0 : 0.0};
    Dual<double> j[10];
    current_t(psi, qd, fields, pc, metric, j);
    div += j[k].b;
    if (k == 0)
      for (int i = 0; i < 10; ++i) jval[i] = j[i].a;
  }
  for (int i = 0; i < 10; ++i) div += jval[i] * der.dln_sqrtg[i];
  return div;
}

}  // namespace topgeo::wave

#endif
