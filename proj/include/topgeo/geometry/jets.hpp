#ifndef TOPGEO_GEOMETRY_JETS_HPP
#define TOPGEO_GEOMETRY_JETS_HPP

#include <vector>

#include "topgeo/core/cx.hpp"
#include "topgeo/core/dual.hpp"
#include "topgeo/core/mat.hpp"
#include "topgeo/geometry/metric.hpp"
#include "topgeo/simd/kernels.hpp"

namespace topgeo::geom {

// metric with exact first and second derivatives at a point
template <int N>
struct MetricJets {
  static constexpr int npairs = N * (N + 1) / 2;
  Mat<double, N, N> g;
  std::vector<double> dg;   // [k*N*N + i*N + j]
  std::vector<double> d2g;  // [pair*N*N + i*N + j], pair over k<=l

  MetricJets() : dg(static_cast<std::size_t>(N) * N * N), d2g(static_cast<std::size_t>(npairs) * N * N) {}

  double d(int k, int i, int j) const { return dg[std::size_t(k) * N * N + i * N + j]; }
  double dd(int k, int l, int i, int j) const {
    return d2g[std::size_t(simd::pair_index<N>(k, l)) * N * N + i * N + j];
  }
};

template <class M>
MetricJets<M::dim> metric_jets_generic(const M& metric, const double* q) {
  constexpr int N = M::dim;
  MetricJets<N> out;
  for (int k = 0; k < N; ++k)
    for (int l = k; l < N; ++l) {
      Jet2<double> qj[N];
      for (int i = 0; i < N; ++i) qj[i] = jet2_seed<double>(q[i], i == k, i == l);
      Mat<Jet2<double>, N, N> gj;
      metric.eval(qj, gj);
      int p = simd::pair_index<N>(k, l);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          const auto& x = gj(i, j);
          if (p == 0) out.g(i, j) = x.a.a;
          if (k == l) out.dg[std::size_t(k) * N * N + i * N + j] = x.a.b;
          out.d2g[std::size_t(p) * N * N + i * N + j] = x.b.b;
        }
    }
  return out;
}

template <class M>
MetricJets<M::dim> metric_jets(const M& metric, const double* q) {
  return metric_jets_generic(metric, q);
}

// dispatched hot paths
inline MetricJets<10> metric_jets(const ConfigMetric& metric, const double* q) {
  MetricJets<10> out;
  const auto& k = simd::active_kernels();
  double g36[36];
  std::vector<double> dg6(6 * 36), d2g21(21 * 36);
  k.group_metric_jets(q + 4, metric.a_len, metric.sign, g36, dg6.data(), d2g21.data());
  out.g(0, 0) = -1.0;
  out.g(1, 1) = out.g(2, 2) = out.g(3, 3) = 1.0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out.g(4 + i, 4 + j) = g36[i * 6 + j];
  for (int kk = 0; kk < 6; ++kk)
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        out.dg[std::size_t(4 + kk) * 100 + (4 + i) * 10 + (4 + j)] = dg6[kk * 36 + i * 6 + j];
  for (int kk = 0; kk < 6; ++kk)
    for (int ll = kk; ll < 6; ++ll) {
      int psrc = simd::pair_index<6>(kk, ll);
      int pdst = simd::pair_index<10>(4 + kk, 4 + ll);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
          out.d2g[std::size_t(pdst) * 100 + (4 + i) * 10 + (4 + j)] =
              d2g21[std::size_t(psrc) * 36 + i * 6 + j];
    }
  return out;
}

inline MetricJets<10> metric_jets(const ConformalConfigMetric& metric, const double* q) {
  double c = metric.chi.eval(q);
  if (!(c > 0.0)) throw NonpositiveWeylFactor("chi <= 0 at evaluated point");
  MetricJets<10> out;
  const auto& k = simd::active_kernels();
  k.conformal_metric_jets(q, metric.base.a_len, metric.base.sign, &metric.chi, out.g.m.data(),
                          out.dg.data(), out.d2g.data());
  return out;
}

// central finite differences, the cross-check path (2nd order, default h=1e-4)
template <class M>
std::vector<double> metric_first_derivatives_fd(const M& metric, const double* q,
                                                double h = 1e-4) {
  constexpr int N = M::dim;
  std::vector<double> dg(static_cast<std::size_t>(N) * N * N);
  double qp[N];
  for (int i = 0; i < N; ++i) qp[i] = q[i];
  Mat<double, N, N> gp, gm;
  for (int k = 0; k < N; ++k) {
    qp[k] = q[k] + h;
    metric.eval(qp, gp);
    qp[k] = q[k] - h;
    metric.eval(qp, gm);
    qp[k] = q[k];
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        dg[std::size_t(k) * N * N + i * N + j] = (gp(i, j) - gm(i, j)) / (2.0 * h);
  }
  return dg;
}

// Gamma^i_{jk}, flat layout [i*N*N + j*N + k]
template <int N>
std::vector<double> christoffel(const MetricJets<N>& jets) {
  auto ginv = inverse(jets.g);
  std::vector<double> gam(static_cast<std::size_t>(N) * N * N);
  for (int l = 0; l < N; ++l)
    for (int j = 0; j < N; ++j)
      for (int k = j; k < N; ++k) {
        double s = jets.d(j, l, k) + jets.d(k, l, j) - jets.d(l, j, k);
        for (int i = 0; i < N; ++i) {
          // accumulate g^{il} S_{ljk} / 2 into Gamma^i_{jk}
          gam[std::size_t(i) * N * N + j * N + k] += 0.5 * ginv(i, l) * s;
        }
      }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < j; ++k)
        gam[std::size_t(i) * N * N + j * N + k] = gam[std::size_t(i) * N * N + k * N + j];
  return gam;
}

template <int N>
struct CurvatureReport {
  std::vector<double> riemann_low;  // R_{ijkl}, [((i*N+j)*N+k)*N+l]
  Mat<double, N, N> ricci;
  double scalar = 0.0;
  Vec<double, N> point{};

  double rlow(int i, int j, int k, int l) const {
    return riemann_low[std::size_t(((i * N + j) * N + k)) * N + l];
  }
};

namespace detail {

template <int N>
void riemann_quadratic_generic(const double* gam, double* kq) {
  for (int i = 0; i < N; ++i)
    for (int s = 0; s < N; ++s) {
      double* dst = kq + std::size_t(i * N + s) * N * N;
      for (int e = 0; e < N * N; ++e) dst[e] = 0.0;
      for (int m = 0; m < N; ++m) {
        double am = gam[std::size_t(i) * N * N + s * N + m];
        const double* src = gam + std::size_t(m) * N * N;
        for (int e = 0; e < N * N; ++e) dst[e] += am * src[e];
      }
    }
}

}  // namespace detail

template <int N>
CurvatureReport<N> curvature(const MetricJets<N>& jets) {
  auto ginv = inverse(jets.g);
  auto gam = christoffel(jets);

  // d_k g^{im} = -g^{ia} (d_k g_{ab}) g^{bm}
  std::vector<double> dginv(static_cast<std::size_t>(N) * N * N);
  for (int k = 0; k < N; ++k) {
    Mat<double, N, N> t;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) t(a, b) = jets.d(k, a, b);
    auto r = ginv * t * ginv;
    for (int i = 0; i < N; ++i)
      for (int m = 0; m < N; ++m) dginv[std::size_t(k) * N * N + i * N + m] = -r(i, m);
  }

  // dGamma[k][i][l][j] = d_k Gamma^i_{lj}
  std::vector<double> dgam(static_cast<std::size_t>(N) * N * N * N);
  for (int k = 0; k < N; ++k)
    for (int m = 0; m < N; ++m)
      for (int l = 0; l < N; ++l)
        for (int j = l; j < N; ++j) {
          double s = jets.d(l, m, j) + jets.d(j, m, l) - jets.d(m, l, j);
          double ds = jets.dd(k, l, m, j) + jets.dd(k, j, m, l) - jets.dd(k, m, l, j);
          for (int i = 0; i < N; ++i) {
            double v = 0.5 * (dginv[std::size_t(k) * N * N + i * N + m] * s + ginv(i, m) * ds);
            dgam[std::size_t(((k * N + i) * N + l)) * N + j] += v;
            if (j != l) dgam[std::size_t(((k * N + i) * N + j)) * N + l] += v;
          }
        }

  // quadratic term via the dispatched kernel (N=10) or the generic loop
  std::vector<double> kq(static_cast<std::size_t>(N) * N * N * N);
  if constexpr (N == 10)
    simd::active_kernels().riemann_quadratic(gam.data(), kq.data());
  else
    detail::riemann_quadratic_generic<N>(gam.data(), kq.data());
  auto kqv = [&kq](int i, int s, int t, int j) {
    return kq[std::size_t(((i * N + s) * N + t)) * N + j];
  };
  auto dgv = [&dgam](int k, int i, int l, int j) {
    return dgam[std::size_t(((k * N + i) * N + l)) * N + j];
  };

  CurvatureReport<N> rep;
  rep.riemann_low.resize(static_cast<std::size_t>(N) * N * N * N);
  std::vector<double> rmixed(static_cast<std::size_t>(N) * N * N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l)
          rmixed[std::size_t(((i * N + j) * N + k)) * N + l] =
              dgv(k, i, l, j) - dgv(l, i, k, j) + kqv(i, k, l, j) - kqv(i, l, k, j);

  for (int j = 0; j < N; ++j)
    for (int l = 0; l < N; ++l) {
      double acc = 0.0;
      for (int i = 0; i < N; ++i) acc += rmixed[std::size_t(((i * N + j) * N + i)) * N + l];
      rep.ricci(j, l) = acc;
    }
  for (int j = 0; j < N; ++j)
    for (int l = 0; l < N; ++l) rep.scalar += ginv(j, l) * rep.ricci(j, l);

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
          double acc = 0.0;
          for (int m = 0; m < N; ++m)
            acc += jets.g(i, m) * rmixed[std::size_t(((m * N + j) * N + k)) * N + l];
          rep.riemann_low[std::size_t(((i * N + j) * N + k)) * N + l] = acc;
        }
  return rep;
}

template <class M>
CurvatureReport<M::dim> curvature(const M& metric, const double* q) {
  auto rep = curvature(metric_jets(metric, q));
  for (int i = 0; i < M::dim; ++i) rep.point[i] = q[i];
  return rep;
}

// ---- scalar/covector field jets ----

template <int N>
struct ScalarJets {
  double f = 0.0;
  Vec<double, N> df{};
  Mat<double, N, N> d2f;
};

template <int N>
struct CScalarJets {
  Cxd f{};
  Vec<Cxd, N> df{};
  Mat<Cxd, N, N> d2f;
};

template <int N, class F>
ScalarJets<N> scalar_jets(const F& field, const double* q) {
  ScalarJets<N> out;
  for (int k = 0; k < N; ++k)
    for (int l = k; l < N; ++l) {
      Jet2<double> qj[N];
      for (int i = 0; i < N; ++i) qj[i] = jet2_seed<double>(q[i], i == k, i == l);
      Jet2<double> x = field(qj);
      if (k == 0 && l == 0) out.f = x.a.a;
      if (k == l) out.df[k] = x.a.b;
      out.d2f(k, l) = x.b.b;
      out.d2f(l, k) = x.b.b;
    }
  return out;
}

template <int N, class F>
CScalarJets<N> cscalar_jets(const F& field, const double* q) {
  CScalarJets<N> out;
  for (int k = 0; k < N; ++k)
    for (int l = k; l < N; ++l) {
      Jet2<double> qj[N];
      for (int i = 0; i < N; ++i) qj[i] = jet2_seed<double>(q[i], i == k, i == l);
      Cx<Jet2<double>> x = field(qj);
      if (k == 0 && l == 0) out.f = {x.re.a.a, x.im.a.a};
      if (k == l) out.df[k] = {x.re.a.b, x.im.a.b};
      out.d2f(k, l) = {x.re.b.b, x.im.b.b};
      out.d2f(l, k) = out.d2f(k, l);
    }
  return out;
}

template <int N>
struct CovectorJets {
  Vec<double, N> a{};
  Mat<double, N, N> da;  // da(k,i) = d_k a_i
};

template <int N, class F>
CovectorJets<N> covector_jets(const F& field, const double* q) {
  CovectorJets<N> out;
  for (int k = 0; k < N; ++k) {
    Dual<double> qj[N];
    for (int i = 0; i < N; ++i) qj[i] = {q[i], i == k ? 1.0 : 0.0};
    Dual<double> av[N];
    field(qj, av);
    for (int i = 0; i < N; ++i) {
      if (k == 0) out.a[i] = av[i].a;
      out.da(k, i) = av[i].b;
    }
  }
  return out;
}

// ---- differential operators assembled from jets ----

template <int N>
struct MetricDerived {
  Mat<double, N, N> ginv;
  std::vector<double> dginv;  // [k*N*N + i*N + j]
  Vec<double, N> dln_sqrtg{};

  explicit MetricDerived(const MetricJets<N>& jets) : ginv(inverse(jets.g)) {
    dginv.resize(static_cast<std::size_t>(N) * N * N);
    for (int k = 0; k < N; ++k) {
      Mat<double, N, N> t;
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) t(a, b) = jets.d(k, a, b);
      auto r = ginv * t * ginv;
      double tr = 0.0;
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
          dginv[std::size_t(k) * N * N + a * N + b] = -r(a, b);
          tr += ginv(a, b) * t(a, b);
        }
      dln_sqrtg[k] = 0.5 * tr;
    }
  }

  double dgi(int k, int i, int j) const { return dginv[std::size_t(k) * N * N + i * N + j]; }
};

// (1/sqrt|g|) d_i ( sqrt|g| g^{ij} d_j f )
template <int N>
double laplace_beltrami(const MetricJets<N>& jets, const MetricDerived<N>& der,
                        const ScalarJets<N>& f) {
  double out = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) out += der.ginv(i, j) * f.d2f(i, j);
  for (int j = 0; j < N; ++j) {
    double drift = 0.0;
    for (int i = 0; i < N; ++i) drift += der.dgi(i, i, j) + der.ginv(i, j) * der.dln_sqrtg[i];
    out += drift * f.df[j];
  }
  return out;
}

template <int N>
double laplace_beltrami(const MetricJets<N>& jets, const ScalarJets<N>& f) {
  return laplace_beltrami(jets, MetricDerived<N>(jets), f);
}

// covariant divergence of a covector field (index raised with g)
template <int N>
double divergence(const MetricDerived<N>& der, const Vec<double, N>& a,
                  const Mat<double, N, N>& da) {
  double out = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      out += der.dgi(i, i, j) * a[j] + der.ginv(i, j) * (da(i, j) + der.dln_sqrtg[i] * a[j]);
  return out;
}

}  // namespace topgeo::geom

#endif
