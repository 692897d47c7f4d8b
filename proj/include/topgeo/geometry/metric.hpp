#ifndef TOPGEO_GEOMETRY_METRIC_HPP
#define TOPGEO_GEOMETRY_METRIC_HPP

#include "topgeo/core/dual.hpp"
#include "topgeo/core/mat.hpp"
#include "topgeo/core/poly.hpp"
#include "topgeo/geometry/types.hpp"
#include "topgeo/lorentz/euler.hpp"

namespace topgeo::geom {

// Metric fields are static-polymorphic: any type with
//   static constexpr int dim;
//   template <class S> void eval(const S* q, Mat<S, dim, dim>& g) const;
// works with the differentiation engine.

// Minkowski (+) group block; independent of x.
struct ConfigMetric {
  static constexpr int dim = 10;
  double a_len = 1.0;
  double sign = lorentz::kDefaultSign;

  ConfigMetric() = default;
  ConfigMetric(double a, double s = lorentz::kDefaultSign) : a_len(a), sign(s) {
    if (!(a > 0.0)) throw DomainError("config metric requires a > 0");
  }

  template <class S>
  void eval(const S* q, Mat<S, 10, 10>& g) const {
    g = Mat<S, 10, 10>::zero();
    g(0, 0) = S(-1.0);
    g(1, 1) = S(1.0);
    g(2, 2) = S(1.0);
    g(3, 3) = S(1.0);
    auto gth = lorentz::group_metric(q + 4, a_len, sign);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) g(4 + i, 4 + j) = gth(i, j);
  }
};

// chi^{-2} g with polynomial Weyl factor; the Madelung/Weyl hot path.
struct ConformalConfigMetric {
  static constexpr int dim = 10;
  ConfigMetric base;
  Poly10 chi;

  template <class S>
  void eval(const S* q, Mat<S, 10, 10>& g) const {
    base.eval(q, g);
    S c = chi.eval(q);
    S w = S(1.0) / (c * c);
    for (auto& e : g.m) e = e * w;
  }
};

// generic conformal scaling chi^{-2} g for arbitrary base/field (tests, gauge checks)
template <class M, class F>
struct ConformalMetric {
  static constexpr int dim = M::dim;
  M base;
  F chi;

  template <class S>
  void eval(const S* q, Mat<S, dim, dim>& g) const {
    base.eval(q, g);
    S c = chi(q);
    S w = S(1.0) / (c * c);
    for (auto& e : g.m) e = e * w;
  }
};

// rho * g (Weyl gauge transform of the metric)
template <class M, class F>
struct ScaledMetric {
  static constexpr int dim = M::dim;
  M base;
  F rho;

  template <class S>
  void eval(const S* q, Mat<S, dim, dim>& g) const {
    base.eval(q, g);
    S r = rho(q);
    for (auto& e : g.m) e = e * r;
  }
};

// ---- validation metrics for the engine oracles (test surface) ----

// round 2-sphere, q = (polar, azimuth)
struct Sphere2Metric {
  static constexpr int dim = 2;
  double r = 1.0;

  template <class S>
  void eval(const S* q, Mat<S, 2, 2>& g) const {
    S st = sin(q[0]);
    g(0, 0) = S(r * r);
    g(0, 1) = S(0.0);
    g(1, 0) = S(0.0);
    g(1, 1) = st * st * (r * r);
  }
};

template <int N>
struct FlatMetric {
  static constexpr int dim = N;
  Vec<double, N> diag{};

  static FlatMetric minkowski4()
    requires(N == 4)
  {
    return {{-1.0, 1.0, 1.0, 1.0}};
  }

  template <class S>
  void eval(const S* q, Mat<S, N, N>& g) const {
    (void)q;
    g = Mat<S, N, N>::zero();
    for (int i = 0; i < N; ++i) g(i, i) = S(diag[i]);
  }
};

}  // namespace topgeo::geom

#endif
