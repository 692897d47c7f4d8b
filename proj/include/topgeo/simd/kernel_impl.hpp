#ifndef TOPGEO_SIMD_KERNEL_IMPL_HPP
#define TOPGEO_SIMD_KERNEL_IMPL_HPP

// Shared kernel bodies, instantiated once per backend TU with its pack type.

#include "topgeo/core/dual.hpp"
#include "topgeo/core/poly.hpp"
#include "topgeo/lorentz/euler.hpp"
#include "topgeo/simd/kernels.hpp"

namespace topgeo::simd {

template <class P, int N>
struct PairBatcher {
  // enumeration matching pair_index<N>
  static constexpr int npairs = N * (N + 1) / 2;
  int pk[npairs], pl[npairs];

  PairBatcher() {
    int p = 0;
    for (int k = 0; k < N; ++k)
      for (int l = k; l < N; ++l) {
        pk[p] = k;
        pl[p] = l;
        ++p;
      }
  }

  // seed batch of kLanes pairs starting at pair index p0 (clamped repeats at tail)
  void seed(const double* q, int p0, Jet2<P>* out) const {
    for (int i = 0; i < N; ++i) {
      double bm[kLanes], cm[kLanes];
      for (int lane = 0; lane < kLanes; ++lane) {
        int p = p0 + lane < npairs ? p0 + lane : npairs - 1;
        bm[lane] = pk[p] == i ? 1.0 : 0.0;
        cm[lane] = pl[p] == i ? 1.0 : 0.0;
      }
      out[i].a.a = P(q[i]);
      out[i].a.b = P::load(bm);
      out[i].b.a = P::load(cm);
      out[i].b.b = P(0.0);
    }
  }
};

template <class P>
struct KernelImpl {
  static void group_metric_jets(const double* theta6, double a_len, double sign, double* g36,
                                double* dg, double* d2g) {
    static const PairBatcher<P, 6> batcher;
    for (int p0 = 0; p0 < kPairs6; p0 += kLanes) {
      Jet2<P> q[6];
      batcher.seed(theta6, p0, q);
      auto g = lorentz::group_metric(q, a_len, sign);
      for (int lane = 0; lane < kLanes && p0 + lane < kPairs6; ++lane) {
        int p = p0 + lane;
        int k = batcher.pk[p], l = batcher.pl[p];
        for (int e = 0; e < 36; ++e) {
          const Jet2<P>& x = g.m[std::size_t(e)];
          if (p == 0) g36[e] = x.a.a.lane(lane);
          if (k == l) dg[k * 36 + e] = x.a.b.lane(lane);
          d2g[p * 36 + e] = x.b.b.lane(lane);
        }
      }
    }
  }

  static void conformal_metric_jets(const double* q10, double a_len, double sign,
                                    const Poly10* chi, double* g100, double* dg, double* d2g) {
    static const PairBatcher<P, 10> batcher;
    static constexpr double mink[4] = {-1.0, 1.0, 1.0, 1.0};
    for (int p0 = 0; p0 < kPairs10; p0 += kLanes) {
      Jet2<P> q[10];
      batcher.seed(q10, p0, q);
      auto gth = lorentz::group_metric(q + 4, a_len, sign);
      Jet2<P> c = chi->eval(q);
      Jet2<P> w = Jet2<P>(1.0) / (c * c);
      Mat<Jet2<P>, 10, 10> g;
      for (int m = 0; m < 4; ++m) g(m, m) = w * mink[m];
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) g(4 + i, 4 + j) = gth(i, j) * w;
      for (int lane = 0; lane < kLanes && p0 + lane < kPairs10; ++lane) {
        int p = p0 + lane;
        int k = batcher.pk[p], l = batcher.pl[p];
        for (int e = 0; e < 100; ++e) {
          const Jet2<P>& x = g.m[std::size_t(e)];
          if (p == 0) g100[e] = x.a.a.lane(lane);
          if (k == l) dg[k * 100 + e] = x.a.b.lane(lane);
          d2g[p * 100 + e] = x.b.b.lane(lane);
        }
      }
    }
  }

  static void riemann_quadratic(const double* gamma, double* k_out) {
    // K[i][s][.] += Gamma[i,s,m] * Gamma[m][.] over flat 100-entry slices
    for (int i = 0; i < 10; ++i)
      for (int s = 0; s < 10; ++s) {
        double* dst = k_out + (i * 10 + s) * 100;
        {
          const double a0 = gamma[i * 100 + s * 10];
          const double* src0 = gamma;
          for (int e = 0; e < 100; e += kLanes) {
            P prod = P(a0) * P::load(src0 + e);
            prod.store(dst + e);
          }
        }
        for (int m = 1; m < 10; ++m) {
          const double am = gamma[i * 100 + s * 10 + m];
          const double* src = gamma + m * 100;
          for (int e = 0; e < 100; e += kLanes) {
            P acc = P::load(dst + e) + P(am) * P::load(src + e);
            acc.store(dst + e);
          }
        }
      }
  }

  static constexpr Kernels table(const char* name) {
    return Kernels{name, &KernelImpl::group_metric_jets, &KernelImpl::conformal_metric_jets,
                   &KernelImpl::riemann_quadratic};
  }
};

}  // namespace topgeo::simd

#endif
