#ifndef TOPGEO_SIMD_KERNELS_HPP
#define TOPGEO_SIMD_KERNELS_HPP

#include <string>

#include "topgeo/core/poly.hpp"

namespace topgeo::simd {

inline constexpr int kLanes = 4;

enum class Lane { scalar, avx2 };

// symmetric pair enumeration (k <= l), k-major
template <int N>
constexpr int pair_index(int k, int l) {
  if (k > l) {
    int t = k;
    k = l;
    l = t;
  }
  return k * N - k * (k - 1) / 2 + (l - k);
}

inline constexpr int kPairs6 = 21;
inline constexpr int kPairs10 = 55;

// Hot inner loops of the curvature engine. Each entry has a scalar reference
// implementation and an AVX2 variant instantiated from the same templated
// body; outputs are bitwise identical (no FMA, per-lane libm).
struct Kernels {
  const char* name;

  // Second-order jets of the 6x6 group-block metric over all 21 direction
  // pairs. g36 row-major 6x6; dg[k*36+e] = d_k g_e; d2g[pair*36+e].
  void (*group_metric_jets)(const double* theta6, double a_len, double sign, double* g36,
                            double* dg, double* d2g);

  // Second-order jets of chi^{-2} * (Minkowski (+) group metric) over all 55
  // pairs of the 10 configuration coordinates. g100 row-major 10x10.
  void (*conformal_metric_jets)(const double* q10, double a_len, double sign, const Poly10* chi,
                                double* g100, double* dg, double* d2g);

  // K[i][s][t][j] = sum_m Gamma[i*100+s*10+m] * Gamma[m*100+t*10+j], N = 10.
  void (*riemann_quadratic)(const double* gamma, double* k_out);
};

// active table: cpuid detection, overridable by TOPGEO_SIMD=scalar|avx2
const Kernels& active_kernels();
// explicit lane table; nullptr when this build/CPU cannot run it
const Kernels* kernels_for(Lane lane);
Lane active_lane();
void force_lane(Lane lane);   // testing/config hook
void reset_lane();            // back to detection + env
bool cpu_has_avx2();
std::string lane_name(Lane lane);

}  // namespace topgeo::simd

#endif
