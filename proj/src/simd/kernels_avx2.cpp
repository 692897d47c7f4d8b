// AVX2 backend. Compiled with -mavx2 (no FMA: contraction would break bitwise
// agreement with the scalar reference); only dispatched after a cpuid check.

#if defined(__AVX2__)

#include <immintrin.h>

#include <cmath>

namespace topgeo::simd {

struct PackAvx {
  __m256d v;

  PackAvx() : v(_mm256_setzero_pd()) {}
  PackAvx(double x) : v(_mm256_set1_pd(x)) {}
  PackAvx(__m256d x) : v(x) {}

  static PackAvx load(const double* p) { return PackAvx(_mm256_loadu_pd(p)); }
  void store(double* p) const { _mm256_storeu_pd(p, v); }
  double lane(int i) const {
    alignas(32) double tmp[4];
    _mm256_store_pd(tmp, v);
    return tmp[i];
  }

  friend PackAvx operator+(const PackAvx& a, const PackAvx& b) {
    return PackAvx(_mm256_add_pd(a.v, b.v));
  }
  friend PackAvx operator-(const PackAvx& a, const PackAvx& b) {
    return PackAvx(_mm256_sub_pd(a.v, b.v));
  }
  friend PackAvx operator-(const PackAvx& a) {
    return PackAvx(_mm256_sub_pd(_mm256_setzero_pd(), a.v));
  }
  friend PackAvx operator*(const PackAvx& a, const PackAvx& b) {
    return PackAvx(_mm256_mul_pd(a.v, b.v));
  }
  friend PackAvx operator/(const PackAvx& a, const PackAvx& b) {
    return PackAvx(_mm256_div_pd(a.v, b.v));
  }
  friend PackAvx operator*(const PackAvx& a, double s) { return a * PackAvx(s); }
  friend PackAvx operator*(double s, const PackAvx& a) { return PackAvx(s) * a; }
  friend PackAvx operator+(const PackAvx& a, double s) { return a + PackAvx(s); }
  friend PackAvx operator+(double s, const PackAvx& a) { return PackAvx(s) + a; }
  friend PackAvx operator-(const PackAvx& a, double s) { return a - PackAvx(s); }
  friend PackAvx operator-(double s, const PackAvx& a) { return PackAvx(s) - a; }
  friend PackAvx operator/(const PackAvx& a, double s) { return a / PackAvx(s); }
  friend PackAvx operator/(double s, const PackAvx& a) { return PackAvx(s) / a; }
  PackAvx& operator+=(const PackAvx& b) { return *this = *this + b; }
  PackAvx& operator*=(const PackAvx& b) { return *this = *this * b; }
};

// trig/hyperbolic go through scalar libm per lane in both backends
#define TOPGEO_PACK_LIBM(fn)                   \
  inline PackAvx fn(const PackAvx& a) {        \
    alignas(32) double t[4];                   \
    _mm256_store_pd(t, a.v);                   \
    for (int i = 0; i < 4; ++i) t[i] = std::fn(t[i]); \
    return PackAvx(_mm256_load_pd(t));         \
  }

TOPGEO_PACK_LIBM(sin)
TOPGEO_PACK_LIBM(cos)
TOPGEO_PACK_LIBM(sinh)
TOPGEO_PACK_LIBM(cosh)
#undef TOPGEO_PACK_LIBM

inline PackAvx sqrt(const PackAvx& a) { return PackAvx(_mm256_sqrt_pd(a.v)); }

}  // namespace topgeo::simd

#include "topgeo/simd/kernel_impl.hpp"

namespace topgeo::simd {

const Kernels kKernelsAvx2 = KernelImpl<PackAvx>::table("avx2");
const Kernels* kernels_avx2_ptr() { return &kKernelsAvx2; }

}  // namespace topgeo::simd

#else

namespace topgeo::simd {
struct Kernels;
const Kernels* kernels_avx2_ptr() { return nullptr; }
}  // namespace topgeo::simd

#endif
