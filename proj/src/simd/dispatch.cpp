#include <atomic>
#include <cstdlib>
#include <string>

#include "topgeo/simd/kernels.hpp"

namespace topgeo::simd {

extern const Kernels kKernelsScalar;
const Kernels* kernels_avx2_ptr();

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

namespace {

std::atomic<int> g_forced{-1};  // -1 auto, else Lane

Lane detect() {
  if (const char* env = std::getenv("TOPGEO_SIMD")) {
    std::string s(env);
    if (s == "scalar") return Lane::scalar;
    if (s == "avx2" && cpu_has_avx2() && kernels_avx2_ptr()) return Lane::avx2;
  }
  return cpu_has_avx2() && kernels_avx2_ptr() ? Lane::avx2 : Lane::scalar;
}

}  // namespace

Lane active_lane() {
  int f = g_forced.load(std::memory_order_relaxed);
  if (f >= 0) return Lane(f);
  static const Lane detected = detect();
  return detected;
}

void force_lane(Lane lane) { g_forced.store(int(lane), std::memory_order_relaxed); }
void reset_lane() { g_forced.store(-1, std::memory_order_relaxed); }

const Kernels* kernels_for(Lane lane) {
  if (lane == Lane::scalar) return &kKernelsScalar;
  if (!cpu_has_avx2()) return nullptr;
  return kernels_avx2_ptr();
}

const Kernels& active_kernels() {
  const Kernels* k = kernels_for(active_lane());
  return k ? *k : kKernelsScalar;
}

std::string lane_name(Lane lane) { return lane == Lane::scalar ? "scalar" : "avx2"; }

}  // namespace topgeo::simd
