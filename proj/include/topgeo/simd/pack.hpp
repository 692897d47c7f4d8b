#ifndef TOPGEO_SIMD_PACK_HPP
#define TOPGEO_SIMD_PACK_HPP

#include <array>
#include <cmath>

#include "topgeo/simd/kernels.hpp"

namespace topgeo::simd {

// Reference pack: four independent double lanes, plain loops. The AVX2 backend
// implements the same interface over __m256d; lanewise IEEE operations and
// per-lane libm calls keep the two backends bitwise identical.
struct PackRef {
  std::array<double, kLanes> v{};

  PackRef() = default;
  PackRef(double x) { v.fill(x); }

  static PackRef load(const double* p) {
    PackRef out;
    for (int i = 0; i < kLanes; ++i) out.v[i] = p[i];
    return out;
  }
  void store(double* p) const {
    for (int i = 0; i < kLanes; ++i) p[i] = v[i];
  }
  double lane(int i) const { return v[std::size_t(i)]; }

  friend PackRef operator+(const PackRef& a, const PackRef& b) {
    PackRef o;
    for (int i = 0; i < kLanes; ++i) o.v[i] = a.v[i] + b.v[i];
    return o;
  }
  friend PackRef operator-(const PackRef& a, const PackRef& b) {
    PackRef o;
    for (int i = 0; i < kLanes; ++i) o.v[i] = a.v[i] - b.v[i];
    return o;
  }
  friend PackRef operator-(const PackRef& a) {
    PackRef o;
    for (int i = 0; i < kLanes; ++i) o.v[i] = -a.v[i];
    return o;
  }
  friend PackRef operator*(const PackRef& a, const PackRef& b) {
    PackRef o;
    for (int i = 0; i < kLanes; ++i) o.v[i] = a.v[i] * b.v[i];
    return o;
  }
  friend PackRef operator/(const PackRef& a, const PackRef& b) {
    PackRef o;
    for (int i = 0; i < kLanes; ++i) o.v[i] = a.v[i] / b.v[i];
    return o;
  }
  friend PackRef operator*(const PackRef& a, double s) { return a * PackRef(s); }
  friend PackRef operator*(double s, const PackRef& a) { return PackRef(s) * a; }
  friend PackRef operator+(const PackRef& a, double s) { return a + PackRef(s); }
  friend PackRef operator+(double s, const PackRef& a) { return PackRef(s) + a; }
  friend PackRef operator-(const PackRef& a, double s) { return a - PackRef(s); }
  friend PackRef operator-(double s, const PackRef& a) { return PackRef(s) - a; }
  friend PackRef operator/(const PackRef& a, double s) { return a / PackRef(s); }
  friend PackRef operator/(double s, const PackRef& a) { return PackRef(s) / a; }
  PackRef& operator+=(const PackRef& b) { return *this = *this + b; }
  PackRef& operator*=(const PackRef& b) { return *this = *this * b; }
};

// per-lane libm keeps results identical across backends
inline PackRef sin(const PackRef& a) {
  PackRef o;
  for (int i = 0; i < kLanes; ++i) o.v[i] = std::sin(a.v[i]);
  return o;
}
inline PackRef cos(const PackRef& a) {
  PackRef o;
  for (int i = 0; i < kLanes; ++i) o.v[i] = std::cos(a.v[i]);
  return o;
}
inline PackRef sinh(const PackRef& a) {
  PackRef o;
  for (int i = 0; i < kLanes; ++i) o.v[i] = std::sinh(a.v[i]);
  return o;
}
inline PackRef cosh(const PackRef& a) {
  PackRef o;
  for (int i = 0; i < kLanes; ++i) o.v[i] = std::cosh(a.v[i]);
  return o;
}
inline PackRef sqrt(const PackRef& a) {
  PackRef o;
  for (int i = 0; i < kLanes; ++i) o.v[i] = std::sqrt(a.v[i]);
  return o;
}

}  // namespace topgeo::simd

#endif
