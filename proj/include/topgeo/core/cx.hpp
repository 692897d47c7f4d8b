#ifndef TOPGEO_CORE_CX_HPP
#define TOPGEO_CORE_CX_HPP

#include <cmath>

#include "topgeo/core/dual.hpp"

namespace topgeo {

// Complex number over an arbitrary real scalar (double, Dual, Jet2, pack).
// std::complex is only specified for float/double/long double, hence this.
template <class T>
struct Cx {
  T re{};
  T im{};

  constexpr Cx() = default;
  constexpr Cx(T r) : re(r), im() {}
  constexpr Cx(T r, T i) : re(r), im(i) {}
  constexpr Cx(double r)
    requires(!std::is_same_v<T, double>)
      : re(T(r)), im() {}

  friend constexpr Cx operator+(const Cx& x, const Cx& y) { return {x.re + y.re, x.im + y.im}; }
  friend constexpr Cx operator-(const Cx& x, const Cx& y) { return {x.re - y.re, x.im - y.im}; }
  friend constexpr Cx operator-(const Cx& x) { return {-x.re, -x.im}; }
  friend constexpr Cx operator*(const Cx& x, const Cx& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend constexpr Cx operator*(const Cx& x, const T& s) { return {x.re * s, x.im * s}; }
  friend constexpr Cx operator*(const T& s, const Cx& x) { return x * s; }
  friend constexpr Cx operator*(const Cx& x, double s)
    requires(!std::is_same_v<T, double>)
  {
    return {x.re * T(s), x.im * T(s)};
  }
  friend constexpr Cx operator*(double s, const Cx& x)
    requires(!std::is_same_v<T, double>)
  {
    return x * s;
  }
  friend constexpr Cx operator/(const Cx& x, const Cx& y) {
    T n = y.re * y.re + y.im * y.im;
    return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
  }
  friend constexpr Cx operator/(const Cx& x, double s) { return x * (1.0 / s); }
  friend constexpr Cx operator+(const Cx& x, double s) { return {x.re + T(s), x.im}; }
  friend constexpr Cx operator+(double s, const Cx& x) { return x + s; }
  friend constexpr Cx operator-(const Cx& x, double s) { return {x.re - T(s), x.im}; }
  friend constexpr Cx operator-(double s, const Cx& x) { return Cx(T(s)) - x; }

  Cx& operator+=(const Cx& y) { return *this = *this + y; }
  Cx& operator-=(const Cx& y) { return *this = *this - y; }
  Cx& operator*=(const Cx& y) { return *this = *this * y; }
};

template <class T>
constexpr Cx<T> conj(const Cx<T>& x) {
  return {x.re, -x.im};
}

template <class T>
constexpr T norm2(const Cx<T>& x) {
  return x.re * x.re + x.im * x.im;
}

template <class T>
T abs(const Cx<T>& x) {
  return sqrt(norm2(x));
}

// e^{i phi} for real phi of scalar type T
template <class T>
Cx<T> cis(const T& phi) {
  return {cos(phi), sin(phi)};
}

template <class T>
Cx<T> exp(const Cx<T>& z) {
  T m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

// i * z
template <class T>
constexpr Cx<T> itimes(const Cx<T>& z) {
  return {-z.im, z.re};
}

using Cxd = Cx<double>;

inline Cxd cx_value(const Cxd& z) { return z; }
template <class T>
Cxd cx_value(const Cx<T>& z) {
  return {value(z.re), value(z.im)};
}

}  // namespace topgeo

#endif
