#ifndef TOPGEO_CORE_DUAL_HPP
#define TOPGEO_CORE_DUAL_HPP

#include <cmath>
#include <type_traits>

namespace topgeo {

// Forward-mode dual number over an arbitrary scalar ring T.
// Second derivatives are obtained by nesting: Dual<Dual<double>> carries
// (value, d/ds, d/dt, d2/dsdt) in (a.a, a.b, b.a, b.b).
template <class T>
struct Dual {
  T a{};  // value
  T b{};  // derivative

  constexpr Dual() = default;
  constexpr Dual(T value) : a(value), b() {}
  constexpr Dual(T value, T deriv) : a(value), b(deriv) {}

  // lift a plain double through arbitrarily deep nesting
  constexpr Dual(double v)
    requires(!std::is_same_v<T, double>)
      : a(T(v)), b() {}

  friend constexpr Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend constexpr Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
  friend constexpr Dual operator-(const Dual& x) { return {-x.a, -x.b}; }
  friend constexpr Dual operator*(const Dual& x, const Dual& y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a};
  }
  friend constexpr Dual operator/(const Dual& x, const Dual& y) {
    T inv = T(1.0) / y.a;
    T v = x.a * inv;
    return {v, (x.b - v * y.b) * inv};
  }

  friend constexpr Dual operator+(const Dual& x, double s) { return x + Dual(s); }
  friend constexpr Dual operator+(double s, const Dual& x) { return Dual(s) + x; }
  friend constexpr Dual operator-(const Dual& x, double s) { return x - Dual(s); }
  friend constexpr Dual operator-(double s, const Dual& x) { return Dual(s) - x; }
  friend constexpr Dual operator*(const Dual& x, double s) { return {x.a * T(s), x.b * T(s)}; }
  friend constexpr Dual operator*(double s, const Dual& x) { return x * s; }
  friend constexpr Dual operator/(const Dual& x, double s) { return x * (1.0 / s); }
  friend constexpr Dual operator/(double s, const Dual& x) { return Dual(s) / x; }

  Dual& operator+=(const Dual& y) { return *this = *this + y; }
  Dual& operator-=(const Dual& y) { return *this = *this - y; }
  Dual& operator*=(const Dual& y) { return *this = *this * y; }
};

// value extraction through nesting
inline double value(double x) { return x; }
template <class T>
double value(const Dual<T>& x) {
  return value(x.a);
}

using std::cos;
using std::cosh;
using std::exp;
using std::log;
using std::sin;
using std::sinh;
using std::sqrt;
using std::tanh;

template <class T>
Dual<T> sin(const Dual<T>& x) {
  return {sin(x.a), cos(x.a) * x.b};
}
template <class T>
Dual<T> cos(const Dual<T>& x) {
  return {cos(x.a), -(sin(x.a) * x.b)};
}
template <class T>
Dual<T> sinh(const Dual<T>& x) {
  return {sinh(x.a), cosh(x.a) * x.b};
}
template <class T>
Dual<T> cosh(const Dual<T>& x) {
  return {cosh(x.a), sinh(x.a) * x.b};
}
template <class T>
Dual<T> exp(const Dual<T>& x) {
  T e = exp(x.a);
  return {e, e * x.b};
}
template <class T>
Dual<T> log(const Dual<T>& x) {
  return {log(x.a), x.b / x.a};
}
template <class T>
Dual<T> sqrt(const Dual<T>& x) {
  T r = sqrt(x.a);
  return {r, x.b / (r + r)};
}

// x^p for real exponent, x > 0
inline double powr(double x, double p) { return std::pow(x, p); }
template <class T>
Dual<T> powr(const Dual<T>& x, double p) {
  T xp = powr(x.a, p);
  return {xp, (p * xp / x.a) * x.b};
}

// convenience second-order jet over a base scalar
template <class T>
using Jet2 = Dual<Dual<T>>;

// seed for mixed second derivative along coordinate directions k and l
template <class T>
Jet2<T> jet2_seed(double v, bool is_k, bool is_l) {
  Jet2<T> x;
  x.a.a = T(v);
  x.a.b = T(is_k ? 1.0 : 0.0);
  x.b.a = T(is_l ? 1.0 : 0.0);
  x.b.b = T(0.0);
  return x;
}

}  // namespace topgeo

#endif
