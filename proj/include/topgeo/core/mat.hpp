#ifndef TOPGEO_CORE_MAT_HPP
#define TOPGEO_CORE_MAT_HPP

#include <array>
#include <cmath>
#include <cstddef>

#include "topgeo/core/errors.hpp"

namespace topgeo {

template <class T, int R, int C>
struct Mat;

template <class T>
inline constexpr bool is_mat_v = false;
template <class T, int R, int C>
inline constexpr bool is_mat_v<Mat<T, R, C>> = true;

// Dense fixed-size matrix over an arbitrary scalar. Sized for this problem
// (4x4 Lorentz, 6x6 frames, 10x10 metric, small complex rep blocks).
template <class T, int R, int C>
struct Mat {
  std::array<T, std::size_t(R) * C> m{};

  constexpr T& operator()(int i, int j) { return m[std::size_t(i) * C + j]; }
  constexpr const T& operator()(int i, int j) const { return m[std::size_t(i) * C + j]; }

  static constexpr Mat zero() { return {}; }

  static constexpr Mat identity()
    requires(R == C)
  {
    Mat out;
    for (int i = 0; i < R; ++i) out(i, i) = T(1.0);
    return out;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat out;
    for (std::size_t k = 0; k < x.m.size(); ++k) out.m[k] = x.m[k] + y.m[k];
    return out;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat out;
    for (std::size_t k = 0; k < x.m.size(); ++k) out.m[k] = x.m[k] - y.m[k];
    return out;
  }
  friend Mat operator-(const Mat& x) {
    Mat out;
    for (std::size_t k = 0; k < x.m.size(); ++k) out.m[k] = -x.m[k];
    return out;
  }
  template <class S>
    requires(!is_mat_v<S>)
  friend Mat operator*(const Mat& x, const S& s) {
    Mat out;
    for (std::size_t k = 0; k < x.m.size(); ++k) out.m[k] = x.m[k] * s;
    return out;
  }
  template <class S>
    requires(!is_mat_v<S>)
  friend Mat operator*(const S& s, const Mat& x) {
    return x * s;
  }

  Mat<T, C, R> transposed() const {
    Mat<T, C, R> out;
    for (int i = 0; i < R; ++i)
      for (int j = 0; j < C; ++j) out(j, i) = (*this)(i, j);
    return out;
  }
};

template <class T, int R, int K, int C>
Mat<T, R, C> operator*(const Mat<T, R, K>& x, const Mat<T, K, C>& y) {
  Mat<T, R, C> out;
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) {
      T acc = x(i, 0) * y(0, j);
      for (int k = 1; k < K; ++k) acc = acc + x(i, k) * y(k, j);
      out(i, j) = acc;
    }
  return out;
}

template <class T, int N>
using Vec = std::array<T, std::size_t(N)>;

template <class T, int R, int C>
Vec<T, R> operator*(const Mat<T, R, C>& x, const Vec<T, C>& v) {
  Vec<T, R> out{};
  for (int i = 0; i < R; ++i) {
    T acc = x(i, 0) * v[0];
    for (int j = 1; j < C; ++j) acc = acc + x(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

// LU decomposition with partial pivoting; double only (used at value level).
template <int N>
struct Lu {
  Mat<double, N, N> lu;
  std::array<int, N> perm{};
  int sign = 1;
  bool singular = false;

  explicit Lu(Mat<double, N, N> a) : lu(a) {
    for (int i = 0; i < N; ++i) perm[i] = i;
    for (int k = 0; k < N; ++k) {
      int p = k;
      double best = std::abs(lu(k, k));
      for (int i = k + 1; i < N; ++i)
        if (std::abs(lu(i, k)) > best) {
          best = std::abs(lu(i, k));
          p = i;
        }
      if (best == 0.0) {
        singular = true;
        return;
      }
      if (p != k) {
        for (int j = 0; j < N; ++j) std::swap(lu(k, j), lu(p, j));
        std::swap(perm[k], perm[p]);
        sign = -sign;
      }
      for (int i = k + 1; i < N; ++i) {
        lu(i, k) /= lu(k, k);
        for (int j = k + 1; j < N; ++j) lu(i, j) -= lu(i, k) * lu(k, j);
      }
    }
  }

  double det() const {
    if (singular) return 0.0;
    double d = sign;
    for (int i = 0; i < N; ++i) d *= lu(i, i);
    return d;
  }

  Vec<double, N> solve(const Vec<double, N>& rhs) const {
    Vec<double, N> x{};
    for (int i = 0; i < N; ++i) x[i] = rhs[perm[i]];
    for (int i = 1; i < N; ++i)
      for (int j = 0; j < i; ++j) x[i] -= lu(i, j) * x[j];
    for (int i = N - 1; i >= 0; --i) {
      for (int j = i + 1; j < N; ++j) x[i] -= lu(i, j) * x[j];
      x[i] /= lu(i, i);
    }
    return x;
  }
};

template <int N>
Mat<double, N, N> inverse(const Mat<double, N, N>& a) {
  Lu<N> lu(a);
  if (lu.singular) throw SingularMetric("matrix not invertible");
  Mat<double, N, N> out;
  for (int j = 0; j < N; ++j) {
    Vec<double, N> e{};
    e[j] = 1.0;
    auto col = lu.solve(e);
    for (int i = 0; i < N; ++i) out(i, j) = col[i];
  }
  return out;
}

template <int N>
double determinant(const Mat<double, N, N>& a) {
  return Lu<N>(a).det();
}

template <class T, int R, int C>
double max_abs(const Mat<T, R, C>& a) {
  double best = 0.0;
  for (auto& x : a.m) best = std::max(best, std::abs(x));
  return best;
}

}  // namespace topgeo

#endif
