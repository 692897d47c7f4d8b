#ifndef TOPGEO_LORENTZ_REP_HPP
#define TOPGEO_LORENTZ_REP_HPP

#include <array>
#include <vector>

#include "topgeo/core/cx.hpp"
#include "topgeo/core/errors.hpp"
#include "topgeo/lorentz/euler.hpp"

namespace topgeo::lorentz {

// Small dynamic complex matrix for representation blocks (dims up to 16).
template <class S>
struct CMatX {
  int rows = 0, cols = 0;
  std::vector<Cx<S>> m;

  CMatX() = default;
  CMatX(int r, int c) : rows(r), cols(c), m(std::size_t(r) * c) {}

  Cx<S>& operator()(int i, int j) { return m[std::size_t(i) * cols + j]; }
  const Cx<S>& operator()(int i, int j) const { return m[std::size_t(i) * cols + j]; }

  static CMatX identity(int n) {
    CMatX out(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = Cx<S>(S(1.0));
    return out;
  }

  friend CMatX operator*(const CMatX& x, const CMatX& y) {
    CMatX out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int j = 0; j < y.cols; ++j) {
        Cx<S> acc;
        for (int k = 0; k < x.cols; ++k) acc += x(i, k) * y(k, j);
        out(i, j) = acc;
      }
    return out;
  }
  friend CMatX operator+(const CMatX& x, const CMatX& y) {
    CMatX out = x;
    for (std::size_t k = 0; k < out.m.size(); ++k) out.m[k] += y.m[k];
    return out;
  }
  friend CMatX operator-(const CMatX& x, const CMatX& y) {
    CMatX out = x;
    for (std::size_t k = 0; k < out.m.size(); ++k) out.m[k] -= y.m[k];
    return out;
  }
  friend CMatX operator*(const CMatX& x, const Cx<S>& s) {
    CMatX out = x;
    for (auto& e : out.m) e *= s;
    return out;
  }
  friend CMatX operator*(const Cx<S>& s, const CMatX& x) { return x * s; }
  friend CMatX operator*(const CMatX& x, double s) { return x * Cx<S>(S(s)); }
  friend CMatX operator*(double s, const CMatX& x) { return x * s; }

  CMatX dagger() const {
    CMatX out(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out(j, i) = conj((*this)(i, j));
    return out;
  }

  std::vector<Cx<S>> operator*(const std::vector<Cx<S>>& v) const {
    std::vector<Cx<S>> out(rows);
    for (int i = 0; i < rows; ++i) {
      Cx<S> acc;
      for (int j = 0; j < cols; ++j) acc += (*this)(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  }
};

using CMatXd = CMatX<double>;

inline double max_abs(const CMatXd& x) {
  double best = 0.0;
  for (auto& e : x.m) best = std::max(best, std::hypot(e.re, e.im));
  return best;
}

// kron with first-argument-major ordering
template <class S>
CMatX<S> kron(const CMatX<S>& a, const CMatX<S>& b) {
  CMatX<S> out(a.rows * b.rows, a.cols * b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      for (int k = 0; k < b.rows; ++k)
        for (int l = 0; l < b.cols; ++l) out(i * b.rows + k, j * b.cols + l) = a(i, j) * b(k, l);
  return out;
}

// Spin-j symmetric power of a 2x2 matrix; polynomial in the entries, so it is
// a homomorphism for any invertible M (not just SU(2)) and commutes with
// conjugate/transpose/inverse. Row/column index m runs j..-j.
template <class S>
CMatX<S> spinj(const CMat2<S>& mm, int two_j) {
  static constexpr double kFact[8] = {1, 1, 2, 6, 24, 120, 720, 5040};
  const Cx<S>&a = mm(0, 0), &b = mm(0, 1), &c = mm(1, 0), &d = mm(1, 1);
  int dim = two_j + 1;
  CMatX<S> out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    int two_mp = two_j - 2 * r;
    for (int s = 0; s < dim; ++s) {
      int two_m = two_j - 2 * s;
      Cx<S> tot;
      for (int k = 0; k <= two_j; ++k) {
        int e1 = (two_j + two_m) / 2 - k;  // a
        int e2 = (two_mp - two_m) / 2 + k; // b
        int e3 = k;                        // c
        int e4 = (two_j - two_mp) / 2 - k; // d
        if (e1 < 0 || e2 < 0 || e4 < 0) continue;
        double num = kFact[(two_j + two_mp) / 2] * kFact[(two_j - two_mp) / 2] *
                     kFact[(two_j + two_m) / 2] * kFact[(two_j - two_m) / 2];
        double coef = std::sqrt(num) / (kFact[e1] * kFact[e2] * kFact[e3] * kFact[e4]);
        Cx<S> term = Cx<S>(S(coef));
        for (int e = 0; e < e1; ++e) term *= a;
        for (int e = 0; e < e2; ++e) term *= b;
        for (int e = 0; e < e3; ++e) term *= c;
        for (int e = 0; e < e4; ++e) term *= d;
        tot += term;
      }
      out(r, s) = tot;
    }
  }
  return out;
}

// Irreducible-representation label (2u, 2v), each in 0..3.
struct SpinorRep {
  int two_u = 0;
  int two_v = 1;

  SpinorRep() = default;
  SpinorRep(int tu, int tv) : two_u(tu), two_v(tv) {
    if (tu < 0 || tv < 0 || tu > 3 || tv > 3)
      throw UnsupportedRep("rep label out of range: (" + std::to_string(tu) + "," +
                           std::to_string(tv) + ")");
  }

  int dim() const { return (two_u + 1) * (two_v + 1); }
  SpinorRep conjugate() const { return {two_v, two_u}; }
  // J^2 - K^2 eigenvalue
  double casimir() const {
    double u = 0.5 * two_u, v = 0.5 * two_v;
    return 2.0 * (u * (u + 1.0) + v * (v + 1.0));
  }
};

enum class SpinorKind { undotted, dotted };

// D^{(u,v)}(Lambda(theta)) built from A = sl2c(theta):
//   first slot D^u((A^dag)^-1), second slot D^v(A), Kronecker order swapped for
//   u > v so that [D^{(u,v)}]^dag = [D^{(v,u)}]^{-1} holds entrywise whenever
//   u != v. (0,1/2) is A itself, (1/2,0) is (A^dag)^{-1}.
template <class S>
CMatX<S> rep_matrix_t(const SpinorRep& rep, const S* theta, bool inverse = false) {
  CMat2<S> a = inverse ? sl2c_matrix_inverse(theta) : sl2c_matrix(theta);
  CMat2<S> ai = inverse ? sl2c_matrix(theta) : sl2c_matrix_inverse(theta);
  CMat2<S> adag_inv = ai.transposed();
  for (auto& e : adag_inv.m) e = conj(e);
  if (rep.two_u == 0 && rep.two_v == 0) return CMatX<S>::identity(1);
  auto du = spinj(adag_inv, rep.two_u);
  auto dv = spinj(a, rep.two_v);
  return rep.two_u <= rep.two_v ? kron(du, dv) : kron(dv, du);
}

inline CMatXd rep_matrix(const SpinorRep& rep, const EulerAngles& ang, bool inverse = false) {
  if (!ang.finite()) throw DomainError("non-finite Euler angles");
  return rep_matrix_t(rep, ang.theta.data(), inverse);
}

struct RepGenerators {
  std::array<CMatXd, 3> j;  // Hermitian
  std::array<CMatXd, 3> k;  // i times Hermitian
};

// Generators from exact differentiation of the closed-form factors at the
// identity: D ~ exp(-i theta^a G_a), so G = i dD/dtheta|_0. The dotted flag
// returns the conjugate-representation generators (label swapped).
inline RepGenerators rep_generators(SpinorRep rep, SpinorKind kind = SpinorKind::undotted) {
  if (kind == SpinorKind::dotted) rep = rep.conjugate();
  RepGenerators out;
  for (int axis = 0; axis < 6; ++axis) {
    Dual<double> th[6];
    for (int i = 0; i < 6; ++i) th[i] = {0.0, i == axis ? 1.0 : 0.0};
    auto d = rep_matrix_t(rep, th);
    CMatXd g(d.rows, d.cols);
    for (std::size_t e = 0; e < d.m.size(); ++e)
      g.m[e] = itimes(Cxd{d.m[e].re.b, d.m[e].im.b});
    if (axis < 3)
      out.j[axis] = g;
    else
      out.k[axis - 3] = g;
  }
  return out;
}

// sum_k M_k N_k
inline CMatXd dot3(const std::array<CMatXd, 3>& a, const std::array<CMatXd, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// perfect-shuffle permutation between u-major and v-major Kronecker orderings
inline CMatXd swap_matrix(int du, int dv) {
  CMatXd s(du * dv, du * dv);
  for (int i = 0; i < du; ++i)
    for (int j = 0; j < dv; ++j) s(j * du + i, i * dv + j) = Cxd{1.0, 0.0};
  return s;
}

}  // namespace topgeo::lorentz

#endif
