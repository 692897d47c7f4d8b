#ifndef TOPGEO_SPIN_MODES_HPP
#define TOPGEO_SPIN_MODES_HPP

#include <optional>
#include <vector>

#include "topgeo/core/cx.hpp"
#include "topgeo/core/poly.hpp"
#include "topgeo/geometry/types.hpp"
#include "topgeo/lorentz/rep.hpp"

namespace topgeo::spin {

using lorentz::CMatX;
using lorentz::SpinorKind;
using lorentz::SpinorRep;

// Coefficient field on space-time: sum of plane waves with constant spinor
// amplitudes, optionally modulated by a polynomial in x. Covers constants
// (p = 0), single waves, superpositions and polynomial test data.
struct CoefficientField {
  struct Term {
    std::vector<Cxd> amp;  // one entry per spinor component
    Vec<double, 4> p{};    // covariant wave covector, phase p.x/hbar
    std::optional<Poly4> mod;
  };
  int dim = 1;
  double hbar = 1.0;
  std::vector<Term> terms;

  template <class S>
  void eval(const S* x, Cx<S>* out) const {
    for (int i = 0; i < dim; ++i) out[i] = Cx<S>(S(0.0));
    for (const Term& t : terms) {
      S phase = x[0] * t.p[0];
      for (int i = 1; i < 4; ++i) phase = phase + x[i] * t.p[i];
      Cx<S> w = cis(phase * (1.0 / hbar));
      if (t.mod) w = t.mod->eval(x) * w;
      for (int i = 0; i < dim; ++i)
        out[i] += Cx<S>(S(t.amp[std::size_t(i)].re), S(t.amp[std::size_t(i)].im)) * w;
    }
  }

  std::vector<Cxd> at(const Vec<double, 4>& x) const {
    std::vector<Cx<double>> out(std::size_t(dim));
    eval(x.data(), out.data());
    return out;
  }
};

// spinor coefficients psi^{sigma'}(x) with a fixed spectator lower index
struct SpinorField {
  SpinorRep label;
  SpinorKind kind = SpinorKind::undotted;
  CoefficientField coeffs;

  SpinorField(SpinorRep rep, SpinorKind k, CoefficientField c)
      : label(rep), kind(k), coeffs(std::move(c)) {
    if (coeffs.dim != label.dim()) throw UnsupportedRep("coefficient dimension mismatch");
  }
};

// stacked (undotted; dotted) four-component field
struct DiracField {
  CoefficientField psi_d;  // dim 4

  SpinorField undotted() const {
    CoefficientField c;
    c.dim = 2;
    c.hbar = psi_d.hbar;
    for (const auto& t : psi_d.terms)
      c.terms.push_back({{t.amp[0], t.amp[1]}, t.p, t.mod});
    return {SpinorRep{0, 1}, SpinorKind::undotted, std::move(c)};
  }
  SpinorField dotted() const {
    CoefficientField c;
    c.dim = 2;
    c.hbar = psi_d.hbar;
    for (const auto& t : psi_d.terms)
      c.terms.push_back({{t.amp[2], t.amp[3]}, t.p, t.mod});
    return {SpinorRep{1, 0}, SpinorKind::dotted, std::move(c)};
  }
};

// psi_uv(q) = D^{(u,v)}(Lambda(theta)^{-1})^sigma_{sigma'} psi^{sigma'}(x),
// spectator index fixed (first row). A dotted field contracts with the
// conjugate representation D^{(v,u)}.
struct ModeField {
  SpinorRep rep;           // label of the representation contracted against
  CoefficientField coeffs;
  int sigma = 0;

  template <class S>
  Cx<S> operator()(const S* q) const {
    auto d = lorentz::rep_matrix_t(rep, q + 4, /*inverse=*/true);
    std::vector<Cx<S>> c(std::size_t(coeffs.dim));
    coeffs.eval(q, c.data());
    Cx<S> acc;
    for (int sp = 0; sp < coeffs.dim; ++sp) acc += d(sigma, sp) * c[std::size_t(sp)];
    return acc;
  }
};

inline ModeField mode_field(const SpinorField& f, int sigma = 0) {
  SpinorRep rep = f.kind == SpinorKind::undotted ? f.label : f.label.conjugate();
  return ModeField{rep, f.coeffs, sigma};
}

// parity-invariant combination: both blocks of a Dirac field
struct DiracModeField {
  ModeField undotted;
  ModeField dotted;

  template <class S>
  Cx<S> operator()(const S* q) const {
    return undotted(q) + dotted(q);
  }
};

inline DiracModeField mode_field(const DiracField& f, int sigma = 0) {
  return {mode_field(f.undotted(), sigma), mode_field(f.dotted(), sigma)};
}

// pointwise evaluation (the mode_expand operation)
inline Cxd mode_expand(const SpinorField& f, const ConfigPoint& q, int sigma = 0) {
  auto qq = q.coords();
  return cx_value(mode_field(f, sigma)(qq.data()));
}

inline Cxd mode_expand(const DiracField& f, const ConfigPoint& q, int sigma = 0) {
  auto qq = q.coords();
  return cx_value(mode_field(f, sigma)(qq.data()));
}

}  // namespace topgeo::spin

#endif
