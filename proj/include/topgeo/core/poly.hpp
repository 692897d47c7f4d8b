#ifndef TOPGEO_CORE_POLY_HPP
#define TOPGEO_CORE_POLY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "topgeo/core/rng.hpp"

namespace topgeo {

// Sparse multivariate polynomial in N coordinates. Test fields and Weyl
// factors are low-order polynomials with seeded coefficients; evaluation is
// templated so jets differentiate them exactly.
template <int N>
struct Poly {
  struct Term {
    double coeff;
    std::array<std::uint8_t, N> expo;
  };
  std::vector<Term> terms;
  double constant = 0.0;

  template <class S>
  S eval(const S* q) const {
    S acc(constant);
    for (const Term& t : terms) {
      S mono(t.coeff);
      for (int i = 0; i < N; ++i)
        for (int e = 0; e < t.expo[i]; ++e) mono = mono * q[i];
      acc = acc + mono;
    }
    return acc;
  }

  template <class S>
  S operator()(const S* q) const {
    return eval(q);
  }

  // sum of |coeff|, bounds |p| on the unit box
  double coeff_norm() const {
    double s = 0.0;
    for (const Term& t : terms) s += t.coeff < 0 ? -t.coeff : t.coeff;
    return s;
  }

  static Poly random(Rng& rng, int n_terms, int max_degree, double scale) {
    Poly p;
    for (int t = 0; t < n_terms; ++t) {
      Term term;
      term.coeff = scale * rng.uniform(-1.0, 1.0);
      term.expo.fill(0);
      for (int d = 0; d < max_degree; ++d)
        if (rng.uniform() < 0.75) term.expo[std::uint8_t(rng.uniform_int(N))]++;
      p.terms.push_back(term);
    }
    return p;
  }
};

using Poly10 = Poly<10>;
using Poly4 = Poly<4>;

}  // namespace topgeo

#endif
