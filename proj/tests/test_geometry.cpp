#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "topgeo/core/rng.hpp"
#include "topgeo/geometry/closed_form.hpp"
#include "topgeo/geometry/jets.hpp"
#include "topgeo/geometry/metric.hpp"

using namespace topgeo;
using namespace topgeo::geom;

namespace {

Vec<double, 10> random_point(Rng& rng, double scale = 1.0) {
  Vec<double, 10> q{};
  for (int i = 0; i < 10; ++i) q[i] = scale * rng.uniform(-1.0, 1.0);
  return q;
}

struct ConstTwo {
  template <class S>
  S operator()(const S* q) const {
    (void)q;
    return S(2.0);
  }
};

struct ConstOne {
  template <class S>
  S operator()(const S* q) const {
    (void)q;
    return S(1.0);
  }
};

}  // namespace

TEST_CASE("config metric block structure and x-independence") {
  Rng rng(1);
  ConfigMetric metric(1.3);
  auto q = random_point(rng);
  auto jets = metric_jets(metric, q.data());
  CHECK(jets.g(0, 0) == -1.0);
  CHECK(jets.g(1, 1) == 1.0);
  for (int mu = 0; mu < 4; ++mu)
    for (int al = 0; al < 6; ++al) CHECK(jets.g(mu, 4 + al) == 0.0);
  // d/dx of anything vanishes
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) CHECK(jets.d(k, i, j) == 0.0);
  // symmetry
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) CHECK(std::abs(jets.g(i, j) - jets.g(j, i)) < 1e-14);
}

TEST_CASE("christoffel: flat directions vanish, symmetric in lower indices") {
  Rng rng(2);
  ConfigMetric metric(1.0);
  auto q = random_point(rng);
  auto jets = metric_jets(metric, q.data());
  auto gam = christoffel(jets);
  auto at = [&gam](int i, int j, int k) { return gam[std::size_t(i) * 100 + j * 10 + k]; };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) CHECK(at(i, j, k) == 0.0);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      for (int k = 0; k < 10; ++k) CHECK(std::abs(at(i, j, k) - at(i, k, j)) < 1e-12);
}

TEST_CASE("2-sphere oracle: christoffel, curvature, laplacian eigenfunction") {
  double r = 1.7;
  Sphere2Metric sph{r};
  double q[2] = {0.9, 0.4};
  auto jets = metric_jets(sph, q);
  auto gam = christoffel(jets);
  auto at = [&gam](int i, int j, int k) { return gam[std::size_t(i) * 4 + j * 2 + k]; };
  // Gamma^theta_{phi phi} = -sin cos, Gamma^phi_{theta phi} = cot
  CHECK(at(0, 1, 1) == doctest::Approx(-std::sin(0.9) * std::cos(0.9)).epsilon(1e-12));
  CHECK(at(1, 0, 1) == doctest::Approx(1.0 / std::tan(0.9)).epsilon(1e-12));

  auto rep = curvature(jets);
  CHECK(rep.scalar == doctest::Approx(2.0 / (r * r)).epsilon(1e-10));

  // Y10 ~ cos(theta): LB f = -(2/r^2) f
  auto y10 = [](const auto* qq) { return cos(qq[0]); };
  auto fj = scalar_jets<2>(y10, q);
  double lb = laplace_beltrami(jets, fj);
  CHECK(lb == doctest::Approx(-2.0 / (r * r) * std::cos(0.9)).epsilon(1e-10));
}

TEST_CASE("riemann antisymmetries and first Bianchi on sphere and config space") {
  Rng rng(3);
  auto check_sym = [](const auto& rep, int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            worst = std::max(worst, std::abs(rep.rlow(i, j, k, l) + rep.rlow(j, i, k, l)));
            worst = std::max(worst, std::abs(rep.rlow(i, j, k, l) + rep.rlow(i, j, l, k)));
            worst = std::max(worst, std::abs(rep.rlow(i, j, k, l) + rep.rlow(i, k, l, j) +
                                             rep.rlow(i, l, j, k)));
          }
    return worst;
  };
  {
    Sphere2Metric sph{1.1};
    double q[2] = {1.1, -0.5};
    CHECK(check_sym(curvature(metric_jets(sph, q)), 2) < 1e-8);
  }
  {
    ConfigMetric metric(0.9);
    auto q = random_point(rng);
    CHECK(check_sym(curvature(metric_jets(metric, q.data())), 10) < 1e-8);
  }
}

TEST_CASE("config-space scalar curvature: constant, sign and scale laws, closed form") {
  Rng rng(derive_seed(99, "geom-const"));
  for (double sign : {lorentz::kDefaultSign, -lorentz::kDefaultSign}) {
    for (double a : {1.0, 2.0}) {
      ConfigMetric metric(a, sign);
      double closed = config_scalar_curvature_closed_form(a, sign);
      double lo = 0.0, hi = 0.0;
      for (int t = 0; t < 5; ++t) {
        auto q = random_point(rng, 0.9);
        double s = curvature(metric, q.data()).scalar;
        lo = t == 0 ? s : std::min(lo, s);
        hi = t == 0 ? s : std::max(hi, s);
        CHECK(std::abs(s - closed) < 1e-8 * std::abs(closed));
      }
      CHECK((hi - lo) / std::abs(closed) < 1e-8);
    }
    // scaling law: R ~ 1/a^2
    double r1 = config_scalar_curvature_closed_form(1.0, sign);
    double r2 = config_scalar_curvature_closed_form(2.0, sign);
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(1e-12));
  }
  // default convention value: documented against the 6 the text asserts
  CHECK(config_scalar_curvature_closed_form(1.0, lorentz::kDefaultSign) ==
        doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("contraction consistency: scalar from riemann equals reported scalar") {
  Rng rng(4);
  ConfigMetric metric(1.2);
  auto q = random_point(rng);
  auto jets = metric_jets(metric, q.data());
  auto rep = curvature(jets);
  auto ginv = inverse(jets.g);
  // R = g^{ik} g^{jl} R_{ijkl} ... contract lowered Riemann twice
  double s = 0.0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      for (int k = 0; k < 10; ++k)
        for (int l = 0; l < 10; ++l) s += ginv(i, k) * ginv(j, l) * rep.rlow(i, j, k, l);
  CHECK(std::abs(s - rep.scalar) < 1e-10 * std::max(1.0, std::abs(rep.scalar)));
}

TEST_CASE("finite differences agree with dual-number derivatives") {
  Rng rng(5);
  ConfigMetric metric(1.0);
  auto q = random_point(rng, 0.8);
  auto jets = metric_jets(metric, q.data());
  auto dg_fd = metric_first_derivatives_fd(metric, q.data());
  double worst = 0.0;
  for (int k = 0; k < 10; ++k)
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j)
        worst = std::max(worst, std::abs(jets.d(k, i, j) - dg_fd[std::size_t(k) * 100 + i * 10 + j]));
  CHECK(worst < 1e-5);
}

TEST_CASE("laplace-beltrami: flat product function") {
  FlatMetric<4> flat = FlatMetric<4>::minkowski4();
  double q[4] = {0.3, -0.2, 0.8, 0.1};
  auto jets = metric_jets(flat, q);
  auto f = [](const auto* qq) { return qq[1] * qq[2]; };
  CHECK(std::abs(laplace_beltrami(jets, scalar_jets<4>(f, q))) < 1e-14);
}

TEST_CASE("conformal scaling: constant factor scales curvature") {
  // chi = 2 => gbar = g/4 => Rbar = 4 R
  Rng rng(6);
  ConfigMetric metric(1.0);
  ConformalMetric<ConfigMetric, ConstTwo> gbar{metric, {}};
  auto q = random_point(rng, 0.7);
  double r0 = curvature(metric, q.data()).scalar;
  double rb = curvature(metric_jets_generic(gbar, q.data())).scalar;
  CHECK(rb == doctest::Approx(4.0 * r0).epsilon(1e-9));

  // chi == 1 keeps the metric
  ConformalMetric<ConfigMetric, ConstOne> same{metric, {}};
  double r1 = curvature(metric_jets_generic(same, q.data())).scalar;
  CHECK(r1 == doctest::Approx(r0).epsilon(1e-12));
}

TEST_CASE("conformal config metric requires positive chi") {
  ConfigMetric metric(1.0);
  Poly10 chi;
  chi.constant = -0.5;
  ConformalConfigMetric gbar{metric, chi};
  Vec<double, 10> q{};
  CHECK_THROWS_AS(metric_jets(gbar, q.data()), NonpositiveWeylFactor);
}
