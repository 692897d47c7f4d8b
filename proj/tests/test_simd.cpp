#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <vector>

#include "topgeo/core/rng.hpp"
#include "topgeo/geometry/jets.hpp"
#include "topgeo/geometry/metric.hpp"
#include "topgeo/simd/kernels.hpp"

using namespace topgeo;
using namespace topgeo::simd;

namespace {

bool bitwise_equal(const double* a, const double* b, std::size_t n) {
  return std::memcmp(a, b, n * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("lane detection and override") {
  CHECK(kernels_for(Lane::scalar) != nullptr);
  force_lane(Lane::scalar);
  CHECK(active_lane() == Lane::scalar);
  reset_lane();
  if (cpu_has_avx2()) CHECK(kernels_for(Lane::avx2) != nullptr);
}

TEST_CASE("group metric jets: avx2 lane bitwise-matches scalar reference") {
  const Kernels* avx = kernels_for(Lane::avx2);
  if (!avx) {
    MESSAGE("avx2 unavailable on this CPU, lane equivalence skipped");
    return;
  }
  const Kernels* ref = kernels_for(Lane::scalar);
  Rng rng(derive_seed(7, "simd-group"));
  for (int t = 0; t < 20; ++t) {
    double theta[6];
    for (auto& v : theta) v = rng.uniform(-1.5, 1.5);
    double a = rng.uniform(0.5, 2.0);
    double g1[36], g2[36];
    std::vector<double> dg1(6 * 36), dg2(6 * 36), d1(21 * 36), d2(21 * 36);
    ref->group_metric_jets(theta, a, -1.0, g1, dg1.data(), d1.data());
    avx->group_metric_jets(theta, a, -1.0, g2, dg2.data(), d2.data());
    CHECK(bitwise_equal(g1, g2, 36));
    CHECK(bitwise_equal(dg1.data(), dg2.data(), dg1.size()));
    CHECK(bitwise_equal(d1.data(), d2.data(), d1.size()));
  }
}

TEST_CASE("conformal metric jets: avx2 lane bitwise-matches scalar reference") {
  const Kernels* avx = kernels_for(Lane::avx2);
  if (!avx) {
    MESSAGE("avx2 unavailable on this CPU, lane equivalence skipped");
    return;
  }
  const Kernels* ref = kernels_for(Lane::scalar);
  Rng rng(derive_seed(7, "simd-conformal"));
  for (int t = 0; t < 10; ++t) {
    double q[10];
    for (auto& v : q) v = rng.uniform(-0.6, 0.6);
    auto chi = Poly10::random(rng, 10, 2, 0.05);
    chi.constant = 1.4;
    double g1[100], g2[100];
    std::vector<double> dg1(10 * 100), dg2(10 * 100), d1(55 * 100), d2(55 * 100);
    ref->conformal_metric_jets(q, 1.1, -1.0, &chi, g1, dg1.data(), d1.data());
    avx->conformal_metric_jets(q, 1.1, -1.0, &chi, g2, dg2.data(), d2.data());
    CHECK(bitwise_equal(g1, g2, 100));
    CHECK(bitwise_equal(dg1.data(), dg2.data(), dg1.size()));
    CHECK(bitwise_equal(d1.data(), d2.data(), d1.size()));
  }
}

TEST_CASE("riemann quadratic kernel: avx2 bitwise-matches scalar reference") {
  const Kernels* avx = kernels_for(Lane::avx2);
  if (!avx) {
    MESSAGE("avx2 unavailable on this CPU, lane equivalence skipped");
    return;
  }
  const Kernels* ref = kernels_for(Lane::scalar);
  Rng rng(derive_seed(7, "simd-riemann"));
  std::vector<double> gamma(1000), k1(10000), k2(10000);
  for (int t = 0; t < 5; ++t) {
    for (auto& v : gamma) v = rng.uniform(-2.0, 2.0);
    ref->riemann_quadratic(gamma.data(), k1.data());
    avx->riemann_quadratic(gamma.data(), k2.data());
    CHECK(bitwise_equal(k1.data(), k2.data(), k1.size()));
  }
}

TEST_CASE("kernel path matches generic jet evaluation") {
  // the dispatched drivers must agree with the plain Jet2<double> path
  Rng rng(derive_seed(7, "simd-vs-generic"));
  geom::ConfigMetric metric(1.3);
  double q[10];
  for (auto& v : q) v = rng.uniform(-0.8, 0.8);
  auto fast = geom::metric_jets(metric, q);
  auto slow = geom::metric_jets_generic(metric, q);
  CHECK(max_abs(fast.g - slow.g) < 1e-14);
  double worst = 0.0;
  for (std::size_t i = 0; i < fast.dg.size(); ++i)
    worst = std::max(worst, std::abs(fast.dg[i] - slow.dg[i]));
  for (std::size_t i = 0; i < fast.d2g.size(); ++i)
    worst = std::max(worst, std::abs(fast.d2g[i] - slow.d2g[i]));
  CHECK(worst < 1e-13);

  auto chi = Poly10::random(rng, 8, 2, 0.05);
  chi.constant = 1.5;
  geom::ConformalConfigMetric gbar{metric, chi};
  auto fastc = geom::metric_jets(gbar, q);
  auto slowc = geom::metric_jets_generic(gbar, q);
  CHECK(max_abs(fastc.g - slowc.g) < 1e-14);
  worst = 0.0;
  for (std::size_t i = 0; i < fastc.d2g.size(); ++i)
    worst = std::max(worst, std::abs(fastc.d2g[i] - slowc.d2g[i]));
  CHECK(worst < 1e-12);
}

TEST_CASE("curvature result is lane-independent bitwise") {
  if (!cpu_has_avx2()) {
    MESSAGE("avx2 unavailable on this CPU, lane equivalence skipped");
    return;
  }
  Rng rng(derive_seed(7, "simd-curv"));
  geom::ConfigMetric metric(0.9);
  double q[10];
  for (auto& v : q) v = rng.uniform(-0.7, 0.7);
  force_lane(Lane::scalar);
  auto r1 = geom::curvature(metric, q);
  force_lane(Lane::avx2);
  auto r2 = geom::curvature(metric, q);
  reset_lane();
  CHECK(std::memcmp(&r1.scalar, &r2.scalar, sizeof(double)) == 0);
  CHECK(bitwise_equal(r1.riemann_low.data(), r2.riemann_low.data(), r1.riemann_low.size()));
}
