#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "topgeo/core/cx.hpp"
#include "topgeo/core/dual.hpp"
#include "topgeo/core/mat.hpp"
#include "topgeo/core/poly.hpp"
#include "topgeo/core/rng.hpp"

using namespace topgeo;

TEST_CASE("dual first derivatives match closed forms") {
  Dual<double> x{0.7, 1.0};
  auto y = sin(x) * cos(x) + exp(x) / (x + 2.0);
  double fd;
  {
    double h = 1e-7;
    auto f = [](double t) { return std::sin(t) * std::cos(t) + std::exp(t) / (t + 2.0); };
    fd = (f(0.7 + h) - f(0.7 - h)) / (2 * h);
  }
  CHECK(y.b == doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("nested duals give exact mixed second derivatives") {
  // f = sin(x) sinh(y); d2f/dxdy = cos(x) cosh(y)
  auto x = jet2_seed<double>(0.4, true, false);
  auto y = jet2_seed<double>(-0.3, false, true);
  auto f = sin(x) * sinh(y);
  CHECK(f.b.b == doctest::Approx(std::cos(0.4) * std::cosh(-0.3)).epsilon(1e-14));
  CHECK(f.a.b == doctest::Approx(std::cos(0.4) * std::sinh(-0.3)).epsilon(1e-14));
  CHECK(f.b.a == doctest::Approx(std::sin(0.4) * std::cosh(-0.3)).epsilon(1e-14));
}

TEST_CASE("second derivative along one direction") {
  auto x = jet2_seed<double>(0.9, true, true);
  auto f = exp(x * x);
  double v = std::exp(0.81);
  CHECK(f.b.b == doctest::Approx((2.0 + 4.0 * 0.81) * v).epsilon(1e-13));
}

TEST_CASE("powr and sqrt on duals") {
  auto x = jet2_seed<double>(2.3, true, true);
  auto f = powr(x, -0.25);
  CHECK(f.a.a == doctest::Approx(std::pow(2.3, -0.25)));
  CHECK(f.a.b == doctest::Approx(-0.25 * std::pow(2.3, -1.25)).epsilon(1e-13));
  auto g = sqrt(x);
  CHECK(g.b.b == doctest::Approx(-0.25 * std::pow(2.3, -1.5)).epsilon(1e-13));
}

TEST_CASE("complex over duals") {
  Cx<Dual<double>> z{{0.3, 1.0}, {0.7, 0.0}};
  auto w = z * z;
  CHECK(w.re.a == doctest::Approx(0.3 * 0.3 - 0.7 * 0.7));
  CHECK(w.re.b == doctest::Approx(2 * 0.3));
  auto e = cis(Dual<double>{0.5, 1.0});
  CHECK(e.re.b == doctest::Approx(-std::sin(0.5)));
  CHECK(e.im.b == doctest::Approx(std::cos(0.5)));
}

TEST_CASE("matrix inverse and determinant") {
  Rng rng(42);
  Mat<double, 6, 6> a;
  for (auto& v : a.m) v = rng.uniform(-1, 1);
  auto ai = inverse(a);
  auto id = a * ai;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(id(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-10));
  CHECK(determinant(a) * determinant(ai) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("rng determinism and range") {
  Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) {
    double x = a.uniform(-2, 3);
    CHECK(x == b.uniform(-2, 3));
    CHECK(x >= -2);
    CHECK(x < 3);
  }
  CHECK(derive_seed(1, "alpha") != derive_seed(1, "beta"));
  CHECK(derive_seed(1, "alpha") == derive_seed(1, "alpha"));
}

TEST_CASE("polynomial jets") {
  Rng rng(7);
  auto p = Poly10::random(rng, 12, 3, 1.0);
  double q[10];
  for (int i = 0; i < 10; ++i) q[i] = rng.uniform(-0.5, 0.5);
  // d/dq3 via dual vs finite difference
  Dual<double> qd[10];
  for (int i = 0; i < 10; ++i) qd[i] = {q[i], i == 3 ? 1.0 : 0.0};
  double d_exact = p.eval(qd).b;
  double h = 1e-6;
  double qp[10], qm[10];
  for (int i = 0; i < 10; ++i) qp[i] = qm[i] = q[i];
  qp[3] += h;
  qm[3] -= h;
  CHECK(d_exact == doctest::Approx((p.eval(qp) - p.eval(qm)) / (2 * h)).epsilon(1e-6));
}
