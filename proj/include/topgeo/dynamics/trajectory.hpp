#ifndef TOPGEO_DYNAMICS_TRAJECTORY_HPP
#define TOPGEO_DYNAMICS_TRAJECTORY_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "topgeo/geometry/jets.hpp"
#include "topgeo/geometry/metric.hpp"
#include "topgeo/spin/fields.hpp"
#include "topgeo/weyl/weyl.hpp"

namespace topgeo::dynamics {

using spin::FieldConfig;

// ---------------------------------------------------------------------------
// classical Lagrangian, both factorizations: via the configuration metric and
// via fourleg derivatives. sign follows the group-metric convention; sign=+1
// is the literal angular-velocity form.

struct ClassicalLagrangian {
  double value_metric_form = 0.0;   // -mc sqrt(-g_ij qdot qdot) + L_em
  double value_fourleg_form = 0.0;  // same radicand assembled from de/dsigma
  double l_em = 0.0;
};

inline ClassicalLagrangian lagrangian_classical(const PhysicalConstants& pc, const ConfigPoint& q,
                                                const Vec<double, 10>& qdot,
                                                const FieldConfig& fields,
                                                double sign = lorentz::kDefaultSign) {
  geom::ConfigMetric metric(pc.a, sign);
  auto qq = q.coords();
  Mat<double, 10, 10> g;
  metric.eval(qq.data(), g);
  double r3 = 0.0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) r3 -= g(i, j) * qdot[i] * qdot[j];

  // fourleg route: de^mu_a/dsigma = (thetadot^alpha Omega_alpha) e
  auto fr = lorentz::frame(qq.data() + 4);
  auto lam = lorentz::lorentz_matrix(qq.data() + 4);
  Mat<double, 4, 4> om_total;
  for (int al = 0; al < 6; ++al) om_total = om_total + fr.omega[al] * qdot[4 + al];
  auto edot = om_total * lam;
  auto mink = lorentz::minkowski();
  double omega_sq = 0.0;  // g_{mu nu} g^{ab} edot^mu_a edot^nu_b
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu) omega_sq += mink(mu, mu) * mink(a, a) * edot(mu, a) * edot(mu, a);
  double xdot2 = 0.0;
  for (int mu = 0; mu < 4; ++mu) xdot2 += mink(mu, mu) * qdot[mu] * qdot[mu];
  double r1 = -xdot2 + sign * pc.a * pc.a * omega_sq;

  if (r3 < 0.0 || r1 < 0.0) throw ImaginaryRadicand("spacelike configuration direction");

  Vec<double, 10> a_cov{};
  fields.a_cov(qq.data(), pc.a, a_cov.data());
  double lem = 0.0;
  for (int i = 0; i < 10; ++i) lem -= pc.e / pc.c * a_cov[i] * qdot[i];

  ClassicalLagrangian out;
  out.l_em = lem;
  out.value_metric_form = -pc.m * pc.c * std::sqrt(r3) + lem;
  out.value_fourleg_form = -pc.m * pc.c * std::sqrt(r1) + lem;
  return out;
}

// ---------------------------------------------------------------------------
// Hamilton-Jacobi velocity field dq/dsigma = gbar^{ij} (d_j S - (e/c) A_j)
// with dS and chi read off psi: dS = hbar Im(dpsi/psi), chi = |psi|^{-1/4}.

template <class PsiF>
Vec<double, 10> velocity_field(const PsiF& psi, const double* q, const FieldConfig& fields,
                               const PhysicalConstants& pc, const geom::ConfigMetric& metric,
                               double amp_floor = 1e-12) {
  Cxd p0{};
  Vec<double, 10> ds{};
  for (int k = 0; k < 10; ++k) {
    Dual<double> qd[10];
    for (int i = 0; i < 10; ++i) qd[i] = {q[i], i == k ? 1.0 : 0.0};
    Cx<Dual<double>> pv = psi(qd);
    if (k == 0) p0 = {pv.re.a, pv.im.a};
    Cxd d{pv.re.b, pv.im.b};
    ds[k] = d.im * p0.re - d.re * p0.im;  // Im(d psi conj(psi)); divide by |psi|^2 below
  }
  double a2 = norm2(p0);
  if (!(a2 > amp_floor * amp_floor)) throw ZeroAmplitude("trajectory reached a node of psi");
  for (int k = 0; k < 10; ++k) ds[k] = pc.hbar * ds[k] / a2;

  Vec<double, 10> a_cov{};
  fields.a_cov(q, pc.a, a_cov.data());
  Vec<double, 10> p{};
  for (int i = 0; i < 10; ++i) p[i] = ds[i] - pc.e / pc.c * a_cov[i];

  Mat<double, 10, 10> g;
  metric.eval(q, g);
  auto ginv = inverse(g);
  double chi2 = std::pow(a2, -0.25);  // (|psi|^2)^{-1/4} = chi^2 for n = 10
  Vec<double, 10> v{};
  for (int i = 0; i < 10; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 10; ++j) acc += ginv(i, j) * p[j];
    v[i] = chi2 * acc;
  }
  return v;
}

// ---------------------------------------------------------------------------

struct TrajectoryState {
  double sigma = 0.0;
  double tau = 0.0;
  Vec<double, 10> q{};
  Vec<double, 4> y{};  // center-of-energy position, dy/dtau = e^mu_0
};

struct Trajectory {
  std::vector<TrajectoryState> samples;
  double step = 0.0;
  int integrator_order = 4;
  std::uint64_t seed = 0;
  bool truncated = false;
  std::string truncation_reason;
};

namespace detail {

struct OdeState {
  Vec<double, 10> q{};
  double tau = 0.0;
  Vec<double, 4> y{};

  OdeState scaled_add(const OdeState& d, double w) const {
    OdeState out = *this;
    for (int i = 0; i < 10; ++i) out.q[i] += w * d.q[i];
    out.tau += w * d.tau;
    for (int i = 0; i < 4; ++i) out.y[i] += w * d.y[i];
    return out;
  }
};

}  // namespace detail

// Fixed-step classical 4th-order integration of the velocity field, with
// proper time and the center-of-energy line accumulated through the same
// tableau (keeps the measured order at 4).
template <class PsiF>
Trajectory integrate_trajectory(const PsiF& psi, const ConfigPoint& start, double span, int steps,
                                const FieldConfig& fields, const PhysicalConstants& pc,
                                const geom::ConfigMetric& metric) {
  Trajectory traj;
  traj.step = steps > 0 ? span / steps : 0.0;

  auto deriv = [&](const detail::OdeState& s) {
    detail::OdeState d;
    auto v = velocity_field(psi, s.q.data(), fields, pc, metric);
    d.q = v;
    double r = v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3];
    if (r < 0.0) throw ImaginaryRadicand("spacelike step in trajectory");
    d.tau = std::sqrt(r);
    auto lam = lorentz::lorentz_matrix(s.q.data() + 4);
    for (int mu = 0; mu < 4; ++mu) d.y[mu] = lam(mu, 0) * d.tau;
    return d;
  };

  detail::OdeState s;
  s.q = start.coords();
  s.y = {start.x[0], start.x[1], start.x[2], start.x[3]};

  auto record = [&traj](double sigma, const detail::OdeState& st) {
    traj.samples.push_back({sigma, st.tau, st.q, st.y});
  };
  record(0.0, s);

  double h = traj.step;
  for (int n = 0; n < steps; ++n) {
    try {
      auto k1 = deriv(s);
      auto k2 = deriv(s.scaled_add(k1, 0.5 * h));
      auto k3 = deriv(s.scaled_add(k2, 0.5 * h));
      auto k4 = deriv(s.scaled_add(k3, h));
      detail::OdeState next = s;
      for (int i = 0; i < 10; ++i)
        next.q[i] += h / 6.0 * (k1.q[i] + 2 * k2.q[i] + 2 * k3.q[i] + k4.q[i]);
      next.tau += h / 6.0 * (k1.tau + 2 * k2.tau + 2 * k3.tau + k4.tau);
      for (int i = 0; i < 4; ++i)
        next.y[i] += h / 6.0 * (k1.y[i] + 2 * k2.y[i] + 2 * k3.y[i] + k4.y[i]);
      s = next;
    } catch (const ZeroAmplitude& ex) {
      traj.truncated = true;
      traj.truncation_reason = ex.what();
      break;
    }
    record((n + 1) * h, s);
  }
  return traj;
}

// ---------------------------------------------------------------------------

struct ZitterbewegungReport {
  double max_deviation = 0.0;        // max |x_spatial - y_spatial|
  double dominant_frequency = 0.0;   // rad per unit tau, discrete Fourier peak
  double dominant_amplitude = 0.0;
  double compton_frequency = 0.0;    // 2 m c^2 / hbar, qualitative comparison scale
  double rbar_sqrtg_min = 0.0;       // Rbar sqrt(gbar) transported along the path
  double rbar_sqrtg_max = 0.0;
  double rbar_sqrtg_spread = 0.0;    // relative, diagnostic only
};

template <class PsiF>
ZitterbewegungReport zitterbewegung_report(const Trajectory& traj, const PsiF& psi,
                                           const PhysicalConstants& pc,
                                           const geom::ConfigMetric& metric) {
  if (traj.samples.size() < 100) throw TooShort("need at least 100 trajectory samples");
  const auto& ss = traj.samples;
  std::size_t n = ss.size();

  std::vector<double> dev(n), tau(n);
  for (std::size_t i = 0; i < n; ++i) {
    double dx1 = ss[i].q[1] - ss[i].y[1];
    double dx2 = ss[i].q[2] - ss[i].y[2];
    double dx3 = ss[i].q[3] - ss[i].y[3];
    dev[i] = std::sqrt(dx1 * dx1 + dx2 * dx2 + dx3 * dx3);
    tau[i] = ss[i].tau;
  }

  ZitterbewegungReport rep;
  rep.max_deviation = *std::max_element(dev.begin(), dev.end());
  rep.compton_frequency = 2.0 * pc.m * pc.c * pc.c / pc.hbar;

  // detrend, then scan harmonics of the tau window for the peak
  double t0 = tau.front(), t1 = tau.back();
  double tspan = t1 - t0;
  if (tspan > 0.0) {
    double mean_t = 0.0, mean_d = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      mean_t += tau[i];
      mean_d += dev[i];
    }
    mean_t /= double(n);
    mean_d /= double(n);
    double stt = 0.0, std_ = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      stt += (tau[i] - mean_t) * (tau[i] - mean_t);
      std_ += (tau[i] - mean_t) * (dev[i] - mean_d);
    }
    double slope = stt > 0 ? std_ / stt : 0.0;
    std::vector<double> res(n);
    for (std::size_t i = 0; i < n; ++i) res[i] = dev[i] - mean_d - slope * (tau[i] - mean_t);

    std::size_t kmax = n / 2;
    for (std::size_t k = 1; k <= kmax; ++k) {
      double w = 2.0 * M_PI * double(k) / tspan;
      double cre = 0.0, cim = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        cre += res[i] * std::cos(w * (tau[i] - t0));
        cim += res[i] * std::sin(w * (tau[i] - t0));
      }
      double amp = 2.0 / double(n) * std::sqrt(cre * cre + cim * cim);
      if (amp > rep.dominant_amplitude) {
        rep.dominant_amplitude = amp;
        rep.dominant_frequency = w;
      }
    }
  }

  // Rbar sqrt(gbar) along the path: chi from psi, Rbar = chi^2 R_W,
  // sqrt(gbar) = chi^{-n} sqrt(g)
  struct ChiOfPsi {
    const PsiF* psi;
    template <class S>
    S operator()(const S* q) const {
      return powr(norm2((*psi)(q)), -0.125);
    }
  };
  ChiOfPsi chi{&psi};
  double vmin = 0.0, vmax = 0.0;
  bool first = true;
  std::size_t stride = std::max<std::size_t>(1, n / 16);
  for (std::size_t i = 0; i < n; i += stride) {
    auto ws = weyl::weyl_scalar_curvature(metric, chi, ss[i].q.data());
    double c0 = value(chi(ss[i].q.data()));
    Mat<double, 10, 10> g;
    metric.eval(ss[i].q.data(), g);
    double sqrtg = std::sqrt(std::abs(determinant(g)));
    double v = c0 * c0 * ws.value * std::pow(c0, -10.0) * sqrtg;
    vmin = first ? v : std::min(vmin, v);
    vmax = first ? v : std::max(vmax, v);
    first = false;
  }
  rep.rbar_sqrtg_min = vmin;
  rep.rbar_sqrtg_max = vmax;
  double scale = std::max(std::abs(vmin), std::abs(vmax));
  rep.rbar_sqrtg_spread = scale > 0 ? (vmax - vmin) / scale : 0.0;
  return rep;
}

}  // namespace topgeo::dynamics

#endif
