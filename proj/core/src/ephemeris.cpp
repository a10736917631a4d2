#include "beampaco/ephemeris.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <limits>

namespace beampaco {

namespace {

constexpr int kNewtonIterations = 50;
constexpr double kKeplerTolerance = 1e-14;

// Stumpff functions C(z) and S(z).
double stumpff_c(double z) {
  if (z > 1e-6) return (1.0 - std::cos(std::sqrt(z))) / z;
  if (z < -1e-6) return (std::cosh(std::sqrt(-z)) - 1.0) / (-z);
  return 0.5 - z / 24.0 + z * z / 720.0 - z * z * z / 40320.0;
}

double stumpff_s(double z) {
  if (z > 1e-6) {
    const double sz = std::sqrt(z);
    return (sz - std::sin(sz)) / (sz * sz * sz);
  }
  if (z < -1e-6) {
    const double sz = std::sqrt(-z);
    return (std::sinh(sz) - sz) / (sz * sz * sz);
  }
  return 1.0 / 6.0 - z / 120.0 + z * z / 5040.0 - z * z * z / 362880.0;
}

Eigen::Matrix3d perifocal_to_inertial(double raan, double inclination, double arg_periapsis) {
  return (Eigen::AngleAxisd(raan, Vec3::UnitZ()) * Eigen::AngleAxisd(inclination, Vec3::UnitX()) *
          Eigen::AngleAxisd(arg_periapsis, Vec3::UnitZ()))
      .toRotationMatrix();
}

void require_elliptic(const OrbitalElements& el) {
  if (!(el.semi_major_axis > 0.0) || !(el.eccentricity >= 0.0) || !(el.eccentricity < 1.0)) {
    throw UnsupportedOrbit("only elliptic orbits (a > 0, 0 <= e < 1) are supported");
  }
}

}  // namespace

double wrap_two_pi(double angle) {
  double w = std::fmod(angle, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double solve_kepler(double mean_anomaly, double eccentricity) {
  if (!std::isfinite(mean_anomaly) || !std::isfinite(eccentricity)) {
    throw std::invalid_argument("solve_kepler: non-finite input");
  }
  if (eccentricity < 0.0 || eccentricity >= 1.0) {
    throw std::invalid_argument("solve_kepler: eccentricity must be in [0, 1)");
  }
  const double e = eccentricity;
  const double m = wrap_two_pi(mean_anomaly);
  const double branch = mean_anomaly - m;
  auto residual = [&](double ecc_anomaly) { return ecc_anomaly - e * std::sin(ecc_anomaly) - m; };

  double ecc_anomaly = e < 0.8 ? m : kPi;
  for (int it = 0; it < kNewtonIterations; ++it) {
    const double f = residual(ecc_anomaly);
    if (std::abs(f) <= kKeplerTolerance) return ecc_anomaly + branch;
    ecc_anomaly -= f / (1.0 - e * std::cos(ecc_anomaly));
  }
  if (std::abs(residual(ecc_anomaly)) <= kKeplerTolerance) return ecc_anomaly + branch;

  // The residual is monotone and the root lies within e of M.
  double lo = m - e;
  double hi = m + e;
  for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon(); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (residual(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi) + branch;
}

double orbital_period(const OrbitalElements& elements, double mu) {
  require_elliptic(elements);
  const double a = elements.semi_major_axis;
  return kTwoPi * std::sqrt(a * a * a / mu);
}

StateVector propagate(const OrbitalElements& elements, double epoch, double mu) {
  require_elliptic(elements);
  if (!std::isfinite(epoch)) throw std::invalid_argument("propagate: non-finite epoch");

  const double a = elements.semi_major_axis;
  const double e = elements.eccentricity;
  const double mean_motion = std::sqrt(mu / (a * a * a));
  const double mean_anomaly = wrap_two_pi(
      elements.mean_anomaly_ref + mean_motion * days_to_seconds(epoch - elements.epoch_ref));
  const double ecc_anomaly = solve_kepler(mean_anomaly, e);

  const double cos_e = std::cos(ecc_anomaly);
  const double sin_e = std::sin(ecc_anomaly);
  const double root = std::sqrt(1.0 - e * e);
  const double edot = mean_motion / (1.0 - e * cos_e);

  const Vec3 r_pf(a * (cos_e - e), a * root * sin_e, 0.0);
  const Vec3 v_pf(-a * sin_e * edot, a * root * cos_e * edot, 0.0);
  const Eigen::Matrix3d rot =
      perifocal_to_inertial(elements.raan, elements.inclination, elements.arg_periapsis);
  return {rot * r_pf, rot * v_pf, epoch};
}

OrbitalElements elements_from_state(const StateVector& state, double mu) {
  const Vec3& r = state.position;
  const Vec3& v = state.velocity;
  const double rn = r.norm();
  const Vec3 h = r.cross(v);
  const double hn = h.norm();
  if (!(rn > 0.0) || !(hn > 0.0)) throw UnsupportedOrbit("degenerate (rectilinear) state");

  const double energy = 0.5 * v.squaredNorm() - mu / rn;
  if (!(energy < 0.0)) throw UnsupportedOrbit("state is not on a bound orbit");

  const Vec3 e_vec = ((v.squaredNorm() - mu / rn) * r - r.dot(v) * v) / mu;
  const double e = e_vec.norm();
  const Vec3 h_hat = h / hn;

  OrbitalElements el;
  el.semi_major_axis = -mu / (2.0 * energy);
  el.eccentricity = e;
  el.inclination = std::atan2(std::hypot(h.x(), h.y()), h.z());
  el.epoch_ref = state.epoch;

  Vec3 node(-h.y(), h.x(), 0.0);
  constexpr double kSmall = 1e-11;
  if (node.norm() < kSmall * hn) {
    node = Vec3::UnitX();
    el.raan = 0.0;
  } else {
    node.normalize();
    el.raan = wrap_two_pi(std::atan2(node.y(), node.x()));
  }

  // Periapsis direction; falls back to the node line on circular orbits.
  Vec3 peri = node;
  if (e > kSmall) {
    peri = e_vec / e;
    el.arg_periapsis = wrap_two_pi(std::atan2(h_hat.dot(node.cross(peri)), node.dot(peri)));
  } else {
    el.arg_periapsis = 0.0;
  }
  const double true_anomaly = std::atan2(h_hat.dot(peri.cross(r)), peri.dot(r));
  const double ecc_anomaly =
      std::atan2(std::sqrt(1.0 - e * e) * std::sin(true_anomaly), e + std::cos(true_anomaly));
  el.mean_anomaly_ref = wrap_two_pi(ecc_anomaly - e * std::sin(ecc_anomaly));
  return el;
}

StateVector propagate_state(const StateVector& state, double dt, double mu) {
  const Vec3& r0v = state.position;
  const Vec3& v0v = state.velocity;
  const double r0 = r0v.norm();
  if (!(r0 > 0.0)) throw std::invalid_argument("propagate_state: zero position");
  if (dt == 0.0) return state;

  const double sqrt_mu = std::sqrt(mu);
  const double vr0 = r0v.dot(v0v) / r0;
  const double alpha = 2.0 / r0 - v0v.squaredNorm() / mu;

  // Universal Kepler equation F(chi) = sqrt(mu) dt, monotone in chi
  // (dF/dchi = r > 0), solved by bracketed Newton.
  auto eval = [&](double chi, double& f, double& df) {
    const double z = alpha * chi * chi;
    const double c = stumpff_c(z);
    const double s = stumpff_s(z);
    f = r0 * vr0 / sqrt_mu * chi * chi * c + (1.0 - alpha * r0) * chi * chi * chi * s + r0 * chi -
        sqrt_mu * dt;
    df = r0 * vr0 / sqrt_mu * chi * (1.0 - z * s) + (1.0 - alpha * r0) * chi * chi * c + r0;
  };

  double chi = sqrt_mu * std::abs(alpha) * dt;
  if (alpha < -1e-14) {
    const double a = 1.0 / alpha;
    const double sgn = dt > 0.0 ? 1.0 : -1.0;
    const double arg = (-2.0 * mu * alpha * dt) /
                       (r0v.dot(v0v) + sgn * std::sqrt(-mu * a) * (1.0 - r0 * alpha));
    if (arg > 0.0) chi = sgn * std::sqrt(-a) * std::log(arg);
  }
  if (!std::isfinite(chi) || chi == 0.0) chi = sqrt_mu * dt / r0;

  double f = 0.0;
  double df = 0.0;
  // Bracket the root.
  double lo = chi;
  double hi = chi;
  eval(chi, f, df);
  double step = std::max(std::abs(chi), 1.0);
  if (f > 0.0) {
    do {
      hi = lo;
      lo -= step;
      step *= 2.0;
      eval(lo, f, df);
    } while (f > 0.0);
  } else if (f < 0.0) {
    do {
      lo = hi;
      hi += step;
      step *= 2.0;
      eval(hi, f, df);
    } while (f < 0.0);
  }

  if (chi < lo || chi > hi) chi = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    eval(chi, f, df);
    if (f == 0.0) break;
    if (f < 0.0) {
      lo = chi;
    } else {
      hi = chi;
    }
    double next = chi - f / df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const bool done = std::abs(next - chi) <= 1e-15 * std::max(1.0, std::abs(chi));
    chi = next;
    if (done || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(chi)) break;
  }

  const double z = alpha * chi * chi;
  const double c = stumpff_c(z);
  const double s = stumpff_s(z);
  const double fl = 1.0 - chi * chi / r0 * c;
  const double gl = dt - chi * chi * chi * s / sqrt_mu;
  const Vec3 r = fl * r0v + gl * v0v;
  const double rn = r.norm();
  const double fdot = sqrt_mu / (rn * r0) * (alpha * chi * chi * chi * s - chi);
  const double gdot = 1.0 - chi * chi / rn * c;
  return {r, fdot * r0v + gdot * v0v, state.epoch + seconds_to_days(dt)};
}

double specific_energy(const StateVector& state, double mu) {
  return 0.5 * state.velocity.squaredNorm() - mu / state.position.norm();
}

int AsteroidDataset::find_external(long external_id) const {
  const auto it = std::find(external_ids.begin(), external_ids.end(), external_id);
  return it == external_ids.end() ? -1 : static_cast<int>(it - external_ids.begin());
}

}  // namespace beampaco
