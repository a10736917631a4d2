#include "beampaco/lambert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

// Multiple-revolution Lambert solver in the Lancaster-Blanchard
// formulation: the problem is reduced to the non-dimensional time-of-flight
// equation T(x; lambda, N) and solved with Householder iterations.

namespace beampaco {

namespace {

constexpr double kTofTolerance = 1e-9;  // relative, on non-dimensional T

double hypergeometric_f(double z, double tol) {
  double sj = 1.0;
  double cj = 1.0;
  double err = 1.0;
  for (int j = 0; err > tol && j < 1000; ++j) {
    const double cj1 = cj * (3.0 + j) * (1.0 + j) / (2.5 + j) * z / (j + 1.0);
    sj += cj1;
    err = std::abs(cj1);
    cj = cj1;
  }
  return sj;
}

class TofEquation {
public:
  explicit TofEquation(double lambda) : lambda_(lambda) {}

  // Lagrange form, used away from x = 1.
  double tof_lagrange(double x, int revs) const {
    const double a = 1.0 / (1.0 - x * x);
    if (a > 0.0) {
      const double alfa = 2.0 * std::acos(x);
      double beta = 2.0 * std::asin(std::sqrt(lambda_ * lambda_ / a));
      if (lambda_ < 0.0) beta = -beta;
      return a * std::sqrt(a) * ((alfa - std::sin(alfa)) - (beta - std::sin(beta)) + kTwoPi * revs) /
             2.0;
    }
    const double alfa = 2.0 * std::acosh(x);
    double beta = 2.0 * std::asinh(std::sqrt(-lambda_ * lambda_ / a));
    if (lambda_ < 0.0) beta = -beta;
    return -a * std::sqrt(-a) * ((beta - std::sinh(beta)) - (alfa - std::sinh(alfa))) / 2.0;
  }

  double tof(double x, int revs) const {
    constexpr double kBattin = 0.01;
    constexpr double kLagrange = 0.2;
    const double dist = std::abs(x - 1.0);
    if (dist < kLagrange && dist > kBattin) return tof_lagrange(x, revs);

    const double k = lambda_ * lambda_;
    const double e = x * x - 1.0;
    const double rho = std::abs(e);
    const double z = std::sqrt(1.0 + k * e);
    if (dist < kBattin) {
      const double eta = z - lambda_ * x;
      const double s1 = 0.5 * (1.0 - lambda_ - x * eta);
      const double q = 4.0 / 3.0 * hypergeometric_f(s1, 1e-11);
      return (eta * eta * eta * q + 4.0 * lambda_ * eta) / 2.0 + revs * kPi / std::pow(rho, 1.5);
    }
    const double y = std::sqrt(rho);
    const double g = x * z - lambda_ * e;
    double d = 0.0;
    if (e < 0.0) {
      d = revs * kPi + std::acos(g);
    } else {
      const double f = y * (z - lambda_ * x);
      d = std::log(f + g);
    }
    return (x - lambda_ * z - d / y) / e;
  }

  // First three derivatives of T with respect to x, given T(x).
  void derivatives(double x, double t, double& dt, double& ddt, double& dddt) const {
    const double l2 = lambda_ * lambda_;
    const double l3 = l2 * lambda_;
    const double umx2 = 1.0 - x * x;
    const double y = std::sqrt(1.0 - l2 * umx2);
    const double y2 = y * y;
    const double y3 = y2 * y;
    dt = 1.0 / umx2 * (3.0 * t * x - 2.0 + 2.0 * l3 * x / y);
    ddt = 1.0 / umx2 * (3.0 * t + 5.0 * x * dt + 2.0 * (1.0 - l2) * l3 / y3);
    dddt = 1.0 / umx2 * (7.0 * x * ddt + 8.0 * dt - 6.0 * (1.0 - l2) * l2 * l3 * x / y3 / y2);
  }

  // Householder iterations on T(x) = target; returns false on divergence.
  bool householder(double target, double& x, int revs, double eps, int max_iter) const {
    double err = 1.0;
    for (int it = 0; err > eps && it < max_iter; ++it) {
      const double t = tof(x, revs);
      double dt, ddt, dddt;
      derivatives(x, t, dt, ddt, dddt);
      const double delta = t - target;
      const double dt2 = dt * dt;
      const double xnew =
          x - delta * (dt2 - delta * ddt / 2.0) / (dt * (dt2 - delta * ddt) + dddt * delta * delta / 6.0);
      if (!std::isfinite(xnew)) return false;
      err = std::abs(x - xnew);
      x = xnew;
    }
    if (!(x > -1.0) || (revs > 0 && !(x < 1.0))) return false;
    return std::abs(tof(x, revs) - target) <= kTofTolerance * target;
  }

  double lambda() const { return lambda_; }

private:
  double lambda_;
};

struct Geometry {
  Vec3 ir1, ir2, it1, it2;
  double r1 = 0.0, r2 = 0.0, chord = 0.0, semi_perimeter = 0.0;
  bool long_way = false;
};

Geometry make_geometry(const Vec3& r1, const Vec3& r2, const Vec3& reference_normal,
                       bool require_plane) {
  Geometry g;
  g.r1 = r1.norm();
  g.r2 = r2.norm();
  if (!(g.r1 > 0.0) || !(g.r2 > 0.0) || !r1.allFinite() || !r2.allFinite()) {
    throw std::invalid_argument("Lambert: position vectors must be finite and non-zero");
  }
  g.chord = (r2 - r1).norm();
  g.semi_perimeter = 0.5 * (g.r1 + g.r2 + g.chord);
  g.ir1 = r1 / g.r1;
  g.ir2 = r2 / g.r2;

  const Vec3 cross = g.ir1.cross(g.ir2);
  const double angle = std::atan2(cross.norm(), g.ir1.dot(g.ir2));
  if (require_plane && (angle > kPi - kLambertSingularityMargin || angle < kLambertSingularityMargin)) {
    throw DegenerateGeometry("Lambert: transfer plane undefined for (anti)parallel position vectors");
  }
  if (cross.norm() == 0.0) return g;

  const Vec3 ih = cross.normalized();
  g.long_way = ih.dot(reference_normal) < 0.0;
  if (g.long_way) {
    g.it1 = g.ir1.cross(ih).normalized();
    g.it2 = g.ir2.cross(ih).normalized();
  } else {
    g.it1 = ih.cross(g.ir1).normalized();
    g.it2 = ih.cross(g.ir2).normalized();
  }
  return g;
}

}  // namespace

std::vector<LambertSolution> solve_lambert(const Vec3& r1, const Vec3& r2, double tof, double mu,
                                           int max_revs, const Vec3& reference_normal) {
  if (!(tof > 0.0) || !std::isfinite(tof)) throw std::invalid_argument("Lambert: tof must be positive");
  if (!(mu > 0.0)) throw std::invalid_argument("Lambert: mu must be positive");
  if (max_revs < 0) throw std::invalid_argument("Lambert: max_revs must be non-negative");

  const Geometry geo = make_geometry(r1, r2, reference_normal, true);
  const double s = geo.semi_perimeter;
  const double lambda2 = 1.0 - geo.chord / s;
  double lambda = std::sqrt(std::max(lambda2, 0.0));
  if (geo.long_way) lambda = -lambda;
  const double lambda3 = lambda * lambda2;
  const double t_target = std::sqrt(2.0 * mu / (s * s * s)) * tof;
  const TofEquation eq(lambda);

  // Largest revolution count admitting a solution.
  int n_max = static_cast<int>(t_target / kPi);
  const double t00 = std::acos(lambda) + lambda * std::sqrt(1.0 - lambda2);
  const double t0 = t00 + n_max * kPi;
  const double t1 = 2.0 / 3.0 * (1.0 - lambda3);
  if (n_max > 0 && t_target < t0) {
    // Halley iterations for the minimum-time point of the n_max curve.
    double x_old = 0.0;
    double x_new = 0.0;
    double t_min = t0;
    for (int it = 0; it <= 12; ++it) {
      double dt, ddt, dddt;
      eq.derivatives(x_old, t_min, dt, ddt, dddt);
      if (dt != 0.0) x_new = x_old - dt * ddt / (ddt * ddt - dt * dddt / 2.0);
      if (std::abs(x_old - x_new) < 1e-13) break;
      t_min = eq.tof(x_new, n_max);
      x_old = x_new;
    }
    if (t_min > t_target) n_max -= 1;
  }
  n_max = std::min(n_max, max_revs);

  std::vector<double> xs;
  std::vector<LambertSolution> out;
  out.reserve(2 * static_cast<std::size_t>(n_max) + 1);

  auto emit = [&](double x, int revs, LambertBranch branch) {
    const double gamma = std::sqrt(mu * s / 2.0);
    const double rho = (geo.r1 - geo.r2) / geo.chord;
    const double sigma = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    const double y = std::sqrt(1.0 - lambda2 + lambda2 * x * x);
    const double vr1 = gamma * ((lambda * y - x) - rho * (lambda * y + x)) / geo.r1;
    const double vr2 = -gamma * ((lambda * y - x) + rho * (lambda * y + x)) / geo.r2;
    const double vt = gamma * sigma * (y + lambda * x);
    LambertSolution sol;
    sol.departure_velocity = vr1 * geo.ir1 + vt / geo.r1 * geo.it1;
    sol.arrival_velocity = vr2 * geo.ir2 + vt / geo.r2 * geo.it2;
    sol.revolutions = revs;
    sol.branch = branch;
    if (sol.departure_velocity.allFinite() && sol.arrival_velocity.allFinite()) out.push_back(sol);
  };

  // Zero-revolution arc.
  double x0;
  if (t_target >= t00) {
    x0 = -(t_target - t00) / (t_target - t00 + 4.0);
  } else if (t_target <= t1) {
    x0 = t1 * (t1 - t_target) / (2.0 / 5.0 * (1.0 - lambda2 * lambda3) * t_target) + 1.0;
  } else {
    x0 = std::pow(t_target / t00, std::numbers::ln2 / std::log(t1 / t00)) - 1.0;
  }
  if (eq.householder(t_target, x0, 0, 1e-13, 30)) emit(x0, 0, LambertBranch::single);

  for (int revs = 1; revs <= n_max; ++revs) {
    double tmp = std::pow((revs * kPi + kPi) / (8.0 * t_target), 2.0 / 3.0);
    double x_left = (tmp - 1.0) / (tmp + 1.0);
    if (eq.householder(t_target, x_left, revs, 1e-13, 30)) emit(x_left, revs, LambertBranch::left);
    tmp = std::pow((8.0 * t_target) / (revs * kPi), 2.0 / 3.0);
    double x_right = (tmp - 1.0) / (tmp + 1.0);
    if (eq.householder(t_target, x_right, revs, 1e-13, 30)) emit(x_right, revs, LambertBranch::right);
  }
  return out;
}

double barker_parabolic_tof(const Vec3& r1, const Vec3& r2, double mu, const Vec3& reference_normal) {
  if (!(mu > 0.0)) throw std::invalid_argument("barker_parabolic_tof: mu must be positive");
  const Geometry geo = make_geometry(r1, r2, reference_normal, false);
  const double s = geo.semi_perimeter;
  const double rest = std::max(0.0, s - geo.chord);
  const double sign = geo.long_way ? -1.0 : 1.0;
  const double tp = std::sqrt(2.0) / 3.0 / std::sqrt(mu) * (std::pow(s, 1.5) - sign * std::pow(rest, 1.5));
  return std::max(tp, 0.0);
}

std::optional<Transfer> cheapest_transfer(const Vec3& r1, const Vec3& v1, const Vec3& r2,
                                          const Vec3& v2, double tof, double mu, int max_revs) {
  Vec3 normal = r1.cross(v1);
  if (!(normal.norm() > 0.0)) normal = Vec3::UnitZ();
  std::vector<LambertSolution> solutions;
  try {
    solutions = solve_lambert(r1, r2, tof, mu, max_revs, normal);
  } catch (const DegenerateGeometry&) {
    return std::nullopt;
  }
  std::optional<Transfer> best;
  for (const auto& sol : solutions) {
    const double dv = (sol.departure_velocity - v1).norm() + (v2 - sol.arrival_velocity).norm();
    // Solutions arrive ordered by revolution count, so strict < keeps the
    // fewest-revolution arc on ties.
    if (!best || dv < best->delta_v) best = Transfer{dv, sol};
  }
  return best;
}

}  // namespace beampaco
