#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "beampaco/units.hpp"

namespace beampaco {

/// Thrown when r1 and r2 are (anti)parallel within the singularity margin,
/// leaving the transfer plane undefined.
class DegenerateGeometry : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Transfer angles within this distance (rad) of pi or 0 are rejected.
inline constexpr double kLambertSingularityMargin = 1e-6;

enum class LambertBranch { single, left, right };

struct LambertSolution {
  Vec3 departure_velocity = Vec3::Zero();
  Vec3 arrival_velocity = Vec3::Zero();
  int revolutions = 0;
  LambertBranch branch = LambertBranch::single;
};

/// All conic arcs from r1 to r2 with flight time `tof` (s) and at most
/// `max_revs` complete revolutions, flown in the prograde sense about
/// `reference_normal`: the transfer angle is taken in [0, pi) when
/// (r1 x r2) . reference_normal >= 0 and in (pi, 2 pi) otherwise.
///
/// The 0-revolution arc comes first, followed by the left and right
/// branches of every feasible revolution count in increasing order. Counts
/// whose minimum flight time exceeds `tof` are absent.
std::vector<LambertSolution> solve_lambert(const Vec3& r1, const Vec3& r2, double tof, double mu,
                                           int max_revs,
                                           const Vec3& reference_normal = Vec3::UnitZ());

/// Parabolic flight time between r1 and r2 (Barker/Euler), the lower bound
/// on elliptic transfer times for this geometry. Transfer sense as in
/// solve_lambert.
double barker_parabolic_tof(const Vec3& r1, const Vec3& r2, double mu,
                            const Vec3& reference_normal = Vec3::UnitZ());

struct Transfer {
  double delta_v = 0.0;  // m/s, departure plus arrival impulse
  LambertSolution solution;
};

/// Lowest-delta-v arc matching v1 at r1 and v2 at r2. Ties keep the arc with
/// fewer revolutions. The transfer sense follows the departure orbit normal
/// r1 x v1. Returns nullopt for degenerate geometry or when no arc exists.
std::optional<Transfer> cheapest_transfer(const Vec3& r1, const Vec3& v1, const Vec3& r2,
                                          const Vec3& v2, double tof, double mu, int max_revs);

}  // namespace beampaco
