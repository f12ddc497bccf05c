#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>

namespace satrrm {

using Vec3 = Eigen::Vector3d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSpeedOfLightKmS = 299792.458;
inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kMuEarthKm3S2 = 398600.4418;

/// Fixed ordering of the four laser terminals on every satellite. The same
/// physical role maps to the same tuple position in every time slot, which is
/// what keeps the decision space identical across constellation scales.
enum class LinkRole : int {
  IntraFore = 0,   // next satellite along the orbit
  IntraAft = 1,    // previous satellite along the orbit
  InterRight = 2,  // same slot index, plane + 1
  InterLeft = 3,   // same slot index, plane - 1
};

inline constexpr int kNumRoles = 4;
inline constexpr int kNoneAction = 4;  // "hold the request this slot"
inline constexpr int kNumActions = kNumRoles + 1;
inline constexpr int kFeaturesPerRole = 4;
inline constexpr int kObservationDim = kNumRoles * kFeaturesPerRole;

struct SatelliteId {
  int plane = 0;
  int in_plane = 0;
  int flat = 0;  // plane * sats_per_plane + in_plane

  friend bool operator==(const SatelliteId&, const SatelliteId&) = default;
};

}  // namespace satrrm
