#include "satrrm/constellation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace satrrm {

namespace {

constexpr double kStarInclinationThresholdDeg = 80.0;

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw std::invalid_argument("constellation." + field + ": " + why);
}

}  // namespace

void ConstellationSpec::validate() const {
  if (planes < 1) bad_field("planes", "must be >= 1");
  if (sats_per_plane < 1) bad_field("sats_per_plane", "must be >= 1");
  if (!(altitude_km > 0.0)) bad_field("altitude_km", "must be > 0");
  if (!(inclination_deg > 0.0 && inclination_deg <= 180.0))
    bad_field("inclination_deg", "must be in (0, 180]");
  if (!std::isfinite(phasing_offset)) bad_field("phasing_offset", "must be finite");
  if (!(polar_latitude_cutoff_deg >= 0.0 && polar_latitude_cutoff_deg <= 90.0))
    bad_field("polar_latitude_cutoff_deg", "must be in [0, 90]");
  if (!(max_isl_range_km > 0.0)) bad_field("max_isl_range_km", "must be > 0");
}

Roster build_constellation(const ConstellationSpec& spec) {
  spec.validate();

  Roster roster;
  roster.spec = spec;
  roster.variant = spec.inclination_deg >= kStarInclinationThresholdDeg
                       ? WalkerVariant::Star
                       : WalkerVariant::Delta;
  roster.orbit_radius_km = kEarthRadiusKm + spec.altitude_km;
  const double a = roster.orbit_radius_km;
  roster.mean_motion_rad_s = std::sqrt(kMuEarthKm3S2 / (a * a * a));

  const double raan_span =
      roster.variant == WalkerVariant::Star ? kPi : 2.0 * kPi;
  roster.plane_raan_rad.resize(spec.planes);
  for (int p = 0; p < spec.planes; ++p)
    roster.plane_raan_rad[p] = raan_span * p / spec.planes;

  roster.epoch_arg_lat_rad.resize(spec.count());
  for (int p = 0; p < spec.planes; ++p) {
    for (int k = 0; k < spec.sats_per_plane; ++k) {
      const int flat = p * spec.sats_per_plane + k;
      roster.epoch_arg_lat_rad[flat] =
          2.0 * kPi * (k + spec.phasing_offset * p) / spec.sats_per_plane;
    }
  }
  return roster;
}

Vec3 satellite_position_km(const Roster& roster, int flat, double time_s) {
  const int p = flat / roster.spec.sats_per_plane;
  const double u = roster.epoch_arg_lat_rad[flat] +
                   roster.mean_motion_rad_s * time_s;
  const double raan = roster.plane_raan_rad[p];
  const double inc = roster.spec.inclination_deg * kPi / 180.0;

  const double cu = std::cos(u), su = std::sin(u);
  const double co = std::cos(raan), so = std::sin(raan);
  const double ci = std::cos(inc), si = std::sin(inc);

  return roster.orbit_radius_km *
         Vec3(cu * co - su * ci * so, cu * so + su * ci * co, su * si);
}

namespace {

// Plane index behind an inter-plane role, honoring the seam rule, or -1.
int partner_plane(const Roster& roster, int p, LinkRole role) {
  const int planes = roster.spec.planes;
  if (planes < 2) return -1;
  const bool star = roster.variant == WalkerVariant::Star;
  const bool seam_ok = roster.spec.seam_crosslinks_enabled;

  int right, left;
  if (star) {
    right = p + 1 < planes ? p + 1 : (seam_ok ? 0 : -1);
    left = p - 1 >= 0 ? p - 1 : (seam_ok ? planes - 1 : -1);
  } else {
    right = (p + 1) % planes;
    left = (p - 1 + planes) % planes;
  }
  if (left == right) left = -1;  // two-plane layouts collapse to one partner
  return role == LinkRole::InterRight ? right : left;
}

}  // namespace

TopologySnapshot propagate(const Roster& roster, int slot, double tau_s) {
  const int n = roster.size();
  const int s = roster.spec.sats_per_plane;
  const double time_s = slot * tau_s;

  TopologySnapshot snap;
  snap.slot = slot;
  snap.positions_km.resize(n);
  for (int i = 0; i < n; ++i)
    snap.positions_km[i] = satellite_position_km(roster, i, time_s);

  const double lat_cut_sin =
      std::sin(roster.spec.polar_latitude_cutoff_deg * kPi / 180.0);
  const double z_cut = roster.orbit_radius_km * lat_cut_sin;
  const double max_range = roster.spec.max_isl_range_km;

  snap.links.resize(n);
  for (int i = 0; i < n; ++i) {
    const int p = i / s;
    const int k = i % s;
    SatLinks& li = snap.links[i];

    // Intra-plane ring: always up.
    if (s >= 2) {
      li.neighbor[0] = p * s + (k + 1) % s;
      if (s >= 3) li.neighbor[1] = p * s + (k - 1 + s) % s;
    }

    // Inter-plane: fixed slot-index pairing, dropped above the polar cutoff
    // or beyond laser range.
    for (LinkRole role : {LinkRole::InterRight, LinkRole::InterLeft}) {
      const int q = partner_plane(roster, p, role);
      if (q < 0) continue;
      const int j = q * s + k;
      if (std::abs(snap.positions_km[i].z()) > z_cut) continue;
      if (std::abs(snap.positions_km[j].z()) > z_cut) continue;
      const double d = (snap.positions_km[i] - snap.positions_km[j]).norm();
      if (d > max_range) continue;
      li.neighbor[static_cast<int>(role)] = j;
    }

    for (int r = 0; r < kNumRoles; ++r) {
      if (li.neighbor[r] >= 0)
        li.distance_km[r] =
            (snap.positions_km[i] - snap.positions_km[li.neighbor[r]]).norm();
    }
  }
  return snap;
}

const std::array<int, kNumRoles>& neighbor_roles(const TopologySnapshot& snap,
                                                 const SatelliteId& id) {
  return snap.links[id.flat].neighbor;
}

}  // namespace satrrm
