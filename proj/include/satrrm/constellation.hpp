#pragma once

#include "satrrm/types.hpp"

#include <array>
#include <vector>

namespace satrrm {

/// Walker-style constellation description. Inclinations of 80 degrees and up
/// are laid out as a Walker star (planes over 180 deg, counter-rotating seam,
/// Iridium-like); anything flatter as a Walker delta (planes over 360 deg,
/// Starlink-like).
struct ConstellationSpec {
  int planes = 6;
  int sats_per_plane = 11;
  double altitude_km = 780.0;
  double inclination_deg = 86.4;
  /// Plane-to-plane phase shift in units of the in-plane slot spacing.
  double phasing_offset = 0.5;
  /// Whether the counter-rotating seam of a Walker star carries crosslinks.
  bool seam_crosslinks_enabled = false;
  /// Inter-plane ISLs shut down above this latitude (deg).
  double polar_latitude_cutoff_deg = 70.0;
  /// Inter-plane ISLs longer than this are down (laser terminal range).
  double max_isl_range_km = 5000.0;

  int count() const { return planes * sats_per_plane; }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

enum class WalkerVariant { Star, Delta };

/// Per-satellite link table of one snapshot. neighbor[r] is the flat id of
/// the satellite behind role r, or -1 when that terminal has no link in this
/// slot.
struct SatLinks {
  std::array<int, kNumRoles> neighbor{{-1, -1, -1, -1}};
  std::array<double, kNumRoles> distance_km{{0.0, 0.0, 0.0, 0.0}};

  bool present(int role) const { return neighbor[role] >= 0; }
  int degree() const {
    int d = 0;
    for (int r = 0; r < kNumRoles; ++r) d += present(r) ? 1 : 0;
    return d;
  }
};

/// Immutable picture of the network in one time slot: ECI positions plus the
/// ISL graph under the one-satellite-four-links rule. Pure function of
/// (roster, slot), safe to share read-only.
struct TopologySnapshot {
  int slot = 0;
  std::vector<Vec3> positions_km;
  std::vector<SatLinks> links;

  int size() const { return static_cast<int>(positions_km.size()); }

  /// Role under which `to` appears among `from`'s neighbors, or -1.
  int role_of(int from, int to) const {
    for (int r = 0; r < kNumRoles; ++r)
      if (links[from].neighbor[r] == to) return r;
    return -1;
  }

  double distance_km_of(int from, int role) const {
    return links[from].distance_km[role];
  }
};

/// Satellite roster on circular two-body orbits. Plane RAANs and per-sat
/// epoch arguments of latitude fully determine positions at any time.
struct Roster {
  ConstellationSpec spec;
  WalkerVariant variant = WalkerVariant::Star;
  double orbit_radius_km = 0.0;
  double mean_motion_rad_s = 0.0;
  std::vector<double> plane_raan_rad;      // per plane
  std::vector<double> epoch_arg_lat_rad;   // per satellite, flat order

  int size() const { return static_cast<int>(epoch_arg_lat_rad.size()); }

  SatelliteId id(int flat) const {
    SatelliteId s;
    s.plane = flat / spec.sats_per_plane;
    s.in_plane = flat % spec.sats_per_plane;
    s.flat = flat;
    return s;
  }

  double orbital_period_s() const { return 2.0 * kPi / mean_motion_rad_s; }
};

Roster build_constellation(const ConstellationSpec& spec);

/// ECI position (km) of one satellite at `time_s` past the epoch.
Vec3 satellite_position_km(const Roster& roster, int flat, double time_s);

/// Materialize the slot `slot` snapshot (positions, neighbor tuples,
/// distances) at epoch slot * tau_s.
TopologySnapshot propagate(const Roster& roster, int slot, double tau_s);

/// The ordered 4-tuple of optional next-hop ids for satellite `id`.
const std::array<int, kNumRoles>& neighbor_roles(const TopologySnapshot& snap,
                                                 const SatelliteId& id);

}  // namespace satrrm
