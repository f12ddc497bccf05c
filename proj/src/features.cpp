#include "satrrm/features.hpp"

#include <algorithm>
#include <cassert>

namespace satrrm {

namespace {
// Floor for the delay divisor in the shaped reward branch.
constexpr double kRewardDelayFloorS = 1e-3;
constexpr double kDestinationReward = 100.0;
}  // namespace

double orientation(const ServiceRequest& req, int i, int role,
                   const TopologySnapshot& snap) {
  const int j = snap.links[i].neighbor[role];
  if (j < 0) return 0.0;
  if (j == req.destination.flat) return 2.0;
  const Vec3& dest = snap.positions_km[req.destination.flat];
  const double di = (snap.positions_km[i] - dest).norm();
  const double dj = (snap.positions_km[j] - dest).norm();
  return dj < di ? 1.0 : -1.0;
}

double supply_demand(const ServiceRequest& req, int i, int role,
                     const TopologySnapshot& snap, const SlotLedger& ledger,
                     double rate_max_bps) {
  const int j = snap.links[i].neighbor[role];
  if (j < 0) return 0.0;
  if (j == req.destination.flat) return 1.0;
  double supply = 0.0;
  for (int r = 0; r < kNumRoles; ++r) {
    if (!snap.links[j].present(r)) continue;
    supply += ledger.edge(j, r).rate_bps / rate_max_bps;
  }
  const int demand = std::max(ledger.queue_len(j), 1);
  return supply / demand;
}

double success_prob(const ServiceRequest& req, int i, int role,
                    const TopologySnapshot& snap, const SlotLedger& ledger) {
  if (!snap.links[i].present(role)) return 0.0;
  const double residual = ledger.residual_bits(i, role);
  return std::clamp(residual / req.demand_bits, 0.0, 1.0);
}

Observation build_observation(const RequestRuntime& rt, int node,
                              const TopologySnapshot& snap,
                              const SlotLedger& ledger, double rate_max_bps) {
  Observation obs;
  const ServiceRequest& req = rt.request;
  for (int r = 0; r < kNumRoles; ++r) {
    if (!snap.links[node].present(r)) continue;
    obs.mask[r] = true;
    const int base = r * kFeaturesPerRole;
    obs.features[base + 0] = ledger.edge(node, r).rate_bps / rate_max_bps;
    obs.features[base + 1] = success_prob(req, node, r, snap, ledger);
    obs.features[base + 2] = orientation(req, node, r, snap);
    obs.features[base + 3] = supply_demand(req, node, r, snap, ledger, rate_max_bps);
  }
  obs.mask[kNoneAction] = true;
  return obs;
}

double phased_reward(const RequestRuntime& rt, int node, const Action& action,
                     const Observation& obs, const TopologySnapshot& snap,
                     const DelayBreakdown* delay) {
  if (action.is_none() || delay == nullptr) return 0.0;

  assert(action.index >= 0 && action.index < kNumRoles);
  const int target = snap.links[node].neighbor[action.index];
  if (target == rt.request.destination.flat) return kDestinationReward;

  bool dest_reachable = false;
  for (int r = 0; r < kNumRoles; ++r) {
    if (obs.mask[r] &&
        snap.links[node].neighbor[r] == rt.request.destination.flat) {
      dest_reachable = true;
      break;
    }
  }
  if (dest_reachable || !obs.any_role_valid()) return 0.0;

  const double delta = obs.orientation(action.index);
  const double chi = obs.supply_demand(action.index);
  const double hop_delay_s = std::max(delay->total_s, kRewardDelayFloorS);
  return delta * chi / hop_delay_s;
}

}  // namespace satrrm
