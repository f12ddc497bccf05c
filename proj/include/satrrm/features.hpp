#pragma once

#include "satrrm/netsim.hpp"

#include <array>

namespace satrrm {

/// Next-hop choice: one of the four link roles, or None (hold this slot).
struct Action {
  int index = kNoneAction;

  bool is_none() const { return index == kNoneAction; }
  static Action none() { return Action{kNoneAction}; }
  static Action role(int r) { return Action{r}; }

  friend bool operator==(const Action&, const Action&) = default;
};

/// Per-decision state vector: 4 features for each of the 4 neighbor roles,
/// in fixed role order, plus the validity mask over the 5-way action space.
/// Roles with no link this slot contribute an all-zero block and mask=false;
/// None is always valid. The shape never depends on the constellation size.
struct Observation {
  Eigen::Matrix<double, kObservationDim, 1> features =
      Eigen::Matrix<double, kObservationDim, 1>::Zero();
  std::array<bool, kNumActions> mask{{false, false, false, false, true}};

  double norm_rate(int role) const { return features[role * kFeaturesPerRole + 0]; }
  double success_prob(int role) const { return features[role * kFeaturesPerRole + 1]; }
  double orientation(int role) const { return features[role * kFeaturesPerRole + 2]; }
  double supply_demand(int role) const { return features[role * kFeaturesPerRole + 3]; }

  bool any_role_valid() const {
    return mask[0] || mask[1] || mask[2] || mask[3];
  }
};

/// Service orientation of candidate role `role` at node `i`: 2 when the
/// neighbor is the destination, 1 when it is strictly closer to the
/// destination than i, -1 when not closer, 0 when the role has no link.
double orientation(const ServiceRequest& req, int i, int role,
                   const TopologySnapshot& snap);

/// Supply/demand ratio of the candidate: 1 at the destination, otherwise the
/// neighbor's summed normalized outgoing rate divided by its queue length
/// (floored at 1), 0 when the role has no link.
double supply_demand(const ServiceRequest& req, int i, int role,
                     const TopologySnapshot& snap, const SlotLedger& ledger,
                     double rate_max_bps);

/// Probability proxy for carrying the request over the edge: residual slot
/// capacity over demand, clipped to [0, 1]; 0 for absent edges.
double success_prob(const ServiceRequest& req, int i, int role,
                    const TopologySnapshot& snap, const SlotLedger& ledger);

Observation build_observation(const RequestRuntime& rt, int node,
                              const TopologySnapshot& snap,
                              const SlotLedger& ledger, double rate_max_bps);

/// Phased reward for the epoch: 100 when the committed hop lands on the
/// destination; orientation * supply_demand / delay when a hop was committed
/// to a non-destination neighbor while the destination was not directly
/// reachable; 0 otherwise (None, rejected or deferred hops, empty
/// neighborhood, or destination reachable but not taken). `delay` is null
/// when no hop was committed.
double phased_reward(const RequestRuntime& rt, int node, const Action& action,
                     const Observation& obs, const TopologySnapshot& snap,
                     const DelayBreakdown* delay);

}  // namespace satrrm
