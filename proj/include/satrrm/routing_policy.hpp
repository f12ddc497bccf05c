#pragma once

#include "satrrm/features.hpp"

#include <random>

namespace satrrm {

/// Everything a policy may look at when asked for the next hop of one
/// request at one node. The observation is the trained-policy view; the
/// greedy baselines read the snapshot and ledger directly.
struct DecisionContext {
  const RequestRuntime& runtime;
  int node;
  const TopologySnapshot& snapshot;
  const SlotLedger& ledger;
  const Observation& observation;
  double rate_max_bps;
  double processing_delay_s;
};

enum class SelectMode { Sample, Greedy };

/// Shared policy abstraction: the simulator treats the trained networks and
/// the greedy baselines interchangeably. Returned actions must respect the
/// observation mask.
class RoutingPolicy {
 public:
  virtual ~RoutingPolicy() = default;

  virtual Action select(const DecisionContext& ctx, SelectMode mode,
                        std::mt19937_64& gen) = 0;

  virtual bool trainable() const { return false; }

  /// The state as this policy's network sees it (identity for non-neural
  /// policies). Transitions are recorded in this view.
  virtual Observation transform_observation(const Observation& obs) const {
    return obs;
  }

  virtual const char* name() const = 0;
};

}  // namespace satrrm
