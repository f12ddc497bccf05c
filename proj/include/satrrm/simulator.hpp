#pragma once

#include "satrrm/routing_policy.hpp"

#include <cstdint>
#include <vector>

namespace satrrm {

/// One decision epoch as seen from outside the simulator. `committed` tells
/// whether the chosen hop actually went out (a None, a capacity rejection, a
/// repeated edge, or a slot-budget deferral all leave it false).
struct EpochEvent {
  int slot = 0;
  int request_id = 0;
  int node = 0;
  Action action;
  double reward = 0.0;
  bool committed = false;
  DelayBreakdown delay;
  Outcome outcome_after = Outcome::InFlight;
  Observation observation;
};

class EpochSink {
 public:
  virtual ~EpochSink() = default;
  virtual void on_slot_begin(int /*slot*/, const TopologySnapshot&,
                             const SlotLedger&) {}
  virtual void on_epoch(const EpochEvent&) = 0;
  virtual void on_episode_end() {}
};

struct EpisodeCounts {
  int total = 0;
  int delivered = 0;
  int failed = 0;
  int inflight = 0;
  int epochs = 0;
  double total_reward = 0.0;
  double delivered_delay_sum_s = 0.0;

  double completion_rate() const {
    return total > 0 ? static_cast<double>(delivered) / total : 0.0;
  }
  double mean_delivered_delay_s() const {
    return delivered > 0 ? delivered_delay_sum_s / delivered : 0.0;
  }
};

struct EpisodeResult {
  EpisodeCounts counts;
  std::vector<RequestRuntime> runtimes;
};

/// Time-slotted episode engine. Requests arriving in slot t enter service in
/// slot t+1; within a slot each request is offered decision epochs (multiple
/// hops per slot) until it terminates, holds, is rejected, or would overrun
/// the slot's time budget. Episodes are deterministic given the request
/// stream, the two seeds, and a deterministic policy.
class Simulator {
 public:
  Simulator(const Roster& roster, const SimParams& params);
  /// Synthetic topologies (tests): one snapshot per slot.
  Simulator(std::vector<TopologySnapshot> snapshots, const SimParams& params);

  const SimParams& params() const { return params_; }
  const TopologySnapshot& snapshot(int slot) const {
    return snapshots_[slot];
  }
  int network_size() const {
    return snapshots_.empty() ? 0 : snapshots_.front().size();
  }

  /// Request ids must be contiguous from 0 in stream order.
  EpisodeResult run_episode(const std::vector<ServiceRequest>& requests,
                            RoutingPolicy& policy, SelectMode mode,
                            std::uint64_t rate_seed, std::uint64_t action_seed,
                            EpochSink* sink = nullptr) const;

 private:
  SimParams params_;
  std::vector<TopologySnapshot> snapshots_;
};

}  // namespace satrrm
