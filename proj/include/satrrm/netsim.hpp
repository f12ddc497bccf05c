#pragma once

#include "satrrm/constellation.hpp"
#include "satrrm/traffic.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace satrrm {

/// Per-directed-edge budget for one slot. capacity_bits = rate * tau is the
/// most the link can carry; used_bits never exceeds it.
struct EdgeState {
  double rate_bps = 0.0;
  double capacity_bits = 0.0;
  double used_bits = 0.0;
  /// Sum of transmission times committed on this edge so far this slot;
  /// the next admission queues behind it.
  double committed_tx_s = 0.0;
  int commits = 0;
};

struct DelayBreakdown {
  double transmission_s = 0.0;
  double propagation_s = 0.0;
  double processing_s = 0.0;
  double queuing_s = 0.0;
  double total_s = 0.0;
};

struct Decision {
  int request_id = 0;
  int from = 0;
  int role = 0;
  int to = 0;
  DelayBreakdown delay;
};

/// Mutable bookkeeping for one slot of one episode: link budgets, the
/// per-satellite request queues, and the hops committed so far.
struct SlotLedger {
  int slot = 0;
  std::vector<EdgeState> edges;               // size N * kNumRoles
  std::vector<std::vector<int>> node_queues;  // request ids per satellite
  std::vector<Decision> decisions;

  EdgeState& edge(int from, int role) {
    return edges[static_cast<std::size_t>(from) * kNumRoles + role];
  }
  const EdgeState& edge(int from, int role) const {
    return edges[static_cast<std::size_t>(from) * kNumRoles + role];
  }
  int queue_len(int node) const {
    return static_cast<int>(node_queues[node].size());
  }
  double residual_bits(int from, int role) const {
    const EdgeState& e = edge(from, role);
    return e.capacity_bits - e.used_bits;
  }
};

struct SimParams {
  double tau_s = 60.0;
  int slots = 60;
  double rate_min_bps = 5e9;
  double rate_max_bps = 10e9;
  double processing_delay_s = 1e-3;

  void validate() const;  // throws std::invalid_argument naming the field
};

/// Fresh per-slot link budgets: every present directed edge draws an
/// independent uniform rate in [rate_min, rate_max].
std::vector<EdgeState> sample_link_rates(const TopologySnapshot& snap,
                                         const SimParams& params,
                                         std::uint64_t seed);

/// Four-part single-hop delay for sending `req` over (from, role) now.
/// Queuing is the transmission time already committed ahead on this edge
/// this slot. Throws on an absent edge.
DelayBreakdown hop_delay(const ServiceRequest& req, int from, int role,
                         const TopologySnapshot& snap, const SlotLedger& ledger,
                         double processing_delay_s);

/// Try to commit one hop. On admission the edge budget, both node queues,
/// the request's elapsed delay and hop log are updated and the breakdown is
/// returned; if residual capacity is short, nothing changes and nullopt is
/// returned.
std::optional<DelayBreakdown> admit_hop(SlotLedger& ledger, RequestRuntime& rt,
                                        int role, const TopologySnapshot& snap,
                                        double processing_delay_s);

/// Same, with the delay already computed by the caller for this exact epoch.
std::optional<DelayBreakdown> admit_hop_precomputed(
    SlotLedger& ledger, RequestRuntime& rt, int role,
    const TopologySnapshot& snap, const DelayBreakdown& delay);

/// Outcome update after a hop or at a slot boundary: Failed once the
/// accumulated delay exceeds the deadline, Delivered at the destination
/// within the deadline, otherwise still in flight. Queue removal of failed
/// requests is the caller's job.
Outcome adjudicate(RequestRuntime& rt);

}  // namespace satrrm
