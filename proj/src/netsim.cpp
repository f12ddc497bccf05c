#include "satrrm/netsim.hpp"

#include "satrrm/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace satrrm {

void SimParams::validate() const {
  if (!(tau_s > 0.0)) throw std::invalid_argument("sim.tau_s: must be > 0");
  if (slots < 1) throw std::invalid_argument("sim.slots: must be >= 1");
  if (!(rate_min_bps > 0.0))
    throw std::invalid_argument("sim.rate_min_bps: must be > 0");
  if (rate_min_bps > rate_max_bps)
    throw std::invalid_argument("sim.rate_min_bps: must be <= rate_max_bps");
  if (!(processing_delay_s >= 0.0))
    throw std::invalid_argument("sim.processing_delay_s: must be >= 0");
}

std::vector<EdgeState> sample_link_rates(const TopologySnapshot& snap,
                                         const SimParams& params,
                                         std::uint64_t seed) {
  params.validate();
  std::mt19937_64 gen(seed);
  std::vector<EdgeState> edges(static_cast<std::size_t>(snap.size()) *
                               kNumRoles);
  for (int i = 0; i < snap.size(); ++i) {
    for (int r = 0; r < kNumRoles; ++r) {
      if (!snap.links[i].present(r)) continue;
      EdgeState& e = edges[static_cast<std::size_t>(i) * kNumRoles + r];
      e.rate_bps = params.rate_min_bps == params.rate_max_bps
                       ? params.rate_min_bps
                       : uniform_double(gen, params.rate_min_bps,
                                        params.rate_max_bps);
      e.capacity_bits = e.rate_bps * params.tau_s;
    }
  }
  return edges;
}

DelayBreakdown hop_delay(const ServiceRequest& req, int from, int role,
                         const TopologySnapshot& snap, const SlotLedger& ledger,
                         double processing_delay_s) {
  if (role < 0 || role >= kNumRoles || !snap.links[from].present(role))
    throw std::runtime_error("hop_delay: edge is absent in this slot");
  const EdgeState& e = ledger.edge(from, role);
  DelayBreakdown d;
  d.transmission_s = req.demand_bits / e.rate_bps;
  d.propagation_s = snap.distance_km_of(from, role) / kSpeedOfLightKmS;
  d.processing_s = processing_delay_s;
  d.queuing_s = e.committed_tx_s;
  d.total_s = d.transmission_s + d.propagation_s + d.processing_s + d.queuing_s;
  return d;
}

std::optional<DelayBreakdown> admit_hop(SlotLedger& ledger, RequestRuntime& rt,
                                        int role, const TopologySnapshot& snap,
                                        double processing_delay_s) {
  const DelayBreakdown d =
      hop_delay(rt.request, rt.current_node, role, snap, ledger,
                processing_delay_s);
  return admit_hop_precomputed(ledger, rt, role, snap, d);
}

std::optional<DelayBreakdown> admit_hop_precomputed(
    SlotLedger& ledger, RequestRuntime& rt, int role,
    const TopologySnapshot& snap, const DelayBreakdown& delay) {
  const int from = rt.current_node;
  if (role < 0 || role >= kNumRoles || !snap.links[from].present(role))
    throw std::runtime_error("admit_hop: edge is absent in this slot");
  const int to = snap.links[from].neighbor[role];

  std::vector<int>& src_queue = ledger.node_queues[from];
  auto it = std::find(src_queue.begin(), src_queue.end(), rt.request.id);
  if (it == src_queue.end())
    throw std::logic_error("admit_hop: request is not queued at edge source");

  EdgeState& e = ledger.edge(from, role);
  if (e.capacity_bits - e.used_bits < rt.request.demand_bits)
    return std::nullopt;

  e.used_bits += rt.request.demand_bits;
  e.committed_tx_s += delay.transmission_s;
  e.commits += 1;
  src_queue.erase(it);
  ledger.node_queues[to].push_back(rt.request.id);
  rt.current_node = to;
  rt.elapsed_delay_s += delay.total_s;
  rt.hop_log.push_back({ledger.slot, from, to, delay.total_s});
  ledger.decisions.push_back({rt.request.id, from, role, to, delay});
  return delay;
}

Outcome adjudicate(RequestRuntime& rt) {
  if (rt.outcome != Outcome::InFlight) return rt.outcome;
  if (rt.elapsed_delay_s > rt.request.deadline_s) {
    rt.outcome = Outcome::Failed;
  } else if (rt.current_node == rt.request.destination.flat) {
    rt.outcome = Outcome::Delivered;
  }
  return rt.outcome;
}

}  // namespace satrrm
