#include "satrrm/simulator.hpp"

#include "satrrm/rng.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace satrrm {

Simulator::Simulator(const Roster& roster, const SimParams& params)
    : params_(params) {
  params_.validate();
  snapshots_.reserve(params_.slots);
  for (int t = 0; t < params_.slots; ++t)
    snapshots_.push_back(propagate(roster, t, params_.tau_s));
}

Simulator::Simulator(std::vector<TopologySnapshot> snapshots,
                     const SimParams& params)
    : params_(params), snapshots_(std::move(snapshots)) {
  params_.validate();
  if (static_cast<int>(snapshots_.size()) < params_.slots)
    throw std::invalid_argument("simulator: need one snapshot per slot");
}

namespace {

// A hop may not reuse a directed edge this request already used this slot.
bool repeats_edge_in_slot(const RequestRuntime& rt, int slot, int from, int to) {
  for (auto it = rt.hop_log.rbegin(); it != rt.hop_log.rend(); ++it) {
    if (it->slot != slot) break;
    if (it->from == from && it->to == to) return true;
  }
  return false;
}

void remove_from_queue(std::vector<int>& queue, int id) {
  queue.erase(std::find(queue.begin(), queue.end(), id));
}

}  // namespace

EpisodeResult Simulator::run_episode(
    const std::vector<ServiceRequest>& requests, RoutingPolicy& policy,
    SelectMode mode, std::uint64_t rate_seed, std::uint64_t action_seed,
    EpochSink* sink) const {
  const int n = network_size();
  const int num_requests = static_cast<int>(requests.size());
  for (int q = 0; q < num_requests; ++q)
    if (requests[q].id != q)
      throw std::invalid_argument(
          "run_episode: request ids must be contiguous from 0");

  EpisodeResult result;
  result.runtimes.reserve(num_requests);
  for (const ServiceRequest& req : requests)
    result.runtimes.push_back(RequestRuntime::start(req));
  EpisodeCounts& counts = result.counts;
  counts.total = num_requests;

  // Requests arriving in slot t are served from slot t+1 on.
  std::vector<std::vector<int>> arrivals(params_.slots + 1);
  for (const ServiceRequest& req : requests) {
    const int serve = req.arrival_slot + 1;
    if (serve < static_cast<int>(arrivals.size()))
      arrivals[serve].push_back(req.id);
  }

  SlotLedger ledger;
  ledger.node_queues.assign(n, {});

  std::mt19937_64 action_gen(action_seed);
  std::vector<int> stopped_slot(num_requests, -1);
  std::vector<double> slot_clock(num_requests, 0.0);
  std::deque<int> epoch_queue;

  for (int t = 0; t < params_.slots; ++t) {
    const TopologySnapshot& snap = snapshots_[t];
    ledger.slot = t;
    ledger.decisions.clear();
    ledger.edges = sample_link_rates(snap, params_, derive_seed(rate_seed, t));

    for (int id : arrivals[t])
      ledger.node_queues[result.runtimes[id].request.source.flat].push_back(id);

    if (sink) sink->on_slot_begin(t, snap, ledger);

    // First epoch of the slot in (node flat id, queue order); afterwards in
    // hop-completion order.
    epoch_queue.clear();
    for (int node = 0; node < n; ++node)
      for (int id : ledger.node_queues[node]) {
        epoch_queue.push_back(id);
        slot_clock[id] = 0.0;
      }

    while (!epoch_queue.empty()) {
      const int id = epoch_queue.front();
      epoch_queue.pop_front();
      RequestRuntime& rt = result.runtimes[id];
      if (rt.outcome != Outcome::InFlight || stopped_slot[id] == t) continue;

      const int node = rt.current_node;
      const Observation obs =
          build_observation(rt, node, snap, ledger, params_.rate_max_bps);
      const DecisionContext ctx{rt,     node,
                                snap,   ledger,
                                obs,    params_.rate_max_bps,
                                params_.processing_delay_s};
      const Action action = policy.select(ctx, mode, action_gen);
      if (action.index < 0 || action.index >= kNumActions ||
          !obs.mask[action.index])
        throw std::logic_error("policy selected a masked-out action");

      EpochEvent ev;
      ev.slot = t;
      ev.request_id = id;
      ev.node = node;
      ev.action = action;
      ev.observation = obs;

      if (action.is_none()) {
        stopped_slot[id] = t;
      } else {
        const int to = snap.links[node].neighbor[action.index];
        bool committed = false;
        if (!repeats_edge_in_slot(rt, t, node, to)) {
          const DelayBreakdown delay =
              hop_delay(rt.request, node, action.index, snap, ledger,
                        params_.processing_delay_s);
          if (slot_clock[id] + delay.total_s <= params_.tau_s) {
            if (auto admitted = admit_hop_precomputed(ledger, rt, action.index,
                                                      snap, delay)) {
              committed = true;
              ev.committed = true;
              ev.delay = *admitted;
              slot_clock[id] += admitted->total_s;
            }
          }
        }
        if (!committed) stopped_slot[id] = t;
      }

      ev.reward = phased_reward(rt, node, action, obs, snap,
                                ev.committed ? &ev.delay : nullptr);

      if (ev.committed) {
        switch (adjudicate(rt)) {
          case Outcome::Delivered:
            counts.delivered += 1;
            counts.delivered_delay_sum_s += rt.elapsed_delay_s;
            remove_from_queue(ledger.node_queues[rt.current_node], id);
            break;
          case Outcome::Failed:
            counts.failed += 1;
            remove_from_queue(ledger.node_queues[rt.current_node], id);
            break;
          case Outcome::InFlight:
            epoch_queue.push_back(id);
            break;
        }
      }

      ev.outcome_after = rt.outcome;
      counts.total_reward += ev.reward;
      counts.epochs += 1;
      if (sink) sink->on_epoch(ev);
    }
  }

  counts.inflight = counts.total - counts.delivered - counts.failed;
  if (sink) sink->on_episode_end();
  return result;
}

}  // namespace satrrm
