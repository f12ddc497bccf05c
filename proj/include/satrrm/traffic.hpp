#pragma once

#include "satrrm/constellation.hpp"
#include "satrrm/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace satrrm {

enum class Outcome { InFlight, Delivered, Failed };

/// One end-to-end service request: carry demand_bits from source to
/// destination within deadline_s of accumulated per-hop delay.
struct ServiceRequest {
  int id = 0;
  SatelliteId source;
  SatelliteId destination;
  int arrival_slot = 0;
  double demand_bits = 5e9;
  double deadline_s = 5.0;
};

struct HopRecord {
  int slot = 0;
  int from = 0;
  int to = 0;
  double delay_s = 0.0;
};

/// Live state of a request while the simulator owns it.
struct RequestRuntime {
  ServiceRequest request;
  int current_node = 0;
  double elapsed_delay_s = 0.0;
  std::vector<HopRecord> hop_log;
  Outcome outcome = Outcome::InFlight;

  static RequestRuntime start(const ServiceRequest& req) {
    RequestRuntime rt;
    rt.request = req;
    rt.current_node = req.source.flat;
    return rt;
  }
};

enum class ArrivalPattern { FirstSlot, Uniform };

struct TrafficConfig {
  int per_leo_count = 20;
  double demand_bits = 5e9;
  double deadline_s = 5.0;
  ArrivalPattern arrival = ArrivalPattern::FirstSlot;
  bool randomize_deadline = false;
  double deadline_min_s = 1.0;
  double deadline_max_s = 10.0;
};

/// One batch of requests arriving in `slot`: per_leo_count per satellite,
/// destinations uniform over the other satellites. Pure function of the seed.
std::vector<ServiceRequest> generate_batch(int slot, int per_leo_count,
                                           std::uint64_t seed,
                                           const Roster& roster,
                                           const TrafficConfig& cfg);

/// Full request stream for one planning cycle, ids contiguous from 0,
/// arrival slots per cfg.arrival.
std::vector<ServiceRequest> generate_traffic(const TrafficConfig& cfg,
                                             const Roster& roster,
                                             std::uint64_t seed, int slots);

/// Serving queue for a slot: carried-over in-flight requests first, then the
/// newly arrived batch. Throws if any carryover entry is not InFlight.
std::vector<RequestRuntime> merge_carryover(
    const std::vector<ServiceRequest>& new_batch,
    std::vector<RequestRuntime> carryover);

// Request-trace CSV (id,source,destination,arrival_slot,demand_bits,
// deadline_s) so the same traffic can be replayed across policies.
void write_request_trace(std::ostream& out,
                         const std::vector<ServiceRequest>& requests);
void write_request_trace_file(const std::string& path,
                              const std::vector<ServiceRequest>& requests);
std::vector<ServiceRequest> read_request_trace(std::istream& in,
                                               const Roster& roster);
std::vector<ServiceRequest> read_request_trace_file(const std::string& path,
                                                    const Roster& roster);

}  // namespace satrrm
