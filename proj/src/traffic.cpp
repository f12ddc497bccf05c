#include "satrrm/traffic.hpp"

#include "satrrm/rng.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace satrrm {

namespace {

ServiceRequest make_request(int id, int source_flat, int slot,
                            const Roster& roster, const TrafficConfig& cfg,
                            std::mt19937_64& gen) {
  const int n = roster.size();
  ServiceRequest req;
  req.id = id;
  req.source = roster.id(source_flat);
  int d = uniform_index(gen, n - 1);
  if (d >= source_flat) ++d;
  req.destination = roster.id(d);
  req.arrival_slot = slot;
  req.demand_bits = cfg.demand_bits;
  req.deadline_s = cfg.randomize_deadline
                       ? uniform_double(gen, cfg.deadline_min_s, cfg.deadline_max_s)
                       : cfg.deadline_s;
  return req;
}

}  // namespace

std::vector<ServiceRequest> generate_batch(int slot, int per_leo_count,
                                           std::uint64_t seed,
                                           const Roster& roster,
                                           const TrafficConfig& cfg) {
  if (per_leo_count < 0)
    throw std::invalid_argument("traffic.per_leo_count: must be >= 0");
  if (roster.size() < 2)
    throw std::invalid_argument(
        "constellation: need at least 2 satellites to generate traffic");

  std::mt19937_64 gen(seed);
  std::vector<ServiceRequest> batch;
  batch.reserve(static_cast<std::size_t>(per_leo_count) * roster.size());
  int id = 0;
  for (int src = 0; src < roster.size(); ++src)
    for (int k = 0; k < per_leo_count; ++k)
      batch.push_back(make_request(id++, src, slot, roster, cfg, gen));
  return batch;
}

std::vector<ServiceRequest> generate_traffic(const TrafficConfig& cfg,
                                             const Roster& roster,
                                             std::uint64_t seed, int slots) {
  if (cfg.arrival == ArrivalPattern::FirstSlot || slots <= 2)
    return generate_batch(0, cfg.per_leo_count, seed, roster, cfg);

  // Uniform: spread each satellite's requests over slots [0, slots-2] so
  // every request still gets at least one serving slot.
  if (roster.size() < 2)
    throw std::invalid_argument(
        "constellation: need at least 2 satellites to generate traffic");
  std::mt19937_64 gen(seed);
  std::vector<ServiceRequest> stream;
  stream.reserve(static_cast<std::size_t>(cfg.per_leo_count) * roster.size());
  int id = 0;
  for (int src = 0; src < roster.size(); ++src) {
    for (int k = 0; k < cfg.per_leo_count; ++k) {
      const int at = static_cast<int>(
          static_cast<long long>(k) * (slots - 1) / cfg.per_leo_count);
      stream.push_back(make_request(id++, src, at, roster, cfg, gen));
    }
  }
  return stream;
}

std::vector<RequestRuntime> merge_carryover(
    const std::vector<ServiceRequest>& new_batch,
    std::vector<RequestRuntime> carryover) {
  for (const RequestRuntime& rt : carryover)
    if (rt.outcome != Outcome::InFlight)
      throw std::invalid_argument(
          "merge_carryover: carryover entries must all be in flight");
  carryover.reserve(carryover.size() + new_batch.size());
  for (const ServiceRequest& req : new_batch)
    carryover.push_back(RequestRuntime::start(req));
  return carryover;
}

void write_request_trace(std::ostream& out,
                         const std::vector<ServiceRequest>& requests) {
  out << "id,source,destination,arrival_slot,demand_bits,deadline_s\n";
  char line[160];
  for (const ServiceRequest& r : requests) {
    std::snprintf(line, sizeof(line), "%d,%d,%d,%d,%.9g,%.9g\n", r.id,
                  r.source.flat, r.destination.flat, r.arrival_slot,
                  r.demand_bits, r.deadline_s);
    out << line;
  }
}

void write_request_trace_file(const std::string& path,
                              const std::vector<ServiceRequest>& requests) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_request_trace(out, requests);
}

std::vector<ServiceRequest> read_request_trace(std::istream& in,
                                               const Roster& roster) {
  std::vector<ServiceRequest> requests;
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("request trace: empty input");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    ServiceRequest r;
    int src = 0, dst = 0;
    auto next = [&]() -> std::string {
      if (!std::getline(ls, cell, ','))
        throw std::runtime_error("request trace: malformed row: " + line);
      return cell;
    };
    r.id = std::stoi(next());
    src = std::stoi(next());
    dst = std::stoi(next());
    r.arrival_slot = std::stoi(next());
    r.demand_bits = std::stod(next());
    r.deadline_s = std::stod(next());
    if (src < 0 || src >= roster.size() || dst < 0 || dst >= roster.size())
      throw std::runtime_error("request trace: satellite id out of range");
    r.source = roster.id(src);
    r.destination = roster.id(dst);
    requests.push_back(r);
  }
  return requests;
}

std::vector<ServiceRequest> read_request_trace_file(const std::string& path,
                                                    const Roster& roster) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_request_trace(in, roster);
}

}  // namespace satrrm
