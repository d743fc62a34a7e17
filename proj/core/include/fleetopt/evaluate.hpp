#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fleetopt/instance.hpp"
#include "fleetopt/solution.hpp"

namespace fleetopt {

/// A serviced visit: when work started and ended, minutes from midnight.
struct ServicedStop {
  std::uint32_t job_index = 0;
  double service_start = 0.0;
  double service_end = 0.0;
};

/// Outcome of simulating one vehicle's route against the working day.
struct RouteReport {
  std::uint32_t vehicle_index = 0;
  std::vector<std::uint32_t> visited;   ///< job indices in visit order
  std::vector<std::uint32_t> serviced;  ///< subset of visited, in order
  std::vector<std::uint32_t> missed;    ///< visited \ serviced, in order
  std::vector<ServicedStop> stops;      ///< start/end times for serviced jobs
  double depart_minutes = 0.0;          ///< may precede day_start
  double return_minutes = 0.0;          ///< may exceed day_end
  double traversal_minutes = 0.0;       ///< driving only, excludes service
};

/// Quality of a full schedule: s (serviced job minutes), L (fleet traversal
/// minutes) and the penalized objective C = (S - s + 1) * L.
struct QualityReport {
  double serviced_minutes = 0.0;   // s
  double traversal_minutes = 0.0;  // L
  double quality = 0.0;            // C
  double serviced_fraction = 1.0;  // s / S (1.0 when S == 0)
  std::vector<RouteReport> routes; // one per vehicle, by vehicle index
};

/// Bare quality numbers for solver inner loops.
struct Cost {
  double serviced_minutes = 0.0;
  double traversal_minutes = 0.0;
  double quality = 0.0;
};

/// Cyclic decode: each vehicle gene owns the job genes following it up to the
/// next vehicle gene, wrapping past the end of the sequence to the front.
/// Returns job indices per vehicle index. Throws ValidationError if the
/// solution is not a permutation.
std::vector<std::vector<std::uint32_t>> decode(const Instance& instance,
                                               const Solution& solution);

/// Simulates one vehicle visiting `jobs` in order. The vehicle may depart
/// before day_start so the first job starts no later than needed; at each job
/// service starts at max(arrival, day_start, window start) and the job is
/// serviced iff it finishes by min(day_end, window end). A job that cannot be
/// serviced is skipped without travel. The return leg to the depot is counted
/// and may end after day_end; a route that never departs has traversal 0.
RouteReport simulate_route(const Instance& instance, std::uint32_t vehicle_index,
                           std::span<const std::uint32_t> job_indices);

/// Full evaluation of a valid solution (validates first).
QualityReport evaluate(const Instance& instance, const Solution& solution);

/// JSON for the bench interfaces:
///   {"s_min":..,"L_min":..,"C":..,"serviced_pct":..,"routes":[...]}
std::string serialize_report(const Instance& instance, const QualityReport& report);

/// Allocation-free evaluation path over a fixed instance. Assumes the gene
/// span is a permutation (solvers maintain that invariant); produces bitwise
/// the same s, L, C as evaluate().
class Evaluator {
 public:
  explicit Evaluator(const Instance& instance) : inst_(&instance) {}

  Cost cost(std::span<const Gene> genes) const;

 private:
  const Instance* inst_;
};

}  // namespace fleetopt
