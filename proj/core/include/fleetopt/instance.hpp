#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fleetopt/geo.hpp"
#include "fleetopt/solution.hpp"

namespace fleetopt {

/// Delivery/servicing window, minutes from midnight.
struct Window {
  double earliest_start = 0.0;
  double latest_end = 0.0;

  bool operator==(const Window&) const = default;
};

struct Job {
  std::string id;
  GeoPoint location;
  double service_minutes = 0.0;
  std::optional<Window> window;

  bool operator==(const Job&) const = default;
};

struct Vehicle {
  std::string id;
  GeoPoint depot;

  bool operator==(const Vehicle&) const = default;
};

/// Immutable problem instance. Construction validates every entity and
/// precomputes the gene-to-gene travel-minutes and eta (= 1/distance)
/// tables used by the evaluators and the Eq.-1 selection rule, so instances
/// are cheap to share read-only across workers.
class Instance {
 public:
  static constexpr double kDefaultSpeedKph = 13.0;
  static constexpr double kDefaultDayStart = 480.0;   // 08:00
  static constexpr double kDefaultDayEnd = 1140.0;    // 19:00

  /// Validates and builds. Throws LoadError naming the offending entity on
  /// invalid coordinates, non-positive service, duplicate ids, or a window
  /// whose overlap with the working day cannot contain the service.
  static Instance create(std::vector<Vehicle> vehicles, std::vector<Job> jobs,
                         double speed_kph = kDefaultSpeedKph,
                         double day_start = kDefaultDayStart,
                         double day_end = kDefaultDayEnd);

  const std::vector<Vehicle>& vehicles() const { return vehicles_; }
  const std::vector<Job>& jobs() const { return jobs_; }
  double speed_kph() const { return speed_kph_; }
  double day_start() const { return day_start_; }
  double day_end() const { return day_end_; }

  /// Total service demand S in minutes (sum over all jobs).
  double total_service_minutes() const { return total_service_; }

  std::size_t n_vehicles() const { return vehicles_.size(); }
  std::size_t n_jobs() const { return jobs_.size(); }
  std::size_t n_genes() const { return vehicles_.size() + jobs_.size(); }

  bool is_vehicle(Gene g) const { return g.flat() < vehicles_.size(); }
  Gene vehicle_gene(std::size_t i) const { return Gene(static_cast<std::uint32_t>(i)); }
  Gene job_gene(std::size_t j) const {
    return Gene(static_cast<std::uint32_t>(vehicles_.size() + j));
  }
  std::size_t vehicle_index(Gene g) const { return g.flat(); }
  std::size_t job_index(Gene g) const { return g.flat() - vehicles_.size(); }
  const Vehicle& vehicle_of(Gene g) const { return vehicles_[vehicle_index(g)]; }
  const Job& job_of(Gene g) const { return jobs_[job_index(g)]; }
  const GeoPoint& location_of(Gene g) const { return locations_[g.flat()]; }

  /// Cached driving minutes between two genes (vehicle genes sit at their depot).
  double travel(Gene a, Gene b) const { return travel_[a.flat() * n_genes() + b.flat()]; }
  /// Eq.-1 heuristic eta = 1 / max(travel minutes, 1e-9).
  double eta(Gene a, Gene b) const { return eta_[a.flat() * n_genes() + b.flat()]; }
  const double* travel_row(Gene a) const { return travel_.data() + a.flat() * n_genes(); }
  const double* eta_row(Gene a) const { return eta_.data() + a.flat() * n_genes(); }

  /// "V:<id>" / "J:<id>" for serialization.
  std::string gene_label(Gene g) const;
  /// Inverse of gene_label; throws LoadError on unknown labels.
  Gene parse_gene_label(std::string_view label) const;

  /// The Solution that lists all vehicles then all jobs in instance order.
  Solution identity_solution() const;

  bool operator==(const Instance& other) const;

 private:
  Instance() = default;

  std::vector<Vehicle> vehicles_;
  std::vector<Job> jobs_;
  double speed_kph_ = kDefaultSpeedKph;
  double day_start_ = kDefaultDayStart;
  double day_end_ = kDefaultDayEnd;
  double total_service_ = 0.0;
  std::vector<GeoPoint> locations_;  // by flat gene index
  std::vector<double> travel_;       // n_genes^2, minutes
  std::vector<double> eta_;          // n_genes^2
};

/// Parses and validates the documented JSON instance schema:
///   {"speed_kph": 13, "day_start_min": 480, "day_end_min": 1140,
///    "vehicles": [{"id","lat","lon"}],
///    "jobs": [{"id","lat","lon","service_min","window":[s,e]|null}]}
/// Missing top-level scalars take the defaults above.
Instance load_instance(std::string_view json_text);
Instance load_instance_file(const std::filesystem::path& path);

/// Canonical JSON for the schema above; load_instance round-trips it exactly.
std::string serialize_instance(const Instance& instance);
void save_instance_file(const Instance& instance, const std::filesystem::path& path);

}  // namespace fleetopt
