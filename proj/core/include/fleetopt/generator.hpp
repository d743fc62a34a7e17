#pragma once

#include <cstdint>
#include <optional>

#include "fleetopt/instance.hpp"

namespace fleetopt {

struct LatLonBox {
  double lat_min = 0.0, lat_max = 0.0;
  double lon_min = 0.0, lon_max = 0.0;
};

/// Default generation area: a compact urban rectangle roughly 8.9 x 6.8 km,
/// sized so the benchmark service loads fit a 13 kph working day.
inline constexpr LatLonBox kDefaultBox{52.44, 52.52, -1.95, -1.85};

struct GeneratorSpec {
  std::size_t n_vehicles = 1;
  std::size_t n_jobs = 1;
  LatLonBox bbox = kDefaultBox;
  double service_min = 10.0;            ///< uniform service duration range, minutes
  double service_max = 90.0;
  double window_fraction = 0.1;         ///< probability a job gets a time window
  std::optional<double> target_total_service;  ///< rescale durations to this S
  std::uint64_t seed = 0;
  double speed_kph = Instance::kDefaultSpeedKph;
  double day_start = Instance::kDefaultDayStart;
  double day_end = Instance::kDefaultDayEnd;
};

/// Deterministic synthetic instance: depots and jobs uniform in the bbox,
/// service durations uniform in [service_min, service_max] (proportionally
/// rescaled when target_total_service is set), and each job independently
/// receiving a feasible window with probability window_fraction. The same
/// spec and seed always produce a byte-identical instance.
Instance generate_instance(const GeneratorSpec& spec);

}  // namespace fleetopt
