#include "fleetopt/generator.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "fleetopt/errors.hpp"
#include "fleetopt/rng.hpp"

namespace fleetopt {

namespace {

double uniform_in(Rng& rng, double lo, double hi) { return lo + rng.uniform() * (hi - lo); }

}  // namespace

Instance generate_instance(const GeneratorSpec& spec) {
  if (spec.n_vehicles == 0 || spec.n_jobs == 0)
    throw DomainError("generator: counts must be positive");
  if (!(spec.bbox.lat_min < spec.bbox.lat_max) || !(spec.bbox.lon_min < spec.bbox.lon_max))
    throw DomainError("generator: empty bbox");
  if (!(spec.service_min > 0.0) || !(spec.service_min <= spec.service_max))
    throw DomainError("generator: inverted service range");
  if (!(spec.window_fraction >= 0.0) || !(spec.window_fraction <= 1.0))
    throw DomainError("generator: window_fraction outside [0, 1]");
  if (spec.target_total_service && !(*spec.target_total_service > 0.0))
    throw DomainError("generator: target_total_service must be positive");

  Rng rng(spec.seed);

  std::vector<Vehicle> vehicles;
  vehicles.reserve(spec.n_vehicles);
  for (std::size_t i = 0; i < spec.n_vehicles; ++i) {
    Vehicle v;
    v.id = "v" + std::to_string(i + 1);
    v.depot.lat = uniform_in(rng, spec.bbox.lat_min, spec.bbox.lat_max);
    v.depot.lon = uniform_in(rng, spec.bbox.lon_min, spec.bbox.lon_max);
    vehicles.push_back(std::move(v));
  }

  std::vector<Job> jobs;
  jobs.reserve(spec.n_jobs);
  double total = 0.0;
  for (std::size_t j = 0; j < spec.n_jobs; ++j) {
    Job job;
    job.id = "j" + std::to_string(j + 1);
    job.location.lat = uniform_in(rng, spec.bbox.lat_min, spec.bbox.lat_max);
    job.location.lon = uniform_in(rng, spec.bbox.lon_min, spec.bbox.lon_max);
    job.service_minutes = uniform_in(rng, spec.service_min, spec.service_max);
    total += job.service_minutes;
    jobs.push_back(std::move(job));
  }
  if (spec.target_total_service) {
    const double scale = *spec.target_total_service / total;
    for (auto& job : jobs) job.service_minutes *= scale;
  }

  // Windows are drawn after durations are final so they always fit; every job
  // consumes one bernoulli draw to keep the stream layout independent of the
  // fraction value.
  const double day_len = spec.day_end - spec.day_start;
  for (auto& job : jobs) {
    const bool windowed = rng.bernoulli(spec.window_fraction);
    if (!windowed) continue;
    if (!(job.service_minutes < day_len)) continue;  // no valid window exists
    const double max_slack = std::min(240.0, day_len - job.service_minutes);
    const double slack = uniform_in(rng, std::min(60.0, max_slack), max_slack);
    const double length = job.service_minutes + slack;
    const double start = uniform_in(rng, spec.day_start, spec.day_end - length);
    job.window = Window{start, start + length};
  }

  return Instance::create(std::move(vehicles), std::move(jobs), spec.speed_kph,
                          spec.day_start, spec.day_end);
}

}  // namespace fleetopt
