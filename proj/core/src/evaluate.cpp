#include "fleetopt/evaluate.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "fleetopt/errors.hpp"

namespace fleetopt {

namespace {

/// Incremental simulation of one vehicle's day. Missed jobs leave the state
/// untouched, so the vehicle "never drives" toward them.
class RouteSim {
 public:
  RouteSim(const Instance& inst, Gene vehicle_gene)
      : inst_(&inst), depot_(vehicle_gene), pos_(vehicle_gene) {}

  /// Returns true iff the job gets serviced; fills start/end on success.
  bool visit(Gene job_gene, double& start, double& end) {
    const Job& job = inst_->job_of(job_gene);
    const double leg = inst_->travel(pos_, job_gene);
    double service_start = departed_ ? std::max(time_ + leg, inst_->day_start())
                                     : inst_->day_start();
    double deadline = inst_->day_end();
    if (job.window) {
      service_start = std::max(service_start, job.window->earliest_start);
      deadline = std::min(deadline, job.window->latest_end);
    }
    const double service_end = service_start + job.service_minutes;
    if (!(service_end <= deadline)) return false;
    traversal_ += leg;
    if (!departed_) {
      depart_time_ = service_start - leg;
      departed_ = true;
    }
    time_ = service_end;
    pos_ = job_gene;
    start = service_start;
    end = service_end;
    return true;
  }

  void finish() {
    if (departed_) {
      const double leg = inst_->travel(pos_, depot_);
      traversal_ += leg;
      return_time_ = time_ + leg;
    } else {
      depart_time_ = inst_->day_start();
      return_time_ = inst_->day_start();
    }
  }

  double traversal() const { return traversal_; }
  double depart_time() const { return depart_time_; }
  double return_time() const { return return_time_; }

 private:
  const Instance* inst_;
  Gene depot_;
  Gene pos_;
  double time_ = 0.0;
  double traversal_ = 0.0;
  double depart_time_ = 0.0;
  double return_time_ = 0.0;
  bool departed_ = false;
};

struct NullRecorder {
  void begin_route(Gene) {}
  void serviced(Gene, double, double) {}
  void missed(Gene) {}
  void end_route(const RouteSim&) {}
};

struct ReportRecorder {
  const Instance* inst;
  std::vector<RouteReport>* routes;
  RouteReport* current = nullptr;

  void begin_route(Gene vehicle_gene) {
    routes->emplace_back();
    current = &routes->back();
    current->vehicle_index = static_cast<std::uint32_t>(inst->vehicle_index(vehicle_gene));
  }
  void serviced(Gene job_gene, double start, double end) {
    const auto j = static_cast<std::uint32_t>(inst->job_index(job_gene));
    current->visited.push_back(j);
    current->serviced.push_back(j);
    current->stops.push_back({j, start, end});
  }
  void missed(Gene job_gene) {
    const auto j = static_cast<std::uint32_t>(inst->job_index(job_gene));
    current->visited.push_back(j);
    current->missed.push_back(j);
  }
  void end_route(const RouteSim& sim) {
    current->depart_minutes = sim.depart_time();
    current->return_minutes = sim.return_time();
    current->traversal_minutes = sim.traversal();
  }
};

/// Scans the cyclic gene sequence once, accumulating s and L in encounter
/// order. Both the fast and the reporting path run exactly this code, so the
/// resulting quality is bitwise identical between them.
template <class Recorder>
Cost run_sequence(const Instance& inst, std::span<const Gene> genes, Recorder& rec) {
  Cost out;
  const std::size_t n = genes.size();
  std::size_t first_vehicle = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (inst.is_vehicle(genes[i])) {
      first_vehicle = i;
      break;
    }
  }
  if (first_vehicle == n) throw ValidationError("sequence holds no vehicle gene");

  double s = 0.0;
  double traversal_total = 0.0;
  RouteSim sim(inst, genes[first_vehicle]);
  rec.begin_route(genes[first_vehicle]);
  auto step = [&](Gene g) {
    if (inst.is_vehicle(g)) {
      sim.finish();
      traversal_total += sim.traversal();
      rec.end_route(sim);
      sim = RouteSim(inst, g);
      rec.begin_route(g);
    } else {
      double start = 0.0, end = 0.0;
      if (sim.visit(g, start, end)) {
        s += inst.job_of(g).service_minutes;
        rec.serviced(g, start, end);
      } else {
        rec.missed(g);
      }
    }
  };
  for (std::size_t i = first_vehicle + 1; i < n; ++i) step(genes[i]);
  for (std::size_t i = 0; i < first_vehicle; ++i) step(genes[i]);
  sim.finish();
  traversal_total += sim.traversal();
  rec.end_route(sim);

  out.serviced_minutes = s;
  out.traversal_minutes = traversal_total;
  out.quality = (inst.total_service_minutes() - s + 1.0) * traversal_total;
  return out;
}

void require_valid(const Instance& inst, const Solution& solution) {
  if (auto violations = validate_solution(inst, solution); !violations.empty())
    throw ValidationError("invalid solution: " + violations.front());
}

}  // namespace

std::vector<std::vector<std::uint32_t>> decode(const Instance& instance,
                                               const Solution& solution) {
  require_valid(instance, solution);
  std::vector<std::vector<std::uint32_t>> routes(instance.n_vehicles());
  const auto& genes = solution.genes;
  const std::size_t n = genes.size();
  std::size_t first_vehicle = 0;
  while (!instance.is_vehicle(genes[first_vehicle])) ++first_vehicle;
  std::size_t current = instance.vehicle_index(genes[first_vehicle]);
  for (std::size_t k = 1; k < n; ++k) {
    const Gene g = genes[(first_vehicle + k) % n];
    if (instance.is_vehicle(g))
      current = instance.vehicle_index(g);
    else
      routes[current].push_back(static_cast<std::uint32_t>(instance.job_index(g)));
  }
  return routes;
}

RouteReport simulate_route(const Instance& instance, std::uint32_t vehicle_index,
                           std::span<const std::uint32_t> job_indices) {
  std::vector<RouteReport> routes;
  ReportRecorder rec{&instance, &routes};
  const Gene vg = instance.vehicle_gene(vehicle_index);
  RouteSim sim(instance, vg);
  rec.begin_route(vg);
  for (const std::uint32_t j : job_indices) {
    const Gene g = instance.job_gene(j);
    double start = 0.0, end = 0.0;
    if (sim.visit(g, start, end))
      rec.serviced(g, start, end);
    else
      rec.missed(g);
  }
  sim.finish();
  rec.end_route(sim);
  return std::move(routes.front());
}

QualityReport evaluate(const Instance& instance, const Solution& solution) {
  require_valid(instance, solution);

  QualityReport report;
  std::vector<RouteReport> routes;
  ReportRecorder rec{&instance, &routes};
  const Cost cost = run_sequence(instance, std::span<const Gene>(solution.genes), rec);

  // Vehicles without a following job never appear in the scan; give them
  // explicit empty routes, then order everything by vehicle index.
  std::vector<bool> present(instance.n_vehicles(), false);
  for (const auto& r : routes) present[r.vehicle_index] = true;
  for (std::size_t v = 0; v < instance.n_vehicles(); ++v) {
    if (!present[v]) {
      RouteReport empty;
      empty.vehicle_index = static_cast<std::uint32_t>(v);
      empty.depart_minutes = instance.day_start();
      empty.return_minutes = instance.day_start();
      routes.push_back(std::move(empty));
    }
  }
  std::sort(routes.begin(), routes.end(),
            [](const RouteReport& a, const RouteReport& b) {
              return a.vehicle_index < b.vehicle_index;
            });

  report.serviced_minutes = cost.serviced_minutes;
  report.traversal_minutes = cost.traversal_minutes;
  report.quality = cost.quality;
  report.serviced_fraction = instance.total_service_minutes() > 0.0
                                 ? cost.serviced_minutes / instance.total_service_minutes()
                                 : 1.0;
  report.routes = std::move(routes);
  return report;
}

Cost Evaluator::cost(std::span<const Gene> genes) const {
  NullRecorder rec;
  return run_sequence(*inst_, genes, rec);
}

std::string serialize_report(const Instance& instance, const QualityReport& report) {
  using nlohmann::json;
  json root;
  root["s_min"] = report.serviced_minutes;
  root["L_min"] = report.traversal_minutes;
  root["C"] = report.quality;
  root["serviced_pct"] = report.serviced_fraction * 100.0;
  root["routes"] = json::array();
  for (const auto& r : report.routes) {
    json route;
    route["vehicle"] = instance.vehicles()[r.vehicle_index].id;
    auto ids = [&](const std::vector<std::uint32_t>& idx) {
      json arr = json::array();
      for (const auto j : idx) arr.push_back(instance.jobs()[j].id);
      return arr;
    };
    route["visited"] = ids(r.visited);
    route["serviced"] = ids(r.serviced);
    route["missed"] = ids(r.missed);
    json stops = json::array();
    for (const auto& stop : r.stops)
      stops.push_back({{"job", instance.jobs()[stop.job_index].id},
                       {"start_min", stop.service_start},
                       {"end_min", stop.service_end}});
    route["stops"] = std::move(stops);
    route["depart_min"] = r.depart_minutes;
    route["return_min"] = r.return_minutes;
    route["traversal_min"] = r.traversal_minutes;
    root["routes"].push_back(std::move(route));
  }
  return root.dump(2) + "\n";
}

}  // namespace fleetopt
