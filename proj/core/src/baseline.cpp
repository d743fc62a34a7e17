#include "fleetopt/baseline.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "fleetopt/evaluate.hpp"

namespace fleetopt {

namespace {

bool job_serviced_at(const Instance& inst, std::uint32_t vehicle,
                     const std::vector<std::uint32_t>& route, std::uint32_t job) {
  const RouteReport rep = simulate_route(inst, vehicle, route);
  return std::find(rep.serviced.begin(), rep.serviced.end(), job) != rep.serviced.end();
}

}  // namespace

Solution company_baseline(const Instance& instance) {
  const std::size_t n_vehicles = instance.n_vehicles();
  const std::size_t n_jobs = instance.n_jobs();
  const double load_cap = instance.total_service_minutes() / static_cast<double>(n_vehicles);

  // Assignment: nearest depot first, spilling to the next-nearest depot whose
  // accumulated service time is still below S/n_vehicles. When every depot is
  // at or over the cap, the least-loaded one takes the job.
  std::vector<std::vector<std::uint32_t>> assigned(n_vehicles);
  std::vector<double> load(n_vehicles, 0.0);
  std::vector<std::uint32_t> depot_order(n_vehicles);
  for (std::uint32_t j = 0; j < n_jobs; ++j) {
    const Gene jg = instance.job_gene(j);
    std::iota(depot_order.begin(), depot_order.end(), 0u);
    std::stable_sort(depot_order.begin(), depot_order.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       return instance.travel(jg, instance.vehicle_gene(a)) <
                              instance.travel(jg, instance.vehicle_gene(b));
                     });
    std::uint32_t chosen = depot_order[0];
    bool placed = false;
    for (const std::uint32_t v : depot_order) {
      if (load[v] < load_cap) {
        chosen = v;
        placed = true;
        break;
      }
    }
    if (!placed) {
      chosen = static_cast<std::uint32_t>(
          std::min_element(load.begin(), load.end()) - load.begin());
    }
    assigned[chosen].push_back(j);
    load[chosen] += instance.jobs()[j].service_minutes;
  }

  // Routing: furthest job from the depot first, then repeated nearest
  // neighbour from the previous job.
  std::vector<std::vector<std::uint32_t>> routes(n_vehicles);
  for (std::uint32_t v = 0; v < n_vehicles; ++v) {
    auto pool = assigned[v];
    const Gene vg = instance.vehicle_gene(v);
    auto& route = routes[v];
    Gene current = vg;
    while (!pool.empty()) {
      std::size_t pick = 0;
      if (route.empty()) {
        for (std::size_t i = 1; i < pool.size(); ++i)
          if (instance.travel(vg, instance.job_gene(pool[i])) >
              instance.travel(vg, instance.job_gene(pool[pick])))
            pick = i;
      } else {
        for (std::size_t i = 1; i < pool.size(); ++i)
          if (instance.travel(current, instance.job_gene(pool[i])) <
              instance.travel(current, instance.job_gene(pool[pick])))
            pick = i;
      }
      route.push_back(pool[pick]);
      current = instance.job_gene(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
  }

  // Windowed jobs deviate from the sweep: move each to the earliest slot
  // where the simulation services it, keeping its place when no slot works.
  for (std::uint32_t v = 0; v < n_vehicles; ++v) {
    auto& route = routes[v];
    std::vector<std::uint32_t> windowed;
    for (const std::uint32_t j : route)
      if (instance.jobs()[j].window) windowed.push_back(j);
    for (const std::uint32_t job : windowed) {
      const auto at = std::find(route.begin(), route.end(), job);
      std::vector<std::uint32_t> rest = route;
      rest.erase(rest.begin() + (at - route.begin()));
      std::size_t found = route.size();
      for (std::size_t slot = 0; slot <= rest.size(); ++slot) {
        std::vector<std::uint32_t> trial = rest;
        trial.insert(trial.begin() + static_cast<std::ptrdiff_t>(slot), job);
        if (job_serviced_at(instance, v, trial, job)) {
          found = slot;
          break;
        }
      }
      if (found < route.size()) {
        rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(found), job);
        route = std::move(rest);
      }
    }
  }

  Solution solution;
  solution.genes.reserve(instance.n_genes());
  for (std::uint32_t v = 0; v < n_vehicles; ++v) {
    solution.genes.push_back(instance.vehicle_gene(v));
    for (const std::uint32_t j : routes[v]) solution.genes.push_back(instance.job_gene(j));
  }
  return solution;
}

}  // namespace fleetopt
