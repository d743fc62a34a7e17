#include "fleetopt/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "fleetopt/errors.hpp"

namespace fleetopt {

using nlohmann::json;

Instance Instance::create(std::vector<Vehicle> vehicles, std::vector<Job> jobs,
                          double speed_kph, double day_start, double day_end) {
  if (vehicles.empty()) throw LoadError("instance needs at least one vehicle");
  if (!(speed_kph > 0.0) || !std::isfinite(speed_kph))
    throw LoadError("speed_kph must be positive and finite");
  if (!std::isfinite(day_start) || !std::isfinite(day_end) || !(day_start < day_end))
    throw LoadError("working day must satisfy day_start < day_end");

  std::unordered_set<std::string> ids;
  for (const auto& v : vehicles) {
    if (!is_valid(v.depot))
      throw LoadError("vehicle '" + v.id + "': depot coordinates out of range");
    if (!ids.insert(v.id).second) throw LoadError("duplicate id '" + v.id + "'");
  }
  for (const auto& j : jobs) {
    if (!is_valid(j.location))
      throw LoadError("job '" + j.id + "': coordinates out of range");
    if (!(j.service_minutes > 0.0) || !std::isfinite(j.service_minutes))
      throw LoadError("job '" + j.id + "': service_min must be positive");
    if (!ids.insert(j.id).second) throw LoadError("duplicate id '" + j.id + "'");
    if (j.window) {
      const auto& w = *j.window;
      if (!std::isfinite(w.earliest_start) || !std::isfinite(w.latest_end) ||
          !(w.earliest_start < w.latest_end))
        throw LoadError("job '" + j.id + "': window start must precede window end");
      const double lo = std::max(w.earliest_start, day_start);
      const double hi = std::min(w.latest_end, day_end);
      if (!(hi - lo >= j.service_minutes))
        throw LoadError("job '" + j.id +
                        "': window too short to fit service inside the working day");
    }
  }

  Instance inst;
  inst.vehicles_ = std::move(vehicles);
  inst.jobs_ = std::move(jobs);
  inst.speed_kph_ = speed_kph;
  inst.day_start_ = day_start;
  inst.day_end_ = day_end;

  inst.total_service_ = 0.0;
  for (const auto& j : inst.jobs_) inst.total_service_ += j.service_minutes;

  const std::size_t n = inst.n_genes();
  inst.locations_.reserve(n);
  for (const auto& v : inst.vehicles_) inst.locations_.push_back(v.depot);
  for (const auto& j : inst.jobs_) inst.locations_.push_back(j.location);

  inst.travel_.resize(n * n);
  inst.eta_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    inst.travel_[a * n + a] = 0.0;
    for (std::size_t b = a + 1; b < n; ++b) {
      const double t =
          haversine_km(inst.locations_[a], inst.locations_[b]) / speed_kph * 60.0;
      inst.travel_[a * n + b] = t;
      inst.travel_[b * n + a] = t;
    }
  }
  for (std::size_t i = 0; i < n * n; ++i)
    inst.eta_[i] = 1.0 / std::max(inst.travel_[i], 1e-9);
  return inst;
}

std::string Instance::gene_label(Gene g) const {
  return is_vehicle(g) ? "V:" + vehicle_of(g).id : "J:" + job_of(g).id;
}

Gene Instance::parse_gene_label(std::string_view label) const {
  if (label.size() < 3 || label[1] != ':')
    throw LoadError("bad gene label '" + std::string(label) + "'");
  const std::string_view id = label.substr(2);
  if (label[0] == 'V') {
    for (std::size_t i = 0; i < vehicles_.size(); ++i)
      if (vehicles_[i].id == id) return vehicle_gene(i);
  } else if (label[0] == 'J') {
    for (std::size_t j = 0; j < jobs_.size(); ++j)
      if (jobs_[j].id == id) return job_gene(j);
  }
  throw LoadError("gene label '" + std::string(label) + "' matches no entity");
}

Solution Instance::identity_solution() const {
  Solution s;
  s.genes.reserve(n_genes());
  for (std::size_t g = 0; g < n_genes(); ++g) s.genes.push_back(Gene(static_cast<std::uint32_t>(g)));
  return s;
}

bool Instance::operator==(const Instance& other) const {
  return vehicles_ == other.vehicles_ && jobs_ == other.jobs_ &&
         speed_kph_ == other.speed_kph_ && day_start_ == other.day_start_ &&
         day_end_ == other.day_end_;
}

namespace {

double require_number(const json& obj, const char* key, const std::string& who) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_number())
    throw LoadError(who + ": missing numeric field '" + key + "'");
  return it->get<double>();
}

std::string require_string(const json& obj, const char* key, const std::string& who) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string())
    throw LoadError(who + ": missing string field '" + key + "'");
  return it->get<std::string>();
}

}  // namespace

Instance load_instance(std::string_view json_text) {
  json root = json::parse(json_text, nullptr, false);
  if (root.is_discarded() || !root.is_object())
    throw LoadError("instance file is not a JSON object");

  const double speed = root.contains("speed_kph")
                           ? require_number(root, "speed_kph", "instance")
                           : Instance::kDefaultSpeedKph;
  const double day_start = root.contains("day_start_min")
                               ? require_number(root, "day_start_min", "instance")
                               : Instance::kDefaultDayStart;
  const double day_end = root.contains("day_end_min")
                             ? require_number(root, "day_end_min", "instance")
                             : Instance::kDefaultDayEnd;

  if (!root.contains("vehicles") || !root["vehicles"].is_array())
    throw LoadError("instance: missing 'vehicles' array");
  if (!root.contains("jobs") || !root["jobs"].is_array())
    throw LoadError("instance: missing 'jobs' array");

  std::vector<Vehicle> vehicles;
  for (const auto& v : root["vehicles"]) {
    if (!v.is_object()) throw LoadError("vehicles: entries must be objects");
    Vehicle veh;
    veh.id = require_string(v, "id", "vehicle");
    veh.depot = {require_number(v, "lat", "vehicle '" + veh.id + "'"),
                 require_number(v, "lon", "vehicle '" + veh.id + "'")};
    vehicles.push_back(std::move(veh));
  }

  std::vector<Job> jobs;
  for (const auto& j : root["jobs"]) {
    if (!j.is_object()) throw LoadError("jobs: entries must be objects");
    Job job;
    job.id = require_string(j, "id", "job");
    const std::string who = "job '" + job.id + "'";
    job.location = {require_number(j, "lat", who), require_number(j, "lon", who)};
    job.service_minutes = require_number(j, "service_min", who);
    if (j.contains("window") && !j["window"].is_null()) {
      const auto& w = j["window"];
      if (!w.is_array() || w.size() != 2 || !w[0].is_number() || !w[1].is_number())
        throw LoadError(who + ": window must be [start_min, end_min] or null");
      job.window = Window{w[0].get<double>(), w[1].get<double>()};
    }
    jobs.push_back(std::move(job));
  }

  return Instance::create(std::move(vehicles), std::move(jobs), speed, day_start, day_end);
}

Instance load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_instance(buf.str());
}

std::string serialize_instance(const Instance& instance) {
  json root;
  root["speed_kph"] = instance.speed_kph();
  root["day_start_min"] = instance.day_start();
  root["day_end_min"] = instance.day_end();
  root["vehicles"] = json::array();
  for (const auto& v : instance.vehicles())
    root["vehicles"].push_back({{"id", v.id}, {"lat", v.depot.lat}, {"lon", v.depot.lon}});
  root["jobs"] = json::array();
  for (const auto& j : instance.jobs()) {
    json jj = {{"id", j.id},
               {"lat", j.location.lat},
               {"lon", j.location.lon},
               {"service_min", j.service_minutes}};
    jj["window"] = j.window ? json::array({j.window->earliest_start, j.window->latest_end})
                            : json(nullptr);
    root["jobs"].push_back(std::move(jj));
  }
  return root.dump(2) + "\n";
}

void save_instance_file(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write instance file " + path.string());
  out << serialize_instance(instance);
}

}  // namespace fleetopt
