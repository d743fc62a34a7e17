#include "fleetopt/solution.hpp"

#include <nlohmann/json.hpp>

#include "fleetopt/errors.hpp"
#include "fleetopt/instance.hpp"

namespace fleetopt {

using nlohmann::json;

std::vector<std::string> validate_solution(const Instance& instance, const Solution& solution) {
  std::vector<std::string> violations;
  const std::size_t n = instance.n_genes();
  std::vector<std::uint32_t> seen(n, 0);
  for (const Gene g : solution.genes) {
    if (g.flat() >= n) {
      violations.push_back("foreign gene index " + std::to_string(g.flat()));
      continue;
    }
    if (++seen[g.flat()] == 2)
      violations.push_back("duplicate gene " + instance.gene_label(g));
  }
  for (std::size_t i = 0; i < n; ++i)
    if (seen[i] == 0)
      violations.push_back("missing gene " + instance.gene_label(Gene(static_cast<std::uint32_t>(i))));
  if (solution.genes.size() != n && violations.empty())
    violations.push_back("length mismatch");
  return violations;
}

std::string serialize_solution(const Instance& instance, const Solution& solution) {
  json arr = json::array();
  for (const Gene g : solution.genes) arr.push_back(instance.gene_label(g));
  return arr.dump() + "\n";
}

Solution parse_solution(const Instance& instance, const std::string& json_text) {
  json arr = json::parse(json_text, nullptr, false);
  if (arr.is_discarded() || !arr.is_array())
    throw LoadError("solution must be a JSON array of gene labels");
  Solution s;
  s.genes.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string()) throw LoadError("solution entries must be strings");
    s.genes.push_back(instance.parse_gene_label(item.get<std::string>()));
  }
  if (const auto violations = validate_solution(instance, s); !violations.empty())
    throw ValidationError("solution is not a permutation: " + violations.front());
  return s;
}

}  // namespace fleetopt
