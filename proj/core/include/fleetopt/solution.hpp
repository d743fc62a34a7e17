#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fleetopt {

class Instance;

/// One position of the schedule encoding: a flat index into an instance's
/// gene space. Indices [0, n_vehicles) are vehicle genes, the rest job genes;
/// the owning Instance resolves kind, entity and location.
class Gene {
 public:
  constexpr Gene() = default;
  constexpr explicit Gene(std::uint32_t flat) : flat_(flat) {}

  constexpr std::uint32_t flat() const { return flat_; }
  auto operator<=>(const Gene&) const = default;

 private:
  std::uint32_t flat_ = 0;
};

/// A fleet schedule: a permutation of every vehicle gene and every job gene.
/// Each vehicle gene owns the job genes that follow it, cyclically.
struct Solution {
  std::vector<Gene> genes;

  bool operator==(const Solution&) const = default;
};

/// Permutation diagnostics for a candidate solution; empty means valid.
/// Reported violations name missing genes, duplicates, and foreign indices.
std::vector<std::string> validate_solution(const Instance& instance, const Solution& solution);

/// Serializes as a JSON array of "V:<id>" / "J:<id>" strings.
std::string serialize_solution(const Instance& instance, const Solution& solution);

/// Parses the gene-string array; throws LoadError on unknown labels,
/// ValidationError if the result is not a permutation.
Solution parse_solution(const Instance& instance, const std::string& json_text);

}  // namespace fleetopt
