#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fleetopt/solution.hpp"

namespace fleetopt {

/// Relative deposit of an ant: (g_best / l_best)^alpha, in (0, 1].
/// Requires 0 < g_best <= l_best; throws DomainError otherwise.
double deposit_amount(double l_best_quality, double g_best_quality, double alpha);

/// Dense directed pheromone matrix with optional [tau_min, tau_max] bounds.
/// Deposits land on directed entries; selection reads the undirected level
/// tau_ij + tau_ji, for which a row-contiguous mirror is kept (the column
/// walk otherwise dominates construction cost at month scale).
class EdgeMatrix {
 public:
  explicit EdgeMatrix(std::size_t n_genes, double initial = 1.0);

  std::size_t n_genes() const { return n_; }

  double at(Gene i, Gene j) const { return tau_[i.flat() * n_ + j.flat()]; }
  double undirected(Gene i, Gene j) const {
    return tau_[i.flat() * n_ + j.flat()] + tau_[j.flat() * n_ + i.flat()];
  }

  /// Row of undirected levels; valid until the next mutating call.
  std::span<const double> undirected_row(Gene i) const;

  /// Rebuilds the undirected mirror if needed. Call once after a batch of
  /// updates, before sharing the matrix with concurrent readers; reads are
  /// then race-free.
  void prepare_reads() const { sync(); }

  bool has_bounds() const { return bounds_.has_value(); }
  double tau_min() const { return bounds_->first; }
  double tau_max() const { return bounds_->second; }

  /// Sets bounds and clamps all entries into them immediately.
  void set_bounds(double tau_min, double tau_max);
  void fill(double value);

  /// tau <- (1 - rho) * tau, then clamp. rho must lie in (0, 1).
  void evaporate(double rho);

  /// Adds `amount` on every directed consecutive edge of the tour including
  /// the wrap edge (last -> first), clamping to bounds. Tours shorter than
  /// two genes have no edges.
  void deposit_tour(std::span<const Gene> tour, double amount);

 private:
  void clamp_all();
  void sync() const;

  std::size_t n_;
  std::vector<double> tau_;
  mutable std::vector<double> undirected_;
  mutable bool dirty_ = true;
  std::optional<std::pair<double, double>> bounds_;
};

/// Immutable snapshot of the ant population: each member's locally best
/// solution, its quality, its Eq.-5 deposit, and successor/predecessor
/// indexes for O(1) edge lookup. Solvers refresh it at iteration barriers;
/// reads are const and safe to share across workers.
class PopulationView {
 public:
  PopulationView(std::size_t n_members, std::size_t n_genes);

  std::size_t size() const { return members_.size(); }
  std::size_t n_genes() const { return n_genes_; }

  /// Copies the member's solution and rebuilds its edge index.
  void set_solution(std::size_t member, std::span<const Gene> genes, double quality);

  /// Recomputes g_best and every member's deposit (g_best/l_best)^alpha.
  /// A member matching g_best deposits exactly 1; if g_best is 0 (a perfect
  /// zero-traversal schedule) strictly worse members deposit 0.
  void refresh_deposits(double alpha);

  double g_best() const { return g_best_; }
  double quality(std::size_t member) const { return members_[member].quality; }
  double deposit(std::size_t member) const { return members_[member].deposit; }
  std::span<const Gene> solution(std::size_t member) const { return members_[member].genes; }
  Gene successor(std::size_t member, Gene g) const {
    return members_[member].next[g.flat()];
  }
  Gene predecessor(std::size_t member, Gene g) const {
    return members_[member].prev[g.flat()];
  }

  /// Memory held by the snapshot (solutions + edge indexes), for the
  /// O(n_ants * n) auxiliary-memory accounting of the matrix-free solver.
  std::size_t memory_bytes() const;

 private:
  struct Member {
    std::vector<Gene> genes;
    std::vector<Gene> next;  // by gene flat index
    std::vector<Gene> prev;
    double quality = 0.0;
    double deposit = 0.0;
  };

  std::size_t n_genes_;
  std::vector<Member> members_;
  double g_best_ = 0.0;
};

/// Matrix-free pheromone reconstruction (the population is the pheromone):
/// for each member, its deposit is added to the weight of every unvisited
/// gene adjacent to `current` in the member's cyclic sequence, counting both
/// the edge taken from and the edge taken to `current`. Genes no member
/// touches keep weight 0. Returns one weight per entry of `unvisited`,
/// computed as (forward sum) + (reverse sum) so the result is bitwise equal
/// to depositing the population into an EdgeMatrix and reading
/// tau[current][g] + tau[g][current]. Cost is O(population), not O(n^2).
std::vector<double> reconstruct_weights(const PopulationView& population, Gene current,
                                        std::span<const Gene> unvisited, double alpha);

}  // namespace fleetopt
