#include "fleetopt/pheromone.hpp"

#include <algorithm>
#include <cmath>

#include "fleetopt/errors.hpp"

namespace fleetopt {

double deposit_amount(double l_best_quality, double g_best_quality, double alpha) {
  if (!(g_best_quality > 0.0) || !(g_best_quality <= l_best_quality))
    throw DomainError("deposit_amount requires 0 < g_best <= l_best");
  const double ratio = g_best_quality / l_best_quality;
  if (alpha == 1.0) return ratio;
  if (alpha == 2.0) return ratio * ratio;
  if (alpha == 3.0) return ratio * ratio * ratio;
  return std::pow(ratio, alpha);
}

EdgeMatrix::EdgeMatrix(std::size_t n_genes, double initial)
    : n_(n_genes), tau_(n_genes * n_genes, initial), undirected_(n_genes * n_genes) {}

std::span<const double> EdgeMatrix::undirected_row(Gene i) const {
  sync();
  return {undirected_.data() + i.flat() * n_, n_};
}

void EdgeMatrix::sync() const {
  if (!dirty_) return;
  for (std::size_t a = 0; a < n_; ++a) {
    undirected_[a * n_ + a] = 2.0 * tau_[a * n_ + a];
    for (std::size_t b = a + 1; b < n_; ++b) {
      const double u = tau_[a * n_ + b] + tau_[b * n_ + a];
      undirected_[a * n_ + b] = u;
      undirected_[b * n_ + a] = u;
    }
  }
  dirty_ = false;
}

void EdgeMatrix::clamp_all() {
  if (!bounds_) return;
  const auto [lo, hi] = *bounds_;
  for (double& t : tau_) t = std::clamp(t, lo, hi);
}

void EdgeMatrix::set_bounds(double tau_min, double tau_max) {
  if (!(tau_min >= 0.0) || !(tau_min <= tau_max))
    throw DomainError("EdgeMatrix bounds require 0 <= tau_min <= tau_max");
  bounds_ = {tau_min, tau_max};
  clamp_all();
  dirty_ = true;
}

void EdgeMatrix::fill(double value) {
  std::fill(tau_.begin(), tau_.end(), value);
  clamp_all();
  dirty_ = true;
}

void EdgeMatrix::evaporate(double rho) {
  if (!(rho > 0.0) || !(rho < 1.0)) throw DomainError("evaporation rate must be in (0, 1)");
  const double keep = 1.0 - rho;
  if (bounds_) {
    const auto [lo, hi] = *bounds_;
    for (double& t : tau_) t = std::clamp(t * keep, lo, hi);
  } else {
    for (double& t : tau_) t *= keep;
  }
  dirty_ = true;
}

void EdgeMatrix::deposit_tour(std::span<const Gene> tour, double amount) {
  if (tour.size() < 2) return;
  auto bump = [&](Gene i, Gene j) {
    double& t = tau_[i.flat() * n_ + j.flat()];
    t += amount;
    if (bounds_) t = std::clamp(t, bounds_->first, bounds_->second);
  };
  for (std::size_t k = 0; k + 1 < tour.size(); ++k) bump(tour[k], tour[k + 1]);
  bump(tour.back(), tour.front());
  dirty_ = true;
}

PopulationView::PopulationView(std::size_t n_members, std::size_t n_genes)
    : n_genes_(n_genes), members_(n_members) {
  for (auto& m : members_) {
    m.next.resize(n_genes);
    m.prev.resize(n_genes);
  }
}

void PopulationView::set_solution(std::size_t member, std::span<const Gene> genes,
                                  double quality) {
  Member& m = members_[member];
  m.genes.assign(genes.begin(), genes.end());
  m.quality = quality;
  const std::size_t len = genes.size();
  for (std::size_t k = 0; k < len; ++k) {
    const Gene g = genes[k];
    m.next[g.flat()] = genes[(k + 1) % len];
    m.prev[g.flat()] = genes[(k + len - 1) % len];
  }
}

void PopulationView::refresh_deposits(double alpha) {
  bool any = false;
  g_best_ = 0.0;
  for (const auto& m : members_) {
    if (m.genes.empty()) continue;
    g_best_ = any ? std::min(g_best_, m.quality) : m.quality;
    any = true;
  }
  for (auto& m : members_) {
    if (m.genes.empty())
      m.deposit = 0.0;
    else if (m.quality == g_best_)
      m.deposit = 1.0;
    else if (g_best_ <= 0.0)
      m.deposit = 0.0;
    else
      m.deposit = deposit_amount(m.quality, g_best_, alpha);
  }
}

std::size_t PopulationView::memory_bytes() const {
  std::size_t bytes = sizeof(*this);
  for (const auto& m : members_) {
    bytes += sizeof(m);
    bytes += m.genes.capacity() * sizeof(Gene);
    bytes += m.next.capacity() * sizeof(Gene);
    bytes += m.prev.capacity() * sizeof(Gene);
  }
  return bytes;
}

std::vector<double> reconstruct_weights(const PopulationView& population, Gene current,
                                        std::span<const Gene> unvisited, double alpha) {
  std::vector<double> forward(population.n_genes(), 0.0);
  std::vector<double> reverse(population.n_genes(), 0.0);
  for (std::size_t k = 0; k < population.size(); ++k) {
    if (population.solution(k).empty()) continue;
    double d = 0.0;
    if (population.quality(k) == population.g_best())
      d = 1.0;
    else if (population.g_best() > 0.0)
      d = deposit_amount(population.quality(k), population.g_best(), alpha);
    forward[population.successor(k, current).flat()] += d;
    reverse[population.predecessor(k, current).flat()] += d;
  }
  std::vector<double> weights;
  weights.reserve(unvisited.size());
  for (const Gene g : unvisited)
    weights.push_back(forward[g.flat()] + reverse[g.flat()]);
  return weights;
}

}  // namespace fleetopt
