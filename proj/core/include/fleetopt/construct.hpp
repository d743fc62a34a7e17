#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "fleetopt/instance.hpp"
#include "fleetopt/pheromone.hpp"
#include "fleetopt/rng.hpp"

namespace fleetopt {

/// Instrumentation for the probabilistic construction cost model: one
/// decision per placed gene; comparisons count the unvisited candidates
/// examined at a step (0 when the move is forced, i.e. fewer than two
/// candidates remain) — the triangular-number cost of full construction.
struct StepCounters {
  std::uint64_t decisions = 0;
  std::uint64_t comparisons = 0;
};

/// tau^alpha / eta^beta with the common integer exponents specialized away
/// from std::pow.
class PowSpec {
 public:
  explicit PowSpec(double exponent) : e_(exponent) {
    if (exponent == 0.0) kind_ = 0;
    else if (exponent == 1.0) kind_ = 1;
    else if (exponent == 2.0) kind_ = 2;
    else if (exponent == 3.0) kind_ = 3;
    else kind_ = -1;
  }
  double operator()(double x) const {
    switch (kind_) {
      case 0: return 1.0;
      case 1: return x;
      case 2: return x * x;
      case 3: return x * x * x;
      default: return std::pow(x, e_);
    }
  }

 private:
  int kind_;
  double e_;
};

/// Swap-remove set of unvisited genes with O(1) membership.
class UnvisitedSet {
 public:
  void reset_full(std::size_t n_genes) {
    items_.resize(n_genes);
    pos_.assign(n_genes, 0);
    for (std::uint32_t g = 0; g < n_genes; ++g) {
      items_[g] = Gene(g);
      pos_[g] = g;
    }
    count_ = n_genes;
  }
  void remove(Gene g) {
    const std::uint32_t p = pos_[g.flat()];
    const Gene last = items_[count_ - 1];
    items_[p] = last;
    pos_[last.flat()] = p;
    pos_[g.flat()] = kAbsent;
    --count_;
  }
  bool contains(Gene g) const { return pos_[g.flat()] != kAbsent; }
  std::span<const Gene> items() const { return {items_.data(), count_}; }
  std::size_t size() const { return count_; }
  std::size_t memory_bytes() const {
    return items_.capacity() * sizeof(Gene) + pos_.capacity() * sizeof(std::uint32_t);
  }

 private:
  static constexpr std::uint32_t kAbsent = 0xFFFFFFFFu;
  std::vector<Gene> items_;
  std::vector<std::uint32_t> pos_;
  std::size_t count_ = 0;
};

/// Pheromone providers for the random proportional rule.
struct UniformTau {};
struct MatrixTau {
  const EdgeMatrix* matrix;  ///< reads undirected rows; call prepare first
};
struct PopulationTau {
  const PopulationView* population;
};

/// Builds gene sequences with the random proportional rule
///   p(g) ∝ tau(current,g)^alpha * eta(current,g)^beta
/// over the unvisited genes. One instance per ant; not thread-safe, but
/// concurrent builders over the same immutable instance/pheromone snapshot
/// are independent.
class SequenceBuilder {
 public:
  SequenceBuilder(const Instance& instance, double alpha, double beta)
      : inst_(&instance), pow_alpha_(alpha), pow_beta_(beta) {
    const std::size_t n = instance.n_genes();
    weights_.resize(n);
    forward_.assign(n, 0.0);
    reverse_.assign(n, 0.0);
    touched_.reserve(n);
  }

  /// Completes `out` into a full permutation. An empty `out` starts with a
  /// uniformly random vehicle gene (one decision, no comparisons); every
  /// further gene is chosen by the proportional rule. When no candidate
  /// carries pheromone the rule falls back to the uniform prior tau = 1.
  template <class TauSource>
  void complete(std::vector<Gene>& out, const TauSource& tau, Rng& rng,
                StepCounters& counters) {
    const std::size_t n = inst_->n_genes();
    unvisited_.reset_full(n);
    for (const Gene g : out) unvisited_.remove(g);
    if (out.empty()) {
      const Gene start(static_cast<std::uint32_t>(rng.below(inst_->n_vehicles())));
      out.push_back(start);
      unvisited_.remove(start);
      ++counters.decisions;
    }
    while (out.size() < n) {
      const Gene next = pick_next(out.back(), tau, rng, counters);
      out.push_back(next);
      unvisited_.remove(next);
    }
  }

  std::size_t memory_bytes() const {
    return unvisited_.memory_bytes() + (weights_.capacity() + forward_.capacity() +
                                        reverse_.capacity()) * sizeof(double) +
           touched_.capacity() * sizeof(Gene);
  }

 private:
  Gene pick_next(Gene current, const UniformTau&, Rng& rng, StepCounters& counters) {
    begin_step(counters);
    if (unvisited_.size() == 1) return unvisited_.items()[0];
    return roulette_dense(current, nullptr, rng);
  }

  Gene pick_next(Gene current, const MatrixTau& tau, Rng& rng, StepCounters& counters) {
    begin_step(counters);
    if (unvisited_.size() == 1) return unvisited_.items()[0];
    return roulette_dense(current, tau.matrix->undirected_row(current).data(), rng);
  }

  Gene pick_next(Gene current, const PopulationTau& tau, Rng& rng, StepCounters& counters) {
    begin_step(counters);
    if (unvisited_.size() == 1) return unvisited_.items()[0];

    const PopulationView& pop = *tau.population;
    touched_.clear();
    for (std::size_t k = 0; k < pop.size(); ++k) {
      const double d = pop.deposit(k);
      if (d == 0.0) continue;
      const Gene s = pop.successor(k, current);
      if (unvisited_.contains(s)) {
        if (forward_[s.flat()] == 0.0 && reverse_[s.flat()] == 0.0) touched_.push_back(s);
        forward_[s.flat()] += d;
      }
      const Gene p = pop.predecessor(k, current);
      if (unvisited_.contains(p)) {
        if (forward_[p.flat()] == 0.0 && reverse_[p.flat()] == 0.0) touched_.push_back(p);
        reverse_[p.flat()] += d;
      }
    }
    if (touched_.empty()) return roulette_dense(current, nullptr, rng);

    const double* eta = inst_->eta_row(current);
    double total = 0.0;
    for (std::size_t i = 0; i < touched_.size(); ++i) {
      const std::uint32_t f = touched_[i].flat();
      const double t = forward_[f] + reverse_[f];
      const double w = pow_alpha_(t) * pow_beta_(eta[f]);
      weights_[i] = w;
      total += w;
    }
    Gene picked = touched_.back();
    if (total > 0.0) {
      const double r = rng.uniform() * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < touched_.size(); ++i) {
        acc += weights_[i];
        if (r < acc) {
          picked = touched_[i];
          break;
        }
      }
    } else {
      picked = roulette_dense(current, nullptr, rng);
    }
    for (const Gene g : touched_) {
      forward_[g.flat()] = 0.0;
      reverse_[g.flat()] = 0.0;
    }
    return picked;
  }

  void begin_step(StepCounters& counters) {
    ++counters.decisions;
    if (unvisited_.size() >= 2) counters.comparisons += unvisited_.size();
  }

  /// Weighted pick over all unvisited genes; tau_row == nullptr means the
  /// uniform prior tau = 1.
  Gene roulette_dense(Gene current, const double* tau_row, Rng& rng) {
    const double* eta = inst_->eta_row(current);
    const auto items = unvisited_.items();
    double total = 0.0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::uint32_t f = items[i].flat();
      const double w =
          (tau_row ? pow_alpha_(tau_row[f]) : 1.0) * pow_beta_(eta[f]);
      weights_[i] = w;
      total += w;
    }
    if (!(total > 0.0)) return items.back();
    const double r = rng.uniform() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      acc += weights_[i];
      if (r < acc) return items[i];
    }
    return items.back();
  }

  const Instance* inst_;
  PowSpec pow_alpha_;
  PowSpec pow_beta_;
  UnvisitedSet unvisited_;
  std::vector<double> weights_;
  std::vector<double> forward_;
  std::vector<double> reverse_;
  std::vector<Gene> touched_;
};

}  // namespace fleetopt
