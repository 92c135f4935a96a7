#pragma once

// Reference solvers used to check the sweep DP. Neither shares code with it
// beyond the graph model, the configuration menu and the validator.

#include <cstdint>
#include <optional>
#include <vector>

#include "picker/model.hpp"
#include "picker/tour.hpp"

namespace picker {

struct OracleResult {
  Length length = 0;
  /// Held-Karp: depot, items in visiting order, depot. Empty when k = 0.
  std::vector<VertexId> order;
  /// Brute force: the best subgraph found.
  std::optional<TourSubgraph> subgraph;
};

inline constexpr int kMaxHeldKarpItems = 18;

/// Bitmask DP over the metric closure. Index 0 of the distance matrix is the
/// start; value(mask, last) is the shortest path from the start through every
/// target in mask ending at target `last` (which must be in mask).
class HeldKarpTable {
public:
  explicit HeldKarpTable(const DistanceMatrix &distances);

  int targets() const { return targets_; }
  Length value(std::uint32_t mask, int last) const { return table_[index(mask, last)]; }
  Length distance(int from, int to) const { return distances_.at(from, to); }
  Length tour_length() const { return best_; }
  /// Target indices (1-based in the distance matrix) in visiting order.
  std::vector<int> order() const;

private:
  std::size_t index(std::uint32_t mask, int last) const {
    return static_cast<std::size_t>(mask) * targets_ + last;
  }

  DistanceMatrix distances_;
  int targets_ = 0;
  std::vector<Length> table_;
  Length best_ = 0;
  int best_last_ = -1;
};

/// Throws CapExceeded for more than kMaxHeldKarpItems items.
OracleResult solve_held_karp(const WarehouseInstance &instance);

struct BruteForceCaps {
  int max_blocks = 6;
  int max_horizontal_segments = 6;
};

/// Minimum over every combination of vertical configurations per block and
/// horizontal multiplicity in {0, 1, 2} per gap segment that passes the
/// tour-subgraph test. Throws CapExceeded beyond the caps.
OracleResult brute_force_subgraphs(const WarehouseInstance &instance,
                                   const BruteForceCaps &caps = {});

} // namespace picker
