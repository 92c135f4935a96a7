#pragma once

// Exact minimum tour via a left-to-right sweep over the aisles. Between aisle
// i and i+1 the sweep keeps a frontier state: the multiplicity class of each
// of the n horizontal edges crossing the gap, which ports belong to the same
// connected component of the part built so far, and whether the tour has
// already been closed off.

#include <cstdint>
#include <string>
#include <vector>

#include "picker/model.hpp"
#include "picker/tour.hpp"

namespace picker {

enum class PortClass : std::uint8_t { Zero = 0, Odd = 1, Even = 2 };

struct FrontierState {
  std::vector<PortClass> ports;
  /// Component label per port, 0 for Zero ports, otherwise 1.. numbered by
  /// first appearance from the bottom cross-aisle upward.
  std::vector<std::uint8_t> components;
  bool closed = false;

  friend bool operator==(const FrontierState &, const FrontierState &) = default;
};

/// Checks the frontier invariants: labels match the nonzero ports and are in
/// first-appearance order, components are non-crossing, every component has
/// an even number of Odd ports, and a closed state has no ports.
bool is_valid_state(const FrontierState &state);

/// Every valid state for n cross-aisles, ordered by their packed encoding.
std::vector<FrontierState> enumerate_states(int cross_aisles);

std::uint64_t pack(const FrontierState &state);
FrontierState unpack(std::uint64_t key, int cross_aisles);
std::string to_string(const FrontierState &state);

struct DpOptions {
  /// Reject any aisle assignment with a double-traversal run whose two end
  /// intersections both carry horizontal edges.
  bool prune_connecting = true;
  /// Drop the Double configuration from the menu altogether.
  bool exclude_double = false;
};

struct DpStats {
  std::int64_t states_expanded = 0;
  std::int64_t transitions = 0;
};

struct OptimalTour {
  Length length = 0;
  TourSubgraph subgraph;
  DpStats stats;
};

inline constexpr int kMaxDpCrossAisles = 6;

/// Throws CapExceeded when the instance has more than kMaxDpCrossAisles
/// cross-aisles, InvalidArgument when exclude_double leaves no tour, and
/// std::logic_error if no tour is found otherwise (a solver bug).
OptimalTour solve_dp(const WarehouseInstance &instance, const DpOptions &options = {});

} // namespace picker
