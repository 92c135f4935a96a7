#pragma once

// Connecting double runs and their elimination.
//
// A double run is a maximal vertical stretch of one aisle in which every
// segment carries exactly two edges and no intersection strictly inside the
// stretch has a horizontal edge. It is connecting when both of its end
// intersections carry horizontal edges. Any tour subgraph with a connecting
// run can be rewritten into one of no greater length without any, by
// repeatedly either dropping a redundant pair of traversals or moving one
// traversal of the run into the neighbouring aisle.

#include <optional>
#include <string>
#include <vector>

#include "picker/model.hpp"
#include "picker/tour.hpp"

namespace picker {

struct DoubleRun {
  int aisle = 1;
  int low_row = 1;  // lower end intersection (cross-aisle index)
  int high_row = 2; // upper end intersection
  bool connecting = false;

  int span() const { return high_row - low_row; }
  friend bool operator==(const DoubleRun &, const DoubleRun &) = default;
};

struct Orientation {
  /// Count horizontal edges on the right of the run instead of the left.
  bool mirror_lr = false;
  /// The "b" end (the one with more counted edges) is the upper end.
  bool swap_ab = false;

  friend bool operator==(const Orientation &, const Orientation &) = default;
};

/// s = (s_a, s_b): counted horizontal multiplicities at the a and b ends,
/// normalised so that 0 <= s_a <= s_b and s_b > 0.
struct DoubleEdgeState {
  int s_a = 0;
  int s_b = 0;
  Orientation orientation;

  bool in_reduced_set() const;
  friend bool operator==(const DoubleEdgeState &, const DoubleEdgeState &) = default;
};

/// All maximal runs, ordered by aisle then lower row.
std::vector<DoubleRun> find_double_runs(const WarehouseGraph &graph, const TourSubgraph &tour);

/// Aisle indices of the connecting runs, sorted in descending order.
std::vector<int> connecting_potential(const WarehouseGraph &graph, const TourSubgraph &tour);

/// Uses the left side whenever either end has a horizontal edge on its left,
/// otherwise mirrors. Throws InvalidArgument for a non-connecting run.
DoubleEdgeState classify_state(const WarehouseGraph &graph, const TourSubgraph &tour,
                               const DoubleRun &run);

/// True when the run's ends stay connected after deleting both copies of
/// every run segment.
bool detect_redundant(const WarehouseGraph &graph, const TourSubgraph &tour, const DoubleRun &run);

/// Drops both copies of the segments spanning the run's widest stretch
/// between consecutive points that must stay covered (the run's two ends, the
/// item vertices on it and the depot; topmost on ties). With no items on the
/// run this is the whole run. Throws InvalidArgument unless the run is
/// redundant.
TourSubgraph remove_redundant_pair(const WarehouseGraph &graph, const TourSubgraph &tour,
                                   const DoubleRun &run);

/// Moves one traversal of the run into the neighbouring aisle selected by the
/// orientation: one copy of the run and one copy of the horizontal edge at the
/// b end are removed, one copy of the neighbour's matching stretch and one
/// horizontal edge at the a end are added. Length is unchanged.
TourSubgraph apply_transform(const WarehouseGraph &graph, const TourSubgraph &tour,
                             const DoubleRun &run, const DoubleEdgeState &state);

struct ReductionStep {
  int index = 0;
  std::string case_label; // 0.1, 0.2, 1, 2, 3i, 3ii, 3iii
  DoubleRun run;
  std::optional<DoubleEdgeState> state;
  Length length_before = 0;
  Length length_after = 0;
  int surplus_pairs_removed = 0;
  bool valid_after = true;
  bool potential_decreased = true;
};

struct ReductionResult {
  TourSubgraph tour;
  std::vector<ReductionStep> steps;
  /// Pairs dropped from edges with multiplicity above two before the loop.
  int initial_pairs_removed = 0;
  int iteration_cap = 0;
};

/// Loop: recompute runs; take the connecting run in the right-most aisle
/// (lowest first); remove it if redundant, else transform it. Edges pushed to
/// multiplicity three are trimmed back by one pair in the same step. Throws
/// CapExceeded if the iteration cap is reached and InvalidArgument for an
/// invalid input.
ReductionResult eliminate_connecting_doubles(const WarehouseGraph &graph, const TourSubgraph &tour);

/// One line per step: index, case, aisle, rows, state, lengths.
std::string format_trace(const std::vector<ReductionStep> &steps);

} // namespace picker
