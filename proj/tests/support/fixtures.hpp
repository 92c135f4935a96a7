#pragma once

// Test-side fixtures and reference computations. Nothing here calls the
// solvers under test; the reference checks are written from the definitions.

#include <cstdint>
#include <random>
#include <vector>

#include "picker/dp.hpp"
#include "picker/model.hpp"
#include "picker/tour.hpp"

namespace picker::testing {

/// Four aisles, three cross-aisles, blocks of 12, gaps of 6, one item in
/// every subaisle and the depot at the bottom left corner.
WarehouseInstance figure_instance();

/// The example tour drawn over figure_instance(): valid, length 140.
TourSubgraph figure_tour(const WarehouseGraph &graph);

/// Two aisles, two cross-aisles, block 10, gap 5, depot at the bottom left.
WarehouseInstance small_instance(std::vector<ItemLocation> items);

/// All-pairs distances by Floyd-Warshall over the raw edge list.
std::vector<std::vector<Length>> all_pairs(const WarehouseGraph &graph);

/// Shortest closed walk through the depot and every item by trying every
/// visiting order. Only for a handful of distinct item positions.
Length permutation_optimum(const WarehouseInstance &instance);

/// Coverage, connectivity and parity written out directly from degrees and a
/// breadth-first search.
bool reference_valid(const WarehouseGraph &graph, const TourSubgraph &tour);

/// True when the walk is closed at the depot, steps along graph edges and uses
/// every edge exactly its multiplicity.
bool walk_matches(const WarehouseGraph &graph, const TourSubgraph &tour, const Walk &walk);

/// Every frontier state for n cross-aisles, by brute force over port classes,
/// label vectors and the closed flag.
std::vector<FrontierState> brute_force_states(int cross_aisles);

/// Random subgraph assembled from one menu configuration per block and a
/// multiplicity in {0, 1, 2} per horizontal segment. Often invalid.
TourSubgraph random_config_subgraph(const WarehouseGraph &graph, std::mt19937_64 &rng);

/// Tours of the same length as `base` that contain a connecting double run,
/// made by moving one traversal of a stretch from a neighbouring aisle back
/// into aisle i (the reverse of the elimination move). Results are valid.
std::vector<TourSubgraph> reverse_shift_variants(const WarehouseGraph &graph,
                                                 const TourSubgraph &base);

/// Small random instance for property sweeps.
WarehouseInstance random_instance(std::mt19937_64 &rng, int max_aisles, int max_cross_aisles,
                                  int max_items, Length max_length = 100);

} // namespace picker::testing
