#include "picker/reduce.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "picker/errors.hpp"

namespace picker {

bool DoubleEdgeState::in_reduced_set() const {
  // {(0,1), (0,2), (1,1), (1,2), (2,2)}
  return s_a >= 0 && s_b >= 1 && s_b <= 2 && s_a <= s_b && !(s_a == 0 && s_b == 0);
}

namespace {

int left_mult(const WarehouseGraph &graph, const TourSubgraph &tour, int aisle, int row) {
  return aisle > 1 ? tour[graph.horizontal(aisle - 1, row)] : 0;
}

int right_mult(const WarehouseGraph &graph, const TourSubgraph &tour, int aisle, int row) {
  return aisle < graph.aisles() ? tour[graph.horizontal(aisle, row)] : 0;
}

int side_mult(const WarehouseGraph &graph, const TourSubgraph &tour, int aisle, int row,
              bool right) {
  return right ? right_mult(graph, tour, aisle, row) : left_mult(graph, tour, aisle, row);
}

bool block_doubled(const WarehouseGraph &graph, const TourSubgraph &tour, int aisle, int block) {
  const auto segments = graph.block_segments(aisle, block);
  return std::all_of(segments.begin(), segments.end(), [&](EdgeId e) { return tour[e] == 2; });
}

bool block_single(const WarehouseGraph &graph, const TourSubgraph &tour, int aisle, int block) {
  const auto segments = graph.block_segments(aisle, block);
  return std::all_of(segments.begin(), segments.end(), [&](EdgeId e) { return tour[e] == 1; });
}

void add_stretch(const WarehouseGraph &graph, TourSubgraph &tour, int aisle, int low_row,
                 int high_row, int delta) {
  for (int block = low_row; block < high_row; ++block)
    for (EdgeId e : graph.block_segments(aisle, block))
      tour[e] += delta;
}

void check_run(const WarehouseGraph &graph, const DoubleRun &run) {
  if (run.aisle < 1 || run.aisle > graph.aisles() || run.low_row < 1 ||
      run.high_row > graph.cross_aisles() || run.low_row >= run.high_row)
    throw InvalidArgument("double run out of range");
}

// Trims every edge with multiplicity of three or more by pairs, keeping parity
// and at least one copy. Returns the number of pairs removed.
int trim_surplus(TourSubgraph &tour) {
  int pairs = 0;
  for (int e = 0; e < tour.size(); ++e) {
    while (tour[e] >= 3) {
      tour[e] -= 2;
      ++pairs;
    }
  }
  return pairs;
}

} // namespace

std::vector<DoubleRun> find_double_runs(const WarehouseGraph &graph, const TourSubgraph &tour) {
  if (tour.size() != graph.edge_count())
    throw InvalidArgument("tour subgraph does not match the graph");
  const int n = graph.cross_aisles();
  std::vector<DoubleRun> runs;
  for (int aisle = 1; aisle <= graph.aisles(); ++aisle) {
    auto horizontal = [&](int row) {
      return left_mult(graph, tour, aisle, row) + right_mult(graph, tour, aisle, row);
    };
    int low = 0;
    for (int block = 1; block < n; ++block) {
      if (!block_doubled(graph, tour, aisle, block)) {
        low = 0;
        continue;
      }
      if (low == 0)
        low = block;
      const int top = block + 1;
      const bool next_doubled = top < n && block_doubled(graph, tour, aisle, top);
      if (top < n && next_doubled && horizontal(top) == 0)
        continue;
      runs.push_back({aisle, low, top, horizontal(low) > 0 && horizontal(top) > 0});
      low = next_doubled ? top : 0;
    }
  }
  return runs;
}

std::vector<int> connecting_potential(const WarehouseGraph &graph, const TourSubgraph &tour) {
  std::vector<int> out;
  for (const auto &run : find_double_runs(graph, tour))
    if (run.connecting)
      out.push_back(run.aisle);
  std::sort(out.rbegin(), out.rend());
  return out;
}

DoubleEdgeState classify_state(const WarehouseGraph &graph, const TourSubgraph &tour,
                               const DoubleRun &run) {
  check_run(graph, run);
  if (!run.connecting)
    throw InvalidArgument("classify_state: run is not connecting");
  DoubleEdgeState state;
  const int left_low = left_mult(graph, tour, run.aisle, run.low_row);
  const int left_high = left_mult(graph, tour, run.aisle, run.high_row);
  state.orientation.mirror_lr = left_low + left_high == 0;
  const bool right = state.orientation.mirror_lr;
  const int low = side_mult(graph, tour, run.aisle, run.low_row, right);
  const int high = side_mult(graph, tour, run.aisle, run.high_row, right);
  if (low + high == 0)
    throw InvalidArgument("classify_state: run has no horizontal edges");
  state.orientation.swap_ab = high > low;
  state.s_a = std::min(low, high);
  state.s_b = std::max(low, high);
  return state;
}

bool detect_redundant(const WarehouseGraph &graph, const TourSubgraph &tour, const DoubleRun &run) {
  check_run(graph, run);
  TourSubgraph without = tour;
  for (int block = run.low_row; block < run.high_row; ++block)
    for (EdgeId e : graph.block_segments(run.aisle, block))
      without[e] = 0;
  const VertexId source = graph.intersection(run.aisle, run.low_row);
  const VertexId target = graph.intersection(run.aisle, run.high_row);
  std::vector<bool> seen(graph.vertex_count(), false);
  std::vector<VertexId> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (v == target)
      return true;
    for (auto [w, e] : graph.adjacency(v))
      if (without[e] > 0 && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return false;
}

TourSubgraph remove_redundant_pair(const WarehouseGraph &graph, const TourSubgraph &tour,
                                   const DoubleRun &run) {
  if (!detect_redundant(graph, tour, run))
    throw InvalidArgument("remove_redundant_pair: run is not redundant");
  // Segments of the run bottom to top, with the height of each segment's top.
  std::vector<EdgeId> segments;
  for (int block = run.low_row; block < run.high_row; ++block)
    for (EdgeId e : graph.block_segments(run.aisle, block))
      segments.push_back(e);

  // Stretches between consecutive must-cover points (items, depot, run ends):
  // [first, last) segment ranges.
  std::size_t best_first = 0;
  std::size_t best_last = 0;
  Length best_length = -1;
  std::size_t first = 0;
  Length stretch = 0;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    const Edge &edge = graph.edge(segments[s]);
    stretch += edge.length;
    const bool point = s + 1 == segments.size() ||
                       graph.vertex(edge.v).kind == VertexKind::Item || edge.v == graph.depot();
    if (!point)
      continue;
    if (stretch >= best_length) {
      best_length = stretch;
      best_first = first;
      best_last = s + 1;
    }
    first = s + 1;
    stretch = 0;
  }
  TourSubgraph out = tour;
  for (std::size_t s = best_first; s < best_last; ++s)
    out[segments[s]] -= 2;
  return out;
}

TourSubgraph apply_transform(const WarehouseGraph &graph, const TourSubgraph &tour,
                             const DoubleRun &run, const DoubleEdgeState &state) {
  check_run(graph, run);
  if (!run.connecting)
    throw InvalidArgument("apply_transform: run is not connecting");
  for (int block = run.low_row; block < run.high_row; ++block)
    if (!block_doubled(graph, tour, run.aisle, block))
      throw InvalidArgument("apply_transform: run is not doubled in this subgraph");
  const bool right = state.orientation.mirror_lr;
  const int neighbour = right ? run.aisle + 1 : run.aisle - 1;
  if (neighbour < 1 || neighbour > graph.aisles())
    throw InvalidArgument("apply_transform: no neighbouring aisle in this orientation");
  const int b_row = state.orientation.swap_ab ? run.high_row : run.low_row;
  const int a_row = state.orientation.swap_ab ? run.low_row : run.high_row;
  if (side_mult(graph, tour, run.aisle, b_row, right) != state.s_b ||
      side_mult(graph, tour, run.aisle, a_row, right) != state.s_a)
    throw InvalidArgument("apply_transform: orientation does not match the subgraph");
  if (state.s_b < 1)
    throw InvalidArgument("apply_transform: no horizontal edge at the b end");

  const int gap = right ? run.aisle : run.aisle - 1;
  TourSubgraph out = tour;
  add_stretch(graph, out, run.aisle, run.low_row, run.high_row, -1);
  out[graph.horizontal(gap, b_row)] -= 1;
  add_stretch(graph, out, neighbour, run.low_row, run.high_row, +1);
  out[graph.horizontal(gap, a_row)] += 1;
  return out;
}

namespace {

// Case label of a transform step; `after` is the transformed tour.
std::string transform_label(const WarehouseGraph &graph, const TourSubgraph &before,
                            const TourSubgraph &after, const DoubleRun &run,
                            const DoubleEdgeState &state) {
  const bool right = state.orientation.mirror_lr;
  const int neighbour = right ? run.aisle + 1 : run.aisle - 1;
  for (int block = run.low_row; block < run.high_row; ++block)
    if (!block_single(graph, before, neighbour, block))
      return "0.2";
  if (state.s_a >= 1)
    return "1";
  if (state.s_b >= 2)
    return "2";

  // The neighbour's stretch is now doubled; inspect its end beyond the b side.
  const bool b_high = state.orientation.swap_ab;
  const int probe = b_high ? run.high_row - 1 : run.low_row;
  for (const auto &r : find_double_runs(graph, after)) {
    if (r.aisle != neighbour || probe < r.low_row || probe >= r.high_row)
      continue;
    const int c_row = b_high ? r.high_row : r.low_row;
    const int toward = side_mult(graph, after, neighbour, c_row, !right);
    const int away = side_mult(graph, after, neighbour, c_row, right);
    if (toward + away == 0)
      return "3i";
    return toward > 0 ? "3ii" : "3iii";
  }
  throw std::logic_error("transform_label: shifted double run not found");
}

} // namespace

ReductionResult eliminate_connecting_doubles(const WarehouseGraph &graph, const TourSubgraph &tour) {
  const auto report = is_tour_subgraph(graph, tour);
  if (!report.valid)
    throw InvalidArgument("eliminate_connecting_doubles: input is not a tour subgraph");

  ReductionResult result;
  result.tour = tour;
  result.initial_pairs_removed = trim_surplus(result.tour);

  auto potential = connecting_potential(graph, result.tour);
  const int blocks = graph.aisles() * (graph.cross_aisles() - 1);
  result.iteration_cap = graph.aisles() * blocks * (1 + static_cast<int>(potential.size()));

  while (!potential.empty()) {
    if (static_cast<int>(result.steps.size()) >= result.iteration_cap)
      throw CapExceeded("connecting double runs remain after " +
                        std::to_string(result.iteration_cap) +
                        " steps; possible counterexample to the elimination argument");

    const auto runs = find_double_runs(graph, result.tour);
    const DoubleRun *chosen = nullptr;
    for (const auto &run : runs)
      if (run.connecting && (chosen == nullptr || run.aisle > chosen->aisle))
        chosen = &run;

    ReductionStep step;
    step.index = static_cast<int>(result.steps.size()) + 1;
    step.run = *chosen;
    step.length_before = tour_length(graph, result.tour);

    TourSubgraph next;
    if (detect_redundant(graph, result.tour, *chosen)) {
      step.case_label = "0.1";
      next = remove_redundant_pair(graph, result.tour, *chosen);
    } else {
      const auto state = classify_state(graph, result.tour, *chosen);
      step.state = state;
      next = apply_transform(graph, result.tour, *chosen, state);
      step.case_label = transform_label(graph, result.tour, next, *chosen, state);
    }
    step.surplus_pairs_removed = trim_surplus(next);
    result.tour = std::move(next);
    step.length_after = tour_length(graph, result.tour);
    step.valid_after = is_tour_subgraph(graph, result.tour).valid;

    auto updated = connecting_potential(graph, result.tour);
    step.potential_decreased = updated < potential;
    potential = std::move(updated);
    result.steps.push_back(std::move(step));
  }
  return result;
}

std::string format_trace(const std::vector<ReductionStep> &steps) {
  std::ostringstream out;
  for (const auto &step : steps) {
    out << "step " << step.index << " case " << step.case_label << " aisle " << step.run.aisle
        << " rows " << step.run.low_row << "-" << step.run.high_row;
    if (step.state)
      out << " state (" << step.state->s_a << "," << step.state->s_b << ")"
          << (step.state->orientation.mirror_lr ? " mirrored" : "")
          << (step.state->orientation.swap_ab ? " swapped" : "");
    out << " length " << step.length_before << " -> " << step.length_after;
    if (step.surplus_pairs_removed > 0)
      out << " trimmed " << step.surplus_pairs_removed;
    if (!step.valid_after)
      out << " INVALID";
    if (!step.potential_decreased)
      out << " NO-PROGRESS";
    out << "\n";
  }
  return out.str();
}

} // namespace picker
