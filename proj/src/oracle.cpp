#include "picker/oracle.hpp"

#include <algorithm>
#include <limits>

#include "picker/configs.hpp"
#include "picker/errors.hpp"

namespace picker {

namespace {
constexpr Length kInf = std::numeric_limits<Length>::max() / 4;
}

HeldKarpTable::HeldKarpTable(const DistanceMatrix &distances)
    : distances_(distances), targets_(static_cast<int>(distances.size()) - 1) {
  if (targets_ < 0)
    throw InvalidArgument("Held-Karp needs at least the start terminal");
  if (targets_ > kMaxHeldKarpItems)
    throw CapExceeded("Held-Karp limited to " + std::to_string(kMaxHeldKarpItems) + " targets");
  if (targets_ == 0)
    return;

  // Target t (0-based in the mask) is terminal t + 1.
  const std::uint32_t full = (std::uint32_t{1} << targets_) - 1;
  table_.assign(static_cast<std::size_t>(full + 1) * targets_, kInf);
  for (int t = 0; t < targets_; ++t)
    table_[index(std::uint32_t{1} << t, t)] = distances_.at(0, t + 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (int last = 0; last < targets_; ++last) {
      if (!(mask & (std::uint32_t{1} << last)))
        continue;
      const Length here = table_[index(mask, last)];
      if (here >= kInf)
        continue;
      for (int next = 0; next < targets_; ++next) {
        if (mask & (std::uint32_t{1} << next))
          continue;
        const std::uint32_t grown = mask | (std::uint32_t{1} << next);
        Length &slot = table_[index(grown, next)];
        slot = std::min(slot, here + distances_.at(last + 1, next + 1));
      }
    }
  }
  best_ = kInf;
  for (int last = 0; last < targets_; ++last) {
    const Length closed = table_[index(full, last)] + distances_.at(last + 1, 0);
    if (closed < best_) {
      best_ = closed;
      best_last_ = last;
    }
  }
}

std::vector<int> HeldKarpTable::order() const {
  std::vector<int> out;
  if (targets_ == 0)
    return out;
  std::uint32_t mask = (std::uint32_t{1} << targets_) - 1;
  int last = best_last_;
  while (true) {
    out.push_back(last + 1);
    const std::uint32_t rest = mask & ~(std::uint32_t{1} << last);
    if (rest == 0)
      break;
    const Length here = value(mask, last);
    int previous = -1;
    for (int p = 0; p < targets_; ++p)
      if ((rest & (std::uint32_t{1} << p)) &&
          value(rest, p) + distances_.at(p + 1, last + 1) == here) {
        previous = p;
        break;
      }
    mask = rest;
    last = previous;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

OracleResult solve_held_karp(const WarehouseInstance &instance) {
  if (static_cast<int>(instance.items.size()) > kMaxHeldKarpItems)
    throw CapExceeded("Held-Karp oracle limited to " + std::to_string(kMaxHeldKarpItems) +
                      " items, got " + std::to_string(instance.items.size()));
  const WarehouseGraph graph(instance);
  OracleResult result;
  if (instance.items.empty())
    return result;

  // Co-located items share a vertex; the depot is never an item vertex.
  std::vector<VertexId> terminals{graph.depot()};
  for (VertexId v : graph.item_vertices())
    terminals.push_back(v);
  const HeldKarpTable table(shortest_paths(graph, terminals));
  result.length = table.tour_length();
  result.order.push_back(terminals[0]);
  for (int t : table.order())
    result.order.push_back(terminals[t]);
  result.order.push_back(terminals[0]);
  return result;
}

namespace {

class BruteForce {
public:
  BruteForce(const WarehouseGraph &graph) : graph_(graph), current_(graph) {
    const int m = graph.aisles();
    const int n = graph.cross_aisles();
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j < n; ++j)
        blocks_.push_back({i, j, enumerate_vertical_configs(subaisle_of(graph, i, j))});
    for (int gap = 1; gap < m; ++gap)
      for (int j = 1; j <= n; ++j)
        horizontals_.push_back(graph.horizontal(gap, j));
    degree_.assign(graph.vertex_count(), 0);
  }

  OracleResult run() {
    choose_block(0, 0);
    OracleResult result;
    result.length = best_length_;
    result.subgraph = best_;
    return result;
  }

private:
  struct Block {
    int aisle;
    int block;
    std::vector<std::pair<VerticalConfig, ConfigEffect>> options;
  };

  void add_edge(EdgeId e, int mult) {
    current_[e] += mult;
    degree_[graph_.edge(e).u] += mult;
    degree_[graph_.edge(e).v] += mult;
  }

  bool aisle_even(int aisle) const {
    for (int j = 1; j <= graph_.cross_aisles(); ++j)
      if (degree_[graph_.intersection(aisle, j)] % 2 != 0)
        return false;
    return true;
  }

  void choose_block(std::size_t b, Length length) {
    if (b == blocks_.size()) {
      if (graph_.aisles() == 1 && !aisle_even(1))
        return;
      choose_horizontal(0, length);
      return;
    }
    const auto segments = graph_.block_segments(blocks_[b].aisle, blocks_[b].block);
    for (const auto &[config, effect] : blocks_[b].options) {
      for (std::size_t s = 0; s < segments.size(); ++s)
        add_edge(segments[s], effect.segments[s]);
      choose_block(b + 1, length + effect.length);
      for (std::size_t s = 0; s < segments.size(); ++s)
        add_edge(segments[s], -effect.segments[s]);
    }
  }

  void choose_horizontal(std::size_t h, Length length) {
    if (h == horizontals_.size()) {
      if (length >= best_length_)
        return;
      if (is_tour_subgraph(graph_, current_).valid) {
        best_length_ = length;
        best_ = current_;
      }
      return;
    }
    const Edge &edge = graph_.edge(horizontals_[h]);
    const bool closes_gap = edge.minor == graph_.cross_aisles();
    for (int mult = 0; mult <= 2; ++mult) {
      add_edge(horizontals_[h], mult);
      // Once a gap is fully chosen the aisle on its left has its final degrees.
      bool ok = !closes_gap || aisle_even(edge.major);
      if (ok && closes_gap && edge.major + 1 == graph_.aisles())
        ok = aisle_even(edge.major + 1);
      if (ok)
        choose_horizontal(h + 1, length + mult * edge.length);
      add_edge(horizontals_[h], -mult);
    }
  }

  const WarehouseGraph &graph_;
  std::vector<Block> blocks_;
  std::vector<EdgeId> horizontals_;
  TourSubgraph current_;
  std::vector<int> degree_;
  Length best_length_ = kInf;
  TourSubgraph best_;
};

} // namespace

OracleResult brute_force_subgraphs(const WarehouseInstance &instance, const BruteForceCaps &caps) {
  const int blocks = instance.aisles * (instance.cross_aisles - 1);
  const int horizontals = (instance.aisles - 1) * instance.cross_aisles;
  if (blocks > caps.max_blocks || horizontals > caps.max_horizontal_segments)
    throw CapExceeded("brute force limited to " + std::to_string(caps.max_blocks) + " blocks and " +
                      std::to_string(caps.max_horizontal_segments) + " horizontal segments");
  const WarehouseGraph graph(instance);
  OracleResult result;
  if (instance.items.empty()) {
    result.subgraph = TourSubgraph(graph);
    return result;
  }
  result = BruteForce(graph).run();
  if (!result.subgraph)
    throw std::logic_error("brute force found no tour subgraph");
  return result;
}

} // namespace picker
