#include "fixtures.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "picker/configs.hpp"
#include "picker/errors.hpp"

namespace picker::testing {

WarehouseInstance figure_instance() {
  WarehouseInstance w;
  w.aisles = 4;
  w.cross_aisles = 3;
  w.block_lengths = {12, 12};
  w.gap_widths = {6, 6, 6};
  w.depot = {1, 1};
  w.items = {{1, 1, 6}, {1, 2, 4}, {2, 1, 7}, {2, 2, 6},
             {3, 1, 8}, {3, 2, 8}, {4, 1, 4}, {4, 2, 7}};
  return w;
}

TourSubgraph figure_tour(const WarehouseGraph &g) {
  TourSubgraph t(g);
  auto whole_block = [&](int aisle, int block, int mult) {
    for (EdgeId e : g.block_segments(aisle, block))
      t[e] += mult;
  };
  // Aisle 1: doubled bottom block, out-and-back to the upper item.
  whole_block(1, 1, 2);
  t[g.block_segments(1, 2).front()] += 2;
  t[g.horizontal(1, 1)] += 2;
  // Loop around aisles 2 to 4.
  whole_block(2, 1, 1);
  whole_block(2, 2, 1);
  t[g.horizontal(2, 3)] += 1;
  t[g.horizontal(3, 3)] += 1;
  whole_block(4, 1, 1);
  whole_block(4, 2, 1);
  t[g.horizontal(3, 1)] += 1;
  t[g.horizontal(2, 1)] += 1;
  // Aisle 3: return from the top and from the bottom.
  t[g.block_segments(3, 2).back()] += 2;
  t[g.block_segments(3, 1).front()] += 2;
  return t;
}

WarehouseInstance small_instance(std::vector<ItemLocation> items) {
  WarehouseInstance w;
  w.aisles = 2;
  w.cross_aisles = 2;
  w.block_lengths = {10};
  w.gap_widths = {5};
  w.depot = {1, 1};
  w.items = std::move(items);
  return w;
}

std::vector<std::vector<Length>> all_pairs(const WarehouseGraph &g) {
  const Length inf = std::numeric_limits<Length>::max() / 4;
  const int v = g.vertex_count();
  std::vector<std::vector<Length>> d(v, std::vector<Length>(v, inf));
  for (int i = 0; i < v; ++i)
    d[i][i] = 0;
  for (const Edge &e : g.edges()) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.length);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.length);
  }
  for (int k = 0; k < v; ++k)
    for (int i = 0; i < v; ++i)
      for (int j = 0; j < v; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

Length permutation_optimum(const WarehouseInstance &instance) {
  const WarehouseGraph g(instance);
  const auto d = all_pairs(g);
  auto stops = g.item_vertices();
  const VertexId depot = g.depot();
  std::erase(stops, depot);
  if (stops.empty())
    return 0;
  std::sort(stops.begin(), stops.end());
  Length best = std::numeric_limits<Length>::max();
  do {
    Length length = d[depot][stops.front()] + d[stops.back()][depot];
    for (std::size_t i = 1; i < stops.size(); ++i)
      length += d[stops[i - 1]][stops[i]];
    best = std::min(best, length);
  } while (std::next_permutation(stops.begin(), stops.end()));
  return best;
}

bool reference_valid(const WarehouseGraph &g, const TourSubgraph &t) {
  std::vector<int> degree(g.vertex_count(), 0);
  std::vector<std::vector<VertexId>> next(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (t[e] == 0)
      continue;
    const Edge &edge = g.edge(e);
    degree[edge.u] += t[e];
    degree[edge.v] += t[e];
    next[edge.u].push_back(edge.v);
    next[edge.v].push_back(edge.u);
  }
  const bool has_items = !g.instance().items.empty();
  const bool any_edge = std::any_of(degree.begin(), degree.end(), [](int x) { return x > 0; });
  if (!has_items && !any_edge)
    return true;
  if (degree[g.depot()] == 0)
    return false;
  for (int i = 0; i < static_cast<int>(g.instance().items.size()); ++i)
    if (degree[g.item_vertex(i)] == 0)
      return false;
  for (int x : degree)
    if (x % 2 != 0)
      return false;

  std::vector<bool> reached(g.vertex_count(), false);
  std::deque<VertexId> queue{g.depot()};
  reached[g.depot()] = true;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : next[v])
      if (!reached[w]) {
        reached[w] = true;
        queue.push_back(w);
      }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (degree[v] > 0 && !reached[v])
      return false;
  return true;
}

bool walk_matches(const WarehouseGraph &g, const TourSubgraph &t, const Walk &walk) {
  if (t.empty())
    return walk.vertices.empty() && walk.length == 0;
  if (walk.vertices.size() < 2 || walk.vertices.front() != g.depot() ||
      walk.vertices.back() != g.depot())
    return false;
  std::vector<int> used(g.edge_count(), 0);
  Length length = 0;
  for (std::size_t i = 1; i < walk.vertices.size(); ++i) {
    const auto e = g.find_edge(walk.vertices[i - 1], walk.vertices[i]);
    if (!e)
      return false;
    ++used[*e];
    length += g.edge(*e).length;
  }
  return used == t.multiplicities() && length == walk.length;
}

namespace {

bool crossing(const std::vector<std::uint8_t> &labels) {
  const int n = static_cast<int>(labels.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (labels[a] && labels[b] && labels[a] == labels[c] && labels[b] == labels[d] &&
              labels[a] != labels[b])
            return true;
  return false;
}

} // namespace

std::vector<FrontierState> brute_force_states(int n) {
  std::vector<FrontierState> out;
  int class_vectors = 1;
  for (int j = 0; j < n; ++j)
    class_vectors *= 3;
  for (int code = 0; code < class_vectors; ++code) {
    FrontierState s;
    s.ports.resize(n);
    for (int j = 0, c = code; j < n; ++j, c /= 3)
      s.ports[j] = static_cast<PortClass>(c % 3);

    // Every label vector with values 1..n on the nonzero ports.
    std::vector<int> nonzero;
    for (int j = 0; j < n; ++j)
      if (s.ports[j] != PortClass::Zero)
        nonzero.push_back(j);
    std::vector<int> digits(nonzero.size(), 1);
    while (true) {
      s.components.assign(n, 0);
      for (std::size_t t = 0; t < nonzero.size(); ++t)
        s.components[nonzero[t]] = static_cast<std::uint8_t>(digits[t]);

      // Labels must be 1, 2, ... in order of first appearance.
      bool ordered = true;
      int seen = 0;
      for (int j : nonzero) {
        const int label = s.components[j];
        if (label > seen + 1)
          ordered = false;
        seen = std::max(seen, label);
      }
      bool even_odd_count = true;
      for (int label = 1; label <= seen; ++label) {
        int odd = 0;
        for (int j : nonzero)
          if (s.components[j] == label && s.ports[j] == PortClass::Odd)
            ++odd;
        even_odd_count = even_odd_count && odd % 2 == 0;
      }
      if (ordered && even_odd_count && !crossing(s.components))
        out.push_back(s);

      std::size_t t = 0;
      for (; t < digits.size(); ++t) {
        if (++digits[t] <= n)
          break;
        digits[t] = 1;
      }
      if (t == digits.size())
        break;
    }
  }
  FrontierState done;
  done.ports.assign(n, PortClass::Zero);
  done.components.assign(n, 0);
  done.closed = true;
  out.push_back(done);
  return out;
}

TourSubgraph random_config_subgraph(const WarehouseGraph &g, std::mt19937_64 &rng) {
  TourSubgraph t(g);
  for (int aisle = 1; aisle <= g.aisles(); ++aisle)
    for (int block = 1; block < g.cross_aisles(); ++block) {
      const auto menu = enumerate_vertical_configs(subaisle_of(g, aisle, block));
      const auto &effect = menu[rng() % menu.size()].second;
      const auto segments = g.block_segments(aisle, block);
      for (std::size_t s = 0; s < segments.size(); ++s)
        t[segments[s]] = effect.segments[s];
    }
  for (int gap = 1; gap < g.aisles(); ++gap)
    for (int row = 1; row <= g.cross_aisles(); ++row)
      t[g.horizontal(gap, row)] = static_cast<int>(rng() % 3);
  return t;
}

std::vector<TourSubgraph> reverse_shift_variants(const WarehouseGraph &g, const TourSubgraph &base) {
  std::vector<TourSubgraph> out;
  const int m = g.aisles();
  const int n = g.cross_aisles();
  for (int aisle = 1; aisle <= m; ++aisle)
    for (int side : {-1, 1}) {
      const int other = aisle + side;
      if (other < 1 || other > m)
        continue;
      const int gap = std::min(aisle, other);
      for (int low = 1; low < n; ++low)
        for (int high = low + 1; high <= n; ++high)
          for (bool b_low : {true, false}) {
            TourSubgraph t = base;
            for (int block = low; block < high; ++block) {
              for (EdgeId e : g.block_segments(aisle, block))
                t[e] += 1;
              for (EdgeId e : g.block_segments(other, block))
                t[e] -= 1;
            }
            t[g.horizontal(gap, b_low ? low : high)] += 1;
            t[g.horizontal(gap, b_low ? high : low)] -= 1;
            const auto &mult = t.multiplicities();
            if (std::any_of(mult.begin(), mult.end(), [](int x) { return x < 0 || x > 2; }))
              continue;
            if (!reference_valid(g, t))
              continue;
            // Keep only variants with a doubled stretch joining horizontals.
            bool joins = false;
            for (int a = 1; a <= m && !joins; ++a) {
              int start = 0;
              for (int block = 1; block < n; ++block) {
                const auto seg = g.block_segments(a, block);
                const bool doubled =
                    std::all_of(seg.begin(), seg.end(), [&](EdgeId e) { return t[e] == 2; });
                auto horizontal = [&](int row) {
                  int h = 0;
                  if (a > 1)
                    h += t[g.horizontal(a - 1, row)];
                  if (a < m)
                    h += t[g.horizontal(a, row)];
                  return h;
                };
                if (!doubled) {
                  start = 0;
                  continue;
                }
                if (start == 0)
                  start = block;
                if (horizontal(block + 1) > 0 || block + 1 == n) {
                  if (horizontal(start) > 0 && horizontal(block + 1) > 0)
                    joins = true;
                  start = horizontal(block + 1) > 0 ? block + 1 : 0;
                }
              }
            }
            if (joins && std::find(out.begin(), out.end(), t) == out.end())
              out.push_back(std::move(t));
          }
    }
  return out;
}

WarehouseInstance random_instance(std::mt19937_64 &rng, int max_aisles, int max_cross_aisles,
                                  int max_items, Length max_length) {
  GeneratorParams p;
  p.aisles = 1 + static_cast<int>(rng() % max_aisles);
  p.cross_aisles = 2 + static_cast<int>(rng() % (max_cross_aisles - 1));
  p.items = static_cast<int>(rng() % (max_items + 1));
  p.block_max = max_length;
  p.gap_max = max_length;
  // With every block drawn at length 1 there is nowhere to put an item.
  while (true) {
    try {
      return generate_instance(p, rng());
    } catch (const InvalidArgument &) {
    }
  }
}

} // namespace picker::testing
