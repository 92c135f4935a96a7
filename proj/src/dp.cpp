#include "picker/dp.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

#include "picker/configs.hpp"
#include "picker/errors.hpp"

namespace picker {

namespace {

constexpr int kPortBits = 5;
constexpr std::uint64_t kClosedBit = std::uint64_t{1} << 63;

} // namespace

std::uint64_t pack(const FrontierState &state) {
  std::uint64_t key = state.closed ? kClosedBit : 0;
  for (std::size_t j = 0; j < state.ports.size(); ++j) {
    const std::uint64_t port = static_cast<std::uint64_t>(state.ports[j]) |
                               (static_cast<std::uint64_t>(state.components[j]) << 2);
    key |= port << (kPortBits * j);
  }
  return key;
}

FrontierState unpack(std::uint64_t key, int cross_aisles) {
  FrontierState state;
  state.closed = (key & kClosedBit) != 0;
  for (int j = 0; j < cross_aisles; ++j) {
    const auto port = (key >> (kPortBits * j)) & 0x1f;
    state.ports.push_back(static_cast<PortClass>(port & 0x3));
    state.components.push_back(static_cast<std::uint8_t>(port >> 2));
  }
  return state;
}

std::string to_string(const FrontierState &state) {
  std::string out = "[";
  for (std::size_t j = 0; j < state.ports.size(); ++j) {
    if (j > 0)
      out += ' ';
    out += "0OE"[static_cast<int>(state.ports[j])];
    if (state.components[j] > 0)
      out += std::to_string(state.components[j]);
  }
  out += state.closed ? "] closed" : "]";
  return out;
}

bool is_valid_state(const FrontierState &state) {
  const std::size_t n = state.ports.size();
  if (state.components.size() != n)
    return false;
  int next_label = 1;
  std::array<int, 8> odd_ports{};
  for (std::size_t j = 0; j < n; ++j) {
    const bool used = state.ports[j] != PortClass::Zero;
    const int label = state.components[j];
    if (used != (label > 0))
      return false;
    if (!used)
      continue;
    if (label > next_label || label >= static_cast<int>(odd_ports.size()))
      return false;
    if (label == next_label)
      ++next_label;
    if (state.ports[j] == PortClass::Odd)
      ++odd_ports[label];
  }
  if (state.closed && next_label > 1)
    return false;
  for (int count : odd_ports)
    if (count % 2 != 0)
      return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const int x = state.components[a];
          const int y = state.components[b];
          if (x > 0 && y > 0 && x != y && state.components[c] == x && state.components[d] == y)
            return false;
        }
  return true;
}

std::vector<FrontierState> enumerate_states(int cross_aisles) {
  if (cross_aisles < 2 || cross_aisles > kMaxDpCrossAisles)
    throw InvalidArgument("enumerate_states: cross-aisle count out of range");
  const int n = cross_aisles;
  std::vector<FrontierState> out;

  int classes = 1;
  for (int j = 0; j < n; ++j)
    classes *= 3;
  for (int code = 0; code < classes; ++code) {
    FrontierState base;
    std::vector<int> used;
    for (int j = 0, c = code; j < n; ++j, c /= 3) {
      base.ports.push_back(static_cast<PortClass>(c % 3));
      if (c % 3 != 0)
        used.push_back(j);
    }
    base.components.assign(n, 0);
    // Restricted growth strings over the used ports give every set partition once.
    std::vector<std::uint8_t> labels(used.size(), 1);
    while (true) {
      FrontierState state = base;
      for (std::size_t t = 0; t < used.size(); ++t)
        state.components[used[t]] = labels[t];
      if (is_valid_state(state))
        out.push_back(state);
      if (used.empty()) {
        state.closed = true;
        out.push_back(state);
        break;
      }
      // next restricted growth string
      int t = static_cast<int>(used.size()) - 1;
      for (; t > 0; --t) {
        const int prefix_max = *std::max_element(labels.begin(), labels.begin() + t);
        if (labels[t] <= prefix_max) {
          ++labels[t];
          std::fill(labels.begin() + t + 1, labels.end(), 1);
          break;
        }
      }
      if (t == 0)
        break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FrontierState &a, const FrontierState &b) { return pack(a) < pack(b); });
  return out;
}

namespace {

// One choice of vertical configuration for every block of an aisle.
struct AisleCombo {
  std::vector<std::uint8_t> choice; // index into the block's option list
  std::array<int, kMaxDpCrossAisles> degree{};   // vertical degree per row
  std::array<bool, kMaxDpCrossAisles> link{};    // block j joins rows j, j+1
  std::array<bool, kMaxDpCrossAisles> doubled{}; // block j is Double
  Length length = 0;
};

struct Entry {
  Length cost = 0;
  std::uint64_t pred = 0;
  int combo = 0;
  std::array<std::uint8_t, kMaxDpCrossAisles> right{};
};

class UnionFind {
public:
  void reset(int n) {
    for (int x = 0; x < n; ++x)
      parent_[x] = x;
  }
  int find(int x) {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::array<int, 2 * kMaxDpCrossAisles + 2> parent_{};
};

std::vector<AisleCombo> build_combos(const std::vector<std::vector<std::pair<VerticalConfig, ConfigEffect>>> &options,
                                     int n) {
  std::vector<AisleCombo> combos;
  const int blocks = n - 1;
  std::vector<std::uint8_t> odometer(blocks, 0);
  while (true) {
    AisleCombo combo;
    combo.choice = odometer;
    for (int b = 0; b < blocks; ++b) {
      const auto &[config, effect] = options[b][odometer[b]];
      combo.degree[b] += effect.bottom_degree;
      combo.degree[b + 1] += effect.top_degree;
      combo.link[b] = effect.connects_ends;
      combo.doubled[b] = config == VerticalConfig::Double;
      combo.length += effect.length;
    }
    combos.push_back(std::move(combo));
    int b = blocks - 1;
    for (; b >= 0; --b) {
      if (++odometer[b] < options[b].size())
        break;
      odometer[b] = 0;
    }
    if (b < 0)
      break;
  }
  return combos;
}

// True when some maximal V-run of the aisle has horizontal edges at both ends.
bool has_connecting_run(const AisleCombo &combo, const std::array<int, kMaxDpCrossAisles> &horizontal,
                        int n) {
  int bottom = -1;
  for (int b = 0; b < n - 1; ++b) {
    if (!combo.doubled[b]) {
      bottom = -1;
      continue;
    }
    if (bottom < 0)
      bottom = b;
    const int top = b + 1;
    const bool ends_here = top == n - 1 || !combo.doubled[top] || horizontal[top] > 0;
    if (!ends_here)
      continue;
    if (horizontal[bottom] > 0 && horizontal[top] > 0)
      return true;
    bottom = top < n - 1 && combo.doubled[top] ? top : -1;
  }
  return false;
}

} // namespace

OptimalTour solve_dp(const WarehouseInstance &instance, const DpOptions &options) {
  instance.validate();
  const int m = instance.aisles;
  const int n = instance.cross_aisles;
  if (n > kMaxDpCrossAisles)
    throw CapExceeded("solve_dp supports at most " + std::to_string(kMaxDpCrossAisles) +
                      " cross-aisles, got " + std::to_string(n));

  const WarehouseGraph graph(instance);
  OptimalTour result;
  result.subgraph = TourSubgraph(graph);
  if (instance.items.empty())
    return result;

  // Aisle index of the right-most item; the tour may close after it.
  int last_item_aisle = 0;
  for (const auto &item : instance.items)
    last_item_aisle = std::max(last_item_aisle, item.aisle);
  const int depot_aisle = instance.depot.aisle;
  const int depot_row = instance.depot.cross_aisle - 1;

  using Layer = std::unordered_map<std::uint64_t, Entry>;
  std::vector<Layer> layers(m + 1);
  std::vector<std::vector<AisleCombo>> aisle_combos(m + 1);
  std::vector<std::vector<std::vector<std::pair<VerticalConfig, ConfigEffect>>>> aisle_options(m + 1);

  FrontierState start;
  start.ports.assign(n, PortClass::Zero);
  start.components.assign(n, 0);
  layers[0][pack(start)] = Entry{};

  UnionFind sets;
  for (int aisle = 1; aisle <= m; ++aisle) {
    auto &menu = aisle_options[aisle];
    bool aisle_has_items = false;
    for (int block = 1; block < n; ++block) {
      const Subaisle subaisle = subaisle_of(graph, aisle, block);
      aisle_has_items = aisle_has_items || !subaisle.offsets.empty();
      auto list = enumerate_vertical_configs(subaisle);
      if (options.exclude_double)
        std::erase_if(list, [](const auto &o) { return o.first == VerticalConfig::Double; });
      menu.push_back(std::move(list));
    }
    aisle_combos[aisle] = build_combos(menu, n);
    const auto &combos = aisle_combos[aisle];
    // Index of the all-VI combination, the only choice once the tour is closed.
    int idle_combo = -1;
    for (int c = 0; c < static_cast<int>(combos.size()); ++c)
      if (combos[c].length == 0 && std::all_of(combos[c].degree.begin(), combos[c].degree.end(),
                                               [](int d) { return d == 0; })) {
        idle_combo = c;
        break;
      }

    const Length gap = aisle < m ? instance.gap_width(aisle) : 0;
    const bool last = aisle == m;

    std::vector<std::uint64_t> keys;
    keys.reserve(layers[aisle - 1].size());
    for (const auto &[key, entry] : layers[aisle - 1])
      keys.push_back(key);
    std::sort(keys.begin(), keys.end());

    Layer &next = layers[aisle];
    auto relax = [&next](std::uint64_t key, const Entry &candidate) {
      auto [it, inserted] = next.try_emplace(key, candidate);
      if (!inserted && candidate.cost < it->second.cost)
        it->second = candidate;
    };

    for (std::uint64_t key : keys) {
      const FrontierState state = unpack(key, n);
      const Length base_cost = layers[aisle - 1].at(key).cost;
      ++result.stats.states_expanded;

      if (state.closed) {
        if (!aisle_has_items && idle_combo >= 0) {
          ++result.stats.transitions;
          relax(key, Entry{base_cost, key, idle_combo, {}});
        }
        continue;
      }

      std::array<int, kMaxDpCrossAisles> left{};
      for (int j = 0; j < n; ++j)
        left[j] = static_cast<int>(state.ports[j]);

      for (int c = 0; c < static_cast<int>(combos.size()); ++c) {
        const AisleCombo &combo = combos[c];
        // Rows whose right multiplicity is free (0 or 2) versus forced to 1.
        std::array<int, kMaxDpCrossAisles> forced{};
        std::vector<int> free_rows;
        bool feasible = true;
        for (int j = 0; j < n; ++j) {
          if ((left[j] + combo.degree[j]) % 2 != 0) {
            forced[j] = 1;
            if (last)
              feasible = false;
          } else if (!last) {
            free_rows.push_back(j);
          }
        }
        if (!feasible)
          continue;

        const int free_count = static_cast<int>(free_rows.size());
        for (int mask = 0; mask < (1 << free_count); ++mask) {
          std::array<int, kMaxDpCrossAisles> right = forced;
          // row order: first free row is the most significant choice
          for (int t = 0; t < free_count; ++t)
            if (mask & (1 << (free_count - 1 - t)))
              right[free_rows[t]] = 2;

          std::array<int, kMaxDpCrossAisles> degree{};
          std::array<int, kMaxDpCrossAisles> horizontal{};
          for (int j = 0; j < n; ++j) {
            degree[j] = left[j] + combo.degree[j] + right[j];
            horizontal[j] = left[j] + right[j];
          }
          if (aisle == depot_aisle && degree[depot_row] == 0)
            continue;
          if (options.prune_connecting && has_connecting_run(combo, horizontal, n))
            continue;
          ++result.stats.transitions;

          // Nodes 0..n-1 are the aisle's intersections, n + label - 1 the left components.
          sets.reset(2 * n);
          for (int j = 0; j < n; ++j)
            if (left[j] > 0)
              sets.unite(j, n + state.components[j] - 1);
          for (int b = 0; b < n - 1; ++b)
            if (combo.link[b])
              sets.unite(b, b + 1);

          std::array<bool, 2 * kMaxDpCrossAisles> root_has_port{};
          std::array<bool, 2 * kMaxDpCrossAisles> root_seen{};
          int components = 0;
          bool any_port = false;
          for (int j = 0; j < n; ++j) {
            if (degree[j] == 0)
              continue;
            const int r = sets.find(j);
            if (!root_seen[r]) {
              root_seen[r] = true;
              ++components;
            }
            if (right[j] > 0) {
              root_has_port[r] = true;
              any_port = true;
            }
          }

          FrontierState out;
          out.ports.assign(n, PortClass::Zero);
          out.components.assign(n, 0);
          bool stranded = false;
          for (int r = 0; r < 2 * n; ++r)
            if (root_seen[r] && !root_has_port[r])
              stranded = true;

          if (components == 0) {
            // Nothing built yet and nothing touched in this aisle.
          } else if (stranded) {
            // A component without ports must be the finished tour.
            if (components != 1 || any_port || last_item_aisle > aisle || depot_aisle > aisle)
              continue;
            out.closed = true;
          } else {
            std::array<int, 2 * kMaxDpCrossAisles> relabel{};
            int next_label = 1;
            for (int j = 0; j < n; ++j) {
              if (right[j] == 0)
                continue;
              const int r = sets.find(j);
              if (relabel[r] == 0)
                relabel[r] = next_label++;
              out.ports[j] = static_cast<PortClass>(right[j]);
              out.components[j] = static_cast<std::uint8_t>(relabel[r]);
            }
          }

          Entry candidate;
          candidate.cost = base_cost + combo.length;
          for (int j = 0; j < n; ++j) {
            candidate.cost += right[j] * gap;
            candidate.right[j] = static_cast<std::uint8_t>(right[j]);
          }
          candidate.pred = key;
          candidate.combo = c;
          relax(pack(out), candidate);
        }
      }
    }
  }

  FrontierState accept;
  accept.ports.assign(n, PortClass::Zero);
  accept.components.assign(n, 0);
  accept.closed = true;
  auto found = layers[m].find(pack(accept));
  if (found == layers[m].end()) {
    if (options.exclude_double)
      throw InvalidArgument("solve_dp: no tour exists without doubled aisles");
    throw std::logic_error("solve_dp: no feasible tour found");
  }
  result.length = found->second.cost;

  std::uint64_t key = pack(accept);
  for (int aisle = m; aisle >= 1; --aisle) {
    const Entry &entry = layers[aisle].at(key);
    const AisleCombo &combo = aisle_combos[aisle][entry.combo];
    for (int block = 1; block < n; ++block) {
      const auto &effect = aisle_options[aisle][block - 1][combo.choice[block - 1]].second;
      const auto segments = graph.block_segments(aisle, block);
      for (std::size_t s = 0; s < segments.size(); ++s)
        result.subgraph[segments[s]] = effect.segments[s];
    }
    if (aisle < m)
      for (int j = 1; j <= n; ++j)
        result.subgraph[graph.horizontal(aisle, j)] = entry.right[j - 1];
    key = entry.pred;
  }
  return result;
}

} // namespace picker
