#include "picker/model.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <random>

#include <json.hpp>

#include "picker/errors.hpp"

namespace picker {

namespace {

[[noreturn]] void fail(const std::string &field, const std::string &reason) {
  throw ParseError(field + ": " + reason);
}

} // namespace

void WarehouseInstance::validate() const {
  if (aisles < 1)
    fail("aisles", "must be at least 1");
  if (cross_aisles < 2)
    fail("cross_aisles", "must be at least 2");
  if (static_cast<int>(block_lengths.size()) != cross_aisles - 1)
    fail("block_lengths", "expected " + std::to_string(cross_aisles - 1) + " entries");
  if (static_cast<int>(gap_widths.size()) != aisles - 1)
    fail("gap_widths", "expected " + std::to_string(aisles - 1) + " entries");
  for (std::size_t j = 0; j < block_lengths.size(); ++j)
    if (block_lengths[j] <= 0)
      fail("block_lengths[" + std::to_string(j) + "]", "must be positive");
  for (std::size_t i = 0; i < gap_widths.size(); ++i)
    if (gap_widths[i] <= 0)
      fail("gap_widths[" + std::to_string(i) + "]", "must be positive");
  if (depot.aisle < 1 || depot.aisle > aisles)
    fail("depot.aisle", "out of range");
  if (depot.cross_aisle < 1 || depot.cross_aisle > cross_aisles)
    fail("depot.cross_aisle", "out of range");
  for (std::size_t p = 0; p < items.size(); ++p) {
    const auto &item = items[p];
    const std::string name = "items[" + std::to_string(p) + "]";
    if (item.aisle < 1 || item.aisle > aisles)
      fail(name + ".aisle", "out of range");
    if (item.block < 1 || item.block > cross_aisles - 1)
      fail(name + ".block", "out of range");
    if (item.offset <= 0 || item.offset >= block_length(item.block))
      fail(name + ".offset", "item on cross-aisle (offset must lie strictly inside the block)");
  }
}

WarehouseGraph::WarehouseGraph(const WarehouseInstance &instance)
    : instance_(instance) {
  instance_.validate();
  const int m = instance_.aisles;
  const int n = instance_.cross_aisles;

  // Distinct item points per (aisle, block), each with its labels.
  std::map<ItemLocation, std::vector<int>> points;
  for (int p = 0; p < static_cast<int>(instance_.items.size()); ++p)
    points[instance_.items[p]].push_back(p);

  std::vector<Length> base(n, 0);
  for (int j = 1; j < n; ++j)
    base[j] = base[j - 1] + instance_.block_length(j);

  intersection_.assign(static_cast<std::size_t>(m) * n, -1);
  item_vertex_.assign(instance_.items.size(), -1);
  block_edges_.resize(static_cast<std::size_t>(m) * (n - 1));

  for (int i = 1; i <= m; ++i) {
    std::vector<VertexId> column;
    for (int j = 1; j <= n; ++j) {
      Vertex v;
      v.kind = VertexKind::Intersection;
      v.aisle = i;
      v.row = j;
      v.height = base[j - 1];
      intersection_[(i - 1) * n + (j - 1)] = static_cast<VertexId>(vertices_.size());
      column.push_back(static_cast<VertexId>(vertices_.size()));
      vertices_.push_back(std::move(v));
      if (j == n)
        break;
      auto it = points.lower_bound(ItemLocation{i, j, 0});
      for (; it != points.end() && it->first.aisle == i && it->first.block == j; ++it) {
        Vertex item;
        item.kind = VertexKind::Item;
        item.aisle = i;
        item.row = j;
        item.offset = it->first.offset;
        item.height = base[j - 1] + it->first.offset;
        item.labels = it->second;
        for (int label : it->second)
          item_vertex_[label] = static_cast<VertexId>(vertices_.size());
        column.push_back(static_cast<VertexId>(vertices_.size()));
        vertices_.push_back(std::move(item));
      }
    }
    for (std::size_t t = 0; t + 1 < column.size(); ++t) {
      const Vertex &lo = vertices_[column[t]];
      const Vertex &hi = vertices_[column[t + 1]];
      const int block = lo.row;
      Edge e;
      e.u = column[t];
      e.v = column[t + 1];
      e.length = hi.height - lo.height;
      e.kind = EdgeKind::Vertical;
      e.major = i;
      e.minor = block;
      block_edges_[(i - 1) * (n - 1) + (block - 1)].push_back(static_cast<EdgeId>(edges_.size()));
      edges_.push_back(e);
    }
  }

  horizontal_.assign(static_cast<std::size_t>(std::max(0, m - 1)) * n, -1);
  for (int gap = 1; gap < m; ++gap) {
    for (int j = 1; j <= n; ++j) {
      Edge e;
      e.u = intersection(gap, j);
      e.v = intersection(gap + 1, j);
      e.length = instance_.gap_width(gap);
      e.kind = EdgeKind::Horizontal;
      e.major = gap;
      e.minor = j;
      horizontal_[(gap - 1) * n + (j - 1)] = static_cast<EdgeId>(edges_.size());
      edges_.push_back(e);
    }
  }

  adjacency_.resize(vertices_.size());
  for (EdgeId id = 0; id < edge_count(); ++id) {
    adjacency_[edges_[id].u].emplace_back(edges_[id].v, id);
    adjacency_[edges_[id].v].emplace_back(edges_[id].u, id);
  }
  for (auto &list : adjacency_)
    std::sort(list.begin(), list.end());
}

VertexId WarehouseGraph::intersection(int aisle, int cross_aisle) const {
  if (aisle < 1 || aisle > aisles() || cross_aisle < 1 || cross_aisle > cross_aisles())
    throw InvalidArgument("intersection out of range");
  return intersection_[(aisle - 1) * cross_aisles() + (cross_aisle - 1)];
}

std::vector<VertexId> WarehouseGraph::item_vertices() const {
  std::vector<VertexId> out(item_vertex_.begin(), item_vertex_.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::span<const EdgeId> WarehouseGraph::block_segments(int aisle, int block) const {
  if (aisle < 1 || aisle > aisles() || block < 1 || block >= cross_aisles())
    throw InvalidArgument("block out of range");
  return block_edges_[(aisle - 1) * (cross_aisles() - 1) + (block - 1)];
}

EdgeId WarehouseGraph::horizontal(int gap, int cross_aisle) const {
  if (gap < 1 || gap >= aisles() || cross_aisle < 1 || cross_aisle > cross_aisles())
    throw InvalidArgument("horizontal edge out of range");
  return horizontal_[(gap - 1) * cross_aisles() + (cross_aisle - 1)];
}

std::optional<EdgeId> WarehouseGraph::find_edge(VertexId a, VertexId b) const {
  if (a < 0 || a >= vertex_count() || b < 0 || b >= vertex_count())
    return std::nullopt;
  for (auto [nb, id] : adjacency_[a])
    if (nb == b)
      return id;
  return std::nullopt;
}

DistanceMatrix shortest_paths(const WarehouseGraph &graph,
                              std::span<const VertexId> terminals) {
  for (VertexId t : terminals)
    if (t < 0 || t >= graph.vertex_count())
      throw InvalidArgument("unknown terminal vertex " + std::to_string(t));

  DistanceMatrix out;
  out.terminals.assign(terminals.begin(), terminals.end());
  const std::size_t k = terminals.size();
  out.values.assign(k * k, 0);

  constexpr Length inf = std::numeric_limits<Length>::max();
  using Item = std::pair<Length, VertexId>;
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<Length> dist(graph.vertex_count(), inf);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[terminals[a]] = 0;
    queue.emplace(0, terminals[a]);
    while (!queue.empty()) {
      auto [d, v] = queue.top();
      queue.pop();
      if (d != dist[v])
        continue;
      for (auto [w, e] : graph.adjacency(v)) {
        const Length nd = d + graph.edge(e).length;
        if (nd < dist[w]) {
          dist[w] = nd;
          queue.emplace(nd, w);
        }
      }
    }
    for (std::size_t b = 0; b < k; ++b)
      out.values[a * k + b] = dist[terminals[b]];
  }
  return out;
}

namespace {

using nlohmann::json;

void require_keys(const json &object, std::initializer_list<std::string_view> allowed,
                  const std::string &where) {
  if (!object.is_object())
    fail(where, "expected an object");
  for (const auto &[key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      fail(where, "unknown key '" + key + "'");
  }
  for (auto key : allowed)
    if (!object.contains(std::string(key)))
      fail(where, "missing key '" + std::string(key) + "'");
}

template <typename T> T get_integer(const json &object, const char *key, const std::string &where) {
  const json &value = object.at(key);
  if (!value.is_number_integer())
    fail(where + "." + key, "expected an integer");
  return value.get<T>();
}

std::vector<Length> get_lengths(const json &object, const char *key) {
  const json &value = object.at(key);
  if (!value.is_array())
    fail(key, "expected an array");
  std::vector<Length> out;
  for (const json &entry : value) {
    if (!entry.is_number_integer())
      fail(key, "expected integers");
    out.push_back(entry.get<Length>());
  }
  return out;
}

} // namespace

WarehouseInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  require_keys(doc, {"aisles", "cross_aisles", "block_lengths", "gap_widths", "depot", "items"},
               "instance");

  WarehouseInstance instance;
  instance.aisles = get_integer<int>(doc, "aisles", "instance");
  instance.cross_aisles = get_integer<int>(doc, "cross_aisles", "instance");
  instance.block_lengths = get_lengths(doc, "block_lengths");
  instance.gap_widths = get_lengths(doc, "gap_widths");

  const json &depot = doc.at("depot");
  require_keys(depot, {"aisle", "cross_aisle"}, "depot");
  instance.depot.aisle = get_integer<int>(depot, "aisle", "depot");
  instance.depot.cross_aisle = get_integer<int>(depot, "cross_aisle", "depot");

  const json &items = doc.at("items");
  if (!items.is_array())
    fail("items", "expected an array");
  for (std::size_t p = 0; p < items.size(); ++p) {
    const std::string where = "items[" + std::to_string(p) + "]";
    require_keys(items[p], {"aisle", "block", "offset"}, where);
    instance.items.push_back(ItemLocation{get_integer<int>(items[p], "aisle", where),
                                          get_integer<int>(items[p], "block", where),
                                          get_integer<Length>(items[p], "offset", where)});
  }
  instance.validate();
  return instance;
}

std::string serialize_instance(const WarehouseInstance &instance) {
  // ordered_json keeps the documented key order stable
  nlohmann::ordered_json doc;
  doc["aisles"] = instance.aisles;
  doc["cross_aisles"] = instance.cross_aisles;
  doc["block_lengths"] = instance.block_lengths;
  doc["gap_widths"] = instance.gap_widths;
  doc["depot"] = {{"aisle", instance.depot.aisle}, {"cross_aisle", instance.depot.cross_aisle}};
  doc["items"] = nlohmann::ordered_json::array();
  for (const auto &item : instance.items)
    doc["items"].push_back({{"aisle", item.aisle}, {"block", item.block}, {"offset", item.offset}});
  return doc.dump(2) + "\n";
}

WarehouseInstance generate_instance(const GeneratorParams &params, std::uint64_t seed) {
  if (params.aisles < 1 || params.cross_aisles < 2 || params.items < 0)
    throw InvalidArgument("generator: need aisles >= 1, cross_aisles >= 2, items >= 0");
  if (params.block_min < 1 || params.block_max < params.block_min)
    throw InvalidArgument("generator: empty or non-positive block length range");
  if (params.gap_min < 1 || params.gap_max < params.gap_min)
    throw InvalidArgument("generator: empty or non-positive gap width range");
  if (params.items > 0 && params.block_max < 2)
    throw InvalidArgument("generator: block length 1 admits no interior item offset");

  std::mt19937_64 rng(seed);
  auto draw = [&rng](Length lo, Length hi) {
    return std::uniform_int_distribution<Length>(lo, hi)(rng);
  };

  WarehouseInstance instance;
  instance.aisles = params.aisles;
  instance.cross_aisles = params.cross_aisles;
  for (int j = 1; j < params.cross_aisles; ++j)
    instance.block_lengths.push_back(draw(params.block_min, params.block_max));
  for (int i = 1; i < params.aisles; ++i)
    instance.gap_widths.push_back(draw(params.gap_min, params.gap_max));
  instance.depot.aisle = static_cast<int>(draw(1, params.aisles));
  instance.depot.cross_aisle = static_cast<int>(draw(1, params.cross_aisles));

  if (params.items > 0) {
    std::vector<int> usable;
    for (int j = 1; j < params.cross_aisles; ++j)
      if (instance.block_length(j) >= 2)
        usable.push_back(j);
    if (usable.empty())
      throw InvalidArgument("generator: every drawn block has length 1; no interior offsets");
    for (int p = 0; p < params.items; ++p) {
      ItemLocation item;
      item.aisle = static_cast<int>(draw(1, params.aisles));
      item.block = usable[draw(0, static_cast<Length>(usable.size()) - 1)];
      item.offset = draw(1, instance.block_length(item.block) - 1);
      instance.items.push_back(item);
    }
  }
  instance.validate();
  return instance;
}

} // namespace picker
