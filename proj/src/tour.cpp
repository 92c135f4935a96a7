#include "picker/tour.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "picker/errors.hpp"

namespace picker {

bool TourSubgraph::empty() const {
  return std::all_of(mult_.begin(), mult_.end(), [](int c) { return c == 0; });
}

TourSubgraph &TourSubgraph::operator+=(const TourSubgraph &other) {
  if (other.mult_.size() != mult_.size())
    throw InvalidArgument("tour subgraphs over different graphs");
  for (std::size_t e = 0; e < mult_.size(); ++e)
    mult_[e] += other.mult_[e];
  return *this;
}

std::string_view to_string(Condition condition) {
  switch (condition) {
  case Condition::ItemsCovered:
    return "items-covered";
  case Condition::Connected:
    return "connected";
  case Condition::EvenDegree:
    return "even-degree";
  }
  return "?";
}

namespace {

void check_size(const WarehouseGraph &graph, const TourSubgraph &tour) {
  if (tour.size() != graph.edge_count())
    throw InvalidArgument("tour subgraph does not match the graph's edge count");
}

class DisjointSets {
public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
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
  std::vector<int> parent_;
};

} // namespace

std::vector<int> vertex_degrees(const WarehouseGraph &graph, const TourSubgraph &tour) {
  check_size(graph, tour);
  std::vector<int> degree(graph.vertex_count(), 0);
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (tour[e] < 0)
      throw InvalidArgument("negative multiplicity on edge " + std::to_string(e));
    degree[graph.edge(e).u] += tour[e];
    degree[graph.edge(e).v] += tour[e];
  }
  return degree;
}

ValidityReport is_tour_subgraph(const WarehouseGraph &graph, const TourSubgraph &tour) {
  const auto degree = vertex_degrees(graph, tour);
  ValidityReport report;

  const bool has_items = !graph.instance().items.empty();
  const bool has_edges = !tour.empty();
  if ((has_items || has_edges) && degree[graph.depot()] == 0)
    report.failures.push_back({Condition::ItemsCovered, graph.depot()});
  for (VertexId v : graph.item_vertices())
    if (degree[v] == 0)
      report.failures.push_back({Condition::ItemsCovered, v});

  DisjointSets sets(graph.vertex_count());
  for (EdgeId e = 0; e < graph.edge_count(); ++e)
    if (tour[e] > 0)
      sets.unite(graph.edge(e).u, graph.edge(e).v);
  // Components are reported relative to the first vertex of nonzero degree.
  int root = -1;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (degree[v] == 0)
      continue;
    if (root < 0)
      root = sets.find(v);
    else if (sets.find(v) != root && sets.find(v) == v)
      report.failures.push_back({Condition::Connected, v});
  }

  for (VertexId v = 0; v < graph.vertex_count(); ++v)
    if (degree[v] % 2 != 0)
      report.failures.push_back({Condition::EvenDegree, v});

  report.valid = report.failures.empty();
  return report;
}

Length tour_length(const WarehouseGraph &graph, const TourSubgraph &tour) {
  check_size(graph, tour);
  Length total = 0;
  for (EdgeId e = 0; e < graph.edge_count(); ++e)
    total += static_cast<Length>(tour[e]) * graph.edge(e).length;
  return total;
}

Walk extract_walk(const WarehouseGraph &graph, const TourSubgraph &tour) {
  const auto report = is_tour_subgraph(graph, tour);
  if (!report.valid)
    throw InvalidArgument("extract_walk: not a tour subgraph (" +
                          std::string(to_string(report.failures.front().condition)) +
                          " fails at vertex " + std::to_string(report.failures.front().witness) + ")");
  Walk walk;
  walk.length = tour_length(graph, tour);
  if (tour.empty())
    return walk;

  std::vector<int> remaining = tour.multiplicities();
  std::vector<std::size_t> cursor(graph.vertex_count(), 0);
  std::vector<VertexId> stack{graph.depot()};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    const auto adjacent = graph.adjacency(v);
    std::size_t &c = cursor[v];
    while (c < adjacent.size() && remaining[adjacent[c].second] == 0)
      ++c;
    if (c == adjacent.size()) {
      walk.vertices.push_back(v);
      stack.pop_back();
    } else {
      --remaining[adjacent[c].second];
      stack.push_back(adjacent[c].first);
    }
  }
  std::reverse(walk.vertices.begin(), walk.vertices.end());
  return walk;
}

std::string serialize_tour(const WarehouseGraph &graph, const TourSubgraph &tour) {
  check_size(graph, tour);
  nlohmann::ordered_json doc;
  doc["edges"] = nlohmann::ordered_json::array();
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    if (tour[e] == 0)
      continue;
    doc["edges"].push_back({{"from", graph.edge(e).u}, {"to", graph.edge(e).v}, {"mult", tour[e]}});
  }
  return doc.dump(2) + "\n";
}

TourSubgraph parse_tour(const WarehouseGraph &graph, std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("malformed tour document: ") + e.what());
  }
  if (!doc.is_object() || doc.size() != 1 || !doc.contains("edges") || !doc["edges"].is_array())
    throw ParseError("tour document must be {\"edges\": [...]}");

  TourSubgraph tour(graph);
  for (const auto &entry : doc["edges"]) {
    if (!entry.is_object() || entry.size() != 3 || !entry.contains("from") ||
        !entry.contains("to") || !entry.contains("mult"))
      throw ParseError("tour edge entries need exactly from, to, mult");
    if (!entry["from"].is_number_integer() || !entry["to"].is_number_integer() ||
        !entry["mult"].is_number_integer())
      throw ParseError("tour edge fields must be integers");
    const int mult = entry["mult"].get<int>();
    if (mult < 0)
      throw ParseError("negative multiplicity");
    const auto from = entry["from"].get<VertexId>();
    const auto to = entry["to"].get<VertexId>();
    const auto edge = graph.find_edge(from, to);
    if (!edge)
      throw ParseError("no edge between vertex ids " + std::to_string(from) + " and " +
                       std::to_string(to));
    tour[*edge] += mult;
  }
  return tour;
}

} // namespace picker
