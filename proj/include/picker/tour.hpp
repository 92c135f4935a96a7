#pragma once

// Tour subgraphs: edge multiplicities over the routing graph, the
// coverage/connectivity/even-degree validity test, and Euler walk extraction.

#include <string>
#include <string_view>
#include <vector>

#include "picker/model.hpp"

namespace picker {

/// Multiplicity per edge of a WarehouseGraph, indexed by EdgeId.
class TourSubgraph {
public:
  TourSubgraph() = default;
  explicit TourSubgraph(const WarehouseGraph &graph) : mult_(graph.edge_count(), 0) {}
  explicit TourSubgraph(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {}

  int operator[](EdgeId e) const { return mult_.at(e); }
  int &operator[](EdgeId e) { return mult_.at(e); }
  int size() const { return static_cast<int>(mult_.size()); }
  const std::vector<int> &multiplicities() const { return mult_; }
  bool empty() const;

  TourSubgraph &operator+=(const TourSubgraph &other);
  friend TourSubgraph operator+(TourSubgraph a, const TourSubgraph &b) { return a += b; }
  friend bool operator==(const TourSubgraph &, const TourSubgraph &) = default;

private:
  std::vector<int> mult_;
};

enum class Condition { ItemsCovered, Connected, EvenDegree };

std::string_view to_string(Condition condition);

struct Failure {
  Condition condition;
  VertexId witness;

  friend bool operator==(const Failure &, const Failure &) = default;
};

struct ValidityReport {
  bool valid = true;
  std::vector<Failure> failures;
};

struct Walk {
  std::vector<VertexId> vertices; // closed: front() == back() == depot
  Length length = 0;
};

std::vector<int> vertex_degrees(const WarehouseGraph &graph, const TourSubgraph &tour);

/// Checks coverage of the depot and every item, connectivity over the
/// vertices of nonzero degree, and even degree at every vertex.
ValidityReport is_tour_subgraph(const WarehouseGraph &graph, const TourSubgraph &tour);

Length tour_length(const WarehouseGraph &graph, const TourSubgraph &tour);

/// Hierholzer's algorithm from the depot, always leaving through the lowest
/// numbered neighbour. Throws InvalidArgument on an invalid subgraph.
Walk extract_walk(const WarehouseGraph &graph, const TourSubgraph &tour);

/// Tour document: {"edges": [{"from", "to", "mult"}, ...]}, nonzero edges in id order.
std::string serialize_tour(const WarehouseGraph &graph, const TourSubgraph &tour);
TourSubgraph parse_tour(const WarehouseGraph &graph, std::string_view text);

} // namespace picker
