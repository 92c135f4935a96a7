#pragma once

// Warehouse instances and the routing graph built from them.
//
// Aisles are numbered 1..m from left to right, cross-aisles 1..n from bottom
// to top. A block j is the stretch of every aisle between cross-aisle j and
// j+1. All lengths are exact non-negative integers.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace picker {

using Length = std::int64_t;
using VertexId = int;
using EdgeId = int;

struct ItemLocation {
  int aisle = 1;
  int block = 1;
  Length offset = 0; // measured upward from cross-aisle `block`

  friend bool operator==(const ItemLocation &, const ItemLocation &) = default;
  friend auto operator<=>(const ItemLocation &, const ItemLocation &) = default;
};

struct Intersection {
  int aisle = 1;
  int cross_aisle = 1;

  friend bool operator==(const Intersection &, const Intersection &) = default;
};

struct WarehouseInstance {
  int aisles = 1;
  int cross_aisles = 2;
  std::vector<Length> block_lengths; // n-1 entries
  std::vector<Length> gap_widths;    // m-1 entries
  std::vector<ItemLocation> items;
  Intersection depot;

  Length block_length(int block) const { return block_lengths.at(block - 1); }
  Length gap_width(int gap) const { return gap_widths.at(gap - 1); }
  int block_count() const { return cross_aisles - 1; }

  /// Throws ParseError naming the offending field.
  void validate() const;

  friend bool operator==(const WarehouseInstance &,
                         const WarehouseInstance &) = default;
};

enum class VertexKind { Intersection, Item };

struct Vertex {
  VertexKind kind = VertexKind::Intersection;
  int aisle = 1;
  // Intersection: cross-aisle index. Item: block index.
  int row = 1;
  Length offset = 0; // 0 for intersections
  Length height = 0; // absolute height along the aisle
  std::vector<int> labels; // indices into instance.items (0-based)
};

enum class EdgeKind { Vertical, Horizontal };

struct Edge {
  VertexId u = 0; // u < v
  VertexId v = 0;
  Length length = 0;
  EdgeKind kind = EdgeKind::Vertical;
  // Vertical: aisle and block. Horizontal: gap (left aisle) and cross-aisle.
  int major = 1;
  int minor = 1;
};

/// The routing graph G. Vertex ids are aisle-major and bottom-to-top within an
/// aisle; vertical edges come first (same order), then horizontal edges
/// ordered by gap and cross-aisle.
class WarehouseGraph {
public:
  explicit WarehouseGraph(const WarehouseInstance &instance);

  const WarehouseInstance &instance() const { return instance_; }
  int aisles() const { return instance_.aisles; }
  int cross_aisles() const { return instance_.cross_aisles; }

  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  const Vertex &vertex(VertexId id) const { return vertices_.at(id); }
  const Edge &edge(EdgeId id) const { return edges_.at(id); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  VertexId intersection(int aisle, int cross_aisle) const;
  VertexId depot() const { return intersection(instance_.depot.aisle, instance_.depot.cross_aisle); }
  VertexId item_vertex(int item_index) const { return item_vertex_.at(item_index); }
  /// Distinct item vertices in id order.
  std::vector<VertexId> item_vertices() const;

  /// Vertical edges of block (aisle, block), bottom to top.
  std::span<const EdgeId> block_segments(int aisle, int block) const;
  EdgeId horizontal(int gap, int cross_aisle) const;
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  /// Neighbours of a vertex as (neighbour, edge) pairs sorted by neighbour id.
  std::span<const std::pair<VertexId, EdgeId>> adjacency(VertexId v) const {
    return adjacency_.at(v);
  }

private:
  WarehouseInstance instance_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<VertexId> intersection_;            // (aisle-1)*n + (row-1)
  std::vector<std::vector<EdgeId>> block_edges_;  // (aisle-1)*(n-1) + (block-1)
  std::vector<EdgeId> horizontal_;                // (gap-1)*n + (row-1)
  std::vector<VertexId> item_vertex_;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adjacency_;
};

struct DistanceMatrix {
  std::vector<VertexId> terminals;
  std::vector<Length> values; // row-major, terminals.size() squared

  std::size_t size() const { return terminals.size(); }
  Length at(std::size_t a, std::size_t b) const { return values[a * size() + b]; }
};

/// Exact shortest-path distances between the given vertices.
DistanceMatrix shortest_paths(const WarehouseGraph &graph,
                              std::span<const VertexId> terminals);

WarehouseInstance parse_instance(std::string_view text);
std::string serialize_instance(const WarehouseInstance &instance);

struct GeneratorParams {
  int aisles = 3;
  int cross_aisles = 3;
  int items = 5;
  Length block_min = 1;
  Length block_max = 100;
  Length gap_min = 1;
  Length gap_max = 100;
};

/// Deterministic for a fixed seed. Items are placed uniformly over the blocks
/// long enough to hold an interior point.
WarehouseInstance generate_instance(const GeneratorParams &params,
                                    std::uint64_t seed);

} // namespace picker
