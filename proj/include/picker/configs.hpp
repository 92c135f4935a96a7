#pragma once

// The menu of edge patterns inside one subaisle (six vertical shapes) and on
// one cross-aisle gap (three horizontal multiplicities).

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "picker/model.hpp"

namespace picker {

enum class VerticalConfig {
  Single,       // I: traverse once
  TopReturn,    // II: enter from the top, return to the top
  BottomReturn, // III: enter from the bottom, return to the bottom
  Gap,          // IV: top return and bottom return, skipping the largest gap
  Double,       // V: traverse twice
  None,         // VI: untouched
};

inline constexpr std::array<VerticalConfig, 6> kVerticalConfigs = {
    VerticalConfig::Single, VerticalConfig::TopReturn, VerticalConfig::BottomReturn,
    VerticalConfig::Gap,    VerticalConfig::Double,    VerticalConfig::None};

enum class HorizontalConfig { None = 0, Single = 1, Double = 2 };

std::string_view to_string(VerticalConfig config);
std::string_view to_string(HorizontalConfig config);

/// One block of one aisle: its length and sorted distinct item offsets.
struct Subaisle {
  Length length = 0;
  std::vector<Length> offsets;
};

struct ConfigEffect {
  Length length = 0;
  int bottom_degree = 0; // edges this pattern puts on the lower intersection
  int top_degree = 0;
  bool connects_ends = false;
  /// Per segment, bottom to top; segments are separated by the item offsets.
  std::vector<int> segments;

  bool bottom_odd() const { return bottom_degree % 2 != 0; }
  bool top_odd() const { return top_degree % 2 != 0; }
};

/// Throws InvalidArgument for None on a subaisle holding items, and for Gap on
/// an empty subaisle.
ConfigEffect vertical_config_effect(const Subaisle &subaisle, VerticalConfig config);

/// Valid configurations in I..VI order: {I, V, VI} when empty, {I..V} otherwise.
std::vector<std::pair<VerticalConfig, ConfigEffect>>
enumerate_vertical_configs(const Subaisle &subaisle);

ConfigEffect horizontal_config_effect(Length gap_width, HorizontalConfig config);

/// The subaisle of a graph's block, with offsets read from its item vertices.
Subaisle subaisle_of(const WarehouseGraph &graph, int aisle, int block);

} // namespace picker
