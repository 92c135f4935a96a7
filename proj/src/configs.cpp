#include "picker/configs.hpp"

#include <algorithm>

#include "picker/errors.hpp"

namespace picker {

std::string_view to_string(VerticalConfig config) {
  switch (config) {
  case VerticalConfig::Single:
    return "I";
  case VerticalConfig::TopReturn:
    return "II";
  case VerticalConfig::BottomReturn:
    return "III";
  case VerticalConfig::Gap:
    return "IV";
  case VerticalConfig::Double:
    return "V";
  case VerticalConfig::None:
    return "VI";
  }
  return "?";
}

std::string_view to_string(HorizontalConfig config) {
  switch (config) {
  case HorizontalConfig::None:
    return "NONE";
  case HorizontalConfig::Single:
    return "SINGLE";
  case HorizontalConfig::Double:
    return "DOUBLE";
  }
  return "?";
}

namespace {

// Finishes an effect from its segment multiplicities.
ConfigEffect from_segments(const Subaisle &subaisle, std::vector<int> segments,
                           bool connects_ends) {
  ConfigEffect effect;
  std::vector<Length> points{0};
  points.insert(points.end(), subaisle.offsets.begin(), subaisle.offsets.end());
  points.push_back(subaisle.length);
  for (std::size_t s = 0; s < segments.size(); ++s)
    effect.length += segments[s] * (points[s + 1] - points[s]);
  effect.bottom_degree = segments.front();
  effect.top_degree = segments.back();
  effect.connects_ends = connects_ends;
  effect.segments = std::move(segments);
  return effect;
}

} // namespace

ConfigEffect vertical_config_effect(const Subaisle &subaisle, VerticalConfig config) {
  if (!std::is_sorted(subaisle.offsets.begin(), subaisle.offsets.end()))
    throw InvalidArgument("subaisle offsets must be sorted");
  const std::size_t items = subaisle.offsets.size();
  const std::size_t count = items + 1;
  std::vector<int> segments(count, 0);

  switch (config) {
  case VerticalConfig::Single:
    std::fill(segments.begin(), segments.end(), 1);
    return from_segments(subaisle, segments, true);
  case VerticalConfig::Double:
    std::fill(segments.begin(), segments.end(), 2);
    return from_segments(subaisle, segments, true);
  case VerticalConfig::None:
    if (items > 0)
      throw InvalidArgument("configuration None on a subaisle holding items");
    return from_segments(subaisle, segments, false);
  case VerticalConfig::TopReturn:
    // everything above the lowest item
    for (std::size_t s = 1; s < count; ++s)
      segments[s] = 2;
    return from_segments(subaisle, segments, false);
  case VerticalConfig::BottomReturn:
    for (std::size_t s = 0; s + 1 < count; ++s)
      segments[s] = 2;
    return from_segments(subaisle, segments, false);
  case VerticalConfig::Gap: {
    if (items == 0)
      throw InvalidArgument("configuration Gap on an empty subaisle");
    std::vector<Length> points{0};
    points.insert(points.end(), subaisle.offsets.begin(), subaisle.offsets.end());
    points.push_back(subaisle.length);
    std::size_t widest = 0;
    for (std::size_t s = 1; s < count; ++s)
      if (points[s + 1] - points[s] >= points[widest + 1] - points[widest])
        widest = s; // ties go to the topmost gap
    std::fill(segments.begin(), segments.end(), 2);
    segments[widest] = 0;
    return from_segments(subaisle, segments, false);
  }
  }
  throw InvalidArgument("unknown vertical configuration");
}

std::vector<std::pair<VerticalConfig, ConfigEffect>>
enumerate_vertical_configs(const Subaisle &subaisle) {
  std::vector<std::pair<VerticalConfig, ConfigEffect>> out;
  const bool empty = subaisle.offsets.empty();
  for (VerticalConfig config : kVerticalConfigs) {
    const bool allowed = empty ? (config == VerticalConfig::Single ||
                                  config == VerticalConfig::Double ||
                                  config == VerticalConfig::None)
                               : config != VerticalConfig::None;
    if (allowed)
      out.emplace_back(config, vertical_config_effect(subaisle, config));
  }
  return out;
}

ConfigEffect horizontal_config_effect(Length gap_width, HorizontalConfig config) {
  const int mult = static_cast<int>(config);
  ConfigEffect effect;
  effect.length = mult * gap_width;
  effect.bottom_degree = mult; // left end
  effect.top_degree = mult;    // right end
  effect.connects_ends = mult > 0;
  effect.segments = {mult};
  return effect;
}

Subaisle subaisle_of(const WarehouseGraph &graph, int aisle, int block) {
  Subaisle subaisle;
  subaisle.length = graph.instance().block_length(block);
  for (EdgeId e : graph.block_segments(aisle, block)) {
    const Vertex &upper = graph.vertex(graph.edge(e).v);
    if (upper.kind == VertexKind::Item)
      subaisle.offsets.push_back(upper.offset);
  }
  return subaisle;
}

} // namespace picker
