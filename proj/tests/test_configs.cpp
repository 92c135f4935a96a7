#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "picker/configs.hpp"
#include "picker/errors.hpp"

using namespace picker;

namespace {

Length length_of(const Subaisle &s, VerticalConfig c) { return vertical_config_effect(s, c).length; }

// Segment lengths between the ends and the item points.
std::vector<Length> pieces(const Subaisle &s) {
  std::vector<Length> out;
  Length last = 0;
  for (Length o : s.offsets) {
    out.push_back(o - last);
    last = o;
  }
  out.push_back(s.length - last);
  return out;
}

// Whether a segment multiplicity vector draws the given shape.
bool draws(const std::vector<int> &mult, VerticalConfig c) {
  const std::size_t k = mult.size();
  for (std::size_t v = 1; v < k; ++v) {
    const int degree = mult[v - 1] + mult[v];
    if (degree == 0 || degree % 2 != 0)
      return false; // item uncovered or odd
  }
  const bool through = std::all_of(mult.begin(), mult.end(), [](int x) { return x > 0; });
  // Each maximal nonzero stretch must reach an end of the subaisle.
  bool anchored = true;
  for (std::size_t a = 0; a < k;) {
    if (mult[a] == 0) {
      ++a;
      continue;
    }
    std::size_t b = a;
    while (b < k && mult[b] > 0)
      ++b;
    anchored = anchored && (a == 0 || b == k);
    a = b;
  }
  switch (c) {
  case VerticalConfig::Single:
    return through && mult.front() % 2 == 1;
  case VerticalConfig::Double:
    return through && mult.front() % 2 == 0;
  case VerticalConfig::TopReturn:
    return !through && anchored && mult.front() == 0;
  case VerticalConfig::BottomReturn:
    return !through && anchored && mult.back() == 0;
  case VerticalConfig::Gap:
    return !through && anchored;
  case VerticalConfig::None:
    return std::all_of(mult.begin(), mult.end(), [](int x) { return x == 0; });
  }
  return false;
}

// Cheapest multiplicity vector with entries in {0, 1, 2} drawing the shape.
Length cheapest(const Subaisle &s, VerticalConfig c) {
  const auto len = pieces(s);
  const std::size_t k = len.size();
  std::vector<int> mult(k, 0);
  Length best = std::numeric_limits<Length>::max();
  while (true) {
    if (draws(mult, c)) {
      Length total = 0;
      for (std::size_t i = 0; i < k; ++i)
        total += mult[i] * len[i];
      best = std::min(best, total);
    }
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++mult[i] <= 2)
        break;
      mult[i] = 0;
    }
    if (i == k)
      break;
  }
  return best;
}

} // namespace

TEST_CASE("lengths on a block of 10 with items at 3 and 7", "[configs]") {
  const Subaisle s{10, {3, 7}};
  CHECK(length_of(s, VerticalConfig::Single) == 10);
  CHECK(length_of(s, VerticalConfig::TopReturn) == 14);
  CHECK(length_of(s, VerticalConfig::BottomReturn) == 14);
  CHECK(length_of(s, VerticalConfig::Gap) == 12);
  CHECK(length_of(s, VerticalConfig::Double) == 20);
  CHECK_THROWS_AS(vertical_config_effect(s, VerticalConfig::None), InvalidArgument);
}

TEST_CASE("empty block: returns collapse to the untouched shape", "[configs]") {
  const Subaisle s{10, {}};
  CHECK(length_of(s, VerticalConfig::TopReturn) == 0);
  CHECK(length_of(s, VerticalConfig::BottomReturn) == 0);
  CHECK(length_of(s, VerticalConfig::None) == 0);
  CHECK_THROWS_AS(vertical_config_effect(s, VerticalConfig::Gap), InvalidArgument);

  std::vector<VerticalConfig> tags;
  for (const auto &[c, e] : enumerate_vertical_configs(s))
    tags.push_back(c);
  CHECK(tags == std::vector{VerticalConfig::Single, VerticalConfig::Double, VerticalConfig::None});
}

TEST_CASE("single item: the gap shape skips the upper half on a tie", "[configs]") {
  const Subaisle s{10, {5}};
  const auto gap = vertical_config_effect(s, VerticalConfig::Gap);
  CHECK(gap.length == 10);
  CHECK(gap.segments == std::vector<int>{2, 0});

  std::vector<VerticalConfig> tags;
  for (const auto &[c, e] : enumerate_vertical_configs(s))
    tags.push_back(c);
  CHECK(tags == std::vector{VerticalConfig::Single, VerticalConfig::TopReturn,
                            VerticalConfig::BottomReturn, VerticalConfig::Gap,
                            VerticalConfig::Double});
  CHECK(enumerate_vertical_configs(Subaisle{10, {3, 7}}).size() == 5);
}

TEST_CASE("horizontal configurations", "[configs]") {
  const auto none = horizontal_config_effect(5, HorizontalConfig::None);
  const auto single = horizontal_config_effect(5, HorizontalConfig::Single);
  const auto twice = horizontal_config_effect(5, HorizontalConfig::Double);
  CHECK(none.length == 0);
  CHECK_FALSE(none.connects_ends);
  CHECK(single.length == 5);
  CHECK((single.bottom_odd() && single.top_odd()));
  CHECK(single.connects_ends);
  CHECK(twice.length == 10);
  CHECK(twice.connects_ends);
  CHECK_FALSE((twice.bottom_odd() || twice.top_odd()));
  CHECK(to_string(HorizontalConfig::Double) == "DOUBLE");
  CHECK(to_string(VerticalConfig::Gap) == "IV");
}

TEST_CASE("every menu entry is the cheapest drawing of its shape", "[configs][property]") {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 300; ++trial) {
    Subaisle s;
    s.length = 2 + static_cast<Length>(rng() % 30);
    const int items = static_cast<int>(rng() % 4);
    std::set<Length> offsets;
    for (int p = 0; p < items; ++p)
      offsets.insert(1 + static_cast<Length>(rng() % (s.length - 1)));
    s.offsets.assign(offsets.begin(), offsets.end());

    for (const auto &[c, e] : enumerate_vertical_configs(s)) {
      INFO("length " << s.length << " items " << s.offsets.size() << " config " << to_string(c));
      CHECK(e.length == cheapest(s, c));
      REQUIRE(e.segments.size() == s.offsets.size() + 1);
      CHECK(draws(e.segments, c));
      // Coverage: every item touches a used segment.
      for (std::size_t v = 1; v < e.segments.size(); ++v)
        CHECK(e.segments[v - 1] + e.segments[v] > 0);
      // Degrees seen by the two intersections.
      CHECK(e.bottom_degree == e.segments.front());
      CHECK(e.top_degree == e.segments.back());
      const bool odd = e.bottom_odd() || e.top_odd();
      CHECK(odd == (c == VerticalConfig::Single));
      CHECK(e.connects_ends == (c == VerticalConfig::Single || c == VerticalConfig::Double));
    }
  }
}

TEST_CASE("subaisle offsets come from the graph", "[configs]") {
  const WarehouseGraph g(picker::testing::figure_instance());
  const auto s = subaisle_of(g, 3, 2);
  CHECK(s.length == 12);
  CHECK(s.offsets == std::vector<Length>{8});
}
