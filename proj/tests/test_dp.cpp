#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "picker/dp.hpp"
#include "picker/errors.hpp"
#include "picker/reduce.hpp"

using namespace picker;
using namespace picker::testing;

namespace {

std::vector<std::uint64_t> keys(const std::vector<FrontierState> &states) {
  std::vector<std::uint64_t> out;
  for (const auto &s : states)
    out.push_back(pack(s));
  std::sort(out.begin(), out.end());
  return out;
}

FrontierState make(std::vector<int> ports, std::vector<int> labels, bool closed = false) {
  FrontierState s;
  for (int p : ports)
    s.ports.push_back(static_cast<PortClass>(p));
  for (int l : labels)
    s.components.push_back(static_cast<std::uint8_t>(l));
  s.closed = closed;
  return s;
}

} // namespace

TEST_CASE("state enumeration matches a brute-force enumerator", "[dp]") {
  for (int n = 2; n <= 5; ++n) {
    INFO("n = " << n);
    const auto states = enumerate_states(n);
    CHECK(keys(states) == keys(brute_force_states(n)));
    CHECK(std::is_sorted(states.begin(), states.end(),
                         [](const auto &a, const auto &b) { return pack(a) < pack(b); }));
    for (const auto &s : states) {
      CHECK(is_valid_state(s));
      CHECK(unpack(pack(s), n) == s);
    }
  }
  CHECK(enumerate_states(2).size() == 7);
}

TEST_CASE("initial and accepting states are present", "[dp]") {
  const auto states = enumerate_states(3);
  const auto initial = make({0, 0, 0}, {0, 0, 0});
  const auto accepting = make({0, 0, 0}, {0, 0, 0}, true);
  CHECK(std::find(states.begin(), states.end(), initial) != states.end());
  CHECK(std::find(states.begin(), states.end(), accepting) != states.end());
}

TEST_CASE("state invariants", "[dp]") {
  CHECK(is_valid_state(make({1, 0, 1}, {1, 0, 1})));
  CHECK(is_valid_state(make({2, 2, 0}, {1, 2, 0})));
  CHECK_FALSE(is_valid_state(make({2, 2, 0}, {2, 1, 0})));          // label order
  CHECK_FALSE(is_valid_state(make({1, 2, 0}, {1, 2, 0})));          // lone odd port
  CHECK_FALSE(is_valid_state(make({2, 2, 2, 2}, {1, 2, 1, 2})));    // crossing
  CHECK_FALSE(is_valid_state(make({2, 0, 0}, {0, 0, 0})));          // unlabelled port
  CHECK_FALSE(is_valid_state(make({2, 0, 0}, {1, 0, 0}, true)));    // closed with ports
  CHECK(to_string(make({1, 0, 1}, {1, 0, 1})).size() > 0);
}

TEST_CASE("two-aisle examples", "[dp]") {
  CHECK(solve_dp(small_instance({})).length == 0);
  CHECK(solve_dp(small_instance({})).subgraph.empty());
  CHECK(solve_dp(small_instance({{1, 1, 4}})).length == 8);
  // Derived by trying both visiting orders over Floyd-Warshall distances.
  CHECK(permutation_optimum(small_instance({{1, 1, 4}, {2, 1, 6}})) == 30);
  CHECK(solve_dp(small_instance({{1, 1, 4}, {2, 1, 6}})).length == 30);
}

TEST_CASE("more than six cross-aisles is refused", "[dp]") {
  WarehouseInstance w;
  w.aisles = 1;
  w.cross_aisles = 7;
  w.block_lengths.assign(6, 5);
  w.items = {{1, 3, 2}};
  CHECK_THROWS_AS(solve_dp(w), CapExceeded);
}

TEST_CASE("example layout: optimum beats the drawn tour", "[dp]") {
  const auto w = figure_instance();
  const WarehouseGraph g(w);
  const auto best = solve_dp(w, {false, false});
  CHECK(best.length <= tour_length(g, figure_tour(g)));
  CHECK(is_tour_subgraph(g, best.subgraph).valid);
  CHECK(solve_dp(w).length == best.length);
}

TEST_CASE("solver output properties on random instances", "[dp][property]") {
  std::mt19937_64 rng(401);
  for (int trial = 0; trial < 150; ++trial) {
    const auto w = random_instance(rng, 4, 4, 6);
    const WarehouseGraph g(w);
    INFO(serialize_instance(w));
    const auto off = solve_dp(w, {false, false});
    const auto on = solve_dp(w, {true, false});

    CHECK(off.length == permutation_optimum(w));
    CHECK(on.length == off.length);
    CHECK(on.stats.transitions <= off.stats.transitions);
    for (const auto *t : {&off, &on}) {
      CHECK(reference_valid(g, t->subgraph));
      CHECK(tour_length(g, t->subgraph) == t->length);
      const auto &mult = t->subgraph.multiplicities();
      CHECK(std::all_of(mult.begin(), mult.end(), [](int x) { return x >= 0 && x <= 2; }));
    }
    CHECK(connecting_potential(g, on.subgraph).empty());

    // Deterministic tie-breaking.
    const auto again = solve_dp(w, {false, false});
    CHECK(again.subgraph == off.subgraph);
    CHECK(again.stats.transitions == off.stats.transitions);

    // Dropping the doubled aisle can only lose options; a single aisle may
    // have none left.
    try {
      const Length without = solve_dp(w, {false, true}).length;
      CHECK(without >= off.length);
    } catch (const InvalidArgument &) {
      CHECK(w.aisles == 1);
    }
  }
}
