#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "picker/model.hpp"

namespace picker {

struct BenchRow {
  std::string instance;
  Length length_off = 0;
  Length length_on = 0;
  std::int64_t transitions_off = 0;
  std::int64_t transitions_on = 0;
  double seconds_off = 0.0; // best of the repeats
  double seconds_on = 0.0;
};

/// Solves every instance with pruning off and on. Instances are processed on
/// up to `threads` workers; rows come back sorted by instance name.
std::vector<BenchRow> run_bench(const std::vector<std::pair<std::string, WarehouseInstance>> &suite,
                                int repeats, int threads = 1);

/// Tab-separated table with a header line. Timing columns are optional so the
/// rest of the table can be compared byte for byte.
std::string format_bench_table(const std::vector<BenchRow> &rows, bool include_timings = true);

} // namespace picker
