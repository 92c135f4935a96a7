#include "picker/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <mutex>
#include <thread>

#include "picker/dp.hpp"
#include "picker/errors.hpp"

namespace picker {

std::vector<BenchRow> run_bench(const std::vector<std::pair<std::string, WarehouseInstance>> &suite,
                                int repeats, int threads) {
  if (repeats < 1)
    throw InvalidArgument("bench: repeats must be at least 1");
  std::vector<BenchRow> rows(suite.size());

  auto solve_one = [&](std::size_t index) {
    const auto &[name, instance] = suite[index];
    BenchRow row;
    row.instance = name;
    for (int prune = 0; prune <= 1; ++prune) {
      double best = 0.0;
      OptimalTour tour;
      for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        tour = solve_dp(instance, DpOptions{prune == 1, false});
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        best = r == 0 ? elapsed.count() : std::min(best, elapsed.count());
      }
      if (prune == 1) {
        row.length_on = tour.length;
        row.transitions_on = tour.stats.transitions;
        row.seconds_on = best;
      } else {
        row.length_off = tour.length;
        row.transitions_off = tour.stats.transitions;
        row.seconds_off = best;
      }
    }
    rows[index] = std::move(row);
  };

  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(suite.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_lock;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < suite.size(); i = next++) {
        try {
          solve_one(i);
        } catch (...) {
          std::lock_guard guard(error_lock);
          if (!error)
            error = std::current_exception();
        }
      }
    });
  for (auto &t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);

  std::sort(rows.begin(), rows.end(),
            [](const BenchRow &a, const BenchRow &b) { return a.instance < b.instance; });
  return rows;
}

std::string format_bench_table(const std::vector<BenchRow> &rows, bool include_timings) {
  std::ostringstream out;
  out << "instance\tlength_off\tlength_on\ttransitions_off\ttransitions_on";
  if (include_timings)
    out << "\tseconds_off\tseconds_on";
  out << "\n";
  for (const auto &row : rows) {
    out << row.instance << '\t' << row.length_off << '\t' << row.length_on << '\t'
        << row.transitions_off << '\t' << row.transitions_on;
    if (include_timings)
      out << '\t' << std::fixed << std::setprecision(6) << row.seconds_off << '\t'
          << row.seconds_on << std::defaultfloat;
    out << "\n";
  }
  return out.str();
}

} // namespace picker
