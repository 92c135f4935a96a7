// picker: solve, check and reduce single-picker routes in rectangular
// warehouses with several cross-aisles.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
// 3 internal cap exceeded.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "picker/bench.hpp"
#include "picker/dp.hpp"
#include "picker/errors.hpp"
#include "picker/oracle.hpp"
#include "picker/reduce.hpp"
#include "picker/render.hpp"

namespace fs = std::filesystem;
using namespace picker;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kFailed = 2, kCap = 3 };

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(path + ": cannot open");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InvalidArgument(path + ": cannot write");
  out << text;
}

// FNV-1a over the canonical instance document.
std::string digest(const WarehouseInstance &instance) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_instance(instance)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

WarehouseInstance load_instance(const std::string &path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError &e) {
    throw ParseError(path + ": " + e.what());
  }
}

void header(const std::string &command, const WarehouseInstance &instance) {
  std::cout << "command: " << command << "\n"
            << "instance: " << digest(instance) << "\n";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_solve(const std::string &input, bool prune, const std::string &out,
              const std::string &render) {
  const auto instance = load_instance(input);
  const WarehouseGraph graph(instance);
  header(prune ? "solve --prune" : "solve --no-prune", instance);
  const auto start = std::chrono::steady_clock::now();
  const auto tour = solve_dp(instance, DpOptions{prune, false});
  const double elapsed = seconds_since(start);

  std::cout << "length: " << tour.length << "\n"
            << "states_expanded: " << tour.stats.states_expanded << "\n"
            << "transitions: " << tour.stats.transitions << "\n";
  if (!out.empty())
    write_file(out, serialize_tour(graph, tour.subgraph));
  if (!render.empty())
    write_file(render, render_svg(graph, &tour.subgraph));
  std::cout << "seconds: " << std::fixed << std::setprecision(6) << elapsed << "\n";

  if (!is_tour_subgraph(graph, tour.subgraph).valid ||
      tour_length(graph, tour.subgraph) != tour.length)
    throw VerificationFailure("solver returned an inconsistent tour");
  return kOk;
}

int cmd_oracle(const std::string &input) {
  const auto instance = load_instance(input);
  header("oracle", instance);
  const auto held_karp = solve_held_karp(instance);
  std::cout << "held_karp: " << held_karp.length << "\n";

  const int m = instance.aisles;
  const int n = instance.cross_aisles;
  const BruteForceCaps caps;
  if (m * (n - 1) <= caps.max_blocks && (m - 1) * n <= caps.max_horizontal_segments) {
    const auto brute = brute_force_subgraphs(instance, caps);
    std::cout << "brute_force: " << brute.length << "\n";
    if (brute.length != held_karp.length)
      throw VerificationFailure("oracles disagree");
  } else {
    std::cout << "brute_force: skipped (instance exceeds enumeration caps)\n";
  }
  return kOk;
}

int cmd_verify(const std::string &input, const std::string &tour_path) {
  const auto instance = load_instance(input);
  const WarehouseGraph graph(instance);
  const auto tour = parse_tour(graph, read_file(tour_path));
  header("verify", instance);
  const auto report = is_tour_subgraph(graph, tour);
  std::cout << "valid: " << (report.valid ? "true" : "false") << "\n";
  for (const auto &failure : report.failures)
    std::cout << "failure: " << to_string(failure.condition) << " at vertex " << failure.witness
              << "\n";
  std::cout << "length: " << tour_length(graph, tour) << "\n";
  return report.valid ? kOk : kFailed;
}

int cmd_reduce(const std::string &input, const std::string &tour_path, const std::string &out) {
  const auto instance = load_instance(input);
  const WarehouseGraph graph(instance);
  const auto tour = parse_tour(graph, read_file(tour_path));
  header("reduce", instance);
  if (!is_tour_subgraph(graph, tour).valid)
    throw VerificationFailure("input is not a tour subgraph");

  const auto result = eliminate_connecting_doubles(graph, tour);
  std::cout << format_trace(result.steps);
  const Length before = tour_length(graph, tour);
  const Length after = tour_length(graph, result.tour);
  const auto stalled = std::count_if(result.steps.begin(), result.steps.end(),
                                     [](const ReductionStep &s) { return !s.potential_decreased; });
  std::cout << "steps: " << result.steps.size() << "\n"
            << "length: " << before << " -> " << after << "\n"
            << "potential_violations: " << stalled << "\n";
  if (!out.empty())
    write_file(out, serialize_tour(graph, result.tour));

  const bool all_valid = std::all_of(result.steps.begin(), result.steps.end(),
                                     [](const ReductionStep &s) { return s.valid_after; });
  if (!all_valid || after > before || !connecting_potential(graph, result.tour).empty())
    throw VerificationFailure("reduction left an invalid or unreduced tour");
  return kOk;
}

int cmd_gen(const GeneratorParams &params, std::uint64_t seed, const std::string &out) {
  const auto instance = generate_instance(params, seed);
  const auto text = serialize_instance(instance);
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return kOk;
}

int cmd_bench(const std::string &suite_dir, int repeats, const std::string &out) {
  if (!fs::is_directory(suite_dir))
    throw ParseError(suite_dir + ": not a directory");
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(suite_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<std::pair<std::string, WarehouseInstance>> suite;
  for (const auto &file : files)
    suite.emplace_back(file.stem().string(), load_instance(file.string()));
  const int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const auto rows = run_bench(suite, repeats, threads);
  const auto table = format_bench_table(rows);
  std::cout << table;
  if (!out.empty())
    write_file(out, table);

  for (const auto &row : rows)
    if (row.length_on != row.length_off || row.transitions_on > row.transitions_off)
      throw VerificationFailure(row.instance + ": pruning changed the optimum or added work");
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact order-picking routes for rectangular warehouses"};
  app.require_subcommand(1);

  std::string input;
  std::string tour_path;
  std::string out;
  std::string render;
  std::string suite;
  bool prune = true;
  std::uint64_t seed = 1;
  int repeats = 1;
  GeneratorParams params;

  auto *solve = app.add_subcommand("solve", "Optimal tour by the aisle sweep");
  solve->add_option("--input", input, "Instance document")->required();
  solve->add_flag("--prune,!--no-prune", prune, "Skip connecting double runs (default on)");
  solve->add_option("--out", out, "Write the tour document here");
  solve->add_option("--render", render, "Write an SVG drawing here");

  auto *oracle = app.add_subcommand("oracle", "Held-Karp and, for tiny instances, brute force");
  oracle->add_option("--input", input, "Instance document")->required();

  auto *verify = app.add_subcommand("verify", "Check a tour document against an instance");
  verify->add_option("--input", input, "Instance document")->required();
  verify->add_option("--tour", tour_path, "Tour document")->required();

  auto *reduce = app.add_subcommand("reduce", "Remove connecting double runs from a tour");
  reduce->add_option("--input", input, "Instance document")->required();
  reduce->add_option("--tour", tour_path, "Tour document")->required();
  reduce->add_option("--out", out, "Write the reduced tour here");

  auto *gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--aisles", params.aisles, "Number of aisles")->check(CLI::PositiveNumber);
  gen->add_option("--cross-aisles", params.cross_aisles, "Number of cross-aisles")
      ->check(CLI::Range(2, 1000));
  gen->add_option("--items", params.items, "Number of items")->check(CLI::NonNegativeNumber);
  gen->add_option("--out", out, "Write the instance here instead of stdout");

  auto *bench = app.add_subcommand("bench", "Solve a directory of instances with pruning on and off");
  bench->add_option("--suite", suite, "Directory of *.json instances")->required();
  bench->add_option("--repeats", repeats, "Timing repeats per instance")->check(CLI::PositiveNumber);
  bench->add_option("--out", out, "Write the table here as well");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve)
      return cmd_solve(input, prune, out, render);
    if (*oracle)
      return cmd_oracle(input);
    if (*verify)
      return cmd_verify(input, tour_path);
    if (*reduce)
      return cmd_reduce(input, tour_path, out);
    if (*gen)
      return cmd_gen(params, seed, out);
    if (*bench)
      return cmd_bench(suite, repeats, out);
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded &e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const VerificationFailure &e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
