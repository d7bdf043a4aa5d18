#pragma once

// The burnlab command line, kept in a library so tests can drive it
// in-process.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "burnlab/burn.hpp"
#include "burnlab/gen.hpp"
#include "burnlab/graph_io.hpp"

namespace burnlab::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kIoError = 3,
};

// Algorithm names accepted by --alg.
const std::vector<std::string>& algorithm_names();

// Algorithms the bench runs on a class; the rest are skipped.
bool compatible(GraphClass cls, const std::string& alg);

// Runs one driver. Throws InvalidInput when the graph does not suit it.
ApproxResult run_algorithm(const AnyGraph& g, const std::string& alg);

struct BenchOptions {
  std::vector<GraphClass> classes;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds{1};
  std::vector<std::string> algs;  // empty: all
  double cycle_fraction = 0.08;
  std::size_t workers = 1;
  std::size_t oracle_cap = 14;
  bool timing = false;
};

struct BenchRecord {
  std::string name;
  GraphClass cls = GraphClass::kCactus;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::string alg;
  std::size_t estimate = 0;  // realized, validated schedule length
  std::int64_t b_star = 0;
  std::optional<double> ms;
  std::uint64_t seed = 0;
  std::int64_t bound = 0;
  std::optional<std::int64_t> exact;
  std::string status = "ok";
  BurningSchedule schedule;  // kept for callers, never serialized

  std::optional<double> ratio() const;
  bool ok() const { return status == "ok"; }
};

GenSpec instance_spec(GraphClass cls, std::size_t n, std::uint64_t seed, double cycle_fraction);

// Rows come out ordered by class, size, seed, then algorithm, whatever the
// worker count.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

std::string to_csv(const std::vector<BenchRecord>& records);
std::string to_json(const std::vector<BenchRecord>& records);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burnlab::cli
