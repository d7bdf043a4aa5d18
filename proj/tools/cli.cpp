#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ios>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "burnlab/cactus.hpp"
#include "burnlab/ditree.hpp"
#include "burnlab/errors.hpp"
#include "burnlab/oracles.hpp"

namespace burnlab::cli {
namespace {

const UndirectedGraph& need_undirected(const AnyGraph& g, const std::string& alg) {
  if (const auto* u = std::get_if<UndirectedGraph>(&g)) return *u;
  throw InvalidInput(alg + " needs an undirected graph");
}

const DirectedTree& need_directed(const AnyGraph& g, const std::string& alg) {
  if (const auto* t = std::get_if<DirectedTree>(&g)) return *t;
  throw InvalidInput(alg + " needs a directed tree");
}

std::size_t edge_count(const AnyGraph& g) {
  return std::visit(
      [](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, UndirectedGraph>) {
          return x.edge_count();
        } else {
          return x.arc_count();
        }
      },
      g);
}

Verdict validate_any(const AnyGraph& g, const BurningSchedule& s) {
  return std::visit([&](const auto& x) { return validate(x, s); }, g);
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Status text ends up inside a CSV cell.
std::string csv_safe(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::vector<BenchRecord> bench_instance(const BenchOptions& o, const std::vector<std::string>& algs,
                                        GraphClass cls, std::size_t n, std::uint64_t seed) {
  const GenSpec spec = instance_spec(cls, n, seed, o.cycle_fraction);
  BenchRecord base;
  base.name = std::string(to_string(cls)) + "_n" + std::to_string(n) + "_s" + std::to_string(seed);
  base.cls = cls;
  base.vertices = n;
  base.seed = seed;

  std::vector<BenchRecord> rows;
  std::optional<AnyGraph> graph;
  std::string failure;
  try {
    graph = generate(spec);
    base.edges = edge_count(*graph);
    if (n <= o.oracle_cap) {
      ExactOptions eo;
      eo.max_vertices = o.oracle_cap;
      try {
        base.exact = std::visit([&](const auto& x) { return exact_burning_number(x, eo).b; }, *graph);
      } catch (const BudgetExceeded&) {
      }
    }
  } catch (const std::exception& e) {
    failure = std::string("error: ") + e.what();
  }

  for (const auto& alg : algs) {
    if (!compatible(cls, alg)) continue;
    BenchRecord r = base;
    r.alg = alg;
    if (!graph) {
      r.status = failure;
      rows.push_back(std::move(r));
      continue;
    }
    try {
      const auto start = std::chrono::steady_clock::now();
      ApproxResult res = run_algorithm(*graph, alg);
      const auto stop = std::chrono::steady_clock::now();
      if (o.timing) r.ms = std::chrono::duration<double, std::milli>(stop - start).count();
      r.estimate = res.schedule.length();
      r.b_star = res.b_star;
      r.bound = res.bound;
      const Verdict v = validate_any(*graph, res.schedule);
      if (!v.accepted()) {
        r.status = "invalid: " + v.describe();
      } else if (static_cast<std::int64_t>(r.estimate) > r.bound) {
        r.status = "error: length exceeds bound";
      }
      r.schedule = std::move(res.schedule);
    } catch (const std::exception& e) {
      r.status = std::string("error: ") + e.what();
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

AnyGraph load_graph(const std::string& path) { return read_graph_file(path); }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + path);
  out << text;
  if (!out) throw std::ios_base::failure("cannot write " + path);
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"cactus275", "baseline3", "poly3", "arb2", "arb1905"};
  return names;
}

bool compatible(GraphClass cls, const std::string& alg) {
  switch (cls) {
    case GraphClass::kCactus:
      return alg == "cactus275" || alg == "baseline3";
    case GraphClass::kPolytree:
      return alg == "poly3";
    case GraphClass::kArborescence:
      return alg == "arb2" || alg == "arb1905";
  }
  return false;
}

ApproxResult run_algorithm(const AnyGraph& g, const std::string& alg) {
  if (alg == "cactus275") return approx_cactus(need_undirected(g, alg));
  if (alg == "baseline3") return baseline_3approx(need_undirected(g, alg));
  if (alg == "poly3") return approx_polytree(need_directed(g, alg));
  if (alg == "arb2") {
    const DirectedTree& t = need_directed(g, alg);
    if (classify_ditree(t) != DitreeClass::kArborescence) throw InvalidInput("arb2 needs an arborescence");
    return approx_polytree(t);
  }
  if (alg == "arb1905") return approx_arborescence(need_directed(g, alg));
  throw InvalidInput("unknown algorithm " + alg);
}

std::optional<double> BenchRecord::ratio() const {
  if (!exact || *exact == 0 || !ok()) return std::nullopt;
  return static_cast<double>(estimate) / static_cast<double>(*exact);
}

GenSpec instance_spec(GraphClass cls, std::size_t n, std::uint64_t seed, double cycle_fraction) {
  GenSpec spec;
  spec.cls = cls;
  spec.n = n;
  spec.seed = seed;
  spec.cycle_fraction = cycle_fraction;
  return spec;
}

std::vector<BenchRecord> run_bench(const BenchOptions& o) {
  const std::vector<std::string> algs = o.algs.empty() ? algorithm_names() : o.algs;
  struct Job {
    GraphClass cls;
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (GraphClass cls : o.classes) {
    for (std::size_t n : o.sizes) {
      for (std::uint64_t seed : o.seeds) jobs.push_back({cls, n, seed});
    }
  }

  std::vector<std::vector<BenchRecord>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      results[i] = bench_instance(o, algs, jobs[i].cls, jobs[i].n, jobs[i].seed);
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(o.workers, 1, std::max<std::size_t>(jobs.size(), 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<BenchRecord> rows;
  for (auto& chunk : results) {
    for (auto& r : chunk) rows.push_back(std::move(r));
  }
  return rows;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::string out = "name,class,V,E,alg,estimate,b_star,ms,seed,bound,exact,ratio,status\n";
  for (const auto& r : records) {
    out += r.name + ',' + to_string(r.cls) + ',' + std::to_string(r.vertices) + ',' +
           std::to_string(r.edges) + ',' + r.alg + ',' + std::to_string(r.estimate) + ',' +
           std::to_string(r.b_star) + ',' + (r.ms ? fixed(*r.ms, 3) : "") + ',' +
           std::to_string(r.seed) + ',' + std::to_string(r.bound) + ',' +
           (r.exact ? std::to_string(*r.exact) : "") + ',' + (r.ratio() ? fixed(*r.ratio(), 4) : "") +
           ',' + csv_safe(r.status) + '\n';
  }
  return out;
}

std::string to_json(const std::vector<BenchRecord>& records) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json row;
    row["name"] = r.name;
    row["class"] = to_string(r.cls);
    row["V"] = r.vertices;
    row["E"] = r.edges;
    row["alg"] = r.alg;
    row["estimate"] = r.estimate;
    row["b_star"] = r.b_star;
    row["ms"] = r.ms ? nlohmann::ordered_json(*r.ms) : nlohmann::ordered_json(nullptr);
    row["seed"] = r.seed;
    row["bound"] = r.bound;
    row["exact"] = r.exact ? nlohmann::ordered_json(*r.exact) : nlohmann::ordered_json(nullptr);
    row["ratio"] = r.ratio() ? nlohmann::ordered_json(*r.ratio()) : nlohmann::ordered_json(nullptr);
    row["status"] = r.status;
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph burning: approximation algorithms, exact oracle and benchmarks", "burnlab"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write seeded random instances");
  std::string gen_class;
  std::size_t gen_n = 0;
  std::vector<std::size_t> gen_n_list;
  std::uint64_t gen_seed = 1;
  std::string gen_dir = "fixtures";
  double gen_cycles = 0.08;
  std::size_t gen_max_out = 0;
  gen->add_option("--class", gen_class, "cactus, polytree or arborescence")->required();
  auto* n_opt = gen->add_option("--n", gen_n, "Vertex count");
  auto* list_opt = gen->add_option("--n-list", gen_n_list, "Comma separated vertex counts")->delimiter(',');
  n_opt->excludes(list_opt);
  gen->add_option("--seed", gen_seed, "PRNG seed");
  gen->add_option("--out-dir", gen_dir, "Fixture root directory");
  gen->add_option("--cycle-fraction", gen_cycles, "Cactus cycles per vertex, in [0, 0.5]");
  gen->add_option("--max-out-degree", gen_max_out, "Children cap for trees, 0 for none");

  // burn
  auto* burn = app.add_subcommand("burn", "Run an approximation algorithm on a graph file");
  std::string burn_file;
  std::string burn_alg;
  std::string burn_out;
  burn->add_option("graph", burn_file, "Graph file")->required();
  burn->add_option("--alg", burn_alg, "cactus275, poly3, arb2, arb1905 or baseline3")
      ->required()
      ->check(CLI::IsMember(algorithm_names()));
  burn->add_option("--schedule-out", burn_out, "Also write the schedule line here");

  // exact
  auto* exact = app.add_subcommand("exact", "Exact burning number by exhaustive search");
  std::string exact_file;
  std::size_t exact_cap = oracle_vertex_cap();
  exact->add_option("graph", exact_file, "Graph file")->required();
  exact->add_option("--oracle-cap", exact_cap, "Largest vertex count to search");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a schedule against a graph");
  std::string verify_graph;
  std::string verify_schedule;
  verify->add_option("graph", verify_graph, "Graph file")->required();
  verify->add_option("schedule", verify_schedule, "File holding one schedule line")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Run algorithms over generated instances");
  std::vector<std::string> bench_classes{"cactus"};
  std::vector<std::size_t> bench_sizes;
  std::vector<std::uint64_t> bench_seeds{1};
  std::vector<std::string> bench_algs;
  std::string bench_format = "csv";
  std::string bench_out;
  BenchOptions bo;
  bo.oracle_cap = oracle_vertex_cap();
  bench->add_option("--classes", bench_classes, "Comma separated classes")->delimiter(',');
  bench->add_option("--sizes", bench_sizes, "Comma separated vertex counts")->delimiter(',')->required();
  bench->add_option("--seeds", bench_seeds, "Comma separated seeds")->delimiter(',');
  bench->add_option("--algs", bench_algs, "Comma separated algorithms (default all)")
      ->delimiter(',')
      ->check(CLI::IsMember(algorithm_names()));
  bench->add_option("--format", bench_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--out", bench_out, "Write the report here instead of stdout");
  bench->add_option("--workers", bo.workers, "Parallel instances");
  bench->add_option("--oracle-cap", bo.oracle_cap, "Run the exact oracle up to this many vertices");
  bench->add_option("--cycle-fraction", bo.cycle_fraction, "Cactus cycles per vertex");
  bench->add_flag("--timing", bo.timing, "Fill the ms column (output stops being reproducible)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      const auto cls = parse_graph_class(gen_class);
      if (!cls) {
        err << "unknown class: " << gen_class << "\n";
        return kUsage;
      }
      std::vector<std::size_t> sizes = gen_n_list;
      if (n_opt->count() > 0) sizes.push_back(gen_n);
      if (sizes.empty()) {
        err << "give --n or --n-list\n";
        return kUsage;
      }
      for (std::size_t n : sizes) {
        GenSpec spec = instance_spec(*cls, n, gen_seed, gen_cycles);
        spec.max_out_degree = gen_max_out;
        AnyGraph g;
        try {
          g = generate(spec);
        } catch (const InvalidInput& e) {
          err << e.what() << "\n";
          return kUsage;
        }
        const auto path = fixture_path(gen_dir, spec);
        write_graph_file(path, g);
        out << path.string() << " " << n << " " << edge_count(g) << "\n";
      }
      return kOk;
    }

    if (burn->parsed()) {
      const AnyGraph g = load_graph(burn_file);
      ApproxResult r;
      try {
        r = run_algorithm(g, burn_alg);
      } catch (const InvalidInput& e) {
        err << e.what() << "\n";
        return kUsage;
      }
      const Verdict v = validate_any(g, r.schedule);
      if (!v.accepted()) {
        err << "internal error, schedule rejected: " << v.describe() << "\n";
        return kVerificationFailed;
      }
      out << "alg: " << burn_alg << "\n"
          << "b_star: " << r.b_star << "\n"
          << "bound: " << r.bound << "\n"
          << "length: " << r.schedule.length() << "\n"
          << "schedule: " << to_line(r.schedule) << "\n";
      if (!burn_out.empty()) write_text(burn_out, to_line(r.schedule) + "\n");
      return kOk;
    }

    if (exact->parsed()) {
      const AnyGraph g = load_graph(exact_file);
      ExactOptions eo;
      eo.max_vertices = exact_cap;
      ExactResult r;
      try {
        r = std::visit([&](const auto& x) { return exact_burning_number(x, eo); }, g);
      } catch (const InvalidInput& e) {
        err << e.what() << "\n";
        return kUsage;
      }
      out << "b: " << r.b << "\n"
          << "schedule: " << to_line(r.witness) << "\n";
      return kOk;
    }

    if (verify->parsed()) {
      const AnyGraph g = load_graph(verify_graph);
      const BurningSchedule s = parse_schedule(read_text(verify_schedule));
      const Verdict v = validate_any(g, s);
      if (v.accepted()) {
        out << "accept\n";
        return kOk;
      }
      out << "reject: " << v.describe() << "\n";
      return kVerificationFailed;
    }

    if (bench->parsed()) {
      if (bench_sizes.empty() || std::count(bench_sizes.begin(), bench_sizes.end(), 0u) > 0) {
        err << "--sizes must list positive vertex counts\n";
        return kUsage;
      }
      for (const auto& name : bench_classes) {
        const auto cls = parse_graph_class(name);
        if (!cls) {
          err << "unknown class: " << name << "\n";
          return kUsage;
        }
        bo.classes.push_back(*cls);
      }
      bo.sizes = bench_sizes;
      bo.seeds = bench_seeds;
      bo.algs = bench_algs;
      const auto rows = run_bench(bo);
      const std::string report = bench_format == "json" ? to_json(rows) : to_csv(rows);
      if (bench_out.empty()) {
        out << report;
      } else {
        write_text(bench_out, report);
      }
      const bool all_ok = std::all_of(rows.begin(), rows.end(), [](const BenchRecord& r) { return r.ok(); });
      return all_ok ? kOk : kVerificationFailed;
    }
  } catch (const std::ios_base::failure& e) {
    err << e.what() << "\n";
    return kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << e.what() << "\n";
    return kIoError;
  } catch (const InvalidInput& e) {
    err << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace burnlab::cli
