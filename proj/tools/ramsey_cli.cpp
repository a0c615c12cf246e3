// ramsey: search for, verify, convert and benchmark 2-colorings of K_n that
// avoid a color-1 K_s and a color-2 K_t.
//
// Exit codes: 0 success, 1 search did not succeed, 2 invalid configuration,
// 3 input parse failure, 4 verification rejected.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramsey/ramsey.hpp"

namespace {

using ramsey::Color;
using ramsey::EdgeColoring;
using json = nlohmann::ordered_json;

enum Exit : int { kOk = 0, kStalled = 1, kInvalid = 2, kParse = 3, kReject = 4 };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& record) { std::cout << record.dump() << '\n'; }

void error_record(const std::string& kind, const std::string& message) {
  std::cerr << json{{"event", "error"}, {"kind", kind}, {"message", message}}.dump() << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write output file '" + path + "'");
  out << contents;
  if (!out) throw ConfigError("failed writing output file '" + path + "'");
}

EdgeColoring load(const std::string& path, const std::string& format, Color graph_color,
                  bool lenient) {
  const std::string text = read_file(path);
  if (format == "matrix") return ramsey::matrix_read(text);
  ramsey::SimpleGraph g = ramsey::graph6_decode(text, {.strict_padding = !lenient});
  if (g.size() < 1) throw ramsey::FormatError("graph6 graph has no vertices");
  return ramsey::coloring_from_graph(g, graph_color);
}

std::string render(const EdgeColoring& coloring, const std::string& format, Color graph_color) {
  if (format == "matrix") return ramsey::matrix_write(coloring);
  return ramsey::graph6_encode(ramsey::graph_of_color(coloring, graph_color)) + "\n";
}

json report_json(const ramsey::PenaltyReport& r) {
  return {{"weighted", r.weighted}, {"cliques1", r.cliques1}, {"cliques2", r.cliques2}};
}

json certificate_json(const ramsey::Certificate& cert, std::size_t n, int s, int t) {
  json j{{"event", "verify"}, {"result", cert.accepted() ? "ACCEPT" : "REJECT"},
         {"n", n}, {"s", s}, {"t", t}};
  if (!cert.accepted()) {
    j["color"] = ramsey::color_number(cert.violation->color);
    j["vertices"] = cert.violation->vertices;
  }
  return j;
}

json trace_json(const ramsey::TraceRecord& r) {
  json j{{"restart", r.restart}, {"iteration", r.iteration}};
  j["edge"] = r.edge ? json(*r.edge) : json(nullptr);
  j["delta"] = r.delta;
  j["weighted"] = r.report.weighted;
  j["cliques1"] = r.report.cliques1;
  j["cliques2"] = r.report.cliques2;
  j["best"] = r.best;
  return j;
}

struct SearchArgs {
  std::size_t n = 0;
  int s = 0;
  int t = 0;
  std::optional<std::int64_t> weight1, weight2;
  std::optional<double> p1;
  std::optional<std::uint64_t> seed;
  std::string strategy;
  std::size_t workers = 1;
  std::optional<std::uint64_t> max_flips;
  std::uint64_t max_restarts = ramsey::StallPolicy::kDefaultRestarts;
  bool allow_reflip = false;
  std::string output;
  std::string format = "graph6";
  int graph_color = 1;
  std::string trace;
  std::uint64_t progress_every = 0;
};

int cmd_search(const SearchArgs& a) {
  if (a.n < 2) throw ConfigError("--n must be >= 2");
  if (a.workers < 1) throw ConfigError("--workers must be >= 1");
  const std::uint64_t seed = a.seed ? *a.seed : ramsey::entropy_seed();
  ramsey::SearchParams params = ramsey::SearchParams::defaults_for(a.s, a.t, seed);
  if (a.weight1) params.weights[0] = *a.weight1;
  if (a.weight2) params.weights[1] = *a.weight2;
  if (a.p1) params.p1 = *a.p1;
  ramsey::StallPolicy policy = ramsey::StallPolicy::defaults_for(a.n);
  if (a.max_flips) policy.max_flips_per_restart = *a.max_flips;
  policy.max_restarts = a.max_restarts;
  policy.no_immediate_reflip = !a.allow_reflip;
  try {
    params.validate();
    policy.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const Color graph_color = ramsey::color_from_number(a.graph_color);

  ramsey::Strategy strategy;
  if (a.strategy.empty()) {
    strategy = (a.s == 5 && a.t == 6) ? ramsey::Strategy::Steepest : ramsey::Strategy::Greedy;
  } else {
    strategy = a.strategy == "greedy" ? ramsey::Strategy::Greedy : ramsey::Strategy::Steepest;
  }

  std::optional<std::ofstream> trace;
  if (!a.trace.empty()) {
    trace.emplace(a.trace, std::ios::binary | std::ios::trunc);
    if (!*trace) throw ConfigError("cannot write trace file '" + a.trace + "'");
  }

  emit({{"event", "seed"}, {"seed", seed}});
  emit({{"event", "config"},
        {"strategy", ramsey::to_string(strategy)},
        {"n", a.n},
        {"s", params.s},
        {"t", params.t},
        {"weight1", params.weights[0]},
        {"weight2", params.weights[1]},
        {"p1", params.p1},
        {"workers", a.workers},
        {"max_flips", policy.max_flips_per_restart},
        {"max_restarts", policy.max_restarts},
        {"no_immediate_reflip", policy.no_immediate_reflip}});

  ramsey::SearchOptions options;
  options.workers = a.workers;
  options.on_record = [&](const ramsey::TraceRecord& r) {
    if (trace) *trace << trace_json(r).dump() << '\n';
    if (a.progress_every != 0 && r.iteration % a.progress_every == 0 && r.edge) {
      std::cerr << json{{"event", "progress"},
                        {"restart", r.restart},
                        {"iteration", r.iteration},
                        {"weighted", r.report.weighted},
                        {"best", r.best}}
                       .dump()
                << '\n';
    }
  };

  const ramsey::SearchOutcome out = ramsey::run_search(strategy, a.n, params, policy, options);
  const std::string g6 = ramsey::graph6_encode(ramsey::graph_of_color(out.coloring, graph_color));
  json result{{"event", "result"},
              {"status", ramsey::to_string(out.status)},
              {"iterations", out.iterations},
              {"restarts", out.restarts}};
  result.update(report_json(out.final_report));
  result["graph_color"] = a.graph_color;
  result["graph6"] = g6;
  emit(result);

  if (out.status != ramsey::SearchStatus::Success) return kStalled;

  if (!a.output.empty()) write_file(a.output, render(out.coloring, a.format, graph_color));
  // Self-check through the same path `verify` uses: decode what we emit.
  const EdgeColoring reread = ramsey::coloring_from_graph(ramsey::graph6_decode(g6), graph_color);
  const ramsey::Certificate cert = ramsey::verify(reread, params.s, params.t);
  emit(certificate_json(cert, a.n, params.s, params.t));
  return cert.accepted() ? kOk : kReject;
}

struct VerifyArgs {
  std::string input;
  std::string format = "graph6";
  int s = 0;
  int t = 0;
  int graph_color = 1;
  bool lenient = false;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.s < 2 || a.t < 2) throw ConfigError("--s and --t must be >= 2");
  const EdgeColoring coloring =
      load(a.input, a.format, ramsey::color_from_number(a.graph_color), a.lenient);
  const ramsey::Certificate cert = ramsey::verify(coloring, a.s, a.t);
  emit(certificate_json(cert, coloring.size(), a.s, a.t));
  return cert.accepted() ? kOk : kReject;
}

struct ConvertArgs {
  std::string input;
  std::string output;
  std::string from = "graph6";
  std::string to = "matrix";
  int graph_color = 1;
  bool lenient = false;
};

int cmd_convert(const ConvertArgs& a) {
  const Color graph_color = ramsey::color_from_number(a.graph_color);
  const EdgeColoring coloring = load(a.input, a.from, graph_color, a.lenient);
  const std::string text = render(coloring, a.to, graph_color);
  if (a.output.empty() || a.output == "-") {
    std::cout << text;
  } else {
    write_file(a.output, text);
  }
  return kOk;
}

struct BenchArgs {
  std::vector<std::size_t> sizes{30, 58, 62};
  std::uint64_t seed = 1;
  std::size_t reps = 20;
  std::size_t workers = 0;  // 0: hardware concurrency
};

int cmd_bench(const BenchArgs& a) {
  using clock = std::chrono::steady_clock;
  const auto seconds = [](clock::time_point t0) {
    return std::chrono::duration<double>(clock::now() - t0).count();
  };
  const std::size_t max_workers =
      a.workers != 0 ? a.workers : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const ramsey::SearchParams params = ramsey::SearchParams::defaults_for(5, 6, a.seed);
  bool all_identical = true;
  for (std::size_t n : a.sizes) {
    if (n < 2) throw ConfigError("bench sizes must be >= 2");
    ramsey::Rng init(ramsey::derive_seed(a.seed, ramsey::StreamTag::Init, 0));
    const EdgeColoring coloring = ramsey::random_init(n, params, init);
    const auto edges = ramsey::all_edges(n);

    auto t0 = clock::now();
    ramsey::PenaltyReport report;
    for (std::size_t r = 0; r < a.reps; ++r) report = ramsey::count(coloring, params);
    const double count_s = seconds(t0);

    t0 = clock::now();
    std::uint64_t sink = 0;
    for (std::size_t r = 0; r < a.reps; ++r) {
      for (const auto& e : edges) {
        sink += ramsey::ecount(coloring, e, Color::One, params);
        sink += ramsey::ecount(coloring, e, Color::Two, params);
      }
    }
    const double ecount_s = seconds(t0);

    ramsey::DeltaEvaluator serial(n, 1);
    ramsey::DeltaEvaluator parallel(n, max_workers);
    t0 = clock::now();
    std::vector<ramsey::EdgeDelta> d1;
    for (std::size_t r = 0; r < a.reps; ++r) d1 = serial.evaluate(coloring, params);
    const double sweep1_s = seconds(t0);
    t0 = clock::now();
    std::vector<ramsey::EdgeDelta> dn;
    for (std::size_t r = 0; r < a.reps; ++r) dn = parallel.evaluate(coloring, params);
    const double sweepn_s = seconds(t0);
    const bool identical = d1 == dn;
    all_identical = all_identical && identical;

    const auto rate = [&](double units, double secs) { return secs > 0 ? units / secs : 0.0; };
    emit({{"event", "bench"},
          {"n", n},
          {"edges_per_sweep", edges.size()},
          {"reps", a.reps},
          {"weighted", report.weighted},
          {"count_per_sec", rate(static_cast<double>(a.reps), count_s)},
          {"ecount_per_sec", rate(2.0 * static_cast<double>(a.reps * edges.size()), ecount_s)},
          {"sweeps_per_sec_1", rate(static_cast<double>(a.reps), sweep1_s)},
          {"sweeps_per_sec_max", rate(static_cast<double>(a.reps), sweepn_s)},
          {"workers_max", max_workers},
          {"deltas_identical", identical},
          {"checksum", sink}});
  }
  return all_identical ? kOk : kReject;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Search for and verify Ramsey (s,t)-colorings of complete graphs"};
  app.require_subcommand(1);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Run a local search for an (s,t)-good coloring of K_n");
  search->add_option("--n", sa.n, "Number of vertices")->required();
  search->add_option("--s", sa.s, "Clique order forbidden in color 1")->required();
  search->add_option("--t", sa.t, "Clique order forbidden in color 2")->required();
  search->add_option("--weight1", sa.weight1, "Penalty per color-1 K_s (default 5 for (5,6), else 1)");
  search->add_option("--weight2", sa.weight2, "Penalty per color-2 K_t (default 4 for (5,6), else 1)");
  search->add_option("--p1", sa.p1, "Probability of color 1 (default 0.47 for (5,6), else 0.5)");
  search->add_option("--seed", sa.seed, "RNG seed (drawn and printed when omitted)");
  search->add_option("--strategy", sa.strategy, "greedy or steepest (default steepest for (5,6))")
      ->check(CLI::IsMember({"greedy", "steepest"}));
  search->add_option("--workers", sa.workers, "Threads for delta evaluation");
  search->add_option("--max-flips", sa.max_flips, "Flips per restart (default 50*n^2)");
  search->add_option("--max-restarts", sa.max_restarts, "Restarts allowed, 0 = unlimited");
  search->add_flag("--allow-reflip", sa.allow_reflip, "Permit flipping the previous edge again");
  search->add_option("--output", sa.output, "Write the coloring here on success");
  search->add_option("--format", sa.format, "Output format")->check(CLI::IsMember({"graph6", "matrix"}));
  search->add_option("--graph-color", sa.graph_color, "Color whose graph graph6 describes")
      ->check(CLI::IsMember({1, 2}));
  search->add_option("--trace", sa.trace, "Write a JSON-lines trace to this file");
  search->add_option("--progress-every", sa.progress_every, "Progress line on stderr every N iterations");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check that a coloring has no color-1 K_s and no color-2 K_t");
  verify->add_option("--input", va.input, "Coloring file")->required();
  verify->add_option("--format", va.format, "Input format")->check(CLI::IsMember({"graph6", "matrix"}));
  verify->add_option("--s", va.s, "Clique order forbidden in color 1")->required();
  verify->add_option("--t", va.t, "Clique order forbidden in color 2")->required();
  verify->add_option("--graph-color", va.graph_color, "Color whose graph graph6 describes")
      ->check(CLI::IsMember({1, 2}));
  verify->add_flag("--lenient-padding", va.lenient, "Accept nonzero graph6 padding bits");

  ConvertArgs ca;
  auto* convert = app.add_subcommand("convert", "Convert between graph6 and matrix text");
  convert->add_option("--input", ca.input, "Input file")->required();
  convert->add_option("--output", ca.output, "Output file (stdout when omitted)");
  convert->add_option("--from", ca.from, "Input format")->check(CLI::IsMember({"graph6", "matrix"}));
  convert->add_option("--to", ca.to, "Output format")->check(CLI::IsMember({"graph6", "matrix"}));
  convert->add_option("--graph-color", ca.graph_color, "Color whose graph graph6 describes")
      ->check(CLI::IsMember({1, 2}));
  convert->add_flag("--lenient-padding", ca.lenient, "Accept nonzero graph6 padding bits");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Time the clique counting kernels");
  bench->add_option("--n", ba.sizes, "Vertex counts (default 30 58 62)");
  bench->add_option("--seed", ba.seed, "Seed for the benchmark colorings");
  bench->add_option("--reps", ba.reps, "Repetitions per measurement");
  bench->add_option("--workers", ba.workers, "Parallel workers (default: hardware threads)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*search) return cmd_search(sa);
    if (*verify) return cmd_verify(va);
    if (*convert) return cmd_convert(ca);
    if (*bench) return cmd_bench(ba);
  } catch (const ramsey::FormatError& e) {
    error_record("parse", e.what());
    return kParse;
  } catch (const ConfigError& e) {
    error_record("config", e.what());
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    error_record("config", e.what());
    return kInvalid;
  } catch (const std::exception& e) {
    error_record("internal", e.what());
    return kInvalid;
  }
  return kInvalid;
}
