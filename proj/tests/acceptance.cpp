// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "cli_runner.hpp"
#include "json.hpp"
#include "oracle.hpp"
#include "ramsey/ramsey.hpp"

namespace {

using namespace ramsey;
using clock_type = std::chrono::steady_clock;
using json = nlohmann::json;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Verdict witness_certification() {
  const auto t0 = clock_type::now();
  const std::string text = cli::slurp(cli::fixture("witness_k58.g6"));
  const SimpleGraph g = graph6_decode(text);
  if (g.size() != 58) return {false, fmt("decoded n=%zu", g.size())};
  // The published graph is the K_6-free color; its complement is K_5-free.
  const EdgeColoring coloring = coloring_from_graph(g, Color::Two);
  const Certificate cert = verify(coloring, 5, 6);
  const PenaltyReport report = count(coloring, SearchParams::defaults_for(5, 6));
  const double secs = seconds_since(t0);
  const bool ok = cert.accepted() && report.weighted == 0 && secs < 5.0;
  return {ok, fmt("n=58 verifier=%s cliques1=%llu cliques2=%llu time=%.3fs (limit 5s)",
                  cert.accepted() ? "ACCEPT" : "REJECT", (unsigned long long)report.cliques1,
                  (unsigned long long)report.cliques2, secs)};
}

Verdict oracle_equivalence() {
  std::size_t colorings = 0, checks = 0, mismatches = 0;
  for (std::size_t n : {8u, 10u, 12u}) {
    for (auto [s, t] : {std::pair{3, 3}, {3, 4}, {4, 4}, {5, 6}}) {
      const SearchParams p = SearchParams::defaults_for(s, t);
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const double p1 = 0.25 + 0.5 * static_cast<double>(seed % 5) / 4.0;
        const EdgeColoring g = oracle::random_coloring(n, 7919 * n + 31 * s + t + 1000 * seed, p1);
        ++colorings;
        ++checks;
        if (!(count(g, p) == oracle::count(g, p))) ++mismatches;
        for (const Edge& e : all_edges(n)) {
          for (Color c : {Color::One, Color::Two}) {
            ++checks;
            if (ecount(g, e, c, p) != oracle::ecount(g, e, c, p.order(c))) ++mismatches;
          }
        }
      }
    }
  }
  return {mismatches == 0, fmt("%zu colorings, %zu exact comparisons, %zu mismatches", colorings,
                               checks, mismatches)};
}

Verdict delta_accounting() {
  std::mt19937_64 gen(20240601);
  const std::pair<int, int> orders[] = {{3, 3}, {3, 4}, {4, 4}, {5, 6}, {3, 5}, {4, 5}};
  std::size_t mismatches = 0;
  constexpr int kTrials = 1500;
  for (int trial = 0; trial < kTrials; ++trial) {
    const std::size_t n = 4 + gen() % 11;  // 4..14
    const auto [s, t] = orders[gen() % std::size(orders)];
    SearchParams p = SearchParams::defaults_for(s, t);
    p.weights = {static_cast<std::int64_t>(1 + gen() % 7), static_cast<std::int64_t>(1 + gen() % 7)};
    EdgeColoring g = oracle::random_coloring(n, gen(), 0.3 + 0.1 * static_cast<double>(gen() % 5));
    const Edge e = edge_at(n, gen() % edge_count(n));
    const std::int64_t d = delta(g, e, p);
    const std::int64_t before = oracle::count(g, p).weighted;
    g.flip(e);
    if (oracle::count(g, p).weighted - before != d) ++mismatches;
  }
  return {mismatches == 0, fmt("%d (coloring, edge) pairs at n<=14, %zu mismatches", kTrials, mismatches)};
}

Verdict known_searches() {
  struct Case {
    std::size_t n;
    int s, t;
    double per_seed_limit;  // seconds, 0: aggregate only
    double aggregate_limit;
    bool every_seed;
  };
  const Case cases[] = {{5, 3, 3, 1.0, 0, true},
                        {8, 3, 4, 10.0, 0, true},
                        {13, 3, 5, 120.0, 0, true},
                        {17, 4, 4, 0, 600.0, false}};
  bool ok = true;
  std::string detail;
  for (const Case& c : cases) {
    int successes = 0;
    double worst = 0, total = 0;
    bool verified = true;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const SearchParams p = SearchParams::defaults_for(c.s, c.t, seed);
      const auto t0 = clock_type::now();
      const SearchOutcome out = greedy_pass_search(c.n, p, StallPolicy::defaults_for(c.n));
      const double secs = seconds_since(t0);
      worst = std::max(worst, secs);
      total += secs;
      if (out.status == SearchStatus::Success) {
        ++successes;
        verified = verified && verify(out.coloring, c.s, c.t).accepted();
      }
    }
    bool case_ok = verified;
    if (c.every_seed) {
      case_ok = case_ok && successes == 10 && worst < c.per_seed_limit;
    } else {
      case_ok = case_ok && successes >= 1 && total < c.aggregate_limit;
    }
    ok = ok && case_ok;
    detail += fmt("(%d,%d)@n=%zu %d/10 ok, max %.3fs, total %.3fs; ", c.s, c.t, c.n, successes, worst, total);
  }
  return {ok, detail};
}

Verdict impossibility() {
  int stalled = 0, successes = 0;
  for (int seed = 1; seed <= 20; ++seed) {
    const auto r = cli::run("search --n 6 --s 3 --t 3 --seed " + std::to_string(seed));
    if (r.exit_code == 1) ++stalled;
    for (const char* strategy : {"greedy", "steepest"}) {
      SearchParams p = SearchParams::defaults_for(3, 3, static_cast<std::uint64_t>(seed));
      const auto out = run_search(std::string_view(strategy) == "greedy" ? Strategy::Greedy : Strategy::Steepest,
                                  6, p, StallPolicy::defaults_for(6));
      if (out.status == SearchStatus::Success) ++successes;
    }
  }
  return {stalled == 20 && successes == 0,
          fmt("CLI stalled exit on %d/20 seeds; library successes %d/40", stalled, successes)};
}

Verdict determinism() {
  const auto dir = cli::temp_dir("acceptance_det");
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::size_t> workers{1, 4, std::max<std::size_t>(hw, 2)};
  std::vector<std::string> traces;
  for (std::size_t w : workers) {
    const auto path = dir / ("trace_" + std::to_string(w) + ".jsonl");
    const auto r = cli::run("search --n 24 --s 4 --t 5 --strategy steepest --seed 7 --max-flips 400 "
                            "--max-restarts 1 --workers " + std::to_string(w) + " --trace " + path.string());
    if (r.exit_code != 0 && r.exit_code != 1) return {false, fmt("search exit %d", r.exit_code)};
    traces.push_back(cli::slurp(path));
  }
  const bool same_traces = !traces[0].empty() && traces[0] == traces[1] && traces[0] == traces[2];

  bool same_vectors = true;
  const SearchParams p = SearchParams::defaults_for(5, 6, 3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng init(derive_seed(seed, StreamTag::Init, 0));
    const EdgeColoring g = random_init(58, p, init);
    const auto base = evaluate_all_deltas(g, p, 1);
    for (std::size_t w : {2u, 4u, 7u, 414u}) same_vectors = same_vectors && evaluate_all_deltas(g, p, w) == base;
  }
  return {same_traces && same_vectors,
          fmt("trace bytes %zu, identical across workers {1,4,%zu}: %s; delta vectors identical: %s",
              traces[0].size(), workers[2], same_traces ? "yes" : "no", same_vectors ? "yes" : "no")};
}

Verdict codec_exactness() {
  const std::string text = cli::slurp(cli::fixture("witness_k58.g6"));
  const std::string stripped = graph6_strip(text);
  const bool witness_ok = graph6_encode(graph6_decode(text)) == stripped && stripped.size() == 277;
  std::mt19937_64 gen(62);
  int lossless = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + gen() % 62;
    SimpleGraph g(n);
    for (const Edge& e : all_edges(n)) {
      if (gen() & 1) g.add_edge(e.u, e.v);
    }
    const std::string s = graph6_encode(g);
    if (graph6_decode(s) == g && graph6_encode(graph6_decode(s)) == s) ++lossless;
  }
  return {witness_ok && lossless == 200,
          fmt("witness re-encode byte-exact: %s (%zu bytes); %d/200 random round-trips lossless",
              witness_ok ? "yes" : "no", stripped.size(), lossless)};
}

Verdict paper_parameterization() {
  const auto dir = cli::temp_dir("acceptance_k58");
  const auto trace = dir / "trace.jsonl";
  const auto t0 = clock_type::now();
  const auto r = cli::run("search --n 58 --s 5 --t 6 --weight1 5 --weight2 4 --p1 0.47 --strategy steepest "
                          "--seed 59 --max-flips 300 --max-restarts 1 --trace " + trace.string());
  const double secs = seconds_since(t0);
  if (r.exit_code != 0 && r.exit_code != 1) return {false, fmt("exit code %d", r.exit_code)};

  std::istringstream in(cli::slurp(trace));
  std::string line;
  std::int64_t last_best = INT64_MAX, prev_weighted = 0, first = -1;
  std::size_t records = 0;
  bool monotone = true, accounted = true;
  while (std::getline(in, line)) {
    const json j = json::parse(line);
    const std::int64_t best = j["best"];
    const std::int64_t weighted = j["weighted"];
    if (best > last_best) monotone = false;
    if (!j["edge"].is_null() && weighted != prev_weighted + j["delta"].get<std::int64_t>()) accounted = false;
    if (first < 0) first = weighted;
    last_best = best;
    prev_weighted = weighted;
    ++records;
  }
  return {records > 1 && monotone && accounted,
          fmt("exit %d, %zu trace records, weighted %lld -> best %lld, best monotone: %s, time %.1fs",
              r.exit_code, records, (long long)first, (long long)last_best, monotone ? "yes" : "no", secs)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"1 witness certification", witness_certification},
      {"2 oracle equivalence", oracle_equivalence},
      {"3 delta accounting", delta_accounting},
      {"4 known-value searches", known_searches},
      {"5 impossibility behavior", impossibility},
      {"6 determinism and parallel purity", determinism},
      {"7 codec exactness", codec_exactness},
      {"8 paper parameterization runs", paper_parameterization},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s [%s] %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
