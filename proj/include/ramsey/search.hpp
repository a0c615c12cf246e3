#pragma once

// Local search for (s,t)-good colorings.
//
// greedy_pass_search: shuffle the edge list, then give each edge in turn the
// color with the smaller weighted clique count through it; ties go to color
// 1 with probability p1. Passes repeat until the objective reaches zero.
//
// steepest_descent_search: evaluate the flip delta of every edge (in
// parallel), flip one edge of minimum delta, ties broken uniformly by the
// seeded tie stream over the argmin set in edge-index order.
//
// Both restart from a fresh random coloring when the StallPolicy budget runs
// out. Randomness is drawn as documented in rng.hpp.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/params.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

enum class SearchStatus { Success, Stalled, IterationLimit };

inline std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Success: return "success";
    case SearchStatus::Stalled: return "stalled";
    case SearchStatus::IterationLimit: return "iteration-limit";
  }
  return "unknown";
}

enum class Strategy { Greedy, Steepest };

inline std::string_view to_string(Strategy s) {
  return s == Strategy::Greedy ? "greedy" : "steepest";
}

// One line of a search trace. Greedy emits one record per pass, steepest one
// per flip; each attempt also starts with a record carrying no edge.
struct TraceRecord {
  std::uint64_t restart = 0;
  std::uint64_t iteration = 0;          // passes or flips so far, over all attempts
  std::optional<std::uint32_t> edge;    // flipped edge index (steepest only)
  std::int64_t delta = 0;               // objective change of this step
  PenaltyReport report;                 // after the step
  std::int64_t best = 0;                // lowest weighted objective seen so far
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::IterationLimit;
  EdgeColoring coloring{1};
  std::uint64_t iterations = 0;
  std::uint64_t restarts = 0;
  PenaltyReport final_report;
  std::vector<TraceRecord> trace;
};

struct SearchOptions {
  std::size_t workers = 1;
  bool record_trace = false;
  // Full recount every this many iterations, checked against the
  // incrementally maintained report. 0 disables.
  std::uint64_t recount_interval = 64;
  // Replaces the random coloring of the first attempt.
  std::optional<EdgeColoring> start;
  std::function<void(const TraceRecord&)> on_record;
  // Greedy only: called after each edge visit with both weighted scores.
  std::function<void(const Edge&, std::int64_t score1, std::int64_t score2, Color chosen)>
      on_greedy_step;
};

struct EdgeDelta {
  Edge edge;
  std::int64_t delta = 0;

  friend bool operator==(const EdgeDelta&, const EdgeDelta&) = default;
};

// Evaluates delta for every edge, splitting the edge list into contiguous
// chunks, one per worker. The result does not depend on the worker count.
class DeltaEvaluator {
 public:
  DeltaEvaluator(std::size_t n, std::size_t workers) : edges_(all_edges(n)), pool_(workers) {}

  std::size_t workers() const noexcept { return pool_.workers(); }

  const std::vector<EdgeDelta>& evaluate(const EdgeColoring& coloring, const SearchParams& params) {
    if (coloring.edges() != edges_.size()) {
      throw std::invalid_argument("coloring size does not match evaluator");
    }
    out_.resize(edges_.size());
    const std::size_t m = edges_.size();
    const std::size_t w = pool_.workers();
    const std::function<void(std::size_t)> body = [&](std::size_t chunk) {
      const std::size_t lo = m * chunk / w;
      const std::size_t hi = m * (chunk + 1) / w;
      for (std::size_t i = lo; i < hi; ++i) out_[i] = {edges_[i], delta(coloring, edges_[i], params)};
    };
    pool_.run(body);
    return out_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<EdgeDelta> out_;
  StaticPool pool_;
};

inline std::vector<EdgeDelta> evaluate_all_deltas(const EdgeColoring& coloring,
                                                  const SearchParams& params,
                                                  std::size_t workers = 1) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  DeltaEvaluator evaluator(coloring.size(), workers);
  return evaluator.evaluate(coloring, params);
}

// Picks an edge of minimum delta. `excluded` is skipped unless it is the only
// entry. Ties are resolved with one tie.below(k) draw over the k argmin edges
// sorted by index; a unique minimum consumes no randomness.
inline Edge select_min_delta(const std::vector<EdgeDelta>& deltas, Rng& tie,
                             std::optional<Edge> excluded = std::nullopt) {
  if (deltas.empty()) throw std::invalid_argument("select_min_delta on empty input");
  const auto skip = [&](const EdgeDelta& d) {
    return excluded && deltas.size() > 1 && d.edge.index == excluded->index;
  };
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& d : deltas) {
    if (!skip(d)) best = std::min(best, d.delta);
  }
  std::vector<Edge> argmin;
  for (const auto& d : deltas) {
    if (!skip(d) && d.delta == best) argmin.push_back(d.edge);
  }
  std::sort(argmin.begin(), argmin.end(),
            [](const Edge& a, const Edge& b) { return a.index < b.index; });
  if (argmin.size() == 1) return argmin.front();
  return argmin[static_cast<std::size_t>(tie.below(argmin.size()))];
}

namespace detail {

// Bookkeeping shared by both strategies: the best coloring seen, the
// trace, and the periodic recount check.
class SearchState {
 public:
  SearchState(const SearchParams& params, const SearchOptions& options, std::size_t n)
      : params_(params), options_(options), best_coloring_(n) {}

  void begin_attempt(std::uint64_t restart, const EdgeColoring& coloring,
                     const PenaltyReport& report) {
    restart_ = restart;
    observe(coloring, report);
    emit(std::nullopt, 0, report);
  }

  void step(const EdgeColoring& coloring, const PenaltyReport& report,
            std::optional<std::uint32_t> edge, std::int64_t change) {
    ++iterations_;
    if (options_.recount_interval != 0 && iterations_ % options_.recount_interval == 0) {
      const PenaltyReport full = count(coloring, params_);
      if (!(full == report)) {
        throw std::logic_error("incremental objective " + std::to_string(report.weighted) +
                               " disagrees with recount " + std::to_string(full.weighted));
      }
    }
    observe(coloring, report);
    emit(edge, change, report);
  }

  SearchOutcome finish(SearchStatus status) {
    SearchOutcome out;
    out.status = status;
    out.coloring = std::move(best_coloring_);
    out.final_report = best_report_;
    out.iterations = iterations_;
    out.restarts = restart_;
    out.trace = std::move(trace_);
    return out;
  }

  std::uint64_t iterations() const noexcept { return iterations_; }

 private:
  void observe(const EdgeColoring& coloring, const PenaltyReport& report) {
    if (!have_best_ || report.weighted < best_report_.weighted) {
      have_best_ = true;
      best_report_ = report;
      best_coloring_ = coloring;
    }
  }

  void emit(std::optional<std::uint32_t> edge, std::int64_t change, const PenaltyReport& report) {
    if (!options_.record_trace && !options_.on_record) return;
    TraceRecord rec{restart_, iterations_, edge, change, report, best_report_.weighted};
    if (options_.on_record) options_.on_record(rec);
    if (options_.record_trace) trace_.push_back(rec);
  }

  const SearchParams& params_;
  const SearchOptions& options_;
  EdgeColoring best_coloring_;
  PenaltyReport best_report_;
  bool have_best_ = false;
  std::uint64_t restart_ = 0;
  std::uint64_t iterations_ = 0;
  std::vector<TraceRecord> trace_;
};

inline void apply_flip(EdgeColoring& coloring, PenaltyReport& report, const Edge& e,
                       std::uint64_t through_old, std::uint64_t through_new,
                       const SearchParams& params) {
  const Color old_color = coloring.color(e);
  const Color new_color = other(old_color);
  auto& old_count = old_color == Color::One ? report.cliques1 : report.cliques2;
  auto& new_count = new_color == Color::One ? report.cliques1 : report.cliques2;
  old_count -= through_old;
  new_count += through_new;
  report.weighted += params.weight(new_color) * static_cast<std::int64_t>(through_new) -
                     params.weight(old_color) * static_cast<std::int64_t>(through_old);
  coloring.flip(e);
}

inline void check_search_args(std::size_t n, const SearchParams& params, const StallPolicy& policy,
                              const SearchOptions& options) {
  if (n < 2) throw std::invalid_argument("search needs n >= 2");
  params.validate();
  policy.validate();
  if (options.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (options.start && options.start->size() != n) {
    throw std::invalid_argument("start coloring has the wrong size");
  }
}

inline EdgeColoring attempt_start(std::size_t n, const SearchParams& params,
                                  const SearchOptions& options, std::uint64_t restart,
                                  Rng& init) {
  if (restart == 0 && options.start) return *options.start;
  return random_init(n, params, init);
}

inline bool restarts_left(const StallPolicy& policy, std::uint64_t restart) {
  return policy.max_restarts == 0 || restart < policy.max_restarts;
}

}  // namespace detail

inline SearchOutcome greedy_pass_search(std::size_t n, const SearchParams& params,
                                        const StallPolicy& policy,
                                        const SearchOptions& options = {}) {
  detail::check_search_args(n, params, policy, options);
  detail::SearchState state(params, options, n);
  const std::vector<Edge> edges = all_edges(n);
  const std::uint64_t m = edges.size();
  const std::uint64_t pass_budget = std::max<std::uint64_t>(1, (policy.max_flips_per_restart + m - 1) / m);
  std::vector<std::uint32_t> order(edges.size());

  SearchStatus last_end = SearchStatus::IterationLimit;
  for (std::uint64_t restart = 0;; ++restart) {
    AttemptStreams rng(params.seed, restart);
    EdgeColoring coloring = detail::attempt_start(n, params, options, restart, rng.init);
    PenaltyReport report = count(coloring, params);
    state.begin_attempt(restart, coloring, report);

    last_end = SearchStatus::IterationLimit;
    for (std::uint64_t pass = 0; report.weighted != 0 && pass < pass_budget; ++pass) {
      for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
      rng.shuffle.shuffle(std::span<std::uint32_t>(order));

      const std::int64_t before = report.weighted;
      bool changed = false;
      bool tied = false;
      for (std::uint32_t idx : order) {
        const Edge& e = edges[idx];
        const std::uint64_t k1 = ecount(coloring, e, Color::One, params);
        const std::uint64_t k2 = ecount(coloring, e, Color::Two, params);
        const std::int64_t score1 = params.weight(Color::One) * static_cast<std::int64_t>(k1);
        const std::int64_t score2 = params.weight(Color::Two) * static_cast<std::int64_t>(k2);
        Color chosen;
        if (score1 < score2) {
          chosen = Color::One;
        } else if (score2 < score1) {
          chosen = Color::Two;
        } else {
          tied = true;
          chosen = rng.tie.bernoulli(params.p1) ? Color::One : Color::Two;
        }
        const Color current = coloring.color(e);
        if (chosen != current) {
          changed = true;
          const bool was_one = current == Color::One;
          detail::apply_flip(coloring, report, e, was_one ? k1 : k2, was_one ? k2 : k1, params);
        }
        if (options.on_greedy_step) options.on_greedy_step(e, score1, score2, chosen);
      }
      state.step(coloring, report, std::nullopt, report.weighted - before);
      if (!changed && !tied) {
        // Every edge strictly prefers its color: no pass order can move.
        last_end = SearchStatus::Stalled;
        break;
      }
    }
    if (report.weighted == 0) return state.finish(SearchStatus::Success);
    if (!detail::restarts_left(policy, restart)) break;
  }
  return state.finish(last_end);
}

inline SearchOutcome steepest_descent_search(std::size_t n, const SearchParams& params,
                                             const StallPolicy& policy,
                                             const SearchOptions& options = {}) {
  detail::check_search_args(n, params, policy, options);
  detail::SearchState state(params, options, n);
  DeltaEvaluator evaluator(n, options.workers);

  for (std::uint64_t restart = 0;; ++restart) {
    AttemptStreams rng(params.seed, restart);
    EdgeColoring coloring = detail::attempt_start(n, params, options, restart, rng.init);
    PenaltyReport report = count(coloring, params);
    state.begin_attempt(restart, coloring, report);

    std::optional<Edge> previous;
    for (std::uint64_t flips = 0; report.weighted != 0 && flips < policy.max_flips_per_restart;
         ++flips) {
      const auto& deltas = evaluator.evaluate(coloring, params);
      const Edge e = select_min_delta(
          deltas, rng.tie, policy.no_immediate_reflip ? previous : std::nullopt);
      const Color current = coloring.color(e);
      const std::uint64_t through_old = ecount(coloring, e, current, params);
      const std::uint64_t through_new = ecount(coloring, e, other(current), params);
      const std::int64_t before = report.weighted;
      detail::apply_flip(coloring, report, e, through_old, through_new, params);
      if (report.weighted - before != deltas[e.index].delta) {
        throw std::logic_error("flip changed the objective by a different amount than its delta");
      }
      state.step(coloring, report, e.index, report.weighted - before);
      previous = e;
    }
    if (report.weighted == 0) return state.finish(SearchStatus::Success);
    if (!detail::restarts_left(policy, restart)) break;
  }
  return state.finish(SearchStatus::IterationLimit);
}

inline SearchOutcome run_search(Strategy strategy, std::size_t n, const SearchParams& params,
                                const StallPolicy& policy, const SearchOptions& options = {}) {
  return strategy == Strategy::Greedy ? greedy_pass_search(n, params, policy, options)
                                      : steepest_descent_search(n, params, policy, options);
}

}  // namespace ramsey
