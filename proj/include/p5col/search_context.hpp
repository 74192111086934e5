#pragma once

#include "p5col/colour_set.hpp"
#include "p5col/vertex_set.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>

namespace p5col {

struct SolveMetrics {
  std::uint64_t instances_created = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t dominating_searches = 0;
  /// Largest leaf count of one stable-set pair (dependency removal by
  /// dominating vertex) or one dynamic-set pair, respectively.
  std::uint64_t max_stable_pair_leaves = 0;
  std::uint64_t max_dynamic_pair_leaves = 0;
  std::chrono::nanoseconds wall_time{0};
};

/// One structured trace line.
struct TraceEvent {
  std::size_t depth = 0;
  std::string action;
  std::optional<Vertex> vertex;
  std::optional<ColourSet> colours;
  std::optional<std::size_t> children;
  std::string detail;
};

/// "depth=2 action=branch vertex=5 colours={1,2} children=3", with 1-based
/// vertices and absent fields omitted.
std::string format_trace(const TraceEvent& e);

/// Shared state of one solve: counters, the instance budget, the trace sink
/// and a cancellation flag for parallel siblings. Counters are atomic so
/// concurrent workers may update them.
class SearchContext {
 public:
  explicit SearchContext(std::optional<std::uint64_t> max_instances = std::nullopt, std::ostream* trace = nullptr)
      : max_instances_(max_instances), trace_(trace) {}

  SearchContext(const SearchContext&) = delete;
  SearchContext& operator=(const SearchContext&) = delete;

  /// Records n new instances; throws BudgetExceeded past the budget.
  void count_instances(std::uint64_t n);
  void note_depth(std::uint64_t depth) { raise_to(max_depth_, depth); }
  void count_dominating_search() { dominating_searches_.fetch_add(1, std::memory_order_relaxed); }
  void note_stable_pair_leaves(std::uint64_t n) { raise_to(max_stable_pair_leaves_, n); }
  void note_dynamic_pair_leaves(std::uint64_t n) { raise_to(max_dynamic_pair_leaves_, n); }

  bool tracing() const { return trace_ != nullptr; }
  void trace(const TraceEvent& e);

  void cancel() { cancelled_.store(true, std::memory_order_relaxed); }
  bool cancelled() const { return cancelled_.load(std::memory_order_relaxed); }

  SolveMetrics metrics() const;

 private:
  static void raise_to(std::atomic<std::uint64_t>& slot, std::uint64_t value);

  std::optional<std::uint64_t> max_instances_;
  std::ostream* trace_;
  std::mutex trace_mutex_;
  std::atomic<bool> cancelled_{false};
  std::atomic<std::uint64_t> instances_{0};
  std::atomic<std::uint64_t> max_depth_{0};
  std::atomic<std::uint64_t> dominating_searches_{0};
  std::atomic<std::uint64_t> max_stable_pair_leaves_{0};
  std::atomic<std::uint64_t> max_dynamic_pair_leaves_{0};
};

}  // namespace p5col
