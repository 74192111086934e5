#include "p5col/search_context.hpp"

#include "p5col/errors.hpp"

#include <sstream>

namespace p5col {

std::string format_trace(const TraceEvent& e) {
  std::ostringstream os;
  os << "depth=" << e.depth << " action=" << e.action;
  if (e.vertex) os << " vertex=" << *e.vertex + 1;
  if (e.colours) os << " colours=" << e.colours->to_string();
  if (e.children) os << " children=" << *e.children;
  if (!e.detail.empty()) os << ' ' << e.detail;
  return os.str();
}

void SearchContext::count_instances(std::uint64_t n) {
  const auto total = instances_.fetch_add(n, std::memory_order_relaxed) + n;
  if (max_instances_ && total > *max_instances_) throw BudgetExceeded(*max_instances_);
}

void SearchContext::trace(const TraceEvent& e) {
  if (!trace_) return;
  const std::string line = format_trace(e);
  std::lock_guard lock(trace_mutex_);
  *trace_ << line << '\n';
}

SolveMetrics SearchContext::metrics() const {
  SolveMetrics m;
  m.instances_created = instances_.load();
  m.max_depth = max_depth_.load();
  m.dominating_searches = dominating_searches_.load();
  m.max_stable_pair_leaves = max_stable_pair_leaves_.load();
  m.max_dynamic_pair_leaves = max_dynamic_pair_leaves_.load();
  return m;
}

void SearchContext::raise_to(std::atomic<std::uint64_t>& slot, std::uint64_t value) {
  auto cur = slot.load(std::memory_order_relaxed);
  while (cur < value && !slot.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

}  // namespace p5col
