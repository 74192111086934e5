#include "p5col/solver.hpp"

#include "p5col/errors.hpp"
#include "p5col/method_one.hpp"
#include "p5col/method_two.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace p5col {

std::string to_string(Method m) { return m == Method::one ? "one" : "two"; }

namespace {

// Colours indexed by vertex; 0 where the search did not decide a colour.
using Partial = std::vector<Colour>;

bool has_cross_dependency(const Instance& inst, const VertexSet& a, const VertexSet& b) {
  const Graph& g = inst.graph();
  for (Vertex u : a) {
    for (Vertex w : g.neighbours(u) & b) {
      if (inst.list(u).intersects(inst.list(w))) return true;
    }
  }
  return false;
}

class Search {
 public:
  Search(SearchContext& ctx, const SolveConfig& cfg, const std::atomic<bool>* stop = nullptr)
      : ctx_(ctx), cfg_(cfg), stop_(stop) {}

  /// Colours every vertex of region from inst's lists. Vertices outside the
  /// region must be assigned or independent of it.
  std::optional<Partial> solve_region(const Instance& inst, const VertexSet& region, std::size_t level) {
    ctx_.note_depth(level);
    if (stopped()) return std::nullopt;
    const Graph& g = inst.graph();

    Partial out(g.vertex_count(), 0);
    for (Vertex v : region) {
      if (inst.list(v).empty()) return std::nullopt;
      if (auto c = inst.assigned(v)) out[v] = *c;
    }
    const VertexSet active = inst.unassigned_in(region);

    bool all_singletons = true;
    for (Vertex v : active) all_singletons = all_singletons && inst.list(v).size() == 1;
    if (all_singletons) {
      for (Vertex v : active) out[v] = inst.list(v).front();
      for (Vertex v : active) {
        for (Vertex u : g.neighbours(v) & active) {
          if (out[u] == out[v]) return std::nullopt;
        }
      }
      return out;
    }

    for (const VertexSet& comp : components_within(g, active)) {
      auto sub = solve_component(inst, comp, level);
      if (!sub) return std::nullopt;
      for (Vertex v : comp) out[v] = (*sub)[v];
    }
    return out;
  }

 private:
  bool stopped() const { return stop_ != nullptr && stop_->load(std::memory_order_relaxed); }

  std::optional<Partial> solve_component(const Instance& inst, const VertexSet& comp, std::size_t level) {
    const Graph& g = inst.graph();
    if (comp.size() == 1) {
      Partial out(g.vertex_count(), 0);
      out[comp.front()] = inst.list(comp.front()).front();
      return out;
    }

    const auto cap = static_cast<std::size_t>(col(inst, comp).size());
    ctx_.count_dominating_search();
    const auto seed = find_dominating_seed(g, comp, cap);
    if (!seed) {
      // Some dominating clique exists and exceeds the palette, so the
      // component holds a clique too large to colour.
      if (find_clique_of_size(g, comp, cap + 1)) {
        if (ctx_.tracing()) ctx_.trace({level, "no-seed", std::nullopt, std::nullopt, 0, "component=" + comp.to_string()});
        return std::nullopt;
      }
      raise_structure_error(g, Violation::not_p5_free, std::nullopt, comp.to_vector(),
                            "component " + comp.to_string() + " has no dominating clique or P3");
    }

    const auto children = colour_seed(inst, seed->vertices);
    ctx_.count_instances(children.size());
    if (ctx_.tracing()) {
      ctx_.trace({level, "seed", std::nullopt, std::nullopt, children.size(),
                  "kind=" + to_string(seed->kind) + " seed=" + seed->vertices.to_string() +
                      " component=" + comp.to_string()});
    }

    if (level == 0 && cfg_.jobs > 1 && children.size() > 1) {
      return solve_seeded_parallel(children, comp, seed->vertices);
    }
    for (const Instance& child : children) {
      if (auto r = solve_seeded(child, comp, seed->vertices, level)) return r;
    }
    return std::nullopt;
  }

  std::optional<Partial> solve_seeded(const Instance& inst, const VertexSet& comp, const VertexSet& seed,
                                      std::size_t level) {
    const FixedSetPartition partition = fixed_set_partition(inst, comp, seed);
    check_partition(inst, comp, partition);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < partition.fixed_sets.size(); ++i) {
      for (std::size_t j = i + 1; j < partition.fixed_sets.size(); ++j) {
        if (!partition.fixed_sets[i].empty() && !partition.fixed_sets[j].empty()) pairs.emplace_back(i, j);
      }
    }
    return descend(inst, partition, pairs, 0, level);
  }

  std::optional<Partial> solve_seeded_parallel(const std::vector<Instance>& children, const VertexSet& comp,
                                               const VertexSet& seed) {
    std::atomic<bool> stop{false};
    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    std::optional<Partial> result;
    std::size_t result_index = std::numeric_limits<std::size_t>::max();
    std::exception_ptr failure;

    auto worker = [&] {
      Search local(ctx_, cfg_, &stop);
      for (;;) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= children.size() || stop.load()) return;
        try {
          auto r = local.solve_seeded(children[idx], comp, seed, 0);
          if (r) {
            std::lock_guard lock(mutex);
            if (idx < result_index) {
              result = std::move(r);
              result_index = idx;
            }
            stop.store(true);
          }
        } catch (...) {
          std::lock_guard lock(mutex);
          if (!failure) failure = std::current_exception();
          stop.store(true);
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      const unsigned n = std::min<std::size_t>(cfg_.jobs, children.size());
      for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return result;
  }

  std::optional<Partial> descend(const Instance& inst, const FixedSetPartition& partition,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs, std::size_t idx,
                                 std::size_t level) {
    if (stopped()) return std::nullopt;
    const auto& sets = partition.fixed_sets;

    if (idx == pairs.size()) {
      for (auto [i, j] : pairs) {
        if (has_cross_dependency(inst, sets[i], sets[j])) {
          throw std::logic_error("fixed sets " + std::to_string(i) + " and " + std::to_string(j) + " still dependent");
        }
      }
      Partial out(inst.vertex_count(), 0);
      for (std::size_t i = 0; i < partition.dominators.size(); ++i) out[partition.dominators[i]] = partition.colours[i];
      for (const VertexSet& f : sets) {
        if (f.empty()) continue;
        auto sub = solve_region(inst, f, level + 1);
        if (!sub) return std::nullopt;
        for (Vertex v : f) out[v] = (*sub)[v];
      }
      return out;
    }

    const auto [a, b] = pairs[idx];
    if (!has_cross_dependency(inst, sets[a], sets[b])) return descend(inst, partition, pairs, idx + 1, level);

    std::vector<Instance> leaves;
    if (cfg_.method == Method::one) {
      const RegionColourer colour_region = [this, level](const Instance& sub, const VertexSet& region) {
        return solve_region(sub, region, level + 1);
      };
      leaves = remove_fixed_pair_m1(inst, sets[a], sets[b], colour_region, ctx_);
    } else {
      leaves = remove_fixed_pair_m2(inst, a, b, partition, ctx_);
    }
    if (ctx_.tracing()) {
      ctx_.trace({level, "fixed-pair", std::nullopt, std::nullopt, leaves.size(),
                  "sets=" + std::to_string(a + 1) + "," + std::to_string(b + 1) + " method=" + to_string(cfg_.method)});
    }
    for (const Instance& leaf : leaves) {
      if (auto r = descend(leaf, partition, pairs, idx + 1, level)) return r;
    }
    return std::nullopt;
  }

  SearchContext& ctx_;
  const SolveConfig& cfg_;
  const std::atomic<bool>* stop_;
};

}  // namespace

Decision solve_list_colouring(const Instance& inst, const SolveConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const Graph& g = inst.graph();
  if (cfg.max_instances && *cfg.max_instances == 0) throw std::invalid_argument("max_instances must be at least 1");

  if (cfg.validate == Validation::full_p5_check) {
    if (auto cert = find_induced_p5(g)) {
      const auto& p = cert->path;
      throw StructureError(Violation::not_p5_free, cert, {p.begin(), p.end()}, "input contains an induced P5");
    }
  }

  SearchContext ctx(cfg.max_instances, cfg.trace);
  ctx.count_instances(1);
  Search search(ctx, cfg);
  auto partial = search.solve_region(inst, g.all_vertices(), 0);

  Decision d;
  if (partial) {
    Colouring c{std::move(*partial)};
    if (!verify_colouring(inst, c)) throw std::logic_error("solver produced an invalid colouring");
    d.outcome = Outcome::sat;
    d.colouring = std::move(c);
  }
  d.metrics = ctx.metrics();
  d.metrics.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return d;
}

Decision k_colourable(const Graph& g, int k, const SolveConfig& cfg) {
  return solve_list_colouring(full_instance(g, k), cfg);
}

bool verify_colouring(const Instance& inst, const Colouring& colouring) {
  const Graph& g = inst.graph();
  if (colouring.colours.size() != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!inst.list(v).contains(colouring.colours[v])) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (colouring.colours[u] == colouring.colours[v]) return false;
  }
  return true;
}

}  // namespace p5col
