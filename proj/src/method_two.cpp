#include "p5col/method_two.hpp"

#include "p5col/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace p5col {

namespace {

using ComponentMask = boost::dynamic_bitset<std::uint64_t>;

// Which of the given components have at least one neighbour of v.
ComponentMask touched_components(const Graph& g, Vertex v, const std::vector<VertexSet>& comps) {
  ComponentMask mask(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (g.neighbours(v).intersects(comps[i])) mask.set(i);
  }
  return mask;
}

// Members of s with a dependent neighbour in t.
VertexSet dependent_members(const Instance& inst, const VertexSet& s, const VertexSet& t) {
  const Graph& g = inst.graph();
  VertexSet out(g.vertex_count());
  for (Vertex u : s) {
    for (Vertex w : g.neighbours(u) & t) {
      if (inst.list(u).intersects(inst.list(w))) {
        out.insert(u);
        break;
      }
    }
  }
  return out;
}

bool has_dependency(const Instance& inst, const VertexSet& a, const VertexSet& b) {
  return !dependent_members(inst, a, b).empty();
}

std::vector<ColourSet> nonempty_subsets(ColourSet s) {
  std::vector<ColourSet> out;
  const std::uint64_t full = s.mask();
  for (std::uint64_t m = full; m != 0; m = (m - 1) & full) out.push_back(ColourSet::from_mask(m));
  return out;
}

std::size_t single_fixed_index(const FixedSetPartition& partition, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("empty dynamic block");
  const auto idx = partition.fixed_index_of(s.front());
  if (!idx || !s.is_subset_of(partition.fixed_sets[*idx])) {
    throw std::invalid_argument("block " + s.to_string() + " does not lie inside one fixed set");
  }
  return *idx;
}

}  // namespace

DynamicPartition dynamic_partition(const Instance& inst, const VertexSet& fixed_set) {
  DynamicPartition out;
  for (Vertex v : fixed_set) {
    if (inst.is_assigned(v) || inst.list(v).empty()) continue;
    auto [it, inserted] = out.by_list.try_emplace(inst.list(v), inst.vertex_count());
    it->second.insert(v);
  }
  return out;
}

std::vector<BlockPair> pair_schedule(const std::vector<ColourSet>& p_lists, const std::vector<ColourSet>& q_lists) {
  std::vector<BlockPair> out;
  for (ColourSet p : p_lists) {
    for (ColourSet q : q_lists) out.push_back({p, q});
  }
  std::sort(out.begin(), out.end(), [](const BlockPair& a, const BlockPair& b) {
    if (a.p.size() != b.p.size()) return a.p.size() > b.p.size();
    if (a.q.size() != b.q.size()) return a.q.size() > b.q.size();
    if (a.p != b.p) return lex_less(a.p, b.p);
    return lex_less(a.q, b.q);
  });
  return out;
}

std::vector<BlockPair> pair_schedule(const DynamicPartition& pa, const DynamicPartition& pb) {
  std::vector<ColourSet> p_lists;
  std::vector<ColourSet> q_lists;
  for (const auto& [list, members] : pa.by_list) p_lists.push_back(list);
  for (const auto& [list, members] : pb.by_list) q_lists.push_back(list);
  return pair_schedule(p_lists, q_lists);
}

Pivot find_pivot(const Instance& inst, const FixedSetPartition& partition, const VertexSet& p, const VertexSet& q) {
  const std::size_t a = single_fixed_index(partition, p);
  const std::size_t b = single_fixed_index(partition, q);
  if (a == b) throw std::invalid_argument("both blocks lie in fixed set " + std::to_string(a));

  const Pivot pivot{partition.dominators[std::min(a, b)], a < b ? Side::p : Side::q};
  const Graph& g = inst.graph();
  const VertexSet& covered = pivot.dominated == Side::p ? p : q;
  const VertexSet& missed = pivot.dominated == Side::p ? q : p;
  if (!covered.is_subset_of(g.neighbours(pivot.vertex)) || missed.intersects(g.neighbours(pivot.vertex))) {
    throw std::logic_error("pivot " + std::to_string(pivot.vertex) + " breaks the fixed-set invariants");
  }
  return pivot;
}

HGraph build_h(const Instance& inst, const VertexSet& p, const VertexSet& q, Vertex pivot) {
  const Graph& g = inst.graph();
  if (!q.is_subset_of(g.neighbours(pivot)) || p.intersects(g.neighbours(pivot))) {
    throw std::invalid_argument("pivot must dominate the Q block and miss the P block");
  }
  const VertexSet p_dep = dependent_members(inst, p, q);
  const VertexSet q_dep = dependent_members(inst, q, p);

  HGraph h{{}, {}, g.empty_set(), g.empty_set(), pivot};
  for (VertexSet& c : components_within(g, p)) {
    if (c.intersects(p_dep)) {
      h.p_vertices |= c;
      h.p_side.push_back(std::move(c));
    }
  }
  for (VertexSet& c : components_within(g, q)) {
    if (c.intersects(q_dep)) {
      h.q_vertices |= c;
      h.q_side.push_back(std::move(c));
    }
  }

  const auto parts = components_within(g, h.p_vertices | h.q_vertices);
  if (parts.size() > 1) {
    // One dependent cross edge from each of two parts gives a, b, v, d, c.
    auto cross_edge = [&](const VertexSet& part) {
      for (Vertex a : part & p_dep) {
        for (Vertex b : g.neighbours(a) & part & q) {
          if (dependent(inst, a, b)) return Edge{a, b};
        }
      }
      throw std::logic_error("H part without a dependent cross edge");
    };
    const auto [a, b] = cross_edge(parts[0]);
    const auto [c, d] = cross_edge(parts[1]);
    raise_structure_error(g, Violation::h_disconnected, P5Certificate{{a, b, pivot, d, c}}, {a, b, pivot, d, c},
                          "H minus its pivot splits into " + std::to_string(parts.size()) + " parts");
  }
  return h;
}

std::optional<VertexSet> find_crossing_component(const Instance& inst, const HGraph& h) {
  const Graph& g = inst.graph();
  struct Crossing {
    std::size_t component;
    Vertex a, b;
    std::size_t y1, y2;
  };
  std::optional<Crossing> found;

  for (std::size_t ci = 0; ci < h.p_side.size(); ++ci) {
    const auto members = h.p_side[ci].to_vector();
    std::vector<ComponentMask> touched;
    touched.reserve(members.size());
    for (Vertex v : members) touched.push_back(touched_components(g, v, h.q_side));

    std::optional<Crossing> here;
    for (std::size_t i = 0; i < members.size() && !here; ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const ComponentMask only_i = touched[i] - touched[j];
        const ComponentMask only_j = touched[j] - touched[i];
        if (only_i.any() && only_j.any()) {
          here = Crossing{ci, members[i], members[j], only_i.find_first(), only_j.find_first()};
          break;
        }
      }
    }
    if (!here) continue;
    if (!found) {
      found = here;
      continue;
    }
    std::vector<Vertex> witness{found->a, found->b, here->a, here->b, h.pivot};
    for (std::size_t y : {found->y1, found->y2, here->y1, here->y2}) {
      for (Vertex v : h.q_side[y]) witness.push_back(v);
    }
    std::sort(witness.begin(), witness.end());
    witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
    raise_structure_error(g, Violation::two_crossing_components, std::nullopt, witness,
                          "components " + h.p_side[found->component].to_string() + " and " + h.p_side[ci].to_string() +
                              " both cross");
  }
  if (!found) return std::nullopt;
  return h.p_side[found->component];
}

std::vector<Instance> remove_component(const Instance& inst, const VertexSet& c, SearchContext& ctx) {
  const Graph& g = inst.graph();
  const VertexSet active = inst.unassigned_in(c);
  if (active.empty()) return {inst};
  if (!is_connected_within(g, active)) throw std::invalid_argument("component " + active.to_string() + " is not connected");

  const std::size_t cap = static_cast<std::size_t>(col(inst, active).size());
  if (find_clique_of_size(g, active, cap + 1)) return {};
  ctx.count_dominating_search();
  const auto seed = find_dominating_seed(g, active, cap);
  if (!seed) {
    raise_structure_error(g, Violation::not_p5_free, std::nullopt, active.to_vector(),
                          "component " + active.to_string() + " has no dominating clique or P3");
  }
  auto children = colour_seed(inst, seed->vertices);
  ctx.count_instances(children.size());
  if (ctx.tracing()) {
    ctx.trace({inst.depth(), "m2-remove-component", std::nullopt, std::nullopt, children.size(),
               "component=" + active.to_string() + " seed=" + seed->vertices.to_string()});
  }
  return children;
}

ClaimChoice claim_vertex(const Instance& inst, const HGraph& h) {
  const Graph& g = inst.graph();
  if (h.empty()) throw std::invalid_argument("claim_vertex on an empty H");

  Vertex best = 0;
  std::size_t best_touched = 0;
  std::size_t best_dominated = 0;
  bool have = false;
  for (Vertex x : h.p_vertices) {
    std::size_t touched = 0;
    std::size_t dominated = 0;
    for (const VertexSet& y : h.q_side) {
      if (g.neighbours(x).intersects(y)) ++touched;
      if (y.is_subset_of(g.neighbours(x))) ++dominated;
    }
    if (!have || touched > best_touched || (touched == best_touched && dominated > best_dominated)) {
      best = x;
      best_touched = touched;
      best_dominated = dominated;
      have = true;
    }
  }

  const ComponentMask seen_by_best = touched_components(g, best, h.q_side);
  if (best_touched < h.q_side.size()) {
    // Some x' sees a component Y2 that best misses; best sees some Y1 that
    // x' misses, giving x, y1, v, y2, x'.
    const std::size_t y2c = (~seen_by_best).find_first();
    for (Vertex other : h.p_vertices) {
      if (!g.neighbours(other).intersects(h.q_side[y2c])) continue;
      const ComponentMask only_best = seen_by_best - touched_components(g, other, h.q_side);
      if (!only_best.any()) continue;
      const Vertex y1 = (g.neighbours(best) & h.q_side[only_best.find_first()]).front();
      const Vertex y2 = (g.neighbours(other) & h.q_side[y2c]).front();
      raise_structure_error(g, Violation::claim_violated, P5Certificate{{best, y1, h.pivot, y2, other}},
                            {best, y1, h.pivot, y2, other}, "no P vertex touches every Q component");
    }
    raise_structure_error(g, Violation::claim_violated, std::nullopt, h.p_vertices.to_vector(),
                          "no P vertex touches every Q component");
  }

  std::vector<std::size_t> partial;
  for (std::size_t i = 0; i < h.q_side.size(); ++i) {
    if (!h.q_side[i].is_subset_of(g.neighbours(best))) partial.push_back(i);
  }
  if (partial.size() > 1) {
    // Two partially seen components give y1', y1, x, y2, y2'.
    auto edge_out = [&](const VertexSet& y) {
      for (Vertex in : y & g.neighbours(best)) {
        const VertexSet out = (g.neighbours(in) & y) - g.neighbours(best);
        if (!out.empty()) return Edge{in, out.front()};
      }
      throw std::logic_error("partially dominated component without a boundary edge");
    };
    const auto [y1, y1o] = edge_out(h.q_side[partial[0]]);
    const auto [y2, y2o] = edge_out(h.q_side[partial[1]]);
    raise_structure_error(g, Violation::claim_violated, P5Certificate{{y1o, y1, best, y2, y2o}},
                          {y1o, y1, best, y2, y2o}, "claim vertex misses two Q components partially");
  }

  ClaimChoice out{best, std::nullopt};
  if (!partial.empty()) out.undominated = h.q_side[partial.front()];
  return out;
}

VertexSet block_members(const Instance& inst, const FixedSetPartition& partition, const DynamicBlock& block) {
  const VertexSet& f = partition.fixed_sets.at(block.fixed_index);
  VertexSet out(inst.vertex_count());
  for (Vertex v : f) {
    if (!inst.is_assigned(v) && inst.list(v) == block.list) out.insert(v);
  }
  return out;
}

namespace {

// After the claim vertex took a colour, the vertices of the partially
// dominated component that stayed in Q are removed component by component.
std::vector<Instance> clear_undominated(const Instance& inst, const VertexSet& undominated, const DynamicBlock& p,
                                        const DynamicBlock& q, const FixedSetPartition& partition,
                                        SearchContext& ctx) {
  const Graph& g = inst.graph();
  std::vector<Instance> out;
  std::vector<Instance> work{inst};
  while (!work.empty()) {
    Instance cur = std::move(work.back());
    work.pop_back();
    if (cur.dead()) continue;
    const VertexSet rest = block_members(cur, partition, q) & undominated;
    const VertexSet p_now = block_members(cur, partition, p);
    std::optional<VertexSet> target;
    for (VertexSet& c : components_within(g, rest)) {
      if (has_dependency(cur, c, p_now)) {
        target = std::move(c);
        break;
      }
    }
    if (!target) {
      out.push_back(std::move(cur));
      continue;
    }
    auto children = remove_component(cur, *target, ctx);
    for (auto it = children.rbegin(); it != children.rend(); ++it) work.push_back(std::move(*it));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Instance> remove_dynamic_pair(const Instance& inst, const DynamicBlock& p_in, const DynamicBlock& q_in,
                                          const FixedSetPartition& partition, SearchContext& ctx) {
  if (p_in.fixed_index == q_in.fixed_index) throw std::invalid_argument("blocks of the same fixed set");
  // The pivot is the dominator of the earlier fixed set; that block is Q.
  const bool swap_roles = p_in.fixed_index < q_in.fixed_index;
  const DynamicBlock& p = swap_roles ? q_in : p_in;
  const DynamicBlock& q = swap_roles ? p_in : q_in;
  const Vertex pivot = partition.dominators[q.fixed_index];
  const ColourSet shared = p.list & q.list;

  std::vector<Instance> leaves;
  std::vector<Instance> stack{inst};
  while (!stack.empty()) {
    Instance cur = std::move(stack.back());
    stack.pop_back();
    if (cur.dead()) continue;
    if (shared.empty()) {
      leaves.push_back(std::move(cur));
      continue;
    }
    const VertexSet p_now = block_members(cur, partition, p);
    const VertexSet q_now = block_members(cur, partition, q);
    const HGraph h = build_h(cur, p_now, q_now, pivot);
    if (h.empty()) {
      leaves.push_back(std::move(cur));
      continue;
    }

    if (auto crossing = find_crossing_component(cur, h)) {
      auto children = remove_component(cur, *crossing, ctx);
      for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
      continue;
    }

    const ClaimChoice choice = claim_vertex(cur, h);
    auto children = branch_on_vertex(cur, choice.x, shared);
    ctx.count_instances(children.size());
    if (ctx.tracing()) {
      ctx.trace({cur.depth(), "m2-claim-branch", choice.x, shared, children.size(),
                 choice.undominated ? "undominated=" + choice.undominated->to_string() : std::string()});
    }
    std::vector<Instance> expanded;
    for (Instance& child : children) {
      if (child.is_assigned(choice.x) && choice.undominated) {
        for (Instance& r : clear_undominated(child, *choice.undominated, p, q, partition, ctx)) {
          expanded.push_back(std::move(r));
        }
      } else {
        expanded.push_back(std::move(child));
      }
    }
    for (auto it = expanded.rbegin(); it != expanded.rend(); ++it) stack.push_back(std::move(*it));
  }
  ctx.note_dynamic_pair_leaves(leaves.size());
  return leaves;
}

std::vector<Instance> remove_fixed_pair_m2(const Instance& inst, std::size_t i, std::size_t j,
                                           const FixedSetPartition& partition, SearchContext& ctx) {
  if (i == j) throw std::invalid_argument("remove_fixed_pair_m2 needs two distinct fixed sets");
  const std::size_t qi = std::min(i, j);
  const std::size_t pi = std::max(i, j);
  const VertexSet& fp = partition.fixed_sets.at(pi);
  const VertexSet& fq = partition.fixed_sets.at(qi);

  // Lists only shrink, so every block these sets can ever form is a subset
  // of their current colour sets.
  std::vector<BlockPair> schedule;
  for (const BlockPair& bp : pair_schedule(nonempty_subsets(col(inst, inst.unassigned_in(fp))),
                                           nonempty_subsets(col(inst, inst.unassigned_in(fq))))) {
    if (bp.p.intersects(bp.q)) schedule.push_back(bp);
  }

  struct State {
    Instance inst;
    std::size_t next;
  };
  std::vector<Instance> leaves;
  std::vector<State> stack{{inst, 0}};
  while (!stack.empty()) {
    State cur = std::move(stack.back());
    stack.pop_back();
    if (cur.inst.dead()) continue;

    if (cur.next == schedule.size()) {
      if (has_dependency(cur.inst, fp, fq)) {
        if (ctx.tracing()) ctx.trace({cur.inst.depth(), "m2-recheck", std::nullopt, std::nullopt, std::nullopt, ""});
        stack.push_back({std::move(cur.inst), 0});
      } else {
        leaves.push_back(std::move(cur.inst));
      }
      continue;
    }

    const BlockPair& bp = schedule[cur.next];
    const DynamicBlock p{pi, bp.p};
    const DynamicBlock q{qi, bp.q};
    if (block_members(cur.inst, partition, p).empty() || block_members(cur.inst, partition, q).empty()) {
      stack.push_back({std::move(cur.inst), cur.next + 1});
      continue;
    }
    auto children = remove_dynamic_pair(cur.inst, p, q, partition, ctx);
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back({std::move(*it), cur.next + 1});
  }
  return leaves;
}

}  // namespace p5col
