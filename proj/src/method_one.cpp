#include "p5col/method_one.hpp"

#include "p5col/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace p5col {

namespace {

std::optional<std::vector<Colour>> greedy_colouring(const Graph& g, const VertexSet& s, ColourSet palette) {
  std::vector<Colour> colour(g.vertex_count(), 0);
  for (Vertex v : s) {
    ColourSet free = palette;
    for (Vertex u : g.neighbours(v) & s) {
      if (colour[u] != 0) free.erase(colour[u]);
    }
    if (free.empty()) return std::nullopt;
    colour[v] = free.front();
  }
  return colour;
}

}  // namespace

std::optional<StableSetDecomposition> stable_decomposition(const Instance& inst, const VertexSet& a,
                                                           const RegionColourer& colour_region) {
  const Graph& g = inst.graph();
  const VertexSet source = inst.unassigned_in(a);
  const ColourSet palette = col(inst, source);

  auto colouring = greedy_colouring(g, source, palette);
  if (!colouring && !source.empty()) {
    // Coloured in isolation: vertices outside a must not constrain G(a).
    const Graph sub = induced_subgraph(g, source);
    const Instance uniform(sub, std::vector<ColourSet>(sub.vertex_count(), palette), palette);
    const auto sub_colouring = colour_region(uniform, sub.all_vertices());
    if (!sub_colouring) return std::nullopt;
    colouring.emplace(g.vertex_count(), 0);
    Vertex i = 0;
    for (Vertex v : source) (*colouring)[v] = (*sub_colouring)[i++];
  }

  StableSetDecomposition out{source, {}};
  for (Colour c : palette.members()) {
    VertexSet part(g.vertex_count());
    for (Vertex v : source) {
      if ((*colouring)[v] == c) part.insert(v);
    }
    if (!part.empty()) out.parts.push_back(std::move(part));
  }
  return out;
}

DependentPair dependent_pair(const Instance& inst, const VertexSet& x, const VertexSet& y) {
  const Graph& g = inst.graph();
  DependentPair out{g.empty_set(), g.empty_set()};
  for (Vertex u : x) {
    for (Vertex w : g.neighbours(u) & y) {
      if (inst.list(u).intersects(inst.list(w))) {
        out.x_side.insert(u);
        out.y_side.insert(w);
      }
    }
  }
  return out;
}

Vertex lemma1_vertex(const Instance& inst, const DependentPair& pair) {
  if (pair.empty()) throw std::invalid_argument("lemma1_vertex needs a nonempty dependent pair");
  const Graph& g = inst.graph();
  const VertexSet& ys = pair.y_side;

  Vertex best = pair.x_side.front();
  std::size_t best_count = 0;
  for (Vertex x : pair.x_side) {
    const std::size_t count = (g.neighbours(x) & ys).size();
    if (count > best_count) {
      best = x;
      best_count = count;
    }
  }
  if (ys.is_subset_of(g.neighbours(best))) return best;

  // The selection failed: rebuild the configuration of the domination
  // argument. y2 is missed by x1, x2 is a dependent neighbour of y2, and y1
  // is a neighbour of x1 that x2 misses (it exists since x1 has at least as
  // many neighbours in Y' as x2).
  const Vertex x1 = best;
  const Vertex y2 = (ys - g.neighbours(x1)).front();
  Vertex x2 = x1;
  for (Vertex x : pair.x_side & g.neighbours(y2)) {
    if (dependent(inst, x, y2)) {
      x2 = x;
      break;
    }
  }
  const VertexSet only_x1 = (g.neighbours(x1) & ys) - g.neighbours(x2);
  std::vector<Vertex> witness{x1, x2, y2};
  std::optional<P5Certificate> preferred;
  if (!only_x1.empty()) {
    const Vertex y1 = only_x1.front();
    witness.push_back(y1);
    for (Vertex v = 0; v < g.vertex_count() && !preferred; ++v) {
      for (const P5Certificate cand : {P5Certificate{{y1, x1, v, x2, y2}}, P5Certificate{{x1, y1, v, y2, x2}}}) {
        if (is_induced_p5(g, cand)) {
          preferred = cand;
          witness.push_back(v);
          break;
        }
      }
    }
  }
  raise_structure_error(g, Violation::no_lemma1_vertex, preferred, witness,
                        "no vertex of X' is adjacent to all of Y' " + ys.to_string());
}

std::vector<Instance> remove_stable_pair(const Instance& inst, const VertexSet& x, const VertexSet& y,
                                         SearchContext& ctx) {
  std::vector<Instance> leaves;
  std::vector<Instance> stack{inst};
  while (!stack.empty()) {
    Instance cur = std::move(stack.back());
    stack.pop_back();
    if (cur.dead()) {
      leaves.push_back(std::move(cur));
      continue;
    }
    const DependentPair pair = dependent_pair(cur, x, y);
    if (pair.empty()) {
      leaves.push_back(std::move(cur));
      continue;
    }
    const Vertex pick = lemma1_vertex(cur, pair);
    const ColourSet target = col(cur, pair.y_side);
    auto children = branch_on_vertex(cur, pick, target);
    ctx.count_instances(children.size());
    if (ctx.tracing()) {
      ctx.trace({cur.depth(), "m1-branch", pick, target, children.size(), "y=" + pair.y_side.to_string()});
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
  ctx.note_stable_pair_leaves(leaves.size());
  return leaves;
}

std::vector<Instance> remove_fixed_pair_m1(const Instance& inst, const VertexSet& a, const VertexSet& b,
                                           const RegionColourer& colour_region, SearchContext& ctx) {
  const auto parts_a = stable_decomposition(inst, a, colour_region);
  if (!parts_a) return {};
  const auto parts_b = stable_decomposition(inst, b, colour_region);
  if (!parts_b) return {};

  std::vector<Instance> current{inst};
  for (const VertexSet& ai : parts_a->parts) {
    for (const VertexSet& bj : parts_b->parts) {
      std::vector<Instance> next;
      for (const Instance& leaf : current) {
        for (Instance& child : remove_stable_pair(leaf, ai, bj, ctx)) {
          if (!child.dead()) next.push_back(std::move(child));
        }
      }
      current = std::move(next);
      if (current.empty()) return current;
    }
  }
  return current;
}

}  // namespace p5col
