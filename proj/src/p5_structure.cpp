#include "p5col/p5_structure.hpp"

#include <stdexcept>

namespace p5col {

namespace {

// Visits the cliques of G(scope) with 1..size_cap vertices, by size and then
// lexicographically, until visit returns true. Only one level of partial
// cliques is kept alive.
template <class Visit>
void visit_cliques(const Graph& g, const VertexSet& scope, std::size_t size_cap, Visit&& visit) {
  struct Partial {
    VertexSet clique;
    VertexSet extensions;  // common neighbours above the largest member
  };
  std::vector<Partial> level;
  for (Vertex v : scope) {
    VertexSet above = g.neighbours(v) & scope;
    for (Vertex u : g.neighbours(v) & scope) {
      if (u > v) break;
      above.erase(u);
    }
    level.push_back({VertexSet(g.vertex_count(), {v}), std::move(above)});
  }
  for (std::size_t size = 1; size <= size_cap && !level.empty(); ++size) {
    for (const auto& p : level) {
      if (visit(p.clique)) return;
    }
    if (size == size_cap) return;
    std::vector<Partial> next;
    for (const auto& p : level) {
      for (Vertex w : p.extensions) {
        VertexSet clique = p.clique;
        clique.insert(w);
        VertexSet ext = p.extensions & g.neighbours(w);
        for (Vertex u : p.extensions) {
          if (u > w) break;
          ext.erase(u);
        }
        next.push_back({std::move(clique), std::move(ext)});
      }
    }
    level = std::move(next);
  }
}

}  // namespace

bool is_induced_p5(const Graph& g, const P5Certificate& cert) {
  const auto& p = cert.path;
  for (std::size_t i = 0; i < 5; ++i) {
    if (p[i] >= g.vertex_count()) return false;
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (p[i] == p[j]) return false;
      if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

std::optional<P5Certificate> find_induced_p5_within(const Graph& g, const VertexSet& scope) {
  // Path a-b-c-d-e. Each extension must be adjacent to the current end and
  // outside the closed neighbourhoods of every earlier vertex but the end.
  auto closed = [&](Vertex v) {
    VertexSet s = g.neighbours(v);
    s.insert(v);
    return s;
  };
  for (Vertex a : scope) {
    const VertexSet na = closed(a);
    for (Vertex b : g.neighbours(a) & scope) {
      const VertexSet nb = closed(b);
      const VertexSet c_cand = (g.neighbours(b) & scope) - na;
      for (Vertex c : c_cand) {
        const VertexSet nc = closed(c);
        const VertexSet d_cand = (g.neighbours(c) & scope) - na - nb;
        for (Vertex d : d_cand) {
          const VertexSet e_cand = (g.neighbours(d) & scope) - na - nb - nc;
          if (!e_cand.empty()) return P5Certificate{{a, b, c, d, e_cand.front()}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<P5Certificate> find_induced_p5(const Graph& g) {
  return find_induced_p5_within(g, g.all_vertices());
}

bool is_p5_free(const Graph& g) { return !find_induced_p5(g).has_value(); }

std::vector<VertexSet> enumerate_cliques_within(const Graph& g, const VertexSet& scope, std::size_t size_cap) {
  std::vector<VertexSet> out;
  visit_cliques(g, scope, size_cap, [&](const VertexSet& clique) {
    out.push_back(clique);
    return false;
  });
  return out;
}

std::vector<VertexSet> enumerate_cliques_up_to(const Graph& g, std::size_t size_cap) {
  return enumerate_cliques_within(g, g.all_vertices(), size_cap);
}

std::optional<VertexSet> find_clique_of_size(const Graph& g, const VertexSet& scope, std::size_t size) {
  if (size == 0) return g.empty_set();
  // Depth-first extension over common neighbourhoods.
  std::vector<Vertex> stack;
  std::optional<VertexSet> found;
  auto extend = [&](auto&& self, const VertexSet& candidates) -> bool {
    if (stack.size() == size) {
      found = g.make_set(stack);
      return true;
    }
    if (stack.size() + candidates.size() < size) return false;
    VertexSet rest = candidates;
    for (Vertex v : candidates) {
      rest.erase(v);
      stack.push_back(v);
      if (self(self, rest & g.neighbours(v))) return true;
      stack.pop_back();
    }
    return false;
  };
  extend(extend, scope);
  return found;
}

std::string to_string(SeedKind kind) { return kind == SeedKind::clique ? "clique" : "p3"; }

std::optional<DominatingSeed> find_dominating_seed(const Graph& g, const VertexSet& scope, std::size_t size_cap) {
  if (scope.empty()) return std::nullopt;

  std::optional<DominatingSeed> seed;
  visit_cliques(g, scope, size_cap, [&](const VertexSet& clique) {
    if (!dominates(g, clique, scope)) return false;
    seed = DominatingSeed{clique, SeedKind::clique};
    return true;
  });
  if (seed) return seed;

  // Induced P3s {a < b < c} in lexicographic order.
  for (Vertex a : scope) {
    for (Vertex b : scope) {
      if (b <= a) continue;
      const bool ab = g.adjacent(a, b);
      for (Vertex c : scope) {
        if (c <= b) continue;
        const int edge_count = int(ab) + int(g.adjacent(a, c)) + int(g.adjacent(b, c));
        if (edge_count != 2) continue;
        VertexSet triple(g.vertex_count(), {a, b, c});
        if (dominates(g, triple, scope)) return DominatingSeed{std::move(triple), SeedKind::p3};
      }
    }
  }
  return std::nullopt;
}

std::optional<DominatingSeed> find_dominating_clique_or_p3(const Graph& g, std::size_t size_cap) {
  if (size_cap == 0) throw std::invalid_argument("size cap must be at least 1");
  if (!is_connected_within(g, g.all_vertices())) throw std::invalid_argument("graph is not connected");
  return find_dominating_seed(g, g.all_vertices(), size_cap);
}

}  // namespace p5col
