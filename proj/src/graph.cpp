#include "p5col/graph.hpp"

#include <algorithm>
#include <numeric>

namespace p5col {

Graph::Graph(std::size_t n) : adjacency_(n, VertexSet(n)), labels_(n) {
  std::iota(labels_.begin(), labels_.end(), Vertex{0});
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (!g.adjacency_[u].contains(v)) {
      g.adjacency_[u].insert(v);
      g.adjacency_[v].insert(u);
      ++g.edge_count_;
    }
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) throw std::invalid_argument("vertex set does not belong to graph");
  const auto members = s.to_vector();
  std::vector<Vertex> local(g.vertex_count(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = i;

  Graph h(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    h.labels_[i] = g.label(members[i]);
    for (Vertex w : g.neighbours(members[i]) & s) {
      h.adjacency_[i].insert(local[w]);
    }
    h.edge_count_ += h.adjacency_[i].size();
  }
  h.edge_count_ /= 2;
  return h;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& scope) {
  std::vector<VertexSet> out;
  VertexSet unseen = scope;
  while (!unseen.empty()) {
    const Vertex root = unseen.front();
    VertexSet comp(g.vertex_count());
    VertexSet frontier(g.vertex_count(), {root});
    unseen.erase(root);
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(g.vertex_count());
      for (Vertex v : frontier) next |= g.neighbours(v);
      next &= unseen;
      unseen -= next;
      frontier = std::move(next);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_within(g, g.all_vertices());
}

bool is_connected_within(const Graph& g, const VertexSet& scope) {
  return components_within(g, scope).size() <= 1;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) throw std::invalid_argument("vertex set does not belong to graph");
  for (Vertex v : s) {
    VertexSet others = s;
    others.erase(v);
    if (!others.is_subset_of(g.neighbours(v))) return false;
  }
  return true;
}

std::size_t edges_within(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) throw std::invalid_argument("vertex set does not belong to graph");
  std::size_t twice = 0;
  for (Vertex v : s) twice += (g.neighbours(v) & s).size();
  return twice / 2;
}

bool is_p3(const Graph& g, const VertexSet& s) {
  if (s.size() != 3) return false;
  // Three vertices with exactly two edges always form a path.
  return edges_within(g, s) == 2;
}

bool dominates(const Graph& g, const VertexSet& d, const VertexSet& scope) {
  VertexSet covered = d;
  for (Vertex v : d) covered |= g.neighbours(v);
  return scope.is_subset_of(covered);
}

}  // namespace p5col
