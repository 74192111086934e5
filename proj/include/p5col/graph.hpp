#pragma once

#include "p5col/vertex_set.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace p5col {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on dense vertices 0..n-1.
///
/// Adjacency is kept as one bitset per vertex. Each vertex also carries a
/// label: the identifier it had in the graph it was extracted from, so an
/// induced subgraph can always be mapped back to its parent.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse; self-loops and out-of-range endpoints throw
  /// std::invalid_argument.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  const VertexSet& neighbours(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet make_set(const std::vector<Vertex>& members) const { return VertexSet(vertex_count(), members); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  Vertex label(Vertex v) const { return labels_[v]; }
  const std::vector<Vertex>& labels() const { return labels_; }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend Graph induced_subgraph(const Graph& g, const VertexSet& s);

  std::vector<VertexSet> adjacency_;
  std::vector<Vertex> labels_;
  std::size_t edge_count_ = 0;
};

/// Subgraph on the members of s, renumbered densely in increasing order.
/// Labels of the result are the labels of the corresponding vertices of g.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Connected components of g, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Connected components of the subgraph induced by scope, over g's vertex
/// identifiers, ordered by smallest member.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& scope);

bool is_connected_within(const Graph& g, const VertexSet& scope);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_p3(const Graph& g, const VertexSet& s);

/// Number of edges with both ends in s.
std::size_t edges_within(const Graph& g, const VertexSet& s);

/// True iff every vertex of scope outside d has a neighbour in d.
bool dominates(const Graph& g, const VertexSet& d, const VertexSet& scope);

// DIMACS .col format ---------------------------------------------------------

class DimacsError : public std::runtime_error {
 public:
  DimacsError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Graph read_dimacs(std::string_view text);
std::string write_dimacs(const Graph& g);

Graph read_dimacs_file(const std::string& path);
void write_dimacs_file(const Graph& g, const std::string& path);

}  // namespace p5col
