#pragma once

#include "p5col/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace p5col {

/// Five vertices listed in path order; valid iff consecutive pairs are
/// adjacent and the remaining six pairs are not.
struct P5Certificate {
  std::array<Vertex, 5> path{};

  friend bool operator==(const P5Certificate&, const P5Certificate&) = default;
};

bool is_induced_p5(const Graph& g, const P5Certificate& cert);

/// Finds an induced P5 inside G(scope) by growing induced P3s into P4s and
/// P5s over neighbourhood bitsets. The first path found in order of its
/// starting vertex is returned.
std::optional<P5Certificate> find_induced_p5_within(const Graph& g, const VertexSet& scope);
std::optional<P5Certificate> find_induced_p5(const Graph& g);
bool is_p5_free(const Graph& g);

/// All cliques of G(scope) with 1..size_cap vertices, grouped by size and
/// lexicographically ordered within a size.
std::vector<VertexSet> enumerate_cliques_within(const Graph& g, const VertexSet& scope, std::size_t size_cap);
std::vector<VertexSet> enumerate_cliques_up_to(const Graph& g, std::size_t size_cap);

/// Some clique of exactly `size` vertices inside scope, if one exists.
std::optional<VertexSet> find_clique_of_size(const Graph& g, const VertexSet& scope, std::size_t size);

enum class SeedKind { clique, p3 };

struct DominatingSeed {
  VertexSet vertices;
  SeedKind kind = SeedKind::clique;
};

std::string to_string(SeedKind kind);

/// Search order: cliques by increasing size (lexicographic within a size) up
/// to size_cap, then induced P3s by lexicographic vertex set. The first one
/// dominating scope wins. scope must induce a connected subgraph.
std::optional<DominatingSeed> find_dominating_seed(const Graph& g, const VertexSet& scope, std::size_t size_cap);

/// Same search over the whole graph. Throws std::invalid_argument if g is
/// not connected or size_cap is zero.
std::optional<DominatingSeed> find_dominating_clique_or_p3(const Graph& g, std::size_t size_cap);

}  // namespace p5col
