#pragma once

#include "p5col/graph.hpp"
#include "p5col/instance.hpp"
#include "p5col/p5_structure.hpp"

#include <array>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace support {

using p5col::Graph;
using p5col::Vertex;

inline Graph graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return Graph::from_edges(n, std::vector<p5col::Edge>(edges.begin(), edges.end()));
}

inline Graph cycle(std::size_t n) {
  std::vector<p5col::Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<p5col::Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<p5col::Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph::from_edges(n, e);
}

inline p5col::VertexSet set(const Graph& g, std::initializer_list<Vertex> vs) { return g.make_set(std::vector<Vertex>(vs)); }

inline p5col::ColourSet colours(std::initializer_list<p5col::Colour> cs) {
  p5col::ColourSet s;
  for (auto c : cs) s.insert(c);
  return s;
}

/// Independent check of a claimed induced P5: five distinct vertices,
/// consecutive ones adjacent, all other pairs non-adjacent.
inline bool certificate_ok(const Graph& g, const std::array<Vertex, 5>& p) {
  for (std::size_t i = 0; i < 5; ++i) {
    if (p[i] >= g.vertex_count()) return false;
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (p[i] == p[j]) return false;
      if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

/// True when the five vertices induce a path: four edges, degrees
/// 1,1,2,2,2 and connected.
inline bool induces_p5(const Graph& g, const std::array<Vertex, 5>& s) {
  int deg[5] = {0, 0, 0, 0, 0};
  int edges = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      if (g.adjacent(s[i], s[j])) {
        ++deg[i];
        ++deg[j];
        ++edges;
      }
    }
  }
  if (edges != 4) return false;
  int ones = 0;
  for (int d : deg) {
    if (d == 1) ++ones;
    else if (d != 2) return false;
  }
  if (ones != 2) return false;
  // Four edges on five vertices: connected exactly when acyclic, and the
  // only cyclic option with these degrees is a triangle plus an edge.
  bool reached[5] = {true, false, false, false, false};
  for (int round = 0; round < 5; ++round) {
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        if (reached[i] && g.adjacent(s[i], s[j])) reached[j] = true;
      }
    }
  }
  for (bool r : reached) {
    if (!r) return false;
  }
  return true;
}

/// Exhaustive scan of all 5-subsets.
inline bool brute_p5_free(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d)
          for (Vertex e = d + 1; e < n; ++e)
            if (induces_p5(g, {a, b, c, d, e})) return false;
  return true;
}

/// Exhaustive scan of all 4-subsets for an induced P4.
inline bool brute_p4_free(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          const Vertex s[4] = {a, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(s[i], s[j])) {
                ++deg[i];
                ++deg[j];
                ++edges;
              }
          int ones = 0;
          for (int x : deg) ones += x == 1;
          // Three edges with two leaves and no isolated vertex is a P4.
          if (edges == 3 && ones == 2 && deg[0] && deg[1] && deg[2] && deg[3]) return false;
        }
  return true;
}

inline std::string corpus_dir() { return P5COL_CORPUS_DIR; }

}  // namespace support

