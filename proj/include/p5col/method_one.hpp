#pragma once

#include "p5col/instance.hpp"
#include "p5col/search_context.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace p5col {

/// Colours the vertices of a region of an instance from their lists.
/// Returns per-vertex colours (0 outside the region) or nullopt if the
/// region has no list colouring.
using RegionColourer = std::function<std::optional<std::vector<Colour>>(const Instance&, const VertexSet&)>;

/// A partition of source into stable sets.
struct StableSetDecomposition {
  VertexSet source;
  std::vector<VertexSet> parts;
};

/// Partitions the unassigned vertices of a into at most |col(a)| stable sets
/// by colouring G(a) with the uniform palette col(a). Greedy first-fit is
/// tried before falling back to colour_region. nullopt means G(a) cannot be
/// coloured from col(a), so no list colouring of a exists either.
std::optional<StableSetDecomposition> stable_decomposition(const Instance& inst, const VertexSet& a,
                                                           const RegionColourer& colour_region);

/// X' and Y': the members of x dependent on some member of y and vice versa.
struct DependentPair {
  VertexSet x_side;
  VertexSet y_side;

  bool empty() const { return x_side.empty(); }
};

DependentPair dependent_pair(const Instance& inst, const VertexSet& x, const VertexSet& y);

/// A member of X' adjacent to all of Y'. The candidate is the member with
/// the most neighbours in Y' (smallest identifier on ties); if it misses a
/// vertex of Y', the input is not P5-free and StructureError
/// (no_lemma1_vertex) is raised with an induced P5 built from the failed
/// selection and a pivot vertex.
Vertex lemma1_vertex(const Instance& inst, const DependentPair& pair);

/// Removes all dependencies between two stable sets from different fixed
/// sets by repeatedly branching a vertex x of X' adjacent to all of Y' on
/// col(Y'): each concrete colour strips that colour from all of Y', the
/// residual child takes x out of X'. Returns every leaf in depth-first order, including dead ones
/// (a dead child is not expanded further).
std::vector<Instance> remove_stable_pair(const Instance& inst, const VertexSet& x, const VertexSet& y,
                                         SearchContext& ctx);

/// Method one for two fixed sets: decompose both into stable sets, then
/// clear every (A_i, B_j) pair in lexicographic order. Returns the live
/// leaves; none of them has a vertex of a dependent on a vertex of b.
std::vector<Instance> remove_fixed_pair_m1(const Instance& inst, const VertexSet& a, const VertexSet& b,
                                           const RegionColourer& colour_region, SearchContext& ctx);

}  // namespace p5col
