#pragma once

#include "p5col/instance.hpp"
#include "p5col/search_context.hpp"

#include <map>
#include <optional>
#include <vector>

namespace p5col {

struct ColourSetLexLess {
  bool operator()(ColourSet a, ColourSet b) const { return lex_less(a, b); }
};

/// The vertices of one fixed set grouped by their exact current list.
/// Assigned vertices and vertices with empty lists are left out.
struct DynamicPartition {
  std::map<ColourSet, VertexSet, ColourSetLexLess> by_list;
};

DynamicPartition dynamic_partition(const Instance& inst, const VertexSet& fixed_set);

struct BlockPair {
  ColourSet p;
  ColourSet q;

  friend bool operator==(const BlockPair&, const BlockPair&) = default;
};

/// Every cross pair of blocks, by |p| descending, then |q| descending, then
/// lexicographically on p and q.
std::vector<BlockPair> pair_schedule(const DynamicPartition& pa, const DynamicPartition& pb);

/// The same order over explicit list collections.
std::vector<BlockPair> pair_schedule(const std::vector<ColourSet>& p_lists, const std::vector<ColourSet>& q_lists);

enum class Side { p, q };

struct Pivot {
  Vertex vertex = 0;
  Side dominated = Side::q;
};

/// The dominator of the earlier of the two fixed sets holding P and Q. It is
/// adjacent to every vertex of the block in its own fixed set and to none of
/// the other. Throws std::invalid_argument if P and Q do not lie in two
/// distinct fixed sets, std::logic_error if the fixed-set invariants fail.
Pivot find_pivot(const Instance& inst, const FixedSetPartition& partition, const VertexSet& p, const VertexSet& q);

/// The graph H of one dynamic pair: the components of G(P) and G(Q) that
/// have a dependent neighbour across, plus the pivot, which dominates the Q
/// side and misses the P side.
struct HGraph {
  std::vector<VertexSet> p_side;
  std::vector<VertexSet> q_side;
  VertexSet p_vertices;
  VertexSet q_vertices;
  Vertex pivot = 0;

  bool empty() const { return p_side.empty(); }
};

/// Builds H and checks that G(P ∪ Q) restricted to H is connected; a
/// disconnection yields an induced P5 through the pivot and is raised as
/// StructureError (h_disconnected). Throws std::invalid_argument if the
/// pivot does not dominate q or touches p.
HGraph build_h(const Instance& inst, const VertexSet& p, const VertexSet& q, Vertex pivot);

/// The component of H's P side holding vertices a, b attached to Q-side
/// components in incomparable patterns (a sees Y1 but not Y2, b sees Y2 but
/// not Y1), if any. A second such component is raised as StructureError
/// (two_crossing_components).
std::optional<VertexSet> find_crossing_component(const Instance& inst, const HGraph& h);

/// Branches on every proper list colouring of a dominating clique or P3 of
/// G(c). Each child strictly shrinks the list of every vertex of c. Returns
/// no children if the seed cannot be coloured or G(c) holds a clique larger
/// than |col(c)|.
std::vector<Instance> remove_component(const Instance& inst, const VertexSet& c, SearchContext& ctx);

struct ClaimChoice {
  Vertex x = 0;
  std::optional<VertexSet> undominated;
};

/// A P-side vertex adjacent to every Q-side component and dominating all of
/// them but at most one (returned as undominated). Chosen by most components
/// touched, then most dominated, then smallest identifier. Failure is raised
/// as StructureError (claim_violated).
ClaimChoice claim_vertex(const Instance& inst, const HGraph& h);

/// A dynamic block: the vertices of one fixed set with one exact list.
struct DynamicBlock {
  std::size_t fixed_index = 0;
  ColourSet list;
};

/// Current members of a block in an instance.
VertexSet block_members(const Instance& inst, const FixedSetPartition& partition, const DynamicBlock& block);

/// Clears all dependencies between two dynamic blocks of different fixed
/// sets. The block of the earlier fixed set plays Q. Returns the live
/// leaves.
std::vector<Instance> remove_dynamic_pair(const Instance& inst, const DynamicBlock& p, const DynamicBlock& q,
                                          const FixedSetPartition& partition, SearchContext& ctx);

/// Clears all dependencies between fixed sets i and j by walking the pair
/// schedule over every list the two sets can still take. If a pass leaves a
/// dependency behind (a vertex migrated into an already visited block), the
/// schedule is walked again. Returns the live leaves.
std::vector<Instance> remove_fixed_pair_m2(const Instance& inst, std::size_t i, std::size_t j,
                                           const FixedSetPartition& partition, SearchContext& ctx);

}  // namespace p5col
