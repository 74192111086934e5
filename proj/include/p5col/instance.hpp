#pragma once

#include "p5col/colour_set.hpp"
#include "p5col/graph.hpp"
#include "p5col/p5_structure.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace p5col {

/// How a child instance was produced from its parent.
struct BranchLabel {
  Vertex vertex = 0;
  ColourSet colours;
  bool residual = false;  // true: list restricted; false: vertex assigned
};

/// A restricted list-colouring subproblem over a shared immutable graph.
///
/// Instances are values: every operation producing a child copies the list
/// table and leaves the parent untouched. The graph must outlive every
/// instance built on it.
///
/// Invariants kept by construction:
///  - assigned(v) == c implies list(v) == {c};
///  - assigned(v) == c implies c is absent from every neighbour's list;
///  - every list is a subset of universe().
class Instance {
 public:
  /// Throws std::invalid_argument if a list is not inside the universe or
  /// the list count does not match the graph.
  /// The graph is held by reference and must outlive the instance.
  Instance(const Graph& g, std::vector<ColourSet> lists, ColourSet universe);

  const Graph& graph() const { return *graph_; }
  std::size_t vertex_count() const { return lists_.size(); }

  ColourSet list(Vertex v) const { return lists_[v]; }
  const std::vector<ColourSet>& lists() const { return lists_; }
  std::optional<Colour> assigned(Vertex v) const {
    return assigned_[v] == 0 ? std::nullopt : std::optional<Colour>(assigned_[v]);
  }
  bool is_assigned(Vertex v) const { return assigned_[v] != 0; }

  ColourSet universe() const { return universe_; }
  std::size_t depth() const { return depth_; }
  const std::optional<BranchLabel>& provenance() const { return provenance_; }

  /// Some vertex has an empty list, so no colouring exists.
  bool dead() const { return empty_lists_ > 0; }

  /// Unassigned members of s.
  VertexSet unassigned_in(const VertexSet& s) const;

 private:
  friend Instance assign(const Instance& inst, Vertex v, Colour c);
  friend Instance restrict_list(const Instance& inst, Vertex v, ColourSet keep);

  Instance child(BranchLabel label) const;
  void set_list(Vertex v, ColourSet list);

  const Graph* graph_;
  std::vector<ColourSet> lists_;
  std::vector<Colour> assigned_;
  ColourSet universe_;
  std::size_t depth_ = 0;
  std::size_t empty_lists_ = 0;
  std::optional<BranchLabel> provenance_;
};

/// Every list is {1..k}; nothing is assigned.
Instance full_instance(const Graph& g, int k);

/// Colours v with c and removes c from the lists of all of v's neighbours.
/// Throws std::invalid_argument if c is not in v's list.
Instance assign(const Instance& inst, Vertex v, Colour c);

/// list(v) := list(v) ∩ keep.
Instance restrict_list(const Instance& inst, Vertex v, ColourSet keep);

/// One child per colour of list(v) ∩ c_set with v assigned that colour, then
/// a residual child with list(v) − c_set unless that list is empty. The
/// children are jointly equivalent to inst.
std::vector<Instance> branch_on_vertex(const Instance& inst, Vertex v, ColourSet c_set);

/// Adjacent with intersecting lists.
bool dependent(const Instance& inst, Vertex u, Vertex v);

/// Union of the lists over s.
ColourSet col(const Instance& inst, const VertexSet& s);

/// All proper list-respecting colourings of the seed vertices, each applied
/// to inst with propagation, in lexicographic order of the colour vectors.
std::vector<Instance> colour_seed(const Instance& inst, const VertexSet& seed);

// Fixed sets -----------------------------------------------------------------

/// Ordered coloured dominators d_1..d_t and their fixed sets F_1..F_t:
/// F_i holds the vertices adjacent to d_i and to no earlier dominator.
struct FixedSetPartition {
  std::vector<Vertex> dominators;
  std::vector<Colour> colours;
  std::vector<VertexSet> fixed_sets;

  std::optional<std::size_t> fixed_index_of(Vertex v) const;
};

/// Partitions component − seed by the seed in increasing vertex order. The
/// seed must be fully assigned in inst and dominate the component; a
/// violation throws std::logic_error.
FixedSetPartition fixed_set_partition(const Instance& inst, const VertexSet& component, const VertexSet& seed);

/// Throws std::logic_error describing the first broken invariant.
void check_partition(const Instance& inst, const VertexSet& component, const FixedSetPartition& partition);

// Text form ------------------------------------------------------------------
//
// One line per vertex, 1-based: "<v>: <c1> <c2> ..." with a trailing "*" on
// assigned vertices. Lines starting with '#' and blank lines are ignored.

std::string write_instance(const Instance& inst);

/// Parses lists for g over {1..k}. Vertices without a line get {1..k};
/// "*"-flagged lines must hold one colour and are applied with assign().
/// Throws std::invalid_argument on malformed input.
Instance read_instance(std::string_view text, const Graph& g, int k);

}  // namespace p5col
