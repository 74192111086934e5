#include "oracle_support.hpp"

#include "p5col/errors.hpp"
#include "p5col/method_two.hpp"

#include <doctest.h>

using namespace p5col;
using support::colours;
using support::graph;
using support::set;

namespace {

Instance with_lists(Instance inst, const std::vector<std::pair<Vertex, ColourSet>>& lists) {
  for (auto [v, l] : lists) inst = restrict_list(inst, v, l);
  return inst;
}

void expect_violation(Violation kind, const Graph& g, const std::function<void()>& fn) {
  try {
    fn();
    FAIL("expected " << to_string(kind));
  } catch (const StructureError& e) {
    CHECK(e.kind() == kind);
    REQUIRE(e.certificate());
    CHECK(support::certificate_ok(g, e.certificate()->path));
    CHECK(find_induced_p5(induced_subgraph(g, g.make_set(e.witness()))).has_value() == true);
  }
}

// d1=0 and d2=1 form the seed; y=2 hangs off d1, x=3 off d2, x~y.
struct TwoBlocks {
  Graph g = graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  Instance seeded = assign(assign(full_instance(g, 4), 0, 4), 1, 3);
  FixedSetPartition part = fixed_set_partition(seeded, g.all_vertices(), g.make_set({0, 1}));
};

}  // namespace

TEST_CASE("dynamic partition") {
  const Graph g(4);
  SUBCASE("one list") {
    const auto d = dynamic_partition(full_instance(g, 3), set(g, {0, 1, 2}));
    REQUIRE(d.by_list.size() == 1);
    CHECK(d.by_list.begin()->first == colours({1, 2, 3}));
  }
  SUBCASE("two lists") {
    const Instance inst = with_lists(full_instance(g, 3), {{0, colours({1, 2})}, {1, colours({1, 2})}, {2, colours({2})}});
    const auto d = dynamic_partition(inst, set(g, {0, 1, 2}));
    REQUIRE(d.by_list.size() == 2);
    CHECK(d.by_list.at(colours({1, 2})).size() == 2);
    CHECK(d.by_list.at(colours({2})).size() == 1);
  }
  SUBCASE("empty fixed set") { CHECK(dynamic_partition(full_instance(g, 3), g.empty_set()).by_list.empty()); }
  SUBCASE("assigned vertices are left out") {
    const Instance inst = assign(full_instance(g, 3), 0, 1);
    CHECK(dynamic_partition(inst, set(g, {0, 1})).by_list.at(colours({1, 2, 3})) == set(g, {1}));
  }
}

TEST_CASE("pair schedule order") {
  using V = std::vector<BlockPair>;
  CHECK(pair_schedule({colours({1, 2, 3})}, {colours({1, 2}), colours({3})}) ==
        V{{colours({1, 2, 3}), colours({1, 2})}, {colours({1, 2, 3}), colours({3})}});
  CHECK(pair_schedule({colours({1})}, {colours({1})}).size() == 1);
  CHECK(pair_schedule({colours({1, 2})}, {colours({2, 3}), colours({1, 3})}) ==
        V{{colours({1, 2}), colours({1, 3})}, {colours({1, 2}), colours({2, 3})}});
  const auto s = pair_schedule({colours({1}), colours({1, 2})}, {colours({2}), colours({1, 3})});
  REQUIRE(s.size() == 4);
  CHECK(s[0] == BlockPair{colours({1, 2}), colours({1, 3})});
  CHECK(s[3] == BlockPair{colours({1}), colours({2})});
}

TEST_CASE("pivot") {
  // Seed path 0-1-2; 3 hangs off 0, 4 off 1, 5 off 2.
  const Graph g = graph(6, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 4}, {4, 5}});
  const Instance inst = assign(assign(assign(full_instance(g, 4), 0, 1), 1, 2), 2, 3);
  const auto part = fixed_set_partition(inst, g.all_vertices(), set(g, {0, 1, 2}));
  REQUIRE(part.fixed_sets[0] == set(g, {3}));
  REQUIRE(part.fixed_sets[1] == set(g, {4}));
  REQUIRE(part.fixed_sets[2] == set(g, {5}));

  const Pivot a = find_pivot(inst, part, set(g, {3}), set(g, {5}));
  CHECK(a.vertex == 0);
  CHECK(a.dominated == Side::p);
  const Pivot b = find_pivot(inst, part, set(g, {4}), set(g, {3}));
  CHECK(b.vertex == 0);
  CHECK(b.dominated == Side::q);
  CHECK(find_pivot(inst, part, set(g, {5}), set(g, {4})).vertex == 1);
  CHECK_THROWS_AS(find_pivot(inst, part, set(g, {3}), set(g, {3})), std::invalid_argument);
  CHECK_THROWS_AS(find_pivot(inst, part, set(g, {3, 4}), set(g, {5})), std::invalid_argument);
}

TEST_CASE("building H") {
  SUBCASE("one component each side") {
    TwoBlocks t;
    const HGraph h = build_h(t.seeded, set(t.g, {3}), set(t.g, {2}), 0);
    CHECK(h.p_side.size() == 1);
    CHECK(h.q_side.size() == 1);
    CHECK(h.pivot == 0);
  }
  SUBCASE("P component without cross edges") {
    // z=4 sits in d2's fixed set but has no neighbour in Q.
    const Graph g = graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}});
    const Instance inst = assign(assign(full_instance(g, 4), 0, 4), 1, 3);
    const HGraph h = build_h(inst, set(g, {3, 4}), set(g, {2}), 0);
    REQUIRE(h.p_side.size() == 1);
    CHECK(h.p_vertices == set(g, {3}));
  }
  SUBCASE("nothing dependent") {
    TwoBlocks t;
    const Instance inst = with_lists(t.seeded, {{2, colours({1})}, {3, colours({2})}});
    CHECK(build_h(inst, set(t.g, {3}), set(t.g, {2}), 0).empty());
  }
  SUBCASE("pivot must fit") {
    TwoBlocks t;
    CHECK_THROWS_AS(build_h(t.seeded, set(t.g, {2}), set(t.g, {3}), 0), std::invalid_argument);
  }
  SUBCASE("disconnected H is not P5-free") {
    // Pivot 0 sees q1=1 and q2=2; p1=3~q1, p2=4~q2.
    const Graph g = graph(5, {{0, 1}, {0, 2}, {3, 1}, {4, 2}});
    const Instance inst = full_instance(g, 2);
    expect_violation(Violation::h_disconnected, g, [&] { build_h(inst, set(g, {3, 4}), set(g, {1, 2}), 0); });
  }
}

TEST_CASE("crossing component") {
  SUBCASE("uniform attachment") {
    // Pivot 0; Q = {1, 2} stable; P = {3} sees both.
    const Graph g = graph(4, {{0, 1}, {0, 2}, {3, 1}, {3, 2}});
    const Instance inst = full_instance(g, 2);
    const HGraph h = build_h(inst, set(g, {3}), set(g, {1, 2}), 0);
    CHECK_FALSE(find_crossing_component(inst, h));
  }
  SUBCASE("one crossing component") {
    // Pivot 0; Y1 = {1}, Y2 = {2}; a=3~y1, b=4~y2, a~b.
    const Graph g = graph(5, {{0, 1}, {0, 2}, {3, 1}, {4, 2}, {3, 4}});
    const Instance inst = full_instance(g, 2);
    const HGraph h = build_h(inst, set(g, {3, 4}), set(g, {1, 2}), 0);
    const auto c = find_crossing_component(inst, h);
    REQUIRE(c);
    CHECK(*c == set(g, {3, 4}));
  }
  SUBCASE("two crossing components are not P5-free") {
    // Pivot 0 sees y1..y4 = 1..4, y2~y3. Components {a=5, b=6} and
    // {c=7, d=8}: a~y1, b~y2, c~y3, d~y4.
    const Graph g = graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {2, 3}, {5, 6}, {5, 1}, {6, 2}, {7, 8}, {7, 3}, {8, 4}});
    const Instance inst = full_instance(g, 3);
    const HGraph h = build_h(inst, set(g, {5, 6, 7, 8}), set(g, {1, 2, 3, 4}), 0);
    CHECK(h.p_side.size() == 2);
    expect_violation(Violation::two_crossing_components, g, [&] { find_crossing_component(inst, h); });
  }
}

TEST_CASE("removing a component") {
  SearchContext ctx;
  SUBCASE("single vertex") {
    const Graph g(1);
    CHECK(remove_component(full_instance(g, 2), g.all_vertices(), ctx).size() == 2);
  }
  SUBCASE("an edge") {
    const Graph g = graph(2, {{0, 1}});
    const auto kids = remove_component(full_instance(g, 2), g.all_vertices(), ctx);
    REQUIRE(kids.size() == 2);
    CHECK(kids[0].list(0) == colours({1}));
    CHECK(kids[0].list(1) == colours({2}));
    CHECK(kids[1].list(0) == colours({2}));
    CHECK(kids[1].list(1) == colours({1}));
  }
  SUBCASE("triangle on two colours") {
    const Graph g = support::complete(3);
    CHECK(remove_component(full_instance(g, 2), g.all_vertices(), ctx).empty());
  }
  SUBCASE("disconnected input") {
    const Graph g(2);
    CHECK_THROWS_AS(remove_component(full_instance(g, 2), g.all_vertices(), ctx), std::invalid_argument);
  }
}

TEST_CASE("claim vertex") {
  SUBCASE("one Q component fully seen") {
    const Graph g = graph(3, {{0, 1}, {2, 1}});
    const Instance inst = full_instance(g, 2);
    const auto c = claim_vertex(inst, build_h(inst, set(g, {2}), set(g, {1}), 0));
    CHECK(c.x == 2);
    CHECK_FALSE(c.undominated);
  }
  SUBCASE("one Q component partly seen") {
    // Pivot 0; Y1 = {1}, Y2 = {2, 3} with 2~3; x=4 sees 1 and 2.
    const Graph g = graph(5, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {4, 1}, {4, 2}});
    const Instance inst = full_instance(g, 3);
    const auto c = claim_vertex(inst, build_h(inst, set(g, {4}), set(g, {1, 2, 3}), 0));
    CHECK(c.x == 4);
    REQUIRE(c.undominated);
    CHECK(*c.undominated == set(g, {2, 3}));
  }
  SUBCASE("no vertex touches every Q component") {
    // Pivot 0; Y1 = {1}, Y2 = {2}; path a=3, c=4, b=5 with a~y1, b~y2.
    const Graph g = graph(6, {{0, 1}, {0, 2}, {3, 1}, {5, 2}, {3, 4}, {4, 5}});
    const Instance inst = full_instance(g, 2);
    const HGraph h = build_h(inst, set(g, {3, 4, 5}), set(g, {1, 2}), 0);
    expect_violation(Violation::claim_violated, g, [&] { claim_vertex(inst, h); });
  }
  SUBCASE("two Q components partly seen") {
    // Pivot 0; Y1 = {1, 2}, Y2 = {3, 4}; x=5 sees 1 and 3 only.
    const Graph g = graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}, {5, 1}, {5, 3}});
    const Instance inst = full_instance(g, 3);
    const HGraph h = build_h(inst, set(g, {5}), set(g, {1, 2, 3, 4}), 0);
    expect_violation(Violation::claim_violated, g, [&] { claim_vertex(inst, h); });
  }
}

TEST_CASE("removing a dynamic pair") {
  SearchContext ctx;
  TwoBlocks t;
  REQUIRE(t.part.fixed_sets[0] == set(t.g, {2}));
  REQUIRE(t.part.fixed_sets[1] == set(t.g, {3}));

  SUBCASE("independent blocks") {
    const Instance inst = with_lists(t.seeded, {{2, colours({1})}, {3, colours({2})}});
    const auto leaves = remove_dynamic_pair(inst, {1, colours({2})}, {0, colours({1})}, t.part, ctx);
    REQUIRE(leaves.size() == 1);
    CHECK(leaves[0].lists() == inst.lists());
  }
  SUBCASE("equal lists") {
    const Instance inst = with_lists(t.seeded, {{2, colours({1, 2})}, {3, colours({1, 2})}});
    const auto leaves = remove_dynamic_pair(inst, {1, colours({1, 2})}, {0, colours({1, 2})}, t.part, ctx);
    REQUIRE(leaves.size() == 2);
    CHECK(leaves[0].assigned(3) == 1);
    CHECK(leaves[0].list(2) == colours({2}));
    CHECK(leaves[1].assigned(3) == 2);
    CHECK(leaves[1].list(2) == colours({1}));
  }
  SUBCASE("overlapping lists") {
    const Instance inst = with_lists(t.seeded, {{3, colours({1, 2})}, {2, colours({2, 3})}});
    const auto leaves = remove_dynamic_pair(inst, {1, colours({1, 2})}, {0, colours({2, 3})}, t.part, ctx);
    REQUIRE(leaves.size() == 2);
    CHECK(leaves[0].assigned(3) == 2);
    CHECK(leaves[0].list(2) == colours({3}));
    CHECK(leaves[1].list(3) == colours({1}));
    CHECK(leaves[1].list(2) == colours({2, 3}));
    for (const auto& l : leaves) CHECK(support::cross_independent(l, set(t.g, {3}), set(t.g, {2})));
  }
  SUBCASE("argument order does not matter") {
    const Instance inst = with_lists(t.seeded, {{2, colours({1, 2})}, {3, colours({1, 2})}});
    const auto a = remove_dynamic_pair(inst, {1, colours({1, 2})}, {0, colours({1, 2})}, t.part, ctx);
    const auto b = remove_dynamic_pair(inst, {0, colours({1, 2})}, {1, colours({1, 2})}, t.part, ctx);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].lists() == b[i].lists());
  }
  SUBCASE("same fixed set") {
    CHECK_THROWS_AS(remove_dynamic_pair(t.seeded, {0, colours({1})}, {0, colours({2})}, t.part, ctx),
                    std::invalid_argument);
  }
}

TEST_CASE("removing a fixed pair with Method II") {
  SearchContext ctx;
  SUBCASE("no edges across") {
    const Graph g = graph(4, {{0, 1}, {0, 2}, {1, 3}});
    const Instance inst = assign(assign(full_instance(g, 3), 0, 3), 1, 2);
    const auto part = fixed_set_partition(inst, g.all_vertices(), set(g, {0, 1}));
    const auto leaves = remove_fixed_pair_m2(inst, 0, 1, part, ctx);
    REQUIRE(leaves.size() == 1);
    CHECK(leaves[0].lists() == inst.lists());
  }
  SUBCASE("single edge") {
    TwoBlocks t;
    const Instance inst = with_lists(t.seeded, {{2, colours({1, 2})}, {3, colours({1})}});
    const auto leaves = remove_fixed_pair_m2(inst, 0, 1, t.part, ctx);
    REQUIRE(leaves.size() == 1);
    CHECK(leaves[0].list(2) == colours({2}));
    CHECK(support::any_sat(leaves) == support::oracle_sat(inst));
  }
  SUBCASE("two edges joined completely") {
    // Seed 0-1; F_1 = {2, 3}, F_2 = {4, 5}; {2..5} is a K4.
    const Graph g = graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
    Instance inst = assign(assign(full_instance(g, 4), 0, 3), 1, 4);
    inst = with_lists(inst, {{2, colours({1, 2})}, {3, colours({1, 2})}, {4, colours({1, 2})}, {5, colours({1, 2})}});
    const auto part = fixed_set_partition(inst, g.all_vertices(), set(g, {0, 1}));
    CHECK(remove_fixed_pair_m2(inst, 0, 1, part, ctx).empty());
    CHECK_FALSE(support::oracle_sat(inst));
  }
}

TEST_CASE("Method II leaves are equivalent and independent") {
  SearchContext ctx;
  int pairs = 0;
  support::for_each_fixed_pair(1200, 500, [&](const Instance& inst, const FixedSetPartition& part, std::size_t i,
                                              std::size_t j) {
    const auto leaves = remove_fixed_pair_m2(inst, i, j, part, ctx);
    CHECK(support::any_sat(leaves) == support::oracle_sat(inst));
    for (const auto& leaf : leaves) {
      CHECK_FALSE(leaf.dead());
      CHECK(support::cross_independent(leaf, part.fixed_sets[i], part.fixed_sets[j]));
      for (Vertex v = 0; v < inst.vertex_count(); ++v) CHECK(leaf.list(v).is_subset_of(inst.list(v)));
    }
    ++pairs;
  });
  MESSAGE("fixed pairs checked: " << pairs);
  CHECK(pairs > 300);
}
