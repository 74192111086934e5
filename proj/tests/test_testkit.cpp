#include "oracle_support.hpp"

#include <doctest.h>

#include <fstream>
#include <random>

using namespace p5col;
using namespace p5col::testkit;
using support::colours;
using support::cycle;

namespace {

Graph relabelled(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.vertex_count(), edges);
}

}  // namespace

TEST_CASE("oracle on small cases") {
  CHECK(oracle_list_colouring(full_instance(cycle(5), 3)));
  CHECK_FALSE(oracle_list_colouring(full_instance(cycle(5), 2)));
  const Graph one(1);
  CHECK_FALSE(oracle_list_colouring(restrict_list(full_instance(one, 2), 0, ColourSet{})));
  CHECK(oracle_list_colouring(full_instance(Graph(0), 1)));

  const auto c = oracle_list_colouring(full_instance(cycle(7), 3));
  REQUIRE(c);
  CHECK(verify_colouring(full_instance(cycle(7), 3), *c));

  CHECK_THROWS_AS(oracle_list_colouring(full_instance(Graph(25), 2)), std::invalid_argument);
}

TEST_CASE("oracle decision survives relabelling") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = generate({static_cast<Family>(seed % 3), 4 + seed % 8, 0.5, 0, {2, 1, 3}, seed});
    std::vector<Vertex> perm(g.vertex_count());
    for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabelled(g, perm);
    for (int k = 2; k <= 4; ++k) {
      const Instance a = random_sublists(g, k, seed);
      std::vector<ColourSet> moved(g.vertex_count());
      for (Vertex v = 0; v < g.vertex_count(); ++v) moved[perm[v]] = a.list(v);
      const Instance b(h, moved, a.universe());
      CHECK(oracle_list_colouring(a).has_value() == oracle_list_colouring(b).has_value());
    }
  }
}

TEST_CASE("generators produce P5-free graphs") {
  for (Family f : {Family::split, Family::cograph, Family::multipartite, Family::er_rejection}) {
    CAPTURE(to_string(f));
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      GenSpec spec{f, 3 + seed % 10, 0.2 + 0.1 * (seed % 7), 0, {}, seed};
      if (f == Family::multipartite) spec.parts = {1 + seed % 3, 1 + seed % 4, 2};
      if (f == Family::er_rejection) spec.p = seed % 2 ? 0.2 : 0.75;
      const Graph g = generate(spec);
      CHECK(is_p5_free(g));
      if (g.vertex_count() <= 9) CHECK(support::brute_p5_free(g));
      if (f == Family::cograph) CHECK(support::brute_p4_free(g));
    }
  }
}

TEST_CASE("generator details") {
  const Graph k222 = generate({Family::multipartite, 0, 0.5, 0, {2, 2, 2}, 0});
  CHECK(k222.vertex_count() == 6);
  CHECK(k222.edge_count() == 12);

  GenSpec split{Family::split, 10, 0.4, 4, {}, 9};
  const Graph s = generate(split);
  CHECK(s.vertex_count() == 10);
  CHECK(find_clique_of_size(s, s.all_vertices(), 4));
  CHECK(generate(split) == s);
  split.seed = 10;
  CHECK_FALSE(generate(split) == s);

  CHECK(generate({Family::cograph, 1, 0.5, 0, {}, 0}).vertex_count() == 1);
  CHECK(generate({Family::cograph, 0, 0.5, 0, {}, 0}).vertex_count() == 0);

  CHECK_THROWS_AS(generate({Family::split, 3, 0.5, 4, {}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate({Family::split, 3, 1.5, 0, {}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate({Family::multipartite, 3, 0.5, 0, {}, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate({Family::er_rejection, 13, 0.5, 0, {}, 0}), std::invalid_argument);

  CHECK(family_from_string("cograph") == Family::cograph);
  CHECK(to_string(Family::er_rejection) == "er_rejection");
  CHECK_THROWS_AS(family_from_string("tree"), std::invalid_argument);
}

TEST_CASE("random sublists") {
  const Graph g = cycle(8);
  const Instance a = random_sublists(g, 3, 42);
  const Instance b = random_sublists(g, 3, 42);
  CHECK(a.lists() == b.lists());
  for (Vertex v = 0; v < 8; ++v) {
    CHECK_FALSE(a.list(v).empty());
    CHECK(a.list(v).is_subset_of(ColourSet::range(3)));
  }
  const Instance one = random_sublists(g, 1, 5);
  for (Vertex v = 0; v < 8; ++v) CHECK(one.list(v) == colours({1}));
  CHECK_THROWS_AS(random_sublists(g, 0, 1), std::invalid_argument);
}

TEST_CASE("raw random helpers") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) CHECK(uniform_below(rng, 7) < 7);
  CHECK_THROWS_AS(uniform_below(rng, 0), std::invalid_argument);
  int heads = 0;
  for (int i = 0; i < 1000; ++i) heads += coin(rng, 0.5);
  CHECK(heads > 400);
  CHECK(heads < 600);
  CHECK_FALSE(coin(rng, 0.0));
  CHECK(coin(rng, 1.0));
}

TEST_CASE("manifest format") {
  const std::string text =
      "# corpus\n"
      "a split n=6 p=0.35 clique=2 seed=4\n"
      "\n"
      "b multipartite parts=2,2,2 seed=1\n"
      "c cograph n=5 p=0.5 seed=9\n";
  const auto entries = parse_manifest(text);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].id == "a");
  CHECK(entries[0].spec.family == Family::split);
  CHECK(entries[0].spec.n == 6);
  CHECK(entries[0].spec.p == doctest::Approx(0.35));
  CHECK(entries[0].spec.clique == 2);
  CHECK(entries[0].spec.seed == 4);
  CHECK(entries[1].spec.parts == std::vector<std::size_t>{2, 2, 2});

  const auto again = parse_manifest(format_manifest(entries));
  REQUIRE(again.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(generate(again[i].spec) == generate(entries[i].spec));

  CHECK_THROWS_AS(parse_manifest("x split n=3 q=1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_manifest("x split n=three\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_manifest("x tree n=3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_manifest("x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_manifest("x split n\n"), std::invalid_argument);
}

TEST_CASE("checked-in corpus") {
  const auto entries = read_manifest_file(support::corpus_dir() + "/manifest.txt");
  CHECK(entries.size() >= 500);
  int per_family[4] = {0, 0, 0, 0};
  for (const auto& e : entries) {
    const Graph g = generate(e.spec);
    CHECK(g.vertex_count() <= 14);
    ++per_family[static_cast<int>(e.spec.family)];
  }
  for (int count : per_family) CHECK(count >= 100);
  CHECK_THROWS_AS(read_manifest_file(support::corpus_dir() + "/missing.txt"), std::runtime_error);
}
