#pragma once

#include "p5col/graph.hpp"
#include "p5col/instance.hpp"
#include "p5col/solver.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace p5col::testkit {

/// Exact backtracking over the lists: vertices by decreasing degree, a
/// colour is tried only if no coloured neighbour holds it, and a branch is
/// cut as soon as some uncoloured vertex has no colour left. Shares nothing
/// with the solver beyond the graph and the instance data.
/// Throws std::invalid_argument above vertex_cap vertices.
std::optional<Colouring> oracle_list_colouring(const Instance& inst, std::size_t vertex_cap = 20);

enum class Family { split, cograph, multipartite, er_rejection };

std::string to_string(Family f);
Family family_from_string(std::string_view name);

struct GenSpec {
  Family family = Family::split;
  std::size_t n = 0;
  /// Edge probability: cross edges for split, edges for er_rejection,
  /// join-vs-union for cograph.
  double p = 0.5;
  /// Clique size for split; 0 picks n / 3.
  std::size_t clique = 0;
  /// Part sizes for multipartite (n is ignored).
  std::vector<std::size_t> parts;
  std::uint64_t seed = 0;
};

/// A P5-free graph from the requested family, deterministic per seed:
///  - split: a clique plus a stable set with random cross edges (2K2-free);
///  - cograph: random cotree of unions and joins (P4-free);
///  - multipartite: complete multipartite graph on the given parts;
///  - er_rejection: G(n, p) resampled until P5-free (n <= 12).
/// Throws std::invalid_argument on bad parameters and std::runtime_error
/// when rejection sampling gives up.
Graph generate(const GenSpec& spec);

/// Each vertex gets a uniformly random nonempty subset of {1..k}.
Instance random_sublists(const Graph& g, int k, std::uint64_t seed);

/// Uniform integer in [0, bound) from raw engine output, independent of the
/// standard library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// Bernoulli(p) from raw engine output.
bool coin(std::mt19937_64& rng, double p);

// Corpus manifest -------------------------------------------------------------
//
// One graph per line: "<id> <family> key=value ...", keys n, p, clique,
// parts (comma separated) and seed. '#' starts a comment line.

struct CorpusEntry {
  std::string id;
  GenSpec spec;
};

std::vector<CorpusEntry> parse_manifest(std::string_view text);
std::string format_manifest(const std::vector<CorpusEntry>& entries);
std::vector<CorpusEntry> read_manifest_file(const std::string& path);

}  // namespace p5col::testkit
