#pragma once

#include "p5col/instance.hpp"
#include "p5col/search_context.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace p5col {

enum class Method { one, two };
enum class Validation { off, full_p5_check };

std::string to_string(Method m);

struct SolveConfig {
  Method method = Method::two;
  Validation validate = Validation::off;
  /// Budget on created instances; BudgetExceeded once crossed.
  std::optional<std::uint64_t> max_instances = 10'000'000;
  /// Workers exploring the seed colourings of each top-level component.
  /// 1 keeps the search (and its trace and metrics) deterministic.
  unsigned jobs = 1;
  std::ostream* trace = nullptr;
};

/// A total colouring, colours[v] in 1..k.
struct Colouring {
  std::vector<Colour> colours;

  friend bool operator==(const Colouring&, const Colouring&) = default;
};

enum class Outcome { sat, unsat };

struct Decision {
  Outcome outcome = Outcome::unsat;
  std::optional<Colouring> colouring;
  SolveMetrics metrics;

  bool sat() const { return outcome == Outcome::sat; }
};

/// Decides restricted list colourability of a P5-free instance and returns a
/// verified colouring when one exists.
///
/// Per connected component of the unassigned vertices: find a dominating
/// clique (at most |palette| vertices) or P3, branch on its colourings,
/// split the rest into fixed sets, clear the dependencies between every pair
/// of fixed sets with the configured method, and recurse into each fixed
/// set on a strictly smaller palette.
///
/// Throws StructureError when the input shows an induced P5 (always with a
/// validated certificate), BudgetExceeded when the instance budget runs out.
Decision solve_list_colouring(const Instance& inst, const SolveConfig& cfg = {});

/// solve_list_colouring(full_instance(g, k), cfg).
Decision k_colourable(const Graph& g, int k, const SolveConfig& cfg = {});

/// Every colour is in its vertex's list and no edge is monochromatic.
bool verify_colouring(const Instance& inst, const Colouring& colouring);

}  // namespace p5col
