#pragma once

#include "p5col/p5_structure.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace p5col {

/// Structural facts the algorithm relies on for P5-free inputs. Each one
/// failing at runtime is evidence that the input contains an induced P5.
enum class Violation {
  not_p5_free,
  no_lemma1_vertex,
  two_crossing_components,
  claim_violated,
  h_disconnected,
};

std::string to_string(Violation v);

class StructureError : public std::runtime_error {
 public:
  StructureError(Violation kind, std::optional<P5Certificate> certificate, std::vector<Vertex> witness,
                 const std::string& detail);

  Violation kind() const { return kind_; }
  /// An induced P5 of the input graph, validated before the error is raised.
  const std::optional<P5Certificate>& certificate() const { return certificate_; }
  /// The vertices of the configuration that triggered the error.
  const std::vector<Vertex>& witness() const { return witness_; }

 private:
  Violation kind_;
  std::optional<P5Certificate> certificate_;
  std::vector<Vertex> witness_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t limit);
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

/// Builds a validated certificate for a violated structural fact. The
/// preferred path is tried first, then an induced P5 is searched for among
/// the witness vertices, then in the whole graph. Throws std::logic_error if
/// the graph turns out to be P5-free, since the failure is then a bug.
[[noreturn]] void raise_structure_error(const Graph& g, Violation kind, std::optional<P5Certificate> preferred,
                                        std::vector<Vertex> witness, const std::string& detail);

}  // namespace p5col
