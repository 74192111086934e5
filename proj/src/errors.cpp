#include "p5col/errors.hpp"

namespace p5col {

std::string to_string(Violation v) {
  switch (v) {
    case Violation::not_p5_free: return "NotP5Free";
    case Violation::no_lemma1_vertex: return "NoLemma1Vertex";
    case Violation::two_crossing_components: return "TwoCrossingComponents";
    case Violation::claim_violated: return "ClaimViolated";
    case Violation::h_disconnected: return "HDisconnected";
  }
  return "unknown";
}

StructureError::StructureError(Violation kind, std::optional<P5Certificate> certificate, std::vector<Vertex> witness,
                               const std::string& detail)
    : std::runtime_error(to_string(kind) + ": " + detail),
      kind_(kind),
      certificate_(certificate),
      witness_(std::move(witness)) {}

BudgetExceeded::BudgetExceeded(std::uint64_t limit)
    : std::runtime_error("instance budget of " + std::to_string(limit) + " exceeded"), limit_(limit) {}

void raise_structure_error(const Graph& g, Violation kind, std::optional<P5Certificate> preferred,
                           std::vector<Vertex> witness, const std::string& detail) {
  std::optional<P5Certificate> cert;
  if (preferred && is_induced_p5(g, *preferred)) cert = preferred;
  if (!cert && !witness.empty()) cert = find_induced_p5_within(g, g.make_set(witness));
  if (!cert) cert = find_induced_p5(g);
  if (!cert) throw std::logic_error(to_string(kind) + " on a P5-free graph: " + detail);
  throw StructureError(kind, cert, std::move(witness), detail);
}

}  // namespace p5col
