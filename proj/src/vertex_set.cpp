#include "p5col/vertex_set.hpp"

#include <sstream>
#include <stdexcept>

namespace p5col {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : bits_(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, const std::vector<Vertex>& members) : bits_(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.set();
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= bits_.size()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  bits_.set(v);
}

void VertexSet::erase(Vertex v) {
  if (v < bits_.size()) bits_.reset(v);
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (other.bits_.size() != bits_.size()) throw std::invalid_argument("vertex sets over different universes");
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  return bits_.is_subset_of(other.bits_);
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same_universe(other);
  return bits_.intersects(other.bits_);
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(other);
  bits_ &= other.bits_;
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(other);
  bits_ |= other.bits_;
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(other);
  bits_ -= other.bits_;
  return *this;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : *this) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace p5col
