#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace p5col {

using Vertex = std::size_t;

/// A subset of the vertices {0..universe-1} of one graph.
///
/// All binary operations require both operands to share the same universe;
/// mixing sets from different graphs is a programming error and throws
/// std::invalid_argument.
class VertexSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const Bits* bits, Bits::size_type pos) : bits_(bits), pos_(pos) {}

    Vertex operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const Bits* bits_ = nullptr;
    Bits::size_type pos_ = Bits::npos;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, const std::vector<Vertex>& members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Vertex v) const { return v < bits_.size() && bits_.test(v); }

  void insert(Vertex v);
  void erase(Vertex v);
  void clear() { bits_.reset(); }

  /// Smallest member; undefined on an empty set.
  Vertex front() const { return bits_.find_first(); }

  const_iterator begin() const { return {&bits_, bits_.find_first()}; }
  const_iterator end() const { return {&bits_, Bits::npos}; }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

  /// Lexicographic comparison of the sorted member sequences.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

  std::vector<Vertex> to_vector() const;
  /// "{0,3,4}" with 0-based identifiers.
  std::string to_string() const;

  const Bits& bits() const { return bits_; }

 private:
  void require_same_universe(const VertexSet& other) const;

  Bits bits_;
};

}  // namespace p5col
