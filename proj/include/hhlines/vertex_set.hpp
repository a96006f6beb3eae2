#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <vector>

namespace hhlines {

using Vertex = int;

/// Largest supported vertex count; a vertex set is one machine word.
inline constexpr int kMaxVertices = 64;

/// Set of vertices of a graph with at most 64 vertices, stored as a bitmask.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(Vertex v) { return VertexSet{std::uint64_t{1} << v}; }
  static constexpr VertexSet range(int n) {
    return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }
  template <class Range>
  static VertexSet of(const Range& vertices) {
    VertexSet s;
    for (Vertex v : vertices) s.insert(v);
    return s;
  }
  static VertexSet of(std::initializer_list<Vertex> vertices) {
    VertexSet s;
    for (Vertex v : vertices) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  /// Least member; undefined on the empty set.
  constexpr Vertex first() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet& insert(Vertex v) {
    bits_ |= std::uint64_t{1} << v;
    return *this;
  }
  constexpr VertexSet& erase(Vertex v) {
    bits_ &= ~(std::uint64_t{1} << v);
    return *this;
  }
  constexpr VertexSet with(Vertex v) const { return VertexSet{bits_}.insert(v); }
  constexpr VertexSet without(Vertex v) const { return VertexSet{bits_}.erase(v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits_ | o.bits_}; }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits_ & o.bits_}; }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet{bits_ ^ o.bits_}; }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet{bits_ & ~o.bits_}; }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{}; }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Unordered pair of distinct vertices, stored with u < v.
struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr VertexPair of(Vertex a, Vertex b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }
  constexpr VertexSet as_set() const { return VertexSet::single(u).with(v); }
  constexpr bool operator==(const VertexPair&) const = default;
  constexpr auto operator<=>(const VertexPair&) const = default;
};

}  // namespace hhlines
