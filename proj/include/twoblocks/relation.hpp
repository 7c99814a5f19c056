#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "twoblocks/graph.hpp"

namespace twoblocks {

/// n rows of n bits, one 64-bit-word-aligned row per vertex, so distinct rows
/// can be written concurrently.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t n, bool fill);

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  bool test(Vertex r, Vertex c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
  void set(Vertex r, Vertex c) { row(r)[c >> 6] |= std::uint64_t{1} << (c & 63); }
  void reset(Vertex r, Vertex c) { row(r)[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }

  std::span<std::uint64_t> row(Vertex r) { return {bits_.data() + r * words_, words_}; }
  std::span<const std::uint64_t> row(Vertex r) const { return {bits_.data() + r * words_, words_}; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Symmetric relation over unordered vertex pairs: {v, w} is present iff the
/// directional matrix had both A[v][w] and A[w][v]. The diagonal is never set.
class PairRelation {
 public:
  PairRelation() = default;
  explicit PairRelation(std::size_t n) : bits_(n, false) {}

  static PairRelation from_directional(const BitMatrix& a);

  std::size_t size() const { return bits_.size(); }
  bool contains(Vertex v, Vertex w) const { return v != w && bits_.test(v, w); }
  void insert(Vertex v, Vertex w);
  // Neighbours of v under the relation, ascending.
  VertexSet related_to(Vertex v) const;
  std::size_t pair_count() const;

  /// G*: one undirected edge per related pair.
  UndirectedGraph graph() const;

  friend bool operator==(const PairRelation&, const PairRelation&) = default;

 private:
  BitMatrix bits_;
};

}  // namespace twoblocks
