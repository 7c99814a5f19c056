#include "twoblocks/relation.hpp"

#include <bit>

namespace twoblocks {

BitMatrix::BitMatrix(std::size_t n, bool fill)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), fill ? ~std::uint64_t{0} : 0) {
  if (fill && (n & 63) != 0) {
    const std::uint64_t tail = (std::uint64_t{1} << (n & 63)) - 1;
    for (std::size_t r = 0; r < n; ++r) bits_[r * words_ + words_ - 1] = tail;
  }
}

PairRelation PairRelation::from_directional(const BitMatrix& a) {
  const std::size_t n = a.size();
  PairRelation rel(n);
  for (Vertex v = 0; v < n; ++v) {
    auto src = a.row(v);
    for (std::size_t k = 0; k < src.size(); ++k) {
      std::uint64_t word = src[k];
      while (word != 0) {
        const auto w = static_cast<Vertex>(k * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
        if (w > v && a.test(w, v)) rel.insert(v, w);
      }
    }
  }
  return rel;
}

void PairRelation::insert(Vertex v, Vertex w) {
  if (v == w) return;
  bits_.set(v, w);
  bits_.set(w, v);
}

VertexSet PairRelation::related_to(Vertex v) const {
  VertexSet out;
  auto src = bits_.row(v);
  for (std::size_t k = 0; k < src.size(); ++k) {
    std::uint64_t word = src[k];
    while (word != 0) {
      out.push_back(static_cast<Vertex>(k * 64 + static_cast<std::size_t>(std::countr_zero(word))));
      word &= word - 1;
    }
  }
  return out;
}

std::size_t PairRelation::pair_count() const {
  std::size_t total = 0;
  for (Vertex v = 0; v < size(); ++v) {
    for (std::uint64_t word : bits_.row(v)) total += static_cast<std::size_t>(std::popcount(word));
  }
  return total / 2;
}

UndirectedGraph PairRelation::graph() const {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex v = 0; v < size(); ++v) {
    for (Vertex w : related_to(v)) {
      if (w > v) pairs.emplace_back(v, w);
    }
  }
  return UndirectedGraph::from_edges(size(), pairs);
}

}  // namespace twoblocks
