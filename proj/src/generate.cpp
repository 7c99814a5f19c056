#include "twoblocks/generate.hpp"

#include <algorithm>
#include <string>

#include "twoblocks/errors.hpp"

namespace twoblocks {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // reject the short tail so every residue is equally likely
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

DiGraph random_strong_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2 || m < n || m > n * (n - 1)) {
    throw InputError("gen: need 2 <= n and n <= m <= n(n-1), got n=" + std::to_string(n) +
                     " m=" + std::to_string(m));
  }
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[uniform_below(rng, i + 1)]);

  std::vector<char> present(n * n, 0);
  EdgeList edges;
  edges.reserve(m);
  auto add = [&](Vertex u, Vertex v) {
    present[u * n + v] = 1;
    edges.push_back({u, v});
  };
  for (std::size_t i = 0; i < n; ++i) add(order[i], order[(i + 1) % n]);

  const std::size_t capacity = n * (n - 1);
  if (2 * m > capacity) {
    // dense: draw from the explicit list of non-edges
    std::vector<Edge> free;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u != v && !present[u * n + v]) free.push_back({u, v});
      }
    }
    for (std::size_t i = 0; edges.size() < m; ++i) {
      std::swap(free[i], free[i + uniform_below(rng, free.size() - i)]);
      add(free[i].from, free[i].to);
    }
  } else {
    while (edges.size() < m) {
      const auto u = static_cast<Vertex>(uniform_below(rng, n));
      const auto v = static_cast<Vertex>(uniform_below(rng, n));
      if (u != v && !present[u * n + v]) add(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  return DiGraph::from_canonical_edges(n, std::move(edges));
}

}  // namespace twoblocks
