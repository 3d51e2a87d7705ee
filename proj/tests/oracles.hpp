// Independent brute-force oracles used only by tests. They must stay free of
// the implementation paths they check: plain adjacency matrices, exhaustive
// enumeration, no bitset tricks.
#ifndef MAG_TESTS_ORACLES_HPP
#define MAG_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "mag/mag.hpp"

namespace oracles {

inline std::vector<std::vector<bool>> adjacency(const mag::Mag& g) {
  const std::uint64_t n = g.n_composite();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::uint64_t b = 1; b < n; ++b)
    for (std::uint64_t a = 0; a < b; ++a)
      adj[a][b] = adj[b][a] = g.has_edge_by_index(a, b);
  return adj;
}

// Floyd-Warshall eccentricity maximum; -1 when disconnected.
inline std::int64_t diameter(const mag::Mag& g) {
  const std::int64_t inf = 1 << 20;
  const auto adj = adjacency(g);
  const std::uint64_t n = g.n_composite();
  std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, inf));
  for (std::uint64_t i = 0; i < n; ++i) d[i][i] = 0;
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      if (adj[i][j]) d[i][j] = 1;
  for (std::uint64_t k = 0; k < n; ++k)
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::int64_t diam = 0;
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) {
      if (d[i][j] >= inf) return -1;
      diam = std::max(diam, d[i][j]);
    }
  return diam;
}

inline std::uint64_t common_neighbors(const mag::Mag& g, std::uint64_t u, std::uint64_t v) {
  const auto adj = adjacency(g);
  std::uint64_t c = 0;
  for (std::uint64_t w = 0; w < g.n_composite(); ++w)
    if (w != u && w != v && adj[u][w] && adj[w][v]) ++c;
  return c;
}

// Tries all N! permutations; returns a non-identity automorphism if any.
inline std::optional<std::vector<std::uint64_t>> nonidentity_automorphism(const mag::Mag& g) {
  const auto adj = adjacency(g);
  const std::uint64_t n = g.n_composite();
  std::vector<std::uint64_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    bool ok = true;
    for (std::uint64_t i = 0; i < n && ok; ++i)
      for (std::uint64_t j = i + 1; j < n && ok; ++j)
        if (adj[i][j] != adj[perm[i]][perm[j]]) ok = false;
    if (ok) return perm;
  }
  return std::nullopt;
}

// All length-2 u-w-v paths whose u-w or w-v edge is noncontiguous in the
// given aspect, plus the direct edge; exhaustive.
inline bool has_noncontiguous_witness(const mag::Mag& g, std::uint64_t u, std::uint64_t v,
                                      std::uint32_t aspect) {
  const mag::MagSignature& sig = g.signature();
  const auto adj = adjacency(g);
  auto coord = [&](std::uint64_t idx) {
    return static_cast<std::int64_t>(sig.vertex_at(idx).coords[aspect - 1]);
  };
  auto noncontiguous = [&](std::uint64_t a, std::uint64_t b) {
    return std::abs(coord(a) - coord(b)) >= 2;
  };
  if (adj[u][v] && noncontiguous(u, v)) return true;
  for (std::uint64_t w = 0; w < g.n_composite(); ++w)
    if (w != u && w != v && adj[u][w] && adj[w][v] &&
        (noncontiguous(u, w) || noncontiguous(w, v)))
      return true;
  return false;
}

}  // namespace oracles

#endif
