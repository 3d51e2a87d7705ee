#include "mag/topology.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace mag {

DenseAdjacency::DenseAdjacency(const Mag& g)
    : n_(g.n_composite()), words_((n_ + 63) / 64), rows_(n_ * words_, 0) {
  const Bitstring& bits = g.characteristic();
  std::uint64_t k = 0;
  for (std::uint64_t b = 1; b < n_; ++b)
    for (std::uint64_t a = 0; a < b; ++a, ++k)
      if (bits.get(k)) {
        rows_[a * words_ + (b >> 6)] |= 1ull << (b & 63);
        rows_[b * words_ + (a >> 6)] |= 1ull << (a & 63);
      }
}

std::uint64_t DenseAdjacency::degree(std::uint64_t a) const {
  std::uint64_t d = 0;
  for (std::uint64_t w = 0; w < words_; ++w)
    d += static_cast<std::uint64_t>(std::popcount(rows_[a * words_ + w]));
  return d;
}

std::uint64_t DenseAdjacency::common_neighbors(std::uint64_t a, std::uint64_t b) const {
  if (a == b) throw std::invalid_argument("common_neighbors: identical vertices");
  std::uint64_t c = 0;
  const std::uint64_t* ra = row(a);
  const std::uint64_t* rb = row(b);
  for (std::uint64_t w = 0; w < words_; ++w)
    c += static_cast<std::uint64_t>(std::popcount(ra[w] & rb[w]));
  return c;  // a and b never appear in their own rows, so they are excluded
}

DegreeConcentration degree_concentration(const DenseAdjacency& adj, double c) {
  const double half = (static_cast<double>(adj.n()) - 1.0) / 2.0;
  DegreeConcentration r;
  for (std::uint64_t v = 0; v < adj.n(); ++v)
    r.max_deviation = std::max(r.max_deviation,
                               std::abs(static_cast<double>(adj.degree(v)) - half));
  const double n = static_cast<double>(adj.n());
  r.bound = c * std::sqrt(n * std::log2(n));
  r.holds = r.max_deviation <= r.bound;
  return r;
}

DegreeConcentration degree_concentration(const Mag& g, double c) {
  return degree_concentration(DenseAdjacency(g), c);
}

std::uint64_t common_neighbor_count(const Mag& g, const CompositeVertex& u,
                                    const CompositeVertex& v) {
  const std::uint64_t a = g.signature().composite_index(u);
  const std::uint64_t b = g.signature().composite_index(v);
  return DenseAdjacency(g).common_neighbors(a, b);
}

DiameterResult composite_diameter(const DenseAdjacency& adj) {
  const std::uint64_t n = adj.n();
  const std::uint64_t words = adj.words();
  DiameterResult res;
  res.connected = true;
  std::vector<std::uint64_t> visited(words), frontier(words), next(words);
  for (std::uint64_t s = 0; s < n; ++s) {
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    visited[s >> 6] = frontier[s >> 6] = 1ull << (s & 63);
    std::uint64_t seen = 1, depth = 0;
    while (seen < n) {
      std::fill(next.begin(), next.end(), 0);
      for (std::uint64_t w = 0; w < words; ++w) {
        std::uint64_t f = frontier[w];
        while (f) {
          const std::uint64_t v = (w << 6) + static_cast<std::uint64_t>(std::countr_zero(f));
          f &= f - 1;
          const std::uint64_t* row = adj.row(v);
          for (std::uint64_t x = 0; x < words; ++x) next[x] |= row[x];
        }
      }
      std::uint64_t added = 0;
      for (std::uint64_t x = 0; x < words; ++x) {
        next[x] &= ~visited[x];
        visited[x] |= next[x];
        added += static_cast<std::uint64_t>(std::popcount(next[x]));
      }
      if (added == 0) return {false, 0};
      seen += added;
      ++depth;
      frontier.swap(next);
    }
    res.value = std::max(res.value, depth);
  }
  return res;
}

DiameterResult composite_diameter(const Mag& g) { return composite_diameter(DenseAdjacency(g)); }

ConnectivityBound connectivity_lower_bound(const DenseAdjacency& adj) {
  ConnectivityBound r;
  r.value = adj.n();  // min over pairs below
  for (std::uint64_t b = 1; b < adj.n(); ++b)
    for (std::uint64_t a = 0; a < b; ++a) {
      const std::uint64_t paths = adj.common_neighbors(a, b) + (adj.at(a, b) ? 1 : 0);
      r.value = std::min(r.value, paths);
    }
  const DiameterResult d = composite_diameter(adj);
  r.is_connectivity_bound = d.connected && d.value <= 2;
  return r;
}

ConnectivityBound connectivity_lower_bound(const Mag& g) {
  return connectivity_lower_bound(DenseAdjacency(g));
}

namespace {

// Iterated refinement: color by (old color, multiset of neighbor colors).
std::vector<std::uint32_t> refine_colors(const DenseAdjacency& adj) {
  const std::uint64_t n = adj.n();
  std::vector<std::uint32_t> color(n, 0);
  std::uint64_t classes = 1;
  for (;;) {
    std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::uint32_t> sig_to_color;
    std::vector<std::uint32_t> next(n);
    for (std::uint64_t v = 0; v < n; ++v) {
      std::vector<std::uint32_t> neigh;
      for (std::uint64_t u = 0; u < n; ++u)
        if (u != v && adj.at(v, u)) neigh.push_back(color[u]);
      std::sort(neigh.begin(), neigh.end());
      auto key = std::make_pair(color[v], std::move(neigh));
      auto [it, inserted] =
          sig_to_color.emplace(std::move(key), static_cast<std::uint32_t>(sig_to_color.size()));
      next[v] = it->second;
    }
    const std::uint64_t next_classes = sig_to_color.size();
    color.swap(next);
    if (next_classes == classes) return color;
    classes = next_classes;
  }
}

struct AutomorphismSearch {
  const DenseAdjacency& adj;
  const std::vector<std::uint32_t>& color;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<std::uint32_t> image;
  std::vector<bool> used;

  bool consistent(std::uint64_t v, std::uint64_t w) const {
    for (std::uint64_t j = 0; j < v; ++j)
      if (adj.at(v, j) != adj.at(w, image[j])) return false;
    return true;
  }

  // Extend positions v..n-1; earlier positions are already assigned.
  bool extend(std::uint64_t v) {
    const std::uint64_t n = adj.n();
    if (v == n) return true;
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    for (std::uint64_t w = 0; w < n; ++w) {
      if (used[w] || color[w] != color[v] || !consistent(v, w)) continue;
      image[v] = static_cast<std::uint32_t>(w);
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

RigidityResult is_rigid(const DenseAdjacency& adj, std::uint64_t node_budget) {
  const std::uint64_t n = adj.n();
  RigidityResult res;
  const std::vector<std::uint32_t> color = refine_colors(adj);

  // Discrete coloring: refinement is automorphism-invariant, so singleton
  // classes pin every vertex.
  std::vector<std::uint64_t> class_size(n, 0);
  for (std::uint32_t c : color) ++class_size[c];
  if (std::all_of(class_size.begin(), class_size.begin() + static_cast<std::ptrdiff_t>(n),
                  [](std::uint64_t s) { return s <= 1; })) {
    res.status = RigidityStatus::Rigid;
    return res;
  }

  // Any non-identity automorphism has a first moved vertex v; everything
  // before v is fixed pointwise.
  AutomorphismSearch search{adj, color, node_budget, 0, false, {}, {}};
  search.image.assign(n, 0);
  search.used.assign(n, false);
  for (std::uint64_t v = 0; v < n; ++v) {
    for (std::uint64_t w = v + 1; w < n; ++w) {
      if (color[w] != color[v] || !search.consistent(v, w)) continue;
      search.image[v] = static_cast<std::uint32_t>(w);
      search.used[w] = true;
      if (search.extend(v + 1)) {
        res.status = RigidityStatus::NonRigid;
        res.witness = std::vector<std::uint32_t>(search.image.begin(), search.image.end());
        res.nodes_explored = search.nodes;
        return res;
      }
      search.used[w] = false;
      if (search.exhausted) {
        res.status = RigidityStatus::Undecided;
        res.nodes_explored = search.nodes;
        return res;
      }
    }
    // fix v and move on
    search.image[v] = static_cast<std::uint32_t>(v);
    search.used[v] = true;
  }
  res.status = RigidityStatus::Rigid;
  res.nodes_explored = search.nodes;
  return res;
}

RigidityResult is_rigid(const Mag& g, std::uint64_t node_budget) {
  return is_rigid(DenseAdjacency(g), node_budget);
}

TopologyReport topology_report(const Mag& g, double c_degree, std::uint64_t rigidity_budget) {
  DenseAdjacency adj(g);
  TopologyReport r;
  r.n_composite = adj.n();
  r.min_degree = adj.n();
  for (std::uint64_t v = 0; v < adj.n(); ++v) {
    const std::uint64_t d = adj.degree(v);
    r.min_degree = std::min(r.min_degree, d);
    r.max_degree = std::max(r.max_degree, d);
  }
  const DegreeConcentration dc = degree_concentration(adj, c_degree);
  r.max_degree_deviation = dc.max_deviation;
  r.degree_bound = dc.bound;
  r.degree_bound_coefficient = c_degree;
  r.min_common_neighbors = adj.n();
  for (std::uint64_t b = 1; b < adj.n(); ++b)
    for (std::uint64_t a = 0; a < b; ++a)
      r.min_common_neighbors = std::min(r.min_common_neighbors, adj.common_neighbors(a, b));
  r.diameter = composite_diameter(adj);
  r.connectivity_lb = connectivity_lower_bound(adj);
  r.rigidity = is_rigid(adj, rigidity_budget);
  return r;
}

}  // namespace mag
