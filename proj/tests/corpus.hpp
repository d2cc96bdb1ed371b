// Test corpora: exhaustive enumeration of small multigraphs and seeded random
// generators for larger ones. Graphs come out in canonical record order
// (sorted edges, then loops, then half-edges) so their serialization is
// already canonical.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "heg/graph.hpp"

namespace corpus {

namespace detail {

struct RegularState {
  std::size_t n = 0;
  std::size_t degree = 0;
  bool allow_half = false;
  bool connected_only = false;
  const std::function<void(const heg::Graph&)>* emit = nullptr;
  std::vector<std::size_t> rem;
  std::vector<std::size_t> halves;
  std::vector<std::size_t> loops;
  std::vector<std::vector<std::size_t>> mult;  // mult[u][v] for u < v
};

inline void build_and_emit(RegularState& s) {
  heg::Graph g(s.n);
  for (heg::VertexId u = 0; u < s.n; ++u) {
    for (heg::VertexId v = u + 1; v < s.n; ++v) {
      for (std::size_t i = 0; i < s.mult[u][v]; ++i) g.add_edge(u, v);
    }
  }
  for (heg::VertexId v = 0; v < s.n; ++v) {
    for (std::size_t i = 0; i < s.loops[v]; ++i) g.add_loop(v);
  }
  for (heg::VertexId v = 0; v < s.n; ++v) {
    for (std::size_t i = 0; i < s.halves[v]; ++i) g.add_half_edge(v);
  }
  if (s.connected_only && !heg::is_connected(g)) return;
  (*s.emit)(g);
}

// Cells for vertex v are decided in order: half-edges, loops, then the pair
// multiplicities toward every higher vertex. Edges to lower vertices are
// already fixed, so rem[v] must hit zero exactly when v's cells run out.
inline void enum_pairs(RegularState& s, heg::VertexId v, heg::VertexId w);

inline void enum_vertex(RegularState& s, heg::VertexId v) {
  if (v == s.n) {
    build_and_emit(s);
    return;
  }
  const std::size_t max_h = s.allow_half ? s.rem[v] : 0;
  for (std::size_t h = 0; h <= max_h; ++h) {
    s.halves[v] = h;
    s.rem[v] -= h;
    for (std::size_t l = 0; l * 2 <= s.rem[v]; ++l) {
      s.loops[v] = l;
      s.rem[v] -= 2 * l;
      enum_pairs(s, v, v + 1);
      s.rem[v] += 2 * l;
    }
    s.rem[v] += h;
  }
  s.halves[v] = 0;
  s.loops[v] = 0;
}

inline void enum_pairs(RegularState& s, heg::VertexId v, heg::VertexId w) {
  if (w == s.n) {
    if (s.rem[v] == 0) enum_vertex(s, v + 1);
    return;
  }
  const std::size_t cap = std::min(s.rem[v], s.rem[w]);
  // The remaining pairs of v can absorb at most sum(rem of later vertices).
  for (std::size_t m = 0; m <= cap; ++m) {
    s.mult[v][w] = m;
    s.rem[v] -= m;
    s.rem[w] -= m;
    std::size_t later = 0;
    for (heg::VertexId x = w + 1; x < s.n; ++x) later += s.rem[x];
    if (s.rem[v] <= later) enum_pairs(s, v, w + 1);
    s.rem[v] += m;
    s.rem[w] += m;
  }
  s.mult[v][w] = 0;
}

}  // namespace detail

// Every `degree`-regular multigraph on n labeled vertices, optionally with
// half-edges, optionally restricted to connected ones.
inline void enumerate_regular(std::size_t n, std::size_t degree, bool allow_half,
                              bool connected_only,
                              const std::function<void(const heg::Graph&)>& emit) {
  detail::RegularState s;
  s.n = n;
  s.degree = degree;
  s.allow_half = allow_half;
  s.connected_only = connected_only;
  s.emit = &emit;
  s.rem.assign(n, degree);
  s.halves.assign(n, 0);
  s.loops.assign(n, 0);
  s.mult.assign(n, std::vector<std::size_t>(n, 0));
  detail::enum_vertex(s, 0);
}

// Every multigraph on n labeled vertices with pair multiplicity at most
// max_mult and at most one loop and one half-edge per vertex. No degree or
// connectivity constraint; meant for matching tests.
inline void enumerate_multigraphs(std::size_t n, std::size_t max_mult,
                                  const std::function<void(const heg::Graph&)>& emit) {
  std::vector<std::pair<heg::VertexId, heg::VertexId>> pairs;
  for (heg::VertexId u = 0; u < n; ++u) {
    for (heg::VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::vector<std::size_t> mult(pairs.size(), 0);
  std::vector<std::size_t> loops(n, 0);
  std::vector<std::size_t> halves(n, 0);
  const std::size_t cells = pairs.size() + 2 * n;
  std::function<void(std::size_t)> rec = [&](std::size_t cell) {
    if (cell == cells) {
      heg::Graph g(n);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = 0; j < mult[i]; ++j) g.add_edge(pairs[i].first, pairs[i].second);
      }
      for (heg::VertexId v = 0; v < n; ++v) {
        if (loops[v]) g.add_loop(v);
      }
      for (heg::VertexId v = 0; v < n; ++v) {
        if (halves[v]) g.add_half_edge(v);
      }
      emit(g);
      return;
    }
    if (cell < pairs.size()) {
      for (std::size_t m = 0; m <= max_mult; ++m) {
        mult[cell] = m;
        rec(cell + 1);
      }
      mult[cell] = 0;
    } else if (cell < pairs.size() + n) {
      for (std::size_t l = 0; l <= 1; ++l) {
        loops[cell - pairs.size()] = l;
        rec(cell + 1);
      }
    } else {
      for (std::size_t h = 0; h <= 1; ++h) {
        halves[cell - pairs.size() - n] = h;
        rec(cell + 1);
      }
    }
  };
  rec(0);
}

namespace detail {

// Pair shuffled stubs into edges; vertex v owns stubs[v] stubs. The total
// must be even. Half-edge counts are appended as-is.
inline heg::Graph pair_stubs(std::mt19937& rng, const std::vector<std::size_t>& stubs,
                             const std::vector<std::size_t>& halves) {
  const std::size_t n = stubs.size();
  std::vector<heg::VertexId> pool;
  for (heg::VertexId v = 0; v < n; ++v) pool.insert(pool.end(), stubs[v], v);
  if (pool.size() % 2 != 0) throw std::invalid_argument("odd stub total");
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::pair<heg::VertexId, heg::VertexId>> recs;
  for (std::size_t i = 0; i < pool.size(); i += 2) {
    recs.push_back({std::min(pool[i], pool[i + 1]), std::max(pool[i], pool[i + 1])});
  }
  std::sort(recs.begin(), recs.end());
  heg::Graph g(n);
  for (const auto& [u, v] : recs) {
    if (u == v) continue;
    g.add_edge(u, v);
  }
  for (const auto& [u, v] : recs) {
    if (u == v) g.add_loop(u);
  }
  for (heg::VertexId v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < halves[v]; ++i) g.add_half_edge(v);
  }
  return g;
}

}  // namespace detail

// Connected d-regular multigraph (loops and parallels allowed, no half-edges)
// by stub pairing with a connectivity retry. Requires n * degree even.
inline heg::Graph random_regular(std::mt19937& rng, std::size_t n, std::size_t degree) {
  const std::vector<std::size_t> stubs(n, degree);
  const std::vector<std::size_t> halves(n, 0);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    heg::Graph g = detail::pair_stubs(rng, stubs, halves);
    if (heg::is_connected(g)) return g;
  }
  throw std::runtime_error("random regular graph did not connect");
}

// Same, but a random subset of vertices trades one stub for a half-edge. At
// least one half-edge survives; parity is fixed up on vertex 0 or 1.
inline heg::Graph random_regular_with_halves(std::mt19937& rng, std::size_t n,
                                             std::size_t degree) {
  if (n < 2 || degree == 0) throw std::invalid_argument("corpus graph too small");
  std::vector<std::size_t> halves(n, 0);
  std::uniform_int_distribution<int> coin(0, 3);
  std::size_t total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    halves[v] = coin(rng) == 0 ? 1 : 0;
    total += halves[v];
  }
  if ((n * degree - total) % 2 != 0) {
    halves[0] = 1 - halves[0];
    total += halves[0] ? 1 : -1;
  }
  if (total == 0) {
    halves[0] = 1;
    halves[1] = 1;
  }
  std::vector<std::size_t> stubs(n);
  for (std::size_t v = 0; v < n; ++v) stubs[v] = degree - halves[v];
  for (int attempt = 0; attempt < 2000; ++attempt) {
    heg::Graph g = detail::pair_stubs(rng, stubs, halves);
    if (heg::is_connected(g)) return g;
  }
  throw std::runtime_error("random regular graph did not connect");
}

// Connected d-regular bipartite multigraph on sides of size `half`, as the
// union of d uniform permutations.
inline heg::Graph random_regular_bipartite(std::mt19937& rng, std::size_t half,
                                           std::size_t degree) {
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::vector<std::pair<heg::VertexId, heg::VertexId>> recs;
    std::vector<heg::VertexId> perm(half);
    for (std::size_t k = 0; k < degree; ++k) {
      for (std::size_t i = 0; i < half; ++i) perm[i] = static_cast<heg::VertexId>(i);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t i = 0; i < half; ++i) {
        recs.push_back({static_cast<heg::VertexId>(i),
                        static_cast<heg::VertexId>(half + perm[i])});
      }
    }
    std::sort(recs.begin(), recs.end());
    heg::Graph g(2 * half);
    for (const auto& [u, v] : recs) g.add_edge(u, v);
    if (heg::is_connected(g)) return g;
  }
  throw std::runtime_error("random bipartite graph did not connect");
}

// Arbitrary multigraph: `edges` endpoint pairs drawn uniformly (loops when
// they collide) plus an occasional half-edge. Not necessarily connected.
inline heg::Graph random_multigraph(std::mt19937& rng, std::size_t n, std::size_t edges) {
  std::uniform_int_distribution<heg::VertexId> pick(0, static_cast<heg::VertexId>(n - 1));
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<std::pair<heg::VertexId, heg::VertexId>> recs;
  for (std::size_t i = 0; i < edges; ++i) {
    heg::VertexId u = pick(rng);
    heg::VertexId v = pick(rng);
    recs.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(recs.begin(), recs.end());
  heg::Graph g(n);
  for (const auto& [u, v] : recs) {
    if (u != v) g.add_edge(u, v);
  }
  for (const auto& [u, v] : recs) {
    if (u == v) g.add_loop(u);
  }
  for (heg::VertexId v = 0; v < n; ++v) {
    if (coin(rng) == 0) g.add_half_edge(v);
  }
  return g;
}

}  // namespace corpus
