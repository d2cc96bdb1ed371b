// Euler circuits, Euler orientations, and splitting a 2d-regular graph into d
// edge-disjoint 2-factors. The 2-factors plus perfect matchings feed the
// one-vertex quotient construction in cover_to_bouquet.

#pragma once

#include <cstddef>
#include <vector>

#include "heg/cover.hpp"
#include "heg/graph.hpp"
#include "heg/matching.hpp"

namespace heg {

// Arc sequence a0, a1, ... with tau(a_k) == iota(a_{k+1}) cyclically, using
// every edge exactly once. Requires a nonempty connected graph with all
// degrees even and no half-edges. Starts at vertex 0; ties break by canonical
// edge id, so the output is deterministic.
std::vector<ArcId> euler_circuit(const Graph& g);

// One arc per edge: the direction the edge was traversed in a per-component
// Euler circuit. Sorted by arc id.
struct EulerOrientation {
  std::vector<ArcId> forward;

  friend bool operator==(const EulerOrientation&,
                         const EulerOrientation&) = default;
};

// Orients every component by an Euler circuit, so each vertex ends up with
// in-degree equal to out-degree. Requires even degrees and no half-edges; the
// graph may be disconnected or empty.
EulerOrientation orient_by_euler(const Graph& g);

// Spanning subgraph with every vertex of degree 2, stored as an orientation:
// successor[v] is the arc leaving v. A loop occupies its vertex alone; two
// parallel edges may form a 2-cycle.
struct TwoFactor {
  std::vector<ArcId> successor;

  friend bool operator==(const TwoFactor&, const TwoFactor&) = default;
};

// Splits a 2d-regular graph without half-edges into d edge-disjoint
// 2-factors. Parallel edges and loops are fine; connectivity is not required.
std::vector<TwoFactor> two_factorization(const Graph& g);

// Single vertex carrying d loops then n half-edges. Loop i uses arcs
// (2i, 2i+1); half-edge j is arc 2d + j.
Graph bouquet(std::size_t d, std::size_t n);

// Covering map from g onto bouquet(factors.size(), matchings.size()): factor
// i wraps around loop i (successor arcs on the forward side) and matching j
// folds onto half-edge j. The factors and matchings must together use every
// edge of g exactly once, and each matching must be perfect; throws
// std::invalid_argument otherwise.
CoveringMap cover_to_bouquet(const Graph& g,
                             const std::vector<TwoFactor>& factors,
                             const std::vector<Matching>& matchings);

}  // namespace heg
