// Covering maps and the canonical double cover (tensor product with K2).

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heg/graph.hpp"

namespace heg {

// A graph morphism source -> target with explicit vertex and arc tables.
// It is a covering when it commutes with iota/tau/inv and restricts to a
// bijection on every star.
struct CoveringMap {
  Graph source;
  Graph target;
  std::vector<VertexId> vertex_map;
  std::vector<ArcId> arc_map;
};

// The canonical double cover of g. Vertex (v, i) is encoded as v + i*|V|;
// source arc e lifts to arcs 2e (origin in copy 0) and 2e+1 (copy 1). A loop
// lifts to a pair of parallel edges between the two copies of its vertex, a
// half-edge to a single edge. The returned map projects both copies onto g.
std::pair<Graph, CoveringMap> canonical_double_cover(const Graph& g);

// Checks both covering invariants exhaustively and reports each failure.
// Empty result means m is a covering. Throws std::invalid_argument if the
// map tables do not match the graphs' sizes.
std::vector<std::string> verify_covering(const CoveringMap& m);

// True iff every target vertex has exactly two preimages.
// Throws std::invalid_argument unless m is a valid covering.
bool is_double_cover(const CoveringMap& m);

// Preimages of a target vertex, ascending.
std::vector<VertexId> fiber(const CoveringMap& m, VertexId target_vertex);

}  // namespace heg
