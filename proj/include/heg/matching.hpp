// Maximum matchings: augmenting-path search on bipartite multigraphs,
// Edmonds blossom on general graphs, and extraction of pairwise orthogonal
// perfect matchings from regular bipartite graphs.

#pragma once

#include <string>
#include <vector>

#include "heg/graph.hpp"

namespace heg {

// A set of endpoint-disjoint edges, none of them a loop or half-edge,
// stored as sorted canonical arc ids.
struct Matching {
  std::vector<EdgeId> edges;

  friend bool operator==(const Matching&, const Matching&) = default;
};

struct MatchabilityCertificate {
  bool matchable;
  Matching matching;  // perfect if matchable, otherwise maximum
  std::size_t deficiency;  // |V| - 2|matching|
};

// Maximum matching of a bipartite multigraph via Hopcroft-Karp phases.
// Deterministic: free vertices are scanned in increasing id, neighbours in
// increasing canonical edge id; parallel classes are collapsed during the
// search and the least edge id represents each matched pair.
// Throws std::invalid_argument if b is inconsistent with g.
Matching max_matching_bipartite(const Graph& g, const Bipartition& b);

// Maximum matching of an arbitrary multigraph via blossom contraction on the
// simple support (loops and half-edges dropped, parallel classes collapsed).
Matching max_matching_general(const Graph& g);

MatchabilityCertificate is_matchable(const Graph& g);

// k pairwise edge-disjoint perfect matchings of a d-regular bipartite
// multigraph, k <= d, produced by repeated extraction and removal. Each
// removal leaves a regular bipartite graph, so every round stays perfect.
std::vector<Matching> orthogonal_matchings(const Graph& g,
                                           const Bipartition& b,
                                           std::size_t k);

struct RemovedMatching {
  Graph graph;
  // Old arc id -> new arc id; kNoArc for the removed arcs.
  std::vector<ArcId> arc_map;
};

// Deletes the matched edges, keeping the vertex set and re-indexing the
// remaining arcs densely. Throws std::invalid_argument unless m is a
// matching of g.
RemovedMatching remove_matching(const Graph& g, const Matching& m);

}  // namespace heg
