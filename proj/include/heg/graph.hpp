// Arc-based multigraph model: parallel edges, loops and half-edges.
//
// A graph is a vertex count plus a list of arcs. Each arc knows its initial
// vertex (iota), terminal vertex (tau) and inverse arc. An edge is the orbit
// {e, inv(e)} of the inversion; a half-edge is a self-inverse arc and adds 1
// to the degree of its vertex, while a loop is stored as two mutually inverse
// arcs with iota == tau and adds 2.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace heg {

using VertexId = std::uint32_t;
using ArcId = std::uint32_t;
// An edge is identified by its canonical arc: the smaller id of {e, inv(e)}.
using EdgeId = ArcId;

inline constexpr ArcId kNoArc = 0xffffffffu;
inline constexpr VertexId kNoVertex = 0xffffffffu;

struct Arc {
  VertexId iota;
  VertexId tau;
  ArcId inv;

  friend bool operator==(const Arc&, const Arc&) = default;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : vertex_count_(vertex_count) {}
  // Raw construction; invariants are checked by validate(), not here.
  Graph(std::size_t vertex_count, std::vector<Arc> arcs)
      : vertex_count_(vertex_count), arcs_(std::move(arcs)) {}

  // Appends the mutually inverse arc pair u->v, v->u. Returns the first id.
  ArcId add_edge(VertexId u, VertexId v);
  // Appends a loop at v: two distinct mutually inverse arcs with iota == tau.
  ArcId add_loop(VertexId v);
  // Appends a half-edge at v: one self-inverse arc.
  ArcId add_half_edge(VertexId v);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  VertexId iota(ArcId e) const { return arcs_[e].iota; }
  VertexId tau(ArcId e) const { return arcs_[e].tau; }
  ArcId inv(ArcId e) const { return arcs_[e].inv; }

  bool is_half_edge(ArcId e) const { return arcs_[e].inv == e; }
  bool is_loop(ArcId e) const {
    return arcs_[e].inv != e && arcs_[e].iota == arcs_[e].tau;
  }
  EdgeId edge_of(ArcId e) const { return std::min(e, arcs_[e].inv); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Arc> arcs_;
};

// Two-coloring of the vertices; only graphs without loops and half-edges and
// without odd cycles admit one.
struct Bipartition {
  std::vector<std::uint8_t> side;
};

// Checks the structural invariants (inv is an involution, inverse arcs swap
// endpoints, half-edges sit on a single vertex) and returns one message per
// violated invariant. Empty result means the graph is valid.
std::vector<std::string> validate(const Graph& g);

// Number of arcs with iota == v. A loop contributes 2, a half-edge 1.
std::size_t degree(const Graph& g, VertexId v);

// Arcs leaving v, ascending.
std::vector<ArcId> star(const Graph& g, VertexId v);

// Common degree d if the graph is regular, absent otherwise.
// Throws std::invalid_argument on the empty graph.
std::optional<std::size_t> regularity(const Graph& g);

// Vertex sets of the connected components, each sorted ascending; components
// ordered by their least vertex.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

// A 2-coloring with each component's least vertex on side 0, or absent if
// none exists (any loop or half-edge rules one out).
std::optional<Bipartition> bipartition(const Graph& g);

bool is_connected(const Graph& g);
bool has_half_edge(const Graph& g);

// Canonical arcs (e <= inv(e)), ascending: one id per edge.
std::vector<EdgeId> edge_list(const Graph& g);

// star(v) for every vertex at once; each list ascending.
std::vector<std::vector<ArcId>> star_table(const Graph& g);

}  // namespace heg
