#include "heg/graph.hpp"

#include <queue>
#include <stdexcept>

namespace heg {

namespace {

void check_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

ArcId Graph::add_edge(VertexId u, VertexId v) {
  if (u >= vertex_count_ || v >= vertex_count_) {
    throw std::out_of_range("edge endpoint out of range");
  }
  const ArcId e = static_cast<ArcId>(arcs_.size());
  arcs_.push_back({u, v, e + 1});
  arcs_.push_back({v, u, e});
  return e;
}

ArcId Graph::add_loop(VertexId v) {
  if (v >= vertex_count_) {
    throw std::out_of_range("loop vertex out of range");
  }
  const ArcId e = static_cast<ArcId>(arcs_.size());
  arcs_.push_back({v, v, e + 1});
  arcs_.push_back({v, v, e});
  return e;
}

ArcId Graph::add_half_edge(VertexId v) {
  if (v >= vertex_count_) {
    throw std::out_of_range("half-edge vertex out of range");
  }
  const ArcId e = static_cast<ArcId>(arcs_.size());
  arcs_.push_back({v, v, e});
  return e;
}

std::vector<std::string> validate(const Graph& g) {
  std::vector<std::string> out;
  const auto& arcs = g.arcs();
  const ArcId m = static_cast<ArcId>(arcs.size());
  for (ArcId e = 0; e < m; ++e) {
    const Arc& a = arcs[e];
    bool in_range = true;
    if (a.iota >= g.vertex_count()) {
      out.push_back("arc " + std::to_string(e) + ": iota out of range");
      in_range = false;
    }
    if (a.tau >= g.vertex_count()) {
      out.push_back("arc " + std::to_string(e) + ": tau out of range");
      in_range = false;
    }
    if (a.inv >= m) {
      out.push_back("arc " + std::to_string(e) + ": inverse arc id out of range");
      continue;
    }
    if (arcs[a.inv].inv != e) {
      out.push_back("arc " + std::to_string(e) +
                    ": inverse map is not an involution");
    }
    if (!in_range) continue;
    if (arcs[a.inv].iota != a.tau || arcs[a.inv].tau != a.iota) {
      if (a.inv == e) {
        out.push_back("arc " + std::to_string(e) +
                      ": half-edge must have iota == tau");
      } else {
        out.push_back("arc " + std::to_string(e) +
                      ": inverse arc endpoints do not match");
      }
    }
  }
  return out;
}

std::size_t degree(const Graph& g, VertexId v) {
  check_vertex(g, v);
  std::size_t n = 0;
  for (const Arc& a : g.arcs()) {
    if (a.iota == v) ++n;
  }
  return n;
}

std::vector<ArcId> star(const Graph& g, VertexId v) {
  check_vertex(g, v);
  std::vector<ArcId> out;
  const ArcId m = static_cast<ArcId>(g.arc_count());
  for (ArcId e = 0; e < m; ++e) {
    if (g.iota(e) == v) out.push_back(e);
  }
  return out;
}

std::optional<std::size_t> regularity(const Graph& g) {
  if (g.vertex_count() == 0) {
    throw std::invalid_argument("regularity of the empty graph");
  }
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const Arc& a : g.arcs()) ++deg[a.iota];
  for (std::size_t v = 1; v < deg.size(); ++v) {
    if (deg[v] != deg[0]) return std::nullopt;
  }
  return deg[0];
}

std::vector<std::vector<ArcId>> star_table(const Graph& g) {
  std::vector<std::vector<ArcId>> table(g.vertex_count());
  const ArcId m = static_cast<ArcId>(g.arc_count());
  for (ArcId e = 0; e < m; ++e) table[g.iota(e)].push_back(e);
  return table;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  auto stars = star_table(g);
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> comps;
  for (VertexId root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<VertexId> comp;
    std::queue<VertexId> q;
    seen[root] = true;
    q.push(root);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      comp.push_back(v);
      for (ArcId e : stars[v]) {
        VertexId w = g.tau(e);
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  // Any loop or half-edge joins a vertex to itself and kills 2-colorability.
  for (const Arc& a : g.arcs()) {
    if (a.iota == a.tau) return std::nullopt;
  }
  auto stars = star_table(g);
  std::vector<std::uint8_t> side(n, 2);
  for (VertexId root = 0; root < n; ++root) {
    if (side[root] != 2) continue;
    side[root] = 0;
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (ArcId e : stars[v]) {
        VertexId w = g.tau(e);
        if (side[w] == 2) {
          side[w] = static_cast<std::uint8_t>(1 - side[v]);
          q.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return Bipartition{std::move(side)};
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() == 1;
}

bool has_half_edge(const Graph& g) {
  const ArcId m = static_cast<ArcId>(g.arc_count());
  for (ArcId e = 0; e < m; ++e) {
    if (g.inv(e) == e) return true;
  }
  return false;
}

std::vector<EdgeId> edge_list(const Graph& g) {
  std::vector<EdgeId> out;
  const ArcId m = static_cast<ArcId>(g.arc_count());
  for (ArcId e = 0; e < m; ++e) {
    if (e <= g.inv(e)) out.push_back(e);
  }
  return out;
}

}  // namespace heg
