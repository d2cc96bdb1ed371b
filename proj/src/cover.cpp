#include "heg/cover.hpp"

#include <stdexcept>

namespace heg {

std::pair<Graph, CoveringMap> canonical_double_cover(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const ArcId m = static_cast<ArcId>(g.arc_count());

  std::vector<Arc> arcs(2 * static_cast<std::size_t>(m));
  for (ArcId e = 0; e < m; ++e) {
    const ArcId j = g.inv(e);
    const VertexId u = g.iota(e);
    const VertexId w = g.tau(e);
    // Lift with origin in copy 0, then copy 1. Inverses live in the other
    // copy, so a half-edge (j == e) lifts to a genuine edge between copies.
    arcs[2 * e] = {u, static_cast<VertexId>(w + n), 2 * j + 1};
    arcs[2 * e + 1] = {static_cast<VertexId>(u + n), w, 2 * j};
  }
  Graph cover(2 * n, std::move(arcs));

  std::vector<VertexId> vmap(2 * n);
  for (std::size_t v = 0; v < 2 * n; ++v) {
    vmap[v] = static_cast<VertexId>(v < n ? v : v - n);
  }
  std::vector<ArcId> amap(2 * static_cast<std::size_t>(m));
  for (ArcId a = 0; a < 2 * m; ++a) amap[a] = a / 2;

  CoveringMap map{cover, g, std::move(vmap), std::move(amap)};
  return {std::move(cover), std::move(map)};
}

std::vector<std::string> verify_covering(const CoveringMap& m) {
  if (m.vertex_map.size() != m.source.vertex_count()) {
    throw std::invalid_argument("vertex map size does not match source graph");
  }
  if (m.arc_map.size() != m.source.arc_count()) {
    throw std::invalid_argument("arc map size does not match source graph");
  }

  std::vector<std::string> out;
  const std::size_t n = m.source.vertex_count();
  const ArcId arcs = static_cast<ArcId>(m.source.arc_count());

  bool images_ok = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (m.vertex_map[v] >= m.target.vertex_count()) {
      out.push_back("vertex " + std::to_string(v) + ": image out of range");
      images_ok = false;
    }
  }
  for (ArcId e = 0; e < arcs; ++e) {
    if (m.arc_map[e] >= m.target.arc_count()) {
      out.push_back("arc " + std::to_string(e) + ": image out of range");
      images_ok = false;
    }
  }
  if (!images_ok) return out;

  for (ArcId e = 0; e < arcs; ++e) {
    const ArcId fe = m.arc_map[e];
    if (m.target.iota(fe) != m.vertex_map[m.source.iota(e)]) {
      out.push_back("arc " + std::to_string(e) +
                    ": iota does not commute with the maps");
    }
    if (m.target.tau(fe) != m.vertex_map[m.source.tau(e)]) {
      out.push_back("arc " + std::to_string(e) +
                    ": tau does not commute with the maps");
    }
    if (m.arc_map[m.source.inv(e)] != m.target.inv(fe)) {
      out.push_back("arc " + std::to_string(e) +
                    ": inversion does not commute with the maps");
    }
  }

  auto target_stars = star_table(m.target);
  auto source_stars = star_table(m.source);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<ArcId> images;
    images.reserve(source_stars[v].size());
    for (ArcId e : source_stars[v]) images.push_back(m.arc_map[e]);
    std::sort(images.begin(), images.end());
    if (images != target_stars[m.vertex_map[v]]) {
      out.push_back("vertex " + std::to_string(v) +
                    ": star restriction is not a bijection onto star(" +
                    std::to_string(m.vertex_map[v]) + ")");
    }
  }
  return out;
}

bool is_double_cover(const CoveringMap& m) {
  if (!verify_covering(m).empty()) {
    throw std::invalid_argument("not a valid covering map");
  }
  std::vector<std::size_t> count(m.target.vertex_count(), 0);
  for (VertexId image : m.vertex_map) ++count[image];
  for (std::size_t c : count) {
    if (c != 2) return false;
  }
  return true;
}

std::vector<VertexId> fiber(const CoveringMap& m, VertexId target_vertex) {
  if (target_vertex >= m.target.vertex_count()) {
    throw std::out_of_range("target vertex out of range");
  }
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < m.vertex_map.size(); ++v) {
    if (m.vertex_map[v] == target_vertex) {
      out.push_back(static_cast<VertexId>(v));
    }
  }
  return out;
}

}  // namespace heg
