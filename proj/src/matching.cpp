#include "heg/matching.hpp"

#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace heg {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// Collapsed adjacency of the simple support: per vertex, (edge id, neighbour)
// pairs with loops and half-edges dropped and the least canonical id kept for
// each parallel class. Lists come out sorted by edge id.
std::vector<std::vector<std::pair<EdgeId, VertexId>>> simple_adjacency(
    const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<EdgeId, VertexId>>> adj(n);
  std::unordered_set<std::uint64_t> seen;
  for (EdgeId c : edge_list(g)) {
    const VertexId u = g.iota(c);
    const VertexId v = g.tau(c);
    if (u == v) continue;
    const std::uint64_t key =
        static_cast<std::uint64_t>(std::min(u, v)) * n + std::max(u, v);
    if (!seen.insert(key).second) continue;
    adj[u].push_back({c, v});
    adj[v].push_back({c, u});
  }
  return adj;
}

void check_bipartition(const Graph& g, const Bipartition& b) {
  if (b.side.size() != g.vertex_count()) {
    throw std::invalid_argument("bipartition size does not match graph");
  }
  for (const Arc& a : g.arcs()) {
    if (b.side[a.iota] > 1 || b.side[a.iota] == b.side[a.tau]) {
      throw std::invalid_argument("bipartition inconsistent with graph");
    }
  }
}

// Turns a mate array into the canonical edge list: each matched pair is
// represented by the least edge id connecting it.
Matching matching_from_mates(
    const std::vector<std::vector<std::pair<EdgeId, VertexId>>>& adj,
    const std::vector<VertexId>& mate) {
  Matching m;
  for (VertexId v = 0; v < mate.size(); ++v) {
    if (mate[v] == kNoVertex || mate[v] < v) continue;
    for (const auto& [eid, u] : adj[v]) {
      if (u == mate[v]) {
        m.edges.push_back(eid);
        break;
      }
    }
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

std::string check_matching(const Graph& g, const Matching& m) {
  std::vector<bool> used(g.vertex_count(), false);
  for (EdgeId c : m.edges) {
    if (c >= g.arc_count()) return "matching refers to an arc out of range";
    if (c != g.edge_of(c)) return "matching edge id is not canonical";
    if (g.is_half_edge(c)) return "matching contains a half-edge";
    if (g.iota(c) == g.tau(c)) return "matching contains a loop";
    if (used[g.iota(c)] || used[g.tau(c)]) {
      return "matching edges share a vertex";
    }
    used[g.iota(c)] = used[g.tau(c)] = true;
  }
  return {};
}

}  // namespace

Matching max_matching_bipartite(const Graph& g, const Bipartition& b) {
  check_bipartition(g, b);
  const std::size_t n = g.vertex_count();
  auto adj = simple_adjacency(g);

  std::vector<VertexId> lefts;
  for (VertexId v = 0; v < n; ++v) {
    if (b.side[v] == 0) lefts.push_back(v);
  }

  std::vector<VertexId> mate(n, kNoVertex);
  std::vector<std::uint32_t> dist(n);

  auto bfs = [&]() {
    std::queue<VertexId> q;
    bool reachable_free = false;
    for (VertexId l : lefts) {
      if (mate[l] == kNoVertex) {
        dist[l] = 0;
        q.push(l);
      } else {
        dist[l] = kInf;
      }
    }
    while (!q.empty()) {
      VertexId l = q.front();
      q.pop();
      for (const auto& [eid, r] : adj[l]) {
        VertexId l2 = mate[r];
        if (l2 == kNoVertex) {
          reachable_free = true;
        } else if (dist[l2] == kInf) {
          dist[l2] = dist[l] + 1;
          q.push(l2);
        }
      }
    }
    return reachable_free;
  };

  auto dfs = [&](auto&& self, VertexId l) -> bool {
    for (const auto& [eid, r] : adj[l]) {
      VertexId l2 = mate[r];
      if (l2 == kNoVertex ||
          (dist[l2] == dist[l] + 1 && self(self, l2))) {
        mate[l] = r;
        mate[r] = l;
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  };

  while (bfs()) {
    for (VertexId l : lefts) {
      if (mate[l] == kNoVertex) dfs(dfs, l);
    }
  }
  return matching_from_mates(adj, mate);
}

Matching max_matching_general(const Graph& g) {
  const std::size_t n = g.vertex_count();
  auto adj = simple_adjacency(g);

  // Edmonds' blossom algorithm, O(|V|^3): one BFS per exposed vertex with
  // odd cycles contracted through the base array.
  std::vector<VertexId> mate(n, kNoVertex);
  std::vector<VertexId> parent(n), base(n);
  std::vector<bool> used(n), in_blossom(n);

  auto lowest_common_base = [&](VertexId a, VertexId v) {
    std::vector<bool> marked(n, false);
    for (;;) {
      a = base[a];
      marked[a] = true;
      if (mate[a] == kNoVertex) break;
      a = parent[mate[a]];
    }
    for (;;) {
      v = base[v];
      if (marked[v]) return v;
      v = parent[mate[v]];
    }
  };

  auto mark_path = [&](VertexId v, VertexId b, VertexId child) {
    while (base[v] != b) {
      in_blossom[base[v]] = true;
      in_blossom[base[mate[v]]] = true;
      parent[v] = child;
      child = mate[v];
      v = parent[mate[v]];
    }
  };

  auto augment_from = [&](VertexId root) {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), kNoVertex);
    for (VertexId v = 0; v < n; ++v) base[v] = v;

    used[root] = true;
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (const auto& [eid, to] : adj[v]) {
        if (base[v] == base[to] || mate[v] == to) continue;
        if (to == root ||
            (mate[to] != kNoVertex && parent[mate[to]] != kNoVertex)) {
          // Odd cycle: contract the blossom down to the common base.
          VertexId cur_base = lowest_common_base(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (VertexId i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = cur_base;
              if (!used[i]) {
                used[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent[to] == kNoVertex) {
          parent[to] = v;
          if (mate[to] == kNoVertex) {
            // Augment along the alternating tree path.
            VertexId u = to;
            while (u != kNoVertex) {
              VertexId pv = parent[u];
              VertexId next = mate[pv];
              mate[u] = pv;
              mate[pv] = u;
              u = next;
            }
            return true;
          }
          used[mate[to]] = true;
          q.push(mate[to]);
        }
      }
    }
    return false;
  };

  for (VertexId v = 0; v < n; ++v) {
    if (mate[v] == kNoVertex) augment_from(v);
  }
  return matching_from_mates(adj, mate);
}

MatchabilityCertificate is_matchable(const Graph& g) {
  Matching m = max_matching_general(g);
  const std::size_t covered = 2 * m.edges.size();
  return {covered == g.vertex_count(), std::move(m),
          g.vertex_count() - covered};
}

std::vector<Matching> orthogonal_matchings(const Graph& g,
                                           const Bipartition& b,
                                           std::size_t k) {
  auto d = regularity(g);
  if (!d) throw std::invalid_argument("graph is not regular");
  check_bipartition(g, b);
  if (k > *d) {
    throw std::invalid_argument("requested more matchings than the degree");
  }

  std::vector<Matching> out;
  Graph cur = g;
  std::vector<ArcId> to_orig(g.arc_count());
  for (ArcId e = 0; e < g.arc_count(); ++e) to_orig[e] = e;

  for (std::size_t round = 0; round < k; ++round) {
    Matching m = max_matching_bipartite(cur, b);
    if (2 * m.edges.size() != g.vertex_count()) {
      throw std::logic_error(
          "regular bipartite graph yielded a non-perfect matching");
    }
    Matching orig;
    orig.edges.reserve(m.edges.size());
    for (EdgeId c : m.edges) orig.edges.push_back(to_orig[c]);
    std::sort(orig.edges.begin(), orig.edges.end());
    out.push_back(std::move(orig));

    auto removed = remove_matching(cur, m);
    std::vector<ArcId> next_to_orig(removed.graph.arc_count());
    for (ArcId e = 0; e < cur.arc_count(); ++e) {
      if (removed.arc_map[e] != kNoArc) {
        next_to_orig[removed.arc_map[e]] = to_orig[e];
      }
    }
    cur = std::move(removed.graph);
    to_orig = std::move(next_to_orig);
  }
  return out;
}

RemovedMatching remove_matching(const Graph& g, const Matching& m) {
  if (std::string err = check_matching(g, m); !err.empty()) {
    throw std::invalid_argument(err);
  }
  const ArcId arcs = static_cast<ArcId>(g.arc_count());
  std::vector<bool> removed(arcs, false);
  for (EdgeId c : m.edges) {
    removed[c] = true;
    removed[g.inv(c)] = true;
  }

  std::vector<ArcId> arc_map(arcs, kNoArc);
  ArcId next = 0;
  for (ArcId e = 0; e < arcs; ++e) {
    if (!removed[e]) arc_map[e] = next++;
  }

  std::vector<Arc> kept;
  kept.reserve(next);
  for (ArcId e = 0; e < arcs; ++e) {
    if (!removed[e]) {
      kept.push_back({g.iota(e), g.tau(e), arc_map[g.inv(e)]});
    }
  }
  return {Graph(g.vertex_count(), std::move(kept)), std::move(arc_map)};
}

}  // namespace heg
