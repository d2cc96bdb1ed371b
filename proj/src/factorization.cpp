#include "heg/factorization.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace heg {

namespace {

void require_even_no_half(const Graph& g) {
  if (has_half_edge(g)) {
    throw std::invalid_argument("graph has a half-edge");
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (degree(g, v) % 2 != 0) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " has odd degree");
    }
  }
}

// Per-vertex arc lists ordered by (canonical edge, arc id), a cursor into
// each, and a used-edge mask. Shared across components so a second trace
// skips everything the first one consumed.
struct EulerState {
  std::vector<std::vector<ArcId>> adj;
  std::vector<std::size_t> ptr;
  std::vector<bool> used_edge;  // indexed by canonical arc id

  explicit EulerState(const Graph& g)
      : adj(star_table(g)),
        ptr(g.vertex_count(), 0),
        used_edge(g.arc_count(), false) {
    for (auto& list : adj) {
      std::sort(list.begin(), list.end(), [&g](ArcId a, ArcId b) {
        return std::pair(g.edge_of(a), a) < std::pair(g.edge_of(b), b);
      });
    }
  }
};

// Hierholzer with an explicit stack of (vertex, arc that led there); arcs are
// recorded on pop and reversed, which splices detours in place. Appends the
// circuit through start's component to out.
void trace_component(const Graph& g, EulerState& s, VertexId start,
                     std::vector<ArcId>& out) {
  std::vector<std::pair<VertexId, ArcId>> stack;
  stack.push_back({start, kNoArc});
  std::vector<ArcId> tail;
  while (!stack.empty()) {
    auto [v, in_arc] = stack.back();
    const auto& list = s.adj[v];
    std::size_t& p = s.ptr[v];
    while (p < list.size() && s.used_edge[g.edge_of(list[p])]) ++p;
    if (p == list.size()) {
      stack.pop_back();
      if (in_arc != kNoArc) tail.push_back(in_arc);
    } else {
      ArcId a = list[p++];
      s.used_edge[g.edge_of(a)] = true;
      stack.push_back({g.tau(a), a});
    }
  }
  out.insert(out.end(), tail.rbegin(), tail.rend());
}

}  // namespace

std::vector<ArcId> euler_circuit(const Graph& g) {
  if (g.vertex_count() == 0) {
    throw std::invalid_argument("euler circuit of the empty graph");
  }
  require_even_no_half(g);
  if (!is_connected(g)) {
    throw std::invalid_argument("graph is not connected");
  }
  EulerState s(g);
  std::vector<ArcId> circuit;
  trace_component(g, s, 0, circuit);
  if (circuit.size() != g.arc_count() / 2) {
    throw std::logic_error("euler circuit missed edges");
  }
  return circuit;
}

EulerOrientation orient_by_euler(const Graph& g) {
  require_even_no_half(g);
  EulerState s(g);
  EulerOrientation o;
  for (const auto& comp : connected_components(g)) {
    trace_component(g, s, comp.front(), o.forward);
  }
  if (o.forward.size() != g.arc_count() / 2) {
    throw std::logic_error("euler orientation missed edges");
  }
  std::sort(o.forward.begin(), o.forward.end());
  return o;
}

std::vector<TwoFactor> two_factorization(const Graph& g) {
  auto deg = regularity(g);
  if (!deg) throw std::invalid_argument("graph is not regular");
  if (has_half_edge(g)) throw std::invalid_argument("graph has a half-edge");
  if (*deg % 2 != 0) throw std::invalid_argument("degree is odd");
  const std::size_t d = *deg / 2;
  if (d == 0) return {};

  const std::size_t n = g.vertex_count();
  EulerOrientation o = orient_by_euler(g);

  // One out-copy [0, n) and one in-copy [n, 2n) per vertex; forward arc
  // v -> w becomes the split edge {v, n + w}. Both sides are d-regular, so d
  // orthogonal perfect matchings exist, and each one reads back as a
  // permutation of the original vertices.
  Graph split(2 * n);
  for (ArcId a : o.forward) {
    split.add_edge(g.iota(a), static_cast<VertexId>(n + g.tau(a)));
  }
  Bipartition sides;
  sides.side.assign(2 * n, 0);
  std::fill(sides.side.begin() + n, sides.side.end(), 1);

  std::vector<TwoFactor> factors;
  factors.reserve(d);
  for (const Matching& m : orthogonal_matchings(split, sides, d)) {
    TwoFactor f;
    f.successor.assign(n, kNoArc);
    for (EdgeId c : m.edges) {
      // The k-th split edge has canonical arc 2k and came from o.forward[k].
      ArcId a = o.forward[c / 2];
      f.successor[g.iota(a)] = a;
    }
    std::vector<bool> entered(n, false);
    for (VertexId v = 0; v < n; ++v) {
      ArcId a = f.successor[v];
      if (a == kNoArc || g.iota(a) != v || entered[g.tau(a)]) {
        throw std::logic_error("two-factor is not an out-arc permutation");
      }
      entered[g.tau(a)] = true;
    }
    factors.push_back(std::move(f));
  }
  return factors;
}

Graph bouquet(std::size_t d, std::size_t n) {
  Graph b(1);
  for (std::size_t i = 0; i < d; ++i) b.add_loop(0);
  for (std::size_t j = 0; j < n; ++j) b.add_half_edge(0);
  return b;
}

CoveringMap cover_to_bouquet(const Graph& g,
                             const std::vector<TwoFactor>& factors,
                             const std::vector<Matching>& matchings) {
  if (has_half_edge(g)) throw std::invalid_argument("graph has a half-edge");
  auto deg = regularity(g);
  if (!deg) throw std::invalid_argument("graph is not regular");
  const std::size_t d = factors.size();
  const std::size_t ni = matchings.size();
  if (*deg != 2 * d + ni) {
    throw std::invalid_argument(
        "factor and matching counts do not match the degree");
  }

  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> edge_use(g.arc_count(), 0);
  std::vector<ArcId> arc_map(g.arc_count(), kNoArc);

  for (std::size_t i = 0; i < d; ++i) {
    const TwoFactor& f = factors[i];
    if (f.successor.size() != n) {
      throw std::invalid_argument("factor size does not match vertex count");
    }
    for (VertexId v = 0; v < n; ++v) {
      ArcId a = f.successor[v];
      if (a >= g.arc_count() || g.iota(a) != v) {
        throw std::invalid_argument("factor successor is not an outgoing arc");
      }
      ++edge_use[g.edge_of(a)];
      arc_map[a] = static_cast<ArcId>(2 * i);
      arc_map[g.inv(a)] = static_cast<ArcId>(2 * i + 1);
    }
  }

  for (std::size_t j = 0; j < ni; ++j) {
    const Matching& m = matchings[j];
    std::vector<bool> covered(n, false);
    for (EdgeId c : m.edges) {
      if (c >= g.arc_count() || c != g.edge_of(c) || g.iota(c) == g.tau(c)) {
        throw std::invalid_argument(
            "matching entry is not a canonical edge between distinct "
            "vertices");
      }
      if (covered[g.iota(c)] || covered[g.tau(c)]) {
        throw std::invalid_argument("matching edges share a vertex");
      }
      covered[g.iota(c)] = covered[g.tau(c)] = true;
      ++edge_use[c];
      arc_map[c] = static_cast<ArcId>(2 * d + j);
      arc_map[g.inv(c)] = static_cast<ArcId>(2 * d + j);
    }
    if (2 * m.edges.size() != n) {
      throw std::invalid_argument("matching is not perfect");
    }
  }

  for (EdgeId c : edge_list(g)) {
    if (edge_use[c] != 1) {
      throw std::invalid_argument(
          "factors and matchings do not partition the edges");
    }
  }

  return {g, bouquet(d, ni), std::vector<VertexId>(n, 0), std::move(arc_map)};
}

}  // namespace heg
