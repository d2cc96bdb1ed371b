// Fixture graphs, built in canonical record order so they coincide with the
// parse of their document form.

#pragma once

#include "heg/graph.hpp"

namespace fixtures {

inline heg::Graph c4() {
  heg::Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return g;
}

inline heg::Graph triangle() {
  heg::Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  return g;
}

inline heg::Graph k4() {
  heg::Graph g(4);
  for (heg::VertexId u = 0; u < 4; ++u) {
    for (heg::VertexId v = u + 1; v < 4; ++v) g.add_edge(u, v);
  }
  return g;
}

inline heg::Graph k5() {
  heg::Graph g(5);
  for (heg::VertexId u = 0; u < 5; ++u) {
    for (heg::VertexId v = u + 1; v < 5; ++v) g.add_edge(u, v);
  }
  return g;
}

inline heg::Graph k33() {
  heg::Graph g(6);
  for (heg::VertexId u = 0; u < 3; ++u) {
    for (heg::VertexId v = 3; v < 6; ++v) g.add_edge(u, v);
  }
  return g;
}

inline heg::Graph petersen() {
  heg::Graph g(10);
  g.add_edge(0, 1);
  g.add_edge(0, 4);
  g.add_edge(0, 5);
  g.add_edge(1, 2);
  g.add_edge(1, 6);
  g.add_edge(2, 3);
  g.add_edge(2, 7);
  g.add_edge(3, 4);
  g.add_edge(3, 8);
  g.add_edge(4, 9);
  g.add_edge(5, 7);
  g.add_edge(5, 8);
  g.add_edge(6, 8);
  g.add_edge(6, 9);
  g.add_edge(7, 9);
  return g;
}

// 16-vertex 3-regular simple graph with deficiency 2: a hub vertex whose
// removal leaves three odd components.
inline heg::Graph unmatchable_cubic() {
  heg::Graph g(16);
  g.add_edge(0, 1);
  g.add_edge(0, 6);
  g.add_edge(0, 11);
  for (heg::VertexId k = 0; k < 3; ++k) {
    const heg::VertexId b = 1 + 5 * k;
    const heg::VertexId c = b + 1;
    const heg::VertexId d = b + 2;
    const heg::VertexId e = b + 3;
    const heg::VertexId f = b + 4;
    g.add_edge(b, c);
    g.add_edge(b, d);
    g.add_edge(c, e);
    g.add_edge(c, f);
    g.add_edge(d, e);
    g.add_edge(d, f);
    g.add_edge(e, f);
  }
  return g;
}

// 10-vertex 4-regular graph with half-edges: a hub with a half-edge joined to
// three triangles whose far corners carry loops.
inline heg::Graph half_edged_quartic() {
  heg::Graph g(10);
  g.add_edge(0, 1);
  g.add_edge(0, 4);
  g.add_edge(0, 7);
  for (heg::VertexId k = 0; k < 3; ++k) {
    const heg::VertexId b = 1 + 3 * k;
    g.add_edge(b, b + 1);
    g.add_edge(b, b + 2);
    g.add_edge(b + 1, b + 2);
  }
  for (heg::VertexId k = 0; k < 3; ++k) {
    g.add_loop(2 + 3 * k);
    g.add_loop(3 + 3 * k);
  }
  g.add_half_edge(0);
  g.add_half_edge(1);
  g.add_half_edge(4);
  g.add_half_edge(7);
  return g;
}

}  // namespace fixtures
