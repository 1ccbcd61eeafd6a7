#pragma once

// The expanding graph of a directed triangulation: one node per edge class,
// and for every face with vertex order a < b < c (the order induced by the
// direction) two arcs, short edge -> long edge: lower {a,b} -> {a,c} and
// upper {b,c} -> {a,c}. The direction is expanding when some face has both
// of its arcs lying on directed loops.

#include <array>
#include <string>
#include <vector>

#include "trifol/digraph.hpp"
#include "trifol/direction.hpp"
#include "trifol/errors.hpp"
#include "trifol/triangulation.hpp"

namespace trifol {

struct ExpansionArc {
  int face = -1;       // face class index
  bool upper = false;  // false: lower short edge, true: upper short edge
  int short_edge = -1; // edge class indices
  int long_edge = -1;
  bool on_loop = false;
};

struct ExpansionReport {
  std::vector<ExpansionArc> arcs; // two per face, lower then upper, in face order
  int scc_count = 0;
  bool expanding = false;
  int witness_face = -1; // first face with both arcs on loops
};

inline ExpansionReport check_expanding(const Triangulation& tri, const Direction& d) {
  TetOrderVerdict order = tet_order_verdict(tri, d);
  if (!order.pass)
    throw NoTotalOrder("tetrahedron " + std::to_string(order.tet) +
                       " has no total order: directed cycle " +
                       detail::id_list({order.cycle[0], order.cycle[1], order.cycle[2]}));

  ExpansionReport report;
  Digraph g(tri.edge_count());
  for (int fi = 0; fi < tri.face_count(); ++fi) {
    const auto& f = tri.faces()[fi];
    // order the face by the direction: src has two outgoing edges, snk none
    std::array<int, 3> out_deg{0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && d.points(tri, f[i], f[j])) ++out_deg[i];
    int a = -1, b = -1, c = -1;
    for (int i = 0; i < 3; ++i) {
      if (out_deg[i] == 2) a = f[i];
      else if (out_deg[i] == 1) b = f[i];
      else c = f[i];
    }
    int lower = tri.edge_index(a, b);
    int upper = tri.edge_index(b, c);
    int longer = tri.edge_index(a, c);
    report.arcs.push_back({fi, false, lower, longer, false});
    report.arcs.push_back({fi, true, upper, longer, false});
    g.add_arc(lower, longer);
    g.add_arc(upper, longer);
  }
  g.sort_arcs();

  SccResult scc = strongly_connected_components(g);
  report.scc_count = scc.count;
  for (auto& arc : report.arcs)
    arc.on_loop = (scc.id[arc.short_edge] == scc.id[arc.long_edge]);
  for (int fi = 0; fi < tri.face_count(); ++fi) {
    if (report.arcs[2 * fi].on_loop && report.arcs[2 * fi + 1].on_loop) {
      report.expanding = true;
      report.witness_face = fi;
      break;
    }
  }
  return report;
}

} // namespace trifol
