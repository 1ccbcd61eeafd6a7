#pragma once

// Isoperimetric data for a recurrent direction: a deterministic closed
// directed walk through every edge class, its maximum edge multiplicity c1,
// and the bound K = c1 * maxEdgeDegree / 3. Also the hyperbolic margin
// (pi - eps)/2 - asin(1/cosh(c/2)) used to decide when long curves of low
// curvature are quasigeodesic.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "trifol/digraph.hpp"
#include "trifol/direction.hpp"
#include "trifol/errors.hpp"
#include "trifol/rational.hpp"
#include "trifol/triangulation.hpp"

namespace trifol {

struct IsoperimetricConstants {
  std::vector<int> walk;         // closed directed walk, vertex ids, front == back
  std::vector<int> multiplicity; // traversal count per edge class
  int c1 = 0;                    // max multiplicity
  int max_edge_degree = 0;       // most tetrahedra around one edge
  Rational k_bound;              // c1 * max_edge_degree / 3
};

// The walk visits the directed edge classes in index order: BFS connector to
// the edge tail (ties to the smallest vertex id), the edge itself, then a BFS
// return path head -> tail, finally closing back to the start. Requires a
// strongly connected directed 1-skeleton.
inline IsoperimetricConstants isoperimetric_constants(const Triangulation& tri,
                                                      const Direction& d) {
  Digraph g = directed_skeleton(tri, d);
  SccResult scc = strongly_connected_components(g);
  if (scc.count != 1)
    throw NotRecurrent("directed 1-skeleton has " + std::to_string(scc.count) +
                       " strongly connected components");

  IsoperimetricConstants out;
  auto append = [&](const std::vector<int>& path) {
    for (std::size_t i = 1; i < path.size(); ++i)
      out.walk.push_back(tri.vertices()[path[i]]);
  };

  int start = tri.vertex_rank(d.tail(0));
  int pos = start;
  out.walk.push_back(tri.vertices()[start]);
  for (int e = 0; e < tri.edge_count(); ++e) {
    int u = tri.vertex_rank(d.tail(e));
    int v = tri.vertex_rank(d.head(e));
    append(shortest_directed_path(g, pos, u));
    out.walk.push_back(tri.vertices()[v]); // traverse e itself
    append(shortest_directed_path(g, v, u));
    pos = u;
  }
  append(shortest_directed_path(g, pos, start));

  out.multiplicity.assign(tri.edge_count(), 0);
  for (std::size_t i = 0; i + 1 < out.walk.size(); ++i)
    out.multiplicity[tri.edge_index(out.walk[i], out.walk[i + 1])]++;
  for (int m : out.multiplicity) out.c1 = std::max(out.c1, m);
  out.max_edge_degree = tri.max_edge_degree();
  out.k_bound = Rational(BigInt(out.c1) * out.max_edge_degree, 3);
  return out;
}

struct QuasigeodesicMargin {
  double margin = 0.0;
  bool verdict = false; // margin strictly positive
};

// margin(c, eps) = (pi - eps)/2 - asin(1/cosh(c/2)), in doubles.
inline QuasigeodesicMargin quasigeodesic_margin(double c, double eps) {
  if (!(c > 0.0)) throw DomainError("curve length bound must be positive");
  if (!(eps >= 0.0) || !(eps < std::numbers::pi))
    throw DomainError("angle defect must lie in [0, pi)");
  QuasigeodesicMargin m;
  m.margin = (std::numbers::pi - eps) / 2.0 - std::asin(1.0 / std::cosh(c / 2.0));
  m.verdict = m.margin > 0.0;
  return m;
}

} // namespace trifol
