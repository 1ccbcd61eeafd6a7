#pragma once

// A direction assigns an orientation to every edge class of a triangulation.
// The local-orientation report checks the three combinatorial conditions that
// make a direction usable downstream: induced in/out link subcomplexes are
// nonempty and connected at every vertex, every tetrahedron's edge tournament
// is acyclic (a total order on its four vertices), and the directed 1-skeleton
// is recurrent (strongly connected).

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "trifol/digraph.hpp"
#include "trifol/errors.hpp"
#include "trifol/triangulation.hpp"

namespace trifol {

class Direction {
public:
  static Direction from_oriented_pairs(const Triangulation& tri,
                                       const std::vector<std::array<int, 2>>& pairs) {
    Direction d;
    d.arrow_.assign(tri.edge_count(), {-1, -1});
    for (const auto& [u, v] : pairs) {
      if (u == v || !tri.has_vertex(u) || !tri.has_vertex(v) || !tri.has_edge(u, v))
        throw UnknownEdge("no edge " + detail::id_list({u, v}));
      int e = tri.edge_index(u, v);
      if (d.arrow_[e][0] != -1)
        throw DuplicateEdge("edge " + detail::id_list({u, v}) + " directed twice");
      d.arrow_[e] = {u, v};
    }
    for (int e = 0; e < tri.edge_count(); ++e)
      if (d.arrow_[e][0] == -1)
        throw MissingEdge("edge " + detail::id_list({tri.edges()[e][0], tri.edges()[e][1]}) +
                          " has no direction");
    return d;
  }

  // Orients every edge from its smaller to its larger vertex id.
  static Direction global_order(const Triangulation& tri) {
    Direction d;
    d.arrow_.reserve(tri.edge_count());
    for (const auto& e : tri.edges()) d.arrow_.push_back({e[0], e[1]});
    return d;
  }

  int tail(int edge_idx) const { return arrow_[edge_idx][0]; }
  int head(int edge_idx) const { return arrow_[edge_idx][1]; }
  const std::array<int, 2>& arrow(int edge_idx) const { return arrow_[edge_idx]; }
  int edge_count() const { return static_cast<int>(arrow_.size()); }

  // True when edge {u,v} is oriented u -> v.
  bool points(const Triangulation& tri, int u, int v) const {
    return arrow_[tri.edge_index(u, v)] == std::array<int, 2>{u, v};
  }

  Direction flipped(const Triangulation& tri, int u, int v) const {
    Direction d = *this;
    int e = tri.edge_index(u, v);
    std::swap(d.arrow_[e][0], d.arrow_[e][1]);
    return d;
  }

  bool operator==(const Direction& other) const { return arrow_ == other.arrow_; }

private:
  std::vector<std::array<int, 2>> arrow_; // {tail, head} per edge class index
};

// Text format: one `u v` line per edge, meaning u -> v. Every edge class must
// appear exactly once. `#` comments and blank lines allowed.
inline Direction parse_direction(const Triangulation& tri, const std::string& text) {
  std::vector<std::array<int, 2>> pairs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u)) continue;
    if (!(ls >> v))
      throw SyntaxError("line " + std::to_string(lineno) + ": expected two vertex ids");
    std::string extra;
    if (ls >> extra)
      throw SyntaxError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
    pairs.push_back({u, v});
  }
  return Direction::from_oriented_pairs(tri, pairs);
}

inline std::string render_direction(const Triangulation& tri, const Direction& d) {
  std::string out;
  for (int e = 0; e < tri.edge_count(); ++e)
    out += std::to_string(d.tail(e)) + " " + std::to_string(d.head(e)) + "\n";
  return out;
}

// Directed 1-skeleton on vertex ranks.
inline Digraph directed_skeleton(const Triangulation& tri, const Direction& d) {
  Digraph g(tri.vertex_count());
  for (int e = 0; e < tri.edge_count(); ++e)
    g.add_arc(tri.vertex_rank(d.tail(e)), tri.vertex_rank(d.head(e)));
  g.sort_arcs();
  return g;
}

struct VertexLinkVerdict {
  int vertex = -1;
  std::vector<int> outgoing; // link vertices w with vertex -> w
  std::vector<int> incoming;
  bool outgoing_nonempty = false;
  bool incoming_nonempty = false;
  bool outgoing_connected = false;
  bool incoming_connected = false;
  bool pass = false;
};

struct TetOrderVerdict {
  bool pass = true;
  int tet = -1;                    // first failing tet index
  std::array<int, 3> cycle{-1, -1, -1}; // x -> y -> z -> x, smallest vertex first
};

struct RecurrenceVerdict {
  bool pass = false;
  int scc_count = 0;
  std::array<int, 2> witness{-1, -1}; // witness[0] cannot reach witness[1]
};

struct LocalOrientationReport {
  std::vector<VertexLinkVerdict> links;
  bool links_pass = false;
  TetOrderVerdict tet_order;
  RecurrenceVerdict recurrence;
  bool pass = false;
};

namespace detail {

// Connectivity of the subgraph of a vertex link induced by a subset of its
// vertices. Empty and singleton subsets count as connected.
inline bool induced_link_connected(const LinkComplex& lk, const std::vector<int>& subset) {
  if (subset.size() <= 1) return true;
  std::map<int, int> rank;
  for (std::size_t i = 0; i < subset.size(); ++i) rank[subset[i]] = static_cast<int>(i);
  UnionFind uf(static_cast<int>(subset.size()));
  for (const auto& e : lk.edges) {
    auto a = rank.find(e[0]), b = rank.find(e[1]);
    if (a != rank.end() && b != rank.end()) uf.unite(a->second, b->second);
  }
  return uf.component_count() == 1;
}

} // namespace detail

inline TetOrderVerdict tet_order_verdict(const Triangulation& tri, const Direction& d) {
  TetOrderVerdict verdict;
  for (int ti = 0; ti < tri.tet_count(); ++ti) {
    const auto& t = tri.tets()[ti];
    for (int skip = 3; skip >= 0; --skip) { // triples in lexicographic order
      std::array<int, 3> f;
      int k = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) f[k++] = t[i];
      bool xy = d.points(tri, f[0], f[1]);
      bool yz = d.points(tri, f[1], f[2]);
      bool xz = d.points(tri, f[0], f[2]);
      if (xy && yz && !xz) {
        verdict = {false, ti, {f[0], f[1], f[2]}};
        return verdict;
      }
      if (!xy && !yz && xz) {
        verdict = {false, ti, {f[0], f[2], f[1]}};
        return verdict;
      }
    }
  }
  return verdict;
}

inline LocalOrientationReport check_local_orientation(const Triangulation& tri,
                                                      const Direction& d) {
  LocalOrientationReport report;

  report.links_pass = true;
  for (int v : tri.vertices()) {
    const LinkComplex& lk = tri.link(v);
    VertexLinkVerdict lv;
    lv.vertex = v;
    for (int w : lk.vertices)
      (d.points(tri, v, w) ? lv.outgoing : lv.incoming).push_back(w);
    lv.outgoing_nonempty = !lv.outgoing.empty();
    lv.incoming_nonempty = !lv.incoming.empty();
    lv.outgoing_connected = detail::induced_link_connected(lk, lv.outgoing);
    lv.incoming_connected = detail::induced_link_connected(lk, lv.incoming);
    lv.pass = lv.outgoing_nonempty && lv.incoming_nonempty && lv.outgoing_connected &&
              lv.incoming_connected;
    report.links_pass = report.links_pass && lv.pass;
    report.links.push_back(std::move(lv));
  }

  report.tet_order = tet_order_verdict(tri, d);

  Digraph g = directed_skeleton(tri, d);
  SccResult scc = strongly_connected_components(g);
  report.recurrence.scc_count = scc.count;
  report.recurrence.pass = (scc.count == 1);
  if (!report.recurrence.pass) {
    for (int r = 0; r < g.n && report.recurrence.witness[0] == -1; ++r) {
      auto seen = reachable_from(g, r);
      for (int s = 0; s < g.n; ++s) {
        if (!seen[s]) {
          report.recurrence.witness = {tri.vertices()[r], tri.vertices()[s]};
          break;
        }
      }
    }
  }

  report.pass = report.links_pass && report.tet_order.pass && report.recurrence.pass;
  return report;
}

} // namespace trifol
