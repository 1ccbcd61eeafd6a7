#pragma once

// Closed simplicial 3-manifold triangulations given as vertex 4-tuples, one
// per tetrahedron. Edges and faces are derived classes (sorted id tuples in
// lexicographic order); validation enforces that every face lies in exactly
// two tetrahedra, every vertex link is a connected 2-sphere, and every edge
// link is a single circle. Vertex ids are arbitrary non-negative ints and
// need not be contiguous.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "trifol/digraph.hpp"
#include "trifol/errors.hpp"

namespace trifol {

struct LinkComplex {
  int center = -1;
  std::vector<int> vertices;                 // neighbor ids, sorted
  std::vector<std::array<int, 2>> edges;     // {w,x} with {center,w,x} a face
  std::vector<std::array<int, 3>> triangles; // one per tet containing center
};

namespace detail {

inline std::string id_list(std::initializer_list<int> ids) {
  std::string s = "{";
  bool first = true;
  for (int v : ids) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

} // namespace detail

class Triangulation {
public:
  static Triangulation from_tets(std::vector<std::array<int, 4>> tets) {
    if (tets.empty()) throw Degenerate("triangulation has no tetrahedra");
    for (auto& t : tets) {
      for (int v : t)
        if (v < 0) throw SyntaxError("negative vertex id " + std::to_string(v));
      std::sort(t.begin(), t.end());
      if (t[0] == t[1] || t[1] == t[2] || t[2] == t[3])
        throw Degenerate("tetrahedron with repeated vertex " +
                         detail::id_list({t[0], t[1], t[2], t[3]}));
    }
    std::sort(tets.begin(), tets.end());
    for (std::size_t i = 1; i < tets.size(); ++i)
      if (tets[i] == tets[i - 1])
        throw Degenerate("two tetrahedra share vertex set " +
                         detail::id_list({tets[i][0], tets[i][1], tets[i][2], tets[i][3]}));

    Triangulation tri;
    tri.tets_ = std::move(tets);
    tri.build_classes();
    tri.check_closed();
    tri.build_links();
    tri.check_vertex_links();
    tri.check_edge_links();
    return tri;
  }

  int tet_count() const { return static_cast<int>(tets_.size()); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  const std::vector<std::array<int, 4>>& tets() const { return tets_; }
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  const std::vector<std::array<int, 3>>& faces() const { return faces_; }

  bool has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  // Rank of a vertex id in the sorted vertex list.
  int vertex_rank(int v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
      throw UnknownVertex("vertex " + std::to_string(v) + " not in triangulation");
    return static_cast<int>(it - vertices_.begin());
  }

  int edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = edge_index_.find({u, v});
    if (it == edge_index_.end())
      throw UnknownEdge("no edge " + detail::id_list({u, v}));
    return it->second;
  }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return edge_index_.count({u, v}) > 0;
  }

  int face_index(int a, int b, int c) const {
    std::array<int, 3> f{a, b, c};
    std::sort(f.begin(), f.end());
    auto it = face_index_.find(f);
    if (it == face_index_.end())
      throw UnknownEdge("no face " + detail::id_list({a, b, c}));
    return it->second;
  }

  bool has_face(int a, int b, int c) const {
    std::array<int, 3> f{a, b, c};
    std::sort(f.begin(), f.end());
    return face_index_.count(f) > 0;
  }

  const std::vector<int>& tets_of_edge(int edge_idx) const { return edge_tets_[edge_idx]; }
  const std::array<int, 2>& tets_of_face(int face_idx) const { return face_tets_[face_idx]; }
  const std::vector<int>& tets_of_vertex(int v) const { return vertex_tets_[vertex_rank(v)]; }

  const LinkComplex& link(int v) const { return links_[vertex_rank(v)]; }

  // Largest number of tetrahedra around a single edge class.
  int max_edge_degree() const {
    std::size_t best = 0;
    for (const auto& ts : edge_tets_) best = std::max(best, ts.size());
    return static_cast<int>(best);
  }

  bool operator==(const Triangulation& other) const { return tets_ == other.tets_; }

private:
  std::vector<std::array<int, 4>> tets_;
  std::vector<int> vertices_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 3>> faces_;
  std::map<std::array<int, 2>, int> edge_index_;
  std::map<std::array<int, 3>, int> face_index_;
  std::vector<std::vector<int>> edge_tets_;
  std::vector<std::array<int, 2>> face_tets_;
  std::vector<std::vector<int>> vertex_tets_;
  std::vector<LinkComplex> links_;

  void build_classes() {
    std::set<int> vs;
    std::map<std::array<int, 2>, std::vector<int>> edge_map;
    std::map<std::array<int, 3>, std::vector<int>> face_map;
    for (int ti = 0; ti < tet_count(); ++ti) {
      const auto& t = tets_[ti];
      for (int v : t) vs.insert(v);
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edge_map[{t[i], t[j]}].push_back(ti);
      for (int skip = 0; skip < 4; ++skip) {
        std::array<int, 3> f;
        int k = 0;
        for (int i = 0; i < 4; ++i)
          if (i != skip) f[k++] = t[i];
        face_map[f].push_back(ti);
      }
    }
    vertices_.assign(vs.begin(), vs.end());
    for (auto& [e, ts] : edge_map) {
      edge_index_[e] = static_cast<int>(edges_.size());
      edges_.push_back(e);
      edge_tets_.push_back(std::move(ts));
    }
    for (auto& [f, ts] : face_map) {
      face_index_[f] = static_cast<int>(faces_.size());
      faces_.push_back(f);
      // filled after the closedness check; stash counts here
      face_tets_.push_back({ts.empty() ? -1 : ts[0], ts.size() > 1 ? ts[1] : -1});
      if (ts.size() > 2)
        throw NotClosed("face " + detail::id_list({f[0], f[1], f[2]}) + " lies in " +
                        std::to_string(ts.size()) + " tetrahedra");
    }
    vertex_tets_.assign(vertex_count(), {});
    for (int ti = 0; ti < tet_count(); ++ti)
      for (int v : tets_[ti]) vertex_tets_[vertex_rank(v)].push_back(ti);
  }

  void check_closed() const {
    for (int fi = 0; fi < face_count(); ++fi) {
      const auto& f = faces_[fi];
      if (face_tets_[fi][1] == -1)
        throw NotClosed("face " + detail::id_list({f[0], f[1], f[2]}) +
                        " lies in only one tetrahedron");
    }
  }

  void build_links() {
    links_.assign(vertex_count(), {});
    for (int r = 0; r < vertex_count(); ++r) {
      int c = vertices_[r];
      LinkComplex& lk = links_[r];
      lk.center = c;
      std::set<int> vset;
      std::set<std::array<int, 3>> tris;
      for (int ti : vertex_tets_[r]) {
        std::array<int, 3> other;
        int k = 0;
        for (int v : tets_[ti])
          if (v != c) other[k++] = v;
        tris.insert(other);
        for (int v : other) vset.insert(v);
      }
      lk.vertices.assign(vset.begin(), vset.end());
      lk.triangles.assign(tris.begin(), tris.end());
      for (const auto& [f, idx] : face_index_) {
        (void)idx;
        if (f[0] == c) lk.edges.push_back({f[1], f[2]});
        else if (f[1] == c) lk.edges.push_back({f[0], f[2]});
        else if (f[2] == c) lk.edges.push_back({f[0], f[1]});
      }
    }
  }

  void check_vertex_links() const {
    for (int r = 0; r < vertex_count(); ++r) {
      const LinkComplex& lk = links_[r];
      std::string at = "link of vertex " + std::to_string(lk.center);
      if (lk.triangles.empty()) throw BadLink(at + " is empty");
      // every triangle side must be a link edge used by exactly two triangles
      std::map<std::array<int, 2>, int> side_count;
      for (const auto& t : lk.triangles) {
        side_count[{t[0], t[1]}]++;
        side_count[{t[0], t[2]}]++;
        side_count[{t[1], t[2]}]++;
      }
      if (side_count.size() != lk.edges.size())
        throw BadLink(at + " has edges outside its triangles");
      for (const auto& e : lk.edges) {
        auto it = side_count.find(e);
        if (it == side_count.end() || it->second != 2)
          throw BadLink(at + ": edge " + detail::id_list({e[0], e[1]}) + " lies in " +
                        std::to_string(it == side_count.end() ? 0 : it->second) +
                        " link triangles");
      }
      long euler = static_cast<long>(lk.vertices.size()) -
                   static_cast<long>(lk.edges.size()) +
                   static_cast<long>(lk.triangles.size());
      if (euler != 2)
        throw BadLink(at + " has Euler characteristic " + std::to_string(euler));
      // connectivity over link edges
      std::map<int, int> rank;
      for (std::size_t i = 0; i < lk.vertices.size(); ++i)
        rank[lk.vertices[i]] = static_cast<int>(i);
      UnionFind uf(static_cast<int>(lk.vertices.size()));
      for (const auto& e : lk.edges) uf.unite(rank.at(e[0]), rank.at(e[1]));
      if (uf.component_count() != 1) throw BadLink(at + " is disconnected");
    }
  }

  void check_edge_links() const {
    for (int ei = 0; ei < edge_count(); ++ei) {
      const auto& e = edges_[ei];
      std::string at = "link of edge " + detail::id_list({e[0], e[1]});
      // vertices: w with {u,v,w} a face; edges: {w,x} with {u,v,w,x} a tet
      std::set<int> vset;
      for (const auto& [f, idx] : face_index_) {
        (void)idx;
        if (std::binary_search(f.begin(), f.end(), e[0]) &&
            std::binary_search(f.begin(), f.end(), e[1]))
          for (int v : f)
            if (v != e[0] && v != e[1]) vset.insert(v);
      }
      std::vector<int> lv(vset.begin(), vset.end());
      std::map<int, int> rank;
      for (std::size_t i = 0; i < lv.size(); ++i) rank[lv[i]] = static_cast<int>(i);
      std::vector<int> degree(lv.size(), 0);
      UnionFind uf(static_cast<int>(lv.size()));
      int link_edges = 0;
      for (int ti : edge_tets_[ei]) {
        std::array<int, 2> other;
        int k = 0;
        for (int v : tets_[ti])
          if (v != e[0] && v != e[1]) other[k++] = v;
        degree[rank.at(other[0])]++;
        degree[rank.at(other[1])]++;
        uf.unite(rank.at(other[0]), rank.at(other[1]));
        ++link_edges;
      }
      if (lv.size() < 3 || link_edges != static_cast<int>(lv.size()))
        throw BadLink(at + " is not a circle");
      for (int d : degree)
        if (d != 2) throw BadLink(at + " has a vertex of degree " + std::to_string(d));
      if (uf.component_count() != 1) throw BadLink(at + " has more than one circle");
    }
  }
};

// Text format: one `tet a b c d` line per tetrahedron, `#` starts a comment,
// blank lines ignored.
inline Triangulation parse_triangulation(const std::string& text) {
  std::vector<std::array<int, 4>> tets;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw != "tet")
      throw SyntaxError("line " + std::to_string(lineno) + ": expected 'tet', got '" + kw + "'");
    std::array<int, 4> t;
    for (int& v : t)
      if (!(ls >> v))
        throw SyntaxError("line " + std::to_string(lineno) + ": expected four vertex ids");
    std::string extra;
    if (ls >> extra)
      throw SyntaxError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
    for (int v : t)
      if (v < 0)
        throw SyntaxError("line " + std::to_string(lineno) + ": negative vertex id");
    tets.push_back(t);
  }
  if (tets.empty()) throw SyntaxError("no 'tet' lines in input");
  return Triangulation::from_tets(std::move(tets));
}

inline std::string render_triangulation(const Triangulation& tri) {
  std::string out;
  for (const auto& t : tri.tets()) {
    out += "tet";
    for (int v : t) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

// Boundary of the 4-simplex: five tetrahedra, every 4-subset of {0..4}.
inline Triangulation pentachoron() {
  std::vector<std::array<int, 4>> tets;
  for (int skip = 0; skip < 5; ++skip) {
    std::array<int, 4> t;
    int k = 0;
    for (int v = 0; v < 5; ++v)
      if (v != skip) t[k++] = v;
    tets.push_back(t);
  }
  return Triangulation::from_tets(std::move(tets));
}

} // namespace trifol
