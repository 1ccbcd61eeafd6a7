#pragma once

// Closed triangulated surfaces, used as bases for circle-bundle products.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "trifol/digraph.hpp"
#include "trifol/errors.hpp"
#include "trifol/triangulation.hpp"

namespace trifol {

struct Surface {
  std::vector<int> vertices;                 // sorted ids
  std::vector<std::array<int, 2>> edges;     // sorted pairs, lexicographic
  std::vector<std::array<int, 3>> triangles; // sorted triples, lexicographic

  static Surface from_triangles(std::vector<std::array<int, 3>> tris) {
    if (tris.empty()) throw BadSurface("surface has no triangles");
    for (auto& t : tris) {
      std::sort(t.begin(), t.end());
      if (t[0] < 0) throw BadSurface("negative vertex id " + std::to_string(t[0]));
      if (t[0] == t[1] || t[1] == t[2])
        throw BadSurface("triangle with repeated vertex " +
                         detail::id_list({t[0], t[1], t[2]}));
    }
    std::sort(tris.begin(), tris.end());
    for (std::size_t i = 1; i < tris.size(); ++i)
      if (tris[i] == tris[i - 1])
        throw BadSurface("duplicate triangle " +
                         detail::id_list({tris[i][0], tris[i][1], tris[i][2]}));

    Surface s;
    s.triangles = std::move(tris);
    std::set<int> vs;
    std::map<std::array<int, 2>, int> edge_count;
    for (const auto& t : s.triangles) {
      for (int v : t) vs.insert(v);
      edge_count[{t[0], t[1]}]++;
      edge_count[{t[0], t[2]}]++;
      edge_count[{t[1], t[2]}]++;
    }
    s.vertices.assign(vs.begin(), vs.end());
    for (const auto& [e, n] : edge_count) {
      if (n != 2)
        throw BadSurface("edge " + detail::id_list({e[0], e[1]}) + " lies in " +
                         std::to_string(n) + " triangles");
      s.edges.push_back(e);
    }

    // each vertex link must be a single circle
    for (int c : s.vertices) {
      std::map<int, int> degree;
      int link_edges = 0;
      std::map<int, int> rank;
      for (const auto& t : s.triangles) {
        if (t[0] != c && t[1] != c && t[2] != c) continue;
        std::array<int, 2> other{};
        int k = 0;
        for (int v : t)
          if (v != c) other[k++] = v;
        degree[other[0]]++;
        degree[other[1]]++;
        ++link_edges;
      }
      for (const auto& [v, deg] : degree) {
        if (deg != 2)
          throw BadSurface("link of vertex " + std::to_string(c) +
                           " has a vertex of degree " + std::to_string(deg));
        int r = static_cast<int>(rank.size());
        rank[v] = r;
      }
      UnionFind uf(static_cast<int>(rank.size()));
      for (const auto& t : s.triangles) {
        if (t[0] != c && t[1] != c && t[2] != c) continue;
        std::array<int, 2> other{};
        int k = 0;
        for (int v : t)
          if (v != c) other[k++] = v;
        uf.unite(rank.at(other[0]), rank.at(other[1]));
      }
      if (link_edges < 3 || link_edges != static_cast<int>(rank.size()) ||
          uf.component_count() != 1)
        throw BadSurface("link of vertex " + std::to_string(c) + " is not a single circle");
    }

    // connected
    {
      std::map<int, int> rank;
      for (std::size_t i = 0; i < s.vertices.size(); ++i)
        rank[s.vertices[i]] = static_cast<int>(i);
      UnionFind uf(static_cast<int>(s.vertices.size()));
      for (const auto& e : s.edges) uf.unite(rank.at(e[0]), rank.at(e[1]));
      if (uf.component_count() != 1) throw BadSurface("surface is disconnected");
    }
    return s;
  }

  long euler_characteristic() const {
    return static_cast<long>(vertices.size()) - static_cast<long>(edges.size()) +
           static_cast<long>(triangles.size());
  }
};

// Boundary of the 3-simplex: the 4-vertex sphere.
inline Surface tetrahedron_boundary() {
  return Surface::from_triangles({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline Surface torus_seven() {
  std::vector<std::array<int, 3>> tris;
  for (int i = 0; i < 7; ++i) {
    tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
    tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return Surface::from_triangles(std::move(tris));
}

} // namespace trifol
