#pragma once

// Cyclic covers of degree n induced by integer edge weights whose signed sum
// vanishes around every face. Vertex (v,k), k in Z_n, gets id k*V + rank(v).
// A directed edge u -> v of weight w lifts to (u,k) -> (v, k+w mod n); a
// tetrahedron lifts along the signed weight potentials from its smallest
// vertex (well defined exactly because face sums vanish).

#include <array>
#include <string>
#include <vector>

#include "trifol/digraph.hpp"
#include "trifol/direction.hpp"
#include "trifol/errors.hpp"
#include "trifol/rational.hpp"
#include "trifol/triangulation.hpp"

namespace trifol {

struct CyclicCover {
  Triangulation tri;
  Direction dir;
  int degree = 1;
  int components = 1;
  int base_vertices = 0; // cover vertex id = layer * base_vertices + base rank
};

namespace detail {

// +w on u -> v, -w on v -> u.
inline BigInt signed_weight(const Triangulation& tri, const Direction& d,
                            const std::vector<BigInt>& w, int u, int v) {
  int e = tri.edge_index(u, v);
  return d.tail(e) == u ? w[e] : -w[e];
}

inline void check_face_sums(const Triangulation& tri, const Direction& d,
                            const std::vector<BigInt>& w) {
  if (static_cast<int>(w.size()) != tri.edge_count())
    throw BadWeights("expected " + std::to_string(tri.edge_count()) + " weights, got " +
                     std::to_string(w.size()));
  for (const auto& f : tri.faces()) {
    BigInt sum = signed_weight(tri, d, w, f[0], f[1]) +
                 signed_weight(tri, d, w, f[1], f[2]) +
                 signed_weight(tri, d, w, f[2], f[0]);
    if (sum != 0)
      throw BadWeights("signed weight sum around face " +
                       detail::id_list({f[0], f[1], f[2]}) + " is " + sum.str());
  }
}

} // namespace detail

inline CyclicCover cyclic_cover(const Triangulation& tri, const Direction& d,
                                const std::vector<BigInt>& weights, int n) {
  if (n < 1) throw DomainError("cover degree must be >= 1, got " + std::to_string(n));
  detail::check_face_sums(tri, d, weights);

  const int V = tri.vertex_count();
  auto layer_of = [&](const BigInt& shift, int k) {
    BigInt l = (BigInt(k) + shift) % n;
    if (l < 0) l += n;
    return static_cast<int>(l);
  };
  auto id = [&](int v, int k) { return k * V + tri.vertex_rank(v); };

  std::vector<std::array<int, 4>> tets;
  for (const auto& t : tri.tets()) {
    std::array<BigInt, 4> shift{0, 0, 0, 0};
    for (int j = 1; j < 4; ++j)
      shift[j] = detail::signed_weight(tri, d, weights, t[0], t[j]);
    for (int k = 0; k < n; ++k) {
      std::array<int, 4> lift;
      for (int j = 0; j < 4; ++j) lift[j] = id(t[j], layer_of(shift[j], k));
      tets.push_back(lift);
    }
  }

  CyclicCover cover;
  cover.degree = n;
  cover.base_vertices = V;
  cover.tri = Triangulation::from_tets(std::move(tets));

  std::vector<std::array<int, 2>> pairs;
  for (int e = 0; e < tri.edge_count(); ++e) {
    int u = d.tail(e), v = d.head(e);
    for (int k = 0; k < n; ++k)
      pairs.push_back({id(u, k), id(v, layer_of(weights[e], k))});
  }
  cover.dir = Direction::from_oriented_pairs(cover.tri, pairs);

  UnionFind uf(cover.tri.vertex_count());
  for (const auto& e : cover.tri.edges())
    uf.unite(cover.tri.vertex_rank(e[0]), cover.tri.vertex_rank(e[1]));
  cover.components = uf.component_count();
  return cover;
}

} // namespace trifol
