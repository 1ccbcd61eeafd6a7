#pragma once

// Triangulated products surface x circle. The circle direction is cut into
// `layers` slabs; each slab is a stack of prisms over the surface triangles,
// and each prism over a < b < c splits into the three tetrahedra
//   {c0,b0,a0,a1}, {c0,b0,b1,a1}, {c0,c1,b1,a1}
// so that every rectangle wall gets the diagonal ending at the top copy of
// its smaller vertex; walls shared by two prisms agree. Cross diagonals thus
// descend the surface order while in-slab edges ascend it, which is what
// makes the directed 1-skeleton strongly connected. Vertex (v,k) gets id
// k*V + rank(v) and height k + rank(v)/(V+1); edges are directed by ascending
// height within a slab, bottom to top across.

#include <array>
#include <map>
#include <vector>

#include "trifol/direction.hpp"
#include "trifol/errors.hpp"
#include "trifol/rational.hpp"
#include "trifol/surface.hpp"
#include "trifol/triangulation.hpp"

namespace trifol {

struct ProductBundle {
  Triangulation tri;
  Direction dir;
  std::map<int, Rational> heights; // vertex id -> height, fundamental domain [0, layers)
  int layers = 0;
  int surface_vertices = 0;
};

inline ProductBundle generate_product(const Surface& s, int layers) {
  if (layers < 3)
    throw TooFewLayers("need at least 3 layers, got " + std::to_string(layers) +
                       " (fewer collapses edge links)");
  const int V = static_cast<int>(s.vertices.size());
  std::map<int, int> rank;
  for (int i = 0; i < V; ++i) rank[s.vertices[i]] = i;
  auto id = [&](int v, int k) { return k * V + rank.at(v); };

  std::vector<std::array<int, 4>> tets;
  for (const auto& t : s.triangles) {
    int a = t[0], b = t[1], c = t[2]; // sorted, and ranks sort the same way
    for (int k = 0; k < layers; ++k) {
      int k1 = (k + 1) % layers;
      tets.push_back({id(c, k), id(b, k), id(a, k), id(a, k1)});
      tets.push_back({id(c, k), id(b, k), id(b, k1), id(a, k1)});
      tets.push_back({id(c, k), id(c, k1), id(b, k1), id(a, k1)});
    }
  }

  ProductBundle p;
  p.layers = layers;
  p.surface_vertices = V;
  p.tri = Triangulation::from_tets(std::move(tets));

  for (int k = 0; k < layers; ++k)
    for (int v : s.vertices)
      p.heights[id(v, k)] = Rational(k) + Rational(rank.at(v), V + 1);

  std::vector<std::array<int, 2>> pairs;
  for (const auto& e : p.tri.edges()) {
    int ku = e[0] / V, kv = e[1] / V;
    if (ku == kv) {
      pairs.push_back({e[0], e[1]}); // in-layer: ascending rank
    } else if ((ku + 1) % layers == kv) {
      pairs.push_back({e[0], e[1]}); // e[0] on the bottom of the slab
    } else {
      pairs.push_back({e[1], e[0]});
    }
  }
  p.dir = Direction::from_oriented_pairs(p.tri, pairs);
  return p;
}

} // namespace trifol
