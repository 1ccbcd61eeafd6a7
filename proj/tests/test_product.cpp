#include <set>

#include "catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "trifol/product.hpp"

using namespace trifol;

TEST_CASE("the two builtin surfaces", "[product]") {
  Surface sphere = tetrahedron_boundary();
  REQUIRE(sphere.vertices.size() == 4);
  REQUIRE(sphere.edges.size() == 6);
  REQUIRE(sphere.triangles.size() == 4);
  REQUIRE(sphere.euler_characteristic() == 2);

  Surface torus = torus_seven();
  REQUIRE(torus.vertices.size() == 7);
  REQUIRE(torus.edges.size() == 21);
  REQUIRE(torus.triangles.size() == 14);
  REQUIRE(torus.euler_characteristic() == 0);
}

TEST_CASE("surface validation", "[product][errors]") {
  REQUIRE_THROWS_AS(Surface::from_triangles({}), BadSurface);
  REQUIRE_THROWS_AS(Surface::from_triangles({{0, 1, 1}}), BadSurface);
  REQUIRE_THROWS_AS(Surface::from_triangles({{0, 1, 2}}), BadSurface); // open edges
  REQUIRE_THROWS_AS(Surface::from_triangles({{0, 1, 2}, {0, 1, 2}}), BadSurface);
  REQUIRE_THROWS_AS(Surface::from_triangles({{0, 1, 2}, {2, 1, 0}}), BadSurface);
  REQUIRE_THROWS_AS(Surface::from_triangles({{0, 1, -2}}), BadSurface);

  // two spheres glued at one vertex: every edge closes but the link breaks
  REQUIRE_THROWS_AS(Surface::from_triangles({{0, 1, 2},
                                             {0, 1, 3},
                                             {0, 2, 3},
                                             {1, 2, 3},
                                             {0, 4, 5},
                                             {0, 4, 6},
                                             {0, 5, 6},
                                             {4, 5, 6}}),
                    BadSurface);

  // two disjoint spheres: all links fine, not connected
  REQUIRE_THROWS_AS(Surface::from_triangles({{0, 1, 2},
                                             {0, 1, 3},
                                             {0, 2, 3},
                                             {1, 2, 3},
                                             {4, 5, 6},
                                             {4, 5, 7},
                                             {4, 6, 7},
                                             {5, 6, 7}}),
                    BadSurface);
}

TEST_CASE("product sizes over both surfaces", "[product]") {
  const ProductBundle& s2 = fixtures::s2_bundle();
  REQUIRE(s2.layers == 3);
  REQUIRE(s2.surface_vertices == 4);
  REQUIRE(s2.tri.vertex_count() == 12);
  REQUIRE(s2.tri.edge_count() == 48);
  REQUIRE(s2.tri.face_count() == 72);
  REQUIRE(s2.tri.tet_count() == 36);

  const ProductBundle& t2 = fixtures::t2_bundle();
  REQUIRE(t2.tri.vertex_count() == 21);
  REQUIRE(t2.tri.edge_count() == 147);
  REQUIRE(t2.tri.face_count() == 252);
  REQUIRE(t2.tri.tet_count() == 126);

  // closed 3-manifolds: Euler characteristic vanishes either way
  for (const ProductBundle* b : {&s2, &t2})
    REQUIRE(b->tri.vertex_count() - b->tri.edge_count() + b->tri.face_count() -
                b->tri.tet_count() ==
            0);
}

TEST_CASE("bundle heights follow the layer structure", "[product]") {
  const ProductBundle& b = fixtures::s2_bundle();
  const int V = b.surface_vertices;
  REQUIRE(static_cast<int>(b.heights.size()) == b.tri.vertex_count());
  for (const auto& [v, h] : b.heights) {
    int layer = v / V, rank = v % V;
    REQUIRE(h == Rational(layer) + Rational(rank, V + 1));
  }
}

TEST_CASE("bundle directions ascend heights within a slab", "[product]") {
  for (const ProductBundle* b : {&fixtures::s2_bundle(), &fixtures::t2_bundle()}) {
    const int V = b->surface_vertices;
    for (int e = 0; e < b->tri.edge_count(); ++e) {
      int u = b->dir.tail(e), v = b->dir.head(e);
      int ku = u / V, kv = v / V;
      if (ku == kv) {
        REQUIRE(b->heights.at(u) < b->heights.at(v));
      } else {
        REQUIRE((ku + 1) % b->layers == kv); // cross edges climb one slab
      }
    }
  }
}

TEST_CASE("products satisfy the whole local orientation check", "[product]") {
  for (const ProductBundle* b : {&fixtures::s2_bundle(), &fixtures::t2_bundle()}) {
    LocalOrientationReport rep = check_local_orientation(b->tri, b->dir);
    REQUIRE(rep.links_pass);
    REQUIRE(rep.tet_order.pass);
    REQUIRE(rep.recurrence.pass);
    REQUIRE(rep.recurrence.scc_count == 1);
    REQUIRE(rep.pass);
  }
}

TEST_CASE("more layers keep the structure", "[product]") {
  ProductBundle b = generate_product(tetrahedron_boundary(), 5);
  REQUIRE(b.tri.tet_count() == 60);
  REQUIRE(check_local_orientation(b.tri, b.dir).pass);
}

TEST_CASE("too few layers", "[product][errors]") {
  REQUIRE_THROWS_AS(generate_product(tetrahedron_boundary(), 2), TooFewLayers);
  REQUIRE_THROWS_AS(generate_product(tetrahedron_boundary(), 0), TooFewLayers);
}

TEST_CASE("wall diagonals are shared between neighboring prisms", "[product]") {
  // each surface edge {u,v} with u < v contributes the cross diagonal v0 -> u1,
  // so the edge count is V*l (vertical) + E*l (in-layer) + E*l (diagonal)
  Surface s = tetrahedron_boundary();
  const ProductBundle& b = fixtures::s2_bundle();
  const int V = b.surface_vertices;
  int vertical = 0, in_layer = 0, diagonal = 0;
  std::set<std::array<int, 2>> diagonals;
  for (int ei = 0; ei < b.tri.edge_count(); ++ei) {
    const auto& e = b.tri.edges()[ei];
    if (e[0] / V == e[1] / V) {
      ++in_layer;
    } else if (e[0] % V == e[1] % V) {
      ++vertical;
    } else {
      ++diagonal;
      // the diagonal descends the surface order: bottom copy of the larger
      // endpoint points to the top copy of the smaller one
      int bottom = b.dir.tail(ei) % V, top = b.dir.head(ei) % V;
      REQUIRE(bottom > top);
      diagonals.insert({top, bottom});
    }
  }
  REQUIRE(vertical == V * b.layers);
  REQUIRE(in_layer == static_cast<int>(s.edges.size()) * b.layers);
  REQUIRE(diagonal == static_cast<int>(s.edges.size()) * b.layers);
  for (const auto& e : s.edges) REQUIRE(diagonals.count({e[0], e[1]}) == 1);
}
