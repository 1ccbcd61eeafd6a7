#include <array>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "trifol/triangulation.hpp"

using namespace trifol;

TEST_CASE("pentachoron f-vector and links", "[triangulation]") {
  const Triangulation& t = fixtures::penta();
  REQUIRE(t.vertex_count() == 5);
  REQUIRE(t.edge_count() == 10);
  REQUIRE(t.face_count() == 10);
  REQUIRE(t.tet_count() == 5);
  REQUIRE(t.vertex_count() - t.edge_count() + t.face_count() - t.tet_count() == 0);

  for (int v : t.vertices()) {
    const LinkComplex& lk = t.link(v);
    REQUIRE(lk.center == v);
    REQUIRE(lk.vertices.size() == 4); // boundary of a tetrahedron
    REQUIRE(lk.edges.size() == 6);
    REQUIRE(lk.triangles.size() == 4);
  }
}

TEST_CASE("link triangles total four per tetrahedron", "[triangulation]") {
  for (const Triangulation* t :
       {&fixtures::penta(), &fixtures::s2_bundle().tri, &fixtures::t2_bundle().tri}) {
    std::size_t total = 0;
    for (int v : t->vertices()) total += t->link(v).triangles.size();
    REQUIRE(total == 4u * static_cast<std::size_t>(t->tet_count()));
    REQUIRE(t->vertex_count() - t->edge_count() + t->face_count() - t->tet_count() == 0);
  }
}

TEST_CASE("parse and render round trip", "[triangulation]") {
  std::string text = render_triangulation(fixtures::penta());
  REQUIRE(parse_triangulation(text) == fixtures::penta());

  std::string noisy =
      "# five tetrahedra\n"
      "\n"
      "tet 1 2 3 4\n"
      "tet 0 2 4 3\n" // vertex order inside a line is irrelevant
      "tet 0 1 3 4\n"
      "tet 0 1 2 4\n"
      "tet 0 1 2 3  # last one\n";
  REQUIRE(parse_triangulation(noisy) == fixtures::penta());
}

TEST_CASE("parser rejects malformed documents", "[triangulation][errors]") {
  REQUIRE_THROWS_AS(parse_triangulation(""), SyntaxError);
  REQUIRE_THROWS_AS(parse_triangulation("# only a comment\n"), SyntaxError);
  REQUIRE_THROWS_AS(parse_triangulation("tet 0 0 1 2\n"), Degenerate);
  REQUIRE_THROWS_AS(parse_triangulation("tet 0 1 2\n"), SyntaxError);
  REQUIRE_THROWS_AS(parse_triangulation("tet 0 1 2 x\n"), SyntaxError);
  REQUIRE_THROWS_AS(parse_triangulation("simplex 0 1 2 3\n"), SyntaxError);
  REQUIRE_THROWS_AS(parse_triangulation("tet -1 1 2 3\n"), SyntaxError);

  // dropping one tet exposes four faces
  std::string text = render_triangulation(fixtures::penta());
  std::string missing = text.substr(text.find('\n') + 1);
  REQUIRE_THROWS_AS(parse_triangulation(missing), NotClosed);

  // repeating one puts its faces in too many tets
  REQUIRE_THROWS_AS(parse_triangulation(text + "tet 0 1 2 3\n"), Degenerate);
}

TEST_CASE("two spheres pinched at a vertex are rejected", "[triangulation][errors]") {
  // each copy is closed, so the faces all match, but the link of the shared
  // vertex is two disjoint spheres
  std::vector<std::array<int, 4>> tets;
  for (int skip = 0; skip < 5; ++skip) {
    std::array<int, 4> a{}, b{};
    int ia = 0, ib = 0;
    for (int v = 0; v < 5; ++v) {
      if (v == skip) continue;
      a[ia++] = v;
      b[ib++] = v + 4;
    }
    tets.push_back(a);
    tets.push_back(b);
  }
  REQUIRE_THROWS_AS(Triangulation::from_tets(tets), BadLink);
}

TEST_CASE("solid-torus style open complex is rejected", "[triangulation][errors]") {
  REQUIRE_THROWS_AS(Triangulation::from_tets({{0, 1, 2, 3}}), NotClosed);
  REQUIRE_THROWS_AS(Triangulation::from_tets({{0, 1, 2, 3}, {0, 1, 2, 4}}), NotClosed);
}

TEST_CASE("vertex ids may be sparse", "[triangulation]") {
  std::vector<std::array<int, 4>> tets;
  for (const auto& t : fixtures::penta().tets())
    tets.push_back({10 * t[0] + 3, 10 * t[1] + 3, 10 * t[2] + 3, 10 * t[3] + 3});
  Triangulation sparse = Triangulation::from_tets(tets);
  REQUIRE(sparse.vertex_count() == 5);
  REQUIRE(sparse.vertices() == std::vector<int>{3, 13, 23, 33, 43});
  REQUIRE(sparse.vertex_rank(23) == 2);
  REQUIRE(sparse.has_edge(3, 43));
  REQUIRE(sparse.has_face(13, 23, 33));
  REQUIRE_FALSE(sparse.has_vertex(0));
}

TEST_CASE("unknown lookups throw", "[triangulation][errors]") {
  const Triangulation& t = fixtures::penta();
  REQUIRE_THROWS_AS(t.vertex_rank(7), UnknownVertex);
  REQUIRE_THROWS_AS(t.link(7), UnknownVertex);
  REQUIRE_THROWS_AS(t.edge_index(0, 9), UnknownEdge);
  REQUIRE(t.edge_index(4, 0) == t.edge_index(0, 4)); // unordered pair
}

TEST_CASE("incidence maps are mutually consistent", "[triangulation]") {
  const Triangulation& t = fixtures::s2_bundle().tri;
  for (int e = 0; e < t.edge_count(); ++e) {
    for (int ti : t.tets_of_edge(e)) {
      const auto& tet = t.tets()[ti];
      int hits = 0;
      for (int v : tet)
        if (v == t.edges()[e][0] || v == t.edges()[e][1]) ++hits;
      REQUIRE(hits == 2);
    }
  }
  for (int f = 0; f < t.face_count(); ++f) {
    const auto& pair = t.tets_of_face(f);
    REQUIRE(pair[0] != pair[1]);
  }
  REQUIRE(t.max_edge_degree() >= 3);
}
