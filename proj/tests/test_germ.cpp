#include <algorithm>
#include <set>
#include <vector>

#include "catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "trifol/germ.hpp"

using namespace trifol;

TEST_CASE("fill areas of short loops", "[germ]") {
  const Triangulation& tri = fixtures::penta();

  REQUIRE(fill_area_at_most(tri, {}, 0));
  REQUIRE(fill_area_at_most(tri, {3}, 0));
  REQUIRE(fill_area_at_most(tri, {0, 1, 0}, 0)); // free cancellation costs nothing

  REQUIRE_FALSE(fill_area_at_most(tri, {0, 1, 2, 0}, 0));
  REQUIRE(fill_area_at_most(tri, {0, 1, 2, 0}, 1)); // one face

  REQUIRE_FALSE(fill_area_at_most(tri, {0, 1, 2, 3, 0}, 1));
  REQUIRE(fill_area_at_most(tri, {0, 1, 2, 3, 0}, 2));

  // a pentagon needs three faces: two would leave an even crossing number
  REQUIRE_FALSE(fill_area_at_most(tri, {0, 1, 2, 3, 4, 0}, 2));
  REQUIRE(fill_area_at_most(tri, {0, 1, 2, 3, 4, 0}, 3));
}

TEST_CASE("essential loops never fill", "[germ]") {
  const ProductBundle& b = fixtures::t2_bundle();
  std::vector<int> vertical;
  for (int k = 0; k < b.layers; ++k) vertical.push_back(k * b.surface_vertices);
  vertical.push_back(vertical.front());
  REQUIRE_FALSE(fill_area_at_most(b.tri, vertical, 10));
}

TEST_CASE("fill query input validation", "[germ][errors]") {
  const Triangulation& tri = fixtures::penta();
  REQUIRE_THROWS_AS(fill_area_at_most(tri, {0, 1, 0}, -1), DomainError);
  REQUIRE_THROWS_AS(fill_area_at_most(tri, {9, 9}, 3), UnknownVertex);
  REQUIRE_THROWS_AS(fill_area_at_most(tri, {0, 1, 2}, 3), NotClosed);
  REQUIRE_THROWS_AS(fill_area_at_most(tri, {0, 1, 1, 0}, 3), NotClosed);
}

TEST_CASE("all short walks of the sphere merge by endpoint", "[germ]") {
  // every loop through the base of length <= 2m fills within m here, so the
  // germ stabilizes at one node per vertex and the arcs form the tournament
  const Triangulation& tri = fixtures::penta();
  const Direction& d = fixtures::penta_order();

  GermComplex g0 = build_germ(tri, d, 0, 0);
  REQUIRE(g0.nodes.size() == 1);
  REQUIRE(g0.arcs.empty());

  GermComplex g1 = build_germ(tri, d, 0, 1);
  REQUIRE(g1.nodes.size() == 5);
  REQUIRE(g1.arcs.size() == 4);

  for (int m : {2, 3, 4}) {
    GermComplex g = build_germ(tri, d, 0, m);
    REQUIRE(g.nodes.size() == 5);
    REQUIRE(g.arcs.size() == 10); // 4 from the base class + C(4,2) between endpoints
    REQUIRE(germ_acyclic(g).acyclic);
  }
}

TEST_CASE("a reversing flip makes the germ cyclic", "[germ]") {
  GermComplex g = build_germ(fixtures::penta(), fixtures::penta_flipped(), 1, 3);
  GermAcyclicity a = germ_acyclic(g);
  REQUIRE_FALSE(a.acyclic);
  REQUIRE(a.cycle_nodes.size() >= 4);
  REQUIRE(a.cycle_nodes.front() == a.cycle_nodes.back());
  std::set<std::array<int, 2>> arcs(g.arcs.begin(), g.arcs.end());
  for (std::size_t i = 0; i + 1 < a.cycle_nodes.size(); ++i)
    REQUIRE(arcs.count({a.cycle_nodes[i], a.cycle_nodes[i + 1]}) == 1);
  REQUIRE(a.cycle_vertices.size() == a.cycle_nodes.size());
  for (std::size_t i = 0; i < a.cycle_nodes.size(); ++i)
    REQUIRE(a.cycle_vertices[i] == g.nodes[a.cycle_nodes[i]].endpoint);
}

TEST_CASE("bundle germs grow and stay acyclic", "[germ]") {
  const ProductBundle& b = fixtures::s2_bundle();
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  for (int m : {0, 1, 2}) {
    GermComplex g = build_germ(b.tri, b.dir, 0, m);
    sizes.push_back({g.nodes.size(), g.arcs.size()});
    REQUIRE(germ_acyclic(g).acyclic);

    REQUIRE(g.base == 0);
    REQUIRE(g.budget == m);
    REQUIRE(g.nodes[0].representative == std::vector<int>{0});
    for (const GermNode& n : g.nodes) {
      REQUIRE(n.representative.front() == 0);
      REQUIRE(n.representative.back() == n.endpoint);
      REQUIRE(n.representative.size() <= static_cast<std::size_t>(m) + 1);
    }
    REQUIRE(std::is_sorted(g.nodes.begin(), g.nodes.end(),
                           [](const GermNode& x, const GermNode& y) {
                             return x.representative < y.representative;
                           }));
    for (const auto& arc : g.arcs) {
      REQUIRE(arc[0] >= 0);
      REQUIRE(arc[0] < static_cast<int>(g.nodes.size()));
      REQUIRE(arc[1] >= 0);
      REQUIRE(arc[1] < static_cast<int>(g.nodes.size()));
    }
  }
  REQUIRE(sizes == std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {9, 8}, {17, 46}});
}

TEST_CASE("germ construction validates its inputs", "[germ][errors]") {
  const Triangulation& tri = fixtures::penta();
  const Direction& d = fixtures::penta_order();
  REQUIRE_THROWS_AS(build_germ(tri, d, 77, 2), UnknownVertex);
  REQUIRE_THROWS_AS(build_germ(tri, d, 0, -1), DomainError);
  REQUIRE_THROWS_AS(build_germ(tri, d, 0, 7), BudgetTooLarge);
  REQUIRE_THROWS_AS(build_germ(tri, d, 0, 3, 2), BudgetTooLarge);
  REQUIRE_NOTHROW(build_germ(tri, d, 0, 2, 2));
}

TEST_CASE("germ rendering", "[germ]") {
  GermComplex g = build_germ(fixtures::penta(), fixtures::penta_order(), 0, 1);
  REQUIRE(render_germ(g) ==
          "node 0 0\n"
          "node 1 0 1\n"
          "node 2 0 2\n"
          "node 3 0 3\n"
          "node 4 0 4\n"
          "arc 0 1\n"
          "arc 0 2\n"
          "arc 0 3\n"
          "arc 0 4\n");
}
