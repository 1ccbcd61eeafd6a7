#include <numeric>
#include <queue>
#include <vector>

#include "catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "trifol/cover.hpp"

using namespace trifol;

namespace {

// gcd of all signed cycle sums, computed against a BFS spanning tree
long long weight_class_content(const Triangulation& tri, const Direction& d,
                               const std::vector<BigInt>& w) {
  const int n = tri.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e = 0; e < tri.edge_count(); ++e) {
    int u = tri.vertex_rank(tri.edges()[e][0]);
    int v = tri.vertex_rank(tri.edges()[e][1]);
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }
  std::vector<BigInt> h(n, 0);
  std::vector<char> seen(n, 0);
  BigInt g = 0;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int cur = q.front();
      q.pop();
      for (auto [nb, e] : adj[cur]) {
        BigInt step = d.tail(e) == tri.vertices()[cur] ? w[e] : -w[e];
        if (!seen[nb]) {
          seen[nb] = 1;
          h[nb] = h[cur] + step;
          q.push(nb);
        } else {
          g = boost::multiprecision::gcd(g, h[cur] + step - h[nb]);
        }
      }
    }
  }
  return g.convert_to<long long>();
}

} // namespace

TEST_CASE("potential-induced covers split into degree many components", "[cover]") {
  CyclicCover cover =
      cyclic_cover(fixtures::penta(), fixtures::penta_order(), fixtures::penta_weights(), 2);
  REQUIRE(cover.degree == 2);
  REQUIRE(cover.tri.tet_count() == 10);
  REQUIRE(cover.tri.vertex_count() == 10);
  REQUIRE(cover.components == 2);

  // both halves carry the full pentachoron skeleton
  REQUIRE(cover.tri.edge_count() == 20);
  REQUIRE(cover.tri.face_count() == 20);
}

TEST_CASE("component count is the gcd of the degree and the content", "[cover][property]") {
  for (const ProductBundle* b : {&fixtures::s2_bundle(), &fixtures::t2_bundle()}) {
    std::vector<BigInt> w = fixtures::solver_weights(b->tri, b->dir);
    long long content = weight_class_content(b->tri, b->dir, w);
    REQUIRE(content > 0);
    for (int n : {1, 2, 3}) {
      CyclicCover cover = cyclic_cover(b->tri, b->dir, w, n);
      REQUIRE(cover.tri.tet_count() == n * b->tri.tet_count());
      REQUIRE(cover.components == std::gcd(static_cast<long long>(n), content));
    }
  }
}

TEST_CASE("degree one cover reproduces the base", "[cover]") {
  CyclicCover cover =
      cyclic_cover(fixtures::penta(), fixtures::penta_order(), fixtures::penta_weights(), 1);
  REQUIRE(cover.components == 1);
  REQUIRE(cover.tri.tets() == fixtures::penta().tets());
  for (int e = 0; e < cover.tri.edge_count(); ++e) {
    int be = fixtures::penta().edge_index(cover.tri.edges()[e][0], cover.tri.edges()[e][1]);
    REQUIRE(cover.dir.tail(e) == fixtures::penta_order().tail(be));
  }
}

TEST_CASE("a connected lift inherits the full local orientation", "[cover]") {
  const ProductBundle& b = fixtures::s2_bundle();
  std::vector<BigInt> w = fixtures::solver_weights(b.tri, b.dir);
  long long content = weight_class_content(b.tri, b.dir, w);
  int n = 5;
  REQUIRE(std::gcd(static_cast<long long>(n), content) == 1);

  CyclicCover cover = cyclic_cover(b.tri, b.dir, w, n);
  REQUIRE(cover.components == 1);
  REQUIRE(check_local_orientation(b.tri, b.dir).pass);
  LocalOrientationReport lifted = check_local_orientation(cover.tri, cover.dir);
  REQUIRE(lifted.pass);
}

TEST_CASE("disconnected lifts still orient locally, but cannot recur", "[cover]") {
  const ProductBundle& b = fixtures::s2_bundle();
  std::vector<BigInt> w = fixtures::solver_weights(b.tri, b.dir);
  CyclicCover cover = cyclic_cover(b.tri, b.dir, w, 2);
  REQUIRE(cover.components == 2);

  LocalOrientationReport rep = check_local_orientation(cover.tri, cover.dir);
  REQUIRE(rep.links_pass);
  REQUIRE(rep.tet_order.pass);
  REQUIRE_FALSE(rep.recurrence.pass);
  REQUIRE(rep.recurrence.scc_count == 2);
}

TEST_CASE("cover construction validates its inputs", "[cover][errors]") {
  REQUIRE_THROWS_AS(
      cyclic_cover(fixtures::penta(), fixtures::penta_order(), fixtures::penta_weights(), 0),
      DomainError);

  std::vector<BigInt> w = fixtures::penta_weights();
  w[0] += 1;
  REQUIRE_THROWS_AS(cyclic_cover(fixtures::penta(), fixtures::penta_order(), w, 2),
                    BadWeights);
  w = fixtures::penta_weights();
  w.pop_back();
  REQUIRE_THROWS_AS(cyclic_cover(fixtures::penta(), fixtures::penta_order(), w, 2),
                    BadWeights);
}
