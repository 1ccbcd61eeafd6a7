#pragma once

// From positive integer edge weights with vanishing signed face sums to a
// circle-valued map: each directed edge u -> v gets adjusted length
// weight + offset(v) - offset(u), where offset(v) = rank(v) / (2*V*maxW + 1)
// perturbs the vertices to pairwise distinct points of the circle without
// reordering anything (the perturbations are too small to cancel a weight).
// The weight system itself comes from the per-face equations
// x_ab + x_bc = x_ac (a < b < c in the order induced by the direction),
// solved exactly over {x >= 1}.
//
// Because all signed cycle sums of the integer weights are multiples of
// their gcd (the content of the class), the height map descends to a circle
// of circumference content; dividing by it normalizes the circumference to 1
// and makes the map primitive, so a fiber of a genuine fibration comes out
// connected instead of as content-many parallel copies. When every cycle sum
// vanishes (e.g. on a homology sphere) the heights are a global potential
// and the circumference falls back to 1. Vertex v sits at integer height
// potential(v) plus its offset; its phase is that height over the
// circumference, mod 1.
//
// verify_vertex_links counts, at every vertex, the circles in which the level
// set just below the vertex meets its link sphere: nodes are link edges whose
// endpoint heights change sign, joined through link triangles carrying both
// signs. The map is a fibration over the circle exactly when every count is 1.
//
// extract_fiber cuts the level set at a phase theta that avoids every vertex:
// inside a tet with lifted heights h_a < h_b < h_c < h_d the translates of
// theta in (h_a,h_b) give triangles at the low corner, in (h_c,h_d) triangles
// at the top corner, and in (h_b,h_c) quads separating the low pair from the
// top pair.

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "trifol/cover.hpp"
#include "trifol/direction.hpp"
#include "trifol/errors.hpp"
#include "trifol/normal_surface.hpp"
#include "trifol/rational.hpp"
#include "trifol/simplex.hpp"
#include "trifol/triangulation.hpp"

namespace trifol {

struct TriangleSystem {
  std::vector<std::vector<BigInt>> rows; // one per face class, aligned with faces()
  int cols = 0;                          // one per edge class
};

inline TriangleSystem triangle_system(const Triangulation& tri, const Direction& d) {
  TetOrderVerdict order = tet_order_verdict(tri, d);
  if (!order.pass)
    throw NoTotalOrder("tetrahedron " + std::to_string(order.tet) +
                       " has no total order: directed cycle " +
                       detail::id_list({order.cycle[0], order.cycle[1], order.cycle[2]}));
  TriangleSystem sys;
  sys.cols = tri.edge_count();
  for (const auto& f : tri.faces()) {
    std::array<int, 3> deg{0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && d.points(tri, f[i], f[j])) ++deg[i];
    int a = -1, b = -1, c = -1;
    for (int i = 0; i < 3; ++i) {
      if (deg[i] == 2) a = f[i];
      else if (deg[i] == 1) b = f[i];
      else c = f[i];
    }
    std::vector<BigInt> row(sys.cols, BigInt(0));
    row[tri.edge_index(a, b)] += 1;
    row[tri.edge_index(b, c)] += 1;
    row[tri.edge_index(a, c)] -= 1;
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

struct FibrationMap {
  std::vector<BigInt> weights;    // per edge class, positive
  std::vector<Rational> offsets;  // per vertex rank, rank / (2*V*maxWeight + 1)
  std::vector<BigInt> potential;  // per vertex rank, integer height from a spanning forest
  BigInt content = 0;             // gcd of all signed cycle sums; 0 when they all vanish
  BigInt max_weight = 0;

  const Rational& offset_of_rank(int r) const { return offsets[r]; }

  // Circumference of the target circle in height units.
  BigInt circumference() const { return content == 0 ? BigInt(1) : content; }

  // Exact height of a vertex, well defined modulo the circumference.
  Rational height_of_rank(int r) const { return Rational(potential[r]) + offsets[r]; }

  // Phase of a vertex on the unit circle, in [0, 1).
  Rational phase_of_rank(int r) const {
    return frac_rat(height_of_rank(r) / Rational(circumference()));
  }

  // Length of the directed edge u -> v after the offset adjustment. Positive.
  Rational adjusted_length(const Triangulation& tri, const Direction& d, int edge_idx) const {
    Rational len(weights[edge_idx]);
    len += offsets[tri.vertex_rank(d.head(edge_idx))];
    len -= offsets[tri.vertex_rank(d.tail(edge_idx))];
    return len;
  }

  // Signed height difference h(v) - h(u) along edge {u,v}.
  Rational signed_length(const Triangulation& tri, const Direction& d, int u, int v) const {
    int e = tri.edge_index(u, v);
    Rational len = adjusted_length(tri, d, e);
    return d.tail(e) == u ? len : -len;
  }
};

inline FibrationMap build_fibration_map(const Triangulation& tri, const Direction& d,
                                        const std::vector<BigInt>& weights) {
  if (static_cast<int>(weights.size()) != tri.edge_count())
    throw BadWeights("expected " + std::to_string(tri.edge_count()) + " weights, got " +
                     std::to_string(weights.size()));
  for (int e = 0; e < tri.edge_count(); ++e)
    if (weights[e] < 1)
      throw BadWeights("weight of edge " +
                       detail::id_list({tri.edges()[e][0], tri.edges()[e][1]}) +
                       " is not positive");
  detail::check_face_sums(tri, d, weights); // BadWeights unless face sums vanish

  FibrationMap map;
  map.weights = weights;
  for (const auto& w : weights) map.max_weight = std::max(map.max_weight, w);
  BigInt denom = 2 * BigInt(tri.vertex_count()) * map.max_weight + 1;
  for (int r = 0; r < tri.vertex_count(); ++r)
    map.offsets.push_back(Rational(BigInt(r), denom));

  // Integer heights from a spanning forest of the 1-skeleton; every non-tree
  // edge closes a cycle whose signed weight sum feeds the content gcd.
  const int n = tri.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(n); // (neighbor rank, edge index)
  for (int e = 0; e < tri.edge_count(); ++e) {
    int u = tri.vertex_rank(tri.edges()[e][0]);
    int v = tri.vertex_rank(tri.edges()[e][1]);
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }
  map.potential.assign(n, BigInt(0));
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      int cur_id = tri.vertices()[cur];
      for (auto [nb, e] : adj[cur]) {
        BigInt step = d.tail(e) == cur_id ? weights[e] : -weights[e];
        BigInt expected = map.potential[cur] + step;
        if (!seen[nb]) {
          seen[nb] = 1;
          map.potential[nb] = expected;
          stack.push_back(nb);
        } else {
          BigInt sum = expected - map.potential[nb];
          if (sum < 0) sum = -sum;
          map.content = boost::multiprecision::gcd(map.content, sum);
        }
      }
    }
  }
  return map;
}

struct LinkVerification {
  std::vector<int> circle_counts; // per vertex rank
  bool pass = false;              // every count is exactly 1
};

inline LinkVerification verify_vertex_links(const Triangulation& tri, const Direction& d,
                                            const FibrationMap& map) {
  LinkVerification out;
  out.pass = true;
  for (int v : tri.vertices()) {
    const LinkComplex& lk = tri.link(v);
    std::map<int, int> sign_of; // +1 above the vertex, -1 below
    for (int w : lk.vertices)
      sign_of[w] = map.signed_length(tri, d, v, w) > 0 ? 1 : -1;

    std::map<std::array<int, 2>, int> node; // sign-change link edges
    for (const auto& e : lk.edges)
      if (sign_of.at(e[0]) != sign_of.at(e[1])) {
        int idx = static_cast<int>(node.size());
        node[e] = idx;
      }
    UnionFind uf(static_cast<int>(node.size()));
    for (const auto& t : lk.triangles) {
      std::vector<std::array<int, 2>> mixed;
      for (auto e : {std::array<int, 2>{t[0], t[1]}, std::array<int, 2>{t[0], t[2]},
                     std::array<int, 2>{t[1], t[2]}})
        if (node.count(e)) mixed.push_back(e);
      if (mixed.size() == 2) uf.unite(node.at(mixed[0]), node.at(mixed[1]));
    }
    int circles = node.empty() ? 0 : uf.component_count();
    out.circle_counts.push_back(circles);
    if (circles != 1) out.pass = false;
  }
  return out;
}

// Midpoint of the largest gap between consecutive vertex phases (including
// the wrap-around gap); ties resolved toward the earlier gap.
inline Rational default_theta(const FibrationMap& map) {
  std::vector<Rational> ph;
  for (int r = 0; r < static_cast<int>(map.offsets.size()); ++r)
    ph.push_back(map.phase_of_rank(r));
  std::sort(ph.begin(), ph.end());
  const int n = static_cast<int>(ph.size());
  Rational best_gap = -1, best_mid = 0;
  for (int i = 0; i < n; ++i) {
    Rational next = (i + 1 < n) ? ph[i + 1] : ph[0] + 1;
    Rational gap = next - ph[i];
    if (gap > best_gap) {
      best_gap = gap;
      best_mid = frac_rat((ph[i] + next) / 2);
    }
  }
  return best_mid;
}

inline NormalVector extract_fiber(const Triangulation& tri, const Direction& d,
                                  const FibrationMap& map, const Rational& theta) {
  if (!(theta > 0 && theta < 1))
    throw DomainError("theta must lie strictly between 0 and 1, got " + rat_str(theta));
  for (int r = 0; r < tri.vertex_count(); ++r)
    if (theta == map.phase_of_rank(r))
      throw ThetaCollision("theta " + rat_str(theta) + " hits the phase of vertex " +
                           std::to_string(tri.vertices()[r]));

  const Rational cut = theta * Rational(map.circumference());
  const Rational span(map.circumference());
  NormalVector nv = NormalVector::zero(tri);
  for (int ti = 0; ti < tri.tet_count(); ++ti) {
    const auto& tet = tri.tets()[ti];
    std::array<Rational, 4> h;
    h[0] = map.height_of_rank(tri.vertex_rank(tet[0]));
    for (int j = 1; j < 4; ++j)
      h[j] = h[0] + map.signed_length(tri, d, tet[0], tet[j]);
    std::array<int, 4> ord{0, 1, 2, 3};
    std::sort(ord.begin(), ord.end(), [&](int i, int j) { return h[i] < h[j]; });

    auto translates = [&](const Rational& lo, const Rational& hi) {
      BigInt n = floor_rat((hi - cut) / span) - floor_rat((lo - cut) / span);
      if (n > 2'000'000) throw InvalidVector("fiber too large to enumerate: " + n.str());
      return n.convert_to<long long>();
    };
    // low band: triangles at the lowest corner
    nv.coords[ti][ord[0]] += translates(h[ord[0]], h[ord[1]]);
    // top band: triangles at the highest corner
    nv.coords[ti][ord[3]] += translates(h[ord[2]], h[ord[3]]);
    // middle band: quads separating the low pair from the top pair
    int low_pair_type = detail::quad_joining(tet, tet[ord[0]], tet[ord[1]]);
    nv.coords[ti][4 + low_pair_type] += translates(h[ord[1]], h[ord[2]]);
  }
  return nv;
}

// Weight files are directed weighted edge lists: `u v w` means edge u -> v
// with weight w. They determine a direction and a weight vector together.
inline std::pair<Direction, std::vector<BigInt>> parse_weights(const Triangulation& tri,
                                                               const std::string& text) {
  std::vector<std::array<int, 2>> pairs;
  std::vector<std::pair<int, BigInt>> by_edge;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int u, v;
    std::string w;
    if (!(ls >> u)) continue;
    if (!(ls >> v >> w))
      throw SyntaxError("line " + std::to_string(lineno) +
                        ": expected 'u v weight'");
    std::string extra;
    if (ls >> extra)
      throw SyntaxError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
    BigInt weight;
    try {
      weight = BigInt(w);
    } catch (const std::exception&) {
      throw SyntaxError("line " + std::to_string(lineno) + ": bad weight '" + w + "'");
    }
    pairs.push_back({u, v});
    if (!tri.has_edge(u, v)) throw UnknownEdge("no edge " + detail::id_list({u, v}));
    by_edge.push_back({tri.edge_index(u, v), weight});
  }
  Direction d = Direction::from_oriented_pairs(tri, pairs); // duplicate/missing checks
  std::vector<BigInt> weights(tri.edge_count());
  for (const auto& [e, w] : by_edge) weights[e] = w;
  return {std::move(d), std::move(weights)};
}

inline std::string render_weights(const Triangulation& tri, const Direction& d,
                                  const std::vector<BigInt>& weights) {
  std::string out;
  for (int e = 0; e < tri.edge_count(); ++e)
    out += std::to_string(d.tail(e)) + " " + std::to_string(d.head(e)) + " " +
           weights[e].str() + "\n";
  return out;
}

} // namespace trifol
