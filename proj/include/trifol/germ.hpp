#pragma once

// Germs at a vertex: undirected walks of length <= m from a base point,
// identified whenever the closed loop (walk one, reverse of walk two) can be
// filled by at most m triangle moves, then closed transitively. Arcs between
// classes come from one-edge extensions and inherit the edge direction. The
// direction is germ-acyclic at the base when this quotient graph has no
// directed loop.
//
// fill_area_at_most decides fillability by 0-1 breadth-first search over
// cyclic vertex words: backtrack cancellations (x,y,x) -> (x) cost 0, face
// moves cost 1 (remove the middle vertex of a face spanning three consecutive
// word letters, or insert the third vertex of a face across a word edge).
// Words are memoized in canonical cyclic form (least rotation of the word or
// its reversal); word length never needs to exceed |loop| + budget because
// every insertion costs one move. States proven unfillable within a remaining
// budget are cached across queries of the same context.
//
// Every move changes the word's signed edge-crossing vector by a face
// boundary or not at all, and the trivial word has the zero vector, so a
// loop whose vector lies outside the integer lattice spanned by the face
// boundaries can never fill. That membership test (echelon lattice basis,
// exact integers) short-circuits the search for homologically essential
// loops, and walks toward distinct lattice cosets can never be identified,
// which prunes the germ's pair queries to one coset group at a time.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "trifol/direction.hpp"
#include "trifol/errors.hpp"
#include "trifol/rational.hpp"
#include "trifol/triangulation.hpp"

namespace trifol {

namespace detail {

inline std::vector<int> least_rotation_copy(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  if (n <= 1) return w;
  int best = 0;
  for (int c = 1; c < n; ++c) {
    for (int k = 0; k < n; ++k) {
      int a = w[(best + k) % n], b = w[(c + k) % n];
      if (a != b) {
        if (b < a) best = c;
        break;
      }
    }
  }
  std::vector<int> out(n);
  for (int k = 0; k < n; ++k) out[k] = w[(best + k) % n];
  return out;
}

inline std::vector<int> canonical_cyclic(std::vector<int> w) {
  if (w.size() <= 1) return w;
  std::vector<int> r1 = least_rotation_copy(w);
  std::reverse(w.begin(), w.end());
  std::vector<int> r2 = least_rotation_copy(w);
  return std::min(r1, r2);
}

// Integer lattice in Z^n kept as an echelon basis (ascending pivot columns,
// positive pivots). reduce() maps a vector to the canonical coset
// representative with entries in [0, pivot) at every pivot column; a vector
// lies in the lattice iff it reduces to zero.
class EchelonLattice {
public:
  explicit EchelonLattice(int cols) : cols_(cols) {}

  void insert(std::vector<BigInt> v) {
    for (std::size_t i = 0; i < basis_.size() && !is_zero(v); ++i) {
      int c = pivot_col_[i];
      if (leading_col(v) < c) break;
      if (v[c] == 0) continue;
      auto& b = basis_[i];
      // gcd step: combine so the basis row keeps column c, v loses it
      while (v[c] != 0) {
        BigInt q = b[c] / v[c]; // truncated; loop mimics Euclid on column c
        if (q != 0)
          for (int j = 0; j < cols_; ++j) b[j] -= q * v[j];
        std::swap(b, v);
      }
      if (b[c] < 0)
        for (auto& x : b) x = -x;
    }
    if (!is_zero(v)) {
      int c = leading_col(v);
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      std::size_t at = 0;
      while (at < basis_.size() && pivot_col_[at] < c) ++at;
      basis_.insert(basis_.begin() + at, std::move(v));
      pivot_col_.insert(pivot_col_.begin() + at, c);
    }
  }

  std::vector<BigInt> reduce(std::vector<BigInt> v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      int c = pivot_col_[i];
      if (v[c] == 0) continue;
      BigInt q = v[c] / basis_[i][c];
      if (v[c] - q * basis_[i][c] < 0) q -= 1; // floor division
      if (q != 0)
        for (int j = 0; j < cols_; ++j) v[j] -= q * basis_[i][j];
    }
    return v;
  }

  bool contains(const std::vector<BigInt>& v) const { return is_zero(reduce(v)); }

private:
  int cols_;
  std::vector<std::vector<BigInt>> basis_;
  std::vector<int> pivot_col_;

  static bool is_zero(const std::vector<BigInt>& v) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  int leading_col(const std::vector<BigInt>& v) const {
    for (int j = 0; j < cols_; ++j)
      if (v[j] != 0) return j;
    return cols_;
  }
};

} // namespace detail

// Shared search state for fill queries against one triangulation at one
// budget. Reusing a context across queries shares the unfillability cache.
class FillContext {
public:
  FillContext(const Triangulation& tri, int budget)
      : tri_(&tri), budget_(budget), boundaries_(tri.edge_count()) {
    if (budget < 0) throw DomainError("fill budget must be non-negative");
    thirds_.assign(tri.edge_count(), {});
    for (const auto& f : tri.faces()) {
      thirds_[tri.edge_index(f[0], f[1])].push_back(f[2]);
      thirds_[tri.edge_index(f[0], f[2])].push_back(f[1]);
      thirds_[tri.edge_index(f[1], f[2])].push_back(f[0]);
      // boundary cycle a -> b -> c -> a against the min -> max edge orientation
      std::vector<BigInt> row(tri.edge_count(), BigInt(0));
      row[tri.edge_index(f[0], f[1])] += 1;
      row[tri.edge_index(f[1], f[2])] += 1;
      row[tri.edge_index(f[0], f[2])] -= 1;
      boundaries_.insert(std::move(row));
    }
    for (auto& t : thirds_) std::sort(t.begin(), t.end());
    wide_ids_ = !tri.vertices().empty() && tri.vertices().back() > 0xff;
  }

  int budget() const { return budget_; }

  // Signed edge-crossing vector of a walk (steps of a cyclic word wrap).
  std::vector<BigInt> crossing_vector(const std::vector<int>& walk, bool cyclic) const {
    std::vector<BigInt> v(tri_->edge_count(), BigInt(0));
    const int n = static_cast<int>(walk.size());
    for (int i = 0; i + 1 < n + (cyclic ? 1 : 0); ++i) {
      int a = walk[i], b = walk[(i + 1) % n];
      v[tri_->edge_index(a, b)] += a < b ? 1 : -1;
    }
    return v;
  }

  // Canonical coset representative modulo the face-boundary lattice.
  std::vector<BigInt> boundary_coset(const std::vector<BigInt>& v) const {
    return boundaries_.reduce(v);
  }

  // `word` is a cyclic vertex word (no repeated closing vertex). Filling area
  // is invariant under free reduction (spurs fold out of any disk diagram),
  // so reducing first lets rewordings of one core loop share a cache entry.
  bool fillable(const std::vector<int>& word) {
    std::vector<int> core = cyclic_free_reduce(word);
    if (core.size() <= 1) return true; // collapses to a constant loop
    std::vector<int> canon = detail::canonical_cyclic(std::move(core));
    std::string key = encode(canon);
    auto it = verdict_.find(key);
    if (it != verdict_.end()) return it->second != 0;
    bool ok = boundaries_.contains(crossing_vector(canon, true))
                  ? search(std::move(canon))
                  : false; // essential in homology: no move sequence reaches the trivial word
    verdict_[std::move(key)] = ok ? 1 : 0;
    return ok;
  }

  static std::vector<int> cyclic_free_reduce(std::vector<int> w) {
    bool changed = true;
    while (changed && w.size() >= 2) {
      changed = false;
      const int L = static_cast<int>(w.size());
      for (int i = 0; i < L; ++i) {
        if (w[((i - 1) % L + L) % L] != w[(i + 1) % L]) continue;
        std::vector<int> nw;
        nw.reserve(L - 2);
        int j1 = i, j2 = (i + 1) % L;
        for (int j = 0; j < L; ++j)
          if (j != j1 && j != j2) nw.push_back(w[j]);
        w = std::move(nw);
        changed = true;
        break;
      }
    }
    return w;
  }

private:
  const Triangulation* tri_;
  int budget_;
  std::vector<std::vector<int>> thirds_; // per edge class: third face vertices
  detail::EchelonLattice boundaries_;
  bool wide_ids_ = false;
  std::unordered_map<std::string, signed char> verdict_;
  std::unordered_map<std::string, int> unfillable_within_;

  std::string encode(const std::vector<int>& w) const {
    std::string s;
    if (!wide_ids_) {
      s.reserve(w.size());
      for (int v : w) s.push_back(static_cast<char>(v));
    } else {
      s.reserve(4 * w.size());
      for (int v : w)
        for (int b = 0; b < 4; ++b) s.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
    }
    return s;
  }

  // Every paid move shifts the crossing vector by one signed face boundary,
  // which touches three edges with coefficients in {-1, 0, +1}; cancellations
  // leave the vector fixed. Reaching the trivial word (vector zero) therefore
  // takes at least max(linf, ceil(l1 / 3)) paid moves.
  int fill_moves_lower_bound(const std::vector<int>& w) const {
    const int L = static_cast<int>(w.size());
    if (L <= 1) return 0;
    std::vector<std::pair<int, int>> counts;
    counts.reserve(L);
    for (int i = 0; i < L; ++i) {
      int a = w[i], b = w[(i + 1) % L];
      int e = tri_->edge_index(a, b), s = a < b ? 1 : -1;
      auto it = std::find_if(counts.begin(), counts.end(),
                             [&](const auto& p) { return p.first == e; });
      if (it == counts.end()) counts.emplace_back(e, s);
      else it->second += s;
    }
    int l1 = 0, linf = 0;
    for (const auto& [e, s] : counts) {
      (void)e;
      l1 += std::abs(s);
      linf = std::max(linf, std::abs(s));
    }
    return std::max(linf, (l1 + 2) / 3);
  }

  bool search(std::vector<int> start) {
    if (start.empty()) return true;
    const int cap = static_cast<int>(start.size()) + budget_;
    std::unordered_map<std::string, int> best;
    std::deque<std::pair<std::vector<int>, int>> dq;
    std::vector<std::pair<std::string, int>> popped;
    bool found = false;

    auto push = [&](std::vector<int> w, int cost, bool heavier) {
      if (static_cast<int>(w.size()) > cap) return;
      if (cost + fill_moves_lower_bound(w) > budget_) return;
      w = detail::canonical_cyclic(std::move(w));
      std::string key = encode(w);
      auto it = best.find(key);
      if (it != best.end() && it->second <= cost) return;
      {
        auto uit = unfillable_within_.find(key);
        if (uit != unfillable_within_.end() && uit->second >= budget_ - cost)
          return;
      }
      best[std::move(key)] = cost;
      if (heavier) dq.emplace_back(std::move(w), cost);
      else dq.emplace_front(std::move(w), cost);
    };

    push(std::move(start), 0, true);
    while (!dq.empty() && !found) {
      auto [w, c] = std::move(dq.front());
      dq.pop_front();
      std::string key = encode(w);
      {
        auto it = best.find(key);
        if (it == best.end() || it->second < c) continue; // stale entry
      }
      if (w.size() <= 1) { // empty or constant loop: trivial
        found = true;
        break;
      }
      {
        auto it = unfillable_within_.find(key);
        if (it != unfillable_within_.end() && it->second >= budget_ - c) continue;
      }
      popped.emplace_back(std::move(key), c);

      const int L = static_cast<int>(w.size());
      auto at = [&](int i) { return w[((i % L) + L) % L]; };
      for (int i = 0; i < L; ++i) {
        int x = at(i - 1), y = w[i], z = at(i + 1);
        if (x == z && L >= 2) {
          // cancel the backtrack (x,y,x): drop positions i and i+1
          std::vector<int> nw;
          nw.reserve(L - 2);
          int j1 = i, j2 = (i + 1) % L;
          for (int j = 0; j < L; ++j)
            if (j != j1 && j != j2) nw.push_back(w[j]);
          push(std::move(nw), c, false);
        } else if (x != z && tri_->has_face(x, y, z) && c + 1 <= budget_) {
          // sweep across face {x,y,z}: drop the middle letter
          std::vector<int> nw;
          nw.reserve(L - 1);
          for (int j = 0; j < L; ++j)
            if (j != i) nw.push_back(w[j]);
          push(std::move(nw), c + 1, true);
        }
        if (c + 1 <= budget_ && L + 1 <= cap) {
          // insert the third vertex of a face across the word edge (y, z)
          for (int t : thirds_[tri_->edge_index(y, z)]) {
            std::vector<int> nw;
            nw.reserve(L + 1);
            for (int j = 0; j <= i; ++j) nw.push_back(w[j]);
            nw.push_back(t);
            for (int j = i + 1; j < L; ++j) nw.push_back(w[j]);
            push(std::move(nw), c + 1, true);
          }
        }
      }
    }
    if (!found)
      for (auto& [key, c] : popped) {
        int& bound = unfillable_within_[key];
        bound = std::max(bound, budget_ - c);
      }
    return found;
  }
};

// `loop` is a closed edge path: vertex sequence whose first and last entries
// agree and whose consecutive entries span edges.
inline bool fill_area_at_most(const Triangulation& tri, const std::vector<int>& loop,
                              int budget) {
  if (budget < 0) throw DomainError("fill budget must be non-negative");
  if (loop.empty()) return true;
  for (int v : loop)
    if (!tri.has_vertex(v))
      throw UnknownVertex("vertex " + std::to_string(v) + " not in triangulation");
  if (loop.front() != loop.back())
    throw NotClosed("loop starts at " + std::to_string(loop.front()) + " but ends at " +
                    std::to_string(loop.back()));
  for (std::size_t i = 0; i + 1 < loop.size(); ++i)
    if (!tri.has_edge(loop[i], loop[i + 1]))
      throw NotClosed("consecutive loop vertices " +
                      detail::id_list({loop[i], loop[i + 1]}) + " span no edge");
  std::vector<int> word(loop.begin(), loop.end() - 1);
  FillContext ctx(tri, budget);
  return ctx.fillable(word);
}

struct GermNode {
  std::vector<int> representative; // lexicographically least walk of the class
  int endpoint = -1;
};

struct GermComplex {
  int base = -1;
  int budget = 0;
  std::vector<GermNode> nodes;         // sorted by representative
  std::vector<std::array<int, 2>> arcs; // directed, sorted, deduped
};

inline constexpr int kDefaultGermBudgetCap = 6;

inline GermComplex build_germ(const Triangulation& tri, const Direction& d, int base, int m,
                              int budget_cap = kDefaultGermBudgetCap) {
  if (!tri.has_vertex(base))
    throw UnknownVertex("vertex " + std::to_string(base) + " not in triangulation");
  if (m < 0) throw DomainError("germ radius must be non-negative");
  if (m > budget_cap)
    throw BudgetTooLarge("germ radius " + std::to_string(m) + " exceeds cap " +
                         std::to_string(budget_cap));

  std::map<int, std::vector<int>> neighbors;
  for (const auto& e : tri.edges()) {
    neighbors[e[0]].push_back(e[1]);
    neighbors[e[1]].push_back(e[0]);
  }
  for (auto& [v, ns] : neighbors) std::sort(ns.begin(), ns.end());

  // walks in (length, lexicographic) order; parent = walk minus last step
  std::vector<std::vector<int>> walks{{base}};
  std::vector<int> parent{-1};
  std::size_t level_begin = 0;
  for (int len = 1; len <= m; ++len) {
    std::size_t level_end = walks.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int w : neighbors[walks[i].back()]) {
        std::vector<int> ext = walks[i];
        ext.push_back(w);
        walks.push_back(std::move(ext));
        parent.push_back(static_cast<int>(i));
      }
    }
    level_begin = level_end;
  }

  UnionFind uf(static_cast<int>(walks.size()));
  FillContext ctx(tri, m);

  // Backtrack cancellations are free, so every walk merges with its free
  // reduction outright; the reduction is a shorter walk from the same base
  // and therefore already enumerated.
  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < walks.size(); ++i) index_of[walks[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < walks.size(); ++i) {
    std::vector<int> red{walks[i][0]};
    for (std::size_t k = 1; k < walks[i].size(); ++k) {
      if (red.size() >= 2 && red[red.size() - 2] == walks[i][k]) red.pop_back();
      else red.push_back(walks[i][k]);
    }
    if (red != walks[i]) uf.unite(static_cast<int>(i), index_of.at(red));
  }

  // Walks can only be identified when their closing loop fills, which forces
  // equal edge-crossing cosets modulo the face boundaries; group by endpoint
  // and coset and query fills only inside a group.
  std::map<std::pair<int, std::string>, std::vector<int>> groups;
  for (std::size_t i = 0; i < walks.size(); ++i) {
    std::string coset;
    for (const auto& x : ctx.boundary_coset(ctx.crossing_vector(walks[i], false)))
      coset += x.str() + ",";
    groups[{walks[i].back(), std::move(coset)}].push_back(static_cast<int>(i));
  }

  for (const auto& [key, group] : groups) {
    (void)key;
    struct Pair {
      int len_sum, a, b;
      bool operator<(const Pair& o) const {
        return std::tie(len_sum, a, b) < std::tie(o.len_sum, o.a, o.b);
      }
    };
    std::vector<Pair> pairs;
    for (std::size_t x = 0; x < group.size(); ++x)
      for (std::size_t y = x + 1; y < group.size(); ++y) {
        int a = group[x], b = group[y];
        pairs.push_back({static_cast<int>(walks[a].size() + walks[b].size()) - 2, a, b});
      }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& p : pairs) {
      if (uf.find(p.a) == uf.find(p.b)) continue;
      const auto& wa = walks[p.a];
      const auto& wb = walks[p.b];
      // out along wa, back along wb; wb's endpoint and start are already
      // covered by wa's last entry and the cyclic closure
      std::vector<int> word = wa;
      for (int k = static_cast<int>(wb.size()) - 2; k >= 1; --k) word.push_back(wb[k]);
      if (ctx.fillable(word)) uf.unite(p.a, p.b);
    }
  }

  std::map<int, std::vector<int>> classes;
  for (std::size_t i = 0; i < walks.size(); ++i)
    classes[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));

  GermComplex germ;
  germ.base = base;
  germ.budget = m;
  std::vector<std::pair<std::vector<int>, int>> reps; // (representative, root)
  for (const auto& [root, members] : classes) {
    const std::vector<int>* best = &walks[members[0]];
    for (int i : members)
      if (walks[i] < *best) best = &walks[i];
    reps.push_back({*best, root});
  }
  std::sort(reps.begin(), reps.end());
  std::map<int, int> node_of_root;
  for (std::size_t n = 0; n < reps.size(); ++n) {
    node_of_root[reps[n].second] = static_cast<int>(n);
    germ.nodes.push_back({reps[n].first, reps[n].first.back()});
  }

  std::set<std::array<int, 2>> arcs;
  for (std::size_t i = 1; i < walks.size(); ++i) {
    int na = node_of_root.at(uf.find(parent[i]));
    int nb = node_of_root.at(uf.find(static_cast<int>(i)));
    int a = walks[parent[i]].back();
    int b = walks[i].back();
    if (d.points(tri, a, b)) arcs.insert({na, nb});
    else arcs.insert({nb, na});
  }
  germ.arcs.assign(arcs.begin(), arcs.end());
  return germ;
}

struct GermAcyclicity {
  bool acyclic = true;
  std::vector<int> cycle_nodes;    // directed node cycle, first node repeated at end
  std::vector<int> cycle_vertices; // endpoints along that cycle
};

inline GermAcyclicity germ_acyclic(const GermComplex& germ) {
  const int n = static_cast<int>(germ.nodes.size());
  std::vector<std::vector<int>> out(n);
  for (const auto& a : germ.arcs) out[a[0]].push_back(a[1]);

  GermAcyclicity res;
  std::vector<int> state(n, 0); // 0 fresh, 1 active, 2 done
  std::vector<int> stack, child_at;
  for (int root = 0; root < n && res.acyclic; ++root) {
    if (state[root] != 0) continue;
    stack = {root};
    child_at = {0};
    state[root] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      if (child_at.back() < static_cast<int>(out[v].size())) {
        int w = out[v][child_at.back()++];
        if (state[w] == 1) {
          // directed cycle: w .. v .. w
          auto it = std::find(stack.begin(), stack.end(), w);
          std::vector<int> cyc(it, stack.end());
          int shift = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
          std::rotate(cyc.begin(), cyc.begin() + shift, cyc.end());
          cyc.push_back(cyc.front());
          res.acyclic = false;
          res.cycle_nodes = cyc;
          for (int node : cyc) res.cycle_vertices.push_back(germ.nodes[node].endpoint);
          break;
        }
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back(w);
          child_at.push_back(0);
        }
      } else {
        state[v] = 2;
        stack.pop_back();
        child_at.pop_back();
      }
    }
    if (!res.acyclic) break;
  }
  return res;
}

// Text dump: one `node <id> <walk vertices>` line per node, then one
// `arc <from> <to>` line per arc.
inline std::string render_germ(const GermComplex& germ) {
  std::string out;
  for (std::size_t i = 0; i < germ.nodes.size(); ++i) {
    out += "node " + std::to_string(i);
    for (int v : germ.nodes[i].representative) out += " " + std::to_string(v);
    out += "\n";
  }
  for (const auto& a : germ.arcs)
    out += "arc " + std::to_string(a[0]) + " " + std::to_string(a[1]) + "\n";
  return out;
}

} // namespace trifol
