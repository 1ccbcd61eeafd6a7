#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <numeric>
#include <vector>

namespace trifol {

// Small directed graph on nodes 0..n-1 with sorted adjacency.
struct Digraph {
  int n = 0;
  std::vector<std::vector<int>> out;

  explicit Digraph(int nodes = 0) : n(nodes), out(nodes) {}

  void add_arc(int u, int v) { out[u].push_back(v); }

  void sort_arcs() {
    for (auto& a : out) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
  }
};

struct SccResult {
  int count = 0;
  std::vector<int> id; // per node, ids are in reverse topological order of discovery
};

// Iterative Tarjan. Deterministic: arcs visited in stored order.
inline SccResult strongly_connected_components(const Digraph& g) {
  SccResult res;
  res.id.assign(g.n, -1);
  std::vector<int> index(g.n, -1), low(g.n, 0);
  std::vector<char> on_stack(g.n, 0);
  std::vector<int> stack;
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t child;
  };
  std::vector<Frame> call;

  for (int root = 0; root < g.n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < g.out[f.v].size()) {
        int w = g.out[f.v][f.child++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            res.id[w] = res.count;
            if (w == v) break;
          }
          ++res.count;
        }
      }
    }
  }
  return res;
}

inline std::vector<char> reachable_from(const Digraph& g, int s) {
  std::vector<char> seen(g.n, 0);
  std::deque<int> q{s};
  seen[s] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.out[v])
      if (!seen[w]) {
        seen[w] = 1;
        q.push_back(w);
      }
  }
  return seen;
}

// Shortest directed path from s to t, ties broken by taking the smallest
// successor id at every step. Returns the vertex sequence s..t, or empty if
// t is unreachable. Requires sorted adjacency for determinism.
inline std::vector<int> shortest_directed_path(const Digraph& g, int s, int t) {
  std::vector<int> dist_to_t(g.n, -1);
  {
    // reverse BFS from t
    std::vector<std::vector<int>> in(g.n);
    for (int u = 0; u < g.n; ++u)
      for (int v : g.out[u]) in[v].push_back(u);
    std::deque<int> q{t};
    dist_to_t[t] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u : in[v])
        if (dist_to_t[u] == -1) {
          dist_to_t[u] = dist_to_t[v] + 1;
          q.push_back(u);
        }
    }
  }
  if (dist_to_t[s] == -1) return {};
  std::vector<int> path{s};
  int cur = s;
  while (cur != t) {
    int next = -1;
    for (int w : g.out[cur]) {
      if (dist_to_t[w] == dist_to_t[cur] - 1) {
        next = w; // adjacency sorted ascending, first hit is smallest id
        break;
      }
    }
    path.push_back(next);
    cur = next;
  }
  return path;
}

// Union-find over 0..n-1.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n = 0) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b); // smallest id becomes the root
    parent[b] = a;
    return true;
  }

  int component_count() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i) ++c;
    return c;
  }
};

// FNV-1a over raw bytes; used for input digests and hashing int sequences.
inline std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h = 1469598103934665603ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

} // namespace trifol
