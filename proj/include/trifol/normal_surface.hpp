#pragma once

// Normal surface vectors: seven coordinates per tetrahedron. With the tet's
// vertices sorted ascending as v0 v1 v2 v3, coordinate t_i counts triangles
// cutting off corner v_i, and quad q_j separates {v0, v_{j+1}} from the other
// two (q0: {v0,v1}|{v2,v3}, q1: {v0,v2}|{v1,v3}, q2: {v0,v3}|{v1,v2}).
// A vector is admissible here when every face's three corner arc counts agree
// across its two tetrahedra (quad compatibility per tet is not required for
// the counting done below, so it is not enforced).

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "trifol/digraph.hpp"
#include "trifol/errors.hpp"
#include "trifol/triangulation.hpp"

namespace trifol {

struct NormalVector {
  // per tet, aligned with Triangulation::tets(): [t0,t1,t2,t3,q0,q1,q2]
  std::vector<std::array<long long, 7>> coords;

  static NormalVector zero(const Triangulation& tri) {
    NormalVector v;
    v.coords.assign(tri.tet_count(), {0, 0, 0, 0, 0, 0, 0});
    return v;
  }

  NormalVector& operator+=(const NormalVector& other) {
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (int k = 0; k < 7; ++k) coords[i][k] += other.coords[i][k];
    return *this;
  }

  bool operator==(const NormalVector& other) const { return coords == other.coords; }
};

namespace detail {

// Index of the quad type that keeps x and y on the same side, or -1 when x,y
// are separated by every quad (impossible: exactly one type joins any pair).
inline int quad_joining(const std::array<int, 4>& tet, int x, int y) {
  auto pos = [&](int v) {
    for (int i = 0; i < 4; ++i)
      if (tet[i] == v) return i;
    return -1;
  };
  int px = pos(x), py = pos(y);
  if (px > py) std::swap(px, py);
  if (px == 0) return py - 1;        // {v0,v1}->q0, {v0,v2}->q1, {v0,v3}->q2
  if (px == 1) return py == 2 ? 2 : 1; // {v1,v2} joined by q2, {v1,v3} by q1
  return 0;                           // {v2,v3} joined by q0
}

inline int corner_pos(const std::array<int, 4>& tet, int v) {
  for (int i = 0; i < 4; ++i)
    if (tet[i] == v) return i;
  throw UnknownVertex("vertex " + std::to_string(v) + " not in tetrahedron");
}

// Number of normal arcs cutting off corner x inside face f of tet ti: the
// corner triangles at x plus the quads pairing x with the vertex opposite f.
inline long long arcs_at(const Triangulation& tri, const NormalVector& nv, int ti,
                         const std::array<int, 3>& f, int x) {
  const auto& tet = tri.tets()[ti];
  int opposite = -1;
  for (int v : tet)
    if (v != f[0] && v != f[1] && v != f[2]) opposite = v;
  const auto& c = nv.coords[ti];
  return c[corner_pos(tet, x)] + c[4 + quad_joining(tet, x, opposite)];
}

} // namespace detail

struct NormalValidation {
  bool valid = true;
  int face = -1;   // first violated matching equation
  int corner = -1; // corner vertex of that face
  std::string message;
};

inline NormalValidation validate_normal_vector(const Triangulation& tri,
                                               const NormalVector& nv) {
  NormalValidation res;
  if (static_cast<int>(nv.coords.size()) != tri.tet_count()) {
    res = {false, -1, -1,
           "expected " + std::to_string(tri.tet_count()) + " coordinate blocks, got " +
               std::to_string(nv.coords.size())};
    return res;
  }
  for (const auto& block : nv.coords)
    for (long long c : block)
      if (c < 0) {
        res = {false, -1, -1, "negative coordinate"};
        return res;
      }
  for (int fi = 0; fi < tri.face_count(); ++fi) {
    const auto& f = tri.faces()[fi];
    auto [t1, t2] = tri.tets_of_face(fi);
    for (int x : f) {
      long long a1 = detail::arcs_at(tri, nv, t1, f, x);
      long long a2 = detail::arcs_at(tri, nv, t2, f, x);
      if (a1 != a2) {
        res = {false, fi, x,
               "face " + detail::id_list({f[0], f[1], f[2]}) + " corner " + std::to_string(x) +
                   ": " + std::to_string(a1) + " arcs vs " + std::to_string(a2)};
        return res;
      }
    }
  }
  return res;
}

struct SurfaceStats {
  long long pieces = 0;      // F of the cut-out surface
  long long arcs = 0;        // E: matched normal arcs across faces
  long long crossings = 0;   // V: intersections with edge classes
  long long euler = 0;       // crossings - arcs + pieces
  int components = 0;
};

inline SurfaceStats surface_stats(const Triangulation& tri, const NormalVector& nv) {
  NormalValidation ok = validate_normal_vector(tri, nv);
  if (!ok.valid) throw InvalidVector(ok.message);

  SurfaceStats st;

  // V: each edge class is crossed by the corner triangles at its endpoints and
  // by the two quad types separating them, counted in one incident tet
  for (int ei = 0; ei < tri.edge_count(); ++ei) {
    const auto& e = tri.edges()[ei];
    int ti = tri.tets_of_edge(ei)[0];
    const auto& tet = tri.tets()[ti];
    const auto& c = nv.coords[ti];
    long long n = c[detail::corner_pos(tet, e[0])] + c[detail::corner_pos(tet, e[1])];
    int join = detail::quad_joining(tet, e[0], e[1]);
    for (int q = 0; q < 3; ++q)
      if (q != join) n += c[4 + q];
    st.crossings += n;
  }

  // E: three corner arc families per face
  for (int fi = 0; fi < tri.face_count(); ++fi) {
    const auto& f = tri.faces()[fi];
    int t1 = tri.tets_of_face(fi)[0];
    for (int x : f) st.arcs += detail::arcs_at(tri, nv, t1, f, x);
  }

  // F: pieces, with a union-find over them for the component count. Piece
  // numbering per tet: 4 corner-triangle families then 3 quad families, copies
  // within a family numbered 0.. in nesting order (corner triangles closest to
  // their corner first, quads after all triangles on both sides of a face).
  std::vector<long long> base(tri.tet_count() + 1, 0);
  for (int ti = 0; ti < tri.tet_count(); ++ti) {
    long long total = 0;
    for (long long c : nv.coords[ti]) total += c;
    base[ti + 1] = base[ti] + total;
  }
  st.pieces = base[tri.tet_count()];
  if (st.pieces > 2'000'000)
    throw InvalidVector("surface too large to enumerate pieces: " +
                        std::to_string(st.pieces));

  auto piece = [&](int ti, int slot, long long copy) {
    long long off = 0;
    const auto& c = nv.coords[ti];
    for (int s = 0; s < slot; ++s) off += c[s];
    return base[ti] + off + copy;
  };

  UnionFind uf(static_cast<int>(st.pieces));
  for (int fi = 0; fi < tri.face_count(); ++fi) {
    const auto& f = tri.faces()[fi];
    auto [t1, t2] = tri.tets_of_face(fi);
    for (int x : f) {
      // arcs at corner x of this face, ordered from the corner outward:
      // first the corner triangles, then the quads
      long long count = detail::arcs_at(tri, nv, t1, f, x);
      for (long long k = 0; k < count; ++k) {
        auto side_piece = [&](int ti) {
          const auto& tet = tri.tets()[ti];
          const auto& c = nv.coords[ti];
          int cp = detail::corner_pos(tet, x);
          int opposite = -1;
          for (int v : tet)
            if (v != f[0] && v != f[1] && v != f[2]) opposite = v;
          long long tri_count = c[cp];
          if (k < tri_count) return piece(ti, cp, k);
          // parallel quad copies are numbered from the side of the pair
          // containing the tet's smallest vertex, so the k-th arc out of
          // corner x is copy k when x's pair holds that vertex, else the
          // numbering runs the other way
          int type = detail::quad_joining(tet, x, opposite);
          long long copies = c[4 + type];
          long long k2 = k - tri_count;
          bool forward = (tet[0] == x || tet[0] == opposite);
          return piece(ti, 4 + type, forward ? k2 : copies - 1 - k2);
        };
        uf.unite(static_cast<int>(side_piece(t1)), static_cast<int>(side_piece(t2)));
      }
    }
  }
  st.components = uf.component_count();
  st.euler = st.crossings - st.arcs + st.pieces;
  return st;
}

// The boundary of a small neighborhood of a vertex: one triangle at the
// matching corner of every incident tetrahedron.
inline NormalVector vertex_link_vector(const Triangulation& tri, int v) {
  NormalVector nv = NormalVector::zero(tri);
  for (int ti : tri.tets_of_vertex(v))
    nv.coords[ti][detail::corner_pos(tri.tets()[ti], v)] += 1;
  return nv;
}

// Text format: one `tet-index t0 t1 t2 t3 q0 q1 q2` line per tetrahedron.
inline NormalVector parse_normal_vector(const Triangulation& tri, const std::string& text) {
  NormalVector nv = NormalVector::zero(tri);
  std::vector<char> seen(tri.tet_count(), 0);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long ti;
    if (!(ls >> ti)) continue;
    if (ti < 0 || ti >= tri.tet_count())
      throw SyntaxError("line " + std::to_string(lineno) + ": tetrahedron index " +
                        std::to_string(ti) + " out of range");
    std::array<long long, 7> block;
    for (long long& c : block)
      if (!(ls >> c))
        throw SyntaxError("line " + std::to_string(lineno) + ": expected seven coordinates");
    std::string extra;
    if (ls >> extra)
      throw SyntaxError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
    if (seen[static_cast<int>(ti)])
      throw SyntaxError("line " + std::to_string(lineno) + ": duplicate tetrahedron index " +
                        std::to_string(ti));
    seen[static_cast<int>(ti)] = 1;
    nv.coords[static_cast<int>(ti)] = block;
  }
  return nv;
}

inline std::string render_normal_vector(const NormalVector& nv) {
  std::string out;
  for (std::size_t ti = 0; ti < nv.coords.size(); ++ti) {
    out += std::to_string(ti);
    for (long long c : nv.coords[ti]) out += " " + std::to_string(c);
    out += "\n";
  }
  return out;
}

} // namespace trifol
