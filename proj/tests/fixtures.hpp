#pragma once

// Shared fixtures. The flipped pentachoron direction reverses {0,1} and
// {1,2}, which turns the tournament of every tetrahedron containing
// {0,1,2} into one with the directed triangle 1->0, 0->2, 2->1.

#include <stdexcept>
#include <vector>

#include "trifol/direction.hpp"
#include "trifol/fibration.hpp"
#include "trifol/product.hpp"
#include "trifol/simplex.hpp"
#include "trifol/surface.hpp"
#include "trifol/triangulation.hpp"

namespace fixtures {

inline const trifol::Triangulation& penta() {
  static const trifol::Triangulation tri = trifol::pentachoron();
  return tri;
}

inline const trifol::Direction& penta_order() {
  static const trifol::Direction d = trifol::Direction::global_order(penta());
  return d;
}

inline const trifol::Direction& penta_flipped() {
  static const trifol::Direction d =
      penta_order().flipped(penta(), 0, 1).flipped(penta(), 1, 2);
  return d;
}

inline const trifol::ProductBundle& s2_bundle() {
  static const trifol::ProductBundle b =
      trifol::generate_product(trifol::tetrahedron_boundary(), 3);
  return b;
}

inline const trifol::ProductBundle& t2_bundle() {
  static const trifol::ProductBundle b =
      trifol::generate_product(trifol::torus_seven(), 3);
  return b;
}

// w({i,j}) = j - i solves every face equation of the pentachoron.
inline std::vector<trifol::BigInt> penta_weights() {
  std::vector<trifol::BigInt> w;
  for (const auto& e : penta().edges()) w.push_back(e[1] - e[0]);
  return w;
}

inline std::vector<trifol::BigInt> solver_weights(const trifol::Triangulation& tri,
                                                  const trifol::Direction& d) {
  auto outcome = trifol::solve_positive_kernel(trifol::triangle_system(tri, d).rows);
  if (!outcome.feasible) throw std::logic_error("fixture weight system is infeasible");
  return outcome.weights;
}

} // namespace fixtures
