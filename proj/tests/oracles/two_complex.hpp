#pragma once

// Directed 2-complex fixtures with at most 6 edges. A fixture is a digraph
// (parallel edges allowed) plus 2-cells given as signed edge words: entry
// +k traverses edge k-1 forward, -k backward. cell_matrix turns the cells
// into signed edge-incidence rows; the positive-weight solvability of that
// system must match the geometric criterion that every simple directed
// cycle has its homology class (modulo the cell boundaries) inside one
// open half-space.

#include <array>
#include <cstdlib>
#include <string>
#include <vector>

#include "trifol/rational.hpp"

namespace oracles {

struct TwoComplex {
  std::string name;
  int vertices = 0;
  std::vector<std::array<int, 2>> edges; // tail, head
  std::vector<std::vector<int>> cells;   // signed 1-based edge references
};

inline std::vector<std::vector<trifol::BigInt>> cell_matrix(const TwoComplex& c) {
  std::vector<std::vector<trifol::BigInt>> rows;
  for (const auto& cell : c.cells) {
    std::vector<trifol::BigInt> row(c.edges.size(), trifol::BigInt(0));
    for (int ref : cell) row[std::abs(ref) - 1] += ref > 0 ? 1 : -1;
    rows.push_back(std::move(row));
  }
  return rows;
}

inline const std::vector<TwoComplex>& two_complex_fixtures() {
  static const std::vector<TwoComplex> fixtures = {
      {"directed-triangle-disk", 3, {{{0, 1}, {1, 2}, {2, 0}}}, {{1, 2, 3}}},
      {"transitive-triangle-disk", 3, {{{0, 1}, {1, 2}, {0, 2}}}, {{1, 2, -3}}},
      {"directed-triangle-free", 3, {{{0, 1}, {1, 2}, {2, 0}}}, {}},
      {"reversed-triangle-disk", 3, {{{0, 1}, {1, 2}, {2, 0}}}, {{-3, -2, -1}}},
      {"square-disk-no-cycle", 4, {{{0, 1}, {1, 2}, {0, 3}, {3, 2}}}, {{1, 2, -4, -3}}},
      {"square-disk-back-edge", 4, {{{0, 1}, {1, 2}, {0, 3}, {3, 2}, {2, 0}}}, {{1, 2, -4, -3}}},
      {"square-cycle-disk", 4, {{{0, 1}, {1, 2}, {2, 3}, {3, 0}}}, {{1, 2, 3, 4}}},
      {"figure-eight-free", 2, {{{0, 1}, {1, 0}, {0, 1}, {1, 0}}}, {}},
      {"digon-commutator-cell", 2, {{{0, 1}, {1, 0}, {0, 1}, {1, 0}}}, {{1, 2, -4, -3}}},
      {"digon-sum-cell", 2, {{{0, 1}, {1, 0}, {0, 1}, {1, 0}}}, {{1, 2, 3, 4}}},
      {"digon-doubled-cell", 2, {{{0, 1}, {1, 0}}}, {{1, 2, 1, 2}}},
      {"pinched-cycles-free", 4, {{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 0}}}, {}},
      {"two-triangles-shared-edge",
       4,
       {{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 2}}},
       {{1, 2, 3}, {4, 5, 3}}},
      {"chord-relation-cell", 3, {{{0, 1}, {1, 2}, {2, 0}, {0, 2}}}, {{1, 2, -4}}},
      {"tetrahedron-order-system",
       4,
       {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
       {{1, 4, -2}, {1, 5, -3}, {2, 6, -3}, {4, 6, -5}}},
  };
  return fixtures;
}

} // namespace oracles
