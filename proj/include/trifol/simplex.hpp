#pragma once

// Exact feasibility for systems {A x = 0, x >= 1}: either a positive integer
// solution or a rational row combination y with yT A componentwise >= 0 and
// not identically zero (which makes yT A x > 0 for every x >= 1, so no
// solution exists). Substituting x = 1 + s reduces the problem to standard
// phase-1 simplex over {A s = -A 1, s >= 0}, solved with Bland's rule in
// exact rational arithmetic; the certificate is read off the optimal dual of
// the artificial objective. Both branches are re-verified exactly before
// returning. Dependent rows are dropped up front (the certificate extends by
// zeros), which keeps tableaus small for face systems whose rank is far below
// their row count.

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "trifol/errors.hpp"
#include "trifol/rational.hpp"

namespace trifol {

struct FeasibilityOutcome {
  bool feasible = false;
  std::vector<BigInt> weights;       // feasible: integer, every entry >= 1, A w = 0
  std::vector<Rational> certificate; // infeasible: y with yT A >= 0 and != 0
};

namespace detail {

// Indices of a maximal independent subset of the rows, scanned in order.
inline std::vector<std::size_t> independent_rows(const std::vector<std::vector<BigInt>>& rows,
                                                 int cols) {
  std::vector<std::vector<Rational>> echelon; // reduced rows
  std::vector<int> pivot_col;
  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<Rational> v(rows[r].begin(), rows[r].end());
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      int p = pivot_col[k];
      if (v[p] != 0) {
        Rational f = v[p] / echelon[k][p];
        for (int j = 0; j < cols; ++j) v[j] -= f * echelon[k][j];
      }
    }
    int p = -1;
    for (int j = 0; j < cols; ++j)
      if (v[j] != 0) {
        p = j;
        break;
      }
    if (p == -1) continue;
    echelon.push_back(std::move(v));
    pivot_col.push_back(p);
    kept.push_back(r);
  }
  return kept;
}

} // namespace detail

inline FeasibilityOutcome solve_positive_kernel(const std::vector<std::vector<BigInt>>& a,
                                                int cols) {
  if (cols < 1) throw EmptyMatrix("system has no columns");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != cols)
      throw DomainError("ragged matrix row: expected " + std::to_string(cols) +
                        " entries, got " + std::to_string(row.size()));
  const int n = cols;

  auto verified = [&](FeasibilityOutcome out) {
    if (out.feasible) {
      for (const auto& w : out.weights)
        if (w < 1) throw std::logic_error("solver produced a non-positive weight");
      for (const auto& row : a) {
        BigInt dot = 0;
        for (int j = 0; j < n; ++j) dot += row[j] * out.weights[j];
        if (dot != 0) throw std::logic_error("solver solution does not lie in the kernel");
      }
    } else {
      bool some_positive = false;
      for (int j = 0; j < n; ++j) {
        Rational dot = 0;
        for (std::size_t i = 0; i < a.size(); ++i) dot += out.certificate[i] * a[i][j];
        if (dot < 0) throw std::logic_error("certificate has a negative component");
        if (dot > 0) some_positive = true;
      }
      if (!some_positive) throw std::logic_error("certificate is identically zero");
    }
    return out;
  };

  std::vector<std::size_t> kept = detail::independent_rows(a, n);
  const int m = static_cast<int>(kept.size());
  if (m == 0) {
    FeasibilityOutcome out;
    out.feasible = true;
    out.weights.assign(n, BigInt(1));
    return verified(std::move(out));
  }

  // substitute x = 1 + s: rows s = b with b = -A 1, then flip rows so b >= 0
  std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(n + m, Rational(0)));
  std::vector<Rational> rhs(m);
  std::vector<int> sign(m, 1);
  for (int i = 0; i < m; ++i) {
    const auto& row = a[kept[i]];
    BigInt b = 0;
    for (int j = 0; j < n; ++j) b -= row[j];
    if (b < 0) sign[i] = -1;
    for (int j = 0; j < n; ++j) tab[i][j] = Rational(sign[i] * row[j]);
    rhs[i] = Rational(sign[i] * b);
    tab[i][n + i] = 1; // artificial variable
  }

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // reduced costs for min(sum of artificials); objval tracks the current sum
  std::vector<Rational> rc(n + m, Rational(0));
  Rational objval = 0;
  for (int j = 0; j < n + m; ++j) {
    Rational z = 0;
    for (int i = 0; i < m; ++i) z += tab[i][j];
    rc[j] = (j >= n ? Rational(1) : Rational(0)) - z;
  }
  for (int i = 0; i < m; ++i) objval += rhs[i];

  auto pivot = [&](int r, int e) {
    Rational piv = tab[r][e];
    for (int j = 0; j < n + m; ++j) tab[r][j] /= piv;
    rhs[r] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == r || tab[i][e] == 0) continue;
      Rational f = tab[i][e];
      for (int j = 0; j < n + m; ++j) tab[i][j] -= f * tab[r][j];
      rhs[i] -= f * rhs[r];
    }
    Rational f = rc[e];
    if (f != 0) {
      for (int j = 0; j < n + m; ++j) rc[j] -= f * tab[r][j];
      objval += f * rhs[r];
    }
    basis[r] = e;
  };

  while (true) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (rc[j] < 0) {
        enter = j; // Bland: smallest eligible index
        break;
      }
    if (enter == -1) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational t = rhs[i] / tab[i][enter];
      if (leave == -1 || t < best || (t == best && basis[i] < basis[leave])) {
        leave = i;
        best = t;
      }
    }
    if (leave == -1)
      throw std::logic_error("phase-1 objective unbounded; cannot happen");
    pivot(leave, enter);
  }

  FeasibilityOutcome out;
  if (objval == 0) {
    out.feasible = true;
    std::vector<Rational> x(n, Rational(1)); // x = 1 + s
    for (int i = 0; i < m; ++i)
      if (basis[i] < n) x[basis[i]] += rhs[i];
    BigInt scale = 1;
    for (const auto& xi : x) scale = boost::multiprecision::lcm(scale, rat_den(xi));
    std::vector<BigInt> w(n);
    BigInt g = 0;
    for (int j = 0; j < n; ++j) {
      w[j] = rat_num(x[j] * scale); // integral by construction
      g = boost::multiprecision::gcd(g, w[j]);
    }
    for (auto& wj : w) wj /= g;
    out.weights = std::move(w);
  } else {
    // dual of the artificial objective: rc[n+i] = 1 - y_i
    out.certificate.assign(a.size(), Rational(0));
    for (int i = 0; i < m; ++i)
      out.certificate[kept[i]] = -Rational(sign[i]) * (Rational(1) - rc[n + i]);
  }
  return verified(std::move(out));
}

inline FeasibilityOutcome solve_positive_kernel(const std::vector<std::vector<BigInt>>& a) {
  if (a.empty()) throw EmptyMatrix("system has no rows");
  return solve_positive_kernel(a, static_cast<int>(a[0].size()));
}

} // namespace trifol
