#include "ffree/simplex.hpp"

#include <algorithm>
#include <limits>

#include "ffree/error.hpp"

namespace ffree {

LpSolution solve_packing_lp(const PackingLp& lp, double eps) {
  const std::size_t rows = lp.b.size();
  const std::size_t cols = lp.c.size();
  if (lp.a.size() != rows) throw Error(Errc::parameter, "LP: A and b disagree on row count");
  for (std::size_t i = 0; i < rows; ++i) {
    if (lp.a[i].size() != cols) throw Error(Errc::parameter, "LP: ragged constraint matrix");
    if (lp.b[i] < 0.0) throw Error(Errc::parameter, "LP: negative right-hand side");
  }

  // Columns: structural [0, cols), slacks [cols, cols + rows), rhs last.
  const std::size_t width = cols + rows + 1;
  const std::size_t rhs = width - 1;
  std::vector<std::vector<double>> t(rows + 1, std::vector<double>(width, 0.0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = lp.a[i][j];
    t[i][cols + i] = 1.0;
    t[i][rhs] = lp.b[i];
    basis[i] = cols + i;
  }
  auto& obj = t[rows];
  for (std::size_t j = 0; j < cols; ++j) obj[j] = -lp.c[j];

  LpSolution sol;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (obj[j] < -eps) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] > eps) best_ratio = std::min(best_ratio, t[i][rhs] / t[i][enter]);
    }
    std::size_t leave = rows;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= eps || t[i][rhs] / t[i][enter] > best_ratio + eps) continue;
      if (leave == rows || basis[i] < basis[leave]) leave = i;
    }
    if (leave == rows) {
      sol.unbounded = true;
      sol.objective = std::numeric_limits<double>::infinity();
      return sol;
    }

    const double pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      const double factor = t[i][enter];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
    ++sol.pivots;
  }

  sol.objective = obj[rhs];
  sol.primal.assign(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < cols) sol.primal[basis[i]] = t[i][rhs];
  }
  sol.dual.assign(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) sol.dual[i] = obj[cols + i];
  return sol;
}

}  // namespace ffree
