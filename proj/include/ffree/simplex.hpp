#pragma once

// Dense tableau simplex for packing LPs:
//
//   maximize c^T y  subject to  A y <= b,  y >= 0,  with b >= 0,
//
// so the origin is feasible and no phase one is needed. Pivoting follows
// Bland's rule (lowest eligible index enters, lowest basic index breaks ratio
// ties), which cannot cycle. The optimal dual x >= 0 (A^T x >= c, minimizing
// b^T x) is read from the objective row under the slack columns.

#include <vector>

namespace ffree {

struct PackingLp {
  std::vector<std::vector<double>> a;  // rows x cols
  std::vector<double> b;               // one per row, >= 0
  std::vector<double> c;               // one per column
};

struct LpSolution {
  double objective = 0.0;
  std::vector<double> primal;  // y, one per column
  std::vector<double> dual;    // x, one per row
  unsigned pivots = 0;
  bool unbounded = false;
};

/// Throws Errc::parameter on shape mismatch or a negative right-hand side.
LpSolution solve_packing_lp(const PackingLp& lp, double eps = 1e-9);

}  // namespace ffree
