#pragma once

#include <vector>

#include "mdopt/core.hpp"

namespace mdopt {

// One column of a sparse constraint matrix.
struct LPColumn {
  std::vector<int> row;
  std::vector<double> val;
  void add(int r, double v) {
    row.push_back(r);
    val.push_back(v);
  }
};

// min cost . x  subject to  A x = rhs,  x >= 0.
// When cost2 is non-empty the solver, among the minimizers of cost, returns
// a vertex minimizing cost2 (lexicographic objective); y2 then carries the
// duals of the secondary pricing pass.
struct LPProblem {
  int nrows = 0;
  std::vector<LPColumn> cols;
  Vec cost;
  Vec cost2;  // optional secondary objective (same length as cost, or empty)
  Vec rhs;
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded, kIterLimit };

struct LPResult {
  LPStatus status = LPStatus::kIterLimit;
  double objective = 0.0;
  Vec x;       // primal solution over structural columns
  Vec y;       // row duals priced with cost (final basis)
  Vec y2;      // row duals priced with cost2 (empty unless cost2 given)
  Vec farkas;  // on infeasibility: farkas.rhs > 0 and farkas.A_j <= 0 for all j
  std::vector<int> basis;  // structural column index per row, -1 = artificial
  int iterations = 0;
};

struct SimplexOptions {
  int max_iterations = 400000;
  double feas_tol = 1e-8;    // phase-1 objective threshold for feasibility
  double cost_tol = 1e-9;    // reduced-cost optimality threshold
  double pivot_tol = 1e-9;   // smallest acceptable pivot magnitude
  int refactor_every = 900;  // basis-inverse rebuild cadence
  int stall_limit = 64;      // degenerate pivots before Bland's rule engages
  // Budget for the lexicographic pass (< 0: unlimited).  Stopping that pass
  // early keeps primal optimality and the primary duals valid; only the
  // tie-breaking among equally cheap vertices is left unfinished.
  int max_phase3_iterations = -1;
};

// Deterministic two-phase revised simplex with an explicitly maintained dense
// basis inverse.  Designed for the transport-style problems in this project:
// thousands of rows, tens of thousands of short columns.
LPResult solve_lp(const LPProblem& problem, const SimplexOptions& options = {});

}  // namespace mdopt
