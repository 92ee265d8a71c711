#pragma once

#include <vector>

#include "mdopt/lattice.hpp"

namespace mdopt {

// Witnessed decision procedures for stochastic orders between nonnegative
// grid measures of equal total mass.

struct Coupling {
  struct Move {
    int from = 0;
    int to = 0;  // componentwise >= from
    double amount = 0.0;
  };
  std::vector<Move> moves;
};

// a >=_1 b (first order): every up-closed set carries at least as much
// a-mass as b-mass; equivalently b can be transported upward onto a.
struct FirstOrderResult {
  bool dominates = false;
  Coupling coupling;               // on success: b-to-a upward transport plan
  std::vector<int> failure_upset;  // on failure: up-closed node set U ...
  double deficit = 0.0;            // ... with a(U) - b(U) = deficit < 0
};

FirstOrderResult first_order_dominates(const GridMeasure& a,
                                       const GridMeasure& b,
                                       double tol = 1e-9);

// Exhaustive reference decision for 2-D grids: minimum of a(U) - b(U) over
// every up-closed U (C(rows+cols, rows) sets; keep grids small).
double min_upset_gap(const GridMeasure& a, const GridMeasure& b);

// Transformability order: does  b + axis moves + mean-preserving spreads = a
// have a nonnegative solution?  move_dirs[i] in {-1, 0, +1} selects the
// allowed move direction per axis.  On failure the result carries a
// separating function u with sum(u * (a - b)) < 0 that is midpoint-convex
// along spread directions and monotone along each allowed move direction
// (nondecreasing where move_dirs[i] = +1, nonincreasing where -1).
struct ConvexOrderResult {
  bool dominates = false;
  std::vector<GridOp> ops;  // op layout matching op_values
  Vec op_values;            // feasible op vector on success
  GridFunction witness;
  double separation = 0.0;  // sum(witness * (a - b)); < 0 on failure
};

ConvexOrderResult convex_dominates(const GridMeasure& a, const GridMeasure& b,
                                   const std::vector<int>& move_dirs,
                                   int spread_radius = 2);

// a >=_2 b (second order): b reachable from a by downward moves and spreads;
// equivalently every concave nondecreasing function integrates at least as
// high against a.  On failure witness w = -u is such a function with
// sum(w * b) > sum(w * a).
ConvexOrderResult second_order_dominates(const GridMeasure& a,
                                         const GridMeasure& b);

}  // namespace mdopt
