#pragma once

#include <vector>

#include "mdopt/core.hpp"
#include "mdopt/measure.hpp"
#include "mdopt/region.hpp"

namespace mdopt {

// Regular node grid over a box; node (i_0,...,i_{n-1}) sits at
// lo + i * step with step_k = (hi_k - lo_k) / (shape_k - 1).
struct GridSpec {
  Box box;
  std::vector<int> shape;  // nodes per axis, each >= 2

  int dim() const { return static_cast<int>(shape.size()); }
  int size() const {
    int s = 1;
    for (int k : shape) s *= k;
    return s;
  }
  double step(int axis) const {
    return (box.hi[axis] - box.lo[axis]) / (shape[axis] - 1);
  }
  std::vector<int> multi(int flat) const {
    std::vector<int> idx(dim());
    for (int a = dim() - 1; a >= 0; --a) {
      idx[a] = flat % shape[a];
      flat /= shape[a];
    }
    return idx;
  }
  int flat(const std::vector<int>& idx) const {
    int f = 0;
    for (int a = 0; a < dim(); ++a) f = f * shape[a] + idx[a];
    return f;
  }
  Vec node(int flat) const {
    const auto idx = multi(flat);
    Vec x(dim());
    for (int a = 0; a < dim(); ++a) {
      x[a] = (idx[a] == shape[a] - 1) ? box.hi[a]
                                      : box.lo[a] + idx[a] * step(a);
    }
    return x;
  }
  // Flat index of the neighbor one step along `axis` (dir = ±1); -1 if that
  // leaves the grid.
  int neighbor(int flat, int axis, int dir) const;

  static GridSpec regular(const Box& box, const std::vector<int>& shape) {
    return GridSpec{box, shape};
  }
  static GridSpec regular(const Box& box, int nodes_per_axis) {
    return GridSpec{box, std::vector<int>(box.dim(), nodes_per_axis)};
  }
};

// Signed node masses on a grid.
struct GridMeasure {
  GridSpec grid;
  Vec mass;

  double total() const;
  double positive_total() const;
  double negative_total() const;
};

using GridFunction = Vec;  // one value per grid node

// Node-cell discretization of a transformed measure: each node receives the
// mass of its half-step cell (interior part, facet part for boundary nodes,
// and the low-corner atom).  `clamp` selects the signed measure (0), its
// positive part (+1) or the magnitude of its negative part (-1); the result
// can additionally be restricted to a region before clamping.
GridMeasure discretize_measure(const SignedMeasure& mu, const GridSpec& grid,
                               double tol = 1e-9);
GridMeasure discretize_measure(const SignedMeasure& mu, const GridSpec& grid,
                               const Region& restrict_to, int clamp,
                               double tol = 1e-9);

// Centroid-preserving discretization: each cell's mass is split multilinearly
// over the surrounding nodes so that the cell's first moments are reproduced
// exactly.  Affine functions then integrate identically against the grid
// measure and the continuous one, which matters for dominance checks whose
// continuous statement is tight in an affine direction.
GridMeasure discretize_measure_moments(const SignedMeasure& mu,
                                       const GridSpec& grid,
                                       const Region& restrict_to, int clamp,
                                       double tol = 1e-9);

// Integer offset directions d (||d||_inf <= radius, d != 0) kept to one
// representative per antipodal pair {d, -d}: first nonzero entry positive.
std::vector<std::vector<int>> spread_directions(int dim, int radius);

// Mass-rearrangement operations on a grid.  A transport arc moves mass one
// step down an axis (costed by the step in the main problem); an up-move
// releases mass one step up an axis for free; a spread takes two units at a
// center and places one each at center ± direction (mean-preserving).
struct GridOp {
  enum Kind { kTransport, kUpMove, kSpread } kind = kTransport;
  int node = 0;             // source node (arcs) or center (spreads)
  int axis = 0;             // arc axis
  std::vector<int> dir;     // spread direction in grid offsets
  int to = 0;               // arc destination node
  int plus = 0, minus = 0;  // spread receiver nodes (center ± dir)
};

// Applies x[j] units of each op to the node masses in place.
void apply_grid_ops(const std::vector<GridOp>& ops, const Vec& x, Vec& mass);

// Discrete counterpart of the admissible-utility cone on a grid: value zero
// at the low corner, nondecreasing along axes, per-axis increments at most
// one grid step, and midpoint convexity along every spread direction.
struct ConeCheck {
  bool ok = false;
  double base_value = 0.0;      // |u| at the low corner
  double worst_monotone = 0.0;  // largest decrease along an up-step
  double worst_lipschitz = 0.0; // largest increment excess over the step
  double worst_convex = 0.0;    // largest midpoint-convexity violation
};

ConeCheck check_cone(const GridSpec& grid, const GridFunction& u,
                     int spread_radius, double tol);

inline bool is_in_cone(const GridSpec& grid, const GridFunction& u,
                       int spread_radius, double tol) {
  return check_cone(grid, u, spread_radius, tol).ok;
}

}  // namespace mdopt
