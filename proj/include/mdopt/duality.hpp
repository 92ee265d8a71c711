#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mdopt/lattice.hpp"
#include "mdopt/simplex.hpp"

namespace mdopt {

struct TransportLP {
  GridSpec grid;
  LPProblem lp;    // rows: every node except the low corner (row = node - 1)
  std::vector<GridOp> ops;  // one per LP column
  // Lookup tables: -1 where the op does not exist.
  std::vector<std::vector<int>> t_index;  // [node][axis]
  std::vector<std::vector<int>> g_index;  // [node][axis]
  std::vector<std::vector<int>> s_index;  // [node][spread dir id]
  std::vector<std::vector<int>> dirs;     // spread direction table
};

TransportLP build_transport_lp(const GridMeasure& mu, int spread_radius = 2);

// Dual certificate: node potentials u forming a discrete admissible utility,
// whose pairing with the node masses matches the primal cost.
struct DualCertificate {
  GridFunction u;
  double value = 0.0;          // sum of u * mass over all nodes
  ConeCheck cone;              // discrete-cone membership of u
  double worst_reduced = 0.0;  // most negative op reduced cost (>= -tol)
  double worst_slack = 0.0;    // largest |x_j * reduced_j| (complementarity)
  double primal_residual = 0.0;
  bool ok = false;
};

struct TransportSolution {
  LPStatus status = LPStatus::kIterLimit;
  double objective = 0.0;  // primal minimum cost = optimal expected revenue
  Vec op_values;           // one entry per TransportLP op (after hoisting)
  DualCertificate cert;
  int iterations = 0;
};

// Rewrites the operation vector so that every spread draws its mass from the
// original measure at its center rather than from transported mass: a spread
// fed through an arc commutes upstream at equal cost (spread at the source
// plus two parallel shifted arcs).  Cost and feasibility are preserved.
void hoist_spreads(const TransportLP& tlp, const GridMeasure& mu, Vec& x);

// Checks (a) cone membership of u, (b) value agreement with the primal
// objective, (c) nonnegative reduced costs and complementary slackness,
// (d) primal feasibility of x; fills the corresponding certificate fields.
DualCertificate verify_certificate(const TransportLP& tlp,
                                   const GridMeasure& mu, const Vec& x,
                                   const GridFunction& u, double tol = 1e-7);

// Solve the discretized problem and produce primal + certified dual.
TransportSolution solve_transport(const GridMeasure& mu, int spread_radius = 2,
                                  const SimplexOptions& options = {});

inline double duality_gap(const TransportSolution& s) {
  return s.objective - s.cert.value;
}

// A random admissible utility on the grid: pointwise maximum of a few
// affine pieces with slopes in [0,1]^n, clipped at zero and anchored so the
// low corner evaluates to zero.  Used to probe weak duality.
GridFunction random_cone_element(const GridSpec& grid, std::mt19937_64& rng,
                                 int pieces = 4);

// Pairing sum(u * mass) of a grid function with a grid measure.
double pair_with(const GridMeasure& mu, const GridFunction& u);

}  // namespace mdopt
