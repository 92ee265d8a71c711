#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mdopt/dominance.hpp"
#include "mdopt/interp.hpp"
#include "mdopt/measure.hpp"
#include "mdopt/simplex.hpp"

namespace mdopt {

// ---------------------------------------------------------------- menus

// A lottery over goods at a posted price; alloc[i] in [0,1] is the
// probability of receiving good i.
struct MenuItem {
  Vec alloc;
  double price = 0.0;
};

// A finite price menu; the buyer picks the utility-maximizing item or opts
// out (utility 0).
struct Menu {
  std::vector<MenuItem> items;
};

double menu_utility(const Menu& menu, const Vec& x);
// Index of the chosen item at x, -1 for the outside option.
int menu_winner(const Menu& menu, const Vec& x);
// Winning regions: entry 0 is the no-purchase region, entry k+1 item k's.
std::vector<Region> menu_regions(const Menu& menu, const Box& box);
// Expected payment under the buyer density.
double menu_revenue(const Menu& menu, const ProductDensity& density,
                    double tol = 1e-9);
// Drops items chosen with probability below prob_tol and exact duplicates.
Menu essential_form(const Menu& menu, const ProductDensity& density,
                    double prob_tol = 1e-8);

// ------------------------------------------- menu optimality certification

struct MenuOptimalityOptions {
  double target_h = 0.05;    // sub-grid step for per-region re-quadrature
  int spread_radius = 2;
  double quad_tol = 1e-9;
  double feas_scale = 1e-6;  // feasibility slack, relative to region mass
  int bbox_samples = 241;    // per-axis samples when bounding a region
  int max_nodes_per_axis = 81;
  int max_total_nodes = 1700;  // cap on sub-grid size (LP row count)
};

// One winning region's transformability check: the region's negative part
// must be reachable from its positive part using spreads plus moves that are
// free for the buyer (upward where the item allocates nothing, downward
// where it allocates fully).
struct RegionCheckResult {
  std::string label;
  int item = -1;             // -1 = no-purchase region
  std::vector<int> dirs;     // move direction per axis
  bool skipped = false;      // region carries no mass
  bool dominated = false;
  double pos_mass = 0.0, neg_mass = 0.0, imbalance = 0.0;
  GridSpec grid;
  GridMeasure neg, pos;  // discretized region parts (pos rebalanced)
  ConvexOrderResult detail;
};

struct MenuOptimalityReport {
  bool ok = false;
  std::vector<RegionCheckResult> regions;
};

MenuOptimalityReport check_optimal_menu(const SignedMeasure& mu,
                                        const Menu& menu,
                                        const MenuOptimalityOptions& options);

// Single-item menu selling the full bundle at `price`.
MenuOptimalityReport check_grand_bundling(const SignedMeasure& mu,
                                          double price,
                                          const MenuOptimalityOptions& options);

// ------------------------------------------------- regions of sum type

// {x : sum x_i <= p} and {x : sum x_i >= p} inside a box of dimension n.
Region below_sum(int n, double p);
Region above_sum(int n, double p);

// Bundle price balancing the measure of the no-purchase simplex:
// root of p -> mu({sum x <= p}) scanned over (p_lo, p_hi).
double bundle_price_by_mass(const SignedMeasure& mu, double p_lo, double p_hi,
                            double quad_tol = 1e-9);

// ------------------------------------------------- 2-D exclusion geometry

// Boundary ordinate of the exclusion set along the line {x_axis = t}: the
// largest coordinate b on the other axis such that the measure of the part
// of the line above b (surface part included) vanishes.  Returns the box
// floor when the whole line's upper mass stays positive.
double exclusion_boundary(const SignedMeasure& mu, int axis, double t,
                          double quad_tol = 1e-10);

// Four-region decomposition of a 2-D box induced by an exclusion set with
// upper boundary y = sigma(x), right boundary x = tau(y), and bundle price
// P: Z (no purchase), A (left strip: allocation (-sigma'(x), 1)), B (bottom
// strip: allocation (1, -tau'(y))), W (bundle at price P).
struct Partition2D {
  Box box;
  double price = 0.0;
  double x_crit = 0.0, y_crit = 0.0;
  std::function<double(double)> sigma;        // y = sigma(x), nonincreasing
  std::function<double(double)> tau;          // x = tau(y), nonincreasing
  std::function<double(double)> sigma_deriv;  // optional; numeric if empty
  std::function<double(double)> tau_deriv;
  bool has_A = false, has_B = false;
  Region Z, A, B, W;
};

Partition2D make_partition(const Box& box, std::function<double(double)> sigma,
                           std::function<double(double)> tau, double price,
                           double x_crit, double y_crit);

// Numeric pipeline: sample the exclusion boundary along both axes, find the
// bundle price balancing the exclusion set's measure, locate the critical
// abscissas, and assemble the partition.
Partition2D canonical_partition(const SignedMeasure& mu, int samples = 161);

double partition_utility(const Partition2D& p, const Vec& x);
Vec partition_allocation(const Partition2D& p, const Vec& x);
double partition_payment(const Partition2D& p, const Vec& x);

// Finite menu approximating the partition mechanism: tangent items sampled
// along the A and B strips plus the bundle item.
Menu partition_menu(const Partition2D& p, int per_branch = 32);

// Structural audit of a partition: region cover/disjointness on a lattice,
// utility continuity against the tangent-menu form, allocation bounds,
// boundary value agreement, and incentive spot checks on seeded pairs.
struct WellFormedReport {
  bool ok = false;
  double worst_cover = 0.0;       // lattice points contained in no region
  double worst_overlap = 0.0;     // deep containment in two regions
  double worst_continuity = 0.0;  // |casework - tangent menu| utility gap
  double worst_alloc = 0.0;       // allocation outside [0,1]
  double worst_ic = 0.0;          // incentive violation across sampled pairs
  double base_utility = 0.0;      // |u| at the low corner
};

WellFormedReport check_well_formed(const Partition2D& p, int lattice = 41,
                                   std::uint64_t seed = 0);

// Region-by-region transformability for the partition's four regions.
MenuOptimalityReport check_partition(const SignedMeasure& mu,
                                     const Partition2D& p,
                                     const MenuOptimalityOptions& options);

// Closed-form partition for independent exponential marginals with rates
// (l1, l2), l1 >= l2: exclusion set bounded by the lines sum = P and
// l1 x + l2 y = 2; bottom strip sells (1, l2/l1) at price 2/l1.  The bundle
// price is found numerically from the measure's mass balance.
Partition2D exponential_partition(const SignedMeasure& mu, double l1,
                                  double l2);

// Closed-form menu of an exponential-rates partition: the strip tangent item
// ((1, l2/l1), 2/l1) plus the grand bundle at the partition price.  The strip
// item is listed for every l1 >= l2; when the bundle price does not exceed
// 2/l1 the strip region is empty and the item is never chosen, but keeping it
// leaves the mechanism unchanged.
Menu exponential_menu(const Partition2D& p, double l1, double l2);

// ------------------------------------------------- weighted-cube family

// Threshold z* below which the ordered top facet maps into the bottom one.
double hypercube_zstar(int n, double rho);

// Volume-scaling map from the ordered part of a top facet
// {x_0 = 1 >= x_1 >= ... >= x_{n-1}, x_{n-1} <= z*} onto the bottom facet
// {y_{n-1} = 0}; componentwise dominated by the input and with Jacobian
// determinant of magnitude rho.
Vec hypercube_phi(int n, double rho, const Vec& x);

// Negative mass of the unit simplex {sum x <= 1} for HypercubeMeasure(n, c):
// closed form (n+1)/n! + n c/(n-1)!.  When the value is below the atom mass
// 1, no exclusion set can balance the atom, so no bundle price is optimal.
struct NotBundlingBound {
  double value = 0.0;
  bool certifies = false;
};

NotBundlingBound notbundling_bound(int n, double c, double quad_tol = 1e-7);

}  // namespace mdopt
