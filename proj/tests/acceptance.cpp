// End-to-end acceptance suite: each numbered criterion exercises one worked
// scenario of the toolkit (menu certification, partition extraction, duality
// audits, order deciders) against independently derived values.  The run
// prints progress as it goes and finishes with one PASS/FAIL line per
// criterion; the exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mdopt/distributions.hpp"
#include "mdopt/dominance.hpp"
#include "mdopt/duality.hpp"
#include "mdopt/lattice.hpp"
#include "mdopt/measure.hpp"
#include "mdopt/mechanisms.hpp"

namespace {

using namespace mdopt;

// ------------------------------------------------------------ bookkeeping

struct Criterion {
  int id = 0;
  std::string title;
  double seconds = 0.0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& what) { notes.push_back(what); }
  bool ok() const { return failures.empty(); }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

// Every transport solve performed during the run lands here; criterion 9
// audits the whole collection.
struct SolvedCase {
  std::string name;
  GridMeasure gm;
  TransportSolution sol;
};

std::vector<SolvedCase>& solved_cases() {
  static std::vector<SolvedCase> cases;
  return cases;
}

// `full_lex = false` skips the spread-canonicalizing tie-break pass; use it
// for solves whose recorded checks look only at objective and certificate.
TransportSolution solve_and_record(const std::string& name,
                                   const GridMeasure& gm,
                                   bool full_lex = true) {
  SimplexOptions so;
  if (!full_lex) so.max_phase3_iterations = 0;
  TransportSolution sol = solve_transport(gm, 2, so);
  solved_cases().push_back({name, gm, sol});
  return sol;
}

// --------------------------------------------- criterion 1: uniform square

Criterion mv_uniform() {
  Criterion c{1, "uniform unit square: three-item menu certified, solver "
                 "matches quadrature"};
  const ProductDensity density({MarginalDensity::uniform(0.0, 1.0),
                                MarginalDensity::uniform(0.0, 1.0)});
  const TransformedMeasure mu(density);

  Menu menu;
  menu.items.push_back({{1.0, 0.0}, 2.0 / 3.0});
  menu.items.push_back({{0.0, 1.0}, 2.0 / 3.0});
  menu.items.push_back({{1.0, 1.0}, (4.0 - std::sqrt(2.0)) / 3.0});

  MenuOptimalityOptions opt;
  opt.target_h = 0.025;
  const MenuOptimalityReport rep = check_optimal_menu(mu, menu, opt);
  c.require(rep.regions.size() == 4, "expected four winning regions");
  for (const auto& r : rep.regions) {
    c.require(!r.skipped, "region " + r.label + " unexpectedly empty");
    c.require(r.dominated, "region " + r.label + " not transformable");
  }

  const double revenue = menu_revenue(menu, density, 1e-9);
  const double closed = (12.0 + 2.0 * std::sqrt(2.0)) / 27.0;
  c.require(std::abs(revenue - closed) <= 1e-8,
            "menu revenue quadrature " + fmt(revenue) + " vs closed form " +
                fmt(closed));

  const GridMeasure gm =
      discretize_measure(mu, GridSpec::regular(mu.box(), 41));
  const TransportSolution sol =
      solve_and_record("uniform-square-41x41", gm, /*full_lex=*/false);
  c.require(sol.status == LPStatus::kOptimal, "41x41 solve not optimal");
  c.require(std::abs(sol.objective - revenue) <= 0.02 * revenue,
            "41x41 primal " + fmt(sol.objective) + " vs menu revenue " +
                fmt(revenue));
  c.note("menu revenue " + fmt(revenue) + ", 41x41 primal " +
         fmt(sol.objective));
  return c;
}

// ------------------------------------------ criterion 2: uniform rectangle

Criterion rect_uniform() {
  Criterion c{2, "uniform [4,16]x[4,7]: two-item menu certified, regions "
                 "balance, top-edge shuffle"};
  const ProductDensity density({MarginalDensity::uniform(4.0, 16.0),
                                MarginalDensity::uniform(4.0, 7.0)});
  const TransformedMeasure mu(density);

  Menu menu;
  menu.items.push_back({{0.5, 1.0}, 8.0});
  menu.items.push_back({{1.0, 1.0}, 12.0});

  MenuOptimalityOptions opt;
  opt.target_h = 0.25;
  const MenuOptimalityReport rep = check_optimal_menu(mu, menu, opt);
  c.require(rep.ok, "menu check failed");
  for (const auto& r : rep.regions)
    c.require(!r.skipped, "region " + r.label + " unexpectedly empty");

  const auto regions = menu_regions(menu, mu.box());
  const char* names[3] = {"no-purchase", "half-lottery", "bundle"};
  for (int k = 0; k < 3; ++k) {
    const double m = mu.mass(regions[k], 1e-9);
    c.require(std::abs(m) <= 1e-6,
              std::string(names[k]) + " region mass " + fmt(m));
  }

  const GridMeasure gm =
      discretize_measure(mu, GridSpec::regular(mu.box(), {25, 7}));
  const TransportSolution sol = solve_and_record("rect-uniform-25x7", gm);
  c.require(sol.status == LPStatus::kOptimal, "25x7 solve not optimal");
  c.note("25x7 primal " + fmt(sol.objective) + " (exact menu revenue " +
         fmt(352.0 / 36.0) + ")");

  // The mean-preserving shuffle extracted from the hoisted solution must live
  // on the top edge of the half-lottery region (y = 7, 4 <= x <= 8) and pile
  // a positive amount onto the corner node (4, 7).
  const TransportLP tlp = build_transport_lp(gm, 2);
  const double h = gm.grid.step(0);
  const int corner = gm.grid.flat({0, 6});
  double spread_total = 0.0, corner_in = 0.0;
  bool on_edge = true;
  for (std::size_t j = 0; j < tlp.ops.size(); ++j) {
    if (tlp.ops[j].kind != GridOp::kSpread || sol.op_values[j] <= 1e-8)
      continue;
    spread_total += sol.op_values[j];
    for (int node : {tlp.ops[j].node, tlp.ops[j].plus, tlp.ops[j].minus}) {
      const Vec p = gm.grid.node(node);
      if (std::abs(p[1] - 7.0) > 1e-9 || p[0] < 4.0 - 1e-9 ||
          p[0] > 8.0 + 0.5 * h + 1e-9)
        on_edge = false;
    }
    if (tlp.ops[j].plus == corner || tlp.ops[j].minus == corner)
      corner_in += sol.op_values[j];
  }
  c.require(spread_total > 1e-6, "no active shuffle mass");
  c.require(on_edge,
            "shuffle support leaves the half-lottery region's top edge");
  c.require(corner_in > 1e-6, "no shuffle mass lands on the (4,7) corner");
  c.note("shuffle mass " + fmt(spread_total) + ", amount onto (4,7) " +
         fmt(corner_in));
  return c;
}

// ------------------------------------------- criterion 3: Beta(1,2) square

Criterion beta_partition() {
  Criterion c{3, "Beta(1,2) pair: exclusion boundary, critical price/point, "
                 "W-region first order"};
  const ProductDensity density({MarginalDensity::beta(1.0, 2.0),
                                MarginalDensity::beta(1.0, 2.0)});
  const TransformedMeasure mu(density);

  double worst = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double t = 0.03 * i;
    const double want = (2.0 - 3.0 * t) / (4.0 - 5.0 * t);
    worst = std::max(worst,
                     std::abs(exclusion_boundary(mu, 0, t, 1e-10) - want));
  }
  c.require(worst <= 1e-6,
            "exclusion boundary off the closed form by " + fmt(worst));
  c.note("exclusion boundary max error " + fmt(worst));

  const Partition2D part = canonical_partition(mu, 161);
  c.require(std::abs(part.price - 0.5534938015684243) <= 1e-3,
            "bundle price " + fmt(part.price));
  c.require(std::abs(part.x_crit - 0.06187679106312479) <= 1e-3,
            "critical abscissa " + fmt(part.x_crit));
  c.require(std::abs(part.y_crit - 0.06187679106312479) <= 1e-3,
            "critical ordinate " + fmt(part.y_crit));
  c.note("price " + fmt(part.price) + ", critical point (" +
         fmt(part.x_crit) + ", " + fmt(part.y_crit) + ")");

  const WellFormedReport wf = check_well_formed(part, 41, 0);
  c.require(wf.ok, "partition structure audit failed");

  MenuOptimalityOptions opt;
  const MenuOptimalityReport rep = check_partition(mu, part, opt);
  bool found_w = false;
  for (const auto& r : rep.regions) {
    c.note("region " + r.label + (r.skipped ? " skipped"
                                  : r.dominated ? " transformable"
                                                : " NOT transformable"));
    if (r.label != "W") continue;
    found_w = true;
    c.require(!r.skipped, "W region carries no mass");
    c.require(r.dominated, "W region not transformable");
    c.require(std::abs(r.pos.total() - r.neg.total()) <=
                  1e-7 * (1.0 + r.pos.total()),
              "W parts not balanced after rescale");
    const FirstOrderResult fo = first_order_dominates(r.pos, r.neg);
    c.require(fo.dominates,
              "W positive part fails to first-order dominate the negative "
              "part (deficit " +
                  fmt(fo.deficit) + ")");
  }
  c.require(found_w, "no W region in the partition report");
  return c;
}

// --------------------------------------------- criterion 4: power-law pair

Criterion powerlaw_bundling() {
  Criterion c{4, "power-law pair: light tails, balanced bundle price, "
                 "grand-bundling certificate"};
  const double k1 = 6.0, T1 = 15.0, k2 = 7.0, T2 = 9.5;
  c.require(std::pow(1.0 + T1, 1.0 - k1) < 1e-6,
            "first marginal's discarded tail too heavy");
  c.require(std::pow(1.0 + T2, 1.0 - k2) < 1e-6,
            "second marginal's discarded tail too heavy");
  const ProductDensity density(
      {MarginalDensity::power_law(k1, T1), MarginalDensity::power_law(k2, T2)});
  const TransformedMeasure mu(density);

  const double price = bundle_price_by_mass(mu, 0.05, 2.0, 1e-9);
  c.require(std::abs(price - 0.35725) <= 1e-3, "bundle price " + fmt(price));
  c.note("balanced bundle price " + fmt(price));

  MenuOptimalityOptions opt;
  opt.target_h = 0.25;
  opt.max_total_nodes = 2600;
  const MenuOptimalityReport rep = check_grand_bundling(mu, price, opt);
  for (const auto& r : rep.regions)
    c.note("region " + r.label + (r.skipped ? " skipped"
                                  : r.dominated ? " transformable"
                                                : " NOT transformable"));
  c.require(rep.ok, "grand-bundling check failed");
  return c;
}

// ------------------------------------------ criterion 5: exponential rates

Criterion exponential_menus() {
  Criterion c{5, "exponential rates (1,1) and (2,1): closed-form strip item, "
                 "balanced exclusion mass"};
  struct RateCase {
    double l1, l2, T1, T2;
  };
  for (const RateCase& cs :
       {RateCase{1.0, 1.0, 21.0, 21.0}, RateCase{2.0, 1.0, 10.5, 21.0}}) {
    const std::string tag =
        "(" + fmt(cs.l1) + "," + fmt(cs.l2) + "): ";
    const ProductDensity density({MarginalDensity::exponential(cs.l1, cs.T1),
                                  MarginalDensity::exponential(cs.l2, cs.T2)});
    const TransformedMeasure mu(density);
    const Partition2D part = exponential_partition(mu, cs.l1, cs.l2);
    const Menu menu = exponential_menu(part, cs.l1, cs.l2);

    c.require(menu.items.size() == 2, tag + "menu should hold two items");
    const MenuItem& strip = menu.items[0];
    c.require(strip.alloc[0] == 1.0 && strip.alloc[1] == cs.l2 / cs.l1 &&
                  strip.price == 2.0 / cs.l1,
              tag + "strip item differs from ((1, l2/l1), 2/l1)");

    const Region excl = Region::all(2)
                            .add_halfspace({1.0, 1.0}, part.price)
                            .add_halfspace({cs.l1, cs.l2}, 2.0);
    const double m = mu.mass(excl, 1e-9);
    c.require(std::abs(m) <= 1e-6, tag + "exclusion-set mass " + fmt(m));
    c.note(tag + "price " + fmt(part.price) + ", exclusion mass " + fmt(m));

    if (cs.l1 == cs.l2) {
      c.require(std::abs(part.price - 1.6180339887498949) <= 1e-6,
                tag + "bundle price " + fmt(part.price));
      c.require(!part.has_B, tag + "strip region should be empty");
      Menu bundle_only;
      bundle_only.items.push_back(menu.items[1]);
      const double drift = std::abs(menu_revenue(menu, density, 1e-9) -
                                    menu_revenue(bundle_only, density, 1e-9));
      c.require(drift <= 1e-9,
                tag + "dead strip item shifts revenue by " + fmt(drift));
      const Menu ess = essential_form(menu, density);
      c.require(ess.items.size() == 1,
                tag + "essential menu should keep only the bundle");
    } else {
      c.require(std::abs(part.price - 1.231960953094982) <= 1e-6,
                tag + "bundle price " + fmt(part.price));
      c.require(part.has_B && !part.has_A, tag + "expected only the B strip");
      c.require(std::abs(part.y_crit - 0.463921906189964) <= 1e-6,
                tag + "critical ordinate " + fmt(part.y_crit));
      const Menu ess = essential_form(partition_menu(part, 24), density);
      c.require(ess.items.size() == 2,
                tag + "essential tangent menu should hold two items");
      bool found = false;
      for (const auto& it : ess.items) {
        if (std::abs(it.alloc[1] - 1.0) <= 1e-9) continue;  // the bundle
        found = true;
        c.require(std::abs(it.alloc[0] - 1.0) <= 1e-12 &&
                      std::abs(it.alloc[1] - cs.l2 / cs.l1) <= 1e-12 &&
                      std::abs(it.price - 2.0 / cs.l1) <= 1e-12,
                  tag + "numeric tangents disagree with the closed form");
      }
      c.require(found, tag + "no strip item among the essential tangents");
    }
  }
  return c;
}

// -------------------------------------------- criterion 6: weighted cubes

Criterion cube_family() {
  Criterion c{6, "weighted cubes: bundling certificate, no-bundling bound, "
                 "simplex mass"};
  const HypercubeMeasure cube21(2, 1.0);
  const double p2 = bundle_price_by_mass(cube21, 0.05, 1.95, 1e-9);
  const double want2 = (std::sqrt(10.0) - 2.0) / 3.0;
  c.require(std::abs(p2 - want2) <= 1e-8,
            "(2,1) balanced price " + fmt(p2) + " vs " + fmt(want2));
  MenuOptimalityOptions opt2;
  opt2.target_h = 0.06;
  c.require(check_grand_bundling(cube21, p2, opt2).ok,
            "(2,1) grand-bundling check failed");

  const HypercubeMeasure cube30(3, 0.0);
  const double p3 = bundle_price_by_mass(cube30, 0.05, 2.95, 1e-9);
  MenuOptimalityOptions opt3;
  opt3.target_h = 0.1;
  const MenuOptimalityReport rep3 = check_grand_bundling(cube30, p3, opt3);
  c.require(!rep3.ok, "(3,0) grand-bundling check unexpectedly passed");
  c.note("(3,0) balanced price " + fmt(p3) + " correctly rejected");

  struct BoundCase {
    int n;
    double cc, want;
    bool certifies;
  };
  const BoundCase cases[] = {{2, 0.0, 3.0 / 2.0, false},
                             {2, 1.0, 7.0 / 2.0, false},
                             {3, 0.0, 2.0 / 3.0, true},
                             {3, 1.0, 13.0 / 6.0, false},
                             {4, 0.0, 5.0 / 24.0, true},
                             {4, 1.0, 7.0 / 8.0, true}};
  for (const BoundCase& bc : cases) {
    const NotBundlingBound nb = notbundling_bound(bc.n, bc.cc, 1e-7);
    const std::string tag =
        "(" + std::to_string(bc.n) + "," + fmt(bc.cc) + ") ";
    c.require(std::abs(nb.value - bc.want) <= 1e-6,
              tag + "simplex mass " + fmt(nb.value) + " vs " + fmt(bc.want));
    c.require(nb.certifies == bc.certifies, tag + "certification flag wrong");
  }
  return c;
}

// ------------------------------------------ criterion 7: facet volume maps

double det_small(const std::vector<Vec>& j) {
  const int n = static_cast<int>(j.size());
  if (n == 1) return j[0][0];
  if (n == 2) return j[0][0] * j[1][1] - j[0][1] * j[1][0];
  return j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) -
         j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
         j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
}

Criterion phi_maps() {
  Criterion c{7, "facet transfer maps: componentwise domination, Jacobian "
                 "scale, surface ratio"};
  std::mt19937_64 rng(20260823);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int n : {2, 3, 4}) {
    for (double rho : {1.5, 2.0, 11.0}) {
      const std::string tag =
          "n=" + std::to_string(n) + " rho=" + fmt(rho) + ": ";
      const double zs = hypercube_zstar(n, rho);
      c.require(
          std::abs(rho * std::pow(1.0 - zs, n - 1) - (rho - 1.0)) <= 1e-12,
          tag + "threshold identity violated");

      double worst_dom = 0.0;
      for (int trial = 0; trial < 10000; ++trial) {
        Vec x(n);
        x[0] = 1.0;
        x[n - 1] = uni(rng) * zs;
        for (int i = 1; i <= n - 2; ++i)
          x[i] = x[n - 1] + uni(rng) * (1.0 - x[n - 1]);
        std::sort(x.begin() + 1, x.end() - 1, std::greater<double>());
        const Vec y = hypercube_phi(n, rho, x);
        for (int i = 0; i < n; ++i) {
          worst_dom = std::max(worst_dom, y[i] - x[i]);
          worst_dom = std::max(worst_dom, -y[i]);
        }
      }
      c.require(worst_dom <= 1e-12,
                tag + "domination violated by " + fmt(worst_dom));

      // Central-difference Jacobian of the (n-1)-parameter map
      // (x_1,...,x_{n-1}) -> (y_0,...,y_{n-2}); its determinant must have
      // magnitude rho everywhere on the facet.
      double worst_det = 0.0;
      const double h = 1e-6;
      for (int trial = 0; trial < 64; ++trial) {
        Vec params(n - 1);
        params[n - 2] = (0.05 + 0.55 * uni(rng)) * zs;
        for (int i = 0; i + 1 < n - 1; ++i)
          params[i] = params[n - 2] + 0.01 +
                      uni(rng) * (0.95 - params[n - 2] - 0.01);
        auto pmap = [&](const Vec& p) {
          Vec x(n);
          x[0] = 1.0;
          for (int i = 1; i < n; ++i) x[i] = p[i - 1];
          const Vec y = hypercube_phi(n, rho, x);
          return Vec(y.begin(), y.end() - 1);
        };
        std::vector<Vec> jac(n - 1, Vec(n - 1));
        for (int col = 0; col < n - 1; ++col) {
          Vec pp = params, pm = params;
          pp[col] += h;
          pm[col] -= h;
          const Vec yp = pmap(pp), ym = pmap(pm);
          for (int row = 0; row < n - 1; ++row)
            jac[row][col] = (yp[row] - ym[row]) / (2.0 * h);
        }
        worst_det =
            std::max(worst_det, std::abs(std::abs(det_small(jac)) - rho));
      }
      c.require(worst_det <= 1e-6,
                tag + "Jacobian magnitude off by " + fmt(worst_det));

      // Seeded Monte Carlo: the ordered facet portion below the threshold is
      // 1/rho of the whole ordered facet.
      const int M = 2000000;
      long ordered = 0, in_a = 0;
      for (int t = 0; t < M; ++t) {
        bool ord = true;
        double prev = 2.0, last = 0.0;
        for (int i = 0; i < n - 1; ++i) {
          const double v = uni(rng);
          if (v > prev) ord = false;
          prev = v;
          last = v;
        }
        if (ord) {
          ++ordered;
          if (last <= zs) ++in_a;
        }
      }
      const double ratio =
          static_cast<double>(ordered) / static_cast<double>(in_a);
      c.require(std::abs(ratio - rho) <= 0.02 * rho,
                tag + "surface ratio " + fmt(ratio));
    }
  }
  return c;
}

// --------------------------------- criterion 8: first-order decider oracle

Criterion order_deciders() {
  Criterion c{8, "first-order decider agrees with the exhaustive up-set "
                 "oracle on small grids"};
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  int positives = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int nx = 2 + static_cast<int>(rng() % 4);
    const int ny = 2 + static_cast<int>(rng() % 4);
    const GridSpec grid =
        GridSpec::regular(Box({0.0, 0.0}, {1.0, 1.0}), {nx, ny});
    GridMeasure a{grid, Vec(grid.size(), 0.0)};
    GridMeasure b{grid, Vec(grid.size(), 0.0)};
    for (int i = 0; i < grid.size(); ++i)
      if (uni(rng) < 0.7) b.mass[i] = uni(rng);
    double tb = b.total();
    if (tb <= 0.0) {
      b.mass[0] = tb = 1.0;
    }
    for (double& v : b.mass) v /= tb;

    if (trial % 2 == 0) {
      // Lift b upward at random: the result dominates b by construction.
      a.mass = b.mass;
      for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < grid.size(); ++i) {
          if (a.mass[i] <= 0.0) continue;
          const auto idx = grid.multi(i);
          std::vector<int> up = idx;
          up[0] = idx[0] + static_cast<int>(rng() % (nx - idx[0]));
          up[1] = idx[1] + static_cast<int>(rng() % (ny - idx[1]));
          const int to = grid.flat(up);
          if (to == i) continue;
          const double amt = a.mass[i] * uni(rng);
          a.mass[i] -= amt;
          a.mass[to] += amt;
        }
      }
    } else {
      for (int i = 0; i < grid.size(); ++i)
        if (uni(rng) < 0.7) a.mass[i] = uni(rng);
      double ta = a.total();
      if (ta <= 0.0) {
        a.mass[grid.size() - 1] = ta = 1.0;
      }
      for (double& v : a.mass) v /= ta;
    }

    const FirstOrderResult fo = first_order_dominates(a, b);
    const double gap = min_upset_gap(a, b);
    const bool oracle = gap >= -1e-8;
    c.require(fo.dominates == oracle,
              "trial " + std::to_string(trial) + ": decider " +
                  (fo.dominates ? "yes" : "no") + " but oracle gap " +
                  fmt(gap));
    if (fo.dominates) {
      ++positives;
      const ConvexOrderResult cv =
          convex_dominates(a, b, std::vector<int>(2, +1), 2);
      c.require(cv.dominates,
                "trial " + std::to_string(trial) +
                    ": first order holds but upward transformability fails");
    }
  }
  c.note(std::to_string(positives) + "/200 trials dominate");
  c.require(positives >= 50, "too few dominating instances sampled");
  return c;
}

// ----------------------------------------- criterion 9: duality guarantees

Criterion duality_audit() {
  Criterion c{9, "every solve: certificate within gap window, random "
                 "admissible duals never beat the optimum"};

  // Extra small instances for breadth beyond the solves recorded so far.
  {
    const ProductDensity d({MarginalDensity::beta(1.0, 2.0),
                            MarginalDensity::beta(1.0, 2.0)});
    const TransformedMeasure mu(d);
    solve_and_record("beta-13x13",
                     discretize_measure(mu, GridSpec::regular(mu.box(), 13)));
  }
  {
    const HypercubeMeasure mu(2, 1.0);
    solve_and_record("cube-2-1-11x11",
                     discretize_measure(mu, GridSpec::regular(mu.box(), 11)));
  }
  {
    const HypercubeMeasure mu(3, 0.0);
    solve_and_record("cube-3-0-7x7x7",
                     discretize_measure(mu, GridSpec::regular(mu.box(), 7)));
  }
  {
    const ProductDensity d({MarginalDensity::exponential(1.0, 21.0),
                            MarginalDensity::exponential(1.0, 21.0)});
    const TransformedMeasure mu(d);
    solve_and_record("expo-1-1-9x9",
                     discretize_measure(mu, GridSpec::regular(mu.box(), 9)));
  }
  {
    const ProductDensity d({MarginalDensity::power_law(6.0, 15.0),
                            MarginalDensity::power_law(7.0, 9.5)});
    const TransformedMeasure mu(d);
    solve_and_record(
        "powerlaw-9x7",
        discretize_measure(mu, GridSpec::regular(mu.box(), {9, 7})));
  }

  c.require(solved_cases().size() >= 6, "too few solved instances recorded");
  std::mt19937_64 rng(4242);
  for (const auto& sc : solved_cases()) {
    c.require(sc.sol.status == LPStatus::kOptimal, sc.name + ": not optimal");
    c.require(sc.sol.cert.ok, sc.name + ": certificate rejected");
    const double gap = sc.sol.objective - sc.sol.cert.value;
    c.require(gap >= -1e-9 &&
                  gap <= 1e-6 * (1.0 + std::abs(sc.sol.objective)),
              sc.name + ": duality gap " + fmt(gap));
    double worst = -kInf;
    for (int k = 0; k < 40; ++k) {
      const GridFunction u = random_cone_element(sc.gm.grid, rng);
      worst = std::max(worst, pair_with(sc.gm, u) - sc.sol.objective);
    }
    c.require(worst <= 1e-9,
              sc.name + ": random admissible dual beats the optimum by " +
                  fmt(worst));
    c.note(sc.name + ": objective " + fmt(sc.sol.objective) + ", gap " +
           fmt(gap));
  }
  return c;
}

// ------------------------------------------- criterion 10: one good U(0,1)

Criterion single_item() {
  Criterion c{10, "single good U(0,1) on 101 nodes: value, posted-price "
                  "utility, canonical flows"};
  const ProductDensity density({MarginalDensity::uniform(0.0, 1.0)});
  const TransformedMeasure mu(density);
  const GridSpec grid = GridSpec::regular(mu.box(), 101);
  const GridMeasure gm = discretize_measure(mu, grid);
  const TransportSolution sol = solve_and_record("single-item-101", gm);
  c.require(sol.status == LPStatus::kOptimal, "solve not optimal");
  c.require(std::abs(sol.objective - 0.25) <= 0.005,
            "objective " + fmt(sol.objective));

  const double h = grid.step(0);
  double worst_u = 0.0;
  for (int i = 0; i < grid.size(); ++i) {
    const double z = grid.node(i)[0];
    worst_u = std::max(
        worst_u, std::abs(sol.cert.u[i] - std::max(z - 0.5, 0.0)));
  }
  c.require(worst_u <= h + 1e-12,
            "utility deviates from the posted-price form by " + fmt(worst_u));
  c.note("objective " + fmt(sol.objective) + ", utility deviation " +
         fmt(worst_u));

  const TransportLP tlp = build_transport_lp(gm, 2);
  double spread_mass = 0.0;
  bool flows_ok = true;
  for (std::size_t j = 0; j < tlp.ops.size(); ++j) {
    if (sol.op_values[j] <= 1e-8) continue;
    const double z = grid.node(tlp.ops[j].node)[0];
    if (tlp.ops[j].kind == GridOp::kSpread) spread_mass += sol.op_values[j];
    if (tlp.ops[j].kind == GridOp::kTransport && z < 0.5 - 1e-9)
      flows_ok = false;
    if (tlp.ops[j].kind == GridOp::kUpMove && z > 0.5 + 1e-9) flows_ok = false;
  }
  c.require(flows_ok, "flow crosses the posted price");
  c.require(spread_mass <= 1e-8,
            "active spread mass " + fmt(spread_mass));
  return c;
}

}  // namespace

int main() {
  struct Job {
    Criterion (*fn)();
    double budget;  // wall-clock bound in seconds; 0 = unbounded
  };
  // Criterion 10 runs before 9 so the duality audit sees its solve too.
  const std::vector<Job> jobs = {
      {mv_uniform, 60.0},      {rect_uniform, 120.0}, {beta_partition, 0.0},
      {powerlaw_bundling, 0.0}, {exponential_menus, 0.0}, {cube_family, 0.0},
      {phi_maps, 0.0},         {order_deciders, 0.0}, {single_item, 0.0},
      {duality_audit, 0.0}};

  std::vector<Criterion> results;
  for (const Job& job : jobs) {
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c = job.fn();
    c.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (job.budget > 0.0 && c.seconds > job.budget)
      c.failures.push_back("runtime " + fmt(c.seconds) + " s exceeds the " +
                           fmt(job.budget) + " s budget");
    std::cout << "[done] criterion " << c.id << " in " << fmt(c.seconds)
              << " s\n";
    for (const auto& n : c.notes) std::cout << "       " << n << "\n";
    std::cout.flush();
    results.push_back(std::move(c));
  }

  std::sort(results.begin(), results.end(),
            [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
  int failed = 0;
  std::cout << "\n";
  for (const Criterion& c : results) {
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << c.id << ": "
              << c.title << " (" << fmt(c.seconds) << " s)\n";
    for (const auto& f : c.failures) std::cout << "       ! " << f << "\n";
    if (!c.ok()) ++failed;
  }
  std::cout << "acceptance: " << (results.size() - failed) << "/"
            << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
