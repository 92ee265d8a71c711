#include "mdopt/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <utility>

#include "mdopt/quadrature.hpp"

namespace mdopt {

// ---------------------------------------------------------------- menus

double menu_utility(const Menu& menu, const Vec& x) {
  double best = 0.0;
  for (const MenuItem& it : menu.items)
    best = std::max(best, dot(it.alloc, x) - it.price);
  return best;
}

int menu_winner(const Menu& menu, const Vec& x) {
  int win = -1;
  double best = 0.0;
  for (int k = 0; k < static_cast<int>(menu.items.size()); ++k) {
    const double u = dot(menu.items[k].alloc, x) - menu.items[k].price;
    if (u > best) {
      best = u;
      win = k;
    }
  }
  return win;
}

std::vector<Region> menu_regions(const Menu& menu, const Box& box) {
  const int n = box.dim();
  const int K = static_cast<int>(menu.items.size());
  std::vector<Region> out;

  Region none = Region::all(n);
  for (const MenuItem& it : menu.items) none.add_halfspace(it.alloc, it.price);
  out.push_back(std::move(none));

  for (int k = 0; k < K; ++k) {
    const MenuItem& mk = menu.items[k];
    Region r = Region::all(n);
    Vec w(n);
    for (int i = 0; i < n; ++i) w[i] = -mk.alloc[i];
    r.add_halfspace(std::move(w), -mk.price);  // utility of k at least zero
    for (int j = 0; j < K; ++j) {
      if (j == k) continue;
      const MenuItem& mj = menu.items[j];
      Vec d(n);
      for (int i = 0; i < n; ++i) d[i] = mj.alloc[i] - mk.alloc[i];
      r.add_halfspace(std::move(d), mj.price - mk.price);  // k beats j
    }
    out.push_back(std::move(r));
  }
  return out;
}

double menu_revenue(const Menu& menu, const ProductDensity& density,
                    double tol) {
  const auto regions = menu_regions(menu, density.box());
  const double each = tol / std::max<std::size_t>(1, menu.items.size());
  double rev = 0.0;
  for (int k = 0; k < static_cast<int>(menu.items.size()); ++k) {
    if (menu.items[k].price == 0.0) continue;
    const double prob = integrate_region(
        [&density](const Vec& x) { return density.eval_density(x); },
        density.box(), regions[k + 1], each);
    rev += menu.items[k].price * prob;
  }
  return rev;
}

Menu essential_form(const Menu& menu, const ProductDensity& density,
                    double prob_tol) {
  Menu dedup;
  for (const MenuItem& it : menu.items) {
    bool seen = false;
    for (const MenuItem& kept : dedup.items) {
      if (std::abs(kept.price - it.price) > 1e-10) continue;
      double d = 0.0;
      for (std::size_t i = 0; i < it.alloc.size(); ++i)
        d = std::max(d, std::abs(kept.alloc[i] - it.alloc[i]));
      if (d <= 1e-10) {
        seen = true;
        break;
      }
    }
    if (!seen) dedup.items.push_back(it);
  }

  const auto regions = menu_regions(dedup, density.box());
  Menu out;
  for (int k = 0; k < static_cast<int>(dedup.items.size()); ++k) {
    const double prob = integrate_region(
        [&density](const Vec& x) { return density.eval_density(x); },
        density.box(), regions[k + 1], 1e-9);
    if (prob > prob_tol) out.items.push_back(dedup.items[k]);
  }
  return out;
}

// ------------------------------------------- menu optimality certification

namespace {

std::vector<int> alloc_move_dirs(const Vec& alloc) {
  std::vector<int> dirs(alloc.size(), 0);
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    if (alloc[i] <= 1e-9)
      dirs[i] = +1;  // nothing allocated: raising this good is free
    else if (alloc[i] >= 1.0 - 1e-9)
      dirs[i] = -1;  // fully allocated: lowering it uses the full rate
  }
  return dirs;
}

// Per-winning-region transformability test: discretize the measure's parts
// restricted to the region on a sub-grid over its bounding box and ask the
// rearrangement LP whether the positive part reaches the negative part with
// the allowed moves plus spreads.
RegionCheckResult check_region(const SignedMeasure& mu, const Region& region,
                               const std::vector<int>& dirs,
                               const std::string& label, int item,
                               const MenuOptimalityOptions& opts) {
  RegionCheckResult res;
  res.label = label;
  res.item = item;
  res.dirs = dirs;

  const Box& box = mu.box();
  const int n = box.dim();

  // Bounding box of the region by lattice sampling, inflated by one sample
  // step per side.
  int m = std::max(3, opts.bbox_samples);
  while (std::pow(static_cast<double>(m), n) > 300000.0) m = (m + 1) / 2;
  Vec mn(n, kInf), mx(n, -kInf);
  long count = 0;
  std::vector<int> it(n, 0);
  Vec x(n);
  while (true) {
    for (int a = 0; a < n; ++a)
      x[a] = box.lo[a] + (box.hi[a] - box.lo[a]) * it[a] / (m - 1);
    if (region.contains(x, 1e-9)) {
      ++count;
      for (int a = 0; a < n; ++a) {
        mn[a] = std::min(mn[a], x[a]);
        mx[a] = std::max(mx[a], x[a]);
      }
    }
    int a = n - 1;
    while (a >= 0 && it[a] == m - 1) it[a--] = 0;
    if (a < 0) break;
    ++it[a];
  }
  if (count == 0) {
    res.skipped = true;
    res.dominated = true;
    return res;
  }

  Vec blo(n), bhi(n);
  for (int a = 0; a < n; ++a) {
    const double step = (box.hi[a] - box.lo[a]) / (m - 1);
    blo[a] = std::max(box.lo[a], mn[a] - step);
    bhi[a] = std::min(box.hi[a], mx[a] + step);
    if (bhi[a] - blo[a] < step) {  // sliver: keep at least one step of width
      blo[a] = std::max(box.lo[a], blo[a] - step);
      bhi[a] = std::min(box.hi[a], bhi[a] + step);
    }
  }
  const Box bbox(blo, bhi);

  std::vector<int> shape(n);
  for (int a = 0; a < n; ++a) {
    const int want =
        static_cast<int>(std::lround((bhi[a] - blo[a]) / opts.target_h)) + 1;
    shape[a] = std::min(opts.max_nodes_per_axis, std::max(2, want));
  }
  while (true) {
    long total = 1;
    for (int s : shape) total *= s;
    if (total <= opts.max_total_nodes) break;
    int arg = 0;
    for (int a = 1; a < n; ++a)
      if (shape[a] > shape[arg]) arg = a;
    if (shape[arg] <= 2) break;
    shape[arg] = std::max(2, (3 * shape[arg]) / 4);
  }
  const GridSpec grid = GridSpec::regular(bbox, shape);
  res.grid = grid;

  GridMeasure neg =
      discretize_measure_moments(mu, grid, region, -1, opts.quad_tol);
  GridMeasure pos =
      discretize_measure_moments(mu, grid, region, +1, opts.quad_tol);
  res.neg_mass = neg.total();
  res.pos_mass = pos.total();
  res.imbalance = res.pos_mass - res.neg_mass;

  if (res.pos_mass < 1e-11 && res.neg_mass < 1e-11) {
    res.skipped = true;
    res.dominated = true;
    res.neg = std::move(neg);
    res.pos = std::move(pos);
    return res;
  }

  // Quadrature noise keeps the discretized parts from balancing exactly;
  // rescale the source when the mismatch is at noise level, otherwise leave
  // it for the LP to expose.
  const double mass_scale = 1.0 + res.pos_mass + res.neg_mass;
  if (std::abs(res.imbalance) <= 10.0 * opts.feas_scale * mass_scale &&
      res.pos_mass > 0.0) {
    const double sc = res.neg_mass / res.pos_mass;
    for (double& v : pos.mass) v *= sc;
  }

  res.detail = convex_dominates(neg, pos, dirs, opts.spread_radius);
  const double feas_abs = opts.feas_scale * mass_scale;
  res.dominated =
      res.detail.dominates ||
      (!res.detail.witness.empty() && -res.detail.separation <= feas_abs);
  res.neg = std::move(neg);
  res.pos = std::move(pos);

  if (log_level() >= LogLevel::kInfo) {
    std::ostringstream os;
    os << "region " << label << ": grid";
    for (int a = 0; a < n; ++a) os << (a ? "x" : " ") << shape[a];
    os << " pos " << res.pos_mass << " neg " << res.neg_mass << " -> "
       << (res.dominated ? "transformable" : "NOT transformable");
    if (!res.detail.dominates && !res.detail.witness.empty())
      os << " (separation " << res.detail.separation << ")";
    log_line(LogLevel::kInfo, os.str());
  }
  return res;
}

}  // namespace

MenuOptimalityReport check_optimal_menu(const SignedMeasure& mu,
                                        const Menu& menu,
                                        const MenuOptimalityOptions& options) {
  MenuOptimalityReport rep;
  const auto regions = menu_regions(menu, mu.box());

  rep.regions.push_back(check_region(mu, regions[0],
                                     std::vector<int>(mu.dim(), +1), "outside",
                                     -1, options));
  for (int k = 0; k < static_cast<int>(menu.items.size()); ++k) {
    rep.regions.push_back(check_region(mu, regions[k + 1],
                                       alloc_move_dirs(menu.items[k].alloc),
                                       "item " + std::to_string(k), k,
                                       options));
  }
  rep.ok = true;
  for (const auto& r : rep.regions) rep.ok = rep.ok && r.dominated;
  return rep;
}

MenuOptimalityReport check_grand_bundling(
    const SignedMeasure& mu, double price,
    const MenuOptimalityOptions& options) {
  Menu menu;
  menu.items.push_back({Vec(mu.dim(), 1.0), price});
  return check_optimal_menu(mu, menu, options);
}

// ------------------------------------------------- regions of sum type

Region below_sum(int n, double p) {
  return Region::all(n).add_halfspace(Vec(n, 1.0), p);
}

Region above_sum(int n, double p) {
  return Region::all(n).add_halfspace(Vec(n, -1.0), -p);
}

double bundle_price_by_mass(const SignedMeasure& mu, double p_lo, double p_hi,
                            double quad_tol) {
  const int n = mu.dim();
  auto G = [&](double p) { return mu.mass(below_sum(n, p), quad_tol); };
  const int K = 48;
  double prev_p = p_lo, prev_g = G(p_lo);
  if (prev_g <= 0.0) return p_lo;
  for (int k = 1; k <= K; ++k) {
    const double p = p_lo + (p_hi - p_lo) * k / K;
    const double g = G(p);
    if (g <= 0.0) return find_root(G, prev_p, p, 1e-10);
    prev_p = p;
    prev_g = g;
  }
  return p_hi;  // never balances inside the scan window
}

// ------------------------------------------------- 2-D exclusion geometry

double exclusion_boundary(const SignedMeasure& mu, int axis, double t,
                          double quad_tol) {
  const Box& box = mu.box();
  const int other = 1 - axis;
  const double lo = box.lo[other], hi = box.hi[other];
  auto at = [&](double s) {
    Vec p(2);
    p[axis] = t;
    p[other] = s;
    return p;
  };
  const double top = mu.facet_density(other, +1, at(hi));
  auto F = [&](double y) {
    return top + integrate_1d(
                     [&](double s) { return mu.interior_density(at(s)); }, y,
                     hi, quad_tol);
  };
  // Scan downward for the first point where the upper-segment mass turns
  // negative, then refine the crossing.
  const int K = 200;
  double prev_y = hi;
  for (int k = 1; k <= K; ++k) {
    const double y = hi - (hi - lo) * k / K;
    if (F(y) < 0.0) return find_root(F, y, prev_y, 1e-12);
    prev_y = y;
  }
  return lo;
}

namespace {

Region exclusion_region(const Box& box, const std::function<double(double)>& s,
                        const std::function<double(double)>& t, double price) {
  Region z = Region::all(2);
  z.add_upper_curve(1, 0, s, box.lo[0], box.hi[0]);
  z.add_upper_curve(0, 1, t, box.lo[1], box.hi[1]);
  z.add_halfspace({1.0, 1.0}, price);
  return z;
}

// Price at which the exclusion set's measure (atom included) vanishes.
double price_by_exclusion_mass(const SignedMeasure& mu,
                               const std::function<double(double)>& s,
                               const std::function<double(double)>& t) {
  const Box& box = mu.box();
  // The critical ordinate downstream amplifies any price error, so the mass
  // evaluations feeding the root find run at a much tighter tolerance than
  // the root bracket itself.
  auto G = [&](double p) {
    return mu.mass(exclusion_region(box, s, t, p), 1e-12);
  };
  const double plo = box.lo[0] + box.lo[1];
  const double phi = box.hi[0] + box.hi[1];
  const int K = 40;
  double prev_p = plo, prev_g = G(plo);
  if (prev_g <= 0.0) return plo;
  for (int k = 1; k <= K; ++k) {
    const double p = plo + (phi - plo) * k / K;
    const double g = G(p);
    if (g <= 0.0) return find_root(G, prev_p, p, 1e-10);
    prev_p = p;
    prev_g = g;
  }
  return phi;
}

// Smallest abscissa where t + curve(t) reaches the bundle price; the box low
// end when it starts there (empty strip).
double critical_abscissa(const Box& box, int axis,
                         const std::function<double(double)>& curve,
                         double price) {
  const double lo = box.lo[axis], hi = box.hi[axis];
  const double tol = 1e-9 * (1.0 + hi - lo);
  auto h = [&](double t) { return t + curve(t) - price; };
  if (h(lo) >= -tol) return lo;
  const int K = 128;
  double prev = lo;
  for (int k = 1; k <= K; ++k) {
    const double t = lo + (hi - lo) * k / K;
    if (h(t) >= 0.0) return find_root(h, prev, t, 1e-12);
    prev = t;
  }
  return hi;
}

double curve_slope(const std::function<double(double)>& g,
                   const std::function<double(double)>& dg, double t,
                   double span) {
  if (dg) return dg(t);
  const double h = std::max(1e-7 * span, 1e-12);
  return (g(t + h) - g(t - h)) / (2.0 * h);
}

double sigma_slope(const Partition2D& p, double t) {
  return curve_slope(p.sigma, p.sigma_deriv, t, p.box.hi[0] - p.box.lo[0]);
}
double tau_slope(const Partition2D& p, double t) {
  return curve_slope(p.tau, p.tau_deriv, t, p.box.hi[1] - p.box.lo[1]);
}

// Value of the best left-strip tangent at (x, y); beyond the critical
// abscissa the strip's last tangent extends linearly.
double branch_A(const Partition2D& p, double x, double y) {
  const double xc = std::min(x, p.x_crit);
  const double base = y - p.sigma(xc);
  if (x <= p.x_crit) return base;
  return base - sigma_slope(p, p.x_crit) * (x - p.x_crit);
}

double branch_B(const Partition2D& p, double x, double y) {
  const double yc = std::min(y, p.y_crit);
  const double base = x - p.tau(yc);
  if (y <= p.y_crit) return base;
  return base - tau_slope(p, p.y_crit) * (y - p.y_crit);
}

}  // namespace

Partition2D make_partition(const Box& box, std::function<double(double)> sigma,
                           std::function<double(double)> tau, double price,
                           double x_crit, double y_crit) {
  Partition2D p;
  p.box = box;
  p.price = price;
  p.x_crit = x_crit;
  p.y_crit = y_crit;
  p.sigma = std::move(sigma);
  p.tau = std::move(tau);
  p.has_A = x_crit > box.lo[0] + 1e-9 * (box.hi[0] - box.lo[0]);
  p.has_B = y_crit > box.lo[1] + 1e-9 * (box.hi[1] - box.lo[1]);

  p.Z = exclusion_region(box, p.sigma, p.tau, price);
  p.A = Region::all(2);
  p.A.add_halfspace({1.0, 0.0}, x_crit);
  p.A.add_lower_curve(1, 0, p.sigma, box.lo[0], box.hi[0]);
  p.B = Region::all(2);
  p.B.add_halfspace({0.0, 1.0}, y_crit);
  p.B.add_lower_curve(0, 1, p.tau, box.lo[1], box.hi[1]);
  p.W = Region::all(2);
  p.W.add_halfspace({-1.0, 0.0}, -x_crit);
  p.W.add_halfspace({0.0, -1.0}, -y_crit);
  p.W.add_halfspace({-1.0, -1.0}, -price);
  return p;
}

Partition2D canonical_partition(const SignedMeasure& mu, int samples) {
  const Box& box = mu.box();

  auto sample_curve = [&](int axis) {
    const double alo = box.lo[axis], ahi = box.hi[axis];
    const int other = 1 - axis;
    const double floor_v = box.lo[other];
    const double floor_tol = 1e-10 * (1.0 + std::abs(floor_v));

    // Coarse pass: find where the boundary first reaches the box floor.
    double t_end = ahi;
    bool hit = false;
    const int coarse = 48;
    for (int k = 0; k <= coarse; ++k) {
      const double t = alo + (ahi - alo) * k / coarse;
      if (exclusion_boundary(mu, axis, t) <= floor_v + floor_tol) {
        t_end = t;
        hit = true;
        break;
      }
    }

    Vec xs, ys;
    const int M = std::max(8, samples);
    for (int k = 0; k <= M; ++k) {
      const double t = alo + (t_end - alo) * k / M;
      xs.push_back(t);
      ys.push_back(exclusion_boundary(mu, axis, t));
    }
    if (hit && t_end < ahi - 1e-12 * (1.0 + std::abs(ahi))) {
      xs.push_back(ahi);
      ys.push_back(floor_v);
    }
    return MonotoneCurve(std::move(xs), std::move(ys));
  };

  const MonotoneCurve sig = sample_curve(0);
  const MonotoneCurve tu = sample_curve(1);
  std::function<double(double)> sfn = sig;
  std::function<double(double)> tfn = tu;

  const double price = price_by_exclusion_mass(mu, sfn, tfn);
  const double xc = critical_abscissa(box, 0, sfn, price);
  const double yc = critical_abscissa(box, 1, tfn, price);

  Partition2D p = make_partition(box, sfn, tfn, price, xc, yc);
  p.sigma_deriv = [sig](double t) { return sig.deriv(t); };
  p.tau_deriv = [tu](double t) { return tu.deriv(t); };
  if (log_level() >= LogLevel::kInfo) {
    std::ostringstream os;
    os << "partition: price " << price << " x_crit " << xc << " y_crit " << yc
       << (p.has_A ? "" : " (left strip empty)")
       << (p.has_B ? "" : " (bottom strip empty)");
    log_line(LogLevel::kInfo, os.str());
  }
  return p;
}

double partition_utility(const Partition2D& p, const Vec& v) {
  const double x = v[0], y = v[1];
  double u = std::max(0.0, x + y - p.price);
  if (p.has_A) u = std::max(u, branch_A(p, x, y));
  if (p.has_B) u = std::max(u, branch_B(p, x, y));
  return u;
}

Vec partition_allocation(const Partition2D& p, const Vec& v) {
  if (p.W.contains(v, 1e-9)) return {1.0, 1.0};
  if (p.has_A && p.A.contains(v, 1e-9)) return {-sigma_slope(p, v[0]), 1.0};
  if (p.has_B && p.B.contains(v, 1e-9)) return {1.0, -tau_slope(p, v[1])};
  return {0.0, 0.0};
}

double partition_payment(const Partition2D& p, const Vec& v) {
  const Vec t = partition_allocation(p, v);
  return dot(t, v) - partition_utility(p, v);
}

Menu partition_menu(const Partition2D& p, int per_branch) {
  Menu m;
  const int k = std::max(2, per_branch);
  if (p.has_A) {
    for (int i = 0; i < k; ++i) {
      const double t = p.box.lo[0] + (p.x_crit - p.box.lo[0]) * i / (k - 1);
      const double d = sigma_slope(p, t);
      m.items.push_back({{-d, 1.0}, p.sigma(t) - t * d});
    }
  }
  if (p.has_B) {
    for (int i = 0; i < k; ++i) {
      const double t = p.box.lo[1] + (p.y_crit - p.box.lo[1]) * i / (k - 1);
      const double d = tau_slope(p, t);
      m.items.push_back({{1.0, -d}, p.tau(t) - t * d});
    }
  }
  m.items.push_back({{1.0, 1.0}, p.price});
  return m;
}

WellFormedReport check_well_formed(const Partition2D& p, int lattice,
                                   std::uint64_t seed) {
  WellFormedReport r;
  const Box& box = p.box;
  const double ext = std::max(box.hi[0] - box.lo[0], box.hi[1] - box.lo[1]);
  const double wide = 1e-7 * ext, deep = -1e-7 * ext;

  struct Entry {
    const Region* reg;
    int id;
  };
  std::vector<Entry> regs;
  regs.push_back({&p.Z, 0});
  if (p.has_A) regs.push_back({&p.A, 1});
  if (p.has_B) regs.push_back({&p.B, 2});
  regs.push_back({&p.W, 3});

  int miss = 0, multi = 0;
  for (int i = 0; i < lattice; ++i) {
    for (int j = 0; j < lattice; ++j) {
      Vec x = {box.lo[0] + (box.hi[0] - box.lo[0]) * i / (lattice - 1),
               box.lo[1] + (box.hi[1] - box.lo[1]) * j / (lattice - 1)};
      int cw = 0, cd = 0;
      for (const auto& e : regs) {
        if (e.reg->contains(x, wide)) ++cw;
        if (e.reg->contains(x, deep)) ++cd;
      }
      if (cw == 0) ++miss;
      if (cd >= 2) ++multi;
    }
  }
  r.worst_cover = miss;
  r.worst_overlap = multi;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto sample = [&]() {
    Vec x(2);
    for (int a = 0; a < 2; ++a)
      x[a] = box.lo[a] + (box.hi[a] - box.lo[a]) * u01(rng);
    return x;
  };

  auto casework = [&](const Vec& x) {
    if (p.W.contains(x, 1e-9)) return x[0] + x[1] - p.price;
    if (p.has_A && p.A.contains(x, 1e-9)) return x[1] - p.sigma(x[0]);
    if (p.has_B && p.B.contains(x, 1e-9)) return x[0] - p.tau(x[1]);
    return 0.0;
  };

  const int M = 4000;
  std::vector<Vec> pts(M);
  for (int i = 0; i < M; ++i) pts[i] = sample();

  for (const Vec& x : pts) {
    const double gap = std::abs(casework(x) - partition_utility(p, x));
    r.worst_continuity = std::max(r.worst_continuity, gap);
    const Vec t = partition_allocation(p, x);
    for (double ti : t)
      r.worst_alloc = std::max({r.worst_alloc, -ti, ti - 1.0});
  }
  r.base_utility = std::abs(partition_utility(p, box.lo));

  for (int i = 0; i < M; ++i) {
    const Vec& x = pts[i];
    const Vec& other = pts[(i * 37 + 11) % M];
    const Vec t = partition_allocation(p, other);
    const double pay = dot(t, other) - partition_utility(p, other);
    const double viol = (dot(t, x) - pay) - partition_utility(p, x);
    r.worst_ic = std::max(r.worst_ic, viol);
  }

  const double uscale =
      (box.hi[0] - box.lo[0]) + (box.hi[1] - box.lo[1]);
  r.ok = miss == 0 && multi == 0 && r.worst_continuity <= 1e-6 * uscale &&
         r.worst_alloc <= 1e-7 && r.base_utility <= 1e-9 * uscale &&
         r.worst_ic <= 1e-6 * uscale;
  return r;
}

MenuOptimalityReport check_partition(const SignedMeasure& mu,
                                     const Partition2D& p,
                                     const MenuOptimalityOptions& options) {
  MenuOptimalityReport rep;
  rep.regions.push_back(check_region(mu, p.Z, {+1, +1}, "Z", -1, options));
  if (p.has_A)
    rep.regions.push_back(check_region(mu, p.A, {0, -1}, "A", -1, options));
  if (p.has_B)
    rep.regions.push_back(check_region(mu, p.B, {-1, 0}, "B", -1, options));
  rep.regions.push_back(check_region(mu, p.W, {-1, -1}, "W", -1, options));
  rep.ok = true;
  for (const auto& r : rep.regions) rep.ok = rep.ok && r.dominated;
  return rep;
}

Partition2D exponential_partition(const SignedMeasure& mu, double l1,
                                  double l2) {
  const Box& box = mu.box();
  const double ylo = box.lo[1], yhi = box.hi[1];
  const double xlo = box.lo[0], xhi = box.hi[0];
  auto sig = [l1, l2, ylo, yhi](double x) {
    return std::min(yhi, std::max(ylo, (2.0 - l1 * x) / l2));
  };
  auto tu = [l1, l2, xlo, xhi](double y) {
    return std::min(xhi, std::max(xlo, (2.0 - l2 * y) / l1));
  };
  const double price = price_by_exclusion_mass(mu, sig, tu);
  const double xc = critical_abscissa(box, 0, sig, price);
  const double yc = critical_abscissa(box, 1, tu, price);
  Partition2D p = make_partition(box, sig, tu, price, xc, yc);
  p.sigma_deriv = [l1, l2](double) { return -l1 / l2; };
  p.tau_deriv = [l1, l2](double) { return -l2 / l1; };
  return p;
}

Menu exponential_menu(const Partition2D& p, double l1, double l2) {
  Menu m;
  m.items.push_back({{1.0, l2 / l1}, 2.0 / l1});
  m.items.push_back({{1.0, 1.0}, p.price});
  return m;
}

// ------------------------------------------------- weighted-cube family

double hypercube_zstar(int n, double rho) {
  return 1.0 - std::pow((rho - 1.0) / rho, 1.0 / (n - 1));
}

Vec hypercube_phi(int n, double rho, const Vec& x) {
  Vec y(n, 0.0);
  const double xn = x[n - 1];
  const double base = 1.0 - rho * (1.0 - std::pow(1.0 - xn, n - 1));
  y[0] = std::pow(std::max(base, 0.0), 1.0 / (n - 1));
  const double denom = 1.0 - xn;
  for (int i = 1; i <= n - 2; ++i)
    y[i] = denom > 1e-15 ? ((x[i] - xn) / denom) * y[0] : 0.0;
  y[n - 1] = 0.0;
  return y;
}

NotBundlingBound notbundling_bound(int n, double c, double quad_tol) {
  const HypercubeMeasure mu(n, c);
  NotBundlingBound r;
  r.value = mu.negative_mass(below_sum(n, 1.0), quad_tol);
  r.certifies = r.value < 1.0;
  return r;
}

}  // namespace mdopt
