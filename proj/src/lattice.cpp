#include "mdopt/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace mdopt {

int GridSpec::neighbor(int flat, int axis, int dir) const {
  auto idx = multi(flat);
  idx[axis] += dir;
  if (idx[axis] < 0 || idx[axis] >= shape[axis]) return -1;
  return this->flat(idx);
}

double GridMeasure::total() const {
  double s = 0.0;
  for (double v : mass) s += v;
  return s;
}
double GridMeasure::positive_total() const {
  double s = 0.0;
  for (double v : mass) s += std::max(v, 0.0);
  return s;
}
double GridMeasure::negative_total() const {
  double s = 0.0;
  for (double v : mass) s += std::max(-v, 0.0);
  return s;
}

namespace {
double clamp_sign(double v, int clamp) {
  if (clamp > 0) return std::max(v, 0.0);
  if (clamp < 0) return std::max(-v, 0.0);
  return v;
}
}  // namespace

GridMeasure discretize_measure(const SignedMeasure& mu, const GridSpec& grid,
                               double tol) {
  return discretize_measure(mu, grid, Region::all(grid.dim()), 0, tol);
}

GridMeasure discretize_measure(const SignedMeasure& mu, const GridSpec& grid,
                               const Region& restrict_to, int clamp,
                               double tol) {
  const int n = grid.dim();
  const Box& big = mu.box();
  GridMeasure out{grid, Vec(grid.size(), 0.0)};
  const double cell_tol = tol / grid.size();

  for (int v = 0; v < grid.size(); ++v) {
    const auto idx = grid.multi(v);
    const Vec x = grid.node(v);
    Box cell;
    cell.lo.resize(n);
    cell.hi.resize(n);
    for (int a = 0; a < n; ++a) {
      const double h = grid.step(a);
      cell.lo[a] = std::max(big.lo[a], x[a] - 0.5 * h);
      cell.hi[a] = std::min(big.hi[a], x[a] + 0.5 * h);
    }

    double m = 0.0;
    auto interior = [&mu, clamp](const Vec& p) {
      return clamp_sign(mu.interior_density(p), clamp);
    };
    m += integrate_region(interior, cell, restrict_to, cell_tol, 14);

    // A cell contributes surface mass on every measure-box facet its closure
    // reaches; the grid may cover only a sub-box, so this is a geometric test
    // rather than a grid-index test.
    for (int a = 0; a < n; ++a) {
      for (int orient = -1; orient <= 1; orient += 2) {
        const double value = orient > 0 ? big.hi[a] : big.lo[a];
        const double eps = 1e-12 * (1.0 + std::abs(value));
        const bool touches = orient > 0 ? cell.hi[a] >= value - eps
                                        : cell.lo[a] <= value + eps;
        if (!touches) continue;
        if (n == 1) {
          Vec p(1, value);
          if (restrict_to.contains(p, 1e-12))
            m += clamp_sign(mu.facet_density(a, orient, p), clamp);
          continue;
        }
        auto surf = [&mu, a, orient, clamp](const Vec& p) {
          return clamp_sign(mu.facet_density(a, orient, p), clamp);
        };
        m += integrate_facet(surf, cell, restrict_to, a, value, cell_tol, 14);
      }
    }

    for (const auto& atom : mu.atoms()) {
      // An atom is credited to the grid node nearest to it, if any lies
      // within half a step on every axis.
      bool in_cell = true;
      for (int a = 0; a < n; ++a) {
        const double h = grid.step(a);
        const int ni =
            static_cast<int>(std::lround((atom.point[a] - grid.box.lo[a]) / h));
        if (ni != idx[a] ||
            std::abs(atom.point[a] - (grid.box.lo[a] + ni * h)) >
                0.5 * h * (1.0 + 1e-9)) {
          in_cell = false;
          break;
        }
      }
      if (in_cell && restrict_to.contains(atom.point, 1e-12))
        m += clamp_sign(atom.weight, clamp);
    }
    out.mass[v] = m;
  }
  return out;
}

GridMeasure discretize_measure_moments(const SignedMeasure& mu,
                                       const GridSpec& grid,
                                       const Region& restrict_to, int clamp,
                                       double tol) {
  const int n = grid.dim();
  const Box& big = mu.box();
  GridMeasure out{grid, Vec(grid.size(), 0.0)};
  const double cell_tol = tol / grid.size();

  // Split `m` with centroid `c` over the nodes surrounding node v so that the
  // deposit reproduces both the mass and the first moments of the cell.
  const auto deposit = [&](int v, double m, const Vec& c) {
    if (m == 0.0) return;
    const auto idx = grid.multi(v);
    const Vec x = grid.node(v);
    std::vector<double> stay(n), move(n);
    std::vector<int> dirs(n, 0);
    for (int a = 0; a < n; ++a) {
      double t = (c[a] - x[a]) / grid.step(a);
      t = std::max(-1.0, std::min(1.0, t));
      int d = t >= 0.0 ? 1 : -1;
      const int nb = idx[a] + d;
      if (nb < 0 || nb >= grid.shape[a]) {
        t = 0.0;  // no neighbor on that side: keep the mass at the node
        d = 0;
      }
      dirs[a] = d;
      stay[a] = 1.0 - std::abs(t);
      move[a] = std::abs(t);
    }
    for (int mask = 0; mask < (1 << n); ++mask) {
      double wt = 1.0;
      auto jdx = idx;
      for (int a = 0; a < n; ++a) {
        if (mask & (1 << a)) {
          wt *= move[a];
          jdx[a] += dirs[a];
        } else {
          wt *= stay[a];
        }
      }
      if (wt == 0.0) continue;
      out.mass[grid.flat(jdx)] += m * wt;
    }
  };

  for (int v = 0; v < grid.size(); ++v) {
    const auto idx = grid.multi(v);
    const Vec x = grid.node(v);
    Box cell;
    cell.lo.resize(n);
    cell.hi.resize(n);
    for (int a = 0; a < n; ++a) {
      const double h = grid.step(a);
      cell.lo[a] = std::max(big.lo[a], x[a] - 0.5 * h);
      cell.hi[a] = std::min(big.hi[a], x[a] + 0.5 * h);
    }

    double m = 0.0;
    Vec mom(n, 0.0);
    const auto interior = [&mu, clamp](const Vec& p) {
      return clamp_sign(mu.interior_density(p), clamp);
    };
    m += integrate_region(interior, cell, restrict_to, cell_tol, 14);
    for (int a = 0; a < n; ++a) {
      const auto weighted = [&interior, a](const Vec& p) {
        return p[a] * interior(p);
      };
      mom[a] += integrate_region(weighted, cell, restrict_to, cell_tol, 14);
    }

    for (int fa = 0; fa < n; ++fa) {
      for (int orient = -1; orient <= 1; orient += 2) {
        const double value = orient > 0 ? big.hi[fa] : big.lo[fa];
        const double eps = 1e-12 * (1.0 + std::abs(value));
        const bool touches = orient > 0 ? cell.hi[fa] >= value - eps
                                        : cell.lo[fa] <= value + eps;
        if (!touches) continue;
        if (n == 1) {
          Vec p(1, value);
          if (restrict_to.contains(p, 1e-12)) {
            const double w = clamp_sign(mu.facet_density(fa, orient, p), clamp);
            m += w;
            mom[0] += w * value;
          }
          continue;
        }
        const auto surf = [&mu, fa, orient, clamp](const Vec& p) {
          return clamp_sign(mu.facet_density(fa, orient, p), clamp);
        };
        m += integrate_facet(surf, cell, restrict_to, fa, value, cell_tol, 14);
        for (int a = 0; a < n; ++a) {
          const auto weighted = [&surf, a](const Vec& p) {
            return p[a] * surf(p);
          };
          mom[a] +=
              integrate_facet(weighted, cell, restrict_to, fa, value, cell_tol,
                              14);
        }
      }
    }

    for (const auto& atom : mu.atoms()) {
      bool in_cell = true;
      for (int a = 0; a < n; ++a) {
        const double h = grid.step(a);
        const int ni =
            static_cast<int>(std::lround((atom.point[a] - grid.box.lo[a]) / h));
        if (ni != idx[a] ||
            std::abs(atom.point[a] - (grid.box.lo[a] + ni * h)) >
                0.5 * h * (1.0 + 1e-9)) {
          in_cell = false;
          break;
        }
      }
      if (in_cell && restrict_to.contains(atom.point, 1e-12)) {
        const double w = clamp_sign(atom.weight, clamp);
        m += w;
        for (int a = 0; a < n; ++a) mom[a] += w * atom.point[a];
      }
    }

    if (m == 0.0) continue;
    Vec c(n);
    for (int a = 0; a < n; ++a) c[a] = mom[a] / m;
    deposit(v, m, c);
  }
  return out;
}

void apply_grid_ops(const std::vector<GridOp>& ops, const Vec& x, Vec& mass) {
  for (size_t j = 0; j < ops.size(); ++j) {
    const double v = x[j];
    if (v == 0.0) continue;
    const GridOp& op = ops[j];
    if (op.kind == GridOp::kSpread) {
      mass[op.node] -= 2.0 * v;
      mass[op.plus] += v;
      mass[op.minus] += v;
    } else {
      mass[op.node] -= v;
      mass[op.to] += v;
    }
  }
}

std::vector<std::vector<int>> spread_directions(int dim, int radius) {
  std::vector<std::vector<int>> dirs;
  std::vector<int> d(dim, -radius);
  while (true) {
    bool zero = true;
    for (int v : d) {
      if (v != 0) {
        zero = false;
        break;
      }
    }
    if (!zero) {
      int first = 0;
      for (int v : d) {
        if (v != 0) {
          first = v;
          break;
        }
      }
      if (first > 0) dirs.push_back(d);
    }
    int a = dim - 1;
    while (a >= 0 && d[a] == radius) d[a--] = -radius;
    if (a < 0) break;
    ++d[a];
  }
  return dirs;
}

ConeCheck check_cone(const GridSpec& grid, const GridFunction& u,
                     int spread_radius, double tol) {
  ConeCheck c;
  std::vector<int> origin(grid.dim(), 0);
  c.base_value = std::abs(u[grid.flat(origin)]);

  for (int v = 0; v < grid.size(); ++v) {
    for (int a = 0; a < grid.dim(); ++a) {
      const int w = grid.neighbor(v, a, +1);
      if (w < 0) continue;
      const double d = u[w] - u[v];
      c.worst_monotone = std::max(c.worst_monotone, -d);
      c.worst_lipschitz = std::max(c.worst_lipschitz, d - grid.step(a));
    }
  }

  const auto dirs = spread_directions(grid.dim(), spread_radius);
  for (int v = 0; v < grid.size(); ++v) {
    const auto idx = grid.multi(v);
    for (const auto& d : dirs) {
      bool inside = true;
      std::vector<int> p = idx, q = idx;
      for (int a = 0; a < grid.dim(); ++a) {
        p[a] += d[a];
        q[a] -= d[a];
        if (p[a] < 0 || p[a] >= grid.shape[a] || q[a] < 0 ||
            q[a] >= grid.shape[a]) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      const double viol = 2.0 * u[v] - u[grid.flat(p)] - u[grid.flat(q)];
      c.worst_convex = std::max(c.worst_convex, viol);
    }
  }

  c.ok = c.base_value <= tol && c.worst_monotone <= tol &&
         c.worst_lipschitz <= tol && c.worst_convex <= tol;
  return c;
}

}  // namespace mdopt
