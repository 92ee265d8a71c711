#include "mdopt/duality.hpp"

#include <algorithm>
#include <cmath>

namespace mdopt {

namespace {

int row_of(int node) { return node - 1; }  // low corner's row is dropped

void add_entry(LPColumn& col, int node, double v) {
  if (node == 0) return;
  col.add(row_of(node), v);
}

}  // namespace

TransportLP build_transport_lp(const GridMeasure& mu, int spread_radius) {
  const GridSpec& grid = mu.grid;
  const int n = grid.dim();
  const int N = grid.size();
  TransportLP tlp;
  tlp.grid = grid;
  tlp.dirs = spread_directions(n, spread_radius);
  tlp.t_index.assign(N, std::vector<int>(n, -1));
  tlp.g_index.assign(N, std::vector<int>(n, -1));
  tlp.s_index.assign(N, std::vector<int>(tlp.dirs.size(), -1));

  LPProblem& lp = tlp.lp;
  lp.nrows = N - 1;
  lp.rhs.assign(N - 1, 0.0);
  for (int v = 1; v < N; ++v) lp.rhs[row_of(v)] = mu.mass[v];

  auto push = [&lp](LPColumn col, double c1, double c2) {
    lp.cols.push_back(std::move(col));
    lp.cost.push_back(c1);
    lp.cost2.push_back(c2);
  };

  for (int v = 0; v < N; ++v) {
    for (int a = 0; a < n; ++a) {
      const double h = grid.step(a);
      const int down = grid.neighbor(v, a, -1);
      if (down >= 0) {
        LPColumn col;
        add_entry(col, v, +1.0);
        add_entry(col, down, -1.0);
        tlp.t_index[v][a] = static_cast<int>(lp.cols.size());
        GridOp op;
        op.kind = GridOp::kTransport;
        op.node = v;
        op.axis = a;
        op.to = down;
        tlp.ops.push_back(op);
        push(std::move(col), h, h);
      }
      const int up = grid.neighbor(v, a, +1);
      if (up >= 0) {
        LPColumn col;
        add_entry(col, v, +1.0);
        add_entry(col, up, -1.0);
        tlp.g_index[v][a] = static_cast<int>(lp.cols.size());
        GridOp op;
        op.kind = GridOp::kUpMove;
        op.node = v;
        op.axis = a;
        op.to = up;
        tlp.ops.push_back(op);
        push(std::move(col), 0.0, h);
      }
    }
    const auto idx = grid.multi(v);
    for (size_t di = 0; di < tlp.dirs.size(); ++di) {
      const auto& d = tlp.dirs[di];
      std::vector<int> p = idx, q = idx;
      bool inside = true;
      double span = 0.0;
      for (int a = 0; a < n; ++a) {
        p[a] += d[a];
        q[a] -= d[a];
        if (p[a] < 0 || p[a] >= grid.shape[a] || q[a] < 0 ||
            q[a] >= grid.shape[a]) {
          inside = false;
          break;
        }
        span += std::abs(d[a]) * grid.step(a);
      }
      if (!inside) continue;
      const int vp = grid.flat(p), vq = grid.flat(q);
      LPColumn col;
      add_entry(col, v, +2.0);
      add_entry(col, vp, -1.0);
      add_entry(col, vq, -1.0);
      tlp.s_index[v][di] = static_cast<int>(lp.cols.size());
      GridOp op;
      op.kind = GridOp::kSpread;
      op.node = v;
      op.dir = d;
      op.plus = vp;
      op.minus = vq;
      tlp.ops.push_back(op);
      push(std::move(col), 0.0, span);
    }
  }
  return tlp;
}

void hoist_spreads(const TransportLP& tlp, const GridMeasure& mu, Vec& x) {
  const GridSpec& grid = tlp.grid;
  const int n = grid.dim();
  const double eps = 1e-10;

  // Arc lookup: for an arc op index, its shifted twin after moving the spread
  // one step upstream must exist; bail out on that feeder otherwise.
  auto arc_between = [&](int from, int to) -> int {
    const auto fi = grid.multi(from);
    const auto ti = grid.multi(to);
    for (int a = 0; a < n; ++a) {
      if (fi[a] == ti[a]) continue;
      if (fi[a] - ti[a] == 1) {
        bool same = true;
        for (int b = 0; b < n; ++b)
          if (b != a && fi[b] != ti[b]) same = false;
        if (same) return tlp.t_index[from][a];
      }
      if (ti[a] - fi[a] == 1) {
        bool same = true;
        for (int b = 0; b < n; ++b)
          if (b != a && fi[b] != ti[b]) same = false;
        if (same) return tlp.g_index[from][a];
      }
      break;
    }
    return -1;
  };

  // Spread usage / inflow bookkeeping recomputed per wave (desk-scale grids).
  const int max_waves = 4 * grid.size();
  for (int wave = 0; wave < max_waves; ++wave) {
    bool changed = false;
    for (int c = 0; c < grid.size(); ++c) {
      double need = 0.0;
      for (size_t di = 0; di < tlp.dirs.size(); ++di) {
        const int sj = tlp.s_index[c][di];
        if (sj >= 0) need += 2.0 * x[sj];
      }
      if (need <= eps) continue;
      double local = std::max(mu.mass[c], 0.0);
      double deficit = need - local;
      if (deficit <= eps) continue;

      // Feeding arcs: ops delivering mass into c come only from the 2n
      // axis neighbors (transports from above, up-moves from below).
      std::vector<int> feeders;
      for (int a = 0; a < n; ++a) {
        const int above = grid.neighbor(c, a, +1);
        if (above >= 0 && tlp.t_index[above][a] >= 0)
          feeders.push_back(above);
        const int below = grid.neighbor(c, a, -1);
        if (below >= 0 && tlp.g_index[below][a] >= 0)
          feeders.push_back(below);
      }
      for (size_t fi = 0; fi < feeders.size() && deficit > eps; ++fi) {
        const int src = feeders[fi];
        const int a_in = arc_between(src, c);
        if (a_in < 0 || x[a_in] <= eps) continue;
        // Move spread mass from center c up to center src.
        for (size_t di = 0; di < tlp.dirs.size() && deficit > eps; ++di) {
          const int sj = tlp.s_index[c][di];
          if (sj < 0 || x[sj] <= eps) continue;
          const int sj_up = tlp.s_index[src][di];
          if (sj_up < 0) continue;
          const GridOp& sop = tlp.ops[sj];
          const GridOp& sop_up = tlp.ops[sj_up];
          const int arc_p = arc_between(sop_up.plus, sop.plus);
          const int arc_m = arc_between(sop_up.minus, sop.minus);
          if (arc_p < 0 || arc_m < 0) continue;
          const double delta =
              std::min({x[sj], 0.5 * x[a_in], 0.5 * deficit});
          if (delta <= eps) continue;
          x[sj] -= delta;
          x[a_in] -= 2.0 * delta;
          x[sj_up] += delta;
          x[arc_p] += delta;
          x[arc_m] += delta;
          deficit -= 2.0 * delta;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
}

double pair_with(const GridMeasure& mu, const GridFunction& u) {
  double s = 0.0;
  for (size_t i = 0; i < mu.mass.size(); ++i) s += mu.mass[i] * u[i];
  return s;
}

DualCertificate verify_certificate(const TransportLP& tlp,
                                   const GridMeasure& mu, const Vec& x,
                                   const GridFunction& u, double tol) {
  DualCertificate cert;
  cert.u = u;
  cert.value = pair_with(mu, u);
  cert.cone = check_cone(tlp.grid, u, 2, tol);

  // Reduced costs and complementary slackness over every op.
  double worst_red = 0.0, worst_slack = 0.0;
  for (size_t j = 0; j < tlp.ops.size(); ++j) {
    const GridOp& op = tlp.ops[j];
    double cbar = 0.0;
    if (op.kind == GridOp::kTransport) {
      cbar = tlp.grid.step(op.axis) - (u[op.node] - u[op.to]);
    } else if (op.kind == GridOp::kUpMove) {
      cbar = -(u[op.node] - u[op.to]);
    } else {
      cbar = -(2.0 * u[op.node] - u[op.plus] - u[op.minus]);
    }
    worst_red = std::min(worst_red, cbar);
    worst_slack = std::max(worst_slack, std::abs(x[j] * cbar));
  }
  cert.worst_reduced = worst_red;
  cert.worst_slack = worst_slack;

  // Primal feasibility: ops applied to the measure must cancel everything
  // except the low corner.
  Vec r(mu.mass);
  for (size_t j = 0; j < tlp.ops.size(); ++j) {
    const double v = x[j];
    if (v == 0.0) continue;
    const GridOp& op = tlp.ops[j];
    if (op.kind == GridOp::kSpread) {
      r[op.node] -= 2.0 * v;
      r[op.plus] += v;
      r[op.minus] += v;
    } else {
      r[op.node] -= v;
      r[op.to] += v;
    }
  }
  double res = 0.0;
  for (size_t v = 1; v < r.size(); ++v) res = std::max(res, std::abs(r[v]));
  cert.primal_residual = res;

  cert.ok = cert.cone.ok && cert.worst_reduced >= -tol &&
            cert.worst_slack <= tol && cert.primal_residual <= tol;
  return cert;
}

TransportSolution solve_transport(const GridMeasure& mu, int spread_radius,
                                  const SimplexOptions& options) {
  TransportSolution sol;
  const TransportLP tlp = build_transport_lp(mu, spread_radius);
  log_line(LogLevel::kInfo,
           "transport LP: " + std::to_string(tlp.lp.nrows) + " rows, " +
               std::to_string(tlp.lp.cols.size()) + " cols");
  LPResult lr = solve_lp(tlp.lp, options);
  sol.status = lr.status;
  sol.iterations = lr.iterations;
  if (lr.status != LPStatus::kOptimal) {
    log_line(LogLevel::kInfo, "transport LP did not reach optimality");
    return sol;
  }
  sol.objective = lr.objective;
  sol.op_values = lr.x;
  hoist_spreads(tlp, mu, sol.op_values);

  GridFunction u(mu.grid.size(), 0.0);
  for (int v = 1; v < mu.grid.size(); ++v) u[v] = lr.y[row_of(v)];
  sol.cert = verify_certificate(tlp, mu, sol.op_values, u);
  log_line(LogLevel::kInfo,
           "transport solved: objective " + std::to_string(sol.objective) +
               ", gap " + std::to_string(sol.objective - sol.cert.value) +
               ", iters " + std::to_string(sol.iterations));
  return sol;
}

GridFunction random_cone_element(const GridSpec& grid, std::mt19937_64& rng,
                                 int pieces) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const int n = grid.dim();
  std::vector<Vec> slopes;
  Vec offsets;
  for (int k = 0; k < pieces; ++k) {
    Vec t(n);
    for (int a = 0; a < n; ++a) t[a] = uni(rng);
    // Anchor: piece value at the low corner must be <= 0.
    double at_low = 0.0;
    for (int a = 0; a < n; ++a) at_low += t[a] * grid.box.lo[a];
    double span = 0.0;
    for (int a = 0; a < n; ++a)
      span += t[a] * (grid.box.hi[a] - grid.box.lo[a]);
    const double price = at_low + uni(rng) * span;
    slopes.push_back(t);
    offsets.push_back(price);
  }
  GridFunction u(grid.size(), 0.0);
  for (int v = 0; v < grid.size(); ++v) {
    const Vec x = grid.node(v);
    double best = 0.0;
    for (int k = 0; k < pieces; ++k) {
      double val = -offsets[k];
      for (int a = 0; a < n; ++a) val += slopes[k][a] * x[a];
      best = std::max(best, val);
    }
    u[v] = best;
  }
  return u;
}

}  // namespace mdopt
