#include "mdopt/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include "mdopt/simplex.hpp"

namespace mdopt {

namespace {

// Dinic max-flow with double capacities.
struct MaxFlow {
  struct Edge {
    int to;
    double cap;
    int rev;
  };
  std::vector<std::vector<Edge>> adj;
  std::vector<int> level, iter;

  explicit MaxFlow(int n) : adj(n), level(n), iter(n) {}

  // Returns the index of the forward edge within adj[a].
  int add(int a, int b, double cap) {
    adj[a].push_back({b, cap, static_cast<int>(adj[b].size())});
    adj[b].push_back({a, 0.0, static_cast<int>(adj[a].size()) - 1});
    return static_cast<int>(adj[a].size()) - 1;
  }

  double shipped(int a, int ei) const {
    const Edge& e = adj[a][ei];
    return adj[e.to][e.rev].cap;
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (const Edge& e : adj[v]) {
        if (e.cap > 1e-12 && level[e.to] < 0) {
          level[e.to] = level[v] + 1;
          q.push(e.to);
        }
      }
    }
    return level[t] >= 0;
  }

  double dfs(int v, int t, double f) {
    if (v == t) return f;
    for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); ++i) {
      Edge& e = adj[v][i];
      if (e.cap > 1e-12 && level[v] < level[e.to]) {
        const double d = dfs(e.to, t, std::min(f, e.cap));
        if (d > 1e-12) {
          e.cap -= d;
          adj[e.to][e.rev].cap += d;
          return d;
        }
      }
    }
    return 0.0;
  }

  double run(int s, int t) {
    double flow = 0.0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      while (true) {
        const double f = dfs(s, t, std::numeric_limits<double>::infinity());
        if (f <= 1e-12) break;
        flow += f;
      }
    }
    return flow;
  }
};

}  // namespace

FirstOrderResult first_order_dominates(const GridMeasure& a,
                                       const GridMeasure& b, double tol) {
  FirstOrderResult res;
  const GridSpec& grid = a.grid;
  const int N = grid.size();
  const int n = grid.dim();
  const int S = N, T = N + 1;
  const double big = 1e18;

  MaxFlow mf(N + 2);
  std::vector<int> src_edge(N, -1), sink_edge(N, -1);
  std::vector<std::vector<std::pair<int, int>>> arc_edges(N);  // (to, ei)
  double total_b = 0.0;
  for (int v = 0; v < N; ++v) {
    if (b.mass[v] > 0.0) {
      src_edge[v] = mf.add(S, v, b.mass[v]);
      total_b += b.mass[v];
    }
    if (a.mass[v] > 0.0) sink_edge[v] = mf.add(v, T, a.mass[v]);
    for (int ax = 0; ax < n; ++ax) {
      const int up = grid.neighbor(v, ax, +1);
      if (up >= 0) arc_edges[v].push_back({up, mf.add(v, up, big)});
    }
  }
  const double flow = mf.run(S, T);

  if (flow >= total_b - tol * (1.0 + total_b)) {
    res.dominates = true;
    // Read off flow values and decompose into source-to-sink paths; the arc
    // graph is a DAG (multi-index strictly increases), so walks terminate.
    std::vector<double> from_src(N, 0.0), to_sink(N, 0.0);
    std::vector<std::vector<std::pair<int, double>>> arc_flow(N);
    for (int v = 0; v < N; ++v) {
      if (src_edge[v] >= 0) from_src[v] = mf.shipped(S, src_edge[v]);
      if (sink_edge[v] >= 0) to_sink[v] = mf.shipped(v, sink_edge[v]);
      for (auto [to, ei] : arc_edges[v]) {
        const double f = mf.shipped(v, ei);
        if (f > 1e-12) arc_flow[v].push_back({to, f});
      }
    }
    const double eps = 1e-11;
    for (int start = 0; start < N; ++start) {
      while (from_src[start] > eps) {
        double amt = from_src[start];
        std::vector<std::pair<int, int>> hops;  // (node, arc position)
        int v = start;
        while (to_sink[v] <= eps) {
          int pick = -1;
          for (int i = 0; i < static_cast<int>(arc_flow[v].size()); ++i) {
            if (arc_flow[v][i].second > eps) {
              pick = i;
              break;
            }
          }
          if (pick < 0) break;  // numerical dead end; drop the residual
          amt = std::min(amt, arc_flow[v][pick].second);
          hops.push_back({v, pick});
          v = arc_flow[v][pick].first;
        }
        if (to_sink[v] <= eps && !hops.empty()) {
          // Dead end: discard a residual smaller than the tolerance.
          from_src[start] = 0.0;
          break;
        }
        if (to_sink[v] <= eps) {
          from_src[start] = 0.0;
          break;
        }
        amt = std::min(amt, to_sink[v]);
        from_src[start] -= amt;
        to_sink[v] -= amt;
        for (auto [node, i] : hops) arc_flow[node][i].second -= amt;
        res.coupling.moves.push_back({start, v, amt});
      }
    }
    return res;
  }

  // Failure: residual-reachable grid nodes form an up-closed set where
  // b outweighs a.
  std::vector<char> seen(N + 2, 0);
  std::queue<int> q;
  q.push(S);
  seen[S] = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (const auto& e : mf.adj[v]) {
      if (e.cap > 1e-12 && !seen[e.to]) {
        seen[e.to] = 1;
        q.push(e.to);
      }
    }
  }
  double gap = 0.0;
  for (int v = 0; v < N; ++v) {
    if (seen[v]) {
      res.failure_upset.push_back(v);
      gap += a.mass[v] - b.mass[v];
    }
  }
  res.deficit = gap;
  res.dominates = false;
  return res;
}

double min_upset_gap(const GridMeasure& a, const GridMeasure& b) {
  const GridSpec& grid = a.grid;
  if (grid.dim() != 2) return 0.0;
  const int nx = grid.shape[0], ny = grid.shape[1];
  // Up-closed sets of a 2-D grid are staircases: column i holds rows >= c_i
  // with c nonincreasing in i (c_i = ny means an empty column).
  double best = 0.0;
  std::vector<int> c(nx, 0);
  auto gap_of = [&]() {
    double g = 0.0;
    for (int i = 0; i < nx; ++i) {
      for (int j = c[i]; j < ny; ++j) {
        std::vector<int> idx = {i, j};
        const int v = grid.flat(idx);
        g += a.mass[v] - b.mass[v];
      }
    }
    return g;
  };
  std::function<void(int, int)> rec = [&](int i, int prev) {
    if (i == nx) {
      best = std::min(best, gap_of());
      return;
    }
    for (int t = 0; t <= prev; ++t) {
      c[i] = t;
      rec(i + 1, t);
    }
  };
  rec(0, ny);
  return best;
}

ConvexOrderResult convex_dominates(const GridMeasure& a, const GridMeasure& b,
                                   const std::vector<int>& move_dirs,
                                   int spread_radius) {
  ConvexOrderResult res;
  const GridSpec& grid = a.grid;
  const int N = grid.size();
  const int n = grid.dim();

  LPProblem lp;
  lp.nrows = N;
  lp.rhs.resize(N);
  for (int v = 0; v < N; ++v) lp.rhs[v] = a.mass[v] - b.mass[v];

  for (int v = 0; v < N; ++v) {
    for (int ax = 0; ax < n; ++ax) {
      if (move_dirs[ax] == 0) continue;
      const int w = grid.neighbor(v, ax, move_dirs[ax]);
      if (w < 0) continue;
      LPColumn col;
      col.add(v, -1.0);
      col.add(w, +1.0);
      lp.cols.push_back(std::move(col));
      lp.cost.push_back(0.0);
      GridOp op;
      op.kind = GridOp::kUpMove;
      op.node = v;
      op.axis = ax;
      op.to = w;
      res.ops.push_back(op);
    }
  }
  const auto dirs = spread_directions(n, spread_radius);
  for (int v = 0; v < N; ++v) {
    const auto idx = grid.multi(v);
    for (const auto& d : dirs) {
      std::vector<int> p = idx, q = idx;
      bool inside = true;
      for (int ax = 0; ax < n; ++ax) {
        p[ax] += d[ax];
        q[ax] -= d[ax];
        if (p[ax] < 0 || p[ax] >= grid.shape[ax] || q[ax] < 0 ||
            q[ax] >= grid.shape[ax]) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      LPColumn col;
      col.add(v, -2.0);
      col.add(grid.flat(p), +1.0);
      col.add(grid.flat(q), +1.0);
      lp.cols.push_back(std::move(col));
      lp.cost.push_back(0.0);
      GridOp op;
      op.kind = GridOp::kSpread;
      op.node = v;
      op.dir = d;
      op.plus = grid.flat(p);
      op.minus = grid.flat(q);
      res.ops.push_back(op);
    }
  }

  const LPResult lr = solve_lp(lp);
  if (lr.status == LPStatus::kOptimal) {
    res.dominates = true;
    res.op_values = lr.x;
    return res;
  }
  res.dominates = false;
  if (lr.status == LPStatus::kInfeasible &&
      static_cast<int>(lr.farkas.size()) == N) {
    res.witness.assign(N, 0.0);
    for (int v = 0; v < N; ++v) res.witness[v] = -lr.farkas[v];
    double sep = 0.0;
    for (int v = 0; v < N; ++v) sep += res.witness[v] * lp.rhs[v];
    res.separation = sep;
  }
  return res;
}

ConvexOrderResult second_order_dominates(const GridMeasure& a,
                                         const GridMeasure& b) {
  std::vector<int> down(a.grid.dim(), -1);
  return convex_dominates(b, a, down);
}

}  // namespace mdopt
