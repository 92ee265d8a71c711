#include "mdopt/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "mdopt/core.hpp"

namespace mdopt {

namespace {

constexpr double kArtPivotTol = 1e-7;   // force-out threshold for pinned rows
constexpr double kSmallPivot = 1e-7;    // pivots below this are re-confirmed
constexpr double kFactorTol = 1e-10;    // dependence threshold at refactor
constexpr double kHarrisSlack = 1e-9;   // feasibility slack in the ratio test

class Solver {
 public:
  Solver(const LPProblem& p, const SimplexOptions& o) : P(p), opt(o) {
    m = P.nrows;
    n = static_cast<int>(P.cols.size());
    lex = !P.cost2.empty();
  }

  LPResult run() {
    LPResult res;
    if (m == 0) {
      res.status = LPStatus::kOptimal;
      res.x.assign(n, 0.0);
      return res;
    }
    init_artificial_basis();

    // Basis repair at a refactorization can re-introduce artificials at
    // nonzero values; when that happens feasibility must be re-established,
    // so the phase sequence is allowed to restart a bounded number of times.
    bool clean = false;
    for (int round = 0; round < 8 && !clean; ++round) {
      need_phase1 = false;

      // Phase 1: drive artificial mass to zero.
      phase = 1;
      banned.assign(n, 0);
      if (!loop(res)) return res;
      log_line(LogLevel::kDebug,
               "simplex: phase 1 done at iter " + std::to_string(iters));
      {
        const double infeas = objective_value(PHASE1);
        if (infeas > opt.feas_tol) {
          res.status = LPStatus::kInfeasible;
          res.farkas = compute_y(PHASE1);
          res.y = res.farkas;
          finalize_basis(res);
          return res;
        }
      }
      pivot_out_artificials();

      // Phase 2: optimize the primary objective.
      phase = 2;
      banned.assign(n, 0);
      if (!loop(res)) return res;
      log_line(LogLevel::kDebug,
               "simplex: phase 2 done at iter " + std::to_string(iters));
      if (need_phase1) continue;

      // Phase 3: optimize the secondary objective over the optimal face.
      if (lex) {
        phase = 3;
        banned.assign(n, 0);
        if (!loop(res)) return res;
        if (need_phase1) continue;
      }
      clean = true;
    }
    if (!clean) {
      res.status = LPStatus::kIterLimit;
      finalize_basis(res);
      return res;
    }

    res.status = LPStatus::kOptimal;
    refresh_if_drifting();
    res.y = compute_y(PRIMARY);
    if (lex) res.y2 = compute_y(SECONDARY);
    res.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i)
      if (basis[i] < n) res.x[basis[i]] = std::max(0.0, xB[i]);
    res.objective = 0.0;
    for (int j = 0; j < n; ++j)
      if (res.x[j] != 0.0) res.objective += P.cost[j] * res.x[j];
    finalize_basis(res);
    return res;
  }

 private:
  enum CostKind { PHASE1, PRIMARY, SECONDARY };

  const LPProblem& P;
  SimplexOptions opt;
  int m = 0, n = 0;
  bool lex = false;
  int phase = 1;
  int iters = 0;
  int since_refactor = 0;
  int stall = 0;
  bool bland = false;
  bool need_phase1 = false;

  std::vector<int> basis;      // column per row; >= n means artificial
  std::vector<int> basis_pos;  // column -> row position, -1 if nonbasic
  std::vector<double> art_sign;
  std::vector<double> Binv;  // row-major m x m
  Vec xB;
  std::vector<char> banned;  // columns confirmed numerically null this phase

  // Duals for the active phase cost, maintained across pivots by the rank-one
  // update y += cbar_enter * (new row r of Binv); rebuilt from scratch after
  // refactorizations and phase changes.
  Vec y_cur, y1_cur;
  bool y_valid = false;
  int y_phase = -1;
  double enter_cbar = 0.0, enter_cbar1 = 0.0;

  double* brow(int i) { return Binv.data() + static_cast<size_t>(i) * m; }

  double cost_of(int j, CostKind k) const {
    if (j >= n) return k == PHASE1 ? 1.0 : 0.0;
    if (k == PHASE1) return 0.0;
    return k == PRIMARY ? P.cost[j] : P.cost2[j];
  }

  void init_artificial_basis() {
    basis.resize(m);
    basis_pos.assign(n + m, -1);
    art_sign.assign(m, 1.0);
    Binv.assign(static_cast<size_t>(m) * m, 0.0);
    xB.assign(m, 0.0);
    for (int i = 0; i < m; ++i) {
      art_sign[i] = P.rhs[i] < 0.0 ? -1.0 : 1.0;
      basis[i] = n + i;
      basis_pos[n + i] = i;
      brow(i)[i] = art_sign[i];
      xB[i] = std::abs(P.rhs[i]);
    }
  }

  double objective_value(CostKind k) const {
    double z = 0.0;
    for (int i = 0; i < m; ++i) z += cost_of(basis[i], k) * xB[i];
    return z;
  }

  Vec compute_y(CostKind k) {
    Vec y(m, 0.0);
    for (int i = 0; i < m; ++i) {
      const double c = cost_of(basis[i], k);
      if (c == 0.0) continue;
      const double* r = brow(i);
      for (int t = 0; t < m; ++t) y[t] += c * r[t];
    }
    return y;
  }

  double col_dot(const Vec& y, int j) const {
    const LPColumn& c = P.cols[j];
    double s = 0.0;
    for (size_t t = 0; t < c.row.size(); ++t) s += y[c.row[t]] * c.val[t];
    return s;
  }

  Vec ftran(int j) {
    Vec d(m, 0.0);
    if (j >= n) {
      const int r0 = j - n;
      const double v = art_sign[r0];
      for (int i = 0; i < m; ++i) d[i] = brow(i)[r0] * v;
      return d;
    }
    const LPColumn& c = P.cols[j];
    for (size_t t = 0; t < c.row.size(); ++t) {
      const int r0 = c.row[t];
      const double v = c.val[t];
      for (int i = 0; i < m; ++i) d[i] += brow(i)[r0] * v;
    }
    return d;
  }

  // Entering column under the current phase, or -1 when none improves.
  int price() {
    const CostKind k = phase == 1 ? PHASE1 : (phase == 2 ? PRIMARY : SECONDARY);
    if (!y_valid || y_phase != phase) {
      y_cur = compute_y(k);
      if (phase == 3) y1_cur = compute_y(PRIMARY);
      y_valid = true;
      y_phase = phase;
    }
    const Vec& y = y_cur;
    int best = -1;
    double best_val = -opt.cost_tol;
    for (int j = 0; j < n; ++j) {
      if (basis_pos[j] >= 0 || banned[j]) continue;
      if (phase == 3) {
        const double cbar1 = P.cost[j] - col_dot(y1_cur, j);
        if (std::abs(cbar1) > 16.0 * opt.cost_tol * (1.0 + std::abs(P.cost[j])))
          continue;
      }
      const double cj = cost_of(j, k);
      const double cbar = cj - col_dot(y, j);
      const double thresh = -opt.cost_tol * (1.0 + std::abs(cj));
      if (cbar >= thresh) continue;
      if (bland) {
        best = j;
        best_val = cbar;
        break;
      }
      if (cbar < best_val) {
        best_val = cbar;
        best = j;
      }
    }
    if (best >= 0) {
      enter_cbar = best_val;
      enter_cbar1 =
          phase == 3 ? P.cost[best] - col_dot(y1_cur, best) : 0.0;
    }
    return best;
  }

  // Leaving row for entering direction d; returns -1 when no row blocks the
  // step.  Rows holding an artificial in phase >= 2 are pinned at zero and
  // must leave as soon as the direction touches them.  The normal path is a
  // two-pass ratio test: a relaxed first pass fixes the step allowance, the
  // second picks the largest pivot among rows within it.
  int ratio_test(const Vec& d, double& theta) {
    theta = std::numeric_limits<double>::infinity();
    if (bland) return ratio_test_bland(d, theta);
    double theta_max = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      if (phase >= 2 && basis[i] >= n) {
        if (std::abs(d[i]) > kArtPivotTol)
          theta_max = std::min(theta_max, kHarrisSlack / std::abs(d[i]));
      } else if (d[i] > opt.pivot_tol) {
        theta_max =
            std::min(theta_max, (std::max(xB[i], 0.0) + kHarrisSlack) / d[i]);
      }
    }
    if (!(theta_max < std::numeric_limits<double>::infinity())) return -1;
    int leave = -1;
    double best_piv = 0.0;
    double leave_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      double ti, piv;
      if (phase >= 2 && basis[i] >= n) {
        piv = std::abs(d[i]);
        if (piv <= kArtPivotTol) continue;
        ti = 0.0;
      } else {
        if (d[i] <= opt.pivot_tol) continue;
        piv = d[i];
        ti = std::max(xB[i], 0.0) / d[i];
      }
      if (ti > theta_max) continue;
      if (piv > best_piv) {
        best_piv = piv;
        leave = i;
        leave_ratio = ti;
      }
    }
    if (leave >= 0) theta = leave_ratio;
    return leave;
  }

  // Exact smallest-ratio rule with lowest-column tie-breaking (anti-cycling).
  int ratio_test_bland(const Vec& d, double& theta) {
    int leave = -1;
    for (int i = 0; i < m; ++i) {
      double ti;
      if (phase >= 2 && basis[i] >= n) {
        if (std::abs(d[i]) <= kArtPivotTol) continue;
        ti = 0.0;
      } else {
        if (d[i] <= opt.pivot_tol) continue;
        ti = std::max(xB[i], 0.0) / d[i];
      }
      if (ti < theta - 1e-12) {
        theta = ti;
        leave = i;
      } else if (ti <= theta + 1e-12 && leave >= 0 &&
                 basis[i] < basis[leave]) {
        leave = i;
      }
    }
    return leave;
  }

  void pivot(int j_enter, int r, const Vec& d) {
    const double inv_piv = 1.0 / d[r];
    double* Br = brow(r);
    for (int t = 0; t < m; ++t) Br[t] *= inv_piv;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      const double f = d[i];
      if (std::abs(f) < 1e-14) continue;
      double* Bi = brow(i);
      for (int t = 0; t < m; ++t) Bi[t] -= f * Br[t];
    }
    const double theta = xB[r] * inv_piv;
    for (int i = 0; i < m; ++i) xB[i] -= theta * d[i];
    xB[r] = theta;
    basis_pos[basis[r]] = -1;
    basis[r] = j_enter;
    basis_pos[j_enter] = r;
  }

  // One simplex phase; returns false if the result is already decided.
  // Returns true either at phase optimality or when feasibility must be
  // re-established after a basis repair (need_phase1 set).
  bool loop(LPResult& res) {
    bool fresh_confirm = false;
    const int phase_start = iters;
    while (true) {
      if (iters >= opt.max_iterations) {
        res.status = LPStatus::kIterLimit;
        res.iterations = iters;
        finalize_basis(res);
        return false;
      }
      if (phase == 3 && opt.max_phase3_iterations >= 0 &&
          iters - phase_start >= opt.max_phase3_iterations) {
        res.iterations = iters;
        return true;
      }
      const int j = price();
      if (j < 0) {
        if (bland) {
          bland = false;
          stall = 0;
          continue;  // re-price with Dantzig to confirm optimality
        }
        if (since_refactor > 0 && !fresh_confirm) {
          // The incrementally maintained duals may have drifted: confirm
          // phase optimality against freshly recomputed ones.
          y_valid = false;
          fresh_confirm = true;
          continue;
        }
        res.iterations = iters;
        return true;
      }
      fresh_confirm = false;
      Vec d = ftran(j);
      double theta = 0.0;
      int r = ratio_test(d, theta);
      // A small pivot on a drifted inverse may misrepresent the column:
      // confirm against a fresh factorization before acting on it.
      if (since_refactor > 0 && (r < 0 || std::abs(d[r]) < kSmallPivot)) {
        refactor();
        if (need_phase1 && phase >= 2) {
          res.iterations = iters;
          return true;
        }
        d = ftran(j);
        r = ratio_test(d, theta);
      }
      if (r < 0) {
        double dmax = 0.0;
        for (int i = 0; i < m; ++i) dmax = std::max(dmax, std::abs(d[i]));
        if (dmax <= kSmallPivot) {
          banned[j] = 1;  // numerically null direction: reduced cost is noise
          continue;
        }
        res.status = LPStatus::kUnbounded;
        res.iterations = iters;
        finalize_basis(res);
        return false;
      }
      if (!std::isfinite(d[r]) || std::abs(d[r]) <= opt.pivot_tol) {
        banned[j] = 1;
        continue;
      }
      const double step = xB[r] / d[r];
      pivot(j, r, d);
      ++iters;
      ++since_refactor;
      if (y_valid) {
        const double* br = brow(r);
        if (enter_cbar != 0.0)
          for (int t = 0; t < m; ++t) y_cur[t] += enter_cbar * br[t];
        if (phase == 3 && enter_cbar1 != 0.0)
          for (int t = 0; t < m; ++t) y1_cur[t] += enter_cbar1 * br[t];
      }
      if (!std::isfinite(xB[r])) {
        refactor();
        if (need_phase1 && phase >= 2) {
          res.iterations = iters;
          return true;
        }
      }
      if (std::abs(step) <= 1e-12) {
        if (++stall > opt.stall_limit) bland = true;
      } else {
        stall = 0;
        bland = false;
      }
      if (since_refactor >= opt.refactor_every) {
        refresh_if_drifting();
        if (need_phase1 && phase >= 2) {
          res.iterations = iters;
          return true;
        }
      }
    }
  }

  double primal_residual() const {
    Vec r(P.rhs);
    for (int i = 0; i < m; ++i) {
      const int j = basis[i];
      const double v = xB[i];
      if (v == 0.0) continue;
      if (j >= n) {
        r[j - n] -= art_sign[j - n] * v;
        continue;
      }
      const LPColumn& c = P.cols[j];
      for (size_t t = 0; t < c.row.size(); ++t) r[c.row[t]] -= c.val[t] * v;
    }
    double rn = 0.0;
    for (double v : r) {
      if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
      rn = std::max(rn, std::abs(v));
    }
    return rn;
  }

  void refresh_if_drifting() {
    since_refactor = 0;
    double scale = 1.0;
    for (double v : P.rhs) scale = std::max(scale, std::abs(v));
    if (primal_residual() > 1e-9 * scale) refactor();
  }

  // Rebuild the basis inverse from scratch by Gauss-Jordan elimination with
  // full row choice.  If some basis columns turn out to be dependent, they
  // are replaced by artificials for the rows that could not be pivoted
  // (basis repair); feasibility is then re-established by the caller when a
  // repaired artificial carries mass.
  void refactor() {
    since_refactor = 0;
    y_valid = false;
    bool repaired = false;
    for (int attempt = 0; attempt < 2; ++attempt) {
      std::vector<double> W(static_cast<size_t>(m) * 2 * m, 0.0);
      auto wrow = [&](int i) {
        return W.data() + static_cast<size_t>(i) * 2 * m;
      };
      for (int i = 0; i < m; ++i) wrow(i)[m + i] = 1.0;
      for (int pos = 0; pos < m; ++pos) {
        const int j = basis[pos];
        if (j >= n) {
          wrow(j - n)[pos] = art_sign[j - n];
        } else {
          const LPColumn& c = P.cols[j];
          for (size_t t = 0; t < c.row.size(); ++t)
            wrow(c.row[t])[pos] += c.val[t];
        }
      }
      std::vector<char> used(m, 0);
      std::vector<int> pivrow(m, -1);
      std::vector<int> dependent;
      for (int pos = 0; pos < m; ++pos) {
        int r = -1;
        double best = 0.0;
        for (int i = 0; i < m; ++i) {
          if (used[i]) continue;
          const double v = std::abs(wrow(i)[pos]);
          if (v > best) {
            best = v;
            r = i;
          }
        }
        if (r < 0 || best < kFactorTol) {
          dependent.push_back(pos);
          continue;
        }
        used[r] = 1;
        pivrow[pos] = r;
        double* pr = wrow(r);
        const double ip = 1.0 / pr[pos];
        for (int t = 0; t < 2 * m; ++t) pr[t] *= ip;
        for (int i = 0; i < m; ++i) {
          if (i == r) continue;
          const double f = wrow(i)[pos];
          if (f == 0.0) continue;
          double* ri = wrow(i);
          for (int t = 0; t < 2 * m; ++t) ri[t] -= f * pr[t];
        }
      }
      if (dependent.empty()) {
        for (int pos = 0; pos < m; ++pos)
          std::copy(wrow(pivrow[pos]) + m, wrow(pivrow[pos]) + 2 * m,
                    brow(pos));
        for (int i = 0; i < m; ++i) {
          double s = 0.0;
          const double* r = brow(i);
          for (int t = 0; t < m; ++t) s += r[t] * P.rhs[t];
          xB[i] = s;
        }
        if (repaired) {
          // A repaired artificial must sit at a nonnegative value so that
          // phase 1 can price it back out; flip its column sign if needed.
          for (int pos = 0; pos < m; ++pos) {
            if (basis[pos] < n) continue;
            if (xB[pos] < 0.0) {
              const int row = basis[pos] - n;
              art_sign[row] = -art_sign[row];
              double* br = brow(pos);
              for (int t = 0; t < m; ++t) br[t] = -br[t];
              xB[pos] = -xB[pos];
            }
          }
          if (phase >= 2) {
            for (int pos = 0; pos < m; ++pos)
              if (basis[pos] >= n && std::abs(xB[pos]) > opt.feas_tol)
                need_phase1 = true;
          }
        }
        return;
      }
      if (attempt == 1) {
        log_line(LogLevel::kInfo, "simplex: basis repair failed to converge");
        return;
      }
      std::vector<int> free_rows;
      for (int i = 0; i < m; ++i)
        if (!used[i]) free_rows.push_back(i);
      log_line(LogLevel::kInfo, "simplex: repairing " +
                                    std::to_string(dependent.size()) +
                                    " dependent basis columns");
      for (size_t t = 0; t < dependent.size() && t < free_rows.size(); ++t) {
        const int pos = dependent[t];
        const int row = free_rows[t];
        basis_pos[basis[pos]] = -1;
        basis[pos] = n + row;
        basis_pos[n + row] = pos;
      }
      repaired = true;
    }
  }

  void pivot_out_artificials() {
    y_valid = false;
    for (int i = 0; i < m; ++i) {
      if (basis[i] < n) continue;
      int found = -1;
      double found_mag = 1e-7;
      for (int j = 0; j < n; ++j) {
        if (basis_pos[j] >= 0) continue;
        const LPColumn& c = P.cols[j];
        double di = 0.0;
        const double* r = brow(i);
        for (size_t t = 0; t < c.row.size(); ++t) di += r[c.row[t]] * c.val[t];
        if (std::abs(di) > found_mag) {
          found = j;
          found_mag = std::abs(di);
        }
      }
      if (found < 0) continue;  // redundant row: artificial stays at zero
      Vec d = ftran(found);
      pivot(found, i, d);
    }
  }

  void finalize_basis(LPResult& res) const {
    res.basis.assign(m, -1);
    for (int i = 0; i < m; ++i) res.basis[i] = basis[i] < n ? basis[i] : -1;
    res.iterations = iters;
  }
};

}  // namespace

LPResult solve_lp(const LPProblem& problem, const SimplexOptions& options) {
  assert(static_cast<int>(problem.rhs.size()) == problem.nrows);
  assert(problem.cost.size() == problem.cols.size());
  assert(problem.cost2.empty() || problem.cost2.size() == problem.cols.size());
  return Solver(problem, options).run();
}

}  // namespace mdopt
