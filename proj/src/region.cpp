#include "mdopt/region.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "mdopt/quadrature.hpp"

namespace mdopt {

namespace {

double clampd(double t, double lo, double hi) {
  return std::min(std::max(t, lo), hi);
}

// Clip interval [lo, hi] for a monotone feasibility predicate; `feas` must be
// monotone along the interval (true on one side of a single crossing).
void clip_monotone(const std::function<bool(double)>& feas, double& lo,
                   double& hi) {
  const bool flo = feas(lo);
  const bool fhi = feas(hi);
  if (flo && fhi) return;
  if (!flo && !fhi) {
    hi = lo - 1.0;
    return;
  }
  double a = lo, b = hi;
  for (int it = 0; it < 90; ++it) {
    const double m = 0.5 * (a + b);
    if (feas(m) == flo) {
      a = m;
    } else {
      b = m;
    }
  }
  if (flo) {
    hi = 0.5 * (a + b);
  } else {
    lo = 0.5 * (a + b);
  }
}

}  // namespace

Region Region::intersected(const Region& o) const {
  assert(dim_ == o.dim_);
  Region r = *this;
  r.affine_.insert(r.affine_.end(), o.affine_.begin(), o.affine_.end());
  r.curves_.insert(r.curves_.end(), o.curves_.begin(), o.curves_.end());
  return r;
}

bool Region::contains(const Vec& x, double tol) const {
  for (const auto& a : affine_) {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += a.w[i] * x[i];
    if (s > a.c + tol * (1.0 + std::abs(a.c))) return false;
  }
  for (const auto& cv : curves_) {
    const double gv = cv.g(clampd(x[cv.arg], cv.arg_lo, cv.arg_hi));
    const double slack = cv.side > 0 ? x[cv.dep] - gv : gv - x[cv.dep];
    if (slack > tol * (1.0 + std::abs(gv))) return false;
  }
  return true;
}

Interval Region::level_interval(const Box& box, int axis, const Vec& x,
                                const std::vector<char>& fixed) const {
  Interval iv{box.lo[axis], box.hi[axis]};
  for (const auto& a : affine_) {
    const double wk = a.w[axis];
    if (std::abs(wk) > 1e-14) {
      // Relax unfixed coordinates to their most permissive box value.
      double rest = 0.0;
      for (int i = 0; i < dim_; ++i) {
        if (i == axis || std::abs(a.w[i]) < 1e-14) continue;
        if (fixed[i]) {
          rest += a.w[i] * x[i];
        } else {
          rest += std::min(a.w[i] * box.lo[i], a.w[i] * box.hi[i]);
        }
      }
      const double bound = (a.c - rest) / wk;
      if (wk > 0.0) {
        iv.hi = std::min(iv.hi, bound);
      } else {
        iv.lo = std::max(iv.lo, bound);
      }
    } else {
      // Constraint cannot bound this axis; if it is fully determined by the
      // fixed coordinates and violated, the slice is empty.
      bool determined = true;
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) {
        if (std::abs(a.w[i]) < 1e-14) continue;
        if (i == axis || !fixed[i]) {
          determined = false;
          break;
        }
        s += a.w[i] * x[i];
      }
      if (determined && s > a.c + 1e-11 * (1.0 + std::abs(a.c))) {
        return Interval{};
      }
    }
  }
  for (const auto& cv : curves_) {
    if (cv.dep == axis && fixed[cv.arg]) {
      const double gv = cv.g(clampd(x[cv.arg], cv.arg_lo, cv.arg_hi));
      if (cv.side > 0) {
        iv.hi = std::min(iv.hi, gv);
      } else {
        iv.lo = std::max(iv.lo, gv);
      }
    } else if (cv.arg == axis && fixed[cv.dep]) {
      const double d = x[cv.dep];
      const auto& g = cv.g;
      const double alo = cv.arg_lo, ahi = cv.arg_hi;
      const int side = cv.side;
      auto feas = [&g, d, side, alo, ahi](double t) {
        const double gv = g(clampd(t, alo, ahi));
        return side > 0 ? d <= gv : d >= gv;
      };
      if (!iv.empty()) clip_monotone(feas, iv.lo, iv.hi);
    }
    if (iv.empty()) return Interval{};
  }
  return iv;
}

Interval Region::section(const Box& box, int axis, const Vec& x) const {
  std::vector<char> fixed(dim_, 1);
  return level_interval(box, axis, x, fixed);
}

namespace {

struct NestedIntegrator {
  const std::function<double(const Vec&)>* f;
  const Box* box;
  const Region* region;
  std::vector<int> order;
  Vec point;
  std::vector<char> fixed;
  std::vector<double> level_tol;
  int max_depth;

  double run(int level) {
    const int k = order[level];
    const Interval iv = region->level_interval(*box, k, point, fixed);
    if (iv.empty()) return 0.0;
    auto integrand = [this, level, k](double t) {
      point[k] = t;
      fixed[k] = 1;
      const double v = (level + 1 == static_cast<int>(order.size()))
                           ? (*f)(point)
                           : run(level + 1);
      fixed[k] = 0;
      return v;
    };
    return integrate_1d(integrand, iv.lo, iv.hi, level_tol[level], max_depth);
  }
};

}  // namespace

double integrate_region(const std::function<double(const Vec&)>& f,
                        const Box& box, const Region& region, double tol,
                        int max_depth) {
  const int n = region.dim();
  assert(n >= 1 && static_cast<int>(box.lo.size()) == n);

  // Innermost axis: the one bounded by the most curves (ties to the last).
  std::vector<int> depc(n, 0);
  for (const auto& cv : region.curves()) ++depc[cv.dep];
  int inner = n - 1;
  for (int i = 0; i < n; ++i) {
    if (depc[i] > depc[inner] || (depc[i] == depc[inner] && i >= inner))
      inner = i;
  }
  NestedIntegrator ni;
  ni.f = &f;
  ni.box = &box;
  ni.region = &region;
  for (int i = 0; i < n; ++i)
    if (i != inner) ni.order.push_back(i);
  ni.order.push_back(inner);
  ni.point.assign(n, 0.0);
  ni.fixed.assign(n, 0);
  ni.max_depth = max_depth;
  ni.level_tol.assign(n, tol);
  double outer_extent = 1.0;
  for (int j = 1; j < n; ++j) {
    outer_extent *= std::max(1e-12, box.hi[ni.order[j - 1]] - box.lo[ni.order[j - 1]]);
    ni.level_tol[j] = tol / outer_extent;
  }
  return ni.run(0);
}

double integrate_facet(const std::function<double(const Vec&)>& f,
                       const Box& box, const Region& region, int axis,
                       double value, double tol, int max_depth) {
  const int n = region.dim();
  assert(n >= 2);
  if (n == 2) {
    const int r = 1 - axis;
    Vec x(2, 0.0);
    x[axis] = value;
    const Interval iv = region.section(box, r, x);
    if (iv.empty()) return 0.0;
    auto integrand = [&f, &x, axis, r](double t) {
      Vec p = x;
      p[r] = t;
      return f(p);
    };
    return integrate_1d(integrand, iv.lo, iv.hi, tol, max_depth);
  }
  // Higher dimensions carry affine constraints only.
  assert(region.curves().empty());
  Region sub = Region::all(n - 1);
  for (const auto& a : region.affine()) {
    Vec w(n - 1, 0.0);
    bool nonzero = false;
    int j = 0;
    for (int i = 0; i < n; ++i) {
      if (i == axis) continue;
      w[j] = a.w[i];
      if (std::abs(w[j]) > 1e-14) nonzero = true;
      ++j;
    }
    const double c = a.c - a.w[axis] * value;
    if (!nonzero) {
      if (0.0 > c + 1e-11 * (1.0 + std::abs(a.c))) return 0.0;
      continue;
    }
    sub.add_halfspace(std::move(w), c);
  }
  Box sbox;
  for (int i = 0; i < n; ++i) {
    if (i == axis) continue;
    sbox.lo.push_back(box.lo[i]);
    sbox.hi.push_back(box.hi[i]);
  }
  auto wrapped = [&f, axis, value, n](const Vec& sub_x) {
    Vec p(n, 0.0);
    int j = 0;
    for (int i = 0; i < n; ++i) p[i] = (i == axis) ? value : sub_x[j++];
    return f(p);
  };
  return integrate_region(wrapped, sbox, sub, tol, max_depth);
}

}  // namespace mdopt
