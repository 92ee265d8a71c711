#pragma once

#include <functional>
#include <vector>

#include "mdopt/core.hpp"

namespace mdopt {

struct Interval {
  double lo = 0.0;
  double hi = -1.0;
  bool empty() const { return !(hi > lo); }
  double len() const { return empty() ? 0.0 : hi - lo; }
};

// A region of R^n cut out by affine half-spaces and (in 2-D) monotone curve
// bounds of the form  x_dep <= g(x_arg)  or  x_dep >= g(x_arg).  Every line
// parallel to a coordinate axis meets such a region in a single interval,
// which is what the iterated integrator below relies on.
class Region {
 public:
  struct Affine {
    Vec w;     // w . x <= c
    double c = 0.0;
  };
  struct Curve {
    int dep = 0;  // bounded coordinate
    int arg = 1;  // curve argument coordinate
    int side = +1;  // +1: x_dep <= g(x_arg); -1: x_dep >= g(x_arg)
    std::function<double(double)> g;
    double arg_lo = 0.0, arg_hi = 1.0;  // domain of g (argument clamped to it)
  };

  static Region all(int n) {
    Region r;
    r.dim_ = n;
    return r;
  }

  int dim() const { return dim_; }

  Region& add_halfspace(Vec w, double c) {
    affine_.push_back({std::move(w), c});
    return *this;
  }
  // x_dep <= g(x_arg)
  Region& add_upper_curve(int dep, int arg, std::function<double(double)> g,
                          double arg_lo, double arg_hi) {
    curves_.push_back({dep, arg, +1, std::move(g), arg_lo, arg_hi});
    return *this;
  }
  // x_dep >= g(x_arg)
  Region& add_lower_curve(int dep, int arg, std::function<double(double)> g,
                          double arg_lo, double arg_hi) {
    curves_.push_back({dep, arg, -1, std::move(g), arg_lo, arg_hi});
    return *this;
  }

  Region intersected(const Region& o) const;

  bool contains(const Vec& x, double tol = 1e-9) const;

  // Feasible interval for coordinate `axis` when every other coordinate is
  // held at the corresponding entry of x (entries at `axis` are ignored).
  Interval section(const Box& box, int axis, const Vec& x) const;

  // Feasible interval for coordinate `axis` when only the coordinates with
  // fixed[i] != 0 are pinned at x[i]; constraints involving unfixed
  // coordinates are relaxed against the box, so the interval over-covers the
  // true projection (inner levels clip exactly).
  Interval level_interval(const Box& box, int axis, const Vec& x,
                          const std::vector<char>& fixed) const;

  const std::vector<Affine>& affine() const { return affine_; }
  const std::vector<Curve>& curves() const { return curves_; }

 private:
  int dim_ = 0;
  std::vector<Affine> affine_;
  std::vector<Curve> curves_;
};

// Integral of f over region ∩ box by iterated adaptive panels.  The innermost
// axis is chosen as the one most constrained by curves.  tol is an absolute
// target for the whole integral.
double integrate_region(const std::function<double(const Vec&)>& f,
                        const Box& box, const Region& region, double tol,
                        int max_depth = 30);

// Integral of f over the slice {x_axis = value} of region ∩ box, with respect
// to (n-1)-dimensional Lebesgue measure on the slice.  f still receives full
// n-dimensional points.
double integrate_facet(const std::function<double(const Vec&)>& f,
                       const Box& box, const Region& region, int axis,
                       double value, double tol, int max_depth = 30);

}  // namespace mdopt
